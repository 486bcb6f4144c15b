"""Instance file formats, deterministic generation, and result/report files.

Text formats (ASCII, LF newlines, space-separated integers):

* assignment::

    MOAP p n
    <p blocks, each n lines of n costs>

* knapsack::

    MOKP p n
    <capacity>
    <n item weights>
    <p lines of n profits>

Random instances are drawn from a splitmix64 stream so identical seeds give
byte-identical files on every platform.  Assignment costs are uniform in
[0, 20]; knapsack profits and weights are uniform in [1, 100] and the
capacity is ceil(sum(weights) / 2), raised to max(weights) when a skewed draw
would make some item untakeable.
"""

from __future__ import annotations

from .solvers import KIND_ASSIGNMENT, KIND_KNAPSACK, RawProblem

_MASK64 = (1 << 64) - 1

AP_COST_RANGE = (0, 20)
KP_VALUE_RANGE = (1, 100)


class ParseError(ValueError):
    """Malformed instance file."""


class SplitMix64:
    """splitmix64 stream; the documented generator for reproducible seeds."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform_int(self, lo: int, hi: int) -> int:
        """Unbiased integer in [lo, hi] via rejection sampling."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + (v % span)


def generate(kind: str, p: int, n: int, seed: int) -> RawProblem:
    """Deterministic random instance; identical (kind, p, n, seed) bytes match."""
    if kind not in (KIND_ASSIGNMENT, KIND_KNAPSACK):
        raise ValueError(f"unknown kind {kind!r}")
    if not 2 <= p <= 5:
        raise ValueError("objective count must be in 2..5")
    if n < 2:
        raise ValueError("size must be at least 2")
    rng = SplitMix64(seed)
    if kind == KIND_ASSIGNMENT:
        lo, hi = AP_COST_RANGE
        objectives = tuple(tuple(tuple(rng.uniform_int(lo, hi) for _ in range(n))
                                 for _ in range(n))
                           for _ in range(p))
        return RawProblem(kind, p, n, objectives)
    lo, hi = KP_VALUE_RANGE
    weights = tuple(rng.uniform_int(lo, hi) for _ in range(n))
    objectives = tuple(tuple(rng.uniform_int(lo, hi) for _ in range(n))
                       for _ in range(p))
    capacity = max(-(-sum(weights) // 2), max(weights))
    return RawProblem(kind, p, n, objectives, weights=weights, capacity=capacity)


def write_instance(raw: RawProblem) -> str:
    if raw.kind == KIND_ASSIGNMENT:
        lines = [f"MOAP {raw.p} {raw.n}"]
        for mat in raw.objectives:
            for row in mat:
                lines.append(" ".join(str(c) for c in row))
    else:
        lines = [f"MOKP {raw.p} {raw.n}", str(raw.capacity),
                 " ".join(str(w) for w in raw.weights)]
        for prof in raw.objectives:
            lines.append(" ".join(str(c) for c in prof))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> RawProblem:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty instance file")
    header = lines[0].split()
    if len(header) != 3 or header[0] not in ("MOAP", "MOKP"):
        raise ParseError(f"bad header line {lines[0]!r}")
    try:
        p, n = int(header[1]), int(header[2])
    except ValueError as exc:
        raise ParseError(f"bad header numbers in {lines[0]!r}") from exc
    body = lines[1:]
    if header[0] == "MOAP":
        if len(body) != p * n:
            raise ParseError(f"expected {p * n} matrix lines, found {len(body)}")
        rows = [_int_row(line, n) for line in body]
        objectives = tuple(tuple(rows[k * n + i] for i in range(n)) for k in range(p))
        return RawProblem(KIND_ASSIGNMENT, p, n, objectives)
    if len(body) != 2 + p:
        raise ParseError(f"expected {2 + p} data lines, found {len(body)}")
    try:
        capacity = int(body[0])
    except ValueError as exc:
        raise ParseError(f"bad capacity line {body[0]!r}") from exc
    weights = _int_row(body[1], n)
    objectives = tuple(_int_row(line, n) for line in body[2:2 + p])
    return RawProblem(KIND_KNAPSACK, p, n, objectives,
                      weights=weights, capacity=capacity)


def _int_row(line: str, n: int) -> tuple[int, ...]:
    parts = line.split()
    if len(parts) != n:
        raise ParseError(f"expected {n} integers, got {len(parts)}: {line!r}")
    try:
        return tuple(int(x) for x in parts)
    except ValueError as exc:
        raise ParseError(f"non-integer token in {line!r}") from exc


def write_points(points) -> str:
    """Result file: one outcome vector per line, lexicographically sorted."""
    vectors = sorted(tuple(op.y) if hasattr(op, "y") else tuple(op) for op in points)
    return "\n".join(" ".join(str(c) for c in v) for v in vectors) + "\n"


def write_report(stats, extra: dict | None = None) -> str:
    """Run report as key=value lines."""
    pairs = [
        ("ysn1", stats.extreme_points_found),
        ("solver_calls", stats.solver_calls),
        ("float_calls", stats.float_calls),
        ("init_calls", stats.init_solver_calls),
        ("time_s", f"{stats.wall_time:.6f}"),
    ]
    if extra:
        pairs.extend(extra.items())
    return "\n".join(f"{k}={v}" for k, v in pairs) + "\n"
