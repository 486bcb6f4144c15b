import logging

import pytest

from paretohull import Instance, RawProblem, canonicalize

logging.getLogger("paretohull").setLevel(logging.ERROR)

# the 4x4 three-objective assignment instance on which naive dichotomic
# search stalls; its frontier has exactly four extreme points
EXAMPLE_C1 = ((3, 6, 4, 5), (2, 3, 5, 4), (3, 5, 4, 2), (4, 5, 3, 6))
EXAMPLE_C2 = ((2, 3, 5, 4), (5, 3, 4, 3), (5, 2, 6, 4), (4, 5, 2, 5))
EXAMPLE_C3 = ((4, 2, 4, 2), (4, 2, 4, 6), (4, 2, 6, 3), (2, 4, 5, 3))

EXAMPLE_Y1 = (11, 11, 14)
EXAMPLE_Y2 = (15, 9, 17)
EXAMPLE_Y3 = (19, 14, 10)
EXAMPLE_Y4 = (13, 16, 11)
EXAMPLE_DOMINATED = (16, 20, 16)
EXAMPLE_FRONTIER = frozenset({EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3, EXAMPLE_Y4})

EXAMPLE_FILE = (
    "MOAP 3 4\n"
    + "\n".join(" ".join(str(c) for c in row)
                for mat in (EXAMPLE_C1, EXAMPLE_C2, EXAMPLE_C3) for row in mat)
    + "\n"
)


@pytest.fixture(scope="session")
def example_raw() -> RawProblem:
    return RawProblem("ap", 3, 4, (EXAMPLE_C1, EXAMPLE_C2, EXAMPLE_C3))


@pytest.fixture(scope="session")
def example_instance(example_raw) -> Instance:
    return canonicalize(example_raw)


def canonical_set(inst: Instance, points) -> set[tuple]:
    """Map original-sense result points back to canonical vectors."""
    if inst.kind == "kp":
        return {tuple(u - c for u, c in zip(inst.kp_offsets, op.y)) for op in points}
    return {tuple(c + inst.ap_shift * inst.n for c in op.y) for op in points}
