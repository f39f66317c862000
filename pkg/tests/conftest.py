import random

import pytest

from srep.rootsys import build_root_system, generate_weyl

FAMILY_RANKS = [(f, r) for f in ("A", "B", "C", "D", "BC") for r in range(1, 6) if not (f == "D" and r < 2)]


@pytest.fixture
def rng():
    return random.Random(20240611)


def small_group(fam, r):
    return generate_weyl(build_root_system(fam, r))
