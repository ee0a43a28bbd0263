import functools
import random

import pytest

from wschub import Schubert, WeightedConfig
from wschub.positivity import nonweighted_engine


@functools.lru_cache(maxsize=None)
def engine(group, lam, chi=None, parabolic=None):
    """Cached Schubert engine; chi=None means symbolic."""
    return Schubert(WeightedConfig(group, lam, chi, parabolic))


@functools.lru_cache(maxsize=None)
def plain_engine(group, lam, chi):
    return nonweighted_engine(engine(group, lam, chi).cfg)


# the three small configurations used throughout the suite, each with
# several antidominant chi that keep every a_w positive
A2_FULL = ("gl(3)", (2, 1, 0))
A3_GR2 = ("cstar_gl(4)", (1, 1, 1, 0, 0))
C2_FULL = ("cstar_sp4", (1, 2, 1))
LG = ("cstar_sp4", (1, 1, 1))

# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE: list[str] = []

CONFIGS = {"A2 full flag": A2_FULL, "A3 Gr(2,4)": A3_GR2, "C2 full flag": C2_FULL}


def random_valid_chis(group, lam, k=5, seed=0, bound=9):
    """k distinct seeded random chi (antidominant, all a_w > 0)."""
    rng = random.Random(f"{group}{lam}{seed}")
    rank = len(lam)
    out = []
    while len(out) < k:
        chi = tuple(rng.randint(-bound, bound) for _ in range(rank))
        if chi in out or all(c == 0 for c in chi):
            continue
        try:
            if WeightedConfig(group, lam, chi).validate().valid:
                out.append(chi)
        except Exception:
            continue
    return out


@pytest.fixture(scope="session")
def lg_symbolic():
    return engine(*LG)


@pytest.fixture(scope="session")
def p4_symbolic():
    return engine("gl(5)", (1, 0, 0, 0, 0))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
