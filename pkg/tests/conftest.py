import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from simplicial_cm.instances import RandomConfig, named, random_semigroup

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def instances():
    return named()


@pytest.fixture(scope="session")
def worked(instances):
    return instances["worked"]


@st.composite
def semigroups(draw, dims=(2, 3), lift=None):
    """Random simplicial semigroups from the seeded instance generator."""
    seed = draw(st.integers(0, 2**32 - 1))
    d = draw(st.sampled_from(dims))
    lifted = draw(st.booleans()) if lift is None else lift
    return random_semigroup(random.Random(seed), RandomConfig(d=d, lift=lifted))


def apery_box(S):
    """A box certainly holding B_A: every Apery element uses generator k fewer than m_k times."""
    import math

    top = 0
    for i in range(S.rank):
        total = 0
        for lam in S.lambda_gens:
            m = math.lcm(*(x.denominator for x in lam))
            total += (m - 1) * lam[i]
        top = max(top, total)
    return math.floor(top) + 1
