import random

import pytest

from morava3 import DeformationElement, PowerOpContext, PrecisionProfile


@pytest.fixture(scope="session")
def profile24():
    return PrecisionProfile(24, 16)


@pytest.fixture(scope="session")
def profile12():
    return PrecisionProfile(12, 10)


@pytest.fixture(scope="session")
def ctx24(profile24):
    return PowerOpContext(profile24)


@pytest.fixture(scope="session")
def ctx12(profile12):
    return PowerOpContext(profile12)


def rand_series(rng: random.Random, profile: PrecisionProfile, max_degree=None, real=False):
    mod = profile.modulus
    top = profile.h_deg - 1 if max_degree is None else min(max_degree, profile.h_deg - 1)
    return DeformationElement(
        profile,
        [(rng.randrange(mod), 0 if real else rng.randrange(mod)) for _ in range(top + 1)],
    )


def rand_unit_series(rng: random.Random, profile: PrecisionProfile):
    x = rand_series(rng, profile)
    while not x.coeff(0).is_unit():
        x = x + 1
    return x
