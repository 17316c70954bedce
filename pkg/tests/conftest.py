import pytest

from fdtd_stability import MediumModel


@pytest.fixture
def water():
    return MediumModel.debye(1.8, 81.0, 9.4e-12)


@pytest.fixture
def foam():
    return MediumModel.debye(1.01, 1.16, 6.497e-10)


@pytest.fixture
def optical_lorentz():
    return MediumModel.lorentz(1.0, 2.25, 4e16, 0.56e16)


@pytest.fixture
def radio_lorentz():
    import math
    return MediumModel.lorentz(1.5, 3.0, 2 * math.pi * 5e10, 1e10)


@pytest.fixture
def resonant_lorentz():
    # eps_s = eps_inf with no damping: the degenerate harmonic case
    return MediumModel.lorentz(1.0, 1.0, 4e16, 0.0)
