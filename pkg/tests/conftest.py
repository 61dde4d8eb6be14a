import numpy as np
import pytest

from harmonic_shp import Convention, HarmonicSeries


def direct_eval(f: HarmonicSeries, z: complex) -> complex:
    """Power-by-power oracle for h(z) + conj(g(z)), independent of Horner."""
    h = sum(complex(c) * z ** v for v, c in enumerate(f.a, start=1))
    g = sum(complex(c) * z ** v for v, c in enumerate(f.b, start=1))
    return h + np.conj(g)


def random_series(rng, degree, convention=Convention.GENERAL, scale=0.5):
    """Arbitrary (not necessarily class-member) series with |b_1| < 1."""
    if convention is Convention.NEGATIVE_THP:
        a = -scale * rng.uniform(size=degree).astype(complex)
        b = -scale * rng.uniform(size=degree).astype(complex)
    else:
        a = scale * (rng.normal(size=degree) + 1j * rng.normal(size=degree)) / 2
        b = scale * (rng.normal(size=degree) + 1j * rng.normal(size=degree)) / 2
    a[0] = 1.0
    if abs(b[0]) >= 1:
        b[0] = b[0] / (2 * abs(b[0]))
    return HarmonicSeries(a, b, convention)


def random_disk_point(rng, rmax=0.95):
    return np.sqrt(rng.uniform()) * rmax * np.exp(2j * np.pi * rng.uniform())


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)
