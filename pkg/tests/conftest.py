import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def sample_off_axis(rng, n, scale=2.0, min_im=0.3):
    """Complex points away from the real axis, both half-planes."""
    out = []
    while len(out) < n:
        w = complex(rng.normal(scale=scale), rng.normal(scale=scale))
        if abs(w.imag) >= min_im:
            out.append(w)
    return out


def sample_upper(rng, n, scale=2.0):
    return [
        complex(rng.normal(scale=scale), rng.uniform(0.3, 2.5)) for _ in range(n)
    ]
