import numpy as np
import numpy.polynomial.polynomial as npoly
import pytest

from semishift.errors import NoRootsError
from semishift.poly import Poly, poly_roots


def test_factored_quadratic():
    rs = poly_roots(Poly([-1.0, 0.0, 1.0]))
    locs = sorted(rs.locations(), key=lambda z: z.real)
    assert abs(locs[0] + 1) < 1e-10 and abs(locs[1] - 1) < 1e-10
    assert all(m == 1 for _, m in rs.roots)


def test_double_root_clustered():
    rs = poly_roots(Poly.from_roots([2.0, 2.0]))
    assert len(rs.roots) == 1
    loc, mult = rs.roots[0]
    assert mult == 2
    assert abs(loc - 2.0) < 1e-7 * 3


def test_seeded_cubic_residual_and_vieta(rng):
    for _ in range(30):
        coef = rng.normal(size=3) + 1j * rng.normal(size=3)
        p = Poly(list(coef) + [1.0])
        rs = poly_roots(p)
        norm = float(np.max(np.abs(p.c)))
        for r in rs.locations():
            assert abs(p(r)) <= 1e-10 * norm * max(1.0, abs(r)) ** 3
        got = rs.expanded()
        assert abs(sum(got) + coef[2]) < 1e-8
        prod = got[0] * got[1] * got[2]
        assert abs(prod - (-1) ** 3 * coef[0]) < 1e-8


def test_reconstruction_property(rng):
    # product over roots times leading coefficient reproduces coefficients
    for _ in range(50):
        deg = int(rng.integers(2, 9))
        roots = rng.normal(size=deg) + 1j * rng.normal(size=deg)
        lead = float(rng.normal()) + 2.0
        p = Poly.from_roots(roots, leading=lead)
        rs = poly_roots(p)
        rebuilt = lead * npoly.polyfromroots(np.asarray(rs.expanded()))
        scale = float(np.max(np.abs(p.c)))
        assert np.max(np.abs(rebuilt - p.c)) < 1e-10 * scale


def test_real_poly_conjugation_closure(rng):
    for _ in range(40):
        deg = int(rng.integers(2, 8))
        p = Poly(np.r_[rng.normal(size=deg), 1.0])
        locs = poly_roots(p).expanded()
        for r in locs:
            near = min(abs(np.conj(r) - s) for s in locs)
            assert near < 1e-7 * (1.0 + abs(r))


def test_degree_zero_raises():
    with pytest.raises(NoRootsError):
        poly_roots(Poly([3.0]))


def test_multiplicity_totals():
    rs = poly_roots(Poly.from_roots([1.0, 1.0, -3.0]))
    assert rs.total_multiplicity == 3
    assert {m for _, m in rs.roots} == {1, 2}


def test_trim_and_exact_division():
    p = Poly.from_roots([1.0, 2.0, 3.0], leading=2.0)
    q = p.div_exact(Poly([-2.0, 1.0]))
    assert np.allclose(q.c, Poly.from_roots([1.0, 3.0], leading=2.0).c)
    with pytest.raises(ValueError):
        p.div_exact(Poly([5.0, 1.0]))
