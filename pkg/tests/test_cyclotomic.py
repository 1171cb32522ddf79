import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleyfr.cyclotomic import (
    CyclotomicInt,
    IntPolynomial,
    LevelMismatchError,
    as_integer,
    canonical_reduce,
    cyclotomic_polynomial,
    euler_phi,
    lift_to_level,
    root,
    to_complex,
)


def _phi_by_roots(L):
    """Product of (x - z) over primitive L-th roots, rounded to integers."""
    zs = [cmath.exp(2j * math.pi * k / L) for k in range(1, L + 1) if math.gcd(k, L) == 1]
    coeffs = np.poly(zs)[::-1]
    return tuple(int(round(c.real)) for c in coeffs)


@pytest.mark.parametrize("L", range(1, 41))
def test_cyclotomic_polynomial_matches_root_product(L):
    phi = cyclotomic_polynomial(L)
    assert phi.coeffs == _phi_by_roots(L)
    assert phi.degree == euler_phi(L)


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1).coeffs == (-1, 1)
    assert cyclotomic_polynomial(4).coeffs == (1, 0, 1)
    assert cyclotomic_polynomial(6).coeffs == (1, -1, 1)
    assert cyclotomic_polynomial(12).coeffs == (1, 0, -1, 0, 1)


def test_int_polynomial_division():
    num = IntPolynomial((1, 2, 3, 4))
    q, r = num.divmod_monic(IntPolynomial((1, 1)))
    assert (q * IntPolynomial((1, 1))).coeffs == tuple(
        a - b for a, b in zip(num.coeffs, r.coeffs + (0,) * 3)
    )
    assert r.degree < 1
    with pytest.raises(ValueError):
        num.divmod_monic(IntPolynomial((1, 2)))


def test_root_sums_vanish():
    # 1 + w + ... + w^(L-1) = 0 for every L > 1
    for L in (2, 3, 4, 6, 8, 12):
        total = CyclotomicInt(L, (1,) * L)
        assert as_integer(total) == 0
        assert total == 0


def test_six_cycle_values():
    w = root(1, 6)
    assert as_integer(w + root(5, 6)) == 1
    assert as_integer(root(2, 6) + root(4, 6)) == -1
    assert as_integer(root(3, 6)) == -1
    assert as_integer(w) is None


def test_eight_cycle_irrational():
    lam = root(1, 8) + root(7, 8)
    assert as_integer(lam) is None
    assert abs(to_complex(lam) - math.sqrt(2)) < 1e-12
    assert as_integer(lam * lam) == 2


def test_level_mismatch():
    with pytest.raises(LevelMismatchError):
        root(1, 4) + root(1, 6)
    with pytest.raises(LevelMismatchError):
        lift_to_level(root(1, 4), 6)
    assert root(1, 4) == lift_to_level(root(1, 4), 12)
    assert root(1, 2) == root(3, 6)


def test_str_forms():
    assert str(CyclotomicInt.integer(5, 4)) == "5"
    assert str(root(1, 8) + root(7, 8)) == "w8 - w8^3"
    assert str(root(1, 3) * 2 - 1) == "-1 + 2*w3"


def test_rejects_bad_construction():
    with pytest.raises(ValueError):
        CyclotomicInt(0, ())
    with pytest.raises(ValueError):
        CyclotomicInt(3, (1, 2))


levels = st.integers(1, 24)


@st.composite
def cyc(draw, level=None):
    L = level if level is not None else draw(levels)
    return CyclotomicInt(L, draw(st.lists(st.integers(-5, 5), min_size=L, max_size=L)))


@st.composite
def cyc_pair(draw):
    L = draw(levels)
    return draw(cyc(L)), draw(cyc(L)), draw(cyc(L))


@given(cyc_pair())
def test_ring_laws(data):
    a, b, c = data
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert -(-a) == a


@given(cyc_pair())
def test_complex_embedding_is_a_homomorphism(data):
    a, b, _ = data
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-8
    assert abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9


@given(cyc())
def test_canonical_form_preserves_value(a):
    canon = canonical_reduce(a)
    assert len(canon) == euler_phi(a.level)
    w = cmath.exp(2j * math.pi / a.level)
    value = sum(c * w**j for j, c in enumerate(canon))
    assert abs(value - to_complex(a)) < 1e-8


@given(cyc())
def test_integer_detection_agrees_with_float(a):
    k = as_integer(a)
    z = to_complex(a)
    if k is not None:
        assert abs(z - k) < 1e-9
    elif abs(z.imag) > 1e-6 or abs(z.real - round(z.real)) > 1e-6:
        assert any(canonical_reduce(a)[1:])


@given(cyc(), st.integers(1, 4))
def test_lift_preserves_value(a, k):
    lifted = lift_to_level(a, a.level * k)
    assert lifted == a
    assert abs(to_complex(lifted) - to_complex(a)) < 1e-9
    assert hash(lifted) == hash(a) or as_integer(a) is None
