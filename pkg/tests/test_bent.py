import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleyfr.bent import (
    BooleanFunction,
    bent_graph_fr,
    fwht,
    is_bent,
    mm_bent,
    predicted_eigenvalue,
    tan_connection_set,
    walsh_transform,
)
from cayleyfr.cyclotomic import as_integer
from cayleyfr.revival import Classification, build_N
from cayleyfr.spectra import full_spectrum


def _walsh_brute(f):
    k = f.arity
    out = []
    for x in range(1 << k):
        out.append(sum((-1) ** (f.table[z] ^ (bin(x & z).count("1") & 1)) for z in range(1 << k)))
    return out


@st.composite
def boolean_functions(draw, max_arity=6):
    k = draw(st.integers(1, max_arity))
    bits = draw(st.lists(st.integers(0, 1), min_size=1 << k, max_size=1 << k))
    return BooleanFunction(k, tuple(bits))


def test_table_validation():
    with pytest.raises(ValueError):
        BooleanFunction(2, (0, 1, 1))
    with pytest.raises(ValueError):
        BooleanFunction(1, (0, 2))
    with pytest.raises(ValueError):
        BooleanFunction(0, (0,))


def test_parsing_and_hex():
    f = BooleanFunction.from_string("0001")
    assert f.arity == 2 and f((1, 1)) == 1 and f((1, 0)) == 0
    assert BooleanFunction.from_string("0x8").table == (0, 0, 0, 1)
    assert mm_bent(2).to_hex() == "0x7888"
    assert BooleanFunction.from_string(mm_bent(2).to_hex()) == mm_bent(2)


def test_fwht_rejects_bad_length():
    with pytest.raises(ValueError):
        fwht([1, 2, 3])


def test_mm_bent_small():
    f = mm_bent(1)
    assert f.table == (0, 0, 0, 1)
    assert is_bent(f)
    assert walsh_transform(f).values.tolist() == [2, 2, 2, -2]
    f2 = mm_bent(2)
    assert set(walsh_transform(f2).values.tolist()) == {4, -4}
    assert walsh_transform(f2)[0] == 4
    assert len(f2.support()) == 6


@pytest.mark.parametrize("m", [1, 2, 3])
def test_mm_bent_is_bent(m):
    assert is_bent(mm_bent(m))


def test_odd_arity_never_bent():
    assert not is_bent(BooleanFunction(3, (0, 1, 1, 0, 1, 0, 0, 1)))


def test_all_bent_functions_of_two_variables():
    bent = [bits for bits in itertools.product((0, 1), repeat=4) if is_bent(BooleanFunction(2, bits))]
    # exactly the functions of odd weight
    assert len(bent) == 8
    assert all(sum(b) % 2 == 1 for b in bent)


@given(boolean_functions())
def test_walsh_matches_brute_force(f):
    W = walsh_transform(f)
    assert W.values.tolist() == _walsh_brute(f)
    assert int(np.sum(W.values.astype(object) ** 2)) == 1 << (2 * f.arity)


@given(boolean_functions(max_arity=5))
def test_tan_spectrum_closed_form(f):
    if f.table[0] or not f.support():
        with pytest.raises(ValueError):
            tan_connection_set(f)
        return
    S = tan_connection_set(f)
    spec = S.spec
    W = walsh_transform(f)
    spectrum = full_spectrum(spec, S)
    for i, x in enumerate(spec.elements()):
        assert as_integer(spectrum.exact[i]) == predicted_eigenvalue(f, W, x)


def test_bent_graph_m2():
    report = bent_graph_fr(2)
    assert report.vertices == 32
    assert report.M == 8
    assert abs(report.certificate.t - math.pi / 4) < 1e-15
    assert report.certificate.classification is Classification.PST
    assert report.oracle_total >= 1 - 1e-8


def test_bent_graph_m3_exact_only():
    report = bent_graph_fr(3, oracle=False)
    assert report.vertices == 128
    assert report.M == 16
    assert math.isnan(report.oracle_total)


def test_bent_graph_needs_m2():
    with pytest.raises(ValueError):
        bent_graph_fr(1)


@given(boolean_functions(max_arity=10))
def test_fwht_twice_scales_by_size(f):
    signs = [1 - 2 * b for b in f.table]
    assert fwht(fwht(signs)) == [(1 << f.arity) * s for s in signs]


def test_bent_graph_difference_structure():
    m = 2
    S = tan_connection_set(mm_bent(m))
    spec = S.spec
    spectrum = full_spectrum(spec, S)
    a = spec.element((1,) + (0,) * (2 * m))
    allowed = {0, -(1 << (2 * m)), 1 << (m + 1), -(1 << (m + 1))}
    diffs = {as_integer(spectrum[x] - spectrum[y]) for x, y in build_N(spec, a)}
    assert diffs <= allowed
