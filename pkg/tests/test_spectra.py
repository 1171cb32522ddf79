import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyfr.cyclotomic import as_integer, to_complex
from cayleyfr.groups import GroupSpec
from cayleyfr.spectra import (
    AsymmetricError,
    LoopError,
    adjacency_matrix,
    character,
    eigenprojector,
    eigenvalue,
    eigenvector,
    full_spectrum,
    transition_column,
    transition_entry,
    transition_matrix_spectral,
    validate_connection_set,
)

from conftest import connection_sets, cycle, spec_and_elements

Z6 = GroupSpec((6,))


def test_validate_loop():
    with pytest.raises(LoopError) as err:
        validate_connection_set(Z6, [0, 1, 5])
    assert err.value.element == Z6.zero()


def test_validate_asymmetric_lists_every_offender():
    with pytest.raises(AsymmetricError) as err:
        validate_connection_set(Z6, [1, 2])
    assert [g.coords for g in err.value.elements] == [(1,), (2,)]
    assert "1 (needs 5)" in str(err.value) and "2 (needs 4)" in str(err.value)


def test_validate_deduplicates_and_sorts():
    S = validate_connection_set(Z6, [5, 1, 1, 3])
    assert [g.coords[0] for g in S] == [1, 3, 5]
    assert Z6.element(3) in S


def test_cycle_spectrum_closed_form():
    for n in range(3, 13):
        spec = GroupSpec((n,))
        spectrum = full_spectrum(spec, cycle(n))
        expected = [2 * math.cos(2 * math.pi * k / n) for k in range(n)]
        assert np.allclose(spectrum.values, expected, atol=1e-12)


def test_six_cycle_exact_spectrum():
    spectrum = full_spectrum(Z6, cycle(6))
    assert [as_integer(v) for v in spectrum.exact] == [2, 1, -1, -2, -1, 1]


def test_eight_cycle_has_irrational_eigenvalues():
    spectrum = full_spectrum(GroupSpec((8,)), cycle(8))
    assert as_integer(spectrum.exact[1]) is None
    assert as_integer(spectrum.exact[2]) == 0


def test_hypercube_spectrum():
    spec = GroupSpec((2, 2, 2))
    S = validate_connection_set(spec, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    spectrum = full_spectrum(spec, S)
    for i, x in enumerate(spec.elements()):
        assert as_integer(spectrum.exact[i]) == 3 - 2 * sum(x.coords)


def test_empty_connection_set():
    spec = GroupSpec((4,))
    S = validate_connection_set(spec, [])
    spectrum = full_spectrum(spec, S)
    assert np.all(spectrum.values == 0)
    H = transition_matrix_spectral(spectrum, 1.3).matrix
    assert np.allclose(H, np.eye(4))


@settings(max_examples=40, deadline=None)
@given(connection_sets())
def test_spectrum_matches_dense_eigensolver(S):
    spec = S.spec
    A = adjacency_matrix(spec, S)
    spectrum = full_spectrum(spec, S)
    assert np.allclose(np.sort(spectrum.values), np.linalg.eigvalsh(A), atol=1e-9)
    assert np.allclose([to_complex(v) for v in spectrum.exact], spectrum.values, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(connection_sets())
def test_eigenvectors_diagonalise(S):
    spec = S.spec
    A = adjacency_matrix(spec, S)
    spectrum = full_spectrum(spec, S)
    total = np.zeros((spec.size, spec.size), dtype=complex)
    for i, x in enumerate(spec.elements()):
        p = eigenvector(spec, x)
        assert np.allclose(A @ p, spectrum.values[i] * p, atol=1e-9)
        total += eigenprojector(spec, x)
    assert np.allclose(total, np.eye(spec.size), atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(connection_sets())
def test_adjacency_is_symmetric_regular(S):
    A = adjacency_matrix(S.spec, S)
    assert np.array_equal(A, A.T)
    assert np.all(np.diag(A) == 0)
    assert np.all(A.sum(axis=0) == len(S))


@given(spec_and_elements(3))
def test_characters_are_homomorphisms(data):
    spec, (x, g, h) = data
    assert character(x, g + h) == character(x, g) * character(x, h)
    assert character(x, g) == character(g, x)
    assert character(x, spec.zero()) == 1


@settings(max_examples=30, deadline=None)
@given(connection_sets())
def test_eigenvalue_function_matches_table(S):
    spectrum = full_spectrum(S.spec, S)
    for i, x in enumerate(S.spec.elements()):
        assert eigenvalue(x, S) == spectrum.exact[i]
    # lambda_0 is the valency
    assert as_integer(spectrum.exact[0]) == len(S)


def _expm_hermitian(A, t):
    w, V = np.linalg.eigh(A.astype(float))
    return (V * np.exp(1j * t * w)) @ V.conj().T


@settings(max_examples=30, deadline=None)
@given(connection_sets(), st.floats(-20, 20))
def test_transition_matrix_matches_eigh(S, t):
    spec = S.spec
    spectrum = full_spectrum(spec, S)
    H = transition_matrix_spectral(spectrum, t)
    assert np.allclose(H.matrix, _expm_hermitian(adjacency_matrix(spec, S), t), atol=1e-9)
    assert H.unitarity_error() < 1e-10
    assert H.symmetry_error() < 1e-12


@settings(max_examples=30, deadline=None)
@given(connection_sets(), st.floats(0, 10), st.data())
def test_entry_and_column_agree_with_matrix(S, t, data):
    spec = S.spec
    spectrum = full_spectrum(spec, S)
    H = transition_matrix_spectral(spectrum, t).matrix
    u = spec.from_index(data.draw(st.integers(0, spec.size - 1)))
    v = spec.from_index(data.draw(st.integers(0, spec.size - 1)))
    iu, iv = spec.index(u), spec.index(v)
    assert abs(transition_entry(spectrum, u, v, t) - H[iu, iv]) < 1e-10
    assert np.allclose(transition_column(spectrum, u, t), H[:, iu], atol=1e-10)


def test_two_vertex_closed_form():
    spec = GroupSpec((2,))
    spectrum = full_spectrum(spec, validate_connection_set(spec, [1]))
    for t in (0.0, 0.3, 1.0, math.pi / 2, 5.0):
        H = transition_matrix_spectral(spectrum, t).matrix
        assert abs(H[0, 0] - math.cos(t)) < 1e-12
        assert abs(H[0, 1] - 1j * math.sin(t)) < 1e-12


def test_six_cycle_entries_at_revival_time():
    spectrum = full_spectrum(Z6, cycle(6))
    t = 2 * math.pi / 3
    alpha = transition_entry(spectrum, Z6.zero(), Z6.zero(), t)
    beta = transition_entry(spectrum, Z6.element(3), Z6.zero(), t)
    assert abs(alpha - (-0.5)) < 1e-12
    assert abs(beta - (-1j * math.sqrt(3) / 2)) < 1e-12
    assert abs(cmath.phase(beta) + math.pi / 2) < 1e-12
