"""Characters, exact eigenvalues and the closed-form walk on Cay(G, S).

Every abelian Cayley graph is diagonalised by the character table: the
eigenvector for ``x`` has entries chi_x(h) / sqrt(|G|) and its eigenvalue is
the character sum lambda_x = sum_{g in S} chi_x(g). Both the exact
(cyclotomic) and floating values are kept; decisions use the former.

Matrices are indexed by the lexicographic element order of the group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .cyclotomic import CyclotomicInt, canonical_reduce, root
from .groups import GroupElement, GroupSpec, SpecMismatchError, _check_same

REALITY_TOL = 1e-10


class InvalidConnectionSetError(ValueError):
    """``element`` is the first offender; ``elements`` lists all of them."""

    def __init__(self, message: str, elements: Sequence[GroupElement] = ()):
        super().__init__(message)
        self.elements = tuple(elements)
        self.element = self.elements[0] if self.elements else None


class LoopError(InvalidConnectionSetError):
    pass


class AsymmetricError(InvalidConnectionSetError):
    pass


@dataclass(frozen=True)
class ConnectionSet:
    """A validated connection set: 0 not in S and -S = S. Sorted, no duplicates."""

    spec: GroupSpec
    elements: tuple[GroupElement, ...]

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._members

    @property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def coords(self) -> np.ndarray:
        return np.array([g.coords for g in self.elements], dtype=np.int64).reshape(
            len(self.elements), self.spec.rank
        )


def validate_connection_set(
    spec: GroupSpec, raw: Iterable[GroupElement | int | Iterable[int]]
) -> ConnectionSet:
    elements = set()
    for g in raw:
        if isinstance(g, GroupElement):
            _check_same(spec, g.spec)
        else:
            g = spec.element(g)
        elements.add(g)
    ordered = sorted(elements, key=lambda e: e.coords)
    for g in ordered:
        if g.is_zero():
            raise LoopError(f"0 = {g} is in S, which would put a loop at every vertex", [g])
    missing = [g for g in ordered if -g not in elements]
    if missing:
        detail = ", ".join(f"{g} (needs {-g})" for g in missing)
        raise AsymmetricError(f"S is not symmetric; elements without their inverse: {detail}", missing)
    return ConnectionSet(spec, tuple(ordered))


def element_coords(spec: GroupSpec) -> np.ndarray:
    """|G| x r array of all elements, lexicographic."""
    grids = np.meshgrid(*(np.arange(n) for n in spec.orders), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def coords_to_index(spec: GroupSpec, coords: np.ndarray) -> np.ndarray:
    """Mixed-radix index of (already reduced) coordinate rows."""
    idx = np.zeros(coords.shape[:-1], dtype=np.int64)
    for s, n in enumerate(spec.orders):
        idx = idx * n + coords[..., s]
    return idx


def _weights(spec: GroupSpec) -> np.ndarray:
    L = spec.exponent
    return np.array([L // n for n in spec.orders], dtype=np.int64)


def character_exponents(spec: GroupSpec, xs: np.ndarray, gs: np.ndarray) -> np.ndarray:
    """Exponents e with chi_x(g) = w_L^e, for all rows of ``xs`` against all rows of ``gs``."""
    return ((xs * _weights(spec)) @ gs.T) % spec.exponent


def character(x: GroupElement, g: GroupElement) -> CyclotomicInt:
    """chi_x(g) = prod_s w_{n_s}^(x_s g_s), returned as a single monomial w_L^e."""
    _check_same(x.spec, g.spec)
    spec = x.spec
    L = spec.exponent
    e = sum((L // n) * xs * gs for xs, gs, n in zip(x.coords, g.coords, spec.orders))
    return root(e, L)


def eigenvalue(x: GroupElement, S: ConnectionSet) -> CyclotomicInt:
    """lambda_x = sum_{g in S} chi_x(g), exactly."""
    _check_same(x.spec, S.spec)
    total = CyclotomicInt.zero(x.spec.exponent)
    for g in S:
        total = total + character(x, g)
    return total


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues of Cay(G, S) for every x in G, in lexicographic order."""

    connection: ConnectionSet
    exact: tuple[CyclotomicInt, ...]
    values: np.ndarray = field(repr=False)

    @property
    def spec(self) -> GroupSpec:
        return self.connection.spec

    def __len__(self) -> int:
        return len(self.exact)

    def __getitem__(self, x: GroupElement) -> CyclotomicInt:
        return self.exact[self.spec.index(x)]

    def value(self, x: GroupElement) -> float:
        return float(self.values[self.spec.index(x)])

    def canonical(self, i: int) -> tuple[int, ...]:
        return canonical_reduce(self.exact[i])


def full_spectrum(spec: GroupSpec, S: ConnectionSet) -> Spectrum:
    _check_same(spec, S.spec)
    L = spec.exponent
    xs = element_coords(spec)
    if len(S):
        exps = character_exponents(spec, xs, S.coords())
        counts = np.zeros((spec.size, L), dtype=np.int64)
        rows = np.repeat(np.arange(spec.size), exps.shape[1])
        np.add.at(counts, (rows, exps.ravel()), 1)
    else:
        counts = np.zeros((spec.size, L), dtype=np.int64)
    roots = np.exp(2j * np.pi * np.arange(L) / L)
    complex_values = counts @ roots
    worst = float(np.max(np.abs(complex_values.imag))) if spec.size else 0.0
    if worst >= REALITY_TOL:
        # Only reachable if S is not symmetric, which validation rules out.
        raise ValueError(f"eigenvalues are not real (max |Im| = {worst:.3e})")
    exact = tuple(CyclotomicInt(L, row) for row in counts.tolist())
    return Spectrum(S, exact, complex_values.real.copy())


def adjacency_matrix(spec: GroupSpec, S: ConnectionSet) -> np.ndarray:
    """0/1 matrix with A[u, v] = 1 iff u - v in S."""
    _check_same(spec, S.spec)
    xs = element_coords(spec)
    orders = np.array(spec.orders, dtype=np.int64)
    A = np.zeros((spec.size, spec.size), dtype=np.int64)
    cols = np.arange(spec.size)
    for g in S.coords():
        rows = coords_to_index(spec, (xs + g) % orders)
        A[rows, cols] = 1
    return A


def difference_index(spec: GroupSpec) -> np.ndarray:
    """D[u, v] = index of u - v."""
    xs = element_coords(spec)
    orders = np.array(spec.orders, dtype=np.int64)
    diff = (xs[:, None, :] - xs[None, :, :]) % orders
    return coords_to_index(spec, diff)


def eigenvector(spec: GroupSpec, x: GroupElement) -> np.ndarray:
    """p_x with entries chi_x(h) / sqrt(|G|), h in lexicographic order."""
    _check_same(spec, x.spec)
    e = character_exponents(spec, np.array([x.coords]), element_coords(spec))[0]
    return np.exp(2j * np.pi * e / spec.exponent) / math.sqrt(spec.size)


def eigenprojector(spec: GroupSpec, x: GroupElement) -> np.ndarray:
    p = eigenvector(spec, x)
    return np.outer(p, p.conj())


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    t: float
    matrix: np.ndarray = field(repr=False)
    engine: str = "spectral"

    def unitarity_error(self) -> float:
        H = self.matrix
        return float(np.max(np.abs(H @ H.conj().T - np.eye(H.shape[0]))))

    def symmetry_error(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.T)))


def difference_kernel(spectrum: Spectrum, t: float) -> np.ndarray:
    """h(d) = (1/|G|) sum_g exp(i lambda_g t) chi_g(d) for all d, lexicographic.

    This is an inverse multidimensional DFT over the factor orders.
    """
    spec = spectrum.spec
    phases = np.exp(1j * t * spectrum.values).reshape(spec.orders)
    return np.fft.ifftn(phases).ravel()


def transition_matrix_spectral(spectrum: Spectrum, t: float) -> TransitionMatrix:
    """H(t) = sum_g exp(i lambda_g t) E_g; entry (u, v) depends only on u - v."""
    h = difference_kernel(spectrum, t)
    return TransitionMatrix(float(t), h[difference_index(spectrum.spec)], "spectral")


def transition_entry(
    spectrum: Spectrum, u: GroupElement, v: GroupElement, t: float
) -> complex:
    """Single entry H(t)[u, v] in O(|G|) without building the matrix."""
    spec = spectrum.spec
    _check_same(spec, u.spec)
    d = u - v
    e = character_exponents(spec, element_coords(spec), np.array([d.coords]))[:, 0]
    chi = np.exp(2j * np.pi * e / spec.exponent)
    return complex(np.sum(np.exp(1j * t * spectrum.values) * chi) / spec.size)


def transition_column(spectrum: Spectrum, u: GroupElement, t: float) -> np.ndarray:
    """Column H(t) e_u, i.e. H[w, u] for every w."""
    spec = spectrum.spec
    h = difference_kernel(spectrum, t)
    xs = element_coords(spec)
    orders = np.array(spec.orders, dtype=np.int64)
    return h[coords_to_index(spec, (xs - np.array(u.coords)) % orders)]


__all__ = [
    "AsymmetricError",
    "ConnectionSet",
    "InvalidConnectionSetError",
    "LoopError",
    "SpecMismatchError",
    "Spectrum",
    "TransitionMatrix",
    "adjacency_matrix",
    "character",
    "difference_kernel",
    "eigenprojector",
    "eigenvalue",
    "eigenvector",
    "full_spectrum",
    "transition_column",
    "transition_entry",
    "transition_matrix_spectral",
    "validate_connection_set",
]
