"""Exact fractional-revival decisions for abelian Cayley graphs.

For an involution ``a`` the walk revives between v and v + a at time t iff
t/(2 pi) * (lambda_x - lambda_y) is an integer for every pair in

    N = {(x, y) : x > y lexicographically, x - y has even weight against a}.

When every such difference is an integer the earliest revival time is
2 pi / M with M their gcd. Non-integer differences are reported as
undetermined rather than guessed at.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .cyclotomic import as_integer
from .groups import (
    GroupElement,
    GroupSpec,
    NotInvolutionError,
    Parity,
    _check_same,
    element_order,
    involutions,
    parity_wt,
    support_weight_parity,
)
from .oracle import scan_max_fidelity
from .spectra import (
    ConnectionSet,
    Spectrum,
    full_spectrum,
    transition_column,
    transition_entry,
    validate_connection_set,
)

AMPLITUDE_TOL = 1e-8
NORM_TOL = 1e-6
RESIDUAL_TOL = 1e-8
EVIDENCE_T_MAX = 8 * math.pi
EVIDENCE_STEPS = 4000

Pair = tuple[GroupElement, GroupElement]


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED_EXACT = "undetermined_exact"


class Classification(enum.Enum):
    PROPER_FR = "proper_fr"
    PST = "pst"
    PERIODIC = "periodic"


class UndeterminedExactError(ValueError):
    """An eigenvalue difference over N is not an integer."""

    def __init__(self, pair: Pair):
        x, y = pair
        super().__init__(f"lambda_{x} - lambda_{y} is not an integer")
        self.pair = pair


class EngineInconsistencyError(RuntimeError):
    """The spectral and exact paths disagree; indicates a bug, not bad input."""


@dataclass(frozen=True)
class ConditionCheck:
    passed: bool
    reason: str

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class PairSetN:
    a: GroupElement
    pairs: tuple[Pair, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class DifferenceGcd:
    """Outcome of the gcd step.

    Exactly one of three shapes: ``witness`` set (a non-integer difference),
    ``M`` set (gcd of the nonzero integer differences), or neither (all zero).
    ``differences`` lists the integer differences in N order when computed
    pair by pair.
    """

    M: int | None = None
    witness: Pair | None = None
    differences: tuple[int, ...] | None = None

    @property
    def all_zero(self) -> bool:
        return self.M is None and self.witness is None

    @property
    def is_integer(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class FRCertificate:
    """Revival between v and v + a.

    ``time`` is t / (2 pi) as a reduced fraction, or None when revival holds
    at every time (all differences over N vanish). In that case the
    amplitudes are reported at the reference time t = 2 pi.
    """

    a: GroupElement
    time: Fraction | None
    M: int | None
    alpha: complex
    beta: complex
    classification: Classification

    @property
    def all_times(self) -> bool:
        return self.time is None

    @property
    def t(self) -> float:
        return 2 * math.pi * float(self.time if self.time is not None else 1)


@dataclass(frozen=True)
class FRDecision:
    a: GroupElement | None
    verdict: Verdict
    witness: Union[str, Pair, None] = None
    certificate: FRCertificate | None = None
    evidence: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.YES) != (self.certificate is not None):
            raise ValueError("a certificate is present exactly when the verdict is YES")
        if (self.verdict is Verdict.YES) == (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is not YES")


@dataclass(frozen=True)
class FRSearchResult:
    decisions: tuple[FRDecision, ...]

    @property
    def has_fr(self) -> bool:
        return any(d.verdict is Verdict.YES for d in self.decisions)

    @property
    def has_undetermined(self) -> bool:
        return any(d.verdict is Verdict.UNDETERMINED_EXACT for d in self.decisions)

    def __iter__(self):
        return iter(self.decisions)

    def __len__(self) -> int:
        return len(self.decisions)


def check_conditions_ab(spec: GroupSpec, a: GroupElement) -> ConditionCheck:
    """Conditions (a) and (b): a has order two and sits in even factors only."""
    _check_same(spec, a.spec)
    if a.is_zero():
        raise ValueError("a = 0 describes periodicity of a single vertex, not revival")
    order = element_order(a)
    if order != 2:
        return ConditionCheck(False, f"{a} has order {order}, not 2")
    for s, (c, n) in enumerate(zip(a.coords, spec.orders)):
        if c and n % 2:
            return ConditionCheck(False, f"coordinate {s} of {a} is nonzero but n_{s} = {n} is odd")
    return ConditionCheck(True, "a has order 2 and every nonzero coordinate is n_s/2")


def build_N(spec: GroupSpec, a: GroupElement) -> PairSetN:
    check = check_conditions_ab(spec, a)
    if not check:
        raise NotInvolutionError(check.reason)
    elems = list(spec.elements())
    pairs = []
    for i, x in enumerate(elems):
        for y in elems[:i]:
            if parity_wt(a, x - y) is Parity.EVEN:
                pairs.append((x, y))
    return PairSetN(a, tuple(pairs))


def _integer_difference(spectrum: Spectrum, x: GroupElement, y: GroupElement) -> int | None:
    return as_integer(spectrum[x] - spectrum[y])


def integer_difference_gcd(spectrum: Spectrum, N: PairSetN) -> DifferenceGcd:
    """gcd of lambda_x - lambda_y over N, computed pair by pair."""
    diffs = []
    for x, y in N:
        d = _integer_difference(spectrum, x, y)
        if d is None:
            return DifferenceGcd(witness=(x, y))
        diffs.append(d)
    M = math.gcd(*diffs) if diffs else 0
    return DifferenceGcd(M=M or None, differences=tuple(diffs))


def class_difference_gcd(spectrum: Spectrum, a: GroupElement) -> DifferenceGcd:
    """Same answer as ``integer_difference_gcd(spectrum, build_N(...))`` in O(|G|).

    Pairs in N are exactly the pairs x > y lying in the same class of
    ``support_weight_parity``. Within a class, every difference is an integer
    iff each element differs from the class's first element by an integer,
    and the gcd over all pairs equals the gcd of those reference differences.
    The first witness in N order is the first element whose non-constant
    canonical part differs from its class head, paired with that head.
    """
    spec = spectrum.spec
    check = check_conditions_ab(spec, a)
    if not check:
        raise NotInvolutionError(check.reason)
    heads: dict[int, tuple[GroupElement, tuple[int, ...], int]] = {}
    M = 0
    for i, x in enumerate(spec.elements()):
        cls = support_weight_parity(a, x)
        canon = spectrum.canonical(i)
        if cls not in heads:
            heads[cls] = (x, canon[1:], canon[0])
            continue
        head, head_key, head_const = heads[cls]
        if canon[1:] != head_key:
            return DifferenceGcd(witness=(x, head))
        M = math.gcd(M, canon[0] - head_const)
    return DifferenceGcd(M=M or None)


def minimum_fr_time(M: int) -> Fraction:
    """Earliest revival time 2 pi / M, returned as t / (2 pi)."""
    if M < 1:
        raise ValueError("M must be a positive integer")
    return Fraction(1, M)


def first_failing_pair(spectrum: Spectrum, N: PairSetN, p: int, q: int) -> Pair | None:
    """First pair of N where q does not divide p * (lambda_x - lambda_y).

    Integrality is checked over all of N first, so an irrational difference
    anywhere raises even if an earlier pair already fails divisibility.
    """
    if q < 1:
        raise ValueError("q must be positive")
    diffs = []
    for x, y in N:
        d = _integer_difference(spectrum, x, y)
        if d is None:
            raise UndeterminedExactError((x, y))
        diffs.append(d)
    for (x, y), d in zip(N, diffs):
        if (p * d) % q:
            return (x, y)
    return None


def check_fr_at_time(spectrum: Spectrum, N: PairSetN, p: int, q: int) -> bool:
    """Condition (c) at t = 2 pi p / q, with exact integer arithmetic."""
    return first_failing_pair(spectrum, N, p, q) is None


def classify(alpha: complex, beta: complex) -> Classification:
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1) > NORM_TOL:
        raise ValueError(f"|alpha|^2 + |beta|^2 = {norm!r}, not 1")
    if abs(alpha) < AMPLITUDE_TOL:
        return Classification.PST
    if abs(beta) < AMPLITUDE_TOL:
        return Classification.PERIODIC
    return Classification.PROPER_FR


def amplitudes(
    spectrum: Spectrum,
    u: GroupElement,
    v: GroupElement,
    t: float,
    certified: bool = False,
) -> tuple[complex, complex]:
    """alpha = H(t)[u, u], beta = H(t)[v, u].

    With ``certified`` the rest of column u must vanish, otherwise the claimed
    revival is not what the walk actually does.
    """
    if u == v:
        raise ValueError("amplitudes need two distinct vertices")
    alpha = transition_entry(spectrum, u, u, t)
    beta = transition_entry(spectrum, v, u, t)
    if certified:
        spec = spectrum.spec
        col = transition_column(spectrum, u, t)
        col[spec.index(u)] = 0
        col[spec.index(v)] = 0
        residual = float(np.max(np.abs(col))) if len(col) else 0.0
        if residual >= RESIDUAL_TOL:
            raise EngineInconsistencyError(
                f"column {u} of H({t}) has leakage {residual:.3e} outside {{{u}, {v}}}"
            )
    return alpha, beta


def decide_fr(
    S: ConnectionSet,
    a: GroupElement,
    spectrum: Spectrum | None = None,
    evidence_steps: int = EVIDENCE_STEPS,
) -> FRDecision:
    """Decide whether Cay(G, S) has revival between v and v + a.

    ``evidence_steps`` sizes the oracle scan attached to undetermined
    verdicts (0 skips it). The scan is evidence only; it never sets the verdict.
    """
    spec = S.spec
    _check_same(spec, a.spec)
    check = check_conditions_ab(spec, a)
    if not check:
        return FRDecision(a, Verdict.NO, witness=check.reason)

    spectrum = spectrum or full_spectrum(spec, S)
    result = class_difference_gcd(spectrum, a)
    u, v = spec.zero(), a
    if result.witness is not None:
        evidence = None
        if evidence_steps:
            evidence = scan_max_fidelity(S, u, v, EVIDENCE_T_MAX, evidence_steps, engine="series")
        return FRDecision(a, Verdict.UNDETERMINED_EXACT, witness=result.witness, evidence=evidence)

    time = None if result.all_zero else minimum_fr_time(result.M)
    t = 2 * math.pi * float(time if time is not None else 1)
    alpha, beta = amplitudes(spectrum, u, v, t, certified=True)
    cert = FRCertificate(a, time, result.M, alpha, beta, classify(alpha, beta))
    return FRDecision(a, Verdict.YES, certificate=cert)


def search_all_fr(S: ConnectionSet, evidence_steps: int = EVIDENCE_STEPS) -> FRSearchResult:
    spectrum = full_spectrum(S.spec, S)
    return FRSearchResult(
        tuple(
            decide_fr(S, a, spectrum=spectrum, evidence_steps=evidence_steps)
            for a in involutions(S.spec)
        )
    )


def circulant_fr(n: int, S: Iterable[int], evidence_steps: int = EVIDENCE_STEPS) -> FRDecision:
    """Circulants can only revive between antipodes, so a = n/2 is the one candidate."""
    spec = GroupSpec((n,))
    conn = validate_connection_set(spec, S)
    if n % 2:
        return FRDecision(None, Verdict.NO, witness=f"n = {n} is odd; revival needs n even")
    return decide_fr(conn, spec.element(n // 2), evidence_steps=evidence_steps)


def _bits(v: str | Iterable[int]) -> tuple[int, ...]:
    if isinstance(v, str):
        return tuple(int(ch) for ch in v)
    return tuple(int(c) for c in v)


def cubelike_fr(r: int, S: Iterable[str | Iterable[int]]) -> FRSearchResult:
    """All involutions of Z2^r. Eigenvalues are integers here, so nothing is undetermined."""
    spec = GroupSpec((2,) * r)
    conn = validate_connection_set(spec, [spec.element(_bits(s)) for s in S])
    result = search_all_fr(conn, evidence_steps=0)
    if result.has_undetermined:
        raise EngineInconsistencyError("cubelike eigenvalues must be integers")
    return result
