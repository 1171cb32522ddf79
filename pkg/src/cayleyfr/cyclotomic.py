"""Exact arithmetic in Z[w_L], w_L = exp(2*pi*i/L).

Values are kept in the redundant power basis 1, w, ..., w^(L-1). Reduction
modulo the cyclotomic polynomial Phi_L is done lazily, only when two values
are compared or an integer is extracted. Coefficients are Python ints, so
there is no overflow to detect.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class LevelMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients listed from the constant term upward."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic divisor; exact over the integers."""
        if divisor.degree < 0 or divisor.leading != 1:
            raise ValueError("divisor must be monic")
        q, r = _divmod_monic(list(self.coeffs), divisor.coeffs)
        return IntPolynomial(tuple(q)), IntPolynomial(tuple(r))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _divmod_monic(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    d = len(den) - 1
    rem = list(num)
    if len(rem) <= d:
        return [0], rem + [0] * (d - len(rem)) if d else [0]
    quot = [0] * (len(rem) - d)
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k]
        if c:
            quot[k - d] = c
            for j in range(d + 1):
                rem[k - d + j] -= c * den[j]
    return quot, rem[:d] if d else [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> IntPolynomial:
    """Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d, by exact division."""
    if L < 1:
        raise ValueError(f"level must be >= 1, got {L}")
    num = IntPolynomial((-1,) + (0,) * (L - 1) + (1,))
    den = IntPolynomial((1,))
    for d in range(1, L):
        if L % d == 0:
            den = den * cyclotomic_polynomial(d)
    q, r = num.divmod_monic(den)
    assert r.degree < 0, "x^L - 1 must be divisible by the smaller cyclotomic factors"
    return q


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class CyclotomicInt:
    """An element sum_j c_j w_L^j of Z[w_L]."""

    __slots__ = ("level", "coeffs", "_canon")

    def __init__(self, level: int, coeffs: Iterable[int]):
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != level:
            raise ValueError(f"expected {level} coefficients, got {len(coeffs)}")
        self.level = level
        self.coeffs = coeffs
        self._canon: tuple[int, ...] | None = None

    @classmethod
    def integer(cls, k: int, level: int = 1) -> CyclotomicInt:
        return cls(level, (k,) + (0,) * (level - 1))

    @classmethod
    def zero(cls, level: int = 1) -> CyclotomicInt:
        return cls(level, (0,) * level)

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt.integer(other, self.level)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.level != self.level:
            raise LevelMismatchError(
                f"levels differ ({self.level} vs {other.level}); lift to a common level first"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.level, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.level, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.level, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.level, (other * a for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        L = self.level
        out = [0] * L
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % L] += a * b
        return CyclotomicInt(L, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return as_integer(self) == other
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.level != self.level:
            M = math.lcm(self.level, other.level)
            return lift_to_level(self, M) == lift_to_level(other, M)
        return canonical_reduce(self) == canonical_reduce(other)

    def __hash__(self) -> int:
        # Cross-level equality is supported, so integers hash level-free;
        # other values hash consistently only within one level.
        k = as_integer(self)
        if k is not None:
            return hash(k)
        return hash((self.level, canonical_reduce(self)))

    def __complex__(self) -> complex:
        return to_complex(self)

    def __repr__(self) -> str:
        return f"CyclotomicInt(level={self.level}, canonical={list(canonical_reduce(self))})"

    def __str__(self) -> str:
        k = as_integer(self)
        if k is not None:
            return str(k)
        terms = []
        for j, c in enumerate(canonical_reduce(self)):
            if not c:
                continue
            mono = "1" if j == 0 else (f"w{self.level}" if j == 1 else f"w{self.level}^{j}")
            if j and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}" if j == 0 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, term))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in terms[1:]:
            out += f" {sign} {term}"
        return out


def root(j: int, L: int) -> CyclotomicInt:
    """The element w_L^(j mod L)."""
    if L < 1:
        raise ValueError(f"level must be >= 1, got {L}")
    coeffs = [0] * L
    coeffs[j % L] = 1
    return CyclotomicInt(L, coeffs)


def lift_to_level(a: CyclotomicInt, M: int) -> CyclotomicInt:
    """Re-express ``a`` at level M; w_level^j becomes w_M^(j*M/level)."""
    if M < 1 or M % a.level:
        raise LevelMismatchError(f"level {a.level} does not divide target level {M}")
    step = M // a.level
    coeffs = [0] * M
    for j, c in enumerate(a.coeffs):
        coeffs[j * step] = c
    return CyclotomicInt(M, coeffs)


def canonical_reduce(a: CyclotomicInt) -> tuple[int, ...]:
    """Remainder of the coefficient polynomial mod Phi_L, length phi(L)."""
    if a._canon is None:
        phi = cyclotomic_polynomial(a.level)
        _, rem = _divmod_monic(list(a.coeffs), phi.coeffs)
        d = phi.degree
        rem = list(rem[:d]) + [0] * (d - len(rem))
        a._canon = tuple(rem)
    return a._canon


def as_integer(a: CyclotomicInt) -> int | None:
    """The integer k if ``a`` equals k exactly, else None."""
    canon = canonical_reduce(a)
    if any(canon[1:]):
        return None
    return canon[0]


def to_complex(a: CyclotomicInt) -> complex:
    L = a.level
    return sum(
        (c * cmath.exp(2j * math.pi * j / L) for j, c in enumerate(a.coeffs) if c),
        0j,
    )
