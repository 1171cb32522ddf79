"""Finite abelian groups written as direct sums Z_{n_1} + ... + Z_{n_r}.

Elements are tuples of canonical residues ``0 <= x_s < n_s``. Enumeration and
comparison are lexicographic on those tuples, which is also the dotted order
used to orient the pair set of the revival criterion.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class SpecMismatchError(ValueError):
    """Raised when elements bound to different groups are combined."""


class NotInvolutionError(ValueError):
    """Raised when an element is expected to satisfy 2a = 0 but does not."""


class Order(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


@dataclass(frozen=True)
class GroupSpec:
    """The group Z_{n_1} + ... + Z_{n_r}; equality is on the ordered tuple."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(n) for n in self.orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        for n in orders:
            if n < 2:
                raise ValueError(f"cyclic factor order must be >= 2, got {n}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def size(self) -> int:
        return math.prod(self.orders)

    @cached_property
    def exponent(self) -> int:
        """L = lcm(n_1, ..., n_r); every character value is an L-th root of unity."""
        return math.lcm(*self.orders)

    def __len__(self) -> int:
        return self.size

    def __str__(self) -> str:
        return " + ".join(f"Z{n}" for n in self.orders)

    def element(self, coords: int | Iterable[int]) -> GroupElement:
        """Build an element, reducing each coordinate modulo its factor order."""
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ValueError(
                f"expected {self.rank} coordinates for {self}, got {len(coords)}"
            )
        return GroupElement(self, tuple(c % n for c, n in zip(coords, self.orders)))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order."""
        for coords in itertools.product(*(range(n) for n in self.orders)):
            yield GroupElement(self, coords)

    def index(self, x: GroupElement) -> int:
        """Position of ``x`` in the lexicographic enumeration (mixed radix)."""
        _check_same(self, x.spec)
        idx = 0
        for c, n in zip(x.coords, self.orders):
            idx = idx * n + c
        return idx

    def from_index(self, idx: int) -> GroupElement:
        if not 0 <= idx < self.size:
            raise IndexError(idx)
        coords = []
        for n in reversed(self.orders):
            idx, c = divmod(idx, n)
            coords.append(c)
        return GroupElement(self, tuple(reversed(coords)))


@dataclass(frozen=True, order=False)
class GroupElement:
    spec: GroupSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.spec.rank:
            raise ValueError("coordinate count does not match the group rank")
        for c, n in zip(self.coords, self.spec.orders):
            if not 0 <= c < n:
                raise ValueError(f"coordinate {c} is not a canonical residue mod {n}")

    def __add__(self, other: GroupElement) -> GroupElement:
        return add(self, other)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return sub(self, other)

    def __neg__(self) -> GroupElement:
        return neg(self)

    def __mul__(self, k: int) -> GroupElement:
        return GroupElement(
            self.spec, tuple((k * c) % n for c, n in zip(self.coords, self.spec.orders))
        )

    __rmul__ = __mul__

    def __lt__(self, other: GroupElement) -> bool:
        return compare_dot(self, other) is Order.LESS

    def __gt__(self, other: GroupElement) -> bool:
        return compare_dot(self, other) is Order.GREATER

    def __le__(self, other: GroupElement) -> bool:
        return compare_dot(self, other) is not Order.GREATER

    def __ge__(self, other: GroupElement) -> bool:
        return compare_dot(self, other) is not Order.LESS

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "(" + ",".join(map(str, self.coords)) + ")"

    def __repr__(self) -> str:
        return f"GroupElement({self.spec.orders}, {self.coords})"


def _check_same(a: GroupSpec, b: GroupSpec) -> None:
    if a != b:
        raise SpecMismatchError(f"elements belong to different groups: {a} vs {b}")


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same(a.spec, b.spec)
    return GroupElement(
        a.spec, tuple((x + y) % n for x, y, n in zip(a.coords, b.coords, a.spec.orders))
    )


def neg(a: GroupElement) -> GroupElement:
    return GroupElement(a.spec, tuple((-x) % n for x, n in zip(a.coords, a.spec.orders)))


def sub(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same(a.spec, b.spec)
    return GroupElement(
        a.spec, tuple((x - y) % n for x, y, n in zip(a.coords, b.coords, a.spec.orders))
    )


def element_order(a: GroupElement) -> int:
    """Least k >= 1 with k*a = 0."""
    return math.lcm(*(n // math.gcd(n, x) for x, n in zip(a.coords, a.spec.orders)))


def is_involution(a: GroupElement) -> bool:
    return not a.is_zero() and element_order(a) == 2


def involutions(spec: GroupSpec) -> list[GroupElement]:
    """Nonzero elements with 2a = 0, in lexicographic order.

    Each coordinate is either 0 or n_s/2, the latter only for even n_s, so a
    group with e even factors has exactly 2**e - 1 of them.
    """
    choices = [(0, n // 2) if n % 2 == 0 else (0,) for n in spec.orders]
    return [
        GroupElement(spec, coords)
        for coords in itertools.product(*choices)
        if any(coords)
    ]


def compare_dot(x: GroupElement, y: GroupElement) -> Order:
    """Compare at the first differing coordinate, as integers in [0, n_s)."""
    _check_same(x.spec, y.spec)
    for xs, ys in zip(x.coords, y.coords):
        if xs > ys:
            return Order.GREATER
        if xs < ys:
            return Order.LESS
    return Order.EQUAL


def _check_half_coords(a: GroupElement) -> None:
    for c, n in zip(a.coords, a.spec.orders):
        if c != 0 and 2 * c != n:
            raise NotInvolutionError(
                f"{a} is not an involution: coordinate {c} is neither 0 nor {n}/2"
            )


def parity_wt(a: GroupElement, d: GroupElement) -> Parity:
    """Parity of sum_s 2*a_s*d_s/n_s.

    With a_s in {0, n_s/2} every term is 0 or d_s, so the weight reduces to
    the sum of d over the support of ``a``.
    """
    _check_same(a.spec, d.spec)
    _check_half_coords(a)
    total = sum(ds for a_s, ds in zip(a.coords, d.coords) if a_s)
    return Parity(total % 2)


def support_weight_parity(a: GroupElement, x: GroupElement) -> int:
    """Parity class of ``x`` with respect to ``a``: sum of x_s over supp(a), mod 2.

    ``parity_wt(a, x - y)`` is EVEN exactly when x and y share this class,
    because every coordinate in supp(a) has even order.
    """
    return sum(xs for a_s, xs in zip(a.coords, x.coords) if a_s) % 2


def parse_element(spec: GroupSpec, text: str | int | Sequence[int]) -> GroupElement:
    """Parse ``"3"``, ``"1,0,1"``, ``"[1,0,1]"``, ``"(1,0,1)"`` or a sequence.

    For groups of the form Z2^r a bare bitstring such as ``"101"`` is also
    accepted, first character = first coordinate.
    """
    if isinstance(text, int):
        return spec.element(text)
    if not isinstance(text, str):
        return spec.element(text)
    body = text.strip().strip("[]()").strip()
    if not body:
        raise ValueError(f"cannot parse group element from {text!r}")
    if "," in body:
        parts = [p.strip() for p in body.split(",")]
    elif (
        spec.rank > 1
        and all(n == 2 for n in spec.orders)
        and len(body) == spec.rank
        and set(body) <= {"0", "1"}
    ):
        parts = list(body)
    else:
        parts = body.split()
    try:
        coords = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse group element from {text!r}") from None
    return spec.element(coords)
