"""Walsh spectra, bent functions and the cubelike graphs built from them.

Truth tables are indexed little-endian: bit j of the index is variable
z_{j+1}. Cayley coordinates for Z2^k use the same order, coordinate s being
z_{s+1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .groups import GroupElement, GroupSpec
from .oracle import fidelity
from .revival import EngineInconsistencyError, FRCertificate, Verdict, decide_fr
from .spectra import ConnectionSet, full_spectrum, validate_connection_set


@dataclass(frozen=True)
class BooleanFunction:
    arity: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be >= 1")
        table = tuple(int(b) for b in self.table)
        if len(table) != 1 << self.arity:
            raise ValueError(f"truth table needs {1 << self.arity} entries, got {len(table)}")
        if not set(table) <= {0, 1}:
            raise ValueError("truth table entries must be 0 or 1")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_string(cls, text: str, arity: int | None = None) -> BooleanFunction:
        """Parse a 0/1 string (entry 0 first) or a hex string prefixed with ``0x``.

        Hex digits are read as a big integer whose bit i is entry i.
        """
        text = text.strip()
        if text.lower().startswith("0x"):
            value = int(text, 16)
            if arity is None:
                bits = max(1, 4 * (len(text) - 2))
                arity = max(1, (bits - 1).bit_length())
            return cls(arity, tuple((value >> i) & 1 for i in range(1 << arity)))
        bits = [int(ch) for ch in text if ch in "01"]
        if len(bits) != len(text.replace("_", "")):
            raise ValueError(f"not a 0/1 string: {text!r}")
        k = len(bits).bit_length() - 1
        if arity is None:
            arity = k
        return cls(arity, tuple(bits))

    def to_hex(self) -> str:
        value = sum(b << i for i, b in enumerate(self.table))
        return f"0x{value:0{max(1, len(self.table) // 4)}x}"

    def __call__(self, z: Sequence[int]) -> int:
        return self.table[sum((int(b) & 1) << j for j, b in enumerate(z))]

    def support(self) -> list[int]:
        return [i for i, b in enumerate(self.table) if b]


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    values: np.ndarray

    def __getitem__(self, x: int) -> int:
        return int(self.values[x])

    def __len__(self) -> int:
        return len(self.values)


def fwht(values: Sequence[int]) -> list[int]:
    """Unnormalised fast Walsh-Hadamard butterfly on a length-2^k sequence."""
    a = [int(v) for v in values]
    n = len(a)
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x, y = a[j], a[j + h]
                a[j], a[j + h] = x + y, x - y
        h *= 2
    return a


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """W_f(x) = sum_z (-1)^(f(z) + x.z)."""
    signs = [1 - 2 * b for b in f.table]
    return WalshSpectrum(np.array(fwht(signs), dtype=np.int64))


def is_bent(f: BooleanFunction) -> bool:
    if f.arity % 2:
        return False
    flat = 1 << (f.arity // 2)
    return bool(np.all(np.abs(walsh_transform(f).values) == flat))


def mm_bent(m: int) -> BooleanFunction:
    """Maiorana-McFarland bent function z1 z2 + z3 z4 + ... + z_{2m-1} z_{2m} on 2m variables."""
    if m < 1:
        raise ValueError("m must be >= 1")
    k = 2 * m
    table = []
    for idx in range(1 << k):
        acc = 0
        for i in range(m):
            acc ^= ((idx >> (2 * i)) & 1) & ((idx >> (2 * i + 1)) & 1)
        table.append(acc)
    return BooleanFunction(k, tuple(table))


def tan_connection_set(f: BooleanFunction) -> ConnectionSet:
    """S = {(e, z) : e in {0, 1}, f(z) = 1} inside Z2^(k+1), the flag e first."""
    if f.table[0]:
        raise ValueError("f(0) = 1 would put 0 in S_1 and a loop in the graph")
    support = f.support()
    if not support:
        raise ValueError("f is identically zero, so the connection set would be empty")
    k = f.arity
    spec = GroupSpec((2,) * (k + 1))
    elements = [
        spec.element((eps,) + tuple((z >> j) & 1 for j in range(k)))
        for eps in (0, 1)
        for z in support
    ]
    return validate_connection_set(spec, elements)


def predicted_eigenvalue(f: BooleanFunction, walsh: WalshSpectrum, x: GroupElement) -> int:
    """Closed form for the eigenvalues of Cay(Z2^(k+1), tan_connection_set(f)).

    2^k - W_f(0) at x = 0, -W_f(x_1) for x = (0, x_1) with x_1 != 0, and 0
    whenever the flag coordinate of x is 1.
    """
    eps, rest = x.coords[0], x.coords[1:]
    if eps:
        return 0
    idx = sum(b << j for j, b in enumerate(rest))
    if idx == 0:
        return (1 << f.arity) - walsh[0]
    return -walsh[idx]


@dataclass(frozen=True)
class BentRevivalReport:
    m: int
    vertices: int
    certificate: FRCertificate
    oracle_total: float

    @property
    def M(self) -> int:
        return self.certificate.M


def bent_graph_fr(m: int, oracle: bool = True) -> BentRevivalReport:
    """Revival on the cubelike graph of mm_bent(m) between v and v + (1, 0, ..., 0).

    The exact analysis must land on M = 2^(m+1), i.e. t = pi / 2^m. With
    ``oracle`` the fidelity at that time is recomputed by the series engine.
    """
    if m < 2:
        raise ValueError("the bent-function construction needs m >= 2")
    S = tan_connection_set(mm_bent(m))
    spec = S.spec
    a = spec.element((1,) + (0,) * (2 * m))
    decision = decide_fr(S, a, spectrum=full_spectrum(spec, S), evidence_steps=0)
    if decision.verdict is not Verdict.YES:
        raise EngineInconsistencyError(f"expected revival, got {decision.verdict.value}")
    cert = decision.certificate
    if cert.M != 2 ** (m + 1) or cert.time != Fraction(1, 2 ** (m + 1)):
        raise EngineInconsistencyError(f"expected M = {2 ** (m + 1)}, got {cert.M}")
    total = math.nan
    if oracle:
        total = float(fidelity(S, spec.zero(), a, cert.t, engine="series").total)
    return BentRevivalReport(m, spec.size, cert, total)
