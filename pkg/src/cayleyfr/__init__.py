"""Fractional revival, perfect state transfer and periodicity on abelian Cayley graphs."""

__version__ = "0.1.0"

from .groups import (
    GroupElement,
    GroupSpec,
    Order,
    Parity,
    compare_dot,
    element_order,
    involutions,
    parity_wt,
)
from .cyclotomic import CyclotomicInt, as_integer, canonical_reduce, cyclotomic_polynomial, root
from .spectra import (
    ConnectionSet,
    Spectrum,
    adjacency_matrix,
    character,
    eigenvalue,
    full_spectrum,
    transition_entry,
    transition_matrix_spectral,
    validate_connection_set,
)
from .oracle import expm_series, fidelity, scan_max_fidelity
from .revival import (
    Classification,
    FRCertificate,
    FRDecision,
    Verdict,
    build_N,
    circulant_fr,
    cubelike_fr,
    decide_fr,
    search_all_fr,
)
from .bent import bent_graph_fr, is_bent, mm_bent, tan_connection_set, walsh_transform
