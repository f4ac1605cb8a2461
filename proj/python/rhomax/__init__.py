"""Maximum spectral radius of simple digraphs with a prescribed number of arcs.

Thin Python surface over the C++ core: digraph construction, Perron power
iteration, the extremal digraph D# and its cubic, upper-bound audits, and the
canonical D** enumeration/verification sweeps.
"""

from rhomax._core import (
    ArcDecomposition,
    BoundTrace,
    CanonicalForm,
    Digraph,
    SpectralResult,
    VerificationReport,
    __version__,
    bound_trace,
    brute_max_rho,
    build_dsharp,
    clique_number,
    coarse_bound,
    decompose_arcs,
    dsharp_cubic_root,
    enumerate_dss,
    frc_solve,
    inequality3_bound,
    is_member_dss,
    is_strongly_connected,
    lu_bound,
    parse_digraph,
    remove_isolated,
    rewire_to_dss,
    rho_closed_form,
    rho_dsharp,
    spectral_norm,
    spectral_radius,
    strongly_connected_components,
    verify_conjecture,
)

__all__ = [
    "ArcDecomposition",
    "BoundTrace",
    "CanonicalForm",
    "Digraph",
    "SpectralResult",
    "VerificationReport",
    "__version__",
    "bound_trace",
    "brute_max_rho",
    "build_dsharp",
    "clique_number",
    "coarse_bound",
    "decompose_arcs",
    "dsharp_cubic_root",
    "enumerate_dss",
    "frc_solve",
    "inequality3_bound",
    "is_member_dss",
    "is_strongly_connected",
    "lu_bound",
    "parse_digraph",
    "remove_isolated",
    "rewire_to_dss",
    "rho_closed_form",
    "rho_dsharp",
    "spectral_norm",
    "spectral_radius",
    "strongly_connected_components",
    "verify_conjecture",
]
