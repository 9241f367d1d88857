"""Capacity regions of entanglement-breaking channels under unreliable
entanglement assistance."""

from ._core import (
    EbcapError,
    EncodingEnsemble,
    KrausChannel,
    SweepConfig,
    apply,
    binary_convolution,
    choi,
    choi_ppt_min_eigenvalue,
    closed_form_point,
    convex_hull_upper,
    depol_ensemble,
    depolarizing,
    ea_capacity,
    eigvals_hermitian,
    entropy_vn,
    frontier_sweep,
    gap_report,
    h2,
    identity_channel,
    is_entanglement_breaking_qubit,
    joint_output_spectrum,
    load_channel,
    maximally_entangled,
    mutual_info,
    partial_trace,
    rate_triple,
    rectangle_corner,
    relabel_for_trapezoid,
    run_suite,
    save_channel,
    shannon_entropy,
    tensor,
    time_share,
    trapezoid_corners,
    unassisted_capacity,
)
from ._core import __version__

__all__ = [
    "EbcapError",
    "EncodingEnsemble",
    "KrausChannel",
    "SweepConfig",
    "apply",
    "binary_convolution",
    "choi",
    "choi_ppt_min_eigenvalue",
    "closed_form_point",
    "convex_hull_upper",
    "depol_ensemble",
    "depolarizing",
    "ea_capacity",
    "eigvals_hermitian",
    "entropy_vn",
    "frontier_sweep",
    "gap_report",
    "h2",
    "identity_channel",
    "is_entanglement_breaking_qubit",
    "joint_output_spectrum",
    "load_channel",
    "maximally_entangled",
    "mutual_info",
    "partial_trace",
    "rate_triple",
    "rectangle_corner",
    "relabel_for_trapezoid",
    "run_suite",
    "save_channel",
    "shannon_entropy",
    "tensor",
    "time_share",
    "trapezoid_corners",
    "unassisted_capacity",
    "__version__",
]
