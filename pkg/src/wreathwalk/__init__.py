"""Exact spectra, distance bounds, and Monte Carlo for transposition-style
random walks on wreath products G wr S_n."""

from .bounds import (
    distance_curve,
    envelope_decay_certificate,
    independent_envelope_holds,
    l2n_sq_collapsed,
    l2n_sq_collapsed_bounds,
    mixing_threshold,
    paired_relaxed_bound,
    threshold_rows,
    tv_lower_chebyshev_sym,
    tv_lower_dominant,
    tv_upper_coupling,
    tv_upper_spectral,
)
from .groups import GroupTable, build_group, cyclic_group, symmetric_group
from .partitions import (
    Partition,
    char_ratio_transposition,
    conjugate,
    dim_hook,
    dim_partition,
    enumerate_partitions,
    mn_character,
    partition_count,
    partitions_of,
    sn_character_table,
)
from .reps import IrrepLabel, count_labels, enumerate_labels, irrep_dimension
from .simulate import (
    CouplingReport,
    SimConfig,
    coupling_experiment,
    discrete_coupling_tail,
    empirical_tv,
    run_walk,
    run_walk_indices,
)
from .walks import (
    Spectrum,
    WalkMeasure,
    build_measure,
    eigenvalue,
    l2n_sq_spectral,
    return_probability,
    spectrum,
)
from .wreath import WreathElement, build_wreath_table, wreath_multiply, wreath_order

__all__ = [
    "CouplingReport",
    "GroupTable",
    "IrrepLabel",
    "Partition",
    "SimConfig",
    "Spectrum",
    "WalkMeasure",
    "WreathElement",
    "build_group",
    "build_measure",
    "build_wreath_table",
    "char_ratio_transposition",
    "conjugate",
    "count_labels",
    "coupling_experiment",
    "cyclic_group",
    "dim_hook",
    "dim_partition",
    "discrete_coupling_tail",
    "distance_curve",
    "eigenvalue",
    "empirical_tv",
    "enumerate_labels",
    "enumerate_partitions",
    "envelope_decay_certificate",
    "independent_envelope_holds",
    "irrep_dimension",
    "l2n_sq_collapsed",
    "l2n_sq_collapsed_bounds",
    "l2n_sq_spectral",
    "mixing_threshold",
    "mn_character",
    "paired_relaxed_bound",
    "partition_count",
    "partitions_of",
    "return_probability",
    "run_walk",
    "run_walk_indices",
    "sn_character_table",
    "spectrum",
    "symmetric_group",
    "threshold_rows",
    "tv_lower_chebyshev_sym",
    "tv_lower_dominant",
    "tv_upper_coupling",
    "tv_upper_spectral",
    "wreath_multiply",
    "wreath_order",
]

__version__ = "0.1.0"
