"""Exact computation and verification for signed sumsets in finite abelian
groups and the spherical designs they generate.

The library covers four layers: group arithmetic (groups), signed sumsets
and the independence/spanning predicates (sumsets), exact extremal searches
(search) with closed-form shortcuts (formulas), and sphere-side construction
plus verification (sphere).  Bundled classification tables live in tables;
the command line front end is sumsphere.cli.
"""

__version__ = "0.1.0"

from .formulas import (
    delannoy,
    delannoy_table,
    delsarte_bound,
    design3_excluded_sizes,
    design3_nonexistence_interval,
    harmonic_dimension,
    phi2_asymptotic_bounds,
    phi_closed,
    tau3_cyclic,
    tau_asymptotic_bounds,
    tau_closed,
    two_distance_bounds,
)
from .groups import (
    GroupElement,
    GroupSpec,
    all_abelian_groups,
    enumerate_elements,
    exponent,
    label,
    parse_group,
    parse_subset_literal,
    self_inverse_count,
    units,
)
from .search import (
    ProbeCell,
    SearchConfig,
    SearchResult,
    conjecture_probe_perfect,
    find_perfect_sets,
    is_perfect_set,
    phi,
    tau,
    unit_orbit_representative,
)
from .sphere import (
    DesignCheck,
    DistanceSpectrum,
    DualityReport,
    PointSet,
    construct_design_points,
    distance_spectrum,
    duality_check,
    is_t_design_harmonic,
    is_t_design_moments,
    known_configuration,
    load_point_set,
    monomials,
    save_point_set,
    sphere_moment,
)
from .sumsets import (
    Subset,
    SumsetLayers,
    cumulative_sumset,
    independence_number,
    is_Bh,
    is_kl_sum_free,
    is_s_spanning,
    is_t_independent,
    is_zero_h_sum_free,
    signed_sumset,
    spanning_number,
)
from .tables import (
    TableReport,
    TableRow,
    listed_orders,
    load_design3_status,
    load_table,
    published_value,
    reproduce_table,
    reproduce_tau3_formula,
    table_names,
)

__all__ = [
    "__version__",
    "GroupElement",
    "GroupSpec",
    "all_abelian_groups",
    "enumerate_elements",
    "exponent",
    "label",
    "parse_group",
    "parse_subset_literal",
    "self_inverse_count",
    "units",
    "Subset",
    "SumsetLayers",
    "cumulative_sumset",
    "independence_number",
    "is_Bh",
    "is_kl_sum_free",
    "is_s_spanning",
    "is_t_independent",
    "is_zero_h_sum_free",
    "signed_sumset",
    "spanning_number",
    "delannoy",
    "delannoy_table",
    "delsarte_bound",
    "design3_excluded_sizes",
    "design3_nonexistence_interval",
    "harmonic_dimension",
    "phi2_asymptotic_bounds",
    "phi_closed",
    "tau3_cyclic",
    "tau_asymptotic_bounds",
    "tau_closed",
    "two_distance_bounds",
    "ProbeCell",
    "SearchConfig",
    "SearchResult",
    "conjecture_probe_perfect",
    "find_perfect_sets",
    "is_perfect_set",
    "phi",
    "tau",
    "unit_orbit_representative",
    "DesignCheck",
    "DistanceSpectrum",
    "DualityReport",
    "PointSet",
    "construct_design_points",
    "distance_spectrum",
    "duality_check",
    "is_t_design_harmonic",
    "is_t_design_moments",
    "known_configuration",
    "load_point_set",
    "monomials",
    "save_point_set",
    "sphere_moment",
    "TableReport",
    "TableRow",
    "listed_orders",
    "load_design3_status",
    "load_table",
    "published_value",
    "reproduce_table",
    "reproduce_tau3_formula",
    "table_names",
]
