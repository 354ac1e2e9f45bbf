"""Exact computational toolkit for torus stability, eigenvalue inequalities,
moment polytopes, and fixed-point localization."""

from .lie import (
    GitkitError,
    WeylElement,
    dominantize,
    rho,
    weyl_orbit,
)
from .characters import (
    LaurentPoly,
    bwb_cohomology,
    invariant_dim,
    tensor_decompose,
    weyl_character,
    weyl_dim,
)
from .puzzles import (
    associativity_check,
    check_filling,
    count_puzzles,
    enumerate_puzzles,
    lr_coefficient,
)
from .horn import (
    check_triple,
    generate_horn_system,
    jacobi_eigenvalues,
    polygon_nonempty,
    sample_hermitian_validate,
    sl2_config_semistable,
)
from .stability import (
    ProjPoint,
    classify_stability,
    critical_types,
    hm_slope,
    kempf_ness,
    max_destabilizing,
    minimize_kempf_ness,
    moment_map,
    proj_point,
)
from .polytopes import (
    Polytope,
    brianchon_gram_check,
    hull,
    is_delzant,
    kostant_polytope,
    lattice_points,
    normal_fan,
    symplectic_cut,
)
from .localization import (
    ConeSeries,
    Term,
    blowup_chi,
    evaluate,
    expand_in_box,
    p1_chi,
    p1_kn_identity,
    rational_eq,
    vertex_sum,
    weyl_via_localization,
)

__version__ = "0.1.0"
