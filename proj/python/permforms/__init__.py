"""Formation-theoretic subgroup analysis for finite permutation groups.

The heavy lifting lives in the compiled extension ``permforms._core``; this
package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    ConstructionError,
    Formation,
    Group,
    InputError,
    Permutation,
    ResourceError,
    Subgroup,
    __version__,
    alternating,
    belongs,
    build_example_864,
    builtin_corpus,
    carter_subgroups,
    core,
    cyclic,
    derived_series_orders,
    derived_subgroup,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    fitting_subgroup,
    formation,
    formation_pi,
    frattini_subgroup,
    group,
    hall_pprime_subgroup,
    is_f_abnormal,
    is_f_projector,
    is_f_subnormal,
    is_minimal_non_f,
    is_nilpotent,
    is_schmidt_group,
    is_self_normalizing,
    is_soluble,
    isomorphic,
    load_group_file,
    maximal_subgroups,
    normal_subgroups,
    normalizer,
    pi_of_group,
    primary_cyclic_subgroups,
    quaternion,
    quotient,
    residual,
    subgroup,
    subgroup_classes,
    sylow_subgroup,
    symmetric,
    trivial_subgroup,
    verify_corollary,
    verify_lemmas,
    verify_theorem,
    whole_subgroup,
)
