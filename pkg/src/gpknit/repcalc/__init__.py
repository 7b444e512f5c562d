"""Exact module calculus over quadratic monomial algebras."""

from .generic import (
    HomTable,
    IsoResult,
    end_semisimple_rank,
    is_isomorphic,
    is_local,
    is_exact_short,
    is_left_almost_split,
    is_retraction,
    is_right_almost_split,
    is_split_short,
    radical_basis,
)
from .homological import (
    GpCertificate,
    ext1_dim,
    ext1_dim_cocycles,
    ext1_dims,
    gp_certificate_periodic,
    is_injective,
    stable_hom_dim,
    try_gp_certificate,
)
from .modules import (
    ModuleMap,
    Representation,
    cokernel,
    compose,
    cover_summands,
    direct_sum,
    hom_dim,
    hom_space,
    identity_map,
    image,
    is_projective,
    kernel,
    path_ideal_module,
    projective,
    projective_cover,
    radical,
    regular_module,
    simple,
    syzygy,
    syzygy_sequence,
    zero_map,
    zero_module,
)
from .morph import (
    Chain,
    ChainMap,
    MorphObject,
    chain_direct_sum,
    chain_hom_space,
    chain_identity,
    morph_hom_space,
)


def morph_is_isomorphic(x: MorphObject, y: MorphObject, seed: int = 0) -> IsoResult:
    return is_isomorphic(x, y, seed)
