"""Twisted conjugacy classes, Reidemeister numbers and spectra of finite groups.

Groups are Cayley tables with identity 0; homomorphisms are full element
maps.  Endomorphisms of direct products can be given as matrices of
homomorphisms between the factors, and the formulas for diagonal,
permuted-diagonal and block-triangular endomorphisms are checked against
direct computation.
"""
from .errors import (
    CommutingConditionViolated,
    DomainMismatch,
    FactorMismatch,
    FactorsNotIdentical,
    GroupTableError,
    HypothesisViolated,
    ImagesDoNotCommute,
    NoIdentity,
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotAutomorphism,
    NotClosed,
    NotInvariant,
    NotNormal,
    OrderCapExceeded,
    SearchBudgetExceeded,
    TwconjError,
    UnknownPreset,
)
from .extnat import INF, ExtNat, Spectrum
from .finite_group import (
    FiniteGroup,
    ProductGroup,
    Subgroup,
    alternating,
    catalog,
    center,
    conjugacy_classes,
    cyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    klein4,
    load_group_json,
    parse_group_spec,
    preset,
    quaternion8,
    symmetric,
)
from .hom_engine import (
    GroupHom,
    compose,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    enumerate_homs,
    hom_from_generator_images,
    identity_hom,
    inner_automorphism,
    pointwise_product,
    trivial_hom,
)
from .product_matrix import (
    EndoMatrix,
    block_endo,
    block_matrix,
    cyclic_shift_check,
    diag,
    diag_reidemeister,
    endo_from_spec,
    from_matrix,
    matrix_multiply,
    perm_endo,
    permuted_diag_endo,
    permuted_diag_reidemeister,
    sum_formula_reidemeister,
    to_matrix,
    wreath_embed,
    wreath_multiply,
)
from .reports import Report
from .spectra import check_product_containment, check_wreath_spectrum_equality, nfold_union, spectrum_product
from .structure import (
    characteristic_factor_check,
    is_centerless,
    is_directly_indecomposable,
    johnson_decomposition_check,
    spectrum_of_centreless_product,
)
from .twisted import (
    fixed_points,
    jabara_bound,
    quotient_endo,
    reidemeister_number,
    reidemeister_partition,
    reidemeister_spectrum,
    twisted_stabilizer,
)

__version__ = "0.1.0"
