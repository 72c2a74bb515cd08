"""Braid group homomorphisms: word problem, curves, standard maps and cabling normalization."""

from .braid import (
    DEFAULT_FUEL,
    BraidWord,
    Named,
    Permutation,
    Subgroup,
    UndecidedError,
    commutes,
    forget_strands,
    format_word,
    gorin_lin_generators,
    is_trivial,
    linking_numbers,
    membership,
    named,
    parse_word,
    sigma,
    words_equal,
)
from .cabling import (
    CableStructure,
    CablingClassification,
    CablingError,
    CrossedVector,
    SemidirectElement,
    beta,
    classify_cabling,
    crossed_vector,
    decompose,
    embed_F,
    interior_writhe,
    iota,
)
from .curves import (
    CurveSpec,
    Multicurve,
    Verdict,
    curves_disjoint,
    curves_equal,
    dehn_twist_word,
    enumerate_curves,
    half_twist_word,
    rotation_intersection_report,
    rotation_multicurve_report,
)
from .homs import (
    Fingerprint,
    Homomorphism,
    Kind,
    RelationError,
    StandardKind,
    apply_hom,
    centralizer_generators,
    compose_hom,
    fingerprint,
    standard_hom,
    transvect,
    verify_hom,
)
from .laminations import LaminationCoords, apply_word, mod_center_equal, standard_curve_coords
from .screens import corollary_range_check, special_constraint, sym_hom_enumerate

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_FUEL",
    "BraidWord",
    "Named",
    "Permutation",
    "Subgroup",
    "UndecidedError",
    "commutes",
    "forget_strands",
    "format_word",
    "gorin_lin_generators",
    "is_trivial",
    "linking_numbers",
    "membership",
    "named",
    "parse_word",
    "sigma",
    "words_equal",
    "CableStructure",
    "CablingClassification",
    "CablingError",
    "CrossedVector",
    "SemidirectElement",
    "beta",
    "classify_cabling",
    "crossed_vector",
    "decompose",
    "embed_F",
    "interior_writhe",
    "iota",
    "CurveSpec",
    "Multicurve",
    "Verdict",
    "curves_disjoint",
    "curves_equal",
    "dehn_twist_word",
    "enumerate_curves",
    "half_twist_word",
    "rotation_intersection_report",
    "rotation_multicurve_report",
    "Fingerprint",
    "Homomorphism",
    "Kind",
    "RelationError",
    "StandardKind",
    "apply_hom",
    "centralizer_generators",
    "compose_hom",
    "fingerprint",
    "standard_hom",
    "transvect",
    "verify_hom",
    "LaminationCoords",
    "apply_word",
    "mod_center_equal",
    "standard_curve_coords",
    "corollary_range_check",
    "special_constraint",
    "sym_hom_enumerate",
]
