"""Skew PBW extensions over exact fields: arithmetic, classification,
gradings, and bounded Koszulity certificates."""

from .basering import (
    BaseElement,
    BaseRing,
    BaseRingSpec,
    DerMap,
    EndoMap,
    FieldSpec,
    apply_der,
    apply_endo,
    base_mul,
    validate_base_spec,
)
from .classify import ClassificationReport, augmentation_split, base_extend, classify, constant_term, inflate_module
from .errors import (
    BaseSpecError,
    InconclusiveError,
    MapError,
    ParseError,
    PreconditionError,
    RingMismatchError,
    SpbwError,
    ValidationError,
)
from .fileformat import format_presentation, load_presentation, parse_presentation
from .gradings import (
    GradingSpec,
    associated_quasicommutative,
    grading_dims,
    homogeneity_check,
    radical_commutation_check,
    radical_quotient,
)
from .koszul import (
    KoszulCertificate,
    abar_equivalence_check,
    base_koszul_resolution,
    koszul_certificate,
    minimal_resolution,
    tensor_resolution_check,
)
from .skewcore import (
    Presentation,
    Relation,
    SkewElement,
    add,
    filtration_degree,
    multiply,
    normal_form,
    principal_symbol,
    validate_presentation,
)
from .window import GradedWindow, build_window

__version__ = "0.1.0"
