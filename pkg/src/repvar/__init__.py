"""Irreducible components of module varieties over truncated path algebras."""

from .algebra import Arrow, PathWord, Quiver, TruncatedAlgebra, arrow_multiplicity, local_algebra, nonzero_paths
from .components import (
    ComponentDescriptor,
    LayeredPair,
    generic_socle_layering,
    is_component_layering,
    kronecker_schur_hint,
    local_components,
    minimal_radsoc_candidates,
    schur_root,
    simple_summand_check,
)
from .deform import DeformationFamily, GradedMapData, graded_point, push_down_family, tail_extension_family
from .layers import SemisimpleSequence, dominance_leq, enumerate_realizable, realizable
from .repmod import (
    FieldSpec,
    ModulePoint,
    check_point,
    dual_module,
    endomorphism_algebra,
    is_indecomposable,
    loewy_full_support_check,
    path_nullity,
    radical_layering,
    radsoc_pair,
    socle_layering,
)
from .skeleta import PresentationTemplate, Skeleton, enumerate_skeleta, presentation_template, sample_module

__version__ = "0.1.0"
