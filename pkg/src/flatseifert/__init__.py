"""Double covers and Z2-indices of free involutions on flat Seifert 3-manifolds."""

from .borsuk_ulam import OddMultiplicityWarning, bu_index, cup_cube, decide
from .catalog import IDS, AmbiguousOrUnknown, catalog, entry, identify
from .covers import CoverReport, double_cover, kernel_presentation_index2, schreier_rewrite
from .equivalence import IncompleteSeparation, partition_epimorphisms, verify_certificate
from .fpgroup import AbelianGroup, Presentation, Word, abelianization, integral_lift, tietze_simplify, z2_characters
from .report import emit, full_classification
from .seifert import SeifertInvariants, build_presentation, derived_invariants, reverse_orientation

__all__ = [
    "AbelianGroup", "AmbiguousOrUnknown", "CoverReport", "IDS", "IncompleteSeparation",
    "OddMultiplicityWarning", "Presentation", "SeifertInvariants", "Word",
    "abelianization", "build_presentation", "bu_index", "catalog", "cup_cube", "decide",
    "derived_invariants", "double_cover", "emit", "entry", "full_classification", "identify",
    "integral_lift", "kernel_presentation_index2", "partition_epimorphisms", "reverse_orientation",
    "schreier_rewrite", "tietze_simplify", "verify_certificate", "z2_characters",
]
