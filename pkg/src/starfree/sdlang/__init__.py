"""BSD(C): disjoint unions, unambiguous products, class intersections and
stars of prefix codes with bounded synchronization delay."""
from .codes import is_prefix_code, min_sync_delay, sync_delay_witness, ambiguity_witness
from .expr import SdSyntaxError, SdValidationError, Validator, parse_sd, simplify, to_text, validate
from .star_elim import star_eliminate, to_starfree
from .synthesis import NotAperiodic, Synthesizer, synthesize_language, synthesize_partition

__all__ = [
    "is_prefix_code", "min_sync_delay", "sync_delay_witness", "ambiguity_witness",
    "SdSyntaxError", "SdValidationError", "Validator", "parse_sd", "simplify", "to_text", "validate",
    "star_eliminate", "to_starfree",
    "NotAperiodic", "Synthesizer", "synthesize_language", "synthesize_partition",
]
