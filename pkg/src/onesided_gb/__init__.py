"""Tagged noncommutative Groebner bases for one-sided ideals of semigroup algebras."""

from .completion import CompletionLimits, CompletionResult, check_local_confluence, complete, interreduce
from .green import GreenContext, classify, ideal_basis, render_eggbox
from .poly import Polynomial, format_poly, parse_poly
from .presentation import Presentation, enumerate_elements, load_presentation, parse_presentation
from .reduction import MixedSystem, normal_form, reduce_once
from .words import Alphabet, Deglex, Tag

__all__ = [
    "Alphabet", "CompletionLimits", "CompletionResult", "Deglex", "GreenContext", "MixedSystem",
    "Polynomial", "Presentation", "Tag", "check_local_confluence", "classify", "complete",
    "enumerate_elements", "format_poly", "ideal_basis", "interreduce", "load_presentation",
    "normal_form", "parse_poly", "parse_presentation", "reduce_once", "render_eggbox",
]

__version__ = "0.1.0"
