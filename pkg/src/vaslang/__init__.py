"""Unboundedness analyses for labeled Petri-net / VAS languages.

The toolkit computes a regular over-approximation of a net's language
through a KLMST-style decomposition into perfect marked graph-transition
sequences and evaluates unboundedness predicates on the approximation.
"""

from .numeric import OMEGA

__all__ = ["OMEGA"]
