"""
jhp_lab: torsion-free classes of type-A quivers, Grothendieck monoids
and Jordan-Hoelder diagnostics, with a brute-force representation oracle
over the two-element field.
"""

from . import gf2, grothendieck, monoid, nakayama, regress, repkit, symgroup, typea

__version__ = "0.1.0"

__all__ = [
    "gf2",
    "grothendieck",
    "monoid",
    "nakayama",
    "regress",
    "repkit",
    "symgroup",
    "typea",
    "__version__",
]
