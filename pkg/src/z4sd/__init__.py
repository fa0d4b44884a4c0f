"""Self-dual codes over Z4: bit-plane weight engines, constructions, bounds and a code catalog."""

from z4sd._accel import BACKEND
from z4sd.z4 import Z4Code, Z4Word, dual, is_self_dual, residue, torsion, type_of
from z4sd.gf2 import BinaryCode, BinaryWord

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinaryCode",
    "BinaryWord",
    "Z4Code",
    "Z4Word",
    "dual",
    "is_self_dual",
    "residue",
    "torsion",
    "type_of",
]
