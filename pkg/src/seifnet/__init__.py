"""Seifert surgery network computations around the trefoil T(-3,2)."""
from .homology import CurveClass, Slope, intersection
from .knots import TREFOIL, SurgeryVertex, TorusKnot
from .sfs import OrbifoldTriple, SfsClass, classify_triple
from .torus import moser_classify

__all__ = ["CurveClass", "Slope", "intersection", "TREFOIL", "SurgeryVertex",
           "TorusKnot", "OrbifoldTriple", "SfsClass", "classify_triple", "moser_classify"]
__version__ = "0.1.0"
