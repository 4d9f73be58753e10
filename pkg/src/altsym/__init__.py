"""Black-box recognition of alternating and symmetric groups."""
from .blackbox import GroupOracle, OpCounters, RecognitionFailed
from .perm import GroupSpec, Permutation, shroud
from .recognizer import RecognitionOutcome, recognise

__all__ = ["GroupOracle", "GroupSpec", "OpCounters", "Permutation", "RecognitionFailed",
           "RecognitionOutcome", "recognise", "shroud"]
