"""Synchronization languages over tagged input/output alphabets and the
relations they define."""

from .automata import Dfa, Nfa
from .autorel import AutomaticRelation, RecognizableDecomposition, from_sync_fsl, is_recognizable
from .definability import (allsync_regular, decide_definability, is_prefix_recognizable,
                           is_unambiguous, maxsync_regular, minsync_regular, minsync_tt)
from .syncword import IN, OUT, Letter, TaggedAlphabet, classify, word_metrics
from .uniform import has_recognizable_uniformization, synthesize_recognizable_uniformizer
from .verdict import NO, UNKNOWN, YES, Verdict

__version__ = "0.1.0"

__all__ = [
    "Dfa", "Nfa", "AutomaticRelation", "RecognizableDecomposition", "from_sync_fsl",
    "is_recognizable", "allsync_regular", "decide_definability", "is_prefix_recognizable",
    "is_unambiguous", "maxsync_regular", "minsync_regular", "minsync_tt", "IN", "OUT",
    "Letter", "TaggedAlphabet", "classify", "word_metrics", "has_recognizable_uniformization",
    "synthesize_recognizable_uniformizer", "NO", "UNKNOWN", "YES", "Verdict",
]
