"""Unavoidable sets of words and word patterns.

Counting formulas, de Bruijn and pattern-overlap graphs, avoidability
decisions with certificates, and universal cycles for word patterns.
"""

from .avoidability import (
    AvoidabilityReport,
    ProhibitionSet,
    decide,
    decide_patterns,
    decide_words,
    is_free,
    minimal_unavoidable_pattern_set,
    normalize_to_length,
)
from .formulas import (
    cp_bounds,
    euler_phi,
    extremal_lengths,
    identity_check,
    mobius,
    mw_count,
    pattern_count,
    tp_count,
)
from .graphs import (
    WordGraph,
    build_de_bruijn,
    build_pattern_graph,
    export_graph,
    is_acyclic,
    is_chord,
    is_strongly_connected,
    line_graph,
    longest_chordless_path,
)
from .limits import InstanceTooLarge
from .ucycle import (
    Circuit,
    UCycle,
    class_circuits,
    hamiltonian_circuit,
    lower_bound_path,
    ucycle_from_circuit,
    validate_ucycle,
)
from .words import (
    Word,
    conjugacy_class,
    enumerate_patterns,
    is_n_pattern_word,
    is_pattern,
    pattern_conjugacy_classes,
    primitive_decomposition,
)

__version__ = "0.1.0"
