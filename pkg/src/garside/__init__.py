"""Conjugacy in Garside groups of finite type via cyclic sliding.

The package is generic over a :class:`~garside.contract.GarsideContext`
describing a structure by its atoms and atom-division operations; the
Artin braid groups are provided as the concrete instance
(:func:`~garside.braid.braid_context`).
"""

from .braid import (
    BraidContext,
    BraidWord,
    WordParseError,
    braid_context,
    element_from_word,
    parse_word,
    word_from_element,
)
from .contract import Atom, GarsideContext, OpCounter, Simple
from .conjugacy import (
    Circuit,
    ConjugacyResult,
    RunStats,
    SCGraph,
    TransportCycle,
    arrows_at,
    circuit_of,
    enumerate_sc,
    iterated_pullback_to_repetition,
    naive_sc,
    naive_solve,
    slide_to_circuit,
    solve_conjugacy,
    transport_cycle,
)
from .elements import (
    Element,
    atom_element,
    delta_power_element,
    gcd_elements,
    identity_element,
    lcm_elements,
    left_divides,
    normalize,
    positive_part,
    positive_prefix,
    rgcd_elements,
    right_divides,
    rlcm_elements,
    simple_element,
)
from .errors import (
    ContextMismatchError,
    GarsideError,
    InternalInvariantError,
    OracleSizeError,
)
from .sliding import (
    Trajectory,
    cyclic_right_sliding,
    cyclic_sliding,
    is_rigid,
    minimal_sss_conjugator,
    preferred_prefix,
    preferred_suffix,
    pullback_step,
    right_transport,
    slide_to_first_repetition,
    transport,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
