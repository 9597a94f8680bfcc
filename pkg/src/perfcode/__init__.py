"""Subgroup perfect codes of finite permutation groups."""

from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    HypothesisError,
    NotInGroupError,
    ParseError,
    PerfCodeError,
)
from .oracle import ConnectionSet, find_admissible_connection_set, verify_witness
from .perfectcode import (
    PerfectCodeReport,
    basic_criterion,
    equivalent_criterion,
    hxz_criterion,
    is_perfect_code,
)
from .permgroup import (
    Permutation,
    PermutationGroup,
    Subgroup,
    closure,
    generated_subgroup,
    parse_cycles,
    sylow,
)
from .psl2 import psl2, theorem_psl_classify

__version__ = "0.1.0"
