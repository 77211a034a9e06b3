"""Natural numbers and hereditarily finite sets over one digit contract.

Four interchangeable representations (unary chains, bijective bit-stacks,
set trees, limb bignums) implement five primitive operations; arithmetic,
ordering and finite-set theory are derived generically on top and
cross-validated against brute-force referees.
"""

from .core import (
    DEFAULT_LIMITS,
    Limits,
    Numeral,
    Ordering,
    convert,
    lift_set_op1,
    lift_set_op2,
)
from .errors import (
    DomainError,
    DuplicateElementError,
    OracleOverflowError,
    ParseError,
    PolynatError,
    ResourceLimitError,
)
from .interpretations import (
    BigNat,
    BitStack,
    Hfs,
    Peano,
    REPRESENTATIONS,
    measure_succ_visits,
    node_count,
    powerset_step,
    singleton_chain,
)

__all__ = [
    "BigNat",
    "BitStack",
    "DEFAULT_LIMITS",
    "DomainError",
    "DuplicateElementError",
    "Hfs",
    "Limits",
    "Numeral",
    "OracleOverflowError",
    "Ordering",
    "ParseError",
    "Peano",
    "PolynatError",
    "REPRESENTATIONS",
    "ResourceLimitError",
    "convert",
    "lift_set_op1",
    "lift_set_op2",
    "measure_succ_visits",
    "node_count",
    "powerset_step",
    "singleton_chain",
]
