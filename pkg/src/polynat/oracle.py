"""Brute-force referees over native machine-scale integers.

Everything here recomputes its answer from first principles, without calling
into the digit contract or any representation's arithmetic, so agreement
between the library and this module is evidence rather than tautology. The
input domain is capped at a 63-bit word; set encodings necessarily escape
that range (a powerset of a 12-bit number is a 4096-bit number), so codec
outputs are plain Python integers while word arithmetic stays guarded.
"""

from __future__ import annotations

from .core import Ordering
from .errors import OracleOverflowError, ResourceLimitError
from .interpretations import Hfs

WORD_MAX = (1 << 63) - 1


def _word(value: int, context: str) -> int:
    if value > WORD_MAX:
        raise OracleOverflowError(f"{context} left the word range")
    return value


def word_add(x: int, y: int) -> int:
    return _word(x + y, "add")


def word_sub(x: int, y: int) -> int:
    if y > x:
        raise OracleOverflowError("sub underflow")
    return x - y


def word_mul(x: int, y: int) -> int:
    return _word(x * y, "mul")


def word_pow(x: int, y: int) -> int:
    return _word(x**y, "pow")


def word_exp2(x: int) -> int:
    if x > 62:
        raise OracleOverflowError("exp2 left the word range")
    return 1 << x


def word_double(x: int) -> int:
    return _word(2 * x, "double")


def word_half(x: int) -> int:
    return x // 2


def word_cmp(x: int, y: int) -> Ordering:
    return Ordering.LT if x < y else Ordering.GT if x > y else Ordering.EQ


_WORD_OPS = {
    "add": word_add,
    "sub": word_sub,
    "mul": word_mul,
    "pow": word_pow,
    "exp2": word_exp2,
    "double": word_double,
    "half": word_half,
    "cmp": word_cmp,
}


def word_arith(op: str, x: int, y: int | None = None):
    """Dispatch by operation tag; unary tags ignore y."""
    fn = _WORD_OPS[op]
    if op in ("exp2", "double", "half"):
        return fn(x)
    return fn(x, y)


def nat_of_hfs(tree: Hfs) -> int:
    """Power-sum evaluation of a set tree: 0 for the empty set, else the
    sum of 2**nat_of_hfs(child). Direct recursion, no digit operations."""
    total = 0
    for child in tree.children:
        exponent = nat_of_hfs(child)
        if exponent > 63:
            raise OracleOverflowError("set tree evaluates past the word range")
        total += 1 << exponent
    return _word(total, "nat_of_hfs")


def hfs_of_nat(value: int) -> Hfs:
    """Inverse of nat_of_hfs: one child per set bit, children ascending."""
    children = []
    position = 0
    while value:
        if value & 1:
            children.append(hfs_of_nat(position))
        value >>= 1
        position += 1
    return Hfs(tuple(children))


def brute_powerset(value: int) -> int:
    """Sum of 2**s over the encodes s of every subset of value's bits.

    Enumerates the subsets explicitly. The output exceeds the word range by
    design; only the base-set size is guarded.
    """
    positions = [i for i in range(value.bit_length()) if (value >> i) & 1]
    if len(positions) > 24:
        raise ResourceLimitError("brute powerset capped at 24 base elements")
    encodes = [0]
    for p in positions:
        term = 1 << p
        encodes += [e + term for e in encodes]
    return sum(1 << e for e in encodes)


def bijective_digits_of_nat(value: int) -> list[int]:
    """Bijective base-2 digits, least significant first.

    Derived from the definition: the binary digits of value+1 with the
    leading 1 removed.
    """
    m = value + 1
    return [(m >> i) & 1 for i in range(m.bit_length() - 1)]


def nat_of_bijective_digits(digits: list[int]) -> int:
    """Inverse reading: prepend the leading 1, interpret in binary, drop 1."""
    m = 1
    for d in reversed(digits):
        if d not in (0, 1):
            raise ValueError(f"not a bijective digit: {d!r}")
        m = m * 2 + d
    return m - 1
