"""Concrete value types implementing the digit contract.

Four representations with very different cost profiles:

* :class:`Peano` - unary chains; the slow reference everything else is
  checked against. Kept deliberately naive, so working ranges are small.
* :class:`BitStack` - immutable stacks of bijective digits with
  constant-time push and pop.
* :class:`Hfs` - hereditarily finite sets as canonical trees, doing
  arithmetic through the power-sum reading value(t) = sum of 2**value(c)
  over the children c.
* :class:`BigNat` - arbitrary-precision naturals over 32-bit limbs, with
  limb-level overrides for the heavy operations.
"""

from __future__ import annotations

from typing import Iterator

from .core import DEFAULT_LIMITS, Limits, Numeral, Ordering
from .errors import DomainError, ResourceLimitError

# ----------------------------------------------------------------------
# Peano
# ----------------------------------------------------------------------

# Hard ceiling on materialized chain length; beyond it the process would
# spend its time allocating nodes rather than failing cleanly.
PEANO_MAX_VALUE = 1 << 19


class Peano(Numeral):
    """Unary numeral: a chain of nodes, one per unit.

    Every primitive walks or rebuilds whole chains, so costs grow linearly
    (and derived operations polynomially) with the value. That is the point:
    this is the reference interpretation, not a practical one.
    """

    __slots__ = ("_below",)

    def __init__(self, below: "Peano | None" = None):
        self._below = below

    @classmethod
    def zero(cls) -> "Peano":
        return _PEANO_ZERO

    def is_odd(self) -> bool:
        odd = False
        node = self._below
        while node is not None:
            odd = not odd
            node = node._below
        return odd

    def push0(self) -> "Peano":
        # structural doubling: two fresh nodes per source node, plus one
        n = self._chain_length()
        _check_peano_magnitude(2 * n + 1)
        out = _PEANO_ZERO
        for _ in range(n):
            out = Peano(Peano(out))
        return Peano(out)

    def push1(self) -> "Peano":
        _check_peano_magnitude(2 * self._chain_length() + 2)
        return Peano(self.push0())

    def pop(self) -> "Peano":
        if self._below is None:
            raise DomainError("cannot pop a digit from 0")
        out = _PEANO_ZERO
        for _ in range((self._chain_length() - 1) // 2):
            out = Peano(out)
        return out

    def _chain_length(self) -> int:
        n = 0
        node = self._below
        while node is not None:
            n += 1
            node = node._below
        return n

    def to_int(self) -> int:
        return self._chain_length()

    @classmethod
    def from_int(cls, value: int) -> "Peano":
        if value < 0:
            raise DomainError("naturals only")
        _check_peano_magnitude(value)
        out = _PEANO_ZERO
        for _ in range(value):
            out = Peano(out)
        return out

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Peano):
            return NotImplemented
        a, b = self._below, other._below
        while a is not None and b is not None:
            a, b = a._below, b._below
        return a is None and b is None

    def __hash__(self) -> int:
        return hash(("Peano", self._chain_length()))

    def __repr__(self) -> str:
        return f"<Peano {self._chain_length()}>"


_PEANO_ZERO = Peano()


def _check_peano_magnitude(value: int) -> None:
    if value > PEANO_MAX_VALUE:
        raise ResourceLimitError(
            f"unary chain would exceed {PEANO_MAX_VALUE} nodes"
        )


# ----------------------------------------------------------------------
# BitStack
# ----------------------------------------------------------------------


class BitStack(Numeral):
    """Immutable stack of bijective digits, least significant on top.

    Push and pop are O(1) cons-cell operations; stacks share tails.
    """

    __slots__ = ("_top", "_rest")

    def __init__(self, top: int | None = None, rest: "BitStack | None" = None):
        self._top = top
        self._rest = rest

    @classmethod
    def zero(cls) -> "BitStack":
        return _BITSTACK_EMPTY

    def is_odd(self) -> bool:
        return self._top == 0

    def push0(self) -> "BitStack":
        return BitStack(0, self)

    def push1(self) -> "BitStack":
        return BitStack(1, self)

    def pop(self) -> "BitStack":
        rest = self._rest
        if rest is None:
            raise DomainError("cannot pop a digit from 0")
        return rest

    def is_zero(self) -> bool:
        return self._top is None

    def digits(self) -> Iterator[int]:
        node = self
        while node._top is not None:
            yield node._top
            node = node._rest
    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, BitStack):
            return NotImplemented
        a, b = self, other
        while a._top is not None and b._top is not None:
            if a._top != b._top:
                return False
            a, b = a._rest, b._rest
        return a._top is None and b._top is None

    def __hash__(self) -> int:
        return hash(("BitStack", tuple(self.digits())))

    def __repr__(self) -> str:
        return f"<BitStack [{','.join(str(d) for d in self.digits())}]>"


_BITSTACK_EMPTY = BitStack()


# ----------------------------------------------------------------------
# Hfs
# ----------------------------------------------------------------------

# Node-visit instrumentation for the successor cost bound. Disabled on the
# hot path; enable through measure_succ_visits.
_COUNTING = False
_VISITS = 0


class Hfs(Numeral):
    """Hereditarily finite set as a rooted tree of distinct children.

    Children are kept pairwise distinct and strictly increasing in numeric
    value (canonical form), so structural equality coincides with set
    equality. Constructors trust their callers on this; every operation
    below preserves canonical form, and the text parser normalizes.

    Successor inserts the empty set and resolves collisions by carrying
    upward; predecessor unfolds the least element. Both touch a number of
    nodes within a constant factor of the tree sizes involved, which is why
    a tower-of-exponents magnitude that no positional representation could
    hold is still a one-liner here.
    """

    __slots__ = ("children", "_hash")

    def __init__(self, children: "tuple[Hfs, ...]" = ()):
        self.children = children
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> "Hfs":
        return _HFS_EMPTY

    def is_zero(self) -> bool:
        return not self.children

    def is_odd(self) -> bool:
        # the low binary bit is set iff the least element is the empty set
        cs = self.children
        return bool(cs) and not cs[0].children

    def push0(self) -> "Hfs":
        # 2x+1: bump every exponent, then add the freed slot at 0
        return Hfs(tuple(c.succ() for c in self.children)).succ()

    def push1(self) -> "Hfs":
        return self.push0().succ()

    def pop(self) -> "Hfs":
        if not self.children:
            raise DomainError("cannot pop a digit from 0")
        below = self.pred().children
        if below and not below[0].children:
            below = below[1:]
        return Hfs(tuple(c.pred() for c in below))

    def succ(self) -> "Hfs":
        if _COUNTING:
            _visit()
        carry = _HFS_EMPTY
        cs = self.children
        i = 0
        while i < len(cs):
            if _COUNTING:
                if not _eq_counted(carry, cs[i]):
                    break
            elif carry != cs[i]:
                break
            carry = carry.succ()
            i += 1
        return Hfs((carry,) + cs[i:])

    def pred(self) -> "Hfs":
        if _COUNTING:
            _visit()
        cs = self.children
        if not cs:
            raise DomainError("0 has no predecessor")
        work = list(cs)
        while work[0].children:
            # unfold the least element: 2**k becomes 2**(k-1) + 2**(k-1)
            k = work[0].pred()
            work[0:1] = [k, k]
        return Hfs(tuple(work[1:]))

    def value_at_most(self, bound: int) -> int | None:
        # structural read; never runs arithmetic, so safe on any magnitude
        if not self.children:
            return 0 if bound >= 0 else None
        if bound <= 0:
            return None
        child_bound = bound.bit_length() - 1
        total = 0
        for c in self.children:
            v = c.value_at_most(child_bound)
            if v is None:
                return None
            total += 1 << v
            if total > bound:
                return None
        return total

    def bit_length_at_most(self, bound: int) -> int | None:
        if not self.children:
            return 0
        top = self.children[-1].value_at_most(max(bound - 1, 0))
        if top is None or top + 1 > bound:
            return None
        return top + 1

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Hfs):
            return NotImplemented
        return self.children == other.children

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(("Hfs", self.children))
            self._hash = h
        return h

    def __repr__(self) -> str:
        inner = ",".join(repr(c) for c in self.children)
        return "{" + inner + "}"


_HFS_EMPTY = Hfs()


def _visit(count: int = 1) -> None:
    global _VISITS
    _VISITS += count


def _eq_counted(a: Hfs, b: Hfs) -> bool:
    # structural equality, charging one visit per node pair entered
    _visit()
    if a is b:
        return True
    ca, cb = a.children, b.children
    if len(ca) != len(cb):
        return False
    for x, y in zip(ca, cb):
        if not _eq_counted(x, y):
            return False
    return True


def measure_succ_visits(value: Hfs) -> "tuple[Hfs, int]":
    """Run succ with node-visit counting on; returns (result, visits)."""
    global _COUNTING, _VISITS
    _COUNTING, _VISITS = True, 0
    try:
        out = value.succ()
        return out, _VISITS
    finally:
        _COUNTING = False


def node_count(value: Hfs) -> int:
    """Total tree nodes, the size measure for the succ cost bound."""
    return 1 + sum(node_count(c) for c in value.children)


def singleton_chain(depth: int) -> Hfs:
    """Nested singletons; value grows as a tower of exponents of 2."""
    out = _HFS_EMPTY
    for _ in range(depth):
        out = Hfs((out,))
    return out


# ----------------------------------------------------------------------
# BigNat
# ----------------------------------------------------------------------

LIMB_BITS = 32
_LIMB_MASK = (1 << LIMB_BITS) - 1


class BigNat(Numeral):
    """Arbitrary-precision natural over little-endian 32-bit limbs.

    The limb vector is always normalized: no trailing zero limb, and zero is
    the empty vector. Comparison, subtraction (as absolute difference),
    multiplication, halving, doubling, the bitwise set operations,
    membership, and the powerset recurrence are overridden at limb level;
    everything else runs the generic digit algorithms.
    """

    __slots__ = ("_limbs",)

    def __init__(self, limbs: "tuple[int, ...]" = ()):
        assert (not limbs or limbs[-1] != 0) and all(
            0 <= limb <= _LIMB_MASK for limb in limbs
        ), "denormalized limb vector"
        self._limbs = limbs

    @classmethod
    def zero(cls) -> "BigNat":
        return _BIGNAT_ZERO

    def is_zero(self) -> bool:
        return not self._limbs

    def is_odd(self) -> bool:
        return bool(self._limbs) and bool(self._limbs[0] & 1)

    def push0(self) -> "BigNat":
        shifted = _shl1(self._limbs)
        if shifted:
            shifted[0] |= 1
        else:
            shifted = [1]
        return BigNat(_norm(shifted))

    def push1(self) -> "BigNat":
        return self.push0().succ()

    def pop(self) -> "BigNat":
        if not self._limbs:
            raise DomainError("cannot pop a digit from 0")
        return BigNat(_norm(_shr1(_dec(self._limbs))))

    def succ(self) -> "BigNat":
        return BigNat(_norm(_inc(self._limbs)))

    def pred(self) -> "BigNat":
        if not self._limbs:
            raise DomainError("0 has no predecessor")
        return BigNat(_norm(_dec(self._limbs)))

    def compare(self, other: "BigNat") -> Ordering:
        c = _cmp(self._limbs, other._limbs)
        return Ordering.LT if c < 0 else Ordering.GT if c > 0 else Ordering.EQ

    def subtract(self, other: "BigNat") -> "BigNat":
        # total override: absolute difference
        if _cmp(self._limbs, other._limbs) >= 0:
            return BigNat(_norm(_sub(self._limbs, other._limbs)))
        return BigNat(_norm(_sub(other._limbs, self._limbs)))

    def multiply(self, other: "BigNat") -> "BigNat":
        return BigNat(_mul(self._limbs, other._limbs))

    def double(self) -> "BigNat":
        return BigNat(_norm(_shl1(self._limbs)))

    def half(self) -> "BigNat":
        return BigNat(_norm(_shr1(list(self._limbs))))

    def set_union(self, other: "BigNat", limits: Limits | None = None) -> "BigNat":
        a, b = self._limbs, other._limbs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, limb in enumerate(b):
            merged[i] |= limb
        return BigNat(_norm(merged))

    def set_intersection(
        self, other: "BigNat", limits: Limits | None = None
    ) -> "BigNat":
        return BigNat(
            _norm([x & y for x, y in zip(self._limbs, other._limbs)])
        )

    def set_difference(
        self, other: "BigNat", limits: Limits | None = None
    ) -> "BigNat":
        out = list(self._limbs)
        for i, limb in enumerate(other._limbs[: len(out)]):
            out[i] &= ~limb & _LIMB_MASK
        return BigNat(_norm(out))

    def in_set(self, other: "BigNat", limits: Limits | None = None) -> bool:
        lim = limits or DEFAULT_LIMITS
        index = self.value_at_most(lim.max_member_index)
        if index is None:
            raise ResourceLimitError(
                f"membership bit index exceeds the guard ({lim.max_member_index})"
            )
        limb, bit = divmod(index, LIMB_BITS)
        ys = other._limbs
        return limb < len(ys) and bool((ys[limb] >> bit) & 1)

    def powerset(self, limits: Limits | None = None) -> "BigNat":
        """Iterated xor-with-doubled-self, once per unit of the input."""
        lim = limits or DEFAULT_LIMITS
        n = self.value_at_most(lim.max_exponent)
        if n is None:
            raise ResourceLimitError(
                f"powerset input exceeds the magnitude guard ({lim.max_exponent})"
            )
        if sum(limb.bit_count() for limb in self._limbs) > lim.max_powerset_elems:
            raise ResourceLimitError(
                f"powerset base set larger than the guard "
                f"({lim.max_powerset_elems} elements)"
            )
        out = BigNat((1,))
        for _ in range(n):
            out = powerset_step(out)
        return out

    def to_int(self) -> int:
        total = 0
        for limb in reversed(self._limbs):
            total = (total << LIMB_BITS) | limb
        return total

    @classmethod
    def from_int(cls, value: int) -> "BigNat":
        if value < 0:
            raise DomainError("naturals only")
        limbs = []
        while value:
            limbs.append(value & _LIMB_MASK)
            value >>= LIMB_BITS
        return BigNat(tuple(limbs))

    def value_at_most(self, bound: int) -> int | None:
        if (len(self._limbs) - 1) * LIMB_BITS > bound.bit_length():
            return None
        v = self.to_int()
        return v if v <= bound else None

    def bit_length_at_most(self, bound: int) -> int | None:
        limbs = self._limbs
        if not limbs:
            return 0
        bits = (len(limbs) - 1) * LIMB_BITS + limbs[-1].bit_length()
        return bits if bits <= bound else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigNat):
            return NotImplemented
        return self._limbs == other._limbs

    def __hash__(self) -> int:
        return hash(("BigNat", self._limbs))

    def __repr__(self) -> str:
        return f"<BigNat {self.to_int()}>"


_BIGNAT_ZERO = BigNat()


def powerset_step(value: BigNat) -> BigNat:
    """One unfolding of the powerset recurrence: x xor (x shifted left)."""
    limbs = value._limbs
    shifted = _shl1(limbs)
    for i, limb in enumerate(limbs):
        shifted[i] ^= limb
    return BigNat(_norm(shifted))


def _norm(limbs: "list[int]") -> "tuple[int, ...]":
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return tuple(limbs)


def _cmp(a: "tuple[int, ...]", b: "tuple[int, ...]") -> int:
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def _inc(limbs: "tuple[int, ...]") -> "list[int]":
    out = list(limbs)
    for i, limb in enumerate(out):
        if limb != _LIMB_MASK:
            out[i] = limb + 1
            return out
        out[i] = 0
    out.append(1)
    return out


def _dec(limbs: "tuple[int, ...] | list[int]") -> "list[int]":
    out = list(limbs)
    for i, limb in enumerate(out):
        if limb:
            out[i] = limb - 1
            return out
        out[i] = _LIMB_MASK
    raise AssertionError("decrement of zero")  # callers check


def _sub(a: "tuple[int, ...]", b: "tuple[int, ...]") -> "list[int]":
    # requires a >= b
    out = list(a)
    borrow = 0
    for i in range(len(out)):
        t = out[i] - borrow - (b[i] if i < len(b) else 0)
        borrow = t < 0
        out[i] = t + (1 << LIMB_BITS) if borrow else t
    return out


def _mul(a: "tuple[int, ...]", b: "tuple[int, ...]") -> "tuple[int, ...]":
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b))
    for i, av in enumerate(a):
        if not av:
            continue
        carry = 0
        for j, bv in enumerate(b):
            t = out[i + j] + av * bv + carry
            out[i + j] = t & _LIMB_MASK
            carry = t >> LIMB_BITS
        k = i + len(b)
        while carry:
            t = out[k] + carry
            out[k] = t & _LIMB_MASK
            carry = t >> LIMB_BITS
            k += 1
    return _norm(out)


def _shl1(limbs: "tuple[int, ...]") -> "list[int]":
    out = []
    carry = 0
    for limb in limbs:
        out.append(((limb << 1) | carry) & _LIMB_MASK)
        carry = limb >> (LIMB_BITS - 1)
    if carry:
        out.append(carry)
    return out


def _shr1(limbs: "list[int]") -> "list[int]":
    out = []
    carry = 0
    for limb in reversed(limbs):
        out.append((limb >> 1) | (carry << (LIMB_BITS - 1)))
        carry = limb & 1
    out.reverse()
    return out


# ----------------------------------------------------------------------

REPRESENTATIONS: "dict[str, type[Numeral]]" = {
    "peano": Peano,
    "bitstack": BitStack,
    "hfs": Hfs,
    "bignat": BigNat,
}
