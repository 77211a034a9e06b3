"""The digit contract and every algorithm derivable from it.

A value is a finite string of bijective base-2 digits, least significant
first: pushing digit 0 maps k to 2k+1, pushing digit 1 maps k to 2k+2, and
the empty string is 0. Five primitives (``zero``, ``is_odd``, ``push0``,
``push1``, ``pop``) are enough to express successor, predecessor, addition,
subtraction, a total order, multiplication, exponentiation, and the whole
finite-set calculus induced by reading a number as the set of exponents of
its binary expansion. Everything below the primitives is written once,
against the contract, and inherited by each concrete representation;
representations may override individual operations with faster equivalents.

Recursions whose depth scales with the digit count are written as explicit
loops so that large magnitudes never touch the interpreter stack limit.
"""

from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .errors import DomainError, DuplicateElementError, ResourceLimitError

N = TypeVar("N", bound="Numeral")


class Ordering(enum.Enum):
    """Three-valued comparison result."""

    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Limits:
    """Guards for operations whose results can grow as exponent towers.

    Exceeding a guard raises :class:`ResourceLimitError` instead of hanging
    or exhausting memory. All bounds are inclusive.
    """

    max_exponent: int = 1 << 20
    """Largest exponent value accepted by exp2, and the iteration bound for
    pow, powerset and nth_ordinal."""

    max_powerset_elems: int = 24
    """Largest base-set size accepted by powerset."""

    max_member_index: int = 1 << 32
    """Largest element value accepted by bit-indexed membership tests."""

    max_unary_value: int = 100_000
    """Largest decimal allowed to materialize as a unary chain."""

    max_parse_depth: int = 10_000
    """Nesting bound for the set-notation parser."""

    max_print_bits: int = 8192
    """Largest magnitude (in bits) rendered as a decimal string."""


DEFAULT_LIMITS = Limits()


class Numeral(ABC):
    """A natural number seen through five primitive digit operations.

    Values are immutable after construction and freely shareable; every
    operation is a pure function of its inputs. Subclasses must implement
    the five primitives plus structural ``__eq__``/``__hash__``, where
    structural equality agrees with equality of the represented values.
    """

    __slots__ = ()

    # ------------------------------------------------------------------
    # the primitive contract
    # ------------------------------------------------------------------

    @classmethod
    @abstractmethod
    def zero(cls: type[N]) -> N:
        """The empty digit string, denoting 0."""

    @abstractmethod
    def is_odd(self) -> bool:
        """True iff the lowest bijective digit is 0, i.e. the value is 2k+1."""

    @abstractmethod
    def push0(self: N) -> N:
        """Append a low digit 0: k -> 2k+1."""

    @abstractmethod
    def push1(self: N) -> N:
        """Append a low digit 1: k -> 2k+2."""

    @abstractmethod
    def pop(self: N) -> N:
        """Drop the lowest digit: 2k+1 -> k and 2k+2 -> k.

        Raises :class:`DomainError` on 0, which has no digits.
        """

    # ------------------------------------------------------------------
    # derived recognizers and constants
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self == self.zero()

    def is_even_nonzero(self) -> bool:
        """True iff the lowest bijective digit is 1, i.e. the value is 2k+2."""
        return not (self.is_odd() or self.is_zero())

    @classmethod
    def one(cls: type[N]) -> N:
        return cls.zero().push0()

    def is_one(self) -> bool:
        return self.is_odd() and self.pop().is_zero()

    # ------------------------------------------------------------------
    # successor and predecessor
    # ------------------------------------------------------------------

    def succ(self: N) -> N:
        """The next value. Carries while the low digit is 1."""
        carries = 0
        x = self
        while x.is_even_nonzero():
            x = x.pop()
            carries += 1
        out = x.one() if x.is_zero() else x.pop().push1()
        for _ in range(carries):
            out = out.push0()
        return out

    def pred(self: N) -> N:
        """The previous value. Borrows while the low digit is 0.

        Raises :class:`DomainError` on 0.
        """
        if self.is_zero():
            raise DomainError("0 has no predecessor")
        carries = 0
        x = self
        while x.is_odd() and not x.is_one():
            x = x.pop()
            carries += 1
        out = x.zero() if x.is_one() else x.pop().push0()
        for _ in range(carries):
            out = out.push1()
        return out

    # ------------------------------------------------------------------
    # addition and subtraction
    # ------------------------------------------------------------------

    def add(self: N, other: N) -> N:
        """Digit-wise sum with carry; 0 is the identity."""
        x, y = self, other
        # 0: push1, 1: push0 after succ, 2: push1 after succ
        wraps: list[int] = []
        while True:
            if x.is_zero():
                acc = y
                break
            if y.is_zero():
                acc = x
                break
            xo, yo = x.is_odd(), y.is_odd()
            wraps.append(0 if xo and yo else 1 if xo != yo else 2)
            x, y = x.pop(), y.pop()
        for w in reversed(wraps):
            if w == 0:
                acc = acc.push1()
            elif w == 1:
                acc = acc.succ().push0()
            else:
                acc = acc.succ().push1()
        return acc

    def subtract(self: N, other: N) -> N:
        """Digit-wise difference with borrow, defined for self >= other.

        Raises :class:`DomainError` when the subtrahend is larger.
        """
        x, y = self, other
        # False: push0, True: push1
        wraps: list[bool] = []
        while True:
            if y.is_zero():
                acc = x
                break
            if x.is_zero():
                raise DomainError("cannot subtract a larger value")
            if x == y:
                acc = x.zero()
                break
            xo, yo = x.is_odd(), y.is_odd()
            wraps.append(xo == yo)
            if yo and not xo:
                x, y = x.pop(), y.pop()
            else:
                x, y = x.pop(), y.pop().succ()
        for one in reversed(wraps):
            acc = acc.push1() if one else acc.push0()
        return acc

    # ------------------------------------------------------------------
    # ordering
    # ------------------------------------------------------------------

    def length_compare(self: N, other: N) -> Ordering:
        """Compare digit-string lengths; shorter strings denote smaller values."""
        x, y = self, other
        while True:
            xz, yz = x.is_zero(), y.is_zero()
            if xz and yz:
                return Ordering.EQ
            if xz:
                return Ordering.LT
            if yz:
                return Ordering.GT
            x, y = x.pop(), y.pop()

    def same_length_compare(self: N, other: N) -> Ordering:
        """Digit-wise comparison; exact when both strings have equal length.

        The walk runs least-significant first, and the most significant
        differing pair decides. Total on unequal lengths too, though callers
        reach it only through :meth:`compare`, which equalizes lengths.
        """
        x, y = self, other
        highest_diff = Ordering.EQ
        while True:
            xz, yz = x.is_zero(), y.is_zero()
            if xz and yz:
                return highest_diff
            if xz:
                return Ordering.LT
            if yz:
                return Ordering.GT
            xo, yo = x.is_odd(), y.is_odd()
            if xo != yo:
                highest_diff = Ordering.LT if xo else Ordering.GT
            x, y = x.pop(), y.pop()

    def compare(self: N, other: N) -> Ordering:
        """Total order agreeing with numeric value order."""
        by_length = self.length_compare(other)
        if by_length is not Ordering.EQ:
            return by_length
        return self.same_length_compare(other)

    def lt(self: N, other: N) -> bool:
        return self.compare(other) is Ordering.LT

    def gt(self: N, other: N) -> bool:
        return self.compare(other) is Ordering.GT

    def eq(self: N, other: N) -> bool:
        return self.compare(other) is Ordering.EQ

    # ------------------------------------------------------------------
    # multiplication and exponentiation
    # ------------------------------------------------------------------

    def multiply(self: N, other: N) -> N:
        """Shift-and-add product over the digits of self; 1 is the identity."""
        if self.is_zero() or other.is_zero():
            return self.zero()
        hx, hy = self.pred(), other.pred()
        tags: list[bool] = []
        while not hx.is_zero():
            tags.append(hx.is_odd())
            hx = hx.pop()
        acc = hy
        for odd in reversed(tags):
            if odd:
                acc = acc.push0()
            else:
                acc = hy.add(acc.push0()).succ()
        return acc.succ()

    def double(self: N) -> N:
        return self.push0().pred()

    def half(self: N) -> N:
        """Floor of half: half(2k) = half(2k+1) = k."""
        return self.succ().pop()

    def exp2(self: N, limits: Limits | None = None) -> N:
        """2 raised to this value, by iterated doubling.

        Raises :class:`ResourceLimitError` when the exponent exceeds
        ``limits.max_exponent``.
        """
        lim = limits or DEFAULT_LIMITS
        n = self.value_at_most(lim.max_exponent)
        if n is None:
            raise ResourceLimitError(
                f"exp2 exponent exceeds the guard ({lim.max_exponent})"
            )
        out = self.one()
        for _ in range(n):
            out = out.double()
        return out

    def power(self: N, other: N, limits: Limits | None = None) -> N:
        """self raised to other, by squaring over the exponent's digits.

        power(x, 0) = 1 for every x, including x = 0. Guarded so the result
        magnitude stays under ``limits.max_exponent`` bits.
        """
        lim = limits or DEFAULT_LIMITS
        exponent = other.value_at_most(lim.max_exponent)
        base_bits = self.bit_length_at_most(lim.max_exponent)
        if (
            exponent is None
            or base_bits is None
            or base_bits * exponent > lim.max_exponent
        ):
            raise ResourceLimitError(
                f"power result would exceed the magnitude guard "
                f"({lim.max_exponent} bits)"
            )
        return self._power(other)

    def _power(self: N, y: N) -> N:
        # depth = digit count of y, small once the guard has passed
        if y.is_zero():
            return self.one()
        square = self.multiply(self)
        if y.is_odd():
            return self.multiply(square._power(y.pop()))
        return square.multiply(square._power(y.pop()))

    # ------------------------------------------------------------------
    # the set view: a number is the set of exponents of its binary expansion
    # ------------------------------------------------------------------

    def decode_set(self: N) -> list[N]:
        """Strictly increasing exponents e with value = sum of 2**e.

        Walks the ordinary binary expansion (odd means the current exponent
        is present), which is not the bijective digit stream.
        """
        out: list[N] = []
        n = self
        exponent = self.zero()
        while not n.is_zero():
            if n.is_odd():
                out.append(exponent)
            n = n.half()
            exponent = exponent.succ()
        return out

    @classmethod
    def encode_set(
        cls: type[N], elements: Sequence[N], limits: Limits | None = None
    ) -> N:
        """Sum of 2**e over the given exponents; inverse of decode_set.

        Order-insensitive. Raises :class:`DuplicateElementError` on repeated
        elements, which would silently double-count.
        """
        elems = list(elements)
        for i, a in enumerate(elems):
            for b in elems[i + 1 :]:
                if a == b:
                    raise DuplicateElementError(
                        "set elements must be pairwise distinct"
                    )
        out = cls.zero()
        for el in reversed(elems):
            out = el.exp2(limits).add(out)
        return out

    def set_union(self: N, other: N, limits: Limits | None = None) -> N:
        return lift_set_op2(_seq_union)(self, other, limits)

    def set_intersection(self: N, other: N, limits: Limits | None = None) -> N:
        return lift_set_op2(_seq_intersection)(self, other, limits)

    def set_difference(self: N, other: N, limits: Limits | None = None) -> N:
        return lift_set_op2(_seq_difference)(self, other, limits)

    def set_subset(self: N, other: N, limits: Limits | None = None) -> bool:
        """True iff every element of self's set view lies in other's."""
        return self == self.set_intersection(other, limits)

    def in_set(self: N, other: N, limits: Limits | None = None) -> bool:
        """True iff self is an element of other's set view."""
        return type(self).encode_set([self], limits).set_subset(other, limits)

    def augment_set(self: N, limits: Limits | None = None) -> N:
        """x union {x}, the step of the von Neumann ordinal construction."""
        return self.set_union(type(self).encode_set([self], limits), limits)

    def powerset(self: N, limits: Limits | None = None) -> N:
        """Encode of the set of encodes of all subsets of the set view."""
        lim = limits or DEFAULT_LIMITS
        if self.value_at_most(lim.max_exponent) is None:
            raise ResourceLimitError(
                f"powerset input exceeds the magnitude guard ({lim.max_exponent})"
            )
        elems = self.decode_set()
        if len(elems) > lim.max_powerset_elems:
            raise ResourceLimitError(
                f"powerset base set larger than the guard "
                f"({lim.max_powerset_elems} elements)"
            )
        cls = type(self)
        subsets: list[list[N]] = [[]]
        for el in reversed(elems):
            subsets = [grown for s in subsets for grown in (s, [el] + s)]
        encodes = [cls.encode_set(s, limits) for s in subsets]
        return cls.encode_set(encodes, limits)

    def nth_ordinal(self: N, limits: Limits | None = None) -> N:
        """Encode of {0, 1, ..., n-1}, the n-th von Neumann ordinal.

        Grows as a tower of exponents; guarded both by the iteration bound
        and by the exp2 guard inside augment_set.
        """
        lim = limits or DEFAULT_LIMITS
        n = self.value_at_most(lim.max_exponent)
        if n is None:
            raise ResourceLimitError(
                f"ordinal index exceeds the guard ({lim.max_exponent})"
            )
        out = self.zero()
        for _ in range(n):
            out = out.augment_set(limits)
        return out

    # ------------------------------------------------------------------
    # conversions (plumbing, not part of the five-primitive contract)
    # ------------------------------------------------------------------

    def digits(self) -> Iterator[int]:
        """Bijective digits, least significant first."""
        x = self
        while not x.is_zero():
            yield 0 if x.is_odd() else 1
            x = x.pop()

    def to_int(self) -> int:
        total, weight = 0, 1
        for d in self.digits():
            total += weight * (1 + d)
            weight *= 2
        return total

    @classmethod
    def from_int(cls: type[N], value: int) -> N:
        if value < 0:
            raise DomainError("naturals only")
        digits = []
        v = value
        while v:
            if v & 1:
                digits.append(0)
                v = (v - 1) // 2
            else:
                digits.append(1)
                v = (v - 2) // 2
        return cls.from_digits(digits)

    @classmethod
    def from_digits(cls: type[N], digits: Iterable[int]) -> N:
        """Build a value from bijective digits, least significant first."""
        out = cls.zero()
        for d in reversed(list(digits)):
            if d == 0:
                out = out.push0()
            elif d == 1:
                out = out.push1()
            else:
                raise DomainError(f"not a bijective digit: {d!r}")
        return out

    def value_at_most(self, bound: int) -> int | None:
        """The value as an int when <= bound, else None.

        Pops at most log2(bound) + 1 digits, so it is safe to call on values
        far beyond the bound. Representations where even one pop can be
        expensive override this with a structural read.
        """
        total, weight = 0, 1
        x = self
        while not x.is_zero():
            total += weight * (2 - x.is_odd())
            weight *= 2
            if total > bound:
                return None
            x = x.pop()
        return total

    def bit_length_at_most(self, bound: int) -> int | None:
        """Digit count when <= bound, else None; within 1 of the bit length."""
        n = 0
        x = self
        while not x.is_zero():
            n += 1
            if n > bound:
                return None
            x = x.pop()
        return n


def convert(value: Numeral, target: type[N]) -> N:
    """Rebuild a value digit by digit in another representation.

    Value-preserving, and the two directions are mutually inverse.
    """
    if isinstance(value, target):
        return value
    digits = list(value.digits())
    return target.from_digits(digits)


# ----------------------------------------------------------------------
# lifting sequence transforms to value transforms through the set view
# ----------------------------------------------------------------------


def lift_set_op1(
    transform: Callable[[list[N]], list[N]]
) -> Callable[..., N]:
    """Conjugate a sequence transform by decode_set/encode_set."""

    def lifted(x: N, limits: Limits | None = None) -> N:
        return type(x).encode_set(transform(x.decode_set()), limits)

    return lifted


def lift_set_op2(
    combine: Callable[[list[N], list[N]], list[N]]
) -> Callable[..., N]:
    """Conjugate a binary sequence operation by decode_set/encode_set."""

    def lifted(x: N, y: N, limits: Limits | None = None) -> N:
        return type(x).encode_set(combine(x.decode_set(), y.decode_set()), limits)

    return lifted


def _seq_union(xs: list[N], ys: list[N]) -> list[N]:
    return xs + [y for y in ys if y not in xs]


def _seq_intersection(xs: list[N], ys: list[N]) -> list[N]:
    return [x for x in xs if x in ys]


def _seq_difference(xs: list[N], ys: list[N]) -> list[N]:
    return [x for x in xs if x not in ys]
