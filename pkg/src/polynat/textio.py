"""Bit-exact text formats: decimal, bijective digit lists, brace sets.

Grammars (UTF-8, line endings irrelevant since none are significant):

* decimal:  nonempty ASCII digit string, no sign
* bij2:     '[' (bit (',' bit)*)? ']' with bit in {0,1}, least significant
            digit first
* hfs:      set := '{' (set (',' set)*)? '}', arbitrary whitespace between
            tokens, arbitrary sibling order on input

Printers always emit canonical text: no whitespace, set children in
ascending value order. Parsers report the byte offset of the first offence.
"""

from __future__ import annotations

from functools import cmp_to_key

from .core import DEFAULT_LIMITS, Limits, Numeral, N, convert
from .errors import DuplicateElementError, ParseError, ResourceLimitError
from .interpretations import Hfs, Peano


def print_bij2(value: Numeral) -> str:
    return "[" + ",".join(str(d) for d in value.digits()) + "]"


def parse_bij2(text: str, target: "type[N]") -> "N":
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s.startswith("["):
        raise ParseError("expected '['", offset)
    if not s.endswith("]"):
        raise ParseError("expected ']'", offset + len(s))
    body = s[1:-1]
    if not body:
        return target.zero()
    digits = []
    pos = offset + 1
    for chunk in body.split(","):
        if chunk not in ("0", "1"):
            raise ParseError(f"expected a bit, got {chunk!r}", pos)
        digits.append(int(chunk))
        pos += len(chunk) + 1
    return target.from_digits(digits)


def print_decimal(value: Numeral, limits: Limits | None = None) -> str:
    lim = limits or DEFAULT_LIMITS
    if value.bit_length_at_most(lim.max_print_bits) is None:
        raise ResourceLimitError(
            f"magnitude exceeds the decimal printing guard "
            f"({lim.max_print_bits} bits)"
        )
    return str(value.to_int())


def parse_decimal(text: str, target: "type[N]", limits: Limits | None = None) -> "N":
    lim = limits or DEFAULT_LIMITS
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise ParseError("expected a digit", offset)
    for i, ch in enumerate(s):
        if ch not in "0123456789":
            raise ParseError(f"expected a digit, got {ch!r}", offset + i)
    value = int(s)
    if target is Peano and value > lim.max_unary_value:
        raise ResourceLimitError(
            f"decimal {value} exceeds the unary materialization guard "
            f"({lim.max_unary_value})"
        )
    return target.from_int(value)


def print_hfs(tree: Hfs) -> str:
    out: list[str] = []
    stack: "list[Hfs | str]" = [tree]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append("{")
        stack.append("}")
        cs = item.children
        for k in range(len(cs) - 1, -1, -1):
            stack.append(cs[k])
            if k:
                stack.append(",")
    return "".join(out)


def parse_hfs(text: str, limits: Limits | None = None) -> Hfs:
    """Parse brace notation, normalizing to canonical child order.

    Accepts any sibling permutation and optional whitespace; rejects
    duplicate siblings. Iterative, with a nesting-depth guard.
    """
    lim = limits or DEFAULT_LIMITS
    i, n = 0, len(text)
    # each open set is a list of parsed children awaiting its '}'
    stack: "list[list[Hfs]]" = []
    result: Hfs | None = None

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i >= n or text[i] != "{":
        raise ParseError("expected '{'", i)
    while True:
        if result is not None:
            break
        if i >= n:
            raise ParseError("unexpected end of input", i)
        ch = text[i]
        if ch == "{":
            if len(stack) >= lim.max_parse_depth:
                raise ResourceLimitError(
                    f"set nesting deeper than the guard ({lim.max_parse_depth})"
                )
            stack.append([])
            i = skip_ws(i + 1)
        elif ch == "}":
            children = stack.pop()
            closed = _normalize(children, i)
            if stack:
                stack[-1].append(closed)
            else:
                result = closed
            i = skip_ws(i + 1)
            if stack:
                if i < n and text[i] == ",":
                    i = skip_ws(i + 1)
                    if i >= n or text[i] != "{":
                        raise ParseError("expected '{' after ','", i)
                elif i >= n or text[i] != "}":
                    raise ParseError("expected ',' or '}'", i)
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    i = skip_ws(i)
    if i < n:
        raise ParseError("trailing input after the outermost set", i)
    return result


def _normalize(children: "list[Hfs]", close_pos: int) -> Hfs:
    if len(children) > 1:
        children = sorted(children, key=cmp_to_key(_tree_cmp))
        for a, b in zip(children, children[1:]):
            if a == b:
                raise DuplicateElementError(
                    f"duplicate sibling in the set ending at offset {close_pos}"
                )
    return Hfs(tuple(children))


def _tree_cmp(a: Hfs, b: Hfs) -> int:
    """Numeric order read structurally off canonical trees.

    Power sums over distinct exponents compare by their largest exponents
    first, so walking both child lists from the top decides without ever
    materializing the (possibly astronomical) values.
    """
    ca, cb = a.children, b.children
    i, j = len(ca) - 1, len(cb) - 1
    while i >= 0 and j >= 0:
        c = _tree_cmp(ca[i], cb[j])
        if c:
            return c
        i -= 1
        j -= 1
    if i >= 0:
        return 1
    if j >= 0:
        return -1
    return 0


FORMATS = ("decimal", "bij2", "hfs")


def print_value(value: Numeral, fmt: str, limits: Limits | None = None) -> str:
    """Render in any of the three formats, converting representation if
    needed (the set format prints the value's set-tree image)."""
    if fmt == "decimal":
        return print_decimal(value, limits)
    if fmt == "bij2":
        return print_bij2(value)
    if fmt == "hfs":
        return print_hfs(convert(value, Hfs))
    raise ValueError(f"unknown format: {fmt!r}")


def parse_value(
    text: str, fmt: str, target: "type[N]", limits: Limits | None = None
) -> "N":
    if fmt == "decimal":
        return parse_decimal(text, target, limits)
    if fmt == "bij2":
        return parse_bij2(text, target)
    if fmt == "hfs":
        return convert(parse_hfs(text, limits), target)
    raise ValueError(f"unknown format: {fmt!r}")


def detect_format(text: str) -> str:
    s = text.lstrip()
    if s.startswith("{"):
        return "hfs"
    if s.startswith("["):
        return "bij2"
    return "decimal"
