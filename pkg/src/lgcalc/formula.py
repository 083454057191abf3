"""Formula language of LG: atoms and the six binary connectives.

ASCII connective tokens:

    ``*``    product            (``a * b``)
    ``\\``   left division      (``a \\ b``, read "a under b")
    ``/``    right division     (``a / b``, read "a over b")
    ``(+)``  coproduct          (``a (+) b``)
    ``(/)``  right difference   (``a (/) b``, read "a less b")
    ``(\\)`` left difference    (``a (\\) b``, read "a from b")

In the division and difference connectives the operand under the
(back)slash is the denominator/subtrahend: in ``a \\ b`` and ``a (\\) b``
it is ``a``, in ``a / b`` and ``a (/) b`` it is ``b``.

All binary operators are non-associative and of equal precedence;
parentheses are mandatory whenever two binary operators meet.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

PROD = "*"
UNDER = "\\"
OVER = "/"
COPROD = "(+)"
RDIFF = "(/)"
LDIFF = "(\\)"

CONNECTIVES = (PROD, UNDER, OVER, COPROD, RDIFF, LDIFF)

#: connectives with invertible left introduction rule
POSITIVE_CONNECTIVES = frozenset({PROD, RDIFF, LDIFF})
#: connectives with invertible right introduction rule
NEGATIVE_CONNECTIVES = frozenset({COPROD, UNDER, OVER})

POS = "+"
NEG = "-"

_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self) -> None:
        if not _ATOM_RE.match(self.name):
            raise ValueError(f"bad atom name: {self.name!r}")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Formula"
    right: "Formula"

    def __post_init__(self) -> None:
        if self.op not in CONNECTIVES:
            raise ValueError(f"bad connective: {self.op!r}")
        object.__setattr__(self, "_hash",
                           hash((self.op, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return fmt_formula(self)


Formula = Union[Atom, Bin]


def atom(name: str) -> Atom:
    return Atom(name)


def prod(a: Formula, b: Formula) -> Bin:
    return Bin(PROD, a, b)


def under(a: Formula, b: Formula) -> Bin:
    """a\\b: the denominator a sits under the backslash."""
    return Bin(UNDER, a, b)


def over(a: Formula, b: Formula) -> Bin:
    """a/b: the denominator b sits under the slash."""
    return Bin(OVER, a, b)


def coprod(a: Formula, b: Formula) -> Bin:
    return Bin(COPROD, a, b)


def rdiff(a: Formula, b: Formula) -> Bin:
    """a(/)b: b is subtracted."""
    return Bin(RDIFF, a, b)


def ldiff(a: Formula, b: Formula) -> Bin:
    """a(\\)b: a is subtracted."""
    return Bin(LDIFF, a, b)


def connective_count(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    return 1 + connective_count(f.left) + connective_count(f.right)


def atoms_of(f: Formula) -> Iterator[Atom]:
    if isinstance(f, Atom):
        yield f
    else:
        yield from atoms_of(f.left)
        yield from atoms_of(f.right)


# ---------------------------------------------------------------------------
# the two involutive symmetries

_MIRROR_OP = {PROD: PROD, OVER: UNDER, UNDER: OVER,
              COPROD: COPROD, RDIFF: LDIFF, LDIFF: RDIFF}

_DUAL_OP = {PROD: COPROD, COPROD: PROD, OVER: LDIFF, LDIFF: OVER,
            UNDER: RDIFF, RDIFF: UNDER}


def mirror(f: Formula) -> Formula:
    """Left-right symmetry: swaps arguments and slash directions."""
    if isinstance(f, Atom):
        return f
    return Bin(_MIRROR_OP[f.op], mirror(f.right), mirror(f.left))


def dual(f: Formula) -> Formula:
    """Arrow-reversing symmetry: trades the product family for the coproduct family."""
    if isinstance(f, Atom):
        return f
    return Bin(_DUAL_OP[f.op], dual(f.right), dual(f.left))


# ---------------------------------------------------------------------------
# polarity

@dataclass(frozen=True)
class BiasMap:
    """Total assignment of polarities to atoms: a default plus overrides."""

    default: str = NEG
    overrides: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.default not in (POS, NEG):
            raise ValueError(f"bad polarity: {self.default!r}")
        for name, pol in self.overrides:
            if pol not in (POS, NEG):
                raise ValueError(f"bad polarity for {name}: {pol!r}")

    def atom_polarity(self, a: Atom | str) -> str:
        name = a.name if isinstance(a, Atom) else a
        for n, pol in self.overrides:
            if n == name:
                return pol
        return self.default

    @staticmethod
    def parse(spec: str, default: str = NEG) -> "BiasMap":
        """Parse an override spec like ``np=+,s=-``."""
        overrides = []
        spec = spec.strip()
        if spec:
            for part in spec.split(","):
                name, _, pol = part.partition("=")
                name, pol = name.strip(), pol.strip()
                if pol not in (POS, NEG):
                    raise ValueError(f"bad bias entry: {part!r}")
                if name == "default":
                    default = pol
                else:
                    overrides.append((name, pol))
        return BiasMap(default=default, overrides=tuple(overrides))


ALL_NEGATIVE = BiasMap(default=NEG)
ALL_POSITIVE = BiasMap(default=POS)


def polarity(f: Formula, bias: BiasMap) -> str:
    """'+' for atoms biased positive and for *, (/), (\\); '-' otherwise."""
    if isinstance(f, Atom):
        return bias.atom_polarity(f)
    return POS if f.op in POSITIVE_CONNECTIVES else NEG


# ---------------------------------------------------------------------------
# concrete syntax

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<atom>[a-z][a-z0-9_]*)"
    r"|(?P<op>\(\+\)|\(/\)|\(\\\)|\*|\\|/)"
    r"|(?P<lpar>\()"
    r"|(?P<rpar>\)))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """Tokens as (kind, value, position); raises on junk."""
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise FormulaSyntaxError(f"unexpected character at {pos}: {text[pos:]!r}", pos)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return toks


class FormulaSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, toks: list[tuple[str, str, int]], text: str):
        self.toks = toks
        self.text = text
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.form()
        kind, val, pos = self.peek()
        if kind is not None:
            raise FormulaSyntaxError(f"trailing input {val!r}", pos)
        return f

    def form(self) -> Formula:
        left = self.item()
        kind, val, pos = self.peek()
        if kind == "op":
            self.next()
            right = self.item()
            k2, v2, p2 = self.peek()
            if k2 == "op":
                raise FormulaSyntaxError(
                    f"operators do not associate; parenthesize before {v2!r}", p2)
            return Bin(val, left, right)
        return left

    def item(self) -> Formula:
        kind, val, pos = self.next()
        if kind == "atom":
            return Atom(val)
        if kind == "lpar":
            f = self.form()
            kind2, val2, pos2 = self.next()
            if kind2 != "rpar":
                raise FormulaSyntaxError("expected ')'", pos2)
            return f
        raise FormulaSyntaxError(f"expected atom or '(', got {val!r}", pos)


def parse_formula(text: str) -> Formula:
    return _Parser(tokenize(text), text).parse()


def fmt_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name

    def side(g: Formula) -> str:
        s = fmt_formula(g)
        return f"({s})" if isinstance(g, Bin) else s

    return f"{side(f.left)} {f.op} {side(f.right)}"
