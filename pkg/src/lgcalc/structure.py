"""Structures and sequents: structural counterparts of the six connectives.

Input structures may only use ``*``, ``(/)``, ``(\\)`` nodes (with output
substructures exactly where the grammar puts them), output structures
``(+)``, ``\\``, ``/``.  A sequent is an input structure on the left of
``|-`` and an output structure on the right, with an optional focus on a
single displayed formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .formula import (Atom, Bin, COPROD, CONNECTIVES, Formula, LDIFF, OVER,
                      PROD, RDIFF, UNDER, fmt_formula, parse_formula,
                      tokenize, FormulaSyntaxError)

INPUT = "input"
OUTPUT = "output"


@dataclass(frozen=True)
class Leaf:
    formula: Formula
    tag: Optional[str] = None  # variable or covariable label

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.formula, self.tag)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return fmt_structure(self)


@dataclass(frozen=True)
class SBin:
    op: str
    left: "Structure"
    right: "Structure"

    def __post_init__(self) -> None:
        if self.op not in CONNECTIVES:
            raise ValueError(f"bad structural connective: {self.op!r}")
        object.__setattr__(self, "_hash",
                           hash((self.op, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return fmt_structure(self)


Structure = Union[Leaf, SBin]

# which side each child of a structural connective lives on, per the
# input/output grammar
_CHILD_SIDES = {
    (INPUT, PROD): (INPUT, INPUT),
    (INPUT, RDIFF): (INPUT, OUTPUT),
    (INPUT, LDIFF): (OUTPUT, INPUT),
    (OUTPUT, COPROD): (OUTPUT, OUTPUT),
    (OUTPUT, UNDER): (INPUT, OUTPUT),
    (OUTPUT, OVER): (OUTPUT, INPUT),
}


def validate_structure(x: Structure, side: str) -> bool:
    """True iff x is well-formed as an input or output structure."""
    if isinstance(x, Leaf):
        return True
    sides = _CHILD_SIDES.get((side, x.op))
    if sides is None:
        return False
    return validate_structure(x.left, sides[0]) and validate_structure(x.right, sides[1])


def structure_to_formula(x: Structure) -> Formula:
    """Replace every structural connective by its logical twin."""
    if isinstance(x, Leaf):
        return x.formula
    return Bin(x.op, structure_to_formula(x.left), structure_to_formula(x.right))


def leaves(x: Structure) -> Iterator[Leaf]:
    if isinstance(x, Leaf):
        yield x
    else:
        yield from leaves(x.left)
        yield from leaves(x.right)


def fmt_structure(x: Structure) -> str:
    """Print with the formula tokens; the parser re-lifts structural nodes."""
    if isinstance(x, Leaf):
        s = fmt_formula(x.formula)
        if isinstance(x.formula, Bin):
            s = f"({s})"
        if x.tag is not None:
            return f"{x.tag}:{s}"
        return s

    def side(y: Structure) -> str:
        s = fmt_structure(y)
        return f"({s})" if isinstance(y, SBin) else s

    return f"{side(x.left)} {x.op} {side(x.right)}"


NO_FOCUS = None
LEFT_FOCUS = "left"
RIGHT_FOCUS = "right"


@dataclass(frozen=True)
class Sequent:
    ant: Structure
    suc: Structure
    focus: Optional[str] = NO_FOCUS

    def __post_init__(self) -> None:
        if self.focus not in (NO_FOCUS, LEFT_FOCUS, RIGHT_FOCUS):
            raise ValueError(f"bad focus: {self.focus!r}")
        if self.focus == LEFT_FOCUS and not isinstance(self.ant, Leaf):
            raise ValueError("left focus requires a single antecedent formula")
        if self.focus == RIGHT_FOCUS and not isinstance(self.suc, Leaf):
            raise ValueError("right focus requires a single succedent formula")
        object.__setattr__(self, "_hash",
                           hash((self.ant, self.suc, self.focus)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return fmt_sequent(self)

    def focused_formula(self) -> Optional[Formula]:
        if self.focus == LEFT_FOCUS:
            return self.ant.formula  # type: ignore[union-attr]
        if self.focus == RIGHT_FOCUS:
            return self.suc.formula  # type: ignore[union-attr]
        return None


def fmt_sequent(s: Sequent) -> str:
    left = fmt_structure(s.ant)
    right = fmt_structure(s.suc)
    if s.focus == LEFT_FOCUS:
        left = f"[{left}]"
    if s.focus == RIGHT_FOCUS:
        right = f"[{right}]"
    return f"{left} |- {right}"


def validate_sequent(s: Sequent) -> bool:
    return validate_structure(s.ant, INPUT) and validate_structure(s.suc, OUTPUT)


def sequent_connectives(s: Sequent) -> int:
    from .formula import connective_count
    total = 0
    for side in (s.ant, s.suc):
        for lf in leaves(side):
            total += connective_count(lf.formula)
        total += _structure_nodes(side)
    return total


def _structure_nodes(x: Structure) -> int:
    if isinstance(x, Leaf):
        return 0
    return 1 + _structure_nodes(x.left) + _structure_nodes(x.right)


# ---------------------------------------------------------------------------
# sequent concrete syntax
#
# A sequent side is parsed with the formula grammar, then each binary node
# is read structurally wherever the input/output grammar permits it and
# collapsed to a formula leaf otherwise.  ``a * (a \ b) |- b`` therefore
# denotes the structure  a .*. (a\b)  with two formula leaves.


def _as_structure(f: Formula, side: str) -> Structure:
    if isinstance(f, Bin):
        sides = _CHILD_SIDES.get((side, f.op))
        if sides is not None:
            return SBin(f.op,
                        _as_structure(f.left, sides[0]),
                        _as_structure(f.right, sides[1]))
    return Leaf(f)


def parse_structure(text: str, side: str) -> Structure:
    return _as_structure(parse_formula(text), side)


def parse_sequent(text: str) -> Sequent:
    if "|-" not in text:
        raise FormulaSyntaxError("missing '|-'", 0)
    left, _, right = text.partition("|-")
    return Sequent(parse_structure(left, INPUT), parse_structure(right, OUTPUT))
