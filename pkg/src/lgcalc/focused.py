"""Backward proof search for the focused calculus, with proof terms.

The asynchronous phase decomposes every invertible leaf (positive in an
input position, negative in an output position), leftmost-outermost.
Focusing choices are the only branch points: any displayable negative
antecedent leaf can take left focus, any displayable positive succedent
leaf right focus; the structural orbit includes the Grishin moves.
Axiom and co-axiom close on atoms only.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .formula import (Atom, BiasMap, Bin, COPROD, Formula, LDIFF, NEG, OVER,
                      POS, PROD, RDIFF, UNDER, polarity)
from .structure import (INPUT, LEFT_FOCUS, Leaf, NO_FOCUS, OUTPUT,
                        RIGHT_FOCUS, SBin, Sequent, Structure, fmt_sequent)
from .display import structural_orbit, display_moves, grishin_backward_moves
from . import terms as tm

POSITIVE_OPS = frozenset({PROD, RDIFF, LDIFF})
NEGATIVE_OPS = frozenset({COPROD, UNDER, OVER})


@dataclass(frozen=True)
class FocusedProof:
    conclusion: Sequent
    rule: str
    premises: tuple["FocusedProof", ...] = ()
    term: Optional[tm.Term] = None
    detail: tuple = ()  # folded segments for the derived shift rules

    def rules_used(self) -> set[str]:
        out = {self.rule}
        for p in self.premises:
            out |= p.rules_used()
        return out


class _Names:
    def __init__(self) -> None:
        self.vars = itertools.count(1)
        self.covars = itertools.count(1)

    def var(self) -> str:
        return f"x{next(self.vars)}"

    def covar(self) -> str:
        return f"a{next(self.covars)}"


def label_sequent(s: Sequent, names: Optional[_Names] = None,
                  hyp_tags: Optional[list[str]] = None) -> Sequent:
    """Assign fresh variable tags to input leaves, covariables to output ones."""
    names = names or _Names()
    hyp_iter = iter(hyp_tags) if hyp_tags is not None else None

    def tag(x: Structure, side: str) -> Structure:
        if isinstance(x, Leaf):
            if x.tag is not None:
                return x
            if side == INPUT:
                return Leaf(x.formula, next(hyp_iter) if hyp_iter else names.var())
            return Leaf(x.formula, names.covar())
        ls, rs = _child_sides(side, x.op)
        return SBin(x.op, tag(x.left, ls), tag(x.right, rs))

    return Sequent(tag(s.ant, INPUT), tag(s.suc, OUTPUT), s.focus)


def _child_sides(side: str, op: str) -> tuple[str, str]:
    table = {
        (INPUT, PROD): (INPUT, INPUT), (INPUT, RDIFF): (INPUT, OUTPUT),
        (INPUT, LDIFF): (OUTPUT, INPUT), (OUTPUT, COPROD): (OUTPUT, OUTPUT),
        (OUTPUT, UNDER): (INPUT, OUTPUT), (OUTPUT, OVER): (OUTPUT, INPUT),
    }
    return table[(side, op)]


# ---------------------------------------------------------------------------
# asynchronous phase


_PREFIX_OF = {
    (INPUT, PROD): "*L", (INPUT, RDIFF): "(/)L", (INPUT, LDIFF): "(\\)L",
    (OUTPUT, COPROD): "(+)R", (OUTPUT, UNDER): "\\R", (OUTPUT, OVER): "/R",
}


def _find_redex(x: Structure, side: str, bias: BiasMap,
                path: tuple = ()) -> Optional[tuple[tuple, Leaf, str]]:
    """Leftmost-outermost invertible leaf as (path, leaf, side)."""
    if isinstance(x, Leaf):
        f = x.formula
        if isinstance(f, Bin):
            if side == INPUT and f.op in POSITIVE_OPS:
                return (path, x, side)
            if side == OUTPUT and f.op in NEGATIVE_OPS:
                return (path, x, side)
        return None
    ls, rs = _child_sides(side, x.op)
    return (_find_redex(x.left, ls, bias, path + ("L",))
            or _find_redex(x.right, rs, bias, path + ("R",)))


def _replace_at(x: Structure, path: tuple, new: Structure) -> Structure:
    if not path:
        return new
    assert isinstance(x, SBin)
    if path[0] == "L":
        return SBin(x.op, _replace_at(x.left, path[1:], new), x.right)
    return SBin(x.op, x.left, _replace_at(x.right, path[1:], new))


@dataclass
class _Async:
    sequent: Sequent
    # (kind, binders, subject, sequent before this step)
    prefixes: list[tuple[str, tuple[str, str], str, Sequent]]


def run_async(s: Sequent, bias: BiasMap, names: _Names,
              order: str = "leftmost") -> _Async:
    """Exhaust the invertible rules, collecting case prefixes outside-in."""
    prefixes = []
    while True:
        hit = (_find_redex(s.ant, INPUT, bias)
               or _find_redex(s.suc, OUTPUT, bias, ("S",)))
        if order == "rightmost":
            hits = _all_redexes(s, bias)
            hit = hits[-1] if hits else None
        if hit is None:
            return _Async(s, prefixes)
        path, leaf, side = hit
        f = leaf.formula
        kind = _PREFIX_OF[(side, f.op)]
        sorts = tm.PREFIX_BINDER_IS_VAR[kind]
        binders = tuple(names.var() if is_var else names.covar()
                        for is_var in sorts)
        split = SBin(f.op, Leaf(f.left, binders[0]), Leaf(f.right, binders[1]))
        before = s
        if path and path[0] == "S":
            s = Sequent(s.ant, _replace_at(s.suc, path[1:], split))
        else:
            s = Sequent(_replace_at(s.ant, path, split), s.suc)
        prefixes.append((kind, binders, leaf.tag, before))


def _all_redexes(s: Sequent, bias: BiasMap) -> list[tuple[tuple, Leaf, str]]:
    out = []

    def walk(x: Structure, side: str, path: tuple) -> None:
        if isinstance(x, Leaf):
            f = x.formula
            if isinstance(f, Bin) and (
                    (side == INPUT and f.op in POSITIVE_OPS)
                    or (side == OUTPUT and f.op in NEGATIVE_OPS)):
                out.append((path, x, side))
            return
        ls, rs = _child_sides(side, x.op)
        walk(x.left, ls, path + ("L",))
        walk(x.right, rs, path + ("R",))

    walk(s.ant, INPUT, ())
    walk(s.suc, OUTPUT, ("S",))
    return out


# ---------------------------------------------------------------------------
# the prover


class FLGProver:
    def __init__(self, bias: BiasMap, async_order: str = "leftmost"):
        self.bias = bias
        self.names = _Names()
        self.async_order = async_order
        self._decide_memo: dict = {}

    # -- full enumeration ----------------------------------------------------

    def prove(self, s: Sequent) -> list[tuple[FocusedProof, tm.Term]]:
        s = label_sequent(s, self.names)
        if s.focus == RIGHT_FOCUS:
            results = self._focus_right(s.ant, s.suc.formula)  # type: ignore
        elif s.focus == LEFT_FOCUS:
            results = self._focus_left(s.ant.formula, s.suc)  # type: ignore
        else:
            results = self._command(s)
        seen = {}
        for proof, term in results:
            key = tm.commuting_normal(term)
            if key not in seen:
                seen[key] = (proof, term)
        return list(seen.values())

    def _command(self, s: Sequent) -> list[tuple[FocusedProof, tm.Command]]:
        a = run_async(s, self.bias, self.names, self.async_order)
        out = []
        for proof, cmd in self._sync(a.sequent):
            for kind, binders, subject, before in reversed(a.prefixes):
                cmd = tm.CasePrefix(kind, binders, subject, cmd)
                proof = FocusedProof(before, kind, (proof,), cmd)
            out.append((proof, cmd))
        return out

    def _sync(self, s: Sequent) -> list[tuple[FocusedProof, tm.Command]]:
        out = []
        orbit = structural_orbit(s, strip=False)
        for member in orbit:
            ant, suc = member.ant, member.suc
            if isinstance(ant, Leaf) and polarity(ant.formula, self.bias) == NEG:
                for proof, e in self._focus_left(ant.formula, suc):
                    cmd = tm.CmdL(ant.tag, e)
                    node = FocusedProof(member, "comu*", (proof,), cmd)
                    out.append((node, cmd))
            if isinstance(suc, Leaf) and polarity(suc.formula, self.bias) == POS:
                for proof, v in self._focus_right(ant, suc.formula):
                    cmd = tm.CmdR(v, suc.tag)
                    node = FocusedProof(member, "mu*", (proof,), cmd)
                    out.append((node, cmd))
        return out

    def _focus_right(self, x: Structure, a: Formula
                     ) -> list[tuple[FocusedProof, tm.Value]]:
        pol = polarity(a, self.bias)
        concl = Sequent(x, Leaf(a), RIGHT_FOCUS)
        out: list[tuple[FocusedProof, tm.Value]] = []
        if pol == NEG:
            beta = self.names.covar()
            for proof, cmd in self._command(Sequent(x, Leaf(a, beta))):
                v = tm.Mu(beta, cmd)
                out.append((FocusedProof(concl, "mu", (proof,), v), v))
            return out
        if isinstance(a, Atom):
            if isinstance(x, Leaf) and x.formula == a and x.tag is not None:
                v = tm.Var(x.tag)
                out.append((FocusedProof(Sequent(x, Leaf(a), RIGHT_FOCUS),
                                         "Ax", (), v), v))
            return out
        assert isinstance(a, Bin) and a.op in POSITIVE_OPS
        if a.op == PROD and isinstance(x, SBin) and x.op == PROD:
            for (p1, v1), (p2, v2) in itertools.product(
                    self._focus_right(x.left, a.left),
                    self._focus_right(x.right, a.right)):
                v = tm.VPair(PROD, v1, v2)
                out.append((FocusedProof(concl, "*R", (p1, p2), v), v))
        elif a.op == RDIFF and isinstance(x, SBin) and x.op == RDIFF:
            for (p1, v1), (p2, e2) in itertools.product(
                    self._focus_right(x.left, a.left),
                    self._focus_left(a.right, x.right)):
                v = tm.VPair(RDIFF, v1, e2)
                out.append((FocusedProof(concl, "(/)R", (p1, p2), v), v))
        elif a.op == LDIFF and isinstance(x, SBin) and x.op == LDIFF:
            for (p1, e1), (p2, v2) in itertools.product(
                    self._focus_left(a.left, x.left),
                    self._focus_right(x.right, a.right)):
                v = tm.VPair(LDIFF, e1, v2)
                out.append((FocusedProof(concl, "(\\)R", (p1, p2), v), v))
        return out

    def _focus_left(self, a: Formula, y: Structure
                    ) -> list[tuple[FocusedProof, tm.Context]]:
        pol = polarity(a, self.bias)
        concl = Sequent(Leaf(a), y, LEFT_FOCUS)
        out: list[tuple[FocusedProof, tm.Context]] = []
        if pol == POS:
            xv = self.names.var()
            for proof, cmd in self._command(Sequent(Leaf(a, xv), y)):
                e = tm.CoMu(xv, cmd)
                out.append((FocusedProof(concl, "comu", (proof,), e), e))
            return out
        if isinstance(a, Atom):
            if isinstance(y, Leaf) and y.formula == a and y.tag is not None:
                e = tm.CoVar(y.tag)
                out.append((FocusedProof(Sequent(Leaf(a), y, LEFT_FOCUS),
                                         "CoAx", (), e), e))
            return out
        assert isinstance(a, Bin) and a.op in NEGATIVE_OPS
        if a.op == COPROD and isinstance(y, SBin) and y.op == COPROD:
            for (p1, e1), (p2, e2) in itertools.product(
                    self._focus_left(a.left, y.left),
                    self._focus_left(a.right, y.right)):
                e = tm.EPair(COPROD, e1, e2)
                out.append((FocusedProof(concl, "(+)L", (p1, p2), e), e))
        elif a.op == UNDER and isinstance(y, SBin) and y.op == UNDER:
            for (p1, v1), (p2, e2) in itertools.product(
                    self._focus_right(y.left, a.left),
                    self._focus_left(a.right, y.right)):
                e = tm.EPair(UNDER, v1, e2)
                out.append((FocusedProof(concl, "\\L", (p1, p2), e), e))
        elif a.op == OVER and isinstance(y, SBin) and y.op == OVER:
            for (p1, e1), (p2, v2) in itertools.product(
                    self._focus_left(a.left, y.left),
                    self._focus_right(y.right, a.right)):
                e = tm.EPair(OVER, e1, v2)
                out.append((FocusedProof(concl, "/L", (p1, p2), e), e))
        return out

    # -- decision only (used by the cross-system suite) ----------------------

    def provable(self, s: Sequent) -> bool:
        from .display import strip_sequent
        key = (strip_sequent(s), s.focus)
        hit = self._decide_memo.get(key)
        if hit is not None:
            return hit
        result = bool(self.prove(s))
        self._decide_memo[key] = result
        return result


def fprove(s: Sequent, bias: BiasMap,
           async_order: str = "leftmost") -> list[tuple[FocusedProof, tm.Term]]:
    return FLGProver(bias, async_order).prove(s)


# ---------------------------------------------------------------------------
# term checking by type-directed reconstruction


def check_term(s: Sequent, t: tm.Term, bias: BiasMap) -> bool:
    """True iff t is the term of some focused proof of s."""
    s = label_sequent(s)
    chk = _Checker(bias)
    try:
        if s.focus == RIGHT_FOCUS:
            return chk.value(t, s.ant, s.suc.formula)  # type: ignore
        if s.focus == LEFT_FOCUS:
            return chk.context(t, s.ant.formula, s.suc)  # type: ignore
        return chk.command(t, s)
    except _Mismatch:
        return False


class _Mismatch(Exception):
    pass


class _Checker:
    def __init__(self, bias: BiasMap):
        self.bias = bias

    def command(self, c: tm.Command, s: Sequent) -> bool:
        if isinstance(c, tm.CasePrefix):
            leaf, side, path = _find_tag(s, c.subject)
            if leaf is None or not isinstance(leaf.formula, Bin):
                return False
            kind = _PREFIX_OF.get((side, leaf.formula.op))
            if kind != c.kind:
                return False
            f = leaf.formula
            split = SBin(f.op, Leaf(f.left, c.binders[0]),
                         Leaf(f.right, c.binders[1]))
            if path[0] == "S":
                s2 = Sequent(s.ant, _replace_at(s.suc, path[1:], split))
            else:
                s2 = Sequent(_replace_at(s.ant, path[1:], split), s.suc)
            return self.command(c.body, s2)
        # simple commands require the asynchronous phase to be exhausted
        if _all_redexes(s, self.bias):
            return False
        orbit = structural_orbit(s, strip=False)
        if isinstance(c, tm.CmdL):
            for member in orbit:
                if (isinstance(member.ant, Leaf) and member.ant.tag == c.var
                        and polarity(member.ant.formula, self.bias) == NEG):
                    if self.context(c.context, member.ant.formula, member.suc):
                        return True
            return False
        if isinstance(c, tm.CmdR):
            for member in orbit:
                if (isinstance(member.suc, Leaf) and member.suc.tag == c.covar
                        and polarity(member.suc.formula, self.bias) == POS):
                    if self.value(c.value, member.ant, member.suc.formula):
                        return True
            return False
        return False

    def value(self, v: tm.Value, x: Structure, a: Formula) -> bool:
        pol = polarity(a, self.bias)
        if isinstance(v, tm.Mu):
            return pol == NEG and self.command(v.body, Sequent(x, Leaf(a, v.covar)))
        if isinstance(v, tm.Var):
            return (pol == POS and isinstance(a, Atom) and isinstance(x, Leaf)
                    and x.formula == a and x.tag == v.name)
        if isinstance(v, tm.VPair) and pol == POS and isinstance(a, Bin):
            if v.op != a.op or not isinstance(x, SBin) or x.op != a.op:
                return False
            if a.op == PROD:
                return (self.value(v.left, x.left, a.left)
                        and self.value(v.right, x.right, a.right))
            if a.op == RDIFF:
                return (self.value(v.left, x.left, a.left)
                        and self.context(v.right, a.right, x.right))
            if a.op == LDIFF:
                return (self.context(v.left, a.left, x.left)
                        and self.value(v.right, x.right, a.right))
        return False

    def context(self, e: tm.Context, a: Formula, y: Structure) -> bool:
        pol = polarity(a, self.bias)
        if isinstance(e, tm.CoMu):
            return pol == POS and self.command(e.body, Sequent(Leaf(a, e.var), y))
        if isinstance(e, tm.CoVar):
            return (pol == NEG and isinstance(a, Atom) and isinstance(y, Leaf)
                    and y.formula == a and y.tag == e.name)
        if isinstance(e, tm.EPair) and pol == NEG and isinstance(a, Bin):
            if e.op != a.op or not isinstance(y, SBin) or y.op != a.op:
                return False
            if a.op == COPROD:
                return (self.context(e.left, a.left, y.left)
                        and self.context(e.right, a.right, y.right))
            if a.op == UNDER:
                return (self.value(e.left, y.left, a.left)
                        and self.context(e.right, a.right, y.right))
            if a.op == OVER:
                return (self.context(e.left, a.left, y.left)
                        and self.value(e.right, y.right, a.right))
        return False


def _find_tag(s: Sequent, tag: str):
    hit = [None, None, None]

    def walk(x: Structure, side: str, path: tuple) -> None:
        if isinstance(x, Leaf):
            if x.tag == tag:
                hit[0], hit[1], hit[2] = x, side, path
            return
        ls, rs = _child_sides(side, x.op)
        walk(x.left, ls, path + ("L",))
        walk(x.right, rs, path + ("R",))

    walk(s.ant, INPUT, ("A",))
    walk(s.suc, OUTPUT, ("S",))
    return hit[0], hit[1], hit[2]


# ---------------------------------------------------------------------------
# derived focus-shifting rules

_SHIFT_NAMES = {
    ("mu", "comu*"): "shift<>",   # premise left focus, conclusion right focus
    ("mu", "mu*"): "shift>>",
    ("comu", "comu*"): "shift<<",
    ("comu", "mu*"): "shift><",
}

_SEGMENT_RULES = frozenset(
    {"*L", "(/)L", "(\\)L", "(+)R", "\\R", "/R",
     "rp1", "rp2", "rp3", "rp4", "drp1", "drp2", "drp3", "drp4",
     "G1", "G2", "G3", "G4"})


def focus_shift(p: FocusedProof) -> FocusedProof:
    """Fold (de)focus pairs bridged by structural and rewrite steps into
    single derived-rule nodes; ``unfold_shifts`` inverts this."""
    premises = tuple(focus_shift(q) for q in p.premises)
    p = FocusedProof(p.conclusion, p.rule, premises, p.term, p.detail)
    if p.rule not in ("mu", "comu"):
        return p
    chain = [p]
    cur = p.premises[0]
    while cur.rule in _SEGMENT_RULES and len(cur.premises) == 1:
        chain.append(cur)
        cur = cur.premises[0]
    if cur.rule in ("mu*", "comu*"):
        chain.append(cur)
        name = _SHIFT_NAMES[(p.rule, cur.rule)]
        return FocusedProof(p.conclusion, name, cur.premises, p.term,
                            detail=tuple(chain))
    return p


def unfold_shifts(p: FocusedProof) -> FocusedProof:
    premises = tuple(unfold_shifts(q) for q in p.premises)
    if p.rule in _SHIFT_NAMES.values() and p.detail:
        chain = list(p.detail)
        node = FocusedProof(chain[-1].conclusion, chain[-1].rule, premises,
                            chain[-1].term, chain[-1].detail)
        for outer in reversed(chain[:-1]):
            node = FocusedProof(outer.conclusion, outer.rule, (node,),
                                outer.term, outer.detail)
        return node
    return FocusedProof(p.conclusion, p.rule, premises, p.term, p.detail)


# ---------------------------------------------------------------------------
# decision procedure (no terms, early exit, memoized on stripped sequents)


class FLGDecider:
    def __init__(self, bias: BiasMap):
        self.bias = bias
        self.names = _Names()
        self._memo: dict = {}

    def provable(self, s: Sequent) -> bool:
        s = label_sequent(s, self.names)
        return self._command(s)

    def _command(self, s: Sequent) -> bool:
        from .display import strip_sequent
        a = run_async(s, self.bias, self.names)
        key = ("c", strip_sequent(a.sequent))
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._memo[key] = False  # cycle guard; commands do not loop, but be safe
        result = False
        for member in structural_orbit(a.sequent, strip=False):
            ant, suc = member.ant, member.suc
            if (isinstance(ant, Leaf)
                    and polarity(ant.formula, self.bias) == NEG
                    and self._focus_left(ant.formula, suc)):
                result = True
                break
            if (isinstance(suc, Leaf)
                    and polarity(suc.formula, self.bias) == POS
                    and self._focus_right(ant, suc.formula)):
                result = True
                break
        self._memo[key] = result
        return result

    def _focus_right(self, x: Structure, a: Formula) -> bool:
        from .display import strip_tags
        key = ("r", strip_tags(x), a)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        pol = polarity(a, self.bias)
        if pol == NEG:
            result = self._command(Sequent(x, Leaf(a, self.names.covar())))
        elif isinstance(a, Atom):
            result = isinstance(x, Leaf) and x.formula == a
        elif a.op == PROD:
            result = (isinstance(x, SBin) and x.op == PROD
                      and self._focus_right(x.left, a.left)
                      and self._focus_right(x.right, a.right))
        elif a.op == RDIFF:
            result = (isinstance(x, SBin) and x.op == RDIFF
                      and self._focus_right(x.left, a.left)
                      and self._focus_left(a.right, x.right))
        else:
            result = (isinstance(x, SBin) and x.op == LDIFF
                      and self._focus_left(a.left, x.left)
                      and self._focus_right(x.right, a.right))
        self._memo[key] = result
        return result

    def _focus_left(self, a: Formula, y: Structure) -> bool:
        from .display import strip_tags
        key = ("l", a, strip_tags(y))
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        pol = polarity(a, self.bias)
        if pol == POS:
            result = self._command(Sequent(Leaf(a, self.names.var()), y))
        elif isinstance(a, Atom):
            result = isinstance(y, Leaf) and y.formula == a
        elif a.op == COPROD:
            result = (isinstance(y, SBin) and y.op == COPROD
                      and self._focus_left(a.left, y.left)
                      and self._focus_left(a.right, y.right))
        elif a.op == UNDER:
            result = (isinstance(y, SBin) and y.op == UNDER
                      and self._focus_right(y.left, a.left)
                      and self._focus_left(a.right, y.right))
        else:
            result = (isinstance(y, SBin) and y.op == OVER
                      and self._focus_left(a.left, y.left)
                      and self._focus_right(y.right, a.right))
        self._memo[key] = result
        return result
