"""Proof terms for the focused calculus: commands, values and contexts.

Values type right-focused sequents, contexts left-focused ones, commands
unfocused ones.  Case prefixes record the invertible rewrite steps; the
pair constructors mirror the six non-invertible rules.  All terms are
linear: each variable and covariable occurs exactly once in its scope.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .formula import COPROD, LDIFF, OVER, PROD, RDIFF, UNDER


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Mu:
    covar: str
    body: "Command"


@dataclass(frozen=True)
class VPair:
    """v1 * v2  |  v (/) e  |  e (\\) v"""
    op: str
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class CoVar:
    name: str


@dataclass(frozen=True)
class CoMu:
    var: str
    body: "Command"


@dataclass(frozen=True)
class EPair:
    """e1 (+) e2  |  v \\ e  |  e / v"""
    op: str
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class CmdL:
    """<x | E>: a variable against a focused context."""
    var: str
    context: "Context"


@dataclass(frozen=True)
class CmdR:
    """<V | a>: a focused value against a covariable."""
    value: "Value"
    covar: str


@dataclass(frozen=True)
class CasePrefix:
    kind: str                 # one of *L, (/)L, (\)L, (+)R, \R, /R
    binders: tuple[str, str]
    subject: str
    body: "Command"

    KINDS = ("*L", "(/)L", "(\\)L", "(+)R", "\\R", "/R")


Value = Union[Var, Mu, VPair]
Context = Union[CoVar, CoMu, EPair]
Command = Union[CmdL, CmdR, CasePrefix]
Term = Union[Value, Context, Command]

# binder sorts per case kind: True where the binder is a variable
PREFIX_BINDER_IS_VAR = {
    "*L": (True, True),
    "(/)L": (True, False),
    "(\\)L": (False, True),
    "(+)R": (False, False),
    "\\R": (True, False),
    "/R": (False, True),
}

_PREFIX_TOKEN = {"*L": PROD, "(/)L": RDIFF, "(\\)L": LDIFF,
                 "(+)R": COPROD, "\\R": UNDER, "/R": OVER}


def fmt_term(t: Term) -> str:
    if isinstance(t, Var) or isinstance(t, CoVar):
        return t.name
    if isinstance(t, Mu):
        return f"mu {t.covar}. {fmt_term(t.body)}"
    if isinstance(t, CoMu):
        return f"comu {t.var}. {fmt_term(t.body)}"
    if isinstance(t, (VPair, EPair)):
        return f"{_paren(t.left)} {t.op} {_paren(t.right)}"
    if isinstance(t, CmdL):
        return f"<{t.var} | {fmt_term(t.context)}>"
    if isinstance(t, CmdR):
        return f"<{fmt_term(t.value)} | {t.covar}>"
    if isinstance(t, CasePrefix):
        a, b = t.binders
        tok = _PREFIX_TOKEN[t.kind]
        return f"case {t.subject} of ({a} {tok} {b}). {fmt_term(t.body)}"
    raise TypeError(t)


def _paren(t: Term) -> str:
    s = fmt_term(t)
    if isinstance(t, (Var, CoVar)):
        return s
    return f"({s})"


# ---------------------------------------------------------------------------
# names, linearity, alpha-equivalence


def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, (Mu, CoMu, CasePrefix)):
        yield from subterms(t.body)
    elif isinstance(t, (VPair, EPair)):
        yield from subterms(t.left)
        yield from subterms(t.right)
    elif isinstance(t, CmdL):
        yield from subterms(t.context)
    elif isinstance(t, CmdR):
        yield from subterms(t.value)


def free_names(t: Term) -> dict[str, int]:
    """Occurrence counts of free (co)variable names."""
    out: dict[str, int] = {}

    def use(n: str, bound: frozenset) -> None:
        if n not in bound:
            out[n] = out.get(n, 0) + 1

    def go(t: Term, bound: frozenset) -> None:
        if isinstance(t, Var) or isinstance(t, CoVar):
            use(t.name, bound)
        elif isinstance(t, Mu):
            go(t.body, bound | {t.covar})
        elif isinstance(t, CoMu):
            go(t.body, bound | {t.var})
        elif isinstance(t, (VPair, EPair)):
            go(t.left, bound)
            go(t.right, bound)
        elif isinstance(t, CmdL):
            use(t.var, bound)
            go(t.context, bound)
        elif isinstance(t, CmdR):
            go(t.value, bound)
            use(t.covar, bound)
        elif isinstance(t, CasePrefix):
            use(t.subject, bound)
            go(t.body, bound | set(t.binders))
        else:
            raise TypeError(t)

    go(t, frozenset())
    return out


def is_linear(t: Term) -> bool:
    """Every free name used once and every binder's name used exactly once."""
    if any(n > 1 for n in free_names(t).values()):
        return False

    def go(t: Term) -> bool:
        if isinstance(t, Mu):
            return free_names(t.body).get(t.covar, 0) == 1 and go(t.body)
        if isinstance(t, CoMu):
            return free_names(t.body).get(t.var, 0) == 1 and go(t.body)
        if isinstance(t, CasePrefix):
            counts = free_names(t.body)
            return all(counts.get(b, 0) == 1 for b in t.binders) and go(t.body)
        if isinstance(t, (VPair, EPair)):
            return go(t.left) and go(t.right)
        if isinstance(t, CmdL):
            return go(t.context)
        if isinstance(t, CmdR):
            return go(t.value)
        return True

    return go(t)


def rename(t: Term, mapping: dict[str, str]) -> Term:
    """Capture-naive simultaneous rename (callers guarantee freshness)."""
    def m(n: str) -> str:
        return mapping.get(n, n)

    if isinstance(t, Var):
        return Var(m(t.name))
    if isinstance(t, CoVar):
        return CoVar(m(t.name))
    if isinstance(t, Mu):
        return Mu(m(t.covar), rename(t.body, mapping))
    if isinstance(t, CoMu):
        return CoMu(m(t.var), rename(t.body, mapping))
    if isinstance(t, VPair):
        return VPair(t.op, rename(t.left, mapping), rename(t.right, mapping))
    if isinstance(t, EPair):
        return EPair(t.op, rename(t.left, mapping), rename(t.right, mapping))
    if isinstance(t, CmdL):
        return CmdL(m(t.var), rename(t.context, mapping))
    if isinstance(t, CmdR):
        return CmdR(rename(t.value, mapping), m(t.covar))
    if isinstance(t, CasePrefix):
        return CasePrefix(t.kind, (m(t.binders[0]), m(t.binders[1])),
                          m(t.subject), rename(t.body, mapping))
    raise TypeError(t)


def canonical(t: Term) -> Term:
    """Rename bound names to _0, _1, ... in traversal order."""
    counter = itertools.count()

    def go(t: Term, env: dict[str, str]) -> Term:
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        if isinstance(t, CoVar):
            return CoVar(env.get(t.name, t.name))
        if isinstance(t, Mu):
            n = f"_{next(counter)}"
            return Mu(n, go(t.body, {**env, t.covar: n}))
        if isinstance(t, CoMu):
            n = f"_{next(counter)}"
            return CoMu(n, go(t.body, {**env, t.var: n}))
        if isinstance(t, VPair):
            return VPair(t.op, go(t.left, env), go(t.right, env))
        if isinstance(t, EPair):
            return EPair(t.op, go(t.left, env), go(t.right, env))
        if isinstance(t, CmdL):
            return CmdL(env.get(t.var, t.var), go(t.context, env))
        if isinstance(t, CmdR):
            return CmdR(go(t.value, env), env.get(t.covar, t.covar))
        if isinstance(t, CasePrefix):
            a = f"_{next(counter)}"
            b = f"_{next(counter)}"
            env2 = {**env, t.binders[0]: a, t.binders[1]: b}
            return CasePrefix(t.kind, (a, b), env.get(t.subject, t.subject),
                              go(t.body, env2))
        raise TypeError(t)

    return go(t, {})


def alpha_equal(a: Term, b: Term) -> bool:
    return canonical(a) == canonical(b)


# ---------------------------------------------------------------------------
# commuting conversions: case prefixes migrate to their innermost position


def _freshen(t: Term) -> Term:
    counter = itertools.count()

    def go(t: Term, env: dict[str, str]) -> Term:
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        if isinstance(t, CoVar):
            return CoVar(env.get(t.name, t.name))
        if isinstance(t, Mu):
            n = f"b{next(counter)}"
            return Mu(n, go(t.body, {**env, t.covar: n}))
        if isinstance(t, CoMu):
            n = f"b{next(counter)}"
            return CoMu(n, go(t.body, {**env, t.var: n}))
        if isinstance(t, VPair):
            return VPair(t.op, go(t.left, env), go(t.right, env))
        if isinstance(t, EPair):
            return EPair(t.op, go(t.left, env), go(t.right, env))
        if isinstance(t, CmdL):
            return CmdL(env.get(t.var, t.var), go(t.context, env))
        if isinstance(t, CmdR):
            return CmdR(go(t.value, env), env.get(t.covar, t.covar))
        if isinstance(t, CasePrefix):
            a = f"b{next(counter)}"
            b = f"b{next(counter)}"
            env2 = {**env, t.binders[0]: a, t.binders[1]: b}
            return CasePrefix(t.kind, (a, b), env.get(t.subject, t.subject),
                              go(t.body, env2))
        raise TypeError(t)

    return go(t, {})


def _inner_commands(t: Term) -> list[Command]:
    """Commands immediately below t's term structure (through one Mu/CoMu)."""
    if isinstance(t, (Mu, CoMu)):
        return [t.body]
    if isinstance(t, (VPair, EPair)):
        return _inner_commands(t.left) + _inner_commands(t.right)
    if isinstance(t, CmdL):
        return _inner_commands(t.context)
    if isinstance(t, CmdR):
        return _inner_commands(t.value)
    return []


def _replace_command(t: Term, old: Command, new: Command) -> Term:
    if t is old:
        return new
    if isinstance(t, Mu):
        return Mu(t.covar, _replace_command(t.body, old, new))
    if isinstance(t, CoMu):
        return CoMu(t.var, _replace_command(t.body, old, new))
    if isinstance(t, VPair):
        return VPair(t.op, _replace_command(t.left, old, new),
                     _replace_command(t.right, old, new))
    if isinstance(t, EPair):
        return EPair(t.op, _replace_command(t.left, old, new),
                     _replace_command(t.right, old, new))
    if isinstance(t, CmdL):
        return CmdL(t.var, _replace_command(t.context, old, new))
    if isinstance(t, CmdR):
        return CmdR(_replace_command(t.value, old, new), t.covar)
    if isinstance(t, CasePrefix):
        return CasePrefix(t.kind, t.binders, t.subject,
                          _replace_command(t.body, old, new))
    return t


def _push_prefix(kind: str, binders: tuple[str, str], subject: str,
                 body: Command) -> Command:
    """Sink a prefix as deep as possible into body."""
    want = set(binders)
    if isinstance(body, CasePrefix):
        if want & (set(body.binders) | {body.subject}):
            return CasePrefix(kind, binders, subject, body)
        inner = _push_prefix(kind, binders, subject, body.body)
        return CasePrefix(body.kind, body.binders, body.subject, inner)
    # find a unique inner command containing both binders free
    candidates = [c for c in _inner_commands(body)
                  if want <= set(free_names(c))]
    if len(candidates) == 1:
        pushed = _push_prefix(kind, binders, subject, candidates[0])
        return _replace_command(body, candidates[0], pushed)  # type: ignore[return-value]
    return CasePrefix(kind, binders, subject, body)


def _sort_chains(c: Command, depth_of: dict[str, int]) -> Command:
    if isinstance(c, CasePrefix):
        chain = []
        cur: Command = c
        while isinstance(cur, CasePrefix):
            chain.append(cur)
            cur = cur.body
        cur = _descend(cur, depth_of)
        # stable sort, respecting subject-of-later-is-binder-of-earlier chains
        keyed = []
        for p in chain:
            key = depth_of.get(p.subject, -1), p.subject, p.kind
            keyed.append((key, p))
        order = sorted(range(len(keyed)), key=lambda i: keyed[i][0])
        # dependencies: if p2.subject is bound by p1, p1 must stay outside
        result = cur
        placed: list[CasePrefix] = []
        for i in reversed(order):
            p = keyed[i][1]
            result = CasePrefix(p.kind, p.binders, p.subject, result)
            placed.append(p)
        ok = _prefix_scopes_ok(result)
        if not ok:
            result = cur
            for p in reversed(chain):
                result = CasePrefix(p.kind, p.binders, p.subject, result)
        return result
    return _descend(c, depth_of)


def _descend(t: Term, depth_of: dict[str, int]) -> Term:
    if isinstance(t, Mu):
        return Mu(t.covar, _sort_chains(t.body, depth_of))
    if isinstance(t, CoMu):
        return CoMu(t.var, _sort_chains(t.body, depth_of))
    if isinstance(t, VPair):
        return VPair(t.op, _descend(t.left, depth_of), _descend(t.right, depth_of))
    if isinstance(t, EPair):
        return EPair(t.op, _descend(t.left, depth_of), _descend(t.right, depth_of))
    if isinstance(t, CmdL):
        return CmdL(t.var, _descend(t.context, depth_of))
    if isinstance(t, CmdR):
        return CmdR(_descend(t.value, depth_of), t.covar)
    if isinstance(t, CasePrefix):
        return _sort_chains(t, depth_of)
    return t


def _binder_names(t: Term) -> set[str]:
    names = set()
    for s in subterms(t):
        if isinstance(s, Mu):
            names.add(s.covar)
        elif isinstance(s, CoMu):
            names.add(s.var)
        elif isinstance(s, CasePrefix):
            names.update(s.binders)
    return names


def _prefix_scopes_ok(t: Term) -> bool:
    """Every use of a bound name must sit below its binder."""
    binders = _binder_names(t)

    def go(t: Term, bound: frozenset) -> bool:
        def ok(n: str) -> bool:
            return n not in binders or n in bound

        if isinstance(t, Var) or isinstance(t, CoVar):
            return ok(t.name)
        if isinstance(t, Mu):
            return go(t.body, bound | {t.covar})
        if isinstance(t, CoMu):
            return go(t.body, bound | {t.var})
        if isinstance(t, (VPair, EPair)):
            return go(t.left, bound) and go(t.right, bound)
        if isinstance(t, CmdL):
            return ok(t.var) and go(t.context, bound)
        if isinstance(t, CmdR):
            return ok(t.covar) and go(t.value, bound)
        if isinstance(t, CasePrefix):
            return ok(t.subject) and go(t.body, bound | set(t.binders))
        raise TypeError(t)

    return go(t, frozenset())


def commuting_normal(t: Term) -> Term:
    """Push every case prefix to its innermost admissible position, then
    order independent prefixes canonically and rename bound names."""
    t = _freshen(t)

    def sink(t: Term) -> Term:
        if isinstance(t, CasePrefix):
            body = sink(t.body)
            return _push_prefix(t.kind, t.binders, t.subject, body)
        if isinstance(t, Mu):
            return Mu(t.covar, sink(t.body))
        if isinstance(t, CoMu):
            return CoMu(t.var, sink(t.body))
        if isinstance(t, VPair):
            return VPair(t.op, sink(t.left), sink(t.right))
        if isinstance(t, EPair):
            return EPair(t.op, sink(t.left), sink(t.right))
        if isinstance(t, CmdL):
            return CmdL(t.var, sink(t.context))
        if isinstance(t, CmdR):
            return CmdR(sink(t.value), t.covar)
        return t

    t = sink(t)
    depth_of: dict[str, int] = {}

    def record(t: Term, depth: int) -> None:
        if isinstance(t, Mu):
            depth_of[t.covar] = depth
            record(t.body, depth + 1)
        elif isinstance(t, CoMu):
            depth_of[t.var] = depth
            record(t.body, depth + 1)
        elif isinstance(t, CasePrefix):
            depth_of[t.binders[0]] = depth
            depth_of[t.binders[1]] = depth
            record(t.body, depth + 1)
        elif isinstance(t, (VPair, EPair)):
            record(t.left, depth)
            record(t.right, depth)
        elif isinstance(t, CmdL):
            record(t.context, depth)
        elif isinstance(t, CmdR):
            record(t.value, depth)

    record(t, 0)
    t = _descend(t, depth_of)
    return canonical(t)


def commuting_equal(a: Term, b: Term) -> bool:
    return commuting_normal(a) == commuting_normal(b)


# ---------------------------------------------------------------------------
# phase-disciplined form: hoist each case prefix to its outermost position


def discipline_normal(t: Term) -> Term:
    """Rewrite a term so every case prefix fires as early as possible.

    This is the commuting-conversion representative in which no invertible
    step is postponed past a focusing step; terms produced that way pass
    the focused type checker directly.
    """
    t = _freshen(t)
    binder_names = _binder_names(t)
    pending: list[tuple[str, tuple[str, str], str]] = []

    def strip(t: Term) -> Term:
        if isinstance(t, CasePrefix):
            pending.append((t.kind, t.binders, t.subject))
            return strip(t.body)
        if isinstance(t, Mu):
            return Mu(t.covar, strip(t.body))
        if isinstance(t, CoMu):
            return CoMu(t.var, strip(t.body))
        if isinstance(t, VPair):
            return VPair(t.op, strip(t.left), strip(t.right))
        if isinstance(t, EPair):
            return EPair(t.op, strip(t.left), strip(t.right))
        if isinstance(t, CmdL):
            return CmdL(t.var, strip(t.context))
        if isinstance(t, CmdR):
            return CmdR(strip(t.value), t.covar)
        return t

    t = strip(t)

    def place_command(cmd: Command, avail: set[str]) -> Command:
        changed = True
        while changed:
            changed = False
            names = free_names(cmd)

            def binder_used(b, me) -> bool:
                # a binder may also be consumed as the subject of a prefix
                # that is still waiting to be nested inside
                if names.get(b, 0) >= 1:
                    return True
                return any(q is not me and q[2] == b for q in pending)

            for p in list(pending):
                kind, binders, subject = p
                if subject in binder_names and subject not in avail:
                    continue
                if all(binder_used(b, p) for b in binders):
                    pending.remove(p)
                    cmd = CasePrefix(kind, binders, subject,
                                     place_command(cmd, avail | set(binders)))
                    changed = True
                    break
        if isinstance(cmd, CasePrefix):
            return CasePrefix(cmd.kind, cmd.binders, cmd.subject,
                              place_command(cmd.body, avail | set(cmd.binders)))
        return _place_inside(cmd, avail)

    def _place_inside(t: Term, avail: set[str]) -> Term:
        if isinstance(t, Mu):
            return Mu(t.covar, place_command(t.body, avail | {t.covar}))
        if isinstance(t, CoMu):
            return CoMu(t.var, place_command(t.body, avail | {t.var}))
        if isinstance(t, VPair):
            return VPair(t.op, _place_inside(t.left, avail),
                         _place_inside(t.right, avail))
        if isinstance(t, EPair):
            return EPair(t.op, _place_inside(t.left, avail),
                         _place_inside(t.right, avail))
        if isinstance(t, CmdL):
            return CmdL(t.var, _place_inside(t.context, avail))
        if isinstance(t, CmdR):
            return CmdR(_place_inside(t.value, avail), t.covar)
        return t

    if isinstance(t, (CmdL, CmdR, CasePrefix)):
        out = place_command(t, set())
    else:
        out = _place_inside(t, set())
    assert not pending, "unplaced case prefixes"
    return out
