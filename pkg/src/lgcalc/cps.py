"""Continuation-passing translation into a linear lambda calculus.

Types go to linear products and a defined negation T^ = T -o bot, with
bot the response type.  A formula's value type wraps its translation in
a negation when the formula is negative; its continuation type when
positive.  Commands translate to terms of type bot, values and contexts
to their formula's value and continuation types; the images are normal
(no beta or case-of-pair redex).

A second mapping sends the linear image to intuitionistic types over e
and t for Montague-style readings; lexical recipes are substituted for
the free word variables and the result is normalized.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from . import terms as tm
from .formula import (Atom, BiasMap, Bin, COPROD, Formula, LDIFF, NEG, OVER,
                      POS, PROD, RDIFF, UNDER, polarity)
from .structure import (INPUT, LEFT_FOCUS, Leaf, OUTPUT, RIGHT_FOCUS, SBin,
                        Sequent, Structure)

# --------------------------------------------------------------------------
# target types


@dataclass(frozen=True)
class TyAtom:
    name: str


@dataclass(frozen=True)
class TyBot:
    pass


@dataclass(frozen=True)
class TyPair:
    left: "TargetType"
    right: "TargetType"


@dataclass(frozen=True)
class TyNeg:
    body: "TargetType"


TargetType = Union[TyAtom, TyBot, TyPair, TyNeg]

BOT = TyBot()


def fmt_type(t: TargetType) -> str:
    if isinstance(t, TyAtom):
        return t.name
    if isinstance(t, TyBot):
        return "_|_"
    if isinstance(t, TyPair):
        return f"({fmt_type(t.left)} (x) {fmt_type(t.right)})"
    return f"{fmt_type(t.body)}^"


def cps_type(f: Formula, bias: BiasMap) -> TargetType:
    """The translation of a formula (before any value/continuation wrap)."""
    if isinstance(f, Atom):
        base = TyAtom(f.name)
        return base if bias.atom_polarity(f) == POS else TyNeg(base)
    v = lambda g: value_type(g, bias)
    k = lambda g: continuation_type(g, bias)
    table = {
        PROD: (v, v), COPROD: (k, k),
        OVER: (k, v), UNDER: (v, k),
        RDIFF: (v, k), LDIFF: (k, v),
    }
    lf, rf = table[f.op]
    return TyPair(lf(f.left), rf(f.right))


def value_type(f: Formula, bias: BiasMap) -> TargetType:
    t = cps_type(f, bias)
    return t if polarity(f, bias) == POS else TyNeg(t)


def continuation_type(f: Formula, bias: BiasMap) -> TargetType:
    t = cps_type(f, bias)
    return TyNeg(t) if polarity(f, bias) == POS else t


# --------------------------------------------------------------------------
# target terms


@dataclass(frozen=True)
class TVar:
    name: str


@dataclass(frozen=True)
class TConst:
    name: str


@dataclass(frozen=True)
class TLam:
    var: str
    body: "TargetTerm"


@dataclass(frozen=True)
class TApp:
    fun: "TargetTerm"
    arg: "TargetTerm"


@dataclass(frozen=True)
class TTuple:
    left: "TargetTerm"
    right: "TargetTerm"


@dataclass(frozen=True)
class TCase:
    scrutinee: "TargetTerm"
    left: str
    right: str
    body: "TargetTerm"


TargetTerm = Union[TVar, TConst, TLam, TApp, TTuple, TCase]


def fmt_target(t: TargetTerm) -> str:
    if isinstance(t, TVar) or isinstance(t, TConst):
        return t.name
    if isinstance(t, TLam):
        return f"\\{t.var}. {fmt_target(t.body)}"
    if isinstance(t, TApp):
        return f"({_fmt_app(t.fun)} {_fmt_app(t.arg)})"
    if isinstance(t, TTuple):
        return f"<{fmt_target(t.left)}, {fmt_target(t.right)}>"
    if isinstance(t, TCase):
        return (f"case {fmt_target(t.scrutinee)} of <{t.left}, {t.right}>. "
                f"{fmt_target(t.body)}")
    raise TypeError(t)


def _fmt_app(t: TargetTerm) -> str:
    s = fmt_target(t)
    return f"({s})" if isinstance(t, (TLam, TCase)) else s


def fmt_target_latex(t: TargetTerm) -> str:
    if isinstance(t, TVar) or isinstance(t, TConst):
        return f"\\textit{{{t.name}}}"
    if isinstance(t, TLam):
        return f"\\lambda {t.var}.{fmt_target_latex(t.body)}"
    if isinstance(t, TApp):
        return f"({fmt_target_latex(t.fun)}\\ {fmt_target_latex(t.arg)})"
    if isinstance(t, TTuple):
        return (f"\\langle {fmt_target_latex(t.left)}, "
                f"{fmt_target_latex(t.right)}\\rangle")
    if isinstance(t, TCase):
        return (f"\\textbf{{case}}\\ {fmt_target_latex(t.scrutinee)}\\ "
                f"\\textbf{{of}}\\ \\langle {t.left}, {t.right}\\rangle."
                f"{fmt_target_latex(t.body)}")
    raise TypeError(t)


# --------------------------------------------------------------------------
# the translation on terms


def cps_term(t: tm.Term) -> TargetTerm:
    if isinstance(t, tm.Var) or isinstance(t, tm.CoVar):
        return TVar(t.name)
    if isinstance(t, tm.CmdL):
        return TApp(TVar(t.var), cps_term(t.context))
    if isinstance(t, tm.CmdR):
        return TApp(TVar(t.covar), cps_term(t.value))
    if isinstance(t, tm.Mu):
        return TLam(t.covar, cps_term(t.body))
    if isinstance(t, tm.CoMu):
        return TLam(t.var, cps_term(t.body))
    if isinstance(t, (tm.VPair, tm.EPair)):
        return TTuple(cps_term(t.left), cps_term(t.right))
    if isinstance(t, tm.CasePrefix):
        return TCase(TVar(t.subject), t.binders[0], t.binders[1],
                     cps_term(t.body))
    raise TypeError(t)


def cps_sequent(s: Sequent, bias: BiasMap
                ) -> tuple[dict[str, TargetType], TargetType]:
    """Typing environment for the leaf tags, and the judgement's type."""
    env: dict[str, TargetType] = {}

    def walk(x: Structure, side: str) -> None:
        if isinstance(x, Leaf):
            if x.tag is None:
                raise ValueError("cps_sequent needs labeled leaves")
            env[x.tag] = (value_type(x.formula, bias) if side == INPUT
                          else continuation_type(x.formula, bias))
            return
        ls, rs = _child_sides(side, x.op)
        walk(x.left, ls)
        walk(x.right, rs)

    if s.focus == RIGHT_FOCUS:
        walk(s.ant, INPUT)
        return env, value_type(s.suc.formula, bias)  # type: ignore[union-attr]
    if s.focus == LEFT_FOCUS:
        walk(s.suc, OUTPUT)
        return env, continuation_type(s.ant.formula, bias)  # type: ignore[union-attr]
    walk(s.ant, INPUT)
    walk(s.suc, OUTPUT)
    return env, BOT


def _child_sides(side: str, op: str) -> tuple[str, str]:
    table = {
        (INPUT, PROD): (INPUT, INPUT), (INPUT, RDIFF): (INPUT, OUTPUT),
        (INPUT, LDIFF): (OUTPUT, INPUT), (OUTPUT, COPROD): (OUTPUT, OUTPUT),
        (OUTPUT, UNDER): (INPUT, OUTPUT), (OUTPUT, OVER): (OUTPUT, INPUT),
    }
    return table[(side, op)]


# --------------------------------------------------------------------------
# linear type checking of the image


class TargetTypeError(TypeError):
    pass


def typecheck_target(t: TargetTerm, expected: TargetType,
                     env: dict[str, TargetType]) -> None:
    """Check t against expected, consuming every env entry exactly once."""
    used = _check(t, expected, dict(env), path="t")
    leftover = set(env) - used
    if leftover:
        raise TargetTypeError(f"unused linear variables: {sorted(leftover)}")


def _check(t: TargetTerm, expected: TargetType, env: dict[str, TargetType],
           path: str) -> set[str]:
    if isinstance(t, TVar):
        got = env.get(t.name)
        if got is None:
            raise TargetTypeError(f"{path}: unbound {t.name}")
        if got != expected:
            raise TargetTypeError(
                f"{path}: {t.name} has {fmt_type(got)}, wanted {fmt_type(expected)}")
        return {t.name}
    if isinstance(t, TLam):
        if not isinstance(expected, TyNeg):
            raise TargetTypeError(f"{path}: lambda against {fmt_type(expected)}")
        inner = dict(env)
        inner[t.var] = expected.body
        used = _check(t.body, BOT, inner, path + ".body")
        if t.var not in used:
            raise TargetTypeError(f"{path}: unused binder {t.var}")
        return used - {t.var}
    if isinstance(t, TTuple):
        if not isinstance(expected, TyPair):
            raise TargetTypeError(f"{path}: pair against {fmt_type(expected)}")
        u1 = _check(t.left, expected.left, env, path + ".l")
        u2 = _check(t.right, expected.right, env, path + ".r")
        if u1 & u2:
            raise TargetTypeError(f"{path}: duplicated use of {u1 & u2}")
        return u1 | u2
    if isinstance(t, TApp):
        if expected != BOT:
            raise TargetTypeError(f"{path}: application must produce _|_")
        if not isinstance(t.fun, TVar):
            raise TargetTypeError(f"{path}: non-variable head (not normal)")
        fty = env.get(t.fun.name)
        if not isinstance(fty, TyNeg):
            raise TargetTypeError(f"{path}: head {t.fun.name} not a negation")
        used = _check(t.arg, fty.body, env, path + ".arg")
        if t.fun.name in used:
            raise TargetTypeError(f"{path}: duplicated use of {t.fun.name}")
        return used | {t.fun.name}
    if isinstance(t, TCase):
        if not isinstance(t.scrutinee, TVar):
            raise TargetTypeError(f"{path}: case of non-variable (not normal)")
        sty = env.get(t.scrutinee.name)
        if not isinstance(sty, TyPair):
            raise TargetTypeError(f"{path}: case subject not a pair")
        inner = dict(env)
        inner[t.left] = sty.left
        inner[t.right] = sty.right
        used = _check(t.body, expected, inner, path + ".case")
        for b in (t.left, t.right):
            if b not in used:
                raise TargetTypeError(f"{path}: unused case binder {b}")
        if t.scrutinee.name in used:
            raise TargetTypeError(f"{path}: case subject reused")
        return (used - {t.left, t.right}) | {t.scrutinee.name}
    raise TargetTypeError(f"{path}: constants have no linear type")


def is_normal(t: TargetTerm) -> bool:
    if isinstance(t, TApp):
        return (not isinstance(t.fun, (TLam, TCase))
                and is_normal(t.fun) and is_normal(t.arg))
    if isinstance(t, TCase):
        return (not isinstance(t.scrutinee, (TTuple, TLam))
                and is_normal(t.scrutinee) and is_normal(t.body))
    if isinstance(t, TLam):
        return is_normal(t.body)
    if isinstance(t, TTuple):
        return is_normal(t.left) and is_normal(t.right)
    return True


# --------------------------------------------------------------------------
# normalization (used after lexical substitution; recipes may be non-linear)


def _free_target(t: TargetTerm) -> set[str]:
    if isinstance(t, TVar):
        return {t.name}
    if isinstance(t, TConst):
        return set()
    if isinstance(t, TLam):
        return _free_target(t.body) - {t.var}
    if isinstance(t, TApp):
        return _free_target(t.fun) | _free_target(t.arg)
    if isinstance(t, TTuple):
        return _free_target(t.left) | _free_target(t.right)
    if isinstance(t, TCase):
        return (_free_target(t.scrutinee)
                | (_free_target(t.body) - {t.left, t.right}))
    raise TypeError(t)


_fresh_counter = itertools.count(1)


def _subst(t: TargetTerm, name: str, val: TargetTerm) -> TargetTerm:
    if isinstance(t, TVar):
        return val if t.name == name else t
    if isinstance(t, TConst):
        return t
    if isinstance(t, TLam):
        if t.var == name:
            return t
        if t.var in _free_target(val):
            fresh = f"{t.var}_{next(_fresh_counter)}"
            body = _subst(t.body, t.var, TVar(fresh))
            return TLam(fresh, _subst(body, name, val))
        return TLam(t.var, _subst(t.body, name, val))
    if isinstance(t, TApp):
        return TApp(_subst(t.fun, name, val), _subst(t.arg, name, val))
    if isinstance(t, TTuple):
        return TTuple(_subst(t.left, name, val), _subst(t.right, name, val))
    if isinstance(t, TCase):
        scrut = _subst(t.scrutinee, name, val)
        if name in (t.left, t.right):
            return TCase(scrut, t.left, t.right, t.body)
        body = t.body
        binders = [t.left, t.right]
        for i, b in enumerate(binders):
            if b in _free_target(val):
                fresh = f"{b}_{next(_fresh_counter)}"
                body = _subst(body, b, TVar(fresh))
                binders[i] = fresh
        return TCase(scrut, binders[0], binders[1], _subst(body, name, val))
    raise TypeError(t)


class NormalizationBudget(RuntimeError):
    pass


def normalize(t: TargetTerm, budget: int = 100_000) -> TargetTerm:
    """Beta, pair-case and case-commuting reduction to normal form."""
    steps = 0

    def step(t: TargetTerm) -> Optional[TargetTerm]:
        if isinstance(t, TApp):
            if isinstance(t.fun, TLam):
                return _subst(t.fun.body, t.fun.var, t.arg)
            if isinstance(t.fun, TCase):
                c = t.fun
                return TCase(c.scrutinee, c.left, c.right, TApp(c.body, t.arg))
            s = step(t.fun)
            if s is not None:
                return TApp(s, t.arg)
            s = step(t.arg)
            if s is not None:
                return TApp(t.fun, s)
            return None
        if isinstance(t, TCase):
            if isinstance(t.scrutinee, TTuple):
                body = _subst(t.body, t.left, t.scrutinee.left)
                return _subst(body, t.right, t.scrutinee.right)
            if isinstance(t.scrutinee, TCase):
                c = t.scrutinee
                return TCase(c.scrutinee, c.left, c.right,
                             TCase(c.body, t.left, t.right, t.body))
            s = step(t.scrutinee)
            if s is not None:
                return TCase(s, t.left, t.right, t.body)
            s = step(t.body)
            if s is not None:
                return TCase(t.scrutinee, t.left, t.right, s)
            return None
        if isinstance(t, TLam):
            s = step(t.body)
            return TLam(t.var, s) if s is not None else None
        if isinstance(t, TTuple):
            s = step(t.left)
            if s is not None:
                return TTuple(s, t.right)
            s = step(t.right)
            if s is not None:
                return TTuple(t.left, s)
            return None
        return None

    while True:
        nxt = step(t)
        if nxt is None:
            return t
        t = nxt
        steps += 1
        if steps > budget:
            raise NormalizationBudget(f"no normal form within {budget} steps")


def substitute_and_normalize(t: TargetTerm, recipes: dict[str, TargetTerm],
                             budget: int = 100_000) -> TargetTerm:
    """Replace free word variables by lexical recipes and normalize."""
    for name, recipe in recipes.items():
        t = _subst(t, name, recipe)
    return normalize(t, budget)


def alpha_equal_target(a: TargetTerm, b: TargetTerm) -> bool:
    return _canon_target(a) == _canon_target(b)


def _canon_target(t: TargetTerm, env: Optional[dict[str, str]] = None,
                  counter: Optional[itertools.count] = None) -> TargetTerm:
    env = env or {}
    counter = counter or itertools.count()
    if isinstance(t, TVar):
        return TVar(env.get(t.name, t.name))
    if isinstance(t, TConst):
        return t
    if isinstance(t, TLam):
        n = f"_{next(counter)}"
        return TLam(n, _canon_target(t.body, {**env, t.var: n}, counter))
    if isinstance(t, TApp):
        return TApp(_canon_target(t.fun, env, counter),
                    _canon_target(t.arg, env, counter))
    if isinstance(t, TTuple):
        return TTuple(_canon_target(t.left, env, counter),
                      _canon_target(t.right, env, counter))
    if isinstance(t, TCase):
        a = f"_{next(counter)}"
        b = f"_{next(counter)}"
        return TCase(_canon_target(t.scrutinee, env, counter), a, b,
                     _canon_target(t.body, {**env, t.left: a, t.right: b},
                                   counter))
    raise TypeError(t)


# --------------------------------------------------------------------------
# the intuitionistic side: types over e and t, unification-based checking


@dataclass(frozen=True)
class IAtom:
    name: str


@dataclass(frozen=True)
class IFun:
    arg: "IType"
    res: "IType"


@dataclass(frozen=True)
class IProd:
    left: "IType"
    right: "IType"


@dataclass(frozen=True)
class IMeta:
    n: int


IType = Union[IAtom, IFun, IProd, IMeta]

E = IAtom("e")
T = IAtom("t")

LEX_ATOM_TYPES = {"np": E, "s": T, "n": IFun(E, T)}


def lexify(t: TargetType) -> IType:
    """The linear-to-intuitionistic type mapping (bot and s go to t)."""
    if isinstance(t, TyAtom):
        try:
            return LEX_ATOM_TYPES[t.name]
        except KeyError:
            raise TargetTypeError(f"no lexical type for atom {t.name}")
    if isinstance(t, TyBot):
        return T
    if isinstance(t, TyPair):
        return IProd(lexify(t.left), lexify(t.right))
    return IFun(lexify(t.body), T)


def fmt_itype(t: IType) -> str:
    if isinstance(t, IAtom):
        return t.name
    if isinstance(t, IFun):
        return f"({fmt_itype(t.arg)} -> {fmt_itype(t.res)})"
    if isinstance(t, IProd):
        return f"({fmt_itype(t.left)} x {fmt_itype(t.right)})"
    return f"?{t.n}"


class _Unifier:
    def __init__(self) -> None:
        self.sub: dict[int, IType] = {}
        self.counter = itertools.count()

    def fresh(self) -> IMeta:
        return IMeta(next(self.counter))

    def resolve(self, t: IType) -> IType:
        while isinstance(t, IMeta) and t.n in self.sub:
            t = self.sub[t.n]
        return t

    def unify(self, a: IType, b: IType, path: str) -> None:
        a, b = self.resolve(a), self.resolve(b)
        if a == b:
            return
        if isinstance(a, IMeta):
            self.sub[a.n] = b
            return
        if isinstance(b, IMeta):
            self.sub[b.n] = a
            return
        if isinstance(a, IFun) and isinstance(b, IFun):
            self.unify(a.arg, b.arg, path)
            self.unify(a.res, b.res, path)
            return
        if isinstance(a, IProd) and isinstance(b, IProd):
            self.unify(a.left, b.left, path)
            self.unify(a.right, b.right, path)
            return
        raise TargetTypeError(
            f"{path}: cannot unify {fmt_itype(a)} with {fmt_itype(b)}")

    def zonk(self, t: IType) -> IType:
        t = self.resolve(t)
        if isinstance(t, IFun):
            return IFun(self.zonk(t.arg), self.zonk(t.res))
        if isinstance(t, IProd):
            return IProd(self.zonk(t.left), self.zonk(t.right))
        return t


def infer_lexical(t: TargetTerm, expected: Optional[IType] = None,
                  constants: Optional[dict[str, IType]] = None) -> IType:
    """Infer an intuitionistic type; constants unify across one call."""
    uni = _Unifier()
    constants = constants if constants is not None else {}

    def go(t: TargetTerm, env: dict[str, IType], path: str) -> IType:
        if isinstance(t, TVar):
            if t.name in env:
                return env[t.name]
            if t.name not in constants:
                constants[t.name] = uni.fresh()
            return constants[t.name]
        if isinstance(t, TConst):
            if t.name not in constants:
                constants[t.name] = uni.fresh()
            return constants[t.name]
        if isinstance(t, TLam):
            a = uni.fresh()
            r = go(t.body, {**env, t.var: a}, path + ".body")
            return IFun(a, r)
        if isinstance(t, TApp):
            f = go(t.fun, env, path + ".fun")
            x = go(t.arg, env, path + ".arg")
            r = uni.fresh()
            uni.unify(f, IFun(x, r), path)
            return r
        if isinstance(t, TTuple):
            return IProd(go(t.left, env, path + ".l"),
                         go(t.right, env, path + ".r"))
        if isinstance(t, TCase):
            sty = go(t.scrutinee, env, path + ".scrut")
            a, b = uni.fresh(), uni.fresh()
            uni.unify(sty, IProd(a, b), path)
            return go(t.body, {**env, t.left: a, t.right: b}, path + ".case")
        raise TypeError(t)

    got = go(t, {}, "t")
    if expected is not None:
        uni.unify(got, expected, "t")
    for name in list(constants):
        constants[name] = uni.zonk(constants[name])
    return uni.zonk(got)


# --------------------------------------------------------------------------
# parser for lexical lambda recipes


class LambdaSyntaxError(ValueError):
    pass


def parse_lambda(text: str) -> TargetTerm:
    toks = _lex_lambda(text)
    term, rest = _parse_term(toks, frozenset())
    if rest:
        raise LambdaSyntaxError(f"trailing input: {rest[:4]}")
    return term


def _lex_lambda(text: str) -> list[str]:
    import re
    toks = re.findall(r"\\|\.|<|>|,|\(|\)|[A-Za-z_][A-Za-z0-9_']*", text)
    if "".join(toks).replace(" ", "") != text.replace(" ", ""):
        stripped = re.sub(r"\s+", "", text)
        joined = "".join(toks)
        if joined != stripped:
            raise LambdaSyntaxError(f"bad characters in {text!r}")
    return toks


def _parse_term(toks: list[str], bound: frozenset) -> tuple[TargetTerm, list[str]]:
    if toks and toks[0] == "\\":
        pat, rest = _parse_pattern(toks[1:])
        if not rest or rest[0] != ".":
            raise LambdaSyntaxError("expected '.' after lambda pattern")
        body, rest = _parse_term(rest[1:], bound | _pattern_names(pat))
        return _lambda_from_pattern(pat, body), rest
    if toks and toks[0] == "case":
        scrut, rest = _parse_app(toks[1:], bound)
        if not rest or rest[0] != "of":
            raise LambdaSyntaxError("expected 'of' in case")
        pat, rest = _parse_pattern(rest[1:])
        if pat[0] != "pair":
            raise LambdaSyntaxError("case pattern must be a pair")
        if not rest or rest[0] != ".":
            raise LambdaSyntaxError("expected '.' after case pattern")
        body, rest = _parse_term(rest[1:], bound | _pattern_names(pat))
        return _case_from_pattern(scrut, pat, body), rest
    return _parse_app(toks, bound)


def _parse_pattern(toks: list[str]):
    if not toks:
        raise LambdaSyntaxError("missing pattern")
    if toks[0] == "<":
        a, rest = _parse_pattern(toks[1:])
        if not rest or rest[0] != ",":
            raise LambdaSyntaxError("expected ',' in pattern")
        b, rest = _parse_pattern(rest[1:])
        if not rest or rest[0] != ">":
            raise LambdaSyntaxError("expected '>' in pattern")
        return ("pair", a, b), rest[1:]
    if toks[0] in ("\\", ".", "(", ")", ",", ">"):
        raise LambdaSyntaxError(f"bad pattern token {toks[0]!r}")
    return ("var", toks[0]), toks[1:]


def _pattern_names(pat) -> frozenset:
    if pat[0] == "var":
        return frozenset({pat[1]})
    return _pattern_names(pat[1]) | _pattern_names(pat[2])


_pat_counter = itertools.count(1)


def _lambda_from_pattern(pat, body: TargetTerm) -> TargetTerm:
    if pat[0] == "var":
        return TLam(pat[1], body)
    scrut = f"_p{next(_pat_counter)}"
    return TLam(scrut, _case_from_pattern(TVar(scrut), pat, body))


def _case_from_pattern(scrut: TargetTerm, pat, body: TargetTerm) -> TargetTerm:
    assert pat[0] == "pair"
    left, right = pat[1], pat[2]
    lname = left[1] if left[0] == "var" else f"_p{next(_pat_counter)}"
    rname = right[1] if right[0] == "var" else f"_p{next(_pat_counter)}"
    inner = body
    if right[0] == "pair":
        inner = _case_from_pattern(TVar(rname), right, inner)
    if left[0] == "pair":
        inner = _case_from_pattern(TVar(lname), left, inner)
    return TCase(scrut, lname, rname, inner)


def _parse_app(toks: list[str], bound: frozenset) -> tuple[TargetTerm, list[str]]:
    head, rest = _parse_atom(toks, bound)
    while rest and rest[0] not in (")", ",", ">", ".", "of"):
        arg, rest = _parse_atom(rest, bound)
        head = TApp(head, arg)
    return head, rest


def _parse_atom(toks: list[str], bound: frozenset) -> tuple[TargetTerm, list[str]]:
    if not toks:
        raise LambdaSyntaxError("unexpected end of input")
    t = toks[0]
    if t == "(":
        inner, rest = _parse_term(toks[1:], bound)
        if not rest or rest[0] != ")":
            raise LambdaSyntaxError("expected ')'")
        return inner, rest[1:]
    if t == "<":
        a, rest = _parse_term(toks[1:], bound)
        if not rest or rest[0] != ",":
            raise LambdaSyntaxError("expected ',' in tuple")
        b, rest = _parse_term(rest[1:], bound)
        if not rest or rest[0] != ">":
            raise LambdaSyntaxError("expected '>' in tuple")
        return TTuple(a, b), rest[1:]
    if t == "\\":
        return _parse_term(toks, bound)
    if t == "case":
        return _parse_term(toks, bound)
    if t in (".", ")", ",", ">", "of"):
        raise LambdaSyntaxError(f"unexpected {t!r}")
    name = t
    rest = toks[1:]
    if name in bound:
        return TVar(name), rest
    return TConst(name), rest


_PRETTY_POOL = ("x", "y", "z", "w", "v", "u", "c", "k", "m", "n2")


def pretty_names(t: TargetTerm) -> TargetTerm:
    """Rename bound variables to a stable, readable sequence."""
    counter = itertools.count()

    def fresh() -> str:
        i = next(counter)
        base = _PRETTY_POOL[i % len(_PRETTY_POOL)]
        gen = i // len(_PRETTY_POOL)
        return base if gen == 0 else f"{base}{gen + 1}"

    def go(t: TargetTerm, env: dict[str, str]) -> TargetTerm:
        if isinstance(t, TVar):
            return TVar(env.get(t.name, t.name))
        if isinstance(t, TConst):
            return t
        if isinstance(t, TLam):
            n = fresh()
            return TLam(n, go(t.body, {**env, t.var: n}))
        if isinstance(t, TApp):
            return TApp(go(t.fun, env), go(t.arg, env))
        if isinstance(t, TTuple):
            return TTuple(go(t.left, env), go(t.right, env))
        if isinstance(t, TCase):
            a, b = fresh(), fresh()
            return TCase(go(t.scrutinee, env), a, b,
                         go(t.body, {**env, t.left: a, t.right: b}))
        raise TypeError(t)

    return go(t, {})
