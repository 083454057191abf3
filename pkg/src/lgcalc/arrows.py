"""The deductive presentation of LG: combinator proofs f : A -> B.

Proofs are syntactic trees; no quotienting by compositional equations.
``check`` recomputes source and target bottom-up and refuses ill-typed
nodes.  Besides identity, composition and the eight (co)residuation
moves, there are four distributivity axioms (d, q, b, p) and their four
arrow-reversal images, kept primitive so that the two symmetries are
involutions on proof trees.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .formula import (Atom, Bin, Formula, coprod, ldiff, over, prod, rdiff,
                      under, fmt_formula)
from .formula import mirror as fmirror
from .formula import dual as fdual


@dataclass(frozen=True)
class Id:
    formula: Formula


@dataclass(frozen=True)
class Comp:
    g: "ArrowProof"
    f: "ArrowProof"


@dataclass(frozen=True)
class Res:
    """One of the eight (co)residuation moves, selected by ``kind``.

    kind        premise                conclusion
    res_over    f : A * B -> C         A -> C / B
    res_under   f : A * B -> C         B -> A \\ C
    cores_ldiff f : C -> B (+) A       B (\\) C -> A
    cores_rdiff f : C -> B (+) A       C (/) A -> B

    The ``*_inv`` kinds invert these.
    """
    kind: str
    body: "ArrowProof"

    KINDS = ("res_over", "res_over_inv", "res_under", "res_under_inv",
             "cores_ldiff", "cores_ldiff_inv", "cores_rdiff", "cores_rdiff_inv")

    def __post_init__(self) -> None:
        if self.kind not in Res.KINDS:
            raise ValueError(f"bad residuation move: {self.kind!r}")


@dataclass(frozen=True)
class Gr:
    """Distributivity axiom; ``name`` in d,q,b,p or their duals dd,dq,db,dp.

    d : (A (\\) B) * C   ->  A (\\) (B * C)
    q : C * (A (\\) B)   ->  A (\\) (C * B)
    b : C * (B (/) A)    ->  (C * B) (/) A
    p : (B (/) A) * C    ->  (B * C) (/) A
    dd: (C (+) B) / A    ->  C (+) (B / A)
    dq: (B (+) C) / A    ->  (B / A) (+) C
    db: A \\ (B (+) C)   ->  (A \\ B) (+) C
    dp: A \\ (C (+) B)   ->  C (+) (A \\ B)
    """
    name: str
    a: Formula
    b: Formula
    c: Formula

    NAMES = ("d", "q", "b", "p", "dd", "dq", "db", "dp")

    def __post_init__(self) -> None:
        if self.name not in Gr.NAMES:
            raise ValueError(f"bad axiom name: {self.name!r}")


ArrowProof = Union[Id, Comp, Res, Gr]


@dataclass(frozen=True)
class Arrow:
    source: Formula
    target: Formula
    proof: ArrowProof


def res_over(p: ArrowProof) -> Res:
    return Res("res_over", p)


def res_over_inv(p: ArrowProof) -> Res:
    return Res("res_over_inv", p)


def res_under(p: ArrowProof) -> Res:
    return Res("res_under", p)


def res_under_inv(p: ArrowProof) -> Res:
    return Res("res_under_inv", p)


def cores_ldiff(p: ArrowProof) -> Res:
    return Res("cores_ldiff", p)


def cores_ldiff_inv(p: ArrowProof) -> Res:
    return Res("cores_ldiff_inv", p)


def cores_rdiff(p: ArrowProof) -> Res:
    return Res("cores_rdiff", p)


def cores_rdiff_inv(p: ArrowProof) -> Res:
    return Res("cores_rdiff_inv", p)


# ---------------------------------------------------------------------------
# typing


def _gr_type(ax: Gr) -> tuple[Formula, Formula]:
    a, b, c = ax.a, ax.b, ax.c
    if ax.name == "d":
        return prod(ldiff(a, b), c), ldiff(a, prod(b, c))
    if ax.name == "q":
        return prod(c, ldiff(a, b)), ldiff(a, prod(c, b))
    if ax.name == "b":
        return prod(c, rdiff(b, a)), rdiff(prod(c, b), a)
    if ax.name == "p":
        return prod(rdiff(b, a), c), rdiff(prod(b, c), a)
    if ax.name == "dd":
        return over(coprod(c, b), a), coprod(c, over(b, a))
    if ax.name == "dq":
        return over(coprod(b, c), a), coprod(over(b, a), c)
    if ax.name == "db":
        return under(a, coprod(b, c)), coprod(under(a, b), c)
    if ax.name == "dp":
        return under(a, coprod(c, b)), coprod(c, under(a, b))
    raise AssertionError(ax.name)


def infer(p: ArrowProof) -> Optional[tuple[Formula, Formula]]:
    """(source, target) of a proof, or None if some node is ill-typed."""
    if isinstance(p, Id):
        return p.formula, p.formula
    if isinstance(p, Comp):
        tf = infer(p.f)
        tg = infer(p.g)
        if tf is None or tg is None or tf[1] != tg[0]:
            return None
        return tf[0], tg[1]
    if isinstance(p, Gr):
        return _gr_type(p)
    assert isinstance(p, Res)
    t = infer(p.body)
    if t is None:
        return None
    src, tgt = t
    k = p.kind
    if k == "res_over":
        if isinstance(src, Bin) and src.op == "*":
            return src.left, over(tgt, src.right)
    elif k == "res_under":
        if isinstance(src, Bin) and src.op == "*":
            return src.right, under(src.left, tgt)
    elif k == "res_over_inv":
        if isinstance(tgt, Bin) and tgt.op == "/":
            return prod(src, tgt.right), tgt.left
    elif k == "res_under_inv":
        if isinstance(tgt, Bin) and tgt.op == "\\":
            return prod(tgt.left, src), tgt.right
    elif k == "cores_ldiff":
        if isinstance(tgt, Bin) and tgt.op == "(+)":
            return ldiff(tgt.left, src), tgt.right
    elif k == "cores_rdiff":
        if isinstance(tgt, Bin) and tgt.op == "(+)":
            return rdiff(src, tgt.right), tgt.left
    elif k == "cores_ldiff_inv":
        if isinstance(src, Bin) and src.op == "(\\)":
            return src.right, coprod(src.left, tgt)
    elif k == "cores_rdiff_inv":
        if isinstance(src, Bin) and src.op == "(/)":
            return src.left, coprod(tgt, src.right)
    return None


def check(a: Arrow) -> bool:
    t = infer(a.proof)
    return t is not None and t == (a.source, a.target)


def arrow(p: ArrowProof) -> Arrow:
    """Package a proof with its inferred endpoints; raises if ill-typed."""
    t = infer(p)
    if t is None:
        raise TypeError(f"ill-typed arrow proof: {fmt_proof(p)}")
    return Arrow(t[0], t[1], p)


def diagnose(p: ArrowProof) -> Optional[str]:
    """Human-readable description of the first ill-typed node, or None."""
    if infer(p) is not None:
        return None
    for child in _children(p):
        msg = diagnose(child)
        if msg is not None:
            return msg
    return f"ill-typed node: {fmt_proof(p)}"


def _children(p: ArrowProof) -> tuple[ArrowProof, ...]:
    if isinstance(p, Comp):
        return (p.g, p.f)
    if isinstance(p, Res):
        return (p.body,)
    return ()


# ---------------------------------------------------------------------------
# symmetries on proofs

_MIRROR_RES = {
    "res_over": "res_under", "res_under": "res_over",
    "res_over_inv": "res_under_inv", "res_under_inv": "res_over_inv",
    "cores_ldiff": "cores_rdiff", "cores_rdiff": "cores_ldiff",
    "cores_ldiff_inv": "cores_rdiff_inv", "cores_rdiff_inv": "cores_ldiff_inv",
}

_MIRROR_GR = {"d": "b", "b": "d", "q": "p", "p": "q",
              "dd": "db", "db": "dd", "dq": "dp", "dp": "dq"}

_DUAL_RES = {
    "res_over": "cores_ldiff", "cores_ldiff": "res_over",
    "res_under": "cores_rdiff", "cores_rdiff": "res_under",
    "res_over_inv": "cores_ldiff_inv", "cores_ldiff_inv": "res_over_inv",
    "res_under_inv": "cores_rdiff_inv", "cores_rdiff_inv": "res_under_inv",
}

_DUAL_GR = {"d": "dd", "dd": "d", "q": "dq", "dq": "q",
            "b": "db", "db": "b", "p": "dp", "dp": "p"}


def mirror_proof(p: ArrowProof) -> ArrowProof:
    if isinstance(p, Id):
        return Id(fmirror(p.formula))
    if isinstance(p, Comp):
        return Comp(mirror_proof(p.g), mirror_proof(p.f))
    if isinstance(p, Res):
        return Res(_MIRROR_RES[p.kind], mirror_proof(p.body))
    return Gr(_MIRROR_GR[p.name], fmirror(p.a), fmirror(p.b), fmirror(p.c))


def dual_proof(p: ArrowProof) -> ArrowProof:
    if isinstance(p, Id):
        return Id(fdual(p.formula))
    if isinstance(p, Comp):
        return Comp(dual_proof(p.f), dual_proof(p.g))
    if isinstance(p, Res):
        return Res(_DUAL_RES[p.kind], dual_proof(p.body))
    return Gr(_DUAL_GR[p.name], fdual(p.a), fdual(p.b), fdual(p.c))


def mirror_arrow(a: Arrow) -> Arrow:
    return Arrow(fmirror(a.source), fmirror(a.target), mirror_proof(a.proof))


def dual_arrow(a: Arrow) -> Arrow:
    return Arrow(fdual(a.target), fdual(a.source), dual_proof(a.proof))


# ---------------------------------------------------------------------------
# dual axioms are derivable; expansion used by the sequent translation


def expand_dual_axiom(ax: Gr) -> ArrowProof:
    """A combinator with the same endpoints as a dual axiom, built from d,q,b,p."""
    a, b, c = ax.a, ax.b, ax.c
    if ax.name == "dd":
        f = over(coprod(c, b), a)
        step = Comp(cores_ldiff(res_over_inv(Id(f))), Gr("d", c, f, a))
        return cores_ldiff_inv(res_over(step))
    if ax.name == "dq":
        f = over(coprod(b, c), a)
        step = Comp(cores_rdiff(res_over_inv(Id(f))), Gr("p", c, f, a))
        return cores_rdiff_inv(res_over(step))
    if ax.name == "db":
        f = under(a, coprod(b, c))
        step = Comp(cores_rdiff(res_under_inv(Id(f))), Gr("b", c, f, a))
        return cores_rdiff_inv(res_under(step))
    if ax.name == "dp":
        f = under(a, coprod(c, b))
        step = Comp(cores_ldiff(res_under_inv(Id(f))), Gr("q", c, f, a))
        return cores_ldiff_inv(res_under(step))
    raise ValueError(f"not a dual axiom: {ax.name}")


def expand_dual_axioms(p: ArrowProof) -> ArrowProof:
    if isinstance(p, Gr) and p.name in ("dd", "dq", "db", "dp"):
        return expand_dual_axiom(p)
    if isinstance(p, Comp):
        return Comp(expand_dual_axioms(p.g), expand_dual_axioms(p.f))
    if isinstance(p, Res):
        return Res(p.kind, expand_dual_axioms(p.body))
    return p


# ---------------------------------------------------------------------------
# derived monotonicity


def mono(conn: str, f: Arrow, g: Arrow) -> Arrow:
    """Monotonicity arrow for ``conn`` from component arrows f and g.

    f acts on the left operand, g on the right; variance follows the
    connective:

        mono('*',    f:A->A', g:B->B') : A * B      ->  A' * B'
        mono('(+)',  f:A->A', g:B->B') : A (+) B    ->  A' (+) B'
        mono('/',    f:A->A', g:B->B') : A / B'     ->  A' / B
        mono('\\\\', f:A->A', g:B->B') : A' \\ B    ->  A \\ B'
        mono('(/)',  f:A->A', g:B->B') : A (/) B'   ->  A' (/) B
        mono('(\\)', f:A->A', g:B->B') : A' (\\) B  ->  A (\\) B'
    """
    if conn == "/":
        a, a2 = f.source, f.target
        b, b2 = g.source, g.target
        left = res_over(Comp(f.proof, res_over_inv(Id(over(a, b)))))
        right = res_over(res_under_inv(
            Comp(res_under(res_over_inv(Id(over(a, b2)))), g.proof)))
        return arrow(Comp(left, right))
    if conn == "*":
        a, a2 = f.source, f.target
        b, b2 = g.source, g.target
        left = res_over_inv(Comp(res_over(Id(prod(a2, b2))), f.proof))
        right = res_under_inv(Comp(res_under(Id(prod(a, b2))), g.proof))
        return arrow(Comp(left, right))
    if conn == "\\":
        return mirror_arrow(mono("/", mirror_arrow(g), mirror_arrow(f)))
    if conn == "(+)":
        return dual_arrow(mono("*", dual_arrow(g), dual_arrow(f)))
    if conn == "(/)":
        return dual_arrow(mono("\\", dual_arrow(g), dual_arrow(f)))
    if conn == "(\\)":
        return mirror_arrow(mono("(/)", mirror_arrow(g), mirror_arrow(f)))
    raise ValueError(f"bad connective: {conn!r}")


# ---------------------------------------------------------------------------
# rule form of the distributivity axioms

G_RULES = ("G1", "G2", "G3", "G4")


def distributivity_rule(f: Arrow, variant: str = "G1") -> Arrow:
    """Turn f : X * Y -> Z (+) W into the conclusion of G1..G4.

        G1 : Z (\\) X  ->  W / Y
        G2 : Z (\\) Y  ->  X \\ W
        G3 : Y (/) W   ->  X \\ Z
        G4 : X (/) W   ->  Z / Y
    """
    src, tgt = f.source, f.target
    if not (isinstance(src, Bin) and src.op == "*" and
            isinstance(tgt, Bin) and tgt.op == "(+)"):
        raise TypeError(f"need X * Y -> Z (+) W, got {fmt_formula(src)} -> {fmt_formula(tgt)}")
    x, y = src.left, src.right
    z, w = tgt.left, tgt.right
    if variant == "G1":
        return arrow(res_over(Comp(cores_ldiff(f.proof), Gr("d", z, x, y))))
    if variant == "G2":
        return arrow(res_under(Comp(cores_ldiff(f.proof), Gr("q", z, y, x))))
    if variant == "G3":
        return arrow(res_under(Comp(cores_rdiff(f.proof), Gr("b", w, y, x))))
    if variant == "G4":
        return arrow(res_over(Comp(cores_rdiff(f.proof), Gr("p", w, x, y))))
    raise ValueError(f"bad variant: {variant!r}")


# ---------------------------------------------------------------------------
# the eight composition theorems of product/division and coproduct/difference


def coapplication_arrows(a: Formula, b: Formula) -> list[Arrow]:
    """Expanding and contracting composition arrows, as checked Arrows."""
    return [
        arrow(res_under_inv(Id(under(a, b)))),       # A * (A\B) -> B
        arrow(res_under(Id(prod(a, b)))),            # B -> A \ (A*B)
        arrow(res_over_inv(Id(over(b, a)))),         # (B/A) * A -> B
        arrow(res_over(Id(prod(b, a)))),             # B -> (B*A) / A
        arrow(cores_rdiff(Id(coprod(b, a)))),        # (B(+)A) (/) A -> B
        arrow(cores_rdiff_inv(Id(rdiff(b, a)))),     # B -> (B(/)A) (+) A
        arrow(cores_ldiff(Id(coprod(a, b)))),        # A (\) (A(+)B) -> B
        arrow(cores_ldiff_inv(Id(ldiff(a, b)))),     # B -> A (+) (A(\)B)
    ]


# ---------------------------------------------------------------------------
# printing

_RES_FMT = {
    "res_over": "r/", "res_over_inv": "r/'",
    "res_under": "r\\", "res_under_inv": "r\\'",
    "cores_ldiff": "cr(\\)", "cores_ldiff_inv": "cr(\\)'",
    "cores_rdiff": "cr(/)", "cores_rdiff_inv": "cr(/)'",
}


def fmt_proof(p: ArrowProof) -> str:
    if isinstance(p, Id):
        return f"1_{{{fmt_formula(p.formula)}}}"
    if isinstance(p, Comp):
        return f"({fmt_proof(p.g)} . {fmt_proof(p.f)})"
    if isinstance(p, Res):
        return f"{_RES_FMT[p.kind]}({fmt_proof(p.body)})"
    return f"{p.name}{{{fmt_formula(p.a)}; {fmt_formula(p.b)}; {fmt_formula(p.c)}}}"
