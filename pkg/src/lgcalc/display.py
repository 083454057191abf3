"""Cut-free backward proof search for the display sequent calculus sLG.

The structural rules come in two groups: the eight directed display
moves (``rp1``..``rp4``, ``drp1``..``drp4``) and the four one-way
Grishin moves (``G1``..``G4``).  Search explores the structural orbit of
a goal sequent and applies logical rules at displayed positions; logical
rules strictly reduce the formula connective count, so search always
terminates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import arrows as ar
from .formula import (Atom, Bin, COPROD, Formula, LDIFF, OVER, PROD, RDIFF,
                      UNDER, connective_count)
from .structure import (INPUT, Leaf, OUTPUT, SBin, Sequent, Structure,
                        fmt_sequent, leaves, structure_to_formula,
                        validate_sequent)

REWRITE_RULES = ("*L", "(/)L", "(\\)L", "(+)R", "\\R", "/R")
TWO_PREMISE_RULES = ("*R", "(+)L", "\\L", "/L", "(/)R", "(\\)R")
DISPLAY_RULES = ("rp1", "rp2", "rp3", "rp4", "drp1", "drp2", "drp3", "drp4")
G_RULES = ("G1", "G2", "G3", "G4")


@dataclass(frozen=True)
class SequentProof:
    conclusion: Sequent
    rule: str
    premises: tuple["SequentProof", ...] = ()

    def count_rule(self, name: str) -> int:
        return (self.rule == name) + sum(p.count_rule(name) for p in self.premises)

    def rules_used(self) -> set[str]:
        out = {self.rule}
        for p in self.premises:
            out |= p.rules_used()
        return out


@dataclass(frozen=True)
class SearchConfig:
    max_logical_depth: Optional[int] = None
    allow_cut: bool = False
    max_proofs: Optional[int] = None


def strip_tags(x: Structure) -> Structure:
    if isinstance(x, Leaf):
        return Leaf(x.formula) if x.tag is not None else x
    return SBin(x.op, strip_tags(x.left), strip_tags(x.right))


def strip_sequent(s: Sequent) -> Sequent:
    return Sequent(strip_tags(s.ant), strip_tags(s.suc), s.focus)


# ---------------------------------------------------------------------------
# structural moves


def display_moves(s: Sequent) -> list[tuple[str, Sequent]]:
    """The eight directed display postulates applicable at the root."""
    out = []
    ant, suc = s.ant, s.suc
    if isinstance(ant, SBin) and ant.op == PROD:
        out.append(("rp1", Sequent(ant.left, SBin(OVER, suc, ant.right))))
        out.append(("rp2", Sequent(ant.right, SBin(UNDER, ant.left, suc))))
    if isinstance(suc, SBin) and suc.op == OVER:
        out.append(("rp3", Sequent(SBin(PROD, ant, suc.right), suc.left)))
    if isinstance(suc, SBin) and suc.op == UNDER:
        out.append(("rp4", Sequent(SBin(PROD, suc.left, ant), suc.right)))
    if isinstance(suc, SBin) and suc.op == COPROD:
        out.append(("drp1", Sequent(SBin(LDIFF, suc.left, ant), suc.right)))
        out.append(("drp2", Sequent(SBin(RDIFF, ant, suc.right), suc.left)))
    if isinstance(ant, SBin) and ant.op == LDIFF:
        out.append(("drp3", Sequent(ant.right, SBin(COPROD, ant.left, suc))))
    if isinstance(ant, SBin) and ant.op == RDIFF:
        out.append(("drp4", Sequent(ant.left, SBin(COPROD, suc, ant.right))))
    return out


def grishin_backward_moves(s: Sequent) -> list[tuple[str, Sequent]]:
    """Replace a G-rule conclusion shape by its premise, at the root."""
    out = []
    ant, suc = s.ant, s.suc
    if isinstance(ant, SBin) and isinstance(suc, SBin):
        if ant.op == LDIFF and suc.op == OVER:
            # Z (\) X |- W / Y   <=   X * Y |- Z (+) W
            out.append(("G1", Sequent(SBin(PROD, ant.right, suc.right),
                                      SBin(COPROD, ant.left, suc.left))))
        if ant.op == LDIFF and suc.op == UNDER:
            # Z (\) Y |- X \ W   <=   X * Y |- Z (+) W
            out.append(("G2", Sequent(SBin(PROD, suc.left, ant.right),
                                      SBin(COPROD, ant.left, suc.right))))
        if ant.op == RDIFF and suc.op == UNDER:
            # Y (/) W |- X \ Z   <=   X * Y |- Z (+) W
            out.append(("G3", Sequent(SBin(PROD, suc.left, ant.left),
                                      SBin(COPROD, suc.right, ant.right))))
        if ant.op == RDIFF and suc.op == OVER:
            # X (/) W |- Z / Y   <=   X * Y |- Z (+) W
            out.append(("G4", Sequent(SBin(PROD, ant.left, suc.right),
                                      SBin(COPROD, suc.left, ant.right))))
    return out


def structural_moves(s: Sequent) -> list[tuple[str, Sequent]]:
    return display_moves(s) + grishin_backward_moves(s)


def display_closure(s: Sequent) -> set[Sequent]:
    """Closure of s under the (invertible) display postulates only."""
    s = strip_sequent(s)
    seen = {s}
    todo = [s]
    while todo:
        cur = todo.pop()
        for _, nxt in display_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def grishin_moves(s: Sequent) -> set[Sequent]:
    """All sequents reachable by one backward Grishin move at the root."""
    return {nxt for _, nxt in grishin_backward_moves(strip_sequent(s))}


def structural_orbit(s: Sequent, strip: bool = True
                     ) -> dict[Sequent, tuple[tuple[str, Sequent], ...]]:
    """BFS closure under display and Grishin moves.

    Maps each member to its (rule, sequent) path from ``s``; the path for
    ``s`` itself is empty.  Paths are shortest, hence canonical.  Pass
    ``strip=False`` to keep leaf tags (the moves preserve them).
    """
    if strip:
        s = strip_sequent(s)
    paths: dict[Sequent, tuple[tuple[str, Sequent], ...]] = {s: ()}
    queue = [s]
    while queue:
        nxt_queue = []
        for cur in queue:
            base = paths[cur]
            for rule, nxt in structural_moves(cur):
                if nxt not in paths:
                    paths[nxt] = base + ((rule, nxt),)
                    nxt_queue.append(nxt)
        queue = nxt_queue
    return paths


# ---------------------------------------------------------------------------
# logical rules at displayed positions


def _logical_expansions(m: Sequent) -> list[tuple[str, tuple[Sequent, ...]]]:
    """(rule, premises) for every logical rule applicable at m as displayed."""
    out = []
    ant, suc = m.ant, m.suc
    if isinstance(ant, Leaf) and isinstance(suc, Leaf) and ant.formula == suc.formula:
        out.append(("Ax", ()))
    if isinstance(ant, Leaf) and isinstance(ant.formula, Bin):
        f = ant.formula
        if f.op == PROD:
            out.append(("*L", (Sequent(SBin(PROD, Leaf(f.left), Leaf(f.right)), suc),)))
        elif f.op == RDIFF:
            out.append(("(/)L", (Sequent(SBin(RDIFF, Leaf(f.left), Leaf(f.right)), suc),)))
        elif f.op == LDIFF:
            out.append(("(\\)L", (Sequent(SBin(LDIFF, Leaf(f.left), Leaf(f.right)), suc),)))
        elif f.op == COPROD and isinstance(suc, SBin) and suc.op == COPROD:
            out.append(("(+)L", (Sequent(Leaf(f.left), suc.left),
                                 Sequent(Leaf(f.right), suc.right))))
        elif f.op == UNDER and isinstance(suc, SBin) and suc.op == UNDER:
            # A \ B |- X .\. Y   from   X |- A  and  B |- Y
            out.append(("\\L", (Sequent(suc.left, Leaf(f.left)),
                                Sequent(Leaf(f.right), suc.right))))
        elif f.op == OVER and isinstance(suc, SBin) and suc.op == OVER:
            # B / A |- Y ./. X   from   X |- A  and  B |- Y
            out.append(("/L", (Sequent(suc.right, Leaf(f.right)),
                               Sequent(Leaf(f.left), suc.left))))
    if isinstance(suc, Leaf) and isinstance(suc.formula, Bin):
        f = suc.formula
        if f.op == COPROD:
            out.append(("(+)R", (Sequent(ant, SBin(COPROD, Leaf(f.left), Leaf(f.right))),)))
        elif f.op == UNDER:
            out.append(("\\R", (Sequent(ant, SBin(UNDER, Leaf(f.left), Leaf(f.right))),)))
        elif f.op == OVER:
            out.append(("/R", (Sequent(ant, SBin(OVER, Leaf(f.left), Leaf(f.right))),)))
        elif f.op == PROD and isinstance(ant, SBin) and ant.op == PROD:
            out.append(("*R", (Sequent(ant.left, Leaf(f.left)),
                               Sequent(ant.right, Leaf(f.right)))))
        elif f.op == RDIFF and isinstance(ant, SBin) and ant.op == RDIFF:
            # X .(/). Y |- A (/) B   from   X |- A  and  B |- Y
            out.append(("(/)R", (Sequent(ant.left, Leaf(f.left)),
                                 Sequent(Leaf(f.right), ant.right))))
        elif f.op == LDIFF and isinstance(ant, SBin) and ant.op == LDIFF:
            # Y .(\). X |- B (\) A   from   X |- A  and  B |- Y
            out.append(("(\\)R", (Sequent(ant.right, Leaf(f.right)),
                                  Sequent(Leaf(f.left), ant.left))))
    return out


class DepthExhausted(Exception):
    """Raised when max_logical_depth prevented a complete search."""


class SLGProver:
    """Backward-chaining cut-free prover with memoized subgoals."""

    def __init__(self, cfg: SearchConfig = SearchConfig()):
        self.cfg = cfg
        self._memo: dict[Sequent, list[SequentProof]] = {}
        self._decide_memo: dict[Sequent, bool] = {}

    # -- decision procedure -------------------------------------------------

    def provable(self, s: Sequent) -> bool:
        s = strip_sequent(s)
        if not validate_sequent(s):
            raise ValueError(f"invalid sequent: {fmt_sequent(s)}")
        return self._provable(s)

    def _provable(self, s: Sequent) -> bool:
        hit = self._decide_memo.get(s)
        if hit is not None:
            return hit
        orbit = structural_orbit(s)
        witness = None
        if any(self._decide_memo.get(m) for m in orbit):
            witness = s
        else:
            for m, path in orbit.items():
                for _, prems in _logical_expansions(m):
                    if all(self._provable(p) for p in prems):
                        witness = m
                        break
                if witness is not None:
                    # m and everything on the path down to it is provable
                    self._decide_memo[m] = True
                    for _, mid in path:
                        self._decide_memo[mid] = True
                    break
        if witness is None:
            # a proof of any orbit member would yield one of s
            for m in orbit:
                self._decide_memo[m] = False
            return False
        self._decide_memo[s] = True
        return True

    # -- full proof enumeration ---------------------------------------------

    def prove(self, s: Sequent, depth: Optional[int] = None) -> list[SequentProof]:
        """All cut-free proofs of s, up to cfg.max_proofs."""
        s = strip_sequent(s)
        if not validate_sequent(s):
            raise ValueError(f"invalid sequent: {fmt_sequent(s)}")
        if depth is None:
            depth = self.cfg.max_logical_depth
        return self._prove(s, depth)

    def _prove(self, s: Sequent, depth: Optional[int]) -> list[SequentProof]:
        use_memo = depth is None
        if use_memo and s in self._memo:
            return self._memo[s]
        if depth is not None and depth < 0:
            raise DepthExhausted(fmt_sequent(s))
        cap = self.cfg.max_proofs
        proofs: list[SequentProof] = []
        orbit = structural_orbit(s)
        for m, path in orbit.items():
            for rule, prems in _logical_expansions(m):
                sub_depth = None if depth is None else depth - 1
                sub_lists = [self._prove(p, sub_depth) for p in prems]
                if any(not lst for lst in sub_lists):
                    continue
                for combo in _product(sub_lists):
                    node = SequentProof(m, rule, tuple(combo))
                    proofs.append(_wrap_path(s, path, node))
                    if cap is not None and len(proofs) >= cap:
                        if use_memo:
                            self._memo[s] = proofs
                        return proofs
        if use_memo:
            self._memo[s] = proofs
        return proofs


def _product(lists: list[list[SequentProof]]) -> Iterator[tuple[SequentProof, ...]]:
    if not lists:
        yield ()
        return
    head, *rest = lists
    for h in head:
        for r in _product(rest):
            yield (h,) + r


def _wrap_path(start: Sequent, path, node: SequentProof) -> SequentProof:
    """Wrap a logical node in the chain of structural nodes from start."""
    if not path:
        return node
    rule, _ = path[0]
    inner = _wrap_path(path[0][1], path[1:], node)
    return SequentProof(start, rule, (inner,))


def prove(s: Sequent, cfg: SearchConfig = SearchConfig()) -> list[SequentProof]:
    return SLGProver(cfg).prove(s)


def provable(s: Sequent, prover: Optional[SLGProver] = None) -> bool:
    return (prover or SLGProver()).provable(s)


# ---------------------------------------------------------------------------
# local validity checker


def check_proof(p: SequentProof, allow_cut: bool = True) -> bool:
    """True iff every node instantiates its rule schema."""
    c = p.conclusion
    rule = p.rule
    prems = [q.conclusion for q in p.premises]
    if not all(check_proof(q, allow_cut) for q in p.premises):
        return False
    if rule == "Ax":
        return (not prems and isinstance(c.ant, Leaf) and isinstance(c.suc, Leaf)
                and c.ant.formula == c.suc.formula)
    if rule == "Cut":
        if not allow_cut or len(prems) != 2:
            return False
        l, r = prems
        return (isinstance(l.suc, Leaf) and isinstance(r.ant, Leaf)
                and l.suc.formula == r.ant.formula
                and c.ant == l.ant and c.suc == r.suc)
    if rule in DISPLAY_RULES or rule in G_RULES:
        if len(prems) != 1:
            return False
        return any(r == rule and s2 == prems[0] for r, s2 in structural_moves(c))
    for r, expected in _logical_expansions(c):
        if r == rule and tuple(expected) == tuple(prems):
            return True
    return False


# ---------------------------------------------------------------------------
# serialization


def fmt_proof(p: SequentProof, indent: int = 0) -> str:
    pad = "  " * indent
    lines = [f"{pad}{p.rule}: {fmt_sequent(p.conclusion)}"]
    for q in p.premises:
        lines.append(fmt_proof(q, indent + 1))
    return "\n".join(lines)


def proof_to_json(p: SequentProof) -> dict:
    return {
        "rule": p.rule,
        "conclusion": fmt_sequent(p.conclusion),
        "premises": [proof_to_json(q) for q in p.premises],
    }


def proof_json_str(p: SequentProof) -> str:
    return json.dumps(proof_to_json(p), indent=2)


# ---------------------------------------------------------------------------
# translations between arrows and sequent proofs


def _ax(f: Formula) -> SequentProof:
    return SequentProof(Sequent(Leaf(f), Leaf(f)), "Ax")


def _unfold_formula_left(f: Bin, suc: Structure, inner: SequentProof,
                         rule: str) -> SequentProof:
    """Rewrite node: Leaf(f) |- suc from f.left .op. f.right |- suc."""
    return SequentProof(Sequent(Leaf(f), suc), rule, (inner,))


def _refold_left(f: Bin, suc: Structure, sub: SequentProof) -> SequentProof:
    """From  Leaf(f) |- suc  build  f.left .op. f.right |- suc  via Cut."""
    two_premise = {PROD: "*R", RDIFF: "(/)R", LDIFF: "(\\)R"}[f.op]
    struct = SBin(f.op, Leaf(f.left), Leaf(f.right))
    if f.op == LDIFF:
        prems = (_ax(f.right), _ax(f.left))
    else:
        prems = (_ax(f.left), _ax(f.right))
    left = SequentProof(Sequent(struct, Leaf(f)), two_premise, prems)
    return SequentProof(Sequent(struct, suc), "Cut", (left, sub))


def _refold_right(f: Bin, ant: Structure, sub: SequentProof) -> SequentProof:
    """From  ant |- Leaf(f)  build  ant |- f.left .op. f.right  via Cut."""
    two_premise = {COPROD: "(+)L", UNDER: "\\L", OVER: "/L"}[f.op]
    struct = SBin(f.op, Leaf(f.left), Leaf(f.right))
    if f.op == COPROD:
        prems = (_ax(f.left), _ax(f.right))
    elif f.op == UNDER:
        prems = (_ax(f.left), _ax(f.right))
    else:  # OVER: premises X |- A and B |- Y with f = B / A
        prems = (_ax(f.right), _ax(f.left))
    right = SequentProof(Sequent(Leaf(f), struct), two_premise, prems)
    return SequentProof(Sequent(ant, struct), "Cut", (sub, right))


def arrow_to_proof(a: ar.Arrow) -> SequentProof:
    """A (possibly Cut-bearing) sLG proof of  source |- target."""
    return _a2p(ar.expand_dual_axioms(a.proof))


def _a2p(p: ar.ArrowProof) -> SequentProof:
    if isinstance(p, ar.Id):
        return _ax(p.formula)
    if isinstance(p, ar.Comp):
        pf = _a2p(p.f)
        pg = _a2p(p.g)
        concl = Sequent(pf.conclusion.ant, pg.conclusion.suc)
        return SequentProof(concl, "Cut", (pf, pg))
    if isinstance(p, ar.Gr):
        return _axiom_proof(p)
    assert isinstance(p, ar.Res)
    sub = _a2p(p.body)
    src, tgt = ar.infer(p)  # type: ignore[misc]
    k = p.kind
    if k in ("res_over", "res_under"):
        # sub : Leaf(A*B) |- Leaf(C); refold to A .*. B |- C, then display
        f = sub.conclusion.ant.formula  # type: ignore[union-attr]
        refolded = _refold_left(f, sub.conclusion.suc, sub)
        rp = "rp3" if k == "res_over" else "rp4"
        shown = SequentProof(Sequent(Leaf(src), _struct_of(tgt)), rp, (refolded,))
        rule = "/R" if k == "res_over" else "\\R"
        return SequentProof(Sequent(Leaf(src), Leaf(tgt)), rule, (shown,))
    if k in ("cores_ldiff", "cores_rdiff"):
        f = sub.conclusion.suc.formula  # type: ignore[union-attr]
        refolded = _refold_right(f, sub.conclusion.ant, sub)
        drp = "drp3" if k == "cores_ldiff" else "drp4"
        shown = SequentProof(Sequent(_struct_of(src), Leaf(tgt)), drp, (refolded,))
        rule = "(\\)L" if k == "cores_ldiff" else "(/)L"
        return SequentProof(Sequent(Leaf(src), Leaf(tgt)), rule, (shown,))
    if k in ("res_over_inv", "res_under_inv"):
        # sub : Leaf(A) |- Leaf(C/B) or Leaf(B) |- Leaf(A\C); want Leaf(A*B) |- Leaf(C)
        g = sub.conclusion.suc.formula  # type: ignore[union-attr]
        refolded = _refold_right(g, sub.conclusion.ant, sub)
        rp = "rp1" if k == "res_over_inv" else "rp2"
        shown = SequentProof(Sequent(_struct_of(src), Leaf(tgt)), rp, (refolded,))
        return SequentProof(Sequent(Leaf(src), Leaf(tgt)), "*L", (shown,))
    if k in ("cores_ldiff_inv", "cores_rdiff_inv"):
        g = sub.conclusion.ant.formula  # type: ignore[union-attr]
        refolded = _refold_left(g, sub.conclusion.suc, sub)
        drp = "drp1" if k == "cores_ldiff_inv" else "drp2"
        shown = SequentProof(Sequent(Leaf(src), _struct_of(tgt)), drp, (refolded,))
        return SequentProof(Sequent(Leaf(src), Leaf(tgt)), "(+)R", (shown,))
    raise AssertionError(k)


def _struct_of(f: Formula) -> Structure:
    assert isinstance(f, Bin)
    return SBin(f.op, Leaf(f.left), Leaf(f.right))


def _axiom_proof(ax: ar.Gr) -> SequentProof:
    """Explicit sLG proof for a primitive distributivity axiom."""
    a, b, c = ax.a, ax.b, ax.c
    src, tgt = ar.infer(ax)  # type: ignore[misc]
    goal = Leaf(tgt)
    if ax.name == "d":
        inner = SequentProof(
            Sequent(SBin(LDIFF, Leaf(a), SBin(PROD, Leaf(b), Leaf(c))), goal),
            "(\\)R",
            (SequentProof(Sequent(SBin(PROD, Leaf(b), Leaf(c)), Leaf(Bin(PROD, b, c))),
                          "*R", (_ax(b), _ax(c))),
             _ax(a)))
        chain = [
            (Sequent(Leaf(src), goal), "*L"),
            (Sequent(SBin(PROD, Leaf(Bin(LDIFF, a, b)), Leaf(c)), goal), "rp1"),
            (Sequent(Leaf(Bin(LDIFF, a, b)), SBin(OVER, goal, Leaf(c))), "(\\)L"),
            (Sequent(SBin(LDIFF, Leaf(a), Leaf(b)), SBin(OVER, goal, Leaf(c))), "G1"),
            (Sequent(SBin(PROD, Leaf(b), Leaf(c)), SBin(COPROD, Leaf(a), goal)), "drp1"),
        ]
    elif ax.name == "q":
        inner = SequentProof(
            Sequent(SBin(LDIFF, Leaf(a), SBin(PROD, Leaf(c), Leaf(b))), goal),
            "(\\)R",
            (SequentProof(Sequent(SBin(PROD, Leaf(c), Leaf(b)), Leaf(Bin(PROD, c, b))),
                          "*R", (_ax(c), _ax(b))),
             _ax(a)))
        chain = [
            (Sequent(Leaf(src), goal), "*L"),
            (Sequent(SBin(PROD, Leaf(c), Leaf(Bin(LDIFF, a, b))), goal), "rp2"),
            (Sequent(Leaf(Bin(LDIFF, a, b)), SBin(UNDER, Leaf(c), goal)), "(\\)L"),
            (Sequent(SBin(LDIFF, Leaf(a), Leaf(b)), SBin(UNDER, Leaf(c), goal)), "G2"),
            (Sequent(SBin(PROD, Leaf(c), Leaf(b)), SBin(COPROD, Leaf(a), goal)), "drp1"),
        ]
    elif ax.name == "b":
        inner = SequentProof(
            Sequent(SBin(RDIFF, SBin(PROD, Leaf(c), Leaf(b)), Leaf(a)), goal),
            "(/)R",
            (SequentProof(Sequent(SBin(PROD, Leaf(c), Leaf(b)), Leaf(Bin(PROD, c, b))),
                          "*R", (_ax(c), _ax(b))),
             _ax(a)))
        chain = [
            (Sequent(Leaf(src), goal), "*L"),
            (Sequent(SBin(PROD, Leaf(c), Leaf(Bin(RDIFF, b, a))), goal), "rp2"),
            (Sequent(Leaf(Bin(RDIFF, b, a)), SBin(UNDER, Leaf(c), goal)), "(/)L"),
            (Sequent(SBin(RDIFF, Leaf(b), Leaf(a)), SBin(UNDER, Leaf(c), goal)), "G3"),
            (Sequent(SBin(PROD, Leaf(c), Leaf(b)), SBin(COPROD, goal, Leaf(a))), "drp2"),
        ]
    elif ax.name == "p":
        inner = SequentProof(
            Sequent(SBin(RDIFF, SBin(PROD, Leaf(b), Leaf(c)), Leaf(a)), goal),
            "(/)R",
            (SequentProof(Sequent(SBin(PROD, Leaf(b), Leaf(c)), Leaf(Bin(PROD, b, c))),
                          "*R", (_ax(b), _ax(c))),
             _ax(a)))
        chain = [
            (Sequent(Leaf(src), goal), "*L"),
            (Sequent(SBin(PROD, Leaf(Bin(RDIFF, b, a)), Leaf(c)), goal), "rp1"),
            (Sequent(Leaf(Bin(RDIFF, b, a)), SBin(OVER, goal, Leaf(c))), "(/)L"),
            (Sequent(SBin(RDIFF, Leaf(b), Leaf(a)), SBin(OVER, goal, Leaf(c))), "G4"),
            (Sequent(SBin(PROD, Leaf(b), Leaf(c)), SBin(COPROD, goal, Leaf(a))), "drp2"),
        ]
    else:
        raise ValueError(f"no direct sequent proof for {ax.name}")
    proof = inner
    for concl, rule in reversed(chain):
        proof = SequentProof(concl, rule, (proof,))
    return proof


# ---------------------------------------------------------------------------
# from sequent proofs to arrows

_DISPLAY_TO_RES = {
    "rp1": "res_over_inv", "rp2": "res_under_inv",
    "rp3": "res_over", "rp4": "res_under",
    "drp1": "cores_ldiff_inv", "drp2": "cores_rdiff_inv",
    "drp3": "cores_ldiff", "drp4": "cores_rdiff",
}


def proof_to_arrow(p: SequentProof) -> ar.Arrow:
    """Arrow X° -> Y° for a valid sLG proof of X |- Y (Cut becomes composition)."""
    proof = _p2a(p)
    return ar.arrow(proof)


def _p2a(p: SequentProof) -> ar.ArrowProof:
    rule = p.rule
    if rule == "Ax":
        return ar.Id(p.conclusion.ant.formula)  # type: ignore[union-attr]
    if rule == "Cut":
        f = _p2a(p.premises[0])
        g = _p2a(p.premises[1])
        return ar.Comp(g, f)
    if rule in _DISPLAY_TO_RES:
        inner = _p2a(p.premises[0])
        return ar.Res(_DISPLAY_TO_RES[rule], inner)
    if rule in G_RULES:
        inner = _p2a(p.premises[0])
        return ar.distributivity_rule(ar.arrow(inner), rule).proof
    if rule in REWRITE_RULES:
        return _p2a(p.premises[0])
    if rule in TWO_PREMISE_RULES:
        f = ar.arrow(_p2a(p.premises[0]))
        g = ar.arrow(_p2a(p.premises[1]))
        if rule == "*R":
            return ar.mono("*", f, g).proof
        if rule == "(+)L":
            return ar.mono("(+)", f, g).proof
        if rule == "\\L":
            return ar.mono("\\", f, g).proof
        if rule == "/L":
            return ar.mono("/", g, f).proof
        if rule == "(/)R":
            return ar.mono("(/)", f, g).proof
        if rule == "(\\)R":
            return ar.mono("(\\)", g, f).proof
    raise ValueError(f"cannot translate rule {rule!r}")
