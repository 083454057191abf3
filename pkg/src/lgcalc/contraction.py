"""Rewriting on abstract proof structures: contractions, interactions,
generalized contractions, proof-net checking and sequentialization.

A contraction removes one cotensor and one tensor link wired together at
the cotensor's two active tentacles (matching positions, opposite
premiss/conclusion parity) and merges the two surviving external
vertices.  An interaction step rewires a product-family tensor sitting
immediately above a coproduct-family tensor into one of four new
configurations; interactions preserve link and vertex counts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .formula import Atom, Bin, COPROD, Formula, LDIFF, OVER, PROD, RDIFF, UNDER
from .proofnet import APS, COTENSOR, Link, ProofStructure, TENSOR, to_abstract
from .structure import (INPUT, Leaf, OUTPUT, SBin, Sequent, Structure)

CONTRACTION_KINDS = ("R/", "L*", "R\\", "L(/)", "R(+)", "L(\\)")
INTERACTION_KINDS = ("G1", "G2", "G3", "G4")


@dataclass(frozen=True)
class RewriteStep:
    kind: str
    redex: tuple[int, ...]          # link indices in the source APS
    result: APS
    detail: tuple = ()              # gen-* steps carry their expansion here


def _cotensor_kind(l: Link) -> str:
    """Name of the one-premise rule a cotensor link stands for."""
    assert l.kind == COTENSOR
    if len(l.prems) == 1 and len(l.concls) == 2:
        if l.main == l.prems[0]:
            return "L*"
        return "R/" if l.main == l.concls[0] else "R\\"
    if len(l.prems) == 2 and len(l.concls) == 1:
        if l.main == l.concls[0]:
            return "R(+)"
        return "L(/)" if l.main == l.prems[0] else "L(\\)"
    raise ValueError("cotensor link with bad arity")


def _active_slots(l: Link) -> list[tuple[str, int, int]]:
    """(row, index, vertex) for the non-main tentacles of a cotensor."""
    out = []
    for i, v in enumerate(l.prems):
        if v != l.main:
            out.append(("prem", i, v))
    for i, v in enumerate(l.concls):
        if v != l.main:
            out.append(("concl", i, v))
    return out


def _vertex_attachments(aps: APS, v: int) -> tuple[Optional[int], Optional[int]]:
    """(index of link having v as conclusion, index having v as premiss)."""
    above = below = None
    for i, l in enumerate(aps.links):
        if v in l.concls:
            above = i
        if v in l.prems:
            below = i
    return above, below


def _replace_vertex(l: Link, old: int, new: int) -> Link:
    return Link(l.kind,
                tuple(new if v == old else v for v in l.prems),
                tuple(new if v == old else v for v in l.concls),
                new if l.main == old else l.main,
                lid=l.lid)


def contract_step(aps: APS) -> list[RewriteStep]:
    """All single contraction redexes of the six kinds."""
    steps = []
    for ki, k in enumerate(aps.links):
        if k.kind != COTENSOR:
            continue
        actives = _active_slots(k)
        if len(actives) != 2:
            continue
        # both actives must attach to one tensor, at the same index in the
        # opposite row
        partner: Optional[int] = None
        ok = True
        for row, idx, v in actives:
            hit = None
            for ti, t in enumerate(aps.links):
                if t.kind != TENSOR or ti == ki:
                    continue
                if row == "prem" and len(t.concls) > idx and t.concls[idx] == v:
                    hit = ti
                if row == "concl" and len(t.prems) > idx and t.prems[idx] == v:
                    hit = ti
            if hit is None:
                ok = False
                break
            if partner is None:
                partner = hit
            elif partner != hit:
                ok = False
                break
        if not ok or partner is None:
            continue
        t = aps.links[partner]
        # shapes must be complementary (1p2c against 2p1c)
        if {len(k.prems), len(t.prems)} != {1, 2}:
            continue
        shared = {v for _, _, v in actives}
        if any(aps.h.get(v) is not None or aps.c.get(v) is not None for v in shared):
            continue
        survivors_t = [v for v in t.vertices() if v not in shared]
        if len(survivors_t) != 1 or k.main is None:
            continue
        steps.append(_do_contract(aps, ki, partner, k.main, survivors_t[0], shared))
    return steps


def _do_contract(aps: APS, ki: int, ti: int, m: int, s: int,
                 shared: set[int]) -> RewriteStep:
    kind = _cotensor_kind(aps.links[ki])
    k = aps.links[ki]
    # the side whose premiss attachment dies keeps its h label
    h_side, c_side = (m, s) if m in k.prems else (s, m)
    new = min(h_side, c_side)
    links = []
    for i, l in enumerate(aps.links):
        if i in (ki, ti):
            continue
        l2 = _replace_vertex(_replace_vertex(l, h_side, new), c_side, new)
        links.append(l2)
    vertices = (aps.vertices - shared - {h_side, c_side}) | {new}
    h = {v: f for v, f in aps.h.items() if v in vertices}
    c = {v: f for v, f in aps.c.items() if v in vertices}
    if h_side in aps.h:
        h[new] = aps.h[h_side]
    if c_side in aps.c:
        c[new] = aps.c[c_side]

    def ren(v: int) -> int:
        return new if v in (h_side, c_side) else v

    out = APS(vertices, tuple(links), h, c,
              tuple(ren(v) for v in aps.hyp_order),
              tuple(ren(v) for v in aps.concl_order))
    return RewriteStep(kind, (ki, ti), out)


def interaction_step(aps: APS) -> list[RewriteStep]:
    """All G1..G4 rewrites of product-over-coproduct tensor pairs."""
    steps = []
    for ui, up in enumerate(aps.links):
        if up.kind != TENSOR or len(up.prems) != 2 or len(up.concls) != 1:
            continue
        shared = up.concls[0]
        for di, dn in enumerate(aps.links):
            if di == ui or dn.kind != TENSOR:
                continue
            if len(dn.prems) != 1 or len(dn.concls) != 2 or dn.prems[0] != shared:
                continue
            x, y = up.prems
            z, w = dn.concls
            i = shared
            variants = {
                "G1": (Link(TENSOR, (x,), (z, i)), Link(TENSOR, (i, y), (w,))),
                "G2": (Link(TENSOR, (y,), (z, i)), Link(TENSOR, (x, i), (w,))),
                "G3": (Link(TENSOR, (y,), (i, w)), Link(TENSOR, (x, i), (z,))),
                "G4": (Link(TENSOR, (x,), (i, w)), Link(TENSOR, (i, y), (z,))),
            }
            for g, (la, lb) in variants.items():
                links = list(aps.links)
                links[ui] = la
                links[di] = lb
                out = APS(aps.vertices, tuple(links), dict(aps.h), dict(aps.c),
                          aps.hyp_order, aps.concl_order)
                steps.append(RewriteStep(g, (ui, di), out))
    return steps


# ---------------------------------------------------------------------------
# generalized contractions


def generalized_contract(aps: APS) -> list[RewriteStep]:
    """Contractions across a path of opposite-family tensor links.

    Each returned step replays internally as interaction steps followed by
    one plain contraction; the expansion is recorded in ``detail``.
    """
    out = []
    for ki, k in enumerate(aps.links):
        if k.kind != COTENSOR:
            continue
        kind = _cotensor_kind(k)
        if kind in ("L*", "R(+)"):
            continue  # product/coproduct contractions have no generalized form
        for steps in _gen_search(aps, ki):
            if len(steps) < 2:
                continue  # plain contraction, not a generalized one
            final = steps[-1]
            out.append(RewriteStep("gen-" + kind, (ki,), final.result,
                                   detail=tuple(steps)))
    return out


def _gen_search(aps: APS, ki: int, depth: int = 0) -> Iterator[list[RewriteStep]]:
    """Interaction sequences that make cotensor ki contractible."""
    if depth > 8:
        return
    for step in contract_step(aps):
        if step.redex[0] == ki:
            yield [step]
    kind = _cotensor_kind(aps.links[ki])
    allowed = {"R/": ("G1", "G2"), "R\\": ("G3", "G4"),
               "L(/)": ("G2", "G3"), "L(\\)": ("G1", "G4")}[kind]
    for step in interaction_step(aps):
        if step.kind not in allowed:
            continue
        # interactions rewrite links in place, so ki stays valid
        for rest in _gen_search(step.result, ki, depth + 1):
            yield [step] + rest


# ---------------------------------------------------------------------------
# proof net decision


@dataclass
class NetResult:
    tree: APS
    trace: tuple[RewriteStep, ...]


class BudgetExhausted(Exception):
    """The rewrite search budget was exceeded before a verdict."""


def _state_key(aps: APS) -> tuple:
    """Cheap exact memo key over raw vertex ids (sound, possibly weaker
    pruning than full canonicalization)."""
    return (tuple(sorted((l.kind, l.prems, l.concls,
                          l.main if l.kind == COTENSOR else None)
                         for l in aps.links)),
            frozenset(aps.h), frozenset(aps.c))


def _is_connected(aps: APS) -> bool:
    verts = list(aps.vertices)
    if not verts:
        return False
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for l in aps.links:
        vs = l.vertices()
        for v in vs[1:]:
            adj[vs[0]].add(v)
            adj[v].add(vs[0])
    seen = {verts[0]}
    todo = [verts[0]]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(verts)


def _rank_matches_cotensors(aps: APS) -> bool:
    """A necessary condition for net-hood.

    Each contraction removes one independent cycle of the incidence graph
    together with one cotensor link; interactions change neither.  A tree
    has no cycles and no cotensors, so the counts must agree up front.
    """
    tentacles = sum(len(l.vertices()) for l in aps.links)
    nodes = len(aps.vertices) + len(aps.links)
    cotensors = sum(1 for l in aps.links if l.kind == COTENSOR)
    return tentacles - nodes + 1 == cotensors


def contract_to_tree(aps: APS, budget: int = 100_000,
                     strategy: str = "eager") -> Optional[NetResult]:
    """Search interleavings of contractions and interactions for a tree.

    Contractions never conflict with each other, so the default strategy
    applies the first available contraction deterministically and only
    branches on interactions; ``strategy="full"`` branches on everything
    (used to cross-validate the eager strategy).
    """
    if not _is_connected(aps):
        return None  # both rewrite families preserve connectivity
    if not _rank_matches_cotensors(aps):
        return None
    seen: set = set()
    visits = 0

    def dfs(cur: APS, trace: list[RewriteStep]) -> Optional[NetResult]:
        nonlocal visits
        if cur.is_tree():
            return NetResult(cur, tuple(trace))
        key = _state_key(cur)
        if key in seen:
            return None
        seen.add(key)
        visits += 1
        if visits > budget:
            raise BudgetExhausted(f"visited {visits} abstract structures")
        contractions = contract_step(cur)
        if strategy == "eager" and contractions:
            step = contractions[0]
            trace.append(step)
            hit = dfs(step.result, trace)
            if hit is not None:
                return hit
            trace.pop()
            return None
        for step in contractions + interaction_step(cur):
            trace.append(step)
            hit = dfs(step.result, trace)
            if hit is not None:
                return hit
            trace.pop()
        return None

    return dfs(aps, [])


def is_proof_net(ps: ProofStructure, budget: int = 100_000,
                 strategy: str = "eager") -> Optional[NetResult]:
    """The contraction criterion for proof structures."""
    return contract_to_tree(to_abstract(ps), budget, strategy)


# ---------------------------------------------------------------------------
# components and reduction trees


def components(aps: APS) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """Maximal tensor-only subnets with at least one tensor link.

    Returns (vertex set, tensor link indices) per component.
    """
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for v in aps.vertices:
        parent[v] = v
    tensor_ids = [i for i, l in enumerate(aps.links) if l.kind == TENSOR]
    for i in tensor_ids:
        vs = aps.links[i].vertices()
        for v in vs[1:]:
            union(vs[0], v)
    groups: dict[int, tuple[set[int], list[int]]] = {}
    for i in tensor_ids:
        root = find(aps.links[i].vertices()[0])
        vs, ls = groups.setdefault(root, (set(), []))
        vs.update(aps.links[i].vertices())
        ls.append(i)
    return [(frozenset(vs), tuple(ls)) for vs, ls in groups.values()]


def active_components(aps: APS) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """Components not containing the main vertex of any cotensor link."""
    mains = {l.main for l in aps.links if l.kind == COTENSOR and l.main is not None}
    return [c for c in components(aps) if not (c[0] & mains)]


@dataclass
class ReductionTree:
    """Contractions as branches over component leaves.

    ``events`` lists (step, leaf component ids merged so far); ``leaves``
    are the initial components.
    """
    leaves: list[frozenset[int]]
    events: list[tuple[RewriteStep, frozenset[int]]]


def reduction_tree(aps: APS, trace: tuple[RewriteStep, ...]) -> ReductionTree:
    """Reorganize a successful trace component-wise.

    Interactions stay inside a single component; every contraction merges
    the component holding the cotensor's active pair with the component
    behind its main vertex.
    """
    leaves = [vs for vs, _ in components(aps)]
    events = []
    cur = aps
    for step in trace:
        if step.kind in INTERACTION_KINDS:
            touched = set()
            for i in step.redex:
                touched.update(cur.links[i].vertices())
            events.append((step, frozenset(touched)))
        else:
            merged = set()
            for i in step.redex:
                merged.update(cur.links[i].vertices())
            events.append((step, frozenset(merged)))
        cur = step.result
    return ReductionTree(leaves, events)


def replay(aps: APS, trace: tuple[RewriteStep, ...]) -> APS:
    """Re-execute a trace by kind and redex; raises if a step fails."""
    cur = aps
    for step in trace:
        candidates = contract_step(cur) + interaction_step(cur)
        hit = next((s for s in candidates
                    if s.kind == step.kind and s.redex == step.redex), None)
        if hit is None:
            raise ValueError(f"trace step {step.kind} at {step.redex} does not apply")
        cur = hit.result
    return cur


def trace_to_json(trace: tuple[RewriteStep, ...]) -> str:
    return json.dumps([{"kind": s.kind, "redex": list(s.redex)} for s in trace])


# ---------------------------------------------------------------------------
# reading sequents off trees


def tree_to_sequent(aps: APS, exit_vertex: Optional[int] = None) -> Sequent:
    """Display sequent of a contracted tree, rooted at a conclusion vertex."""
    seq, _ = tree_to_sequent_with_leaves(aps, exit_vertex)
    return seq


def tree_to_sequent_with_leaves(
        aps: APS, exit_vertex: Optional[int] = None) -> tuple[Sequent, list[int]]:
    """As tree_to_sequent, also returning antecedent leaf vertices in order."""
    if exit_vertex is None:
        if len(aps.concl_order) != 1:
            raise ValueError("need a designated conclusion")
        exit_vertex = aps.concl_order[0]
    above = aps.conclusion_link(exit_vertex)
    suc: Structure = Leaf(aps.c[exit_vertex])
    acc: list[int] = []
    if above is None:
        acc.append(exit_vertex)
        return Sequent(Leaf(aps.h[exit_vertex]), suc), acc
    ant = _rest(aps, above, exit_vertex, acc)
    return Sequent(ant, suc), acc


def _rest(aps: APS, link: Link, via: int, acc: list[int]) -> Structure:
    """Fold everything hanging off ``link`` except through ``via``."""
    if link.kind != TENSOR:
        raise ValueError("trees contain only tensor links")
    if len(link.prems) == 2:
        p0, p1 = link.prems
        c0 = link.concls[0]
        if via == c0:
            return SBin(PROD, _enter(aps, p0, link, acc), _enter(aps, p1, link, acc))
        if via == p0:
            return SBin(OVER, _enter(aps, c0, link, acc), _enter(aps, p1, link, acc))
        return SBin(UNDER, _enter(aps, p0, link, acc), _enter(aps, c0, link, acc))
    p0 = link.prems[0]
    c0, c1 = link.concls
    if via == p0:
        return SBin(COPROD, _enter(aps, c0, link, acc), _enter(aps, c1, link, acc))
    if via == c0:
        return SBin(RDIFF, _enter(aps, p0, link, acc), _enter(aps, c1, link, acc))
    return SBin(LDIFF, _enter(aps, c0, link, acc), _enter(aps, p0, link, acc))


def _enter(aps: APS, v: int, from_link: Link, acc: list[int]) -> Structure:
    """Structure of the subtree rooted at v, entered from from_link."""
    above = aps.conclusion_link(v)
    below = aps.premiss_link(v)
    other = above if below is from_link else below
    if other is None or other is from_link:
        acc.append(v)
        f = aps.h.get(v, aps.c.get(v))
        if f is None:
            raise ValueError(f"unlabeled leaf vertex {v}")
        return Leaf(f)
    return _rest(aps, other, v, acc)


def tree_hypothesis_order(aps: APS, exit_vertex: Optional[int] = None) -> list[int]:
    """Hypothesis vertices in the left-right order of the folded sequent."""
    _, leaf_order = tree_to_sequent_with_leaves(aps, exit_vertex)
    hyp_set = set(aps.hyp_order)
    return [v for v in leaf_order if v in hyp_set]


# ---------------------------------------------------------------------------
# sequentialization


def _display_paths(s: Sequent) -> dict[Sequent, tuple[tuple[str, Sequent], ...]]:
    from .display import display_moves
    paths: dict[Sequent, tuple[tuple[str, Sequent], ...]] = {s: ()}
    queue = [s]
    while queue:
        nxt = []
        for cur in queue:
            for rule, to in display_moves(cur):
                if to not in paths:
                    paths[to] = paths[cur] + ((rule, to),)
                    nxt.append(to)
        queue = nxt
    return paths


def _wrap(start: Sequent, path, node):
    from .display import SequentProof
    if not path:
        return node
    return SequentProof(start, path[0][0], (_wrap(path[0][1], path[1:], node),))


_REWIND_RULE = {"L*": "*L", "L(/)": "(/)L", "L(\\)": "(\\)L",
                "R(+)": "(+)R", "R\\": "\\R", "R/": "/R"}


def sequentialize(net: ProofStructure, result: NetResult):
    """Build an sLG proof from a successful contraction trace.

    The proof's root sequent is the display reading of the contracted
    tree; contractions replay (in reverse) as one-premise rules,
    interactions as G rules, the surviving tensors as two-premise rules
    and matched atoms as axioms.
    """
    from .display import SequentProof
    root = tree_to_sequent(result.tree)
    cotensors = {l.lid: l for l in net.links if l.kind == COTENSOR}
    tensors = [l for l in net.links if l.kind == TENSOR]
    steps = []
    cur = to_abstract(net)
    for step in result.trace:
        if step.kind in INTERACTION_KINDS:
            steps.append((step.kind, None))
        elif step.kind in CONTRACTION_KINDS:
            k = cur.links[step.redex[0]]
            orig = cotensors[k.lid]
            steps.append((step.kind, net.vertices[orig.main]))
        else:
            raise ValueError(f"bad trace step {step.kind}")
        cur = step.result
    proof = _rewind(root, list(reversed(steps)), net, tensors)
    if proof is None:
        raise ValueError("sequentialization failed")
    return proof


def _rewind(goal: Sequent, steps, net: ProofStructure, tensors):
    from .display import SequentProof, grishin_backward_moves
    if not steps:
        return _tensor_phase(goal, net, tensors)
    kind, main_formula = steps[0]
    paths = _display_paths(goal)
    if kind in CONTRACTION_KINDS:
        rule = _REWIND_RULE[kind]
        f = main_formula
        split = SBin(f.op, Leaf(f.left), Leaf(f.right))
        for member, path in paths.items():
            if kind.startswith("L") and member.ant == Leaf(f):
                premise = Sequent(split, member.suc)
            elif kind.startswith("R") and member.suc == Leaf(f):
                premise = Sequent(member.ant, split)
            else:
                continue
            sub = _rewind(premise, steps[1:], net, tensors)
            if sub is not None:
                node = SequentProof(member, rule, (sub,))
                return _wrap(goal, path, node)
        return None
    # interaction: find a display form whose root shapes admit this G move
    for member, path in paths.items():
        for rule, premise in grishin_backward_moves(member):
            if rule != kind:
                continue
            sub = _rewind(premise, steps[1:], net, tensors)
            if sub is not None:
                node = SequentProof(member, rule, (sub,))
                return _wrap(goal, path, node)
    return None


def _split_net(tensors, t, entry_vertices):
    """Partition the remaining tensors into the subnets behind each entry."""
    rest = [l for l in tensors if l is not t]
    groups = []
    for v in entry_vertices:
        sub = []
        frontier = {v}
        changed = True
        taken = set()
        while changed:
            changed = False
            for l in rest:
                if id(l) in taken:
                    continue
                if frontier & set(l.vertices()):
                    taken.add(id(l))
                    sub.append(l)
                    frontier |= set(l.vertices())
                    changed = True
        groups.append((v, sub))
    return groups


def _tensor_phase(goal: Sequent, net: ProofStructure, tensors):
    from .display import SequentProof
    if not tensors:
        if (isinstance(goal.ant, Leaf) and isinstance(goal.suc, Leaf)
                and goal.ant.formula == goal.suc.formula):
            return SequentProof(goal, "Ax")
        paths = _display_paths(goal)
        for member, path in paths.items():
            if (isinstance(member.ant, Leaf) and isinstance(member.suc, Leaf)
                    and member.ant.formula == member.suc.formula):
                return _wrap(goal, path, SequentProof(member, "Ax"))
        return None
    paths = _display_paths(goal)
    for t in tensors:
        m = t.main
        others = [l for l in tensors if l is not t]
        if any(m in l.vertices() for l in others):
            continue  # main still internal; not a splitting tensor yet
        f = net.vertices[m]
        plan = _split_plan(net, t, m, f)
        if plan is None:
            continue
        rule, want_side, shape_op, swap_holes, parts = plan
        for member, path in paths.items():
            if want_side == "ant":
                if member.ant != Leaf(f) or not isinstance(member.suc, SBin) \
                        or member.suc.op != shape_op:
                    continue
                holes = (member.suc.left, member.suc.right)
            else:
                if member.suc != Leaf(f) or not isinstance(member.ant, SBin) \
                        or member.ant.op != shape_op:
                    continue
                holes = (member.ant.left, member.ant.right)
            if swap_holes:
                holes = (holes[1], holes[0])
            prem_seqs = []
            for (vertex, formula, polarity), hole in zip(parts, holes):
                if polarity == "suc":
                    prem_seqs.append((vertex, Sequent(hole, Leaf(formula))))
                else:
                    prem_seqs.append((vertex, Sequent(Leaf(formula), hole)))
            groups = _split_net(tensors, t, [v for v, _ in prem_seqs])
            if sum(len(g) for _, g in groups) != len(tensors) - 1:
                continue  # the subnets overlap; t does not split here
            subs = []
            ok = True
            for (v, sub_tensors), (_, prem) in zip(groups, prem_seqs):
                sub = _tensor_phase(prem, net, sub_tensors)
                if sub is None:
                    ok = False
                    break
                subs.append(sub)
            if not ok:
                continue
            node = SequentProof(member, rule, tuple(subs))
            return _wrap(goal, path, node)
    return None


def _split_plan(net: ProofStructure, t: Link, m: int, f: Formula):
    """(rule, displayed side of main, structural op, swap holes, parts).

    Premise parts are (tentacle vertex, its formula, which side it proves)
    in the order of the two-premise rule; ``swap_holes`` signals rules
    whose first premise lives in the right structural slot (/L, (\\)R).
    """
    fv = net.vertices
    if len(t.prems) == 2:
        p0, p1 = t.prems
        c0 = t.concls[0]
        if m == c0 and isinstance(f, Bin) and f.op == PROD:
            return ("*R", "suc", PROD, False,
                    [(p0, fv[p0], "suc"), (p1, fv[p1], "suc")])
        if m == p1 and isinstance(f, Bin) and f.op == UNDER:
            return ("\\L", "ant", UNDER, False,
                    [(p0, fv[p0], "suc"), (c0, fv[c0], "ant")])
        if m == p0 and isinstance(f, Bin) and f.op == OVER:
            return ("/L", "ant", OVER, True,
                    [(p1, fv[p1], "suc"), (c0, fv[c0], "ant")])
    if len(t.concls) == 2:
        p0 = t.prems[0]
        c0, c1 = t.concls
        if m == p0 and isinstance(f, Bin) and f.op == COPROD:
            return ("(+)L", "ant", COPROD, False,
                    [(c0, fv[c0], "ant"), (c1, fv[c1], "ant")])
        if m == c0 and isinstance(f, Bin) and f.op == RDIFF:
            return ("(/)R", "suc", RDIFF, False,
                    [(p0, fv[p0], "suc"), (c1, fv[c1], "ant")])
        if m == c1 and isinstance(f, Bin) and f.op == LDIFF:
            return ("(\\)R", "suc", LDIFF, True,
                    [(p0, fv[p0], "suc"), (c0, fv[c0], "ant")])
    return None
