"""Proof terms computed directly from proof nets via composition graphs.

Every net vertex splits into an upper slot (what the vertex receives
from the link above, or a free hypothesis) and a lower slot (what the
link below consumes, or a free conclusion).  Tensor links propagate pair
terms from their active slots to their main slot; cotensor links
contribute case prefixes.  The axiom edge between a vertex's two slots
is then one of: a substitution (same sort; collapsed), a command (two
producers), or a mu edge (two consumers).  Same-sort atom edges whose
bias blocks the collapse become fused command+mu pairs introducing a
fresh (co)variable.

Extraction enumerates pairings of command and mu edges: follow a
command, absorb every cotensor whose binders are free in it, then bind
one of its free names along a mu edge, landing the bound term at the
far slot.  Each completed walk exits with a value at the designated
conclusion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import terms as tm
from .formula import (Atom, BiasMap, Bin, COPROD, Formula, LDIFF, NEG, OVER,
                      POS, PROD, RDIFF, UNDER, polarity)
from .proofnet import COTENSOR, Link, ProofStructure, TENSOR

VAL = "val"
CTX = "ctx"
PRODUCER = "producer"
CONSUMER = "consumer"


@dataclass
class Slot:
    vertex: int
    end: str                   # "top" or "bottom"
    sort: str                  # VAL or CTX
    role: str                  # PRODUCER or CONSUMER
    name: str                  # placeholder, binder or free name
    term: Optional[tm.Term] = None   # complex producer terms (tensor mains)


@dataclass
class Edge:
    vertex: int
    kind: str                  # "subst", "command", "mu", "eta"
    formula: Formula


@dataclass
class PrefixInfo:
    link_index: int
    kind: str
    binders: tuple[str, str]
    subject_slot: str          # placeholder name of the main slot


@dataclass
class CompositionGraph:
    net: ProofStructure
    bias: BiasMap
    top: dict[int, Slot]
    bottom: dict[int, Slot]
    edges: dict[int, Edge]
    prefixes: list[PrefixInfo]
    subst: dict[str, tm.Term]
    exit_name: str
    tensor_terms: dict[int, tm.Term]   # main terms per tensor link index

    def resolve(self, t: tm.Term) -> tm.Term:
        return _resolve(self.subst, t)


def _resolve(subst: dict[str, tm.Term], t: tm.Term) -> tm.Term:
    if isinstance(t, tm.Var) or isinstance(t, tm.CoVar):
        hit = subst.get(t.name)
        return _resolve(subst, hit) if hit is not None else t
    if isinstance(t, tm.Mu):
        return tm.Mu(t.covar, _resolve(subst, t.body))
    if isinstance(t, tm.CoMu):
        return tm.CoMu(t.var, _resolve(subst, t.body))
    if isinstance(t, tm.VPair):
        return tm.VPair(t.op, _resolve(subst, t.left), _resolve(subst, t.right))
    if isinstance(t, tm.EPair):
        return tm.EPair(t.op, _resolve(subst, t.left), _resolve(subst, t.right))
    if isinstance(t, tm.CmdL):
        ctx = _resolve(subst, t.context)
        hit = subst.get(t.var)
        if hit is not None:
            assert isinstance(hit, tm.Var), "command variable must stay atomic"
            return tm.CmdL(hit.name, ctx)
        return tm.CmdL(t.var, ctx)
    if isinstance(t, tm.CmdR):
        val = _resolve(subst, t.value)
        hit = subst.get(t.covar)
        if hit is not None:
            assert isinstance(hit, tm.CoVar)
            return tm.CmdR(val, hit.name)
        return tm.CmdR(val, t.covar)
    if isinstance(t, tm.CasePrefix):
        body = _resolve(subst, t.body)
        subj = t.subject
        hit = subst.get(subj)
        if hit is not None:
            assert isinstance(hit, (tm.Var, tm.CoVar)), "case subject must stay atomic"
            subj = hit.name
        return tm.CasePrefix(t.kind, t.binders, subj, body)
    raise TypeError(t)


class _Names:
    def __init__(self) -> None:
        self.n = itertools.count(1)

    def var(self) -> str:
        return f"v{next(self.n)}"

    def covar(self) -> str:
        return f"k{next(self.n)}"


def _link_shape(net: ProofStructure, l: Link) -> str:
    """The rule this link stands for, from its arities and main position."""
    if l.kind == TENSOR:
        if len(l.prems) == 2:
            return {0: "L/", 1: "L\\"}.get(
                l.prems.index(l.main) if l.main in l.prems else -1, "R*")
        return {0: "R(/)", 1: "R(\\)"}.get(
            l.concls.index(l.main) if l.main in l.concls else -1, "L(+)")
    if len(l.prems) == 1:
        if l.main == l.prems[0]:
            return "L*"
        return "R/" if l.main == l.concls[0] else "R\\"
    if l.main == l.concls[0]:
        return "R(+)"
    return "L(/)" if l.main == l.prems[0] else "L(\\)"


def build_composition_graph(net: ProofStructure, bias: BiasMap,
                            hyp_names: Optional[list[str]] = None,
                            exit_vertex: Optional[int] = None) -> CompositionGraph:
    """Expand vertices into axiom edges and classify them.

    ``hyp_names`` supplies the free variable (or lexical constant) name per
    hypothesis, in order.
    """
    if len(net.concls) != 1 and exit_vertex is None:
        raise ValueError("extraction needs a designated conclusion")
    exit_vertex = net.concls[0] if exit_vertex is None else exit_vertex
    names = _Names()
    top: dict[int, Slot] = {}
    bottom: dict[int, Slot] = {}
    prefixes: list[PrefixInfo] = []
    tensor_terms: dict[int, tm.Term] = {}

    def set_slot(store: dict[int, Slot], v: int, end: str, sort: str,
                 role: str, name: str, term: Optional[tm.Term] = None) -> None:
        store[v] = Slot(v, end, sort, role, name, term)

    for idx, l in enumerate(net.links):
        shape = _link_shape(net, l)
        if l.kind == TENSOR:
            if shape == "L/":
                m, d = l.prems
                n = l.concls[0]
                dv, ne = names.var(), names.covar()
                set_slot(bottom, d, "bottom", VAL, CONSUMER, dv)
                set_slot(top, n, "top", CTX, CONSUMER, ne)
                term = tm.EPair(OVER, tm.CoVar(ne), tm.Var(dv))
                set_slot(bottom, m, "bottom", CTX, PRODUCER, names.covar(), term)
                tensor_terms[idx] = term
            elif shape == "L\\":
                d, m = l.prems
                n = l.concls[0]
                dv, ne = names.var(), names.covar()
                set_slot(bottom, d, "bottom", VAL, CONSUMER, dv)
                set_slot(top, n, "top", CTX, CONSUMER, ne)
                term = tm.EPair(UNDER, tm.Var(dv), tm.CoVar(ne))
                set_slot(bottom, m, "bottom", CTX, PRODUCER, names.covar(), term)
                tensor_terms[idx] = term
            elif shape == "R*":
                a, b = l.prems
                m = l.concls[0]
                av, bv = names.var(), names.var()
                set_slot(bottom, a, "bottom", VAL, CONSUMER, av)
                set_slot(bottom, b, "bottom", VAL, CONSUMER, bv)
                term = tm.VPair(PROD, tm.Var(av), tm.Var(bv))
                set_slot(top, m, "top", VAL, PRODUCER, names.var(), term)
                tensor_terms[idx] = term
            elif shape == "L(+)":
                m = l.prems[0]
                a, b = l.concls
                ae, be = names.covar(), names.covar()
                set_slot(top, a, "top", CTX, CONSUMER, ae)
                set_slot(top, b, "top", CTX, CONSUMER, be)
                term = tm.EPair(COPROD, tm.CoVar(ae), tm.CoVar(be))
                set_slot(bottom, m, "bottom", CTX, PRODUCER, names.covar(), term)
                tensor_terms[idx] = term
            elif shape == "R(/)":
                a = l.prems[0]
                m, b = l.concls
                av, be = names.var(), names.covar()
                set_slot(bottom, a, "bottom", VAL, CONSUMER, av)
                set_slot(top, b, "top", CTX, CONSUMER, be)
                term = tm.VPair(RDIFF, tm.Var(av), tm.CoVar(be))
                set_slot(top, m, "top", VAL, PRODUCER, names.var(), term)
                tensor_terms[idx] = term
            elif shape == "R(\\)":
                a = l.prems[0]
                b, m = l.concls
                av, be = names.var(), names.covar()
                set_slot(bottom, a, "bottom", VAL, CONSUMER, av)
                set_slot(top, b, "top", CTX, CONSUMER, be)
                term = tm.VPair(LDIFF, tm.CoVar(be), tm.Var(av))
                set_slot(top, m, "top", VAL, PRODUCER, names.var(), term)
                tensor_terms[idx] = term
            else:
                raise ValueError(f"unrecognized tensor shape {shape}")
        else:
            if shape == "L*":
                m = l.prems[0]
                a, b = l.concls
                x, y = names.var(), names.var()
                set_slot(top, a, "top", VAL, PRODUCER, x)
                set_slot(top, b, "top", VAL, PRODUCER, y)
                z = names.var()
                set_slot(bottom, m, "bottom", VAL, CONSUMER, z)
                prefixes.append(PrefixInfo(idx, "*L", (x, y), z))
            elif shape == "R(+)":
                a, b = l.prems
                m = l.concls[0]
                al, be = names.covar(), names.covar()
                set_slot(bottom, a, "bottom", CTX, PRODUCER, al)
                set_slot(bottom, b, "bottom", CTX, PRODUCER, be)
                g = names.covar()
                set_slot(top, m, "top", CTX, CONSUMER, g)
                prefixes.append(PrefixInfo(idx, "(+)R", (al, be), g))
            elif shape == "L(/)":
                m, b = l.prems
                a = l.concls[0]
                x, be = names.var(), names.covar()
                set_slot(top, a, "top", VAL, PRODUCER, x)
                set_slot(bottom, b, "bottom", CTX, PRODUCER, be)
                z = names.var()
                set_slot(bottom, m, "bottom", VAL, CONSUMER, z)
                prefixes.append(PrefixInfo(idx, "(/)L", (x, be), z))
            elif shape == "L(\\)":
                b, m = l.prems
                a = l.concls[0]
                x, be = names.var(), names.covar()
                set_slot(top, a, "top", VAL, PRODUCER, x)
                set_slot(bottom, b, "bottom", CTX, PRODUCER, be)
                z = names.var()
                set_slot(bottom, m, "bottom", VAL, CONSUMER, z)
                prefixes.append(PrefixInfo(idx, "(\\)L", (be, x), z))
            elif shape == "R/":
                b = l.prems[0]
                m, a = l.concls
                x, be = names.var(), names.covar()
                set_slot(top, a, "top", VAL, PRODUCER, x)
                set_slot(bottom, b, "bottom", CTX, PRODUCER, be)
                g = names.covar()
                set_slot(top, m, "top", CTX, CONSUMER, g)
                prefixes.append(PrefixInfo(idx, "/R", (be, x), g))
            elif shape == "R\\":
                b = l.prems[0]
                a, m = l.concls
                x, be = names.var(), names.covar()
                set_slot(top, a, "top", VAL, PRODUCER, x)
                set_slot(bottom, b, "bottom", CTX, PRODUCER, be)
                g = names.covar()
                set_slot(top, m, "top", CTX, CONSUMER, g)
                prefixes.append(PrefixInfo(idx, "\\R", (x, be), g))
            else:
                raise ValueError(f"unrecognized cotensor shape {shape}")

    # free slots
    hyp_names = hyp_names or [f"w{i}" for i in range(len(net.hyps))]
    for v, name in zip(net.hyps, hyp_names):
        if v not in top:
            set_slot(top, v, "top", VAL, PRODUCER, name)
    exit_name = names.var()
    for v in net.concls:
        if v not in bottom:
            if v != exit_vertex:
                raise ValueError("extraction supports a single conclusion")
            set_slot(bottom, v, "bottom", VAL, CONSUMER, exit_name)

    # classify edges and collapse substitutions
    subst: dict[str, tm.Term] = {}
    edges: dict[int, Edge] = {}
    for v in net.vertices:
        t, b = top.get(v), bottom.get(v)
        if t is None or b is None:
            raise ValueError(f"vertex {v} lacks a slot")
        f = net.vertices[v]
        atom = isinstance(f, Atom)
        if t.role == PRODUCER and b.role == PRODUCER:
            edges[v] = Edge(v, "command", f)
        elif t.role == CONSUMER and b.role == CONSUMER:
            edges[v] = Edge(v, "mu", f)
        elif t.sort == VAL and b.sort == VAL:
            # value flows downward
            if not atom or polarity(f, bias) == POS:
                if t.term is not None and b.end == "bottom" and _is_case_subject(b, prefixes):
                    if not isinstance(t.term, (tm.Var,)):
                        raise ValueError("cut formula inside a proof structure")
                subst[b.name] = t.term if t.term is not None else tm.Var(t.name)
                edges[v] = Edge(v, "subst", f)
            else:
                edges[v] = Edge(v, "eta", f)
        elif t.sort == CTX and b.sort == CTX:
            # context flows upward
            if not atom or polarity(f, bias) == NEG:
                subst[t.name] = b.term if b.term is not None else tm.CoVar(b.name)
                edges[v] = Edge(v, "subst", f)
            else:
                edges[v] = Edge(v, "eta", f)
        else:
            raise AssertionError(f"bad slot combination at vertex {v}")
    return CompositionGraph(net, bias, top, bottom, edges, prefixes, subst,
                            exit_name, tensor_terms)


def _is_case_subject(slot: Slot, prefixes: list[PrefixInfo]) -> bool:
    return any(p.subject_slot == slot.name for p in prefixes)


# ---------------------------------------------------------------------------
# rooted components


def rooted_components(cg: CompositionGraph) -> list[tuple[int, ...]]:
    """Maximal tensor-only subnets with a single main term each.

    Tensors join when one's main slot substitutes into the other's active
    slot; arrows can split a graph component into several rooted ones.
    """
    net = cg.net
    tensor_idx = [i for i, l in enumerate(net.links) if l.kind == TENSOR]
    parent = {i: i for i in tensor_idx}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # main slot of tensor i collapsed into an active slot of tensor j?
    consumer_owner: dict[str, int] = {}
    for i in tensor_idx:
        l = net.links[i]
        for v in l.vertices():
            for slot in (cg.top.get(v), cg.bottom.get(v)):
                if slot and slot.role == CONSUMER and _slot_belongs(net.links[i], v, slot):
                    consumer_owner[slot.name] = i
    for i in tensor_idx:
        term = cg.tensor_terms[i]
        main_v = net.links[i].main
        slot = cg.bottom.get(main_v) if main_v in net.links[i].prems else cg.top.get(main_v)
        # where did this main's term go?
        for name, sub in cg.subst.items():
            if sub is term and name in consumer_owner:
                parent[find(i)] = find(consumer_owner[name])
    groups: dict[int, list[int]] = {}
    for i in tensor_idx:
        groups.setdefault(find(i), []).append(i)
    return [tuple(sorted(g)) for g in groups.values()]


def _slot_belongs(l: Link, v: int, slot: Slot) -> bool:
    if slot.end == "bottom":
        return v in l.prems
    return v in l.concls


# ---------------------------------------------------------------------------
# pairing enumeration


@dataclass(frozen=True)
class Pairing:
    """command edge -> mu edge (by vertex), with traversal directions."""
    pairs: tuple[tuple[int, int, str], ...]


@dataclass
class Extraction:
    pairing: Pairing
    term: tm.Term


def extract_terms(cg: CompositionGraph) -> list[Extraction]:
    """All coherent command/mu pairings with their values at the exit."""
    bias = cg.bias
    command_edges = [e for e in cg.edges.values() if e.kind == "command"]
    mu_edges = [e for e in cg.edges.values() if e.kind == "mu"]
    eta_edges = [e for e in cg.edges.values() if e.kind == "eta"]
    names = _Names()
    results: list[Extraction] = []
    seen: set = set()

    def command_options(e: Edge, subst) -> list[tm.Command]:
        t, b = cg.top[e.vertex], cg.bottom[e.vertex]
        out = []
        pol = polarity(e.formula, bias)
        tv = _resolve(subst, t.term if t.term is not None else tm.Var(t.name))
        bt = _resolve(subst, b.term if b.term is not None else tm.CoVar(b.name))
        if pol == NEG and isinstance(tv, tm.Var):
            out.append(tm.CmdL(tv.name, bt))
        if pol == POS and isinstance(bt, tm.CoVar):
            out.append(tm.CmdR(tv, bt.name))
        return out

    def absorb(cmd: tm.Command, absorbed: set, subst) -> tuple[tm.Command, set]:
        changed = True
        absorbed = set(absorbed)
        while changed:
            changed = False
            free = tm.free_names(cmd)
            for p in cg.prefixes:
                if p.link_index in absorbed:
                    continue
                if all(free.get(bn, 0) == 1 for bn in p.binders):
                    subj = _resolve(subst, tm.Var(p.subject_slot))
                    if isinstance(subj, (tm.Var, tm.CoVar)):
                        subj_name = subj.name
                    else:
                        continue
                    cmd = tm.CasePrefix(p.kind, p.binders, subj_name, cmd)
                    absorbed.add(p.link_index)
                    free = tm.free_names(cmd)
                    changed = True
        return cmd, absorbed

    def mu_options(m: Edge, cmd_free: dict[str, int]):
        t, b = cg.top[m.vertex], cg.bottom[m.vertex]
        pol = polarity(m.formula, bias)
        out = []
        if pol == NEG and cmd_free.get(t.name, 0) == 1:
            out.append(("mu", t.name, b.name))
        if pol == POS and cmd_free.get(b.name, 0) == 1:
            out.append(("comu", b.name, t.name))
        return out

    def finish(subst, pairs) -> None:
        value = _resolve(subst, tm.Var(cg.exit_name))
        value = tm.discipline_normal(value)
        key = tm.fmt_term(tm.commuting_normal(value))
        if key not in seen:
            seen.add(key)
            results.append(Extraction(Pairing(tuple(pairs)), value))

    def walk(used_cmd: frozenset, used_mu: frozenset, absorbed: frozenset,
             subst: dict, pairs: list) -> None:
        if (len(used_cmd) == len(command_edges) + len(eta_edges)
                and len(used_mu) == len(mu_edges) + len(eta_edges)
                and len(absorbed) == len(cg.prefixes)
                and cg.exit_name in subst):
            finish(subst, pairs)
            return
        for e in command_edges + eta_edges:
            if e.vertex in used_cmd:
                continue
            if e.kind == "eta":
                t, b = cg.top[e.vertex], cg.bottom[e.vertex]
                pol = polarity(e.formula, bias)
                if t.sort == VAL:  # value side blocked: <x | k> then mu k
                    fresh = f"e{e.vertex}"
                    tv = _resolve(subst, tm.Var(t.name))
                    if not isinstance(tv, tm.Var):
                        continue
                    cmd0: tm.Command = tm.CmdL(tv.name, tm.CoVar(fresh))
                    binder, target = fresh, b.name
                    direction = "mu"
                else:
                    fresh = f"e{e.vertex}"
                    bt = _resolve(subst, tm.CoVar(b.name))
                    if not isinstance(bt, tm.CoVar):
                        continue
                    cmd0 = tm.CmdR(tm.Var(fresh), bt.name)
                    binder, target = fresh, t.name
                    direction = "comu"
                cmd1, absorbed2 = absorb(cmd0, set(absorbed), subst)
                bound = (tm.Mu(binder, cmd1) if direction == "mu"
                         else tm.CoMu(binder, cmd1))
                subst2 = dict(subst)
                subst2[target] = bound
                pairs.append((e.vertex, e.vertex, direction))
                walk(used_cmd | {e.vertex}, used_mu | {e.vertex},
                     frozenset(absorbed2), subst2, pairs)
                pairs.pop()
                continue
            for cmd0 in command_options(e, subst):
                cmd1, absorbed2 = absorb(cmd0, set(absorbed), subst)
                free = tm.free_names(cmd1)
                for m in mu_edges:
                    if m.vertex in used_mu:
                        continue
                    for direction, binder, target in mu_options(m, free):
                        bound = (tm.Mu(binder, cmd1) if direction == "mu"
                                 else tm.CoMu(binder, cmd1))
                        subst2 = dict(subst)
                        subst2[target] = bound
                        pairs.append((e.vertex, m.vertex, direction))
                        walk(used_cmd | {e.vertex}, used_mu | {m.vertex},
                             frozenset(absorbed2), subst2, pairs)
                        pairs.pop()
        return

    walk(frozenset(), frozenset(), frozenset(), dict(cg.subst), [])
    return results


def extract_from_net(net: ProofStructure, bias: BiasMap,
                     hyp_names: Optional[list[str]] = None) -> list[Extraction]:
    cg = build_composition_graph(net, bias, hyp_names)
    return extract_terms(cg)
