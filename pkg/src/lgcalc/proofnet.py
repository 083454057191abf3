"""Proof structures: links, lexical unfolding, axiom matchings, abstraction.

A link is a hyperedge with ordered premiss and conclusion tentacles and
an optional main vertex.  Tensor links come from the non-invertible
two-premise sequent rules, cotensor links from the invertible rewrite
rules; each connective has one of each, depending on whether the main
formula sits on the hypothesis or the conclusion side.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .formula import (Atom, Bin, COPROD, Formula, LDIFF, OVER, PROD, RDIFF,
                      UNDER, fmt_formula)

TENSOR = "tensor"
COTENSOR = "cotensor"

HYP = "hyp"
CONCL = "concl"


@dataclass(frozen=True)
class Link:
    kind: str
    prems: tuple[int, ...]
    concls: tuple[int, ...]
    main: Optional[int] = None
    lid: int = field(default=-1, compare=False)  # stable identity across rewrites

    def __post_init__(self) -> None:
        if self.kind not in (TENSOR, COTENSOR):
            raise ValueError(f"bad link kind: {self.kind!r}")
        if self.main is not None and self.main not in self.prems + self.concls:
            raise ValueError("main vertex must be a tentacle")

    def vertices(self) -> tuple[int, ...]:
        return self.prems + self.concls


@dataclass
class ProofStructure:
    vertices: dict[int, Formula]
    links: list[Link]
    hyps: tuple[int, ...]
    concls: tuple[int, ...]

    def premiss_link(self, v: int) -> Optional[Link]:
        for l in self.links:
            if v in l.prems:
                return l
        return None

    def conclusion_link(self, v: int) -> Optional[Link]:
        for l in self.links:
            if v in l.concls:
                return l
        return None

    def check_wellformed(self) -> bool:
        """Each vertex at most once a premiss and at most once a conclusion."""
        for v in self.vertices:
            if sum(l.prems.count(v) for l in self.links) > 1:
                return False
            if sum(l.concls.count(v) for l in self.links) > 1:
                return False
        return True

    def structure_hyps(self) -> list[int]:
        taken = {v for l in self.links for v in l.concls}
        return [v for v in self.vertices if v not in taken]

    def structure_concls(self) -> list[int]:
        taken = {v for l in self.links for v in l.prems}
        return [v for v in self.vertices if v not in taken]


def _mk(links: list[Link], kind: str, prems: tuple[int, ...],
        concls: tuple[int, ...], main: Optional[int] = None) -> Link:
    return Link(kind, prems, concls, main, lid=len(links))


class _Fresh:
    def __init__(self, start: int = 0):
        self.n = start

    def __call__(self) -> int:
        v = self.n
        self.n += 1
        return v


def _unfold(f: Formula, side: str, fresh: _Fresh,
            vertices: dict[int, Formula], links: list[Link]) -> int:
    """Recursive unfolding; returns the vertex id of the formula occurrence."""
    v = fresh()
    vertices[v] = f
    if isinstance(f, Atom):
        return v
    a, b = f.left, f.right
    if side == HYP:
        if f.op == PROD:
            av = _unfold(a, HYP, fresh, vertices, links)
            bv = _unfold(b, HYP, fresh, vertices, links)
            links.append(_mk(links, COTENSOR, (v,), (av, bv), main=v))
        elif f.op == RDIFF:
            av = _unfold(a, HYP, fresh, vertices, links)
            bv = _unfold(b, CONCL, fresh, vertices, links)
            links.append(_mk(links, COTENSOR, (v, bv), (av,), main=v))
        elif f.op == LDIFF:
            av = _unfold(a, CONCL, fresh, vertices, links)
            bv = _unfold(b, HYP, fresh, vertices, links)
            links.append(_mk(links, COTENSOR, (av, v), (bv,), main=v))
        elif f.op == COPROD:
            av = _unfold(a, HYP, fresh, vertices, links)
            bv = _unfold(b, HYP, fresh, vertices, links)
            links.append(_mk(links, TENSOR, (v,), (av, bv), main=v))
        elif f.op == UNDER:
            av = _unfold(a, CONCL, fresh, vertices, links)
            bv = _unfold(b, HYP, fresh, vertices, links)
            links.append(_mk(links, TENSOR, (av, v), (bv,), main=v))
        elif f.op == OVER:
            av = _unfold(a, HYP, fresh, vertices, links)
            bv = _unfold(b, CONCL, fresh, vertices, links)
            links.append(_mk(links, TENSOR, (v, bv), (av,), main=v))
    else:
        if f.op == PROD:
            av = _unfold(a, CONCL, fresh, vertices, links)
            bv = _unfold(b, CONCL, fresh, vertices, links)
            links.append(_mk(links, TENSOR, (av, bv), (v,), main=v))
        elif f.op == COPROD:
            av = _unfold(a, CONCL, fresh, vertices, links)
            bv = _unfold(b, CONCL, fresh, vertices, links)
            links.append(_mk(links, COTENSOR, (av, bv), (v,), main=v))
        elif f.op == OVER:
            av = _unfold(a, CONCL, fresh, vertices, links)
            bv = _unfold(b, HYP, fresh, vertices, links)
            links.append(_mk(links, COTENSOR, (av,), (v, bv), main=v))
        elif f.op == UNDER:
            av = _unfold(a, HYP, fresh, vertices, links)
            bv = _unfold(b, CONCL, fresh, vertices, links)
            links.append(_mk(links, COTENSOR, (bv,), (av, v), main=v))
        elif f.op == RDIFF:
            av = _unfold(a, CONCL, fresh, vertices, links)
            bv = _unfold(b, HYP, fresh, vertices, links)
            links.append(_mk(links, TENSOR, (av,), (v, bv), main=v))
        elif f.op == LDIFF:
            av = _unfold(a, HYP, fresh, vertices, links)
            bv = _unfold(b, CONCL, fresh, vertices, links)
            links.append(_mk(links, TENSOR, (bv,), (av, v), main=v))
    return v


def unfold(f: Formula, side: str) -> ProofStructure:
    """Lexical unfolding of a single formula occurrence."""
    vertices: dict[int, Formula] = {}
    links: list[Link] = []
    root = _unfold(f, side, _Fresh(), vertices, links)
    return ProofStructure(vertices, links,
                          (root,) if side == HYP else (),
                          (root,) if side == CONCL else ())


def combined_unfolding(hyps: list[Formula],
                       concls: list[Formula]) -> tuple[ProofStructure, list[int], list[int]]:
    """Unfold all judgement formulas into one structure; returns root ids."""
    vertices: dict[int, Formula] = {}
    links: list[Link] = []
    fresh = _Fresh()
    hyp_roots = [_unfold(f, HYP, fresh, vertices, links) for f in hyps]
    concl_roots = [_unfold(f, CONCL, fresh, vertices, links) for f in concls]
    ps = ProofStructure(vertices, links, tuple(hyp_roots), tuple(concl_roots))
    return ps, hyp_roots, concl_roots


@dataclass(frozen=True)
class Matching:
    """Pairs (upper, lower) of identified atom occurrences."""
    pairs: tuple[tuple[int, int], ...]


def candidate_pairs(ps: ProofStructure, hyp_roots: list[int],
                    concl_roots: list[int]) -> tuple[dict[str, list[int]], dict[str, list[int]]]:
    """Atomic occurrences that must gain a conclusion / premiss attachment.

    uppers: no premiss link yet, and not a judgement conclusion root;
    lowers: no conclusion link yet, and not a judgement hypothesis root.
    """
    in_prems = {v for l in ps.links for v in l.prems}
    in_concls = {v for l in ps.links for v in l.concls}
    uppers: dict[str, list[int]] = {}
    lowers: dict[str, list[int]] = {}
    for v, f in ps.vertices.items():
        if not isinstance(f, Atom):
            continue
        if v not in in_prems and v not in concl_roots:
            uppers.setdefault(f.name, []).append(v)
        if v not in in_concls and v not in hyp_roots:
            lowers.setdefault(f.name, []).append(v)
    return uppers, lowers


def enumerate_matchings(hyps: list[Formula],
                        concls: list[Formula]) -> Iterator[tuple[Matching, ProofStructure]]:
    """All complete axiom matchings as merged proof structures.

    Per atom name, pair every atomic conclusion occurrence still lacking a
    premiss attachment with a distinct atomic hypothesis occurrence lacking
    a conclusion attachment; the merged structure has exactly the input
    formulas as hypotheses and conclusions, in order.
    """
    ps, hyp_roots, concl_roots = combined_unfolding(hyps, concls)
    uppers, lowers = candidate_pairs(ps, hyp_roots, concl_roots)
    names = sorted(set(uppers) | set(lowers))
    for name in names:
        if len(uppers.get(name, ())) != len(lowers.get(name, ())):
            return
    per_name = []
    for name in names:
        ups = uppers.get(name, [])
        los = lowers.get(name, [])
        per_name.append([tuple(zip(ups, perm)) for perm in itertools.permutations(los)])
    for combo in itertools.product(*per_name):
        pairs = tuple(p for group in combo for p in group)
        yield Matching(pairs), _merge(ps, hyp_roots, concl_roots, pairs)


def _merge(ps: ProofStructure, hyp_roots: list[int], concl_roots: list[int],
           pairs: tuple[tuple[int, int], ...]) -> ProofStructure:
    rep = {v: v for v in ps.vertices}
    for upper, lower in pairs:
        rep[lower] = upper
    vertices = {rep[v]: f for v, f in ps.vertices.items()}
    links = [Link(l.kind,
                  tuple(rep[v] for v in l.prems),
                  tuple(rep[v] for v in l.concls),
                  None if l.main is None else rep[l.main],
                  lid=l.lid)
             for l in ps.links]
    return ProofStructure(vertices, links,
                          tuple(rep[v] for v in hyp_roots),
                          tuple(rep[v] for v in concl_roots))


# ---------------------------------------------------------------------------
# abstract proof structures


@dataclass
class APS:
    """Proof structure with internal formula labels erased.

    Tensor main markers are retained as construction metadata (they play
    no role in contraction or interaction matching, which only ever
    consult cotensor arrows).
    """
    vertices: frozenset[int]
    links: tuple[Link, ...]
    h: dict[int, Formula]
    c: dict[int, Formula]
    hyp_order: tuple[int, ...] = ()
    concl_order: tuple[int, ...] = ()

    def premiss_link(self, v: int) -> Optional[Link]:
        for l in self.links:
            if v in l.prems:
                return l
        return None

    def conclusion_link(self, v: int) -> Optional[Link]:
        for l in self.links:
            if v in l.concls:
                return l
        return None

    def is_tree(self) -> bool:
        """Acyclic, connected, and without cotensor links."""
        if any(l.kind == COTENSOR for l in self.links):
            return False
        verts = list(self.vertices)
        if not verts:
            return False
        # incidence graph of vertices and links must be connected and acyclic
        nodes = len(verts) + len(self.links)
        edges = sum(len(l.vertices()) for l in self.links)
        if edges != nodes - 1:
            return False
        adj: dict[object, list[object]] = {v: [] for v in verts}
        for i, l in enumerate(self.links):
            key = ("L", i)
            adj[key] = []
            for v in l.vertices():
                adj[key].append(v)
                adj[v].append(key)
        seen = set()
        todo = [verts[0]]
        while todo:
            x = todo.pop()
            if x in seen:
                continue
            seen.add(x)
            todo.extend(adj[x])
        return len(seen) == nodes

    def canon(self) -> tuple:
        """Canonical hashable encoding, stable under vertex renaming."""
        order: dict[int, int] = {}

        def visit(v: int) -> None:
            if v not in order:
                order[v] = len(order)

        incident: dict[int, list[Link]] = {v: [] for v in self.vertices}
        for l in self.links:
            for v in l.vertices():
                incident[v].append(l)
        seeds = list(self.hyp_order) + list(self.concl_order) + sorted(
            self.vertices, key=lambda v: (repr(self.h.get(v)), repr(self.c.get(v)), v))
        queue = list(seeds)
        while queue:
            v = queue.pop(0)
            if v in order:
                continue
            visit(v)
            for l in incident[v]:
                for w in l.vertices():
                    if w not in order:
                        queue.append(w)
        enc_links = sorted(
            (l.kind,
             tuple(order[v] for v in l.prems),
             tuple(order[v] for v in l.concls),
             order[l.main] if l.kind == COTENSOR and l.main is not None else None)
            for l in self.links)
        labels = tuple(sorted((order[v], "h", fmt_formula(f)) for v, f in self.h.items())
                       ) + tuple(sorted((order[v], "c", fmt_formula(f)) for v, f in self.c.items()))
        return (tuple(enc_links), labels,
                tuple(order[v] for v in self.hyp_order),
                tuple(order[v] for v in self.concl_order))


def to_abstract(ps: ProofStructure) -> APS:
    """Forget internal formula labels, keeping hypothesis/conclusion labels."""
    s_hyps = set(ps.structure_hyps())
    s_concls = set(ps.structure_concls())
    h = {v: ps.vertices[v] for v in s_hyps}
    c = {v: ps.vertices[v] for v in s_concls}
    return APS(frozenset(ps.vertices), tuple(ps.links), h, c,
               hyp_order=ps.hyps, concl_order=ps.concls)


# ---------------------------------------------------------------------------
# DOT export (tensor: open circle, cotensor: filled; main arrows directed)


def to_dot(ps: ProofStructure | APS, name: str = "ps") -> str:
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    if isinstance(ps, ProofStructure):
        labels = {v: fmt_formula(f) for v, f in ps.vertices.items()}
        verts = ps.vertices.keys()
    else:
        labels = {v: "." for v in ps.vertices}
        for v, f in ps.h.items():
            labels[v] = f"h:{fmt_formula(f)}" + (f" c:{fmt_formula(ps.c[v])}" if v in ps.c else "")
        for v, f in ps.c.items():
            labels.setdefault(v, f"c:{fmt_formula(f)}")
        verts = ps.vertices
    for v in verts:
        lines.append(f'  v{v} [shape=plaintext, label="{labels[v]}"];')
    for i, l in enumerate(ps.links):
        fill = "black" if l.kind == COTENSOR else "white"
        lines.append(f'  l{i} [shape=circle, label="", style=filled, '
                     f'fillcolor={fill}, width=0.15];')
        for v in l.prems:
            if l.kind == COTENSOR and l.main == v:
                lines.append(f"  l{i} -> v{v};")
            else:
                lines.append(f"  v{v} -> l{i} [arrowhead=none];")
        for v in l.concls:
            if l.kind == COTENSOR and l.main == v:
                lines.append(f"  l{i} -> v{v};")
            else:
                lines.append(f"  l{i} -> v{v} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines)
