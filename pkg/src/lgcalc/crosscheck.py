"""Exhaustive cross-system comparison over small two-formula sequents.

Provability in all three systems implies a per-atom balance between the
occurrences that must gain a premiss attachment and those that must gain
a conclusion attachment in the combined unfolding (axiom identifications
pair one of each).  The balance count is computed positionally and is
exactly the emptiness condition of the matching enumerator, which the
test suite cross-validates; unbalanced pairs therefore have no proof
structure at all, and the three provers are run exhaustively on every
balanced pair.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import contraction as ct
from . import display as dp
from . import focused as fc
from . import proofnet as pn
from .formula import ALL_NEGATIVE, Atom, BiasMap, Bin, CONNECTIVES, Formula
from .structure import Leaf, Sequent

# does the child position flip between hypothesis and conclusion unfolding?
_FLIP = {"*": (False, False), "(/)": (False, True), "(\\)": (True, False),
         "(+)": (False, False), "\\": (True, False), "/": (False, True)}


def formulas_by_count(atoms: list[Atom], max_count: int) -> dict[int, list[Formula]]:
    by_count: dict[int, list[Formula]] = {0: list(atoms)}
    for k in range(1, max_count + 1):
        out = []
        for i in range(k):
            for left in by_count[i]:
                for right in by_count[k - 1 - i]:
                    for op in CONNECTIVES:
                        out.append(Bin(op, left, right))
        by_count[k] = out
    return by_count


def balance_counts(f: Formula, flipped: bool, atom_names: tuple[str, ...],
                   memo: dict) -> tuple[int, ...]:
    """Per atom, occurrences landing on the upper and lower matching sides."""
    key = (id(f), flipped)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if isinstance(f, Atom):
        idx = atom_names.index(f.name)
        vec = [0] * (2 * len(atom_names))
        vec[2 * idx + (1 if flipped else 0)] = 1
        out = tuple(vec)
    else:
        fl, fr = _FLIP[f.op]
        a = balance_counts(f.left, flipped ^ fl, atom_names, memo)
        b = balance_counts(f.right, flipped ^ fr, atom_names, memo)
        out = tuple(x + y for x, y in zip(a, b))
    memo[key] = out
    return out


def is_balanced(a: Formula, b: Formula, atom_names: tuple[str, ...],
                memo: dict) -> bool:
    ca = balance_counts(a, False, atom_names, memo)
    cb = balance_counts(b, True, atom_names, memo)
    return all(ca[2 * i] + cb[2 * i] == ca[2 * i + 1] + cb[2 * i + 1]
               for i in range(len(atom_names)))


def balanced_pairs(atoms: list[Atom], max_total: int
                   ) -> tuple[int, list[tuple[Formula, Formula]]]:
    """(total pair count, balanced pairs) for conn(A)+conn(B) <= max_total."""
    names = tuple(a.name for a in atoms)
    by_count = formulas_by_count(atoms, max_total)
    memo: dict = {}
    total = 0
    out: list[tuple[Formula, Formula]] = []
    for ta in range(0, max_total + 1):
        for tb in range(0, max_total + 1 - ta):
            index: dict[tuple[int, ...], list[Formula]] = {}
            for b in by_count[tb]:
                cb = balance_counts(b, True, names, memo)
                key = tuple(cb[2 * i] - cb[2 * i + 1] for i in range(len(names)))
                index.setdefault(key, []).append(b)
            for a in by_count[ta]:
                ca = balance_counts(a, False, names, memo)
                need = tuple(ca[2 * i + 1] - ca[2 * i] for i in range(len(names)))
                total += len(by_count[tb])
                for b in index.get(need, ()):
                    out.append((a, b))
    return total, out


def net_exists(a: Formula, b: Formula, strategy: str = "eager") -> bool:
    return any(ct.is_proof_net(ps, strategy=strategy) is not None
               for _, ps in pn.enumerate_matchings([a], [b]))


@dataclass
class CrossCheckReport:
    total_pairs: int = 0
    balanced: int = 0
    provable: int = 0
    slg_net_disagreements: list = field(default_factory=list)
    flg_disagreements: list = field(default_factory=list)
    unbalanced_sampled: int = 0
    unbalanced_failures: list = field(default_factory=list)
    seconds: float = 0.0

    def ok(self) -> bool:
        return not (self.slg_net_disagreements or self.flg_disagreements
                    or self.unbalanced_failures)


def _check_slice(atoms: list[Atom], max_total: int, bias: BiasMap,
                 stride: int, offset: int,
                 progress: Optional[Callable[[str], None]] = None
                 ) -> tuple[int, list, list]:
    _, pairs = balanced_pairs(atoms, max_total)
    prover = dp.SLGProver()
    flg = fc.FLGDecider(bias)
    provable = 0
    slg_net: list = []
    flg_dis: list = []
    t0 = time.time()
    mine = pairs[offset::stride]
    for i, (a, b) in enumerate(mine):
        seq = Sequent(Leaf(a), Leaf(b))
        s = prover.provable(seq)
        n = net_exists(a, b)
        f = flg.provable(seq)
        if s != n:
            slg_net.append((a, b, s, n))
        if f != s:
            flg_dis.append((a, b, s, f))
        provable += int(s)
        if progress and i % 25_000 == 24_999:
            progress(f"worker {offset}: {i + 1}/{len(mine)} "
                     f"({time.time() - t0:.0f}s)")
    return provable, slg_net, flg_dis


def _worker(args):
    atoms, max_total, bias, stride, offset = args
    return _check_slice(atoms, max_total, bias, stride, offset)


def run_cross_check(atoms: list[Atom], max_total: int,
                    bias: BiasMap = ALL_NEGATIVE,
                    unbalanced_sample: int = 2000,
                    seed: int = 0,
                    workers: int = 0,
                    progress: Optional[Callable[[str], None]] = None
                    ) -> CrossCheckReport:
    """Compare sLG, net existence and fLG over the bounded universe.

    Every balanced pair is checked in all three systems.  Unbalanced
    pairs admit no axiom matching (hence no net); a seeded sample of them
    is additionally run through all three systems as a guard on the
    balance computation itself.  ``workers=0`` picks the CPU count.
    """
    t0 = time.time()
    report = CrossCheckReport()
    total, pairs = balanced_pairs(atoms, max_total)
    report.total_pairs = total
    report.balanced = len(pairs)
    if workers == 0:
        import multiprocessing
        workers = max(1, multiprocessing.cpu_count())
    if workers > 1:
        import multiprocessing
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_worker, [(atoms, max_total, bias, workers, i)
                                       for i in range(workers)])
        for provable, slg_net, flg_dis in parts:
            report.provable += provable
            report.slg_net_disagreements.extend(slg_net)
            report.flg_disagreements.extend(flg_dis)
    else:
        provable, slg_net, flg_dis = _check_slice(atoms, max_total, bias, 1, 0,
                                                  progress)
        report.provable = provable
        report.slg_net_disagreements = slg_net
        report.flg_disagreements = flg_dis
    prover = dp.SLGProver()
    flg = fc.FLGDecider(bias)
    # guard: sampled unbalanced pairs really fail everywhere
    names = tuple(x.name for x in atoms)
    by_count = formulas_by_count(atoms, max_total)
    memo: dict = {}
    rng = random.Random(seed)
    flat = [(f, k) for k, fs in by_count.items() for f in fs]
    tried = 0
    while tried < unbalanced_sample:
        a, ka = flat[rng.randrange(len(flat))]
        b, kb = flat[rng.randrange(len(flat))]
        if ka + kb > max_total or is_balanced(a, b, names, memo):
            continue
        tried += 1
        seq = Sequent(Leaf(a), Leaf(b))
        if (list(pn.enumerate_matchings([a], [b]))
                or prover.provable(seq) or flg.provable(seq)):
            report.unbalanced_failures.append((a, b))
    report.unbalanced_sampled = tried
    report.seconds = time.time() - t0
    return report
