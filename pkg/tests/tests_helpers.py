"""Shared generators for randomized tests."""
from lgcalc import arrows as ar
from lgcalc.formula import Bin, atom

ATOMS = [atom("a"), atom("b"), atom("c")]


def random_formula(rng, depth):
    if depth == 0 or rng.random() < 0.4:
        return rng.choice(ATOMS)
    op = rng.choice(["*", "\\", "/", "(+)", "(/)", "(\\)"])
    return Bin(op, random_formula(rng, depth - 1), random_formula(rng, depth - 1))


def random_checked_proof(rng, depth=3, with_duals=True):
    names = ar.Gr.NAMES if with_duals else ("d", "q", "b", "p")
    base_choices = [
        lambda: ar.Id(random_formula(rng, 2)),
        lambda: ar.Gr(rng.choice(names),
                      random_formula(rng, 1), random_formula(rng, 1),
                      random_formula(rng, 1)),
    ]
    p = rng.choice(base_choices)()
    for _ in range(depth):
        src, tgt = ar.infer(p)
        moves = []
        for kind in ar.Res.KINDS:
            if ar.infer(ar.Res(kind, p)) is not None:
                moves.append(lambda k=kind: ar.Res(k, p))
        moves.append(lambda: ar.Comp(p, ar.Id(src)))
        moves.append(lambda: ar.Comp(ar.Id(tgt), p))
        p = rng.choice(moves)()
    return p
