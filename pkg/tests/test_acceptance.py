"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest -v tests/test_acceptance.py -s`` to see the verdict
lines as they complete.  The cross-system sweep (criterion 5) is the
long pole at a few minutes; everything else finishes in seconds.
"""
import random
import time

import pytest

from lgcalc import arrows as ar
from lgcalc import contraction as ct
from lgcalc import cps
from lgcalc import crosscheck as cc
from lgcalc import display as dp
from lgcalc import extraction as ex
from lgcalc import focused as fc
from lgcalc import proofnet as pn
from lgcalc import terms as tm
from lgcalc.formula import (ALL_NEGATIVE, Atom, BiasMap, Bin, CONNECTIVES,
                            NEG, POS, atom, dual, mirror, parse_formula,
                            polarity)
from lgcalc.lexicon import lexicon_from_dict
from lgcalc.structure import Leaf, RIGHT_FOCUS, SBin, Sequent, parse_sequent


def verdict(ok: bool, label: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {label}")
    assert ok, label


A, B = atom("a"), atom("b")


def test_criterion_1_coapplication_corpus():
    t0 = time.time()
    arrows = ar.coapplication_arrows(A, B)
    ok = len(arrows) == 8 and all(ar.check(x) for x in arrows)
    prover = dp.SLGProver()
    for x in arrows:
        ok = ok and prover.provable(Sequent(Leaf(x.source), Leaf(x.target)))
        net = any(ct.is_proof_net(ps) is not None
                  for _, ps in pn.enumerate_matchings([x.source], [x.target]))
        ok = ok and net
    elapsed = time.time() - t0
    ok = ok and elapsed < 1.0
    verdict(ok, f"criterion 1: eight composition theorems in aLG, sLG and "
                f"nets ({elapsed:.2f}s < 1s)")


def test_criterion_2_interaction_pipeline():
    hyps = [parse_formula("(s (/) s) (\\) np")]
    concls = [parse_formula("s / (np \\ s)")]
    matchings = list(pn.enumerate_matchings(hyps, concls))
    ok = len(matchings) == 2
    results = [(ps, ct.is_proof_net(ps)) for _, ps in matchings]
    nets = [(ps, r) for ps, r in results if r is not None]
    ok = ok and len(nets) == 1
    ps, res = nets[0]
    kinds = sorted(s.kind for s in res.trace)
    ok = ok and kinds == ["G1", "L(\\)", "R/"]
    proof = ct.sequentialize(ps, res)
    ok = ok and dp.check_proof(proof, allow_cut=False)
    ok = ok and proof.count_rule("G1") == 1
    verdict(ok, "criterion 2: two matchings, one net with a G1 trace, "
                "sequentialization passes the sLG checker")


SOV_TEXTS = ["(np / n) * n", "(np \\ s) / np", "np / n", "n"]
SOV_NAMES = ["subj", "tv", "det", "noun"]
POS_NP_N = BiasMap(default=NEG, overrides=(("np", POS), ("n", POS)))


def _sov_sequent(focused=True):
    fs = [parse_formula(t) for t in SOV_TEXTS]
    ant = SBin("*", Leaf(fs[0], "subj"),
               SBin("*", Leaf(fs[1], "tv"),
                    SBin("*", Leaf(fs[2], "det"), Leaf(fs[3], "noun"))))
    return Sequent(ant, Leaf(atom("s")), RIGHT_FOCUS if focused else None)


def _negativeone():
    q = tm.Mu("g", tm.CmdL("y", tm.EPair(
        "/", tm.CoVar("g"), tm.Mu("g2", tm.CmdL("z", tm.CoVar("g2"))))))
    qp = tm.Mu("al", tm.CmdL("det", tm.EPair(
        "/", tm.CoVar("al"), tm.Mu("a2", tm.CmdL("noun", tm.CoVar("a2"))))))
    body = tm.CmdL("tv", tm.EPair("/", tm.EPair("\\", q, tm.CoVar("b")), qp))
    return tm.Mu("b", tm.CasePrefix("*L", ("y", "z"), "subj", body))


def _positiveone():
    inner = tm.CmdL("tv", tm.EPair("/", tm.EPair("\\", tm.Var("x"), tm.CoVar("al")),
                                   tm.Var("y")))
    det_cmd = tm.CmdL("det", tm.EPair("/", tm.CoMu("y", inner), tm.Var("noun")))
    body = tm.CmdL("xp", tm.EPair("/", tm.CoMu("x", det_cmd), tm.Var("z")))
    return tm.Mu("al", tm.CasePrefix("*L", ("xp", "z"), "subj", body))


def _positivetwo():
    inner = tm.CmdL("tv", tm.EPair("/", tm.EPair("\\", tm.Var("x"), tm.CoVar("al")),
                                   tm.Var("y")))
    xp_cmd = tm.CmdL("xp", tm.EPair("/", tm.CoMu("x", inner), tm.Var("z")))
    body = tm.CmdL("det", tm.EPair("/", tm.CoMu("y", xp_cmd), tm.Var("noun")))
    return tm.Mu("al", tm.CasePrefix("*L", ("xp", "z"), "subj", body))


def test_criterion_3_sov_benchmark():
    t0 = time.time()
    fs = [parse_formula(t) for t in SOV_TEXTS]
    nets_in_order = []
    for _, ps in pn.enumerate_matchings(fs, [atom("s")]):
        res = ct.is_proof_net(ps)
        if res is None:
            continue
        if ct.tree_hypothesis_order(res.tree) == list(res.tree.hyp_order):
            nets_in_order.append(ps)
    ok = len(nets_in_order) == 1

    slg = dp.SLGProver().prove(Sequent(
        SBin("*", Leaf(fs[0]),
             SBin("*", Leaf(fs[1]), SBin("*", Leaf(fs[2]), Leaf(fs[3])))),
        Leaf(atom("s"))))
    ok = ok and len(slg) >= 7

    neg = fc.fprove(_sov_sequent(), ALL_NEGATIVE)
    ok = ok and len(neg) == 1
    ok = ok and tm.alpha_equal(neg[0][1], _negativeone())

    pos = fc.fprove(_sov_sequent(), POS_NP_N)
    ok = ok and len(pos) == 2
    for want in (_positiveone(), _positivetwo()):
        ok = ok and any(tm.commuting_equal(want, t) for _, t in pos)

    for bias in (ALL_NEGATIVE, POS_NP_N):
        got = {tm.fmt_term(tm.commuting_normal(e.term))
               for e in ex.extract_from_net(nets_in_order[0], bias,
                                            hyp_names=SOV_NAMES)}
        want = {tm.fmt_term(tm.commuting_normal(t))
                for _, t in fc.fprove(_sov_sequent(), bias)}
        ok = ok and got == want

    elapsed = time.time() - t0
    ok = ok and elapsed < 10.0
    verdict(ok, f"criterion 3: SOV benchmark (1 ordered net, >=7 sLG proofs, "
                f"1 and 2 focused terms, extraction agrees; {elapsed:.2f}s < 10s)")


POS_LEXICON = {
    "bias": {"default": "-", "np": "+", "n": "+"},
    "goal": "s",
    "entries": [
        {"word": "everyone", "formula": "(np / n) * n",
         "semantics": "<\\<x, y>. forall (\\z. implies (y z) (x z)), person>"},
        {"word": "likes", "formula": "(np \\ s) / np",
         "semantics": "\\<<x, c>, y>. c (likes y x)"},
        {"word": "a", "formula": "np / n",
         "semantics": "\\<x, y>. exists (\\z. and (y z) (x z))"},
        {"word": "unicorn", "formula": "n", "semantics": "unicorn"},
    ],
}

NEG_LEXICON = {
    "bias": {"default": "-"},
    "goal": "s",
    "entries": [
        {"word": "everyone", "formula": "(np / n) * n",
         "semantics": "<\\<x, w>. forall (\\z. implies (w (\\y. y z)) (x z)),"
                      " \\k. k person>"},
        {"word": "needs", "formula": "(np \\ s) / np",
         "semantics": "\\<<q, c>, q'>. q (\\x. c (needs q' x))"},
        {"word": "a", "formula": "np / n",
         "semantics": "\\<x, w>. exists (\\z. and (w (\\y. y z)) (x z))"},
        {"word": "unicorn", "formula": "n", "semantics": "\\k. k unicorn"},
    ],
}


def test_criterion_4_semantics_goldens():
    ok = True
    # the CPS images of the three worked derivations
    neg = fc.fprove(_sov_sequent(), ALL_NEGATIVE)
    pos = fc.fprove(_sov_sequent(), POS_NP_N)
    neg_golden = cps.parse_lambda(
        "\\b. case subj of <y, z>."
        " tv <<\\g. y <g, \\g2. z g2>, b>, \\al. det <al, \\a2. noun a2>>")
    pos1_golden = cps.parse_lambda(
        "\\al. case subj of <xp, z>. xp <\\x. det <\\y. tv <<x, al>, y>, noun>, z>")
    pos2_golden = cps.parse_lambda(
        "\\al. case subj of <xp, z>. det <\\y. xp <\\x. tv <<x, al>, y>, z>, noun>")

    def dequote(t):
        if isinstance(t, cps.TConst):
            return cps.TVar(t.name)
        if isinstance(t, cps.TLam):
            return cps.TLam(t.var, dequote(t.body))
        if isinstance(t, cps.TApp):
            return cps.TApp(dequote(t.fun), dequote(t.arg))
        if isinstance(t, cps.TTuple):
            return cps.TTuple(dequote(t.left), dequote(t.right))
        if isinstance(t, cps.TCase):
            return cps.TCase(dequote(t.scrutinee), t.left, t.right,
                             dequote(t.body))
        return t

    ok = ok and cps.alpha_equal_target(cps.cps_term(neg[0][1]), dequote(neg_golden))
    images = [cps.cps_term(t) for _, t in pos]
    for g in (pos1_golden, pos2_golden):
        ok = ok and any(cps.alpha_equal_target(i, dequote(g)) for i in images)

    # all intermediate terms typecheck at the sequent translation types
    for bias, results in ((ALL_NEGATIVE, neg), (POS_NP_N, pos)):
        env, want = cps.cps_sequent(_sov_sequent(), bias)
        for _, t in results:
            image = cps.cps_term(t)
            ok = ok and cps.is_normal(image)
            cps.typecheck_target(image, want, env)

    # lexical rows: the value types of the verb and determiner entries
    npq = cps.TyAtom("np")
    s = cps.TyAtom("s")
    n = cps.TyAtom("n")
    rows = [
        ("(np \\ s) / np", POS_NP_N,
         cps.TyNeg(cps.TyPair(cps.TyPair(npq, cps.TyNeg(s)), npq))),
        ("np / n", POS_NP_N, cps.TyNeg(cps.TyPair(cps.TyNeg(npq), n))),
        ("(np \\ s) / np", ALL_NEGATIVE,
         cps.TyNeg(cps.TyPair(cps.TyPair(cps.TyNeg(cps.TyNeg(npq)), cps.TyNeg(s)),
                              cps.TyNeg(cps.TyNeg(npq))))),
        ("np / n", ALL_NEGATIVE,
         cps.TyNeg(cps.TyPair(cps.TyNeg(npq), cps.TyNeg(cps.TyNeg(n))))),
    ]
    for text, bias, want_type in rows:
        ok = ok and cps.value_type(parse_formula(text), bias) == want_type

    # final formulas after lexical substitution
    def readings(lexicon, results, tv_word):
        lex = lexicon_from_dict(lexicon)
        recipes = {"subj": lex.lookup("everyone").semantics,
                   "tv": lex.lookup(tv_word).semantics,
                   "det": lex.lookup("a").semantics,
                   "noun": lex.lookup("unicorn").semantics}
        return [cps.substitute_and_normalize(cps.cps_term(t), recipes)
                for _, t in results]

    neg_final = cps.parse_lambda(
        "\\c. forall (\\x. implies (person x)"
        " (c (needs (\\w. exists (\\y. and (unicorn y) (w y))) x)))")
    pos_final_1 = cps.parse_lambda(
        "\\c. forall (\\x. implies (person x)"
        " (exists (\\y. and (unicorn y) (c (likes y x)))))")
    pos_final_2 = cps.parse_lambda(
        "\\c. exists (\\y. and (unicorn y)"
        " (forall (\\x. implies (person x) (c (likes y x)))))")
    got_neg = readings(NEG_LEXICON, neg, "needs")
    ok = ok and len(got_neg) == 1
    ok = ok and cps.alpha_equal_target(got_neg[0], neg_final)
    got_pos = readings(POS_LEXICON, pos, "likes")
    ok = ok and len(got_pos) == 2
    for want in (pos_final_1, pos_final_2):
        ok = ok and any(cps.alpha_equal_target(r, want) for r in got_pos)
    verdict(ok, "criterion 4: CPS and lexical substitution reproduce the "
                "worked final formulas; images typecheck at their "
                "sequent-translation types")


def test_criterion_5_cross_system_equivalence():
    report = cc.run_cross_check([atom("p"), atom("q")], 4,
                                unbalanced_sample=2000,
                                progress=lambda msg: print("   ", msg))
    print(f"    universe: {report.total_pairs} pairs, "
          f"{report.balanced} balanced, {report.provable} provable, "
          f"{report.unbalanced_sampled} unbalanced sampled, "
          f"{report.seconds:.0f}s")
    for a, b, s, f in report.flg_disagreements[:10]:
        print(f"    fLG counterexample: {a} |- {b}: sLG={s} fLG={f}")
    ok = report.ok() and report.seconds < 300
    verdict(ok, f"criterion 5: sLG, nets and fLG agree over all "
                f"{report.balanced} balanced pairs of the <=4-connective "
                f"universe ({report.seconds:.0f}s < 300s)")


def _random_formula(rng, depth, atoms=("p", "q")):
    if depth == 0 or rng.random() < 0.35:
        return atom(rng.choice(atoms))
    op = rng.choice(CONNECTIVES)
    return Bin(op, _random_formula(rng, depth - 1, atoms),
               _random_formula(rng, depth - 1, atoms))


def test_criterion_6_structural_invariants():
    rng = random.Random(42)
    ok = True

    # involutivity and commutation on ten thousand random formulas
    for _ in range(10_000):
        f = _random_formula(rng, 4)
        ok = ok and mirror(mirror(f)) == f and dual(dual(f)) == f
        ok = ok and mirror(dual(f)) == dual(mirror(f))
        ok = ok and polarity(mirror(f), ALL_NEGATIVE) == polarity(f, ALL_NEGATIVE)
    verdict(ok, "criterion 6a: mirror and dual are commuting involutions "
                "(10^4 random formulas)")

    # proof-level symmetry preservation
    import sys, os
    sys.path.insert(0, os.path.dirname(__file__))
    from tests_helpers import random_checked_proof
    ok = True
    for _ in range(2_000):
        p = random_checked_proof(rng)
        ok = ok and ar.infer(p) is not None
        ok = ok and ar.infer(ar.mirror_proof(p)) is not None
        ok = ok and ar.infer(ar.dual_proof(p)) is not None
        ok = ok and ar.mirror_proof(ar.mirror_proof(p)) == p
        ok = ok and ar.dual_proof(ar.dual_proof(p)) == p
    verdict(ok, "criterion 6b: proof-level symmetries preserve checkedness "
                "and involute (2000 random arrows)")

    # rewrite-step label conservation and link accounting
    ok = True
    steps_checked = 0
    judgements = 0
    while steps_checked < 3_000:
        a = _random_formula(rng, 3)
        b = _random_formula(rng, 3)
        for _, ps in pn.enumerate_matchings([a], [b]):
            judgements += 1
            aps = pn.to_abstract(ps)
            for step in ct.contract_step(aps):
                steps_checked += 1
                ok = ok and len(step.result.links) == len(aps.links) - 2
                ok = ok and len(step.result.vertices) == len(aps.vertices) - 3
                ok = ok and sorted(map(repr, step.result.h.values())) == \
                    sorted(map(repr, aps.h.values()))
                ok = ok and sorted(map(repr, step.result.c.values())) == \
                    sorted(map(repr, aps.c.values()))
            for step in ct.interaction_step(aps):
                steps_checked += 1
                ok = ok and len(step.result.links) == len(aps.links)
                ok = ok and step.result.vertices == aps.vertices
                ok = ok and step.result.h == aps.h and step.result.c == aps.c
    verdict(ok, f"criterion 6c: label conservation and link accounting "
                f"({steps_checked} rewrite steps)")

    # linearity of produced terms, and extraction against focused search
    ok = True
    terms_checked = 0
    flg_corpus = 0
    attempts = 0
    while flg_corpus < 150 and attempts < 100_000:
        attempts += 1
        a = _random_formula(rng, 3)
        b = _random_formula(rng, 3)
        seq = Sequent(Leaf(a, "x0"), Leaf(b), RIGHT_FOCUS)
        nets = [ps for _, ps in pn.enumerate_matchings([a], [b])
                if ct.is_proof_net(ps) is not None]
        results = fc.fprove(seq, ALL_NEGATIVE)
        if not results and not nets:
            continue
        flg_corpus += 1
        for _, t in results:
            terms_checked += 1
            ok = ok and tm.is_linear(t)
        got = {tm.fmt_term(tm.commuting_normal(e.term))
               for ps in nets
               for e in ex.extract_from_net(ps, ALL_NEGATIVE, hyp_names=["x0"])}
        want = {tm.fmt_term(tm.commuting_normal(t)) for _, t in results}
        ok = ok and got == want
    verdict(ok, f"criterion 6d: linearity of produced terms and "
                f"extraction/fprove agreement ({flg_corpus} judgements, "
                f"{terms_checked} terms)")

    # generalized contractions replay as interaction+contraction sequences
    ok = True
    gen_checked = 0
    attempts = 0
    while gen_checked < 40 and attempts < 40_000:
        attempts += 1
        a = _random_formula(rng, 3)
        b = _random_formula(rng, 3)
        for _, ps in pn.enumerate_matchings([a], [b]):
            aps = pn.to_abstract(ps)
            for step in ct.generalized_contract(aps):
                gen_checked += 1
                cur = aps
                for sub in step.detail:
                    cur = ct.replay(cur, (sub,))
                ok = ok and cur.canon() == step.result.canon()
    verdict(ok, f"criterion 6e: generalized contractions equal their "
                f"derived sequences ({gen_checked} instances)")
