import itertools

from lgcalc import contraction as ct
from lgcalc import display as d
from lgcalc import proofnet as pn
from lgcalc.formula import Atom, atom, parse_formula
from lgcalc.proofnet import COTENSOR, HYP, CONCL, TENSOR


def test_unfold_atom():
    ps = pn.unfold(atom("np"), HYP)
    assert len(ps.vertices) == 1
    assert not ps.links


def test_unfold_fig2_left():
    # hypothesis unfolding of (s (/) s) (\) np: one tensor over s,s and a
    # cotensor whose arrow points at the unfolded formula
    ps = pn.unfold(parse_formula("(s (/) s) (\\) np"), HYP)
    kinds = sorted(l.kind for l in ps.links)
    assert kinds == [COTENSOR, TENSOR]
    cot = next(l for l in ps.links if l.kind == COTENSOR)
    ten = next(l for l in ps.links if l.kind == TENSOR)
    assert ps.vertices[cot.main] == parse_formula("(s (/) s) (\\) np")
    assert cot.main in cot.prems
    # tensor: premiss s, conclusions (s (/) s, s)
    assert [ps.vertices[v].name for v in ten.prems] == ["s"]
    assert ps.vertices[ten.concls[0]] == parse_formula("s (/) s")
    assert isinstance(ps.vertices[ten.concls[1]], Atom)


def test_unfold_fig2_right():
    ps = pn.unfold(parse_formula("s / (np \\ s)"), CONCL)
    cot = next(l for l in ps.links if l.kind == COTENSOR)
    ten = next(l for l in ps.links if l.kind == TENSOR)
    assert ps.vertices[cot.main] == parse_formula("s / (np \\ s)")
    assert cot.main in cot.concls
    assert ps.vertices[ten.prems[1]] == parse_formula("np \\ s")
    assert ten.main == ten.prems[1]


def test_unfold_leaf_atoms_match_formula_atoms():
    from lgcalc.formula import atoms_of
    for text, side in [("(np / n) * n", HYP), ("s / (np \\ s)", CONCL),
                       ("(a (/) b) (\\) c", HYP)]:
        f = parse_formula(text)
        ps = pn.unfold(f, side)
        expected = sorted(a.name for a in atoms_of(f))
        leaves = sorted(ps.vertices[v].name for v in ps.vertices
                        if isinstance(ps.vertices[v], Atom))
        assert leaves == expected


def test_unfold_mirror_symmetry():
    from lgcalc.formula import mirror
    f = parse_formula("(np / n) * (s (\\) q)")
    ps = pn.unfold(f, HYP)
    psm = pn.unfold(mirror(f), HYP)
    # same link kinds with reversed tentacle arity profile
    prof = sorted((l.kind, len(l.prems), len(l.concls)) for l in ps.links)
    profm = sorted((l.kind, len(l.prems), len(l.concls)) for l in psm.links)
    assert prof == profm


def test_matching_singleton():
    got = list(pn.enumerate_matchings([atom("np")], [atom("np")]))
    assert len(got) == 1
    _, ps = got[0]
    assert len(ps.vertices) == 1
    assert ps.check_wellformed()


def test_matching_counts_by_bijection_oracle():
    # brute-force oracle: matchings = product over atom names of k! bijections
    hyps = [parse_formula("(s (/) s) (\\) np")]
    concls = [parse_formula("s / (np \\ s)")]
    ps, hyp_roots, concl_roots = pn.combined_unfolding(hyps, concls)
    uppers, lowers = pn.candidate_pairs(ps, hyp_roots, concl_roots)
    expected = 1
    for name in uppers:
        expected *= __import__("math").factorial(len(uppers[name]))
    got = list(pn.enumerate_matchings(hyps, concls))
    assert len(got) == expected == 2


def test_matching_preserves_judgement():
    hyps = [parse_formula("(np / n) * n"), parse_formula("(np \\ s) / np"),
            parse_formula("np / n"), atom("n")]
    concls = [atom("s")]
    for _, ps in pn.enumerate_matchings(hyps, concls):
        assert ps.check_wellformed()
        assert [ps.vertices[v] for v in ps.hyps] == hyps
        assert [ps.vertices[v] for v in ps.concls] == concls
        assert set(ps.structure_hyps()) == set(ps.hyps)
        assert set(ps.structure_concls()) == set(ps.concls)


def test_no_matchings_on_atom_mismatch():
    assert list(pn.enumerate_matchings([atom("np")], [atom("s")])) == []


def test_to_abstract_single_vertex():
    _, ps = next(pn.enumerate_matchings([atom("a")], [atom("a")]))
    aps = pn.to_abstract(ps)
    v = next(iter(aps.vertices))
    assert aps.h[v] == atom("a")
    assert aps.c[v] == atom("a")


def test_to_abstract_preserves_counts():
    hyps = [parse_formula("(s (/) s) (\\) np")]
    concls = [parse_formula("s / (np \\ s)")]
    for _, ps in pn.enumerate_matchings(hyps, concls):
        aps = pn.to_abstract(ps)
        assert len(aps.vertices) == len(ps.vertices)
        assert len(aps.links) == len(ps.links)
        assert set(aps.h.values()) == {hyps[0]}
        assert set(aps.c.values()) == {concls[0]}


def test_dot_export_mentions_all_links():
    _, ps = next(pn.enumerate_matchings([parse_formula("a * b")], [parse_formula("a * b")]))
    dot = pn.to_dot(ps)
    assert dot.startswith("digraph")
    assert dot.count("shape=circle") == len(ps.links)
