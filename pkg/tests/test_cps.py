import pytest

from lgcalc import cps
from lgcalc import focused as fc
from lgcalc import terms as tm
from lgcalc.cps import (BOT, IAtom, IFun, IProd, TApp, TCase, TConst, TLam,
                        TTuple, TVar, TyAtom, TyNeg, TyPair)
from lgcalc.formula import ALL_NEGATIVE, BiasMap, NEG, POS, atom, parse_formula
from lgcalc.lexicon import Lexicon, LexEntry, lexicon_from_dict
from lgcalc.structure import Leaf, RIGHT_FOCUS, SBin, Sequent

POS_NP_N = BiasMap(default=NEG, overrides=(("np", POS), ("n", POS)))

NP, S, N = TyAtom("np"), TyAtom("s"), TyAtom("n")


def test_cps_type_row_a():
    # value type of (np\s)/np with np positive, s negative
    f = parse_formula("(np \\ s) / np")
    got = cps.value_type(f, POS_NP_N)
    assert got == TyNeg(TyPair(TyPair(NP, TyNeg(S)), NP))
    assert cps.lexify(got) == IFun(
        IProd(IProd(IAtom("e"), IFun(IAtom("t"), IAtom("t"))), IAtom("e")),
        IAtom("t"))


def test_cps_type_row_b():
    f = parse_formula("np / n")
    got = cps.value_type(f, POS_NP_N)
    assert got == TyNeg(TyPair(TyNeg(NP), N))


def test_cps_type_row_c():
    f = parse_formula("(np \\ s) / np")
    got = cps.value_type(f, ALL_NEGATIVE)
    assert got == TyNeg(TyPair(TyPair(TyNeg(TyNeg(NP)), TyNeg(S)),
                               TyNeg(TyNeg(NP))))


def test_cps_type_row_d():
    f = parse_formula("np / n")
    got = cps.value_type(f, ALL_NEGATIVE)
    assert got == TyNeg(TyPair(TyNeg(NP), TyNeg(TyNeg(N))))


def test_cps_atom_polarity():
    assert cps.cps_type(atom("p"), BiasMap(default=POS)) == TyAtom("p")
    assert cps.cps_type(atom("p"), ALL_NEGATIVE) == TyNeg(TyAtom("p"))


def test_cps_type_all_24_cells():
    # oracle: literal two-row table per connective over the four bias pairs
    a, b = atom("p"), atom("q")

    def M(f, bias):
        return cps.cps_type(f, bias)

    for pa in (POS, NEG):
        for pb in (POS, NEG):
            bias = BiasMap(default=NEG, overrides=(("p", pa), ("q", pb)))
            ca, cb = M(a, bias), M(b, bias)
            na = ca if pa == POS else TyNeg(ca)     # value side of a
            ka = TyNeg(ca) if pa == POS else ca     # continuation side
            nb = cb if pb == POS else TyNeg(cb)
            kb = TyNeg(cb) if pb == POS else cb
            assert M(parse_formula("p * q"), bias) == TyPair(na, nb)
            assert M(parse_formula("p (+) q"), bias) == TyPair(ka, kb)
            assert M(parse_formula("p / q"), bias) == TyPair(ka, nb)
            assert M(parse_formula("p \\ q"), bias) == TyPair(na, kb)
            assert M(parse_formula("p (/) q"), bias) == TyPair(na, kb)
            assert M(parse_formula("p (\\) q"), bias) == TyPair(ka, nb)


def sov_sequent():
    subj = parse_formula("(np / n) * n")
    tv = parse_formula("(np \\ s) / np")
    det = parse_formula("np / n")
    ant = SBin("*", Leaf(subj, "subj"),
               SBin("*", Leaf(tv, "tv"),
                    SBin("*", Leaf(det, "det"), Leaf(atom("n"), "noun"))))
    return Sequent(ant, Leaf(atom("s")), RIGHT_FOCUS)


def neg1_cps_golden():
    return cps.parse_lambda(
        "\\b. case subj of <y, z>."
        " tv <<\\g. y <g, \\g2. z g2>, b>, \\a. det <a, \\a2. noun a2>>")


def pos1_cps_golden():
    return cps.parse_lambda(
        "\\a. case subj of <xp, z>. xp <\\x. det <\\y. tv <<x, a>, y>, noun>, z>")


def pos2_cps_golden():
    return cps.parse_lambda(
        "\\a. case subj of <xp, z>. det <\\y. xp <\\x. tv <<x, a>, y>, z>, noun>")


def _as_app_of_vars(t):
    # goldens parse word names as constants; the translation emits variables
    if isinstance(t, TConst):
        return TVar(t.name)
    if isinstance(t, TLam):
        return TLam(t.var, _as_app_of_vars(t.body))
    if isinstance(t, TApp):
        return TApp(_as_app_of_vars(t.fun), _as_app_of_vars(t.arg))
    if isinstance(t, TTuple):
        return TTuple(_as_app_of_vars(t.left), _as_app_of_vars(t.right))
    if isinstance(t, TCase):
        return TCase(_as_app_of_vars(t.scrutinee), t.left, t.right,
                     _as_app_of_vars(t.body))
    return t


def test_cps_term_negativeone_matches_table():
    results = fc.fprove(sov_sequent(), ALL_NEGATIVE)
    assert len(results) == 1
    image = cps.cps_term(results[0][1])
    assert cps.alpha_equal_target(image, _as_app_of_vars(neg1_cps_golden()))


def test_cps_term_positive_matches_table():
    results = fc.fprove(sov_sequent(), POS_NP_N)
    images = [cps.cps_term(t) for _, t in results]
    for golden in (pos1_cps_golden(), pos2_cps_golden()):
        want = _as_app_of_vars(golden)
        assert any(cps.alpha_equal_target(i, want) for i in images)


def test_cps_images_typecheck_and_are_normal():
    for bias in (ALL_NEGATIVE, POS_NP_N):
        for _, t in fc.fprove(sov_sequent(), bias):
            image = cps.cps_term(t)
            assert cps.is_normal(image)
            env, want = cps.cps_sequent(sov_sequent(), bias)
            cps.typecheck_target(image, want, env)


def test_atomic_command_translation():
    s = Sequent(Leaf(atom("p"), "x"), Leaf(atom("p"), "al"))
    pos = fc.fprove(s, BiasMap(default=POS))
    assert cps.cps_term(pos[0][1]) == TApp(TVar("al"), TVar("x"))
    neg = fc.fprove(s, ALL_NEGATIVE)
    assert cps.cps_term(neg[0][1]) == TApp(TVar("x"), TVar("al"))


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


def test_lexicons_validate():
    lexicon_from_dict(POS_LEXICON)
    lexicon_from_dict(NEG_LEXICON)


def test_lexicon_rejects_ill_typed_semantics():
    bad = {
        "bias": {"default": "-", "np": "+", "n": "+"},
        "entries": [{"word": "unicorn", "formula": "n",
                     "semantics": "\\<x, y>. x y"}],
    }
    from lgcalc.lexicon import LexiconError
    with pytest.raises(LexiconError):
        lexicon_from_dict(bad)


def reading_for(bias_lexicon, results):
    lex = lexicon_from_dict(bias_lexicon)
    recipes = {"subj": lex.lookup("everyone").semantics,
               "tv": lex.lookup(
                   "likes" if "likes" in lex.words() else "needs").semantics,
               "det": lex.lookup("a").semantics,
               "noun": lex.lookup("unicorn").semantics}
    out = []
    for _, t in results:
        image = cps.cps_term(t)
        out.append(cps.substitute_and_normalize(image, recipes))
    return out


def test_table4_negative_final_formula():
    results = fc.fprove(sov_sequent(), ALL_NEGATIVE)
    readings = reading_for(NEG_LEXICON, results)
    assert len(readings) == 1
    want = cps.parse_lambda(
        "\\c. forall (\\x. implies (person x)"
        " (c (needs (\\w. exists (\\y. and (unicorn y) (w y))) x)))")
    assert cps.alpha_equal_target(readings[0], want)


def test_table4_positive_final_formulas():
    results = fc.fprove(sov_sequent(), POS_NP_N)
    readings = reading_for(POS_LEXICON, results)
    assert len(readings) == 2
    wide_subject = cps.parse_lambda(
        "\\c. forall (\\x. implies (person x)"
        " (exists (\\y. and (unicorn y) (c (likes y x)))))")
    wide_object = cps.parse_lambda(
        "\\c. exists (\\y. and (unicorn y)"
        " (forall (\\x. implies (person x) (c (likes y x)))))")
    for want in (wide_subject, wide_object):
        assert any(cps.alpha_equal_target(r, want) for r in readings)


def test_identity_recipes_give_beta_normal_form():
    results = fc.fprove(sov_sequent(), POS_NP_N)
    image = cps.cps_term(results[0][1])
    out = cps.substitute_and_normalize(image, {})
    assert cps.is_normal(out)
    assert cps.alpha_equal_target(out, image)


def test_normalize_handles_case_commuting():
    t = TApp(TCase(TVar("z"), "x", "y", TLam("w", TVar("x"))), TConst("c"))
    got = cps.normalize(t)
    assert got == TCase(TVar("z"), "x", "y", TVar("x"))


def test_pre_lexicon_images_are_linear_in_covariables():
    for bias in (ALL_NEGATIVE, POS_NP_N):
        for _, t in fc.fprove(sov_sequent(), bias):
            image = cps.cps_term(t)
            env, want = cps.cps_sequent(sov_sequent(), bias)
            cps.typecheck_target(image, want, env)  # enforces linearity


def test_lexical_constants_type_as_reported():
    lex = lexicon_from_dict(POS_LEXICON)
    finds_type = lex.constant_types.get("likes")
    assert finds_type == IFun(IAtom("e"), IFun(IAtom("e"), IAtom("t")))
