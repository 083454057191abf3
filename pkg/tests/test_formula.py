from hypothesis import given, strategies as st

import pytest

from lgcalc.formula import (ALL_NEGATIVE, Atom, BiasMap, Bin, CONNECTIVES,
                            FormulaSyntaxError, NEG, POS, atom, coprod, dual,
                            fmt_formula, ldiff, mirror, over, parse_formula,
                            polarity, prod, rdiff, under)

ATOMS = [atom(n) for n in ("np", "s", "n", "p", "q")]


def formulas(max_depth=4):
    return st.recursive(
        st.sampled_from(ATOMS),
        lambda kids: st.builds(Bin, st.sampled_from(CONNECTIVES), kids, kids),
        max_leaves=2 ** max_depth,
    )


def test_parse_single_connective():
    assert parse_formula("np \\ s") == under(atom("np"), atom("s"))


def test_parse_lexical_unfolding_formula():
    got = parse_formula("(s (/) s) (\\) np")
    assert got == ldiff(rdiff(atom("s"), atom("s")), atom("np"))


def test_parse_quantifier_phrase():
    got = parse_formula("(np/n)*n")
    assert got == prod(over(atom("np"), atom("n")), atom("n"))


def test_parse_requires_parens_between_operators():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("a * b * c")


def test_parse_reports_position():
    with pytest.raises(FormulaSyntaxError) as e:
        parse_formula("a * ?")
    assert "position" in str(e.value)


@given(formulas())
def test_print_parse_roundtrip(f):
    assert parse_formula(fmt_formula(f)) == f


def test_mirror_atom_fixed():
    assert mirror(atom("s")) == atom("s")


def test_mirror_over_becomes_under():
    a, b = atom("p"), prod(atom("q"), atom("s"))
    assert mirror(over(a, b)) == under(mirror(b), mirror(a))


def test_mirror_tables():
    a, b = atom("p"), atom("q")
    assert mirror(prod(a, b)) == prod(b, a)
    assert mirror(coprod(a, b)) == coprod(b, a)
    assert mirror(rdiff(a, b)) == ldiff(b, a)
    assert mirror(ldiff(a, b)) == rdiff(b, a)


def test_dual_atom_fixed():
    assert dual(atom("np")) == atom("np")


def test_dual_tables():
    a, b = atom("p"), atom("q")
    assert dual(prod(a, b)) == coprod(b, a)
    assert dual(over(a, b)) == ldiff(b, a)
    assert dual(under(a, b)) == rdiff(b, a)
    assert dual(coprod(a, b)) == prod(b, a)


@given(formulas())
def test_mirror_involution(f):
    assert mirror(mirror(f)) == f


@given(formulas())
def test_dual_involution(f):
    assert dual(dual(f)) == f


@given(formulas())
def test_mirror_dual_commute(f):
    assert mirror(dual(f)) == dual(mirror(f))


@given(formulas())
def test_mirror_preserves_polarity(f):
    assert polarity(mirror(f), ALL_NEGATIVE) == polarity(f, ALL_NEGATIVE)


def test_polarity_families():
    bias = BiasMap(default=NEG, overrides=(("np", POS),))
    assert polarity(prod(atom("np"), atom("n")), bias) == POS
    assert polarity(under(atom("np"), atom("s")), bias) == NEG
    assert polarity(atom("s"), bias) == NEG
    assert polarity(atom("np"), bias) == POS


def test_bias_parse():
    bias = BiasMap.parse("np=+,s=-")
    assert bias.atom_polarity("np") == POS
    assert bias.atom_polarity("s") == NEG
    assert bias.atom_polarity("other") == NEG
