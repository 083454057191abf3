import pytest

from lgcalc.formula import Bin, atom, coprod, over, parse_formula, prod, under
from lgcalc.structure import (INPUT, Leaf, OUTPUT, SBin, Sequent,
                              fmt_sequent, parse_sequent, parse_structure,
                              structure_to_formula, validate_structure)


def oracle_structure_to_formula(x):
    # independent recursion used as the oracle for the homomorphic collapse
    if isinstance(x, Leaf):
        return x.formula
    return Bin(x.op, oracle_structure_to_formula(x.left),
               oracle_structure_to_formula(x.right))


def test_collapse_leaf():
    a = atom("p")
    assert structure_to_formula(Leaf(a)) == a


def test_collapse_single_node():
    a, b = atom("p"), atom("q")
    assert structure_to_formula(SBin("*", Leaf(a), Leaf(b))) == prod(a, b)


def test_collapse_nested_matches_oracle():
    c, d, b = atom("p"), atom("q"), atom("s")
    x = SBin("/", SBin("(+)", Leaf(c), Leaf(d)), Leaf(b))
    assert structure_to_formula(x) == over(coprod(c, d), b)
    assert structure_to_formula(x) == oracle_structure_to_formula(x)


ACCEPT_INPUT = [
    "np",
    "np * (np \\ s)",
    "(a * b) * c",
    "a (/) b",          # I ::= I .(/). O
    "b (\\) a",         # I ::= O .(\). I
    "(a (/) (b (+) c)) * d",
]

REJECT_INPUT = [
    "a (+) b",          # coproduct is output-only
    "a \\ b",
    "a / b",
]

ACCEPT_OUTPUT = [
    "s",
    "a (+) b",
    "a \\ b",
    "b / a",
    "(a * b) \\ s",     # O ::= I .\. O
]

REJECT_OUTPUT = [
    "a * b",
    "a (/) b",
    "a (\\) b",
]


@pytest.mark.parametrize("text", ACCEPT_INPUT)
def test_validate_accepts_input(text):
    x = parse_structure(text, INPUT)
    assert validate_structure(x, INPUT)


@pytest.mark.parametrize("text", REJECT_INPUT)
def test_validate_rejects_input(text):
    # these parse as single formula leaves because the structural reading
    # is ungrammatical; building the raw SBin by hand must be rejected
    f = parse_formula(text)
    raw = SBin(f.op, Leaf(f.left), Leaf(f.right))
    assert not validate_structure(raw, INPUT)


@pytest.mark.parametrize("text", ACCEPT_OUTPUT)
def test_validate_accepts_output(text):
    x = parse_structure(text, OUTPUT)
    assert validate_structure(x, OUTPUT)


@pytest.mark.parametrize("text", REJECT_OUTPUT)
def test_validate_rejects_output(text):
    f = parse_formula(text)
    raw = SBin(f.op, Leaf(f.left), Leaf(f.right))
    assert not validate_structure(raw, OUTPUT)


def test_parse_sequent_lifts_structures():
    s = parse_sequent("a * (a \\ b) |- b")
    assert s.ant == SBin("*", Leaf(atom("a")), Leaf(under(atom("a"), atom("b"))))
    assert s.suc == Leaf(atom("b"))


def test_parse_sequent_keeps_formula_leaf_where_structure_invalid():
    s = parse_sequent("(s (/) s) (\\) np |- s * s")
    # the antecedent (\) node is structural, its left group stays a formula
    assert s.ant == SBin("(\\)", Leaf(parse_formula("s (/) s")), Leaf(atom("np")))
    # a product is not an output structure, so the succedent stays a leaf
    assert s.suc == Leaf(parse_formula("s * s"))


def test_sequent_print_parse_roundtrip():
    s = parse_sequent("a * (a \\ b) |- b")
    assert parse_sequent(fmt_sequent(s)) == s
