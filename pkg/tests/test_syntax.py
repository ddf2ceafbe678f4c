import pytest
from hypothesis import given

from helpers import formula_strategy

from addnf import (
    And,
    App,
    ConnectiveSig,
    DomainViolation,
    Not,
    Or,
    ParseError,
    Prop,
    UnknownSymbolError,
    conj_all,
    depth,
    disj_all,
    parse_formula,
    render_formula,
    validate_domains,
    vocabulary,
)


def test_parse_or(prop_inst):
    assert parse_formula("(or p q)", prop_inst.logic) == Or(Prop("p"), Prop("q"))


def test_parse_diamond(modal_inst):
    dia = modal_inst.diamonds[0]
    assert parse_formula("(dia (not p))", modal_inst.logic) == App(dia, (Not(Prop("p")),))


def test_sugar_expands(prop_inst):
    assert parse_formula("(imp p q)", prop_inst.logic) == Or(Not(Prop("p")), Prop("q"))
    expected = And(Or(Not(Prop("p")), Prop("q")), Or(Not(Prop("q")), Prop("p")))
    assert parse_formula("(iff p q)", prop_inst.logic) == expected


def test_whitespace_and_newlines(prop_inst):
    assert parse_formula("  (and\n  p\n  (not q))  ", prop_inst.logic) == And(
        Prop("p"), Not(Prop("q"))
    )


@pytest.mark.parametrize(
    "text",
    ["(or p", "(or p q) extra", "(and p)", "(not p q)", "()", ")", "(or p q))"],
)
def test_parse_errors(prop_inst, text):
    with pytest.raises(ParseError):
        parse_formula(text, prop_inst.logic)


def test_parse_error_positions(prop_inst):
    with pytest.raises(ParseError) as e:
        parse_formula("(and p\n  (bogus q r))", prop_inst.logic)
    assert e.value.line == 2


def test_unknown_connective(prop_inst):
    with pytest.raises(UnknownSymbolError):
        parse_formula("(dia p)", prop_inst.logic)


def test_unknown_proposition_in_closed_universe():
    from addnf.logics import propositional_instance

    inst = propositional_instance(["p", "q"])
    assert parse_formula("p", inst.logic) == Prop("p")
    with pytest.raises(UnknownSymbolError):
        parse_formula("r", inst.logic)


def test_gf_guard_covers_body(gf_rs):
    f = parse_formula("(ex (u) (R u v) (S v))", gf_rs.logic)
    assert isinstance(f, App)
    assert f.conn.payload.bound == ("u",)
    assert f.conn.payload.guard == "(R u v)"


def test_gf_domain_violation(gf_rs):
    with pytest.raises(DomainViolation):
        parse_formula("(ex (u) (R u u) (S v))", gf_rs.logic)


def test_gf_bound_vars_must_guard(gf_rs):
    with pytest.raises(ParseError):
        parse_formula("(ex (v) (R u u) (S u))", gf_rs.logic)


def test_gf_arity_checked(gf_rs):
    with pytest.raises(ParseError):
        parse_formula("(R u)", gf_rs.logic)
    with pytest.raises(ParseError):
        parse_formula("(S u v)", gf_rs.logic)


@pytest.mark.parametrize(
    "text",
    [
        "p",
        "(not p)",
        "(or p q)",
        "(and (not p) (or q p))",
    ],
)
def test_round_trip_canonical(prop_inst, text):
    f = parse_formula(text, prop_inst.logic)
    assert render_formula(f, prop_inst.logic) == text
    assert parse_formula(render_formula(f, prop_inst.logic), prop_inst.logic) == f


def test_round_trip_gf(gf_rs):
    text = "(ex (u v) (R u v) (or (S v) (not (R v u))))"
    f = parse_formula(text, gf_rs.logic)
    assert render_formula(f, gf_rs.logic) == text
    assert parse_formula(render_formula(f, gf_rs.logic), gf_rs.logic) == f


def test_round_trip_bao(bao_xy):
    text = "(plus x (minus (f y)))"
    f = parse_formula(text, bao_xy.logic)
    assert render_formula(f, bao_xy.logic) == text


def test_bao_zero_one_expand(bao_xy):
    zero = parse_formula("0", bao_xy.logic)
    assert zero == And(Prop("x"), Not(Prop("x")))
    one = parse_formula("1", bao_xy.logic)
    assert one == Or(Prop("x"), Not(Prop("x")))


@given(formula_strategy(("p", "q", "r")))
def test_round_trip_property(f):
    from addnf.logics import propositional_instance

    inst = propositional_instance()
    assert parse_formula(render_formula(f, inst.logic), inst.logic) == f


def test_depth_examples(modal_inst):
    logic = modal_inst.logic
    assert depth(parse_formula("(or p (not q))", logic)) == 0
    assert depth(parse_formula("(dia p)", logic)) == 1
    assert depth(parse_formula("(dia (and p (dia (not p))))", logic)) == 2


def test_vocabulary_examples(modal_inst, gf_rs):
    logic = modal_inst.logic
    props, conns = vocabulary(parse_formula("(or p (not q))", logic))
    assert props == {"p", "q"} and conns == frozenset()
    props, conns = vocabulary(parse_formula("(dia (and p q))", logic))
    assert props == {"p", "q"} and {c.key for c in conns} == {"dia"}
    f = parse_formula("(ex (u) (R u v) (S v))", gf_rs.logic)
    props, conns = vocabulary(f)
    assert props == {"(R u v)", "(S v)"}
    assert {c.key for c in conns} == {"(ex (u) (R u v))"}


def test_vocabulary_monotone(prop_inst):
    f = parse_formula("(and (or p q) (not r))", prop_inst.logic)
    sub = parse_formula("(or p q)", prop_inst.logic)
    assert vocabulary(sub)[0] <= vocabulary(f)[0]


def test_fold_shapes():
    p, q, r = Prop("p"), Prop("q"), Prop("r")
    assert conj_all([p]) == p
    assert conj_all([p, q, r]) == And(And(p, q), r)
    assert disj_all([p, q, r]) == Or(Or(p, q), r)
    with pytest.raises(ValueError):
        conj_all([])


def test_app_arity_and_kind():
    dia = ConnectiveSig("dia", 1)
    with pytest.raises(ValueError):
        App(dia, (Prop("p"), Prop("q")))
    with pytest.raises(ValueError):
        ConnectiveSig("bad", 0)


def test_validate_domains(gf_rs):
    good = parse_formula("(ex (u) (R u v) (S v))", gf_rs.logic)
    validate_domains(good, gf_rs.domain)
    sig = gf_rs.quantifier(("u",), "(R u u)")
    bad = App(sig, (Prop("(S v)"),))  # built behind the parser's back
    with pytest.raises(DomainViolation):
        validate_domains(bad, gf_rs.domain)
