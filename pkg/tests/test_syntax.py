from __future__ import annotations

import pytest

from linxlate.formula import (
    And, Atom, Bang, Forall, Imp, Lolli, Par, Tensor, Var, With, Zero, atom, neg,
)
from linxlate.syntax import (
    Lang, ParseError, WrongLanguageError, parse, parse_sequent, read_formulas, to_text,
)

P, Q, R = Atom("P"), Atom("Q"), Atom("R")


def test_precedence():
    assert parse("!P -o Q") == Lolli(Bang(P), Q)
    assert parse("P * Q & R") == With(Tensor(P, Q), R)
    assert parse("P -o Q -o R") == Lolli(P, Lolli(Q, R))


def test_negation_sugar():
    assert parse("~~(P * Q)") == neg(neg(Tensor(P, Q)))
    assert parse("~P") == Lolli(P, Zero())


def test_wrong_language():
    with pytest.raises(WrongLanguageError):
        parse("P par Q", Lang.ILL)
    assert parse("P par Q", Lang.CLL) == Par(P, Q)


def test_parse_error_reports_offset():
    with pytest.raises(ParseError) as e:
        parse("P * * Q")
    assert e.value.offset == 4


def test_unicode_aliases():
    assert parse("P ⊗ Q ⊸ R") == parse("P * Q -o R")


def test_il_language():
    assert parse("P /\\ Q -> R", Lang.IL) == Imp(And(P, Q), R)


def test_printer():
    assert to_text(Lolli(P, Zero())) == "~P"
    assert to_text(Tensor(With(P, Q), R)) == "(P & Q) * R"
    assert to_text(parse("?P")) == "?P"
    assert to_text(Forall("x", atom("P", Var("x")))) == "forall x. P(x)"


def test_sequents():
    s = parse_sequent("!P, Q |- P * Q")
    assert s.hyps == (Bang(P), Q) and s.goal == Tensor(P, Q)
    assert parse_sequent("|- P").hyps == ()


def test_read_formulas_skips_comments():
    assert read_formulas("P\n\n# note\nQ * R  # tail\n") == [P, Tensor(Q, R)]
