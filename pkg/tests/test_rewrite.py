from __future__ import annotations

from linxlate.rewrite import (
    SIMPLIFICATIONS, SimplificationId, Strategy, apply, check_simplification, simplify,
)
from linxlate.syntax import parse, to_text

EQ5 = parse("~~(~~(~~P & ~~Q) * ~~R)")
GG = SIMPLIFICATIONS[SimplificationId.GG_FROM_KOLM_O].rules


def test_outside_reaches_gg_in_two_steps():
    trace: list = []
    out = apply(EQ5, GG, Strategy.OUTSIDE, trace)
    assert to_text(out) == "(~~P & ~~Q) * ~~R"
    assert [f.position for f in trace] == [(), (0,)]
    assert [to_text(f.after) for f in trace] == ["~~(~~P & ~~Q) * ~~R", "~~P & ~~Q"]


def test_inside_stops_early():
    out = apply(EQ5, GG, Strategy.INSIDE)
    assert to_text(out) == "~~((~~P & ~~Q) * ~~R)"
    assert apply(out, GG, Strategy.INSIDE) == out


def test_atoms_and_empty_rule_sets():
    for sid in SimplificationId:
        assert simplify(parse("P"), sid) == parse("P")
    assert apply(EQ5, (), Strategy.OUTSIDE) == EQ5


def test_check_simplification_reports():
    assert check_simplification("gg-from-kolm-outer", [parse("(P & Q) * R")]).ok
    rep = check_simplification("kuroda-from-kolm-inner", [parse("forall x. P(x)")])
    assert rep.ok and to_text(rep.entries[0].got) == "~~forall x. ~~P(x)"
    rep = check_simplification("circ-from-gf-inner", [parse("P -o Q")])
    assert rep.ok and to_text(rep.entries[0].got) == "!(!P -o Q)"


def test_report_records_failures():
    # the inside strategy with the outside rule set does not reach gg
    from linxlate.rewrite import ReportEntry
    e = ReportEntry(parse("P"), parse("P"), parse("~~P"))
    assert not e.ok and "status=fail" in e.records()
