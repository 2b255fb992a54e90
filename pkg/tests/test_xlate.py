from __future__ import annotations

import pytest

from linxlate.syntax import Lang, parse, to_text
from linxlate.xlate import (
    LanguageMismatch, TranslationId, circ_core, compose_literal, composed, embed_cll,
    embed_il, forget, translate,
)


def tr(text: str, which: str, lang: Lang = Lang.ILL) -> str:
    return to_text(translate(parse(text, lang), which))


@pytest.mark.parametrize("src, which, expected", [
    ("(P & Q) * R", "kolm-outer", "~~(~~(~~P & ~~Q) * ~~R)"),
    ("P", "kolm-inner", "~~P"),
    ("(P & Q) * R", "gg", "(~~P & ~~Q) * ~~R"),
    ("exists x. P(x)", "gg", "~~exists x. ~~P(x)"),
    ("!P", "gg", "!~~P"),
    ("forall x. P(x)", "kuroda", "~~forall x. ~~P(x)"),
    ("P + Q", "kuroda", "~~(P + Q)"),
    ("!(P -o Q)", "kuroda", "~~!(P -o Q)"),
    ("P * Q", "lgg", "~~(~~P * ~~Q)"),
    ("P & Q", "lgg", "~~P & ~~Q"),
    ("!P", "lgg", "~~!~~P"),
    ("P -o Q", "lkuroda", "~~(P -o ~~Q)"),
    ("P & Q", "lkuroda", "~~(~~P & ~~Q)"),
    ("P + Q", "lkuroda", "~~(P + Q)"),
    ("P -o Q", "gf-outer", "!(!P -o !Q)"),
    ("!P", "gf-outer", "!!!P"),
    ("P", "star", "!P"),
    ("P -o Q", "star", "!(!P -o !Q)"),
    ("P + Q", "star", "!P + !Q"),
    ("P", "g-circ", "!?!P"),
    ("P", "g-star", "!?!P"),
    ("P + Q", "ku-star", "!?(!P + !Q)"),
])
def test_translation_goldens(src, which, expected):
    assert translate(parse(src), which) == parse(expected)


def test_circ_core_clauses():
    assert to_text(circ_core(parse("P -o Q"))) == "!P -o Q"
    assert to_text(circ_core(parse("exists x. P(x)"))) == "exists x. !P(x)"
    assert to_text(circ_core(parse("~~P"))) == "?!P"


def test_embeddings():
    assert tr("P /\\ Q", "dagger", Lang.IL) == "P & Q"
    assert tr("bot", "dagger", Lang.IL) == "0"
    assert tr("forall x. (P(x) -> Q)", "dagger", Lang.IL) == "forall x. P(x) -o Q"
    assert tr("P par Q", "ddagger", Lang.CLL) == "~(~P * ~Q)"
    assert translate(parse("?P", Lang.CLL), "ddagger") == parse("~!~P")
    assert embed_cll(parse("!(P * Q)", Lang.CLL)) == parse("!(P * Q)")


def test_forget():
    assert to_text(forget(parse("!P -o Q")), Lang.IL) == "P -> Q"
    assert to_text(forget(parse("P * Q")), Lang.IL) == "P /\\ Q"
    a = parse("forall x. (P(x) -> Q \\/ ~R)", Lang.IL)
    assert forget(embed_il(a)) == a


def test_outer_and_inner_presentations_agree():
    a = parse("!(P & Q) -o exists x. R(x) + P")
    assert translate(a, "kolm-outer") == translate(a, "kolm-inner")
    assert translate(a, "gf-outer") == translate(a, "gf-inner")


def test_literal_compositions_on_atoms():
    p = parse("P")
    assert to_text(compose_literal(p, "gg", "circ")) == "!?!P"
    # constants go through the atom clause, so the literal form keeps !0
    assert compose_literal(p, "kuroda", "star") == parse("!(!(!P -o !0) -o !0)")
    assert composed(p, TranslationId.KU_STAR) == parse("!?(!P)")


def test_literal_composition_rejects_other_languages():
    with pytest.raises(LanguageMismatch):
        compose_literal(parse("P"), "kolm-outer", "forget")


def test_translation_rejects_foreign_connectives():
    with pytest.raises(LanguageMismatch):
        translate(parse("P /\\ Q", Lang.IL), "gg")
