from __future__ import annotations

import random

from hypothesis import given, settings, strategies as st

from linxlate.corpus import corpus, random_formula
from linxlate.formula import alpha_eq
from linxlate.rewrite import SimplificationId, check_simplification
from linxlate.syntax import Lang, parse, to_text
from linxlate.xlate import embed_il, forget, translate

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def formula(seed: int, lang: Lang = Lang.ILL, depth: int = 5):
    return random_formula(random.Random(seed), depth=depth, atoms=3, variables=2, lang=lang)


@settings(max_examples=300, deadline=None)
@given(seeds, st.sampled_from(list(Lang)))
def test_print_parse_round_trip(seed, lang):
    a = formula(seed, lang, depth=8)
    assert alpha_eq(parse(to_text(a, lang), lang), a)


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_forget_inverts_dagger(seed):
    a = formula(seed, Lang.IL)
    assert forget(embed_il(a)) == a


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_presentations_agree(seed):
    a = formula(seed)
    assert translate(a, "kolm-outer") == translate(a, "kolm-inner")
    assert translate(a, "gf-outer") == translate(a, "gf-inner")


@settings(max_examples=100, deadline=None)
@given(seeds, st.sampled_from(list(SimplificationId)))
def test_simplifications_reach_their_targets(seed, sid):
    assert check_simplification(sid, [formula(seed, depth=6)]).ok


def test_corpus_is_deterministic():
    assert list(corpus(5, 20)) == list(corpus(5, 20))
    assert list(corpus(5, 20)) != list(corpus(6, 20))
