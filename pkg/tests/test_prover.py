from __future__ import annotations

from dataclasses import replace

import pytest

from linxlate.formula import Sequent
from linxlate.models import refute
from linxlate.proofs import CL_B, CLL_B, IL_B, ILL, ProofNode, ReplayError, replay, replays
from linxlate.prover import (
    Budget, Equivalent, NotFound, Proved, check_derived_rule, check_equiv, prove,
)
from linxlate.syntax import parse, parse_sequent
from linxlate.tables import DNEG_ROWS
from linxlate.xlate import compose_literal, composed, translate

FAST = Budget(timeout_ms=3000)


def proved(text: str, th=ILL, b: Budget = FAST) -> ProofNode:
    res = prove(parse_sequent(text), th, b)
    assert isinstance(res, Proved), text
    replay(res.tree, th)
    return res.tree


@pytest.mark.parametrize("text", [
    "!P |- P",
    "P * Q |- Q * P",
    "P & Q |- Q & P",
    "P -o Q, P |- Q",
    "!P |- !P * !P",
    "!P, Q |- Q",
    "|- 1",
    "0 |- P",
    "P |- top",
    "forall x. P(x) |- exists x. P(x)",
    "exists x. !P(x) |- exists y. P(y)",
    "!(P & Q) |- !P * !Q",
])
def test_ill_positives(text):
    proved(text)


@pytest.mark.parametrize("text", ["P |- P * P", "P, Q |- P", "P |- !P", "~~P |- P"])
def test_ill_negatives_are_not_found(text):
    assert isinstance(prove(parse_sequent(text), ILL, FAST), NotFound)


def test_dne_and_countermodel():
    s = parse_sequent("|- ~~P -o P")
    proved("|- ~~P -o P", CLL_B)
    assert isinstance(prove(s, ILL, FAST), NotFound)
    assert refute(s, ILL, 3, 1) is not None


def test_saturated_search_says_so():
    res = prove(parse_sequent("P |- Q"), ILL, FAST)
    assert isinstance(res, NotFound) and res.reason == "saturated"


def test_promotion_theory():
    proved("P |- !P", IL_B)
    # contraction and weakening of plain formulas come with promotion
    proved("P |- P * P", IL_B)
    proved("P, Q |- P", IL_B)
    proved("|- P + ~P", CL_B)


def test_cll_b_is_affine():
    proved("P, Q |- P", CLL_B)


def test_equivalences():
    row = {r.label: r for r in DNEG_ROWS}
    for label in ("i", "x"):
        r = row[label]
        assert isinstance(check_equiv(r.left, r.right, ILL, FAST), Equivalent)
    res = check_equiv(parse("!?!?P"), parse("!?P"), CLL_B, FAST)
    assert isinstance(res, Equivalent)
    replay(res.forward, CLL_B)
    replay(res.backward, CLL_B)


def test_literal_ku_star_on_atom_is_equivalent_to_direct_form():
    p = parse("P")
    res = check_equiv(compose_literal(p, "kuroda", "star"), composed(p, "ku-star"), ILL, FAST)
    assert isinstance(res, Equivalent)


def test_derived_rules():
    assert check_derived_rule(parse_sequent("!!G, A |- ?B"), parse_sequent("!!G, ?A |- ?B"), CLL_B, FAST)
    assert check_derived_rule(parse_sequent("G |- B"), parse_sequent("G |- ?B"), CLL_B, FAST)
    # from an empty context !R applies directly, so the rule is trivially derivable
    assert check_derived_rule(parse_sequent("|- A"), parse_sequent("|- !A"), ILL, FAST)
    assert not check_derived_rule(parse_sequent("G |- A"), parse_sequent("G |- !A"), ILL, FAST)
    assert check_derived_rule(parse_sequent("G |- A"), parse_sequent("G |- !A"), IL_B, FAST)


def test_ill_proofs_replay_in_every_extension():
    for text in ("!(P & Q) |- !P * !Q", "P -o Q, P |- Q", "forall x. P(x) |- exists x. P(x)"):
        tree = proved(text)
        for th in (IL_B, CLL_B, CL_B):
            assert replays(tree, th)


def test_replay_rejects_tampered_trees():
    tree = proved("P * Q |- Q * P")
    bad = replace(tree, goal=parse("P * P"))
    with pytest.raises(ReplayError):
        replay(bad, ILL)
    pro = proved("P |- !P", IL_B)
    assert not replays(pro, ILL)


def test_proof_text_lists_rules():
    tree = proved("P * Q |- Q * P")
    text = tree.to_text()
    assert "⊗L" in text and "⊗R" in text
    assert tree.rules_used() >= {"⊗L", "⊗R", "id"}


def test_tiny_timeout_gives_up_cleanly():
    s = parse_sequent("|- ((P -o Q) -o P) -o P")
    res = prove(s, ILL, Budget(timeout_ms=1))
    assert isinstance(res, NotFound)


@pytest.mark.parametrize("text", ["~~P -o P", "P + ~P", "((P -o Q) -o P) -o P",
                                  "~(P & Q) -o ~P + ~Q"])
def test_kolmogorov_is_sound_into_ilb(text):
    k = translate(parse(text), "kolm-outer")
    res = prove(Sequent((), k), IL_B, FAST)
    assert isinstance(res, Proved)
    replay(res.tree, IL_B)


@pytest.mark.parametrize("text", ["~~P -o P", "~(P & Q) -o ~P + ~Q"])
def test_kolmogorov_of_cllb_theorems_holds_in_ill(text):
    assert isinstance(prove(Sequent((), parse(text)), CLL_B, FAST), Proved)
    assert isinstance(prove(Sequent((), translate(parse(text), "kolm-outer")), ILL, FAST), Proved)


@pytest.mark.parametrize("text", ["P + ~P", "((P -o Q) -o P) -o P"])
def test_excluded_middle_and_peirce_are_not_cllb_theorems(text):
    s = Sequent((), parse(text))
    assert isinstance(prove(s, CLL_B, FAST), NotFound)
    hit = refute(s, CLL_B, 3, 1)
    assert hit is not None and hit[0].n == 3
