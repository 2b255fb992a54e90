from __future__ import annotations

from linxlate.formula import (
    App, Atom, Bang, Const, Exists, Forall, Lolli, One, Tensor, Var, Zero, alpha_eq,
    atom, depth, dneg, free_vars, is_dneg, is_quest, neg, quest, size, substitute,
)

P, Q = Atom("P"), Atom("Q")


def test_neg_is_lolli_zero():
    assert neg(P) == Lolli(P, Zero())
    assert neg(neg(P)) == Lolli(Lolli(P, Zero()), Zero())
    assert neg(Zero()) == Lolli(Zero(), Zero())
    assert dneg(P) == neg(neg(P)) and is_dneg(dneg(P))


def test_quest_unfolds():
    assert quest(P) == Lolli(Bang(Lolli(P, Zero())), Zero())
    assert quest(One()) == Lolli(Bang(Lolli(One(), Zero())), Zero())
    assert is_quest(quest(P)) and not is_quest(neg(P))


def test_substitution_basic():
    px = atom("P", Var("x"))
    assert substitute(px, "x", Const("c")) == atom("P", Const("c"))
    fa = Forall("x", px)
    assert substitute(fa, "x", Const("c")) == fa


def test_substitution_avoids_capture():
    a = Exists("y", atom("P", Var("x"), Var("y")))
    b = substitute(a, "x", Var("y"))
    assert isinstance(b, Exists) and b.var != "y"
    assert b.body == atom("P", Var("y"), Var(b.var))
    assert free_vars(b) == {"y"}


def test_alpha_equivalence():
    assert alpha_eq(Forall("x", atom("P", Var("x"))), Forall("y", atom("P", Var("y"))))
    assert not alpha_eq(Forall("x", atom("P", Var("x"))), Exists("x", atom("P", Var("x"))))
    assert not alpha_eq(Tensor(P, Q), Tensor(Q, P))
    # free variables are not renamed
    assert not alpha_eq(atom("P", Var("x")), atom("P", Var("y")))


def test_size_and_depth():
    f = Tensor(Bang(P), Q)
    assert size(f) == 4
    assert depth(P) == 0 and depth(f) == 2


def test_function_terms_in_free_vars():
    f = atom("P", App("f", (Var("x"), Const("c"))))
    assert free_vars(f) == {"x"}
