from __future__ import annotations

import itertools

import pytest

from linxlate.formula import Sequent
from linxlate.models import (
    Algebra, Found, NotFoundWithinBounds, Valuation, enumerate_algebras, evaluate,
    find_countermodel, holds, lattices, refute, validates,
)
from linxlate.proofs import CL_B, CLL_B, IL_B, ILL
from linxlate.prover import Budget, Proved, prove
from linxlate.syntax import parse, parse_sequent
from linxlate.tables import BANG_ROWS, DNEG_ROWS

ROW4 = {r.label: r for r in DNEG_ROWS}
ROW5 = {r.label: r for r in BANG_ROWS}


def heyting(elements: list) -> Algebra:
    """Heyting algebra of the given up-sets (listed bottom first, top last),
    with tensor = meet and bang = identity."""
    n = len(elements)
    idx = {e: i for i, e in enumerate(elements)}
    r = range(n)
    leq = tuple(tuple(elements[a] <= elements[b] for b in r) for a in r)
    meet = tuple(tuple(idx[elements[a] & elements[b]] for b in r) for a in r)
    join = tuple(tuple(idx[elements[a] | elements[b]] for b in r) for a in r)
    imp = tuple(tuple(max((c for c in r if elements[a] & elements[c] <= elements[b]),
                          key=lambda c: len(elements[c])) for b in r) for a in r)
    return Algebra(n, leq, meet, join, meet, imp, tuple(r))


def chain(n: int) -> Algebra:
    return heyting([frozenset(range(k)) for k in range(n)])


# the fork: a root below two incomparable worlds u and v
FORK = heyting([frozenset(), frozenset("u"), frozenset("v"), frozenset("uv"),
                frozenset("ruv")])


def val(**atoms) -> Valuation:
    return Valuation(1, tuple(((k, ()), v) for k, v in sorted(atoms.items())))


def test_oracle_algebras_obey_the_laws():
    for alg in (chain(2), chain(3), FORK):
        assert alg.law_violations() == []
        assert alg.satisfies(CL_B) == (alg.n <= 2)


def test_evaluate_basics():
    assert evaluate(parse("1"), FORK, val()) == FORK.top
    assert evaluate(parse("~P"), chain(2), val(P=1)) == 0


def test_fork_refutes_row_xi():
    v = val(P=1, Q=2)
    assert evaluate(parse("~~(~~P + ~~Q)"), FORK, v) == FORK.top
    assert evaluate(parse("~~P + ~~Q"), FORK, v) == 3


def test_holds():
    assert holds(parse_sequent("|- 1"), FORK, val())
    assert validates(parse_sequent("P |- !P"), FORK)
    assert not holds(parse_sequent("~~P |- P"), chain(3), val(P=1))


def test_lattice_counts():
    assert [len(lattices(n)) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


def test_algebra_counts():
    assert [len(list(enumerate_algebras(n, ILL))) for n in range(1, 7)] == [1, 1, 3, 15, 69, 415]
    assert [len(list(enumerate_algebras(n, IL_B))) for n in range(1, 7)] == [1, 1, 1, 2, 3, 5]


def test_n3_golden():
    assert len(list(enumerate_algebras(3, ILL))) == 3


def test_two_element_boolean_algebra_present():
    algs = list(enumerate_algebras(2, ILL))
    assert any(a.mul == a.meet and a.bang == (0, 1) for a in algs)


def test_promotion_algebras_are_heyting():
    for n in range(1, 6):
        for a in enumerate_algebras(n, IL_B):
            assert a.bang == tuple(range(n)) and a.mul == a.meet


def _isomorphic(a: Algebra, b: Algebra) -> bool:
    mid = list(range(1, a.n - 1))
    for p in itertools.permutations(mid):
        f = (0, *p, a.n - 1) if a.n > 1 else (0,)
        r = range(a.n)
        if all(a.leq[x][y] == b.leq[f[x]][f[y]] and f[a.mul[x][y]] == b.mul[f[x]][f[y]]
               for x in r for y in r) and all(f[a.bang[x]] == b.bang[f[x]] for x in r):
            return True
    return False


def test_enumeration_is_lawful_and_iso_free():
    algs = list(enumerate_algebras(4, ILL))
    assert all(a.law_violations() == [] for a in algs)
    for a, b in itertools.combinations(algs, 2):
        assert not _isomorphic(a, b)


def test_countermodel_for_row_xi_in_ilb():
    r = ROW4["xi"]
    hit = find_countermodel(r.left, r.right, IL_B, 5, 1)
    assert isinstance(hit, Found) and hit.recheck() and hit.algebra.n == 5


def test_countermodel_for_row_ix_in_ill():
    r = ROW4["ix"]
    hit = find_countermodel(r.left, r.right, ILL, 6, 1)
    assert isinstance(hit, Found) and hit.recheck()


def test_no_countermodel_for_provable_row():
    r = ROW4["i"]
    assert isinstance(find_countermodel(r.left, r.right, ILL, 4, 1), NotFoundWithinBounds)


def test_row_xiv_refuted_with_two_element_domain():
    r = ROW4["xiv"]
    for th in (IL_B, ILL):
        hit = find_countermodel(r.left, r.right, th, 5, 2)
        assert isinstance(hit, Found) and hit.valuation.domain == 2


def test_row_vi_finite_behaviour():
    r = ROW4["vi"]
    # with promotion no finite model separates the two sides
    assert isinstance(find_countermodel(r.left, r.right, IL_B, 5, 2), NotFoundWithinBounds)
    # without it a finite instance reduces to row ii and fails
    hit = find_countermodel(r.left, r.right, ILL, 5, 2)
    assert isinstance(hit, Found) and hit.recheck()


def test_row_viii_of_bang_table_holds_in_every_small_algebra():
    r = ROW5["viii"]
    assert isinstance(find_countermodel(r.left, r.right, ILL, 5, 1), NotFoundWithinBounds)


def test_kolmogorov_of_excluded_middle_fails_in_ill():
    from linxlate.xlate import translate
    f = translate(parse("P + ~P"), "kolm-outer")
    hit = refute(Sequent((), f), ILL, 3, 1)
    assert hit is not None and hit[0].n == 3


SOUND = [
    ("!(P & Q) |- !P * !Q", ILL), ("P -o Q, P |- Q", ILL), ("!P |- !!P", ILL),
    ("exists x. P(x) |- ~~exists x. P(x)", ILL), ("P |- !P", IL_B),
    ("|- ~~P -o P", CLL_B), ("P, Q |- P", CLL_B), ("|- P + ~P", CL_B),
]


@pytest.mark.parametrize("text, th", SOUND)
def test_proved_sequents_are_valid(text, th):
    s = parse_sequent(text)
    assert isinstance(prove(s, th, Budget(timeout_ms=3000)), Proved)
    for n in range(1, 5):
        for alg in enumerate_algebras(n, th):
            for d in (1, 2):
                assert validates(s, alg, d), (text, n, d)
