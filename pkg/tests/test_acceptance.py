"""One test per acceptance criterion; each prints a single pass/fail line.

Proofs found by criteria 3 to 7 are collected in a shared ledger and
replayed by criterion 9.  Run with ``pytest -s tests/test_acceptance.py``
to see the lines, or use ``linxlate selftest``.
"""

from __future__ import annotations

import pytest

from linxlate import acceptance as acc


@pytest.fixture(scope="module")
def ledger() -> acc.Ledger:
    return acc.Ledger()


def report(r: acc.CheckResult) -> None:
    print("\n" + r.line())
    assert r.ok, r.line()


def test_criterion_1_worked_example():
    report(acc.check_worked_example())


def test_criterion_2_simplification_identities():
    report(acc.check_simplifications())


def test_criterion_3_double_negation_matrix(ledger):
    report(acc.check_prop4(ledger))


def test_criterion_4_bang_matrix(ledger):
    report(acc.check_prop5(ledger))


def test_criterion_5_lemmas(ledger):
    report(acc.check_lemmas(ledger))


def test_criterion_6_composition_theorems(ledger):
    report(acc.check_compositions(ledger))


def test_criterion_7_soundness_spot_checks(ledger):
    report(acc.check_soundness(ledger))


def test_criterion_8_round_trip():
    report(acc.check_round_trip())


def test_criterion_9_proof_replay(ledger):
    report(acc.check_replay(ledger))
