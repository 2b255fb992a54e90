"""Executable acceptance checks, shared by the test suite and ``selftest``.

Each check returns a ``CheckResult`` whose ``line()`` is a single
pass/fail line.  Proofs produced along the way are kept in a ``Ledger`` so
the replay check can re-verify every one of them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import xlate
from .corpus import corpus, random_formula
from .formula import Atom, Bang, Formula, Lolli, Plus, Sequent, Tensor, With, alpha_eq, dneg, quest
from .models import Status, check_table, evaluate, refute
from .proofs import CL_B, CLL_B, ILL, IL_B, THEORIES, Theory, replays
from .prover import Budget, Equivalent, Proved, check_derived_rule, check_equiv, prove
from .rewrite import SimplificationId, Strategy, apply, check_simplification, SIMPLIFICATIONS
from .syntax import Lang, parse, parse_sequent, to_text
from .tables import TableId

# worked example goldens
EXAMPLE = "(P & Q) * R"
KOLM_OUTER_GOLDEN = "~~(~~(~~P & ~~Q) * ~~R)"
INSIDE_GOLDEN = "~~((~~P & ~~Q) * ~~R)"
OUTSIDE_STEP_GOLDEN = "~~(~~P & ~~Q) * ~~R"
GG_GOLDEN = "(~~P & ~~Q) * ~~R"

# soundness spot-check list and negative controls
SPOT_CHECKS = ("~~P -o P", "P + ~P", "((P -o Q) -o P) -o P", "~(P & Q) -o ~P + ~Q")
NEGATIVE_CONTROLS = (("~~(P * Q) -o P * Q", "gg"), ("~~P -o P", "kuroda"))

ATOM_GOLDENS = {"g-circ": "!?!P", "g-star": "!?!P", "ku-circ": "!?!P", "ku-star": "!?(!P)"}


@dataclass
class Ledger:
    proofs: list = field(default_factory=list)   # (tree, theory, axioms)

    def add(self, tree, th: Theory, axioms: tuple = ()) -> None:
        self.proofs.append((tree, th, axioms))

    def add_result(self, res, th: Theory, axioms: tuple = ()) -> None:
        if isinstance(res, Proved):
            self.add(res.tree, th, axioms)
        elif isinstance(res, Equivalent):
            self.add(res.forward, th, axioms)
            self.add(res.backward, th, axioms)


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"criterion {self.number} [{verdict}] {self.title} ({self.seconds:.1f}s): {self.detail}"


def _timed(number: int, title: str, fn: Callable[[], tuple]) -> CheckResult:
    start = time.monotonic()
    ok, detail = fn()
    return CheckResult(number, title, ok, detail, time.monotonic() - start)


# ------------------------------------------------------------- checks

def check_worked_example() -> CheckResult:
    def run():
        a = parse(EXAMPLE)
        ko = xlate.translate(a, "kolm-outer")
        rules = SIMPLIFICATIONS[SimplificationId.GG_FROM_KOLM_O].rules
        trace: list = []
        outside = apply(ko, rules, Strategy.OUTSIDE, trace)
        inside_trace: list = []
        inside = apply(ko, rules, Strategy.INSIDE, inside_trace)
        again = apply(inside, rules, Strategy.INSIDE)
        checks = {
            "kolm-outer": to_text(ko) == KOLM_OUTER_GOLDEN,
            "outside intermediate": bool(trace) and to_text(trace[0].after) == OUTSIDE_STEP_GOLDEN,
            "outside result": to_text(outside) == GG_GOLDEN and len(trace) == 2,
            "inside result": to_text(inside) == INSIDE_GOLDEN,
            "inside stops": len(inside_trace) == 1 and again == inside,
        }
        bad = [k for k, v in checks.items() if not v]
        return not bad, "all goldens byte-exact" if not bad else f"mismatch: {', '.join(bad)}"

    r = _timed(1, "worked example", run)
    if r.seconds >= 1.0:
        r.ok, r.detail = False, r.detail + f"; too slow ({r.seconds:.2f}s >= 1s)"
    return r


def check_simplifications(count: int = 1000, seed: int = 2024) -> CheckResult:
    def run():
        fs = list(corpus(seed, count, depth=6, atoms=4, variables=2))
        fails = {}
        for sid in SimplificationId:
            rep = check_simplification(sid, fs)
            fails[sid.value] = len(rep.failures)
        total = sum(fails.values())
        return total == 0, f"{count} formulas x 6 rule sets, failures {fails}"

    r = _timed(2, "simplification identities", run)
    if r.seconds >= 30.0:
        r.ok, r.detail = False, r.detail + "; over 30s"
    return r


_BUDGET = Budget(max_depth=24, timeout_ms=10_000)
_NEG_BUDGET = Budget(max_depth=24, timeout_ms=3_000)


def check_prop4(ledger: Ledger) -> CheckResult:
    def run():
        from .models import Bounds
        rep = check_table(TableId.PROP4, Bounds(6, 3, _NEG_BUDGET))
        problems = []
        for rr in rep.rows:
            for c in rr.cells:
                tag = f"({rr.row.label})/{c.theory}"
                if c.status is Status.PROVED:
                    ledger.add_result(c.evidence, THEORIES[c.theory])
                if c.expected:
                    if c.status is not Status.PROVED:
                        problems.append(f"{tag} not proved")
                    elif c.seconds >= 10.0:
                        problems.append(f"{tag} took {c.seconds:.1f}s")
                    continue
                if rr.row.label == "vi":
                    if c.status is not Status.INCONCLUSIVE_NEGATIVE:
                        problems.append(f"{tag} is {c.status.value}, must be INCONCLUSIVE-NEGATIVE")
                    continue
                must_refute = rr.row.label in ("xi", "xiv") or (
                    rr.row.label == "ix" and c.theory == "ill")
                if c.status is Status.PROVED:
                    problems.append(f"{tag} proved but expected to fail")
                elif must_refute and c.status is not Status.REFUTED:
                    problems.append(f"{tag} not refuted")
                elif c.status is Status.REFUTED and not c.evidence.recheck():
                    problems.append(f"{tag} countermodel does not recheck")
        refuted = sum(c.status is Status.REFUTED for rr in rep.rows for c in rr.cells)
        proved = sum(c.status is Status.PROVED for rr in rep.rows for c in rr.cells)
        detail = f"{proved} proved, {refuted} refuted, (vi) INCONCLUSIVE-NEGATIVE"
        return not problems, detail if not problems else "; ".join(problems)

    return _timed(3, "double-negation matrix", run)


def check_prop5(ledger: Ledger) -> CheckResult:
    def run():
        from .models import Bounds
        rep = check_table(TableId.PROP5, Bounds(6, 3, _NEG_BUDGET))
        problems, inconclusive = [], []
        for rr in rep.rows:
            c = rr.cells[0]
            tag = f"({rr.row.label})"
            if c.expected:
                if c.status is not Status.PROVED:
                    problems.append(f"{tag} not proved in ill")
                    continue
                ledger.add_result(c.evidence, ILL)
                again = check_equiv(rr.row.left, rr.row.right, CLL_B, _BUDGET)
                if not isinstance(again, Equivalent):
                    problems.append(f"{tag} not re-proved in cllb")
                ledger.add_result(again, CLL_B)
            elif c.status is Status.PROVED:
                problems.append(f"{tag} proved but expected to fail")
            elif c.status is Status.REFUTED:
                f = c.evidence
                lhs = evaluate(f.sequent.hyps[0], f.algebra, f.valuation)
                rhs = evaluate(f.sequent.goal, f.algebra, f.valuation)
                if f.algebra.leq[lhs][rhs] or not f.recheck():
                    problems.append(f"{tag} countermodel fails re-evaluation")
            else:
                inconclusive.append(rr.row.label)
        detail = "all positive rows proved in ill and cllb; refutations re-evaluated"
        if inconclusive:
            detail += f"; inconclusive within size 6 / domain 3: {', '.join(inconclusive)}"
        return not problems, detail if not problems else "; ".join(problems)

    return _timed(4, "bang matrix", run)


def check_lemmas(ledger: Ledger, samples: int = 100, seed: int = 7) -> CheckResult:
    def run():
        problems = []
        for a, b in (("A", "!A"), ("A & B", "A * B"), ("top", "1")):
            r = check_equiv(parse(a), parse(b), IL_B, _BUDGET)
            ledger.add_result(r, IL_B)
            if not isinstance(r, Equivalent):
                problems.append(f"intuitionistic lemma {a} <-> {b}")
        rng = random.Random(seed)
        for _ in range(samples):
            a = random_formula(rng, depth=4, atoms=3, variables=2)
            if xlate.circ_core(dneg(a)) != quest(Bang(xlate.circ_core(a))):
                problems.append(f"circ of double negation differs for {to_text(a)}")
                break
        rules = [("!G, A |- ?B", "!G, ?A |- ?B"), ("G |- B", "G |- ?B")]
        for prem, concl in rules:
            if not check_derived_rule(parse_sequent(prem), parse_sequent(concl), CLL_B, _BUDGET):
                problems.append(f"derived rule {prem} => {concl}")
        for a, b in (("!!A", "!A"), ("!?!?A", "!?A"), ("?!?!A", "?!A")):
            r = check_equiv(parse(a), parse(b), CLL_B, _BUDGET)
            ledger.add_result(r, CLL_B)
            if not isinstance(r, Equivalent):
                problems.append(f"cllb lemma {a} <-> {b}")
        return not problems, ("3 + 100 + 2 + 3 items hold" if not problems else "; ".join(problems))

    r = _timed(5, "lemma suite", run)
    if r.seconds >= 60.0:
        r.ok, r.detail = False, r.detail + "; over 60s"
    return r


def depth2_formulas() -> list:
    """Quantifier-free formulas over P and Q of height at most 2."""
    level = [Atom("P"), Atom("Q")]
    for _ in range(2):
        nxt = list(level) + [Bang(a) for a in level]
        nxt += [c(a, b) for c in (Tensor, With, Plus, Lolli) for a in level for b in level]
        level = list(dict.fromkeys(nxt))
    return level


def check_compositions(ledger: Ledger, limit: int | None = None) -> CheckResult:
    def run():
        problems = []
        for tid, golden in ATOM_GOLDENS.items():
            got = xlate.composed(Atom("P"), tid)
            if got != parse(golden):
                problems.append(f"{tid}(P) = {to_text(got)}, expected {golden}")
        fs = depth2_formulas()
        if limit is not None:
            fs = random.Random(3).sample(fs, limit)
        budget = Budget(max_depth=24, timeout_ms=5_000)
        checked = 0
        for tid, (first, second) in xlate.COMPOSITIONS.items():
            for a in fs:
                x = xlate.composed(a, tid)
                y = xlate.compose_literal(a, first, second)
                checked += 1
                if x == y:
                    continue
                r = check_equiv(x, y, CLL_B, budget)
                ledger.add_result(r, CLL_B)
                if not isinstance(r, Equivalent):
                    problems.append(f"{tid.value}: {to_text(a)}")
        detail = f"{len(fs)} formulas x 4 compositions equivalent; atom goldens exact"
        return not problems, detail if not problems else "; ".join(problems[:10])

    return _timed(6, "composition theorems", run)


def check_soundness(ledger: Ledger) -> CheckResult:
    def run():
        problems, notes = [], []

        def need(f: Formula, th: Theory, what: str) -> None:
            res = prove(Sequent((), f), th, _BUDGET)
            if isinstance(res, Proved):
                ledger.add(res.tree, th)
                return
            msg = f"{what} not proved in {th.name}"
            hit = refute(Sequent((), f), th, 4, 1)
            if hit is not None:
                msg += f" (refuted by a {hit[0].n}-element algebra)"
            problems.append(msg)

        for text in SPOT_CHECKS:
            a = parse(text)
            need(a, CL_B, text)
            need(xlate.translate(a, "kuroda"), IL_B, f"kuroda of {text}")
            need(xlate.translate(a, "gg"), IL_B, f"gg of {text}")
            need(xlate.translate(a, "kolm-outer"), ILL, f"kolmogorov of {text}")
            if isinstance(prove(Sequent((), a), CLL_B, _BUDGET), Proved):
                need(xlate.translate(a, "lkuroda"), ILL, f"linear kuroda of {text}")
        for text, tid in NEGATIVE_CONTROLS:
            f = xlate.translate(parse(text), tid)
            if isinstance(prove(Sequent((), f), ILL, _NEG_BUDGET), Proved):
                problems.append(f"{tid} of {text} proved in ill")
            elif refute(Sequent((), f), ILL, 6, 1) is None:
                problems.append(f"{tid} of {text} not refuted in ill")
            else:
                notes.append(f"{tid} of {text} refuted")
        ok = not problems
        return ok, "; ".join(notes) if ok else "; ".join(problems)

    return _timed(7, "soundness spot-checks", run)


def check_round_trip(count: int = 10_000, seed: int = 11) -> CheckResult:
    def run():
        fails = {}
        for lang in Lang:
            rng = random.Random(seed)
            bad = 0
            for _ in range(count):
                a = random_formula(rng, depth=5, atoms=4, variables=3, lang=lang)
                if not alpha_eq(parse(to_text(a, lang), lang), a):
                    bad += 1
            fails[lang.value] = bad
        return sum(fails.values()) == 0, f"{count} per language, failures {fails}"

    r = _timed(8, "parser round trip", run)
    if r.seconds >= 10.0:
        r.ok, r.detail = False, r.detail + "; over 10s"
    return r


def check_replay(ledger: Ledger) -> CheckResult:
    def run():
        if not ledger.proofs:
            check_lemmas(ledger)
        good = sum(replays(t, th, ax) for t, th, ax in ledger.proofs)
        total = len(ledger.proofs)
        return good == total and total > 0, f"{good}/{total} proofs replay"

    return _timed(9, "proof replay", run)


def run_all(quick: bool = False):
    """Yield every check result in order; ``quick`` shrinks the samples."""
    ledger = Ledger()
    yield check_worked_example()
    yield check_simplifications(200 if quick else 1000)
    yield check_prop4(ledger)
    yield check_prop5(ledger)
    yield check_lemmas(ledger)
    yield check_compositions(ledger, 60 if quick else None)
    yield check_soundness(ledger)
    yield check_round_trip(1000 if quick else 10_000)
    yield check_replay(ledger)
