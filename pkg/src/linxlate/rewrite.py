"""Single-pass rewriting with outside (root first) and inside (leaves
first) strategies, and the rule sets that turn one translation into a
simpler one."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional

from .formula import Atom, Bang, Formula, QUANT, children, dneg, is_dneg, with_children
from .syntax import parse, to_text
from . import xlate


class Strategy(str, Enum):
    OUTSIDE = "outside"
    INSIDE = "inside"


@dataclass(frozen=True)
class Meta(Formula):
    """Pattern metavariable standing for an arbitrary formula."""

    name: str


def _pattern(text: str) -> Formula:
    """Parse a rule side; single-letter atoms become metavariables and
    quantified variables become binder metavariables."""

    def conv(f: Formula) -> Formula:
        if isinstance(f, Atom) and len(f.name) == 1 and not f.args:
            return Meta(f.name)
        if isinstance(f, QUANT):
            return type(f)("$" + f.var, conv(f.body))
        kids = children(f)
        return with_children(f, tuple(conv(k) for k in kids)) if kids else f

    return conv(parse(text))


@dataclass(frozen=True)
class ReductionRule:
    name: str
    lhs: Formula
    rhs: Formula

    @classmethod
    def of(cls, lhs: str, rhs: str) -> "ReductionRule":
        return cls(f"{lhs} => {rhs}", _pattern(lhs), _pattern(rhs))


def match(pat: Formula, f: Formula, env: dict) -> Optional[dict]:
    if isinstance(pat, Meta):
        bound = env.get(pat.name)
        if bound is None:
            return {**env, pat.name: f}
        return env if bound == f else None
    if type(pat) is not type(f):
        return None
    if isinstance(pat, QUANT):
        bound = env.get(pat.var)
        if bound is not None and bound != f.var:
            return None
        return match(pat.body, f.body, {**env, pat.var: f.var})
    kids = children(pat)
    if not kids:
        return env if pat == f else None
    for p, c in zip(kids, children(f)):
        env = match(p, c, env)
        if env is None:
            return None
    return env


def instantiate(pat: Formula, env: dict) -> Formula:
    if isinstance(pat, Meta):
        return env[pat.name]
    if isinstance(pat, QUANT):
        return type(pat)(env[pat.var], instantiate(pat.body, env))
    kids = children(pat)
    return with_children(pat, tuple(instantiate(k, env) for k in kids)) if kids else pat


@dataclass(frozen=True)
class Firing:
    position: tuple  # child indices from the root
    rule: str
    before: Formula
    after: Formula

    def describe(self) -> str:
        pos = ".".join(map(str, self.position)) or "root"
        return f"{pos}: {self.rule}"


def apply(a: Formula, rules: Iterable[ReductionRule], strategy: Strategy | str,
          trace: Optional[list] = None) -> Formula:
    """Visit every position once; at each, the first matching rule fires."""
    rules = tuple(rules)
    strategy = Strategy(strategy)

    def at(f: Formula, pos: tuple) -> Formula:
        for r in rules:
            env = match(r.lhs, f, {})
            if env is not None:
                g = instantiate(r.rhs, env)
                if trace is not None:
                    trace.append(Firing(pos, r.name, f, g))
                return g
        return f

    def outside(f: Formula, pos: tuple) -> Formula:
        f = at(f, pos)
        kids = children(f)
        if not kids:
            return f
        return with_children(f, tuple(outside(k, pos + (i,)) for i, k in enumerate(kids)))

    strip = _marker(rules)

    def inside(f: Formula, pos: tuple) -> Formula:
        # Only positions where the marker is expected are rewrite sites:
        # below a marker prefix sits a connective whose operands are again
        # marker positions.  A bang that is itself a connective is skipped.
        split = strip(f) if strip else None
        if split is None:
            kids = children(f)
            if kids:
                f = with_children(f, tuple(inside(k, pos + (i,)) for i, k in enumerate(kids)))
            return at(f, pos)
        body, path, wrap = split
        kids = children(body)
        if kids:
            sub = pos + path
            body = with_children(body, tuple(inside(k, sub + (i,)) for i, k in enumerate(kids)))
        return at(wrap(body), pos)

    return (outside if strategy is Strategy.OUTSIDE else inside)(a, ())


def _strip_dneg(f: Formula):
    if is_dneg(f):
        return f.l.l, (0, 0), dneg
    return None


def _strip_bang(f: Formula):
    if isinstance(f, Bang):
        return f.f, (0,), Bang
    return None


def _marker(rules: tuple):
    """The prefix every left-hand side starts with, as a splitting function."""
    if rules and all(is_dneg(r.lhs) for r in rules):
        return _strip_dneg
    if rules and all(isinstance(r.lhs, Bang) for r in rules):
        return _strip_bang
    return None


# ------------------------------------------------------- simplifications

R = ReductionRule.of


@dataclass(frozen=True)
class Simplification:
    rules: tuple
    strategy: Strategy
    source: Callable[[Formula], Formula]
    target: Callable[[Formula], Formula]
    source_name: str
    target_name: str


class SimplificationId(str, Enum):
    GG_FROM_KOLM_O = "gg-from-kolm-outer"
    KURODA_FROM_KOLM_I = "kuroda-from-kolm-inner"
    STAR_FROM_GF_O = "star-from-gf-outer"
    CIRC_FROM_GF_I = "circ-from-gf-inner"
    LIN_GG_FROM_KOLM_O = "lgg-from-kolm-outer"
    LIN_KURODA_FROM_KOLM_I = "lkuroda-from-kolm-inner"


def _tr(which: str) -> Callable[[Formula], Formula]:
    return lambda a: xlate.translate(a, which)


SIMPLIFICATIONS: dict[SimplificationId, Simplification] = {
    SimplificationId.GG_FROM_KOLM_O: Simplification(
        (R("~~(~~A & ~~B)", "~~A & ~~B"),
         R("~~(~~A * ~~B)", "~~A * ~~B"),
         R("~~(~~A -o ~~B)", "~~A -o ~~B"),
         R("~~forall x. ~~A", "forall x. ~~A"),
         R("~~!~~A", "!~~A")),
        Strategy.OUTSIDE, _tr("kolm-outer"), _tr("gg"), "kolm-outer", "gg"),
    SimplificationId.KURODA_FROM_KOLM_I: Simplification(
        (R("~~(~~A * ~~B)", "~~(A * B)"),
         R("~~(~~A & ~~B)", "~~(A & B)"),
         R("~~(~~A + ~~B)", "~~(A + B)"),
         R("~~(~~A -o ~~B)", "~~(A -o B)"),
         R("~~exists x. ~~A", "~~exists x. A"),
         R("~~!~~A", "~~!A")),
        Strategy.INSIDE, _tr("kolm-inner"), _tr("kuroda"), "kolm-inner", "kuroda"),
    SimplificationId.STAR_FROM_GF_O: Simplification(
        (R("!(!A * !B)", "!A * !B"),
         R("!(!A + !B)", "!A + !B"),
         R("!exists x. !A", "exists x. !A"),
         R("!!!A", "!!A")),
        Strategy.OUTSIDE, _tr("gf-outer"), _tr("star"), "gf-outer", "star"),
    SimplificationId.CIRC_FROM_GF_I: Simplification(
        (R("!(!A & !B)", "!(A & B)"),
         R("!(!A -o !B)", "!(!A -o B)"),
         R("!forall x. !A", "!forall x. A"),
         R("!!!A", "!!A")),
        Strategy.INSIDE, _tr("gf-inner"), _tr("circ"), "gf-inner", "circ"),
    SimplificationId.LIN_GG_FROM_KOLM_O: Simplification(
        (R("~~(~~A & ~~B)", "~~A & ~~B"),
         R("~~(~~A -o ~~B)", "~~A -o ~~B"),
         R("~~forall x. ~~A", "forall x. ~~A")),
        Strategy.OUTSIDE, _tr("kolm-outer"), _tr("lgg"), "kolm-outer", "lgg"),
    SimplificationId.LIN_KURODA_FROM_KOLM_I: Simplification(
        (R("~~(~~A * ~~B)", "~~(A * B)"),
         R("~~(~~A + ~~B)", "~~(A + B)"),
         R("~~(~~A -o ~~B)", "~~(A -o ~~B)"),
         R("~~exists x. ~~A", "~~exists x. A")),
        Strategy.INSIDE, _tr("kolm-inner"), _tr("lkuroda"), "kolm-inner", "lkuroda"),
}


@dataclass
class ReportEntry:
    formula: Formula
    expected: Formula
    got: Formula

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def records(self) -> str:
        return "\n".join([
            f"formula={to_text(self.formula)}",
            f"expected={to_text(self.expected)}",
            f"got={to_text(self.got)}",
            f"status={'pass' if self.ok else 'fail'}",
        ])


@dataclass
class Report:
    simplification: SimplificationId
    entries: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def records(self) -> str:
        return "\n\n".join(e.records() for e in self.entries)


def simplify(a: Formula, which: SimplificationId | str,
             trace: Optional[list] = None) -> Formula:
    s = SIMPLIFICATIONS[SimplificationId(which)]
    return apply(a, s.rules, s.strategy, trace)


def check_simplification(which: SimplificationId | str, corpus: Iterable[Formula]) -> Report:
    """Rewrite the source translation of each formula and compare it with
    the target translation, syntactically."""
    which = SimplificationId(which)
    s = SIMPLIFICATIONS[which]
    report = Report(which)
    for a in corpus:
        got = apply(s.source(a), s.rules, s.strategy)
        report.entries.append(ReportEntry(a, s.target(a), got))
    return report
