"""Proof trees, theories, and an independent replay checker.

The checker shares no code with the search: it re-derives every node's
conclusion from its premises using only the rule definitions below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .formula import (
    Bang, Exists, Forall, Formula, Lolli, One, Plus, Sequent, Tensor, Top, Var, With,
    Zero, free_vars, is_dneg, substitute,
)
from .syntax import sequent_text


@dataclass(frozen=True)
class Theory:
    pro: bool = False
    dne: bool = False

    @property
    def name(self) -> str:
        return {(False, False): "ill", (True, False): "ilb",
                (False, True): "cllb", (True, True): "clb"}[(self.pro, self.dne)]

    @classmethod
    def named(cls, name: str) -> "Theory":
        return THEORIES[name]


ILL = Theory()
IL_B = Theory(pro=True)
CLL_B = Theory(dne=True)
CL_B = Theory(pro=True, dne=True)
THEORIES = {"ill": ILL, "ilb": IL_B, "cllb": CLL_B, "clb": CL_B}


@dataclass(frozen=True)
class ProofNode:
    rule: str
    hyps: tuple
    goal: Formula
    premises: tuple = ()
    principal: Optional[Formula] = None
    term: object = None        # instantiation term or eigenvariable
    side: Optional[int] = None  # 0/1 for &L and +R

    @property
    def sequent(self) -> Sequent:
        return Sequent(self.hyps, self.goal)

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)

    def rules_used(self) -> set:
        out = {self.rule}
        for p in self.premises:
            out |= p.rules_used()
        return out

    def to_text(self, indent: int = 0) -> str:
        lines: list[str] = []

        def go(n: ProofNode, lvl: int) -> None:
            lines.append(f"{'  ' * lvl}{n.rule}: {sequent_text(n.sequent, 'ill')}")
            for p in n.premises:
                go(p, lvl + 1)

        go(self, indent)
        return "\n".join(lines)


# ------------------------------------------------------------ replay

class ReplayError(Exception):
    pass


def _ms(xs) -> Counter:
    return Counter(xs)


def _fail(node: ProofNode, why: str) -> None:
    raise ReplayError(f"{node.rule} at [{sequent_text(node.sequent, 'ill')}]: {why}")


def _minus(big: Counter, small: Counter) -> Optional[Counter]:
    if any(big[k] < v for k, v in small.items()):
        return None
    out = big.copy()
    out.subtract(small)
    return +out


def _free_in(name: str, fs) -> bool:
    return any(name in free_vars(f) for f in fs)


def replay(node: ProofNode, theory: Theory, axioms: tuple = ()) -> None:
    """Raise ``ReplayError`` unless every node is a correct rule instance."""
    stack = [node]
    while stack:
        n = stack.pop()
        _check_node(n, theory, axioms)
        stack.extend(n.premises)


def replays(node: ProofNode, theory: Theory, axioms: tuple = ()) -> bool:
    try:
        replay(node, theory, axioms)
        return True
    except ReplayError:
        return False


def _check_node(n: ProofNode, th: Theory, axioms: tuple) -> None:
    ctx, goal, ps, r = _ms(n.hyps), n.goal, n.premises, n.rule
    arity = {"id": 0, "1R": 0, "⊤R": 0, "0L": 0, "axiom": 0,
             "⊗R": 2, "⊸L": 2, "&R": 2, "⊕L": 2, "cut": 2}.get(r, 1)
    if len(ps) != arity:
        _fail(n, f"expected {arity} premises, got {len(ps)}")
    p = [(_ms(q.hyps), q.goal) for q in ps]

    def removed(f: Formula) -> Counter:
        rest = _minus(ctx, _ms([f]))
        if rest is None:
            _fail(n, "principal formula missing from the context")
        return rest

    def same(c1: Counter, c2: Counter) -> bool:
        return +c1 == +c2

    pf = n.principal
    if r == "id":
        if not same(ctx, _ms([goal])):
            _fail(n, "context must be exactly the conclusion")
    elif r == "1R":
        if not (isinstance(goal, One) and not ctx):
            _fail(n, "needs empty context and conclusion 1")
    elif r == "⊤R":
        if not isinstance(goal, Top):
            _fail(n, "conclusion must be top")
    elif r == "0L":
        if ctx[Zero()] < 1:
            _fail(n, "no 0 among the hypotheses")
    elif r == "axiom":
        if not any(same(ctx, _ms(ax.hyps)) and goal == ax.goal for ax in axioms):
            _fail(n, "not an instance of a supplied axiom")
    elif r == "1L":
        rest = removed(One())
        if not (same(p[0][0], rest) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "⊗R":
        if not isinstance(goal, Tensor):
            _fail(n, "conclusion must be a tensor")
        if not (same(p[0][0] + p[1][0], ctx) and p[0][1] == goal.l and p[1][1] == goal.r):
            _fail(n, "premises do not split the context")
    elif r == "⊗L":
        if not isinstance(pf, Tensor):
            _fail(n, "principal must be a tensor")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([pf.l, pf.r])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "⊸R":
        if not isinstance(goal, Lolli):
            _fail(n, "conclusion must be an implication")
        if not (same(p[0][0], ctx + _ms([goal.l])) and p[0][1] == goal.r):
            _fail(n, "bad premise")
    elif r == "⊸L":
        if not isinstance(pf, Lolli):
            _fail(n, "principal must be an implication")
        rest = removed(pf)
        (c1, g1), (c2, g2) = p
        b = _minus(c2, _ms([pf.r]))
        if b is None or g1 != pf.l or g2 != goal or not same(c1 + b, rest):
            _fail(n, "premises do not match")
    elif r == "&R":
        if not isinstance(goal, With):
            _fail(n, "conclusion must be a with")
        if not (same(p[0][0], ctx) and same(p[1][0], ctx)
                and p[0][1] == goal.l and p[1][1] == goal.r):
            _fail(n, "bad premises")
    elif r == "&L":
        if not isinstance(pf, With):
            _fail(n, "principal must be a with")
        rest = removed(pf)
        if not any(same(p[0][0], rest + _ms([part])) for part in (pf.l, pf.r)) or p[0][1] != goal:
            _fail(n, "bad premise")
    elif r == "⊕R":
        if not isinstance(goal, Plus):
            _fail(n, "conclusion must be a plus")
        if not (same(p[0][0], ctx) and p[0][1] in (goal.l, goal.r)):
            _fail(n, "bad premise")
    elif r == "⊕L":
        if not isinstance(pf, Plus):
            _fail(n, "principal must be a plus")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([pf.l])) and same(p[1][0], rest + _ms([pf.r]))
                and p[0][1] == goal and p[1][1] == goal):
            _fail(n, "bad premises")
    elif r == "∀R":
        if not isinstance(goal, Forall) or not isinstance(n.term, Var):
            _fail(n, "needs a universal conclusion and an eigenvariable")
        y = n.term.name
        if _free_in(y, list(ctx) + [goal]):
            _fail(n, "eigenvariable occurs free in the conclusion")
        if not (same(p[0][0], ctx) and p[0][1] == substitute(goal.body, goal.var, n.term)):
            _fail(n, "bad premise")
    elif r == "∀L":
        if not isinstance(pf, Forall):
            _fail(n, "principal must be universal")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([substitute(pf.body, pf.var, n.term)])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "∃R":
        if not isinstance(goal, Exists):
            _fail(n, "conclusion must be existential")
        if not (same(p[0][0], ctx) and p[0][1] == substitute(goal.body, goal.var, n.term)):
            _fail(n, "bad premise")
    elif r == "∃L":
        if not isinstance(pf, Exists) or not isinstance(n.term, Var):
            _fail(n, "needs an existential principal and an eigenvariable")
        y = n.term.name
        if _free_in(y, list(ctx) + [goal]):
            _fail(n, "eigenvariable occurs free in the conclusion")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([substitute(pf.body, pf.var, n.term)])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "wkn":
        if not isinstance(pf, Bang):
            _fail(n, "only banged formulas can be weakened")
        rest = removed(pf)
        if not (same(p[0][0], rest) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "con":
        if not isinstance(pf, Bang):
            _fail(n, "only banged formulas can be contracted")
        removed(pf)
        if not (same(p[0][0], ctx + _ms([pf])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "!L":
        if not isinstance(pf, Bang):
            _fail(n, "principal must be banged")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([pf.f])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "!R":
        if not isinstance(goal, Bang) or not all(isinstance(h, Bang) for h in ctx):
            _fail(n, "promotion needs a banged context and conclusion")
        if not (same(p[0][0], ctx) and p[0][1] == goal.f):
            _fail(n, "bad premise")
    elif r == "PRO":
        if not th.pro:
            _fail(n, "theory has no promotion axiom")
        if not isinstance(goal, Bang) or not (same(p[0][0], ctx) and p[0][1] == goal.f):
            _fail(n, "bad premise")
    elif r == "PRO-L":
        if not th.pro:
            _fail(n, "theory has no promotion axiom")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([Bang(pf)])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "DNE-R":
        if not th.dne:
            _fail(n, "theory has no double negation elimination")
        if not (same(p[0][0], ctx) and p[0][1] == Lolli(Lolli(goal, Zero()), Zero())):
            _fail(n, "premise must conclude the double negation")
    elif r == "DNE-L":
        if not th.dne:
            _fail(n, "theory has no double negation elimination")
        if not is_dneg(pf):
            _fail(n, "principal must be a double negation")
        rest = removed(pf)
        if not (same(p[0][0], rest + _ms([pf.l.l])) and p[0][1] == goal):
            _fail(n, "bad premise")
    elif r == "cut":
        (c1, g1), (c2, g2) = p
        b = _minus(c2, _ms([g1]))
        if b is None or g2 != goal or not same(c1 + b, ctx):
            _fail(n, "premises do not compose")
    else:
        _fail(n, "unknown rule")
