"""Bounded backward proof search for intuitionistic linear sequents, with
the promotion (PRO) and double-negation (DNE) extensions as rules.

Search is iterative deepening over choice points.  Invertible rules
(implication/with/forall on the right, tensor/one/plus/exists on the left,
promotion with a banged context) are applied eagerly and cost nothing.
Contraction is bounded per formula.  ``NotFound`` never means unprovable.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union

from .formula import (
    App, Atom, Bang, Const, Exists, Forall, Formula, Lolli, One, Plus, QUANT, Sequent,
    Tensor, Top, Var, With, Zero, all_var_names, children, dneg, is_dneg,
    neg, substitute, subformulas, term_vars,
)
from .proofs import ILL, ProofNode, Theory, replay


@dataclass(frozen=True)
class Budget:
    max_depth: int = 24
    max_contractions: int = 2
    max_terms: int = 1
    timeout_ms: int = 10_000
    cut: bool = False


@dataclass(frozen=True)
class Proved:
    tree: ProofNode


@dataclass(frozen=True)
class NotFound:
    reason: str  # "budget-exhausted" | "saturated"


ProofResult = Union[Proved, NotFound]


class _Timeout(Exception):
    pass


@lru_cache(maxsize=None)
def _key(f: Formula) -> str:
    kids = children(f)
    if isinstance(f, Atom):
        return f"{f.name}{f.args!r}" if f.args else f.name
    head = type(f).__name__
    if isinstance(f, QUANT):
        return f"{head} {f.var}({_key(f.body)})"
    if not kids:
        return head
    return f"{head}({','.join(_key(k) for k in kids)})"


def _sort(fs) -> tuple:
    return tuple(sorted(fs, key=_key))


def _drop(ctx: tuple, f: Formula) -> tuple:
    i = ctx.index(f)
    return ctx[:i] + ctx[i + 1:]


def _closed_terms(fs) -> list:
    """Terms occurring in atom arguments whose variables are all free."""
    out: dict = {}

    def walk(f: Formula, bound: frozenset) -> None:
        if isinstance(f, Atom):
            for t in f.args:
                if not (term_vars(t) & bound):
                    out.setdefault(_term_key(t), t)
            return
        if isinstance(f, QUANT):
            walk(f.body, bound | {f.var})
            return
        for c in children(f):
            walk(c, bound)

    for f in fs:
        walk(f, frozenset())
    return [out[k] for k in sorted(out)]


def _term_key(t) -> str:
    if isinstance(t, App):
        return f"{t.fn}({','.join(_term_key(a) for a in t.args)})"
    return ("v:" if isinstance(t, Var) else "c:") + t.name


def _names_in(fs) -> set:
    names: set = set()
    for f in fs:
        names |= all_var_names(f)
        for g in subformulas(f):
            if isinstance(g, Atom):
                for t in g.args:
                    names |= _const_names(t)
    return names


def _const_names(t) -> set:
    if isinstance(t, Const):
        return {t.name}
    if isinstance(t, App):
        out = set()
        for a in t.args:
            out |= _const_names(a)
        return out
    return set()


class _Search:
    def __init__(self, theory: Theory, budget: Budget, axioms: tuple):
        self.th = theory
        self.b = budget
        self.axioms = axioms
        self.proved: dict = {}
        self.failed: dict = {}
        self.cutoffs = 0
        self.steps = 0
        self.deadline = time.monotonic() + budget.timeout_ms / 1000.0

    # ------------------------------------------------------- structure

    def reusable(self, f: Formula) -> bool:
        return isinstance(f, Bang) or self.th.pro

    def weaken(self, ctx: tuple, goal: Formula, f: Formula, prem: ProofNode) -> ProofNode:
        """Conclusion ``ctx |- goal`` (containing f) from a premise without f."""
        if isinstance(f, Bang):
            return ProofNode("wkn", ctx, goal, (prem,), principal=f)
        banged = _sort(_drop(ctx, f) + (Bang(f),))
        w = ProofNode("wkn", banged, goal, (prem,), principal=Bang(f))
        return ProofNode("PRO-L", ctx, goal, (w,), principal=f)

    def contract(self, ctx: tuple, goal: Formula, f: Formula, prem: ProofNode) -> ProofNode:
        """Conclusion ``ctx |- goal`` from a premise holding one more f."""
        if isinstance(f, Bang):
            return ProofNode("con", ctx, goal, (prem,), principal=f)
        rest = _drop(ctx, f)
        bf = Bang(f)
        n1 = ProofNode("!L", _sort(rest + (bf, f)), goal, (prem,), principal=bf)
        n2 = ProofNode("!L", _sort(rest + (bf, bf)), goal, (n1,), principal=bf)
        n3 = ProofNode("con", _sort(rest + (bf,)), goal, (n2,), principal=bf)
        return ProofNode("PRO-L", ctx, goal, (n3,), principal=f)

    def with_weakening(self, ctx: tuple, goal: Formula, extras: tuple,
                       leaf: ProofNode) -> ProofNode:
        node, cur = leaf, leaf.hyps
        for f in extras:
            nxt = _sort(cur + (f,))
            node = self.weaken(nxt, goal, f, node)
            cur = nxt
        return node

    def with_copies(self, ctx: tuple, goal: Formula, copies: tuple,
                    build) -> Optional[ProofNode]:
        """Wrap a node built over ``ctx + copies`` in contractions."""
        chain = [ctx]
        for f in copies:
            chain.append(_sort(chain[-1] + (f,)))
        node = build(chain[-1])
        for i in range(len(copies) - 1, -1, -1):
            node = self.contract(chain[i], goal, copies[i], node)
        return node

    def bump(self, cons: tuple, f: Formula) -> Optional[tuple]:
        d = dict(cons)
        k = _key(f)
        if d.get(k, 0) >= self.b.max_contractions:
            self.cutoffs += 1
            return None
        d[k] = d.get(k, 0) + 1
        return tuple(sorted(d.items()))

    # ------------------------------------------------------------- run

    def run(self, seq: Sequent) -> ProofResult:
        ctx = _sort(seq.hyps)
        try:
            for d in range(0, self.b.max_depth + 1):
                self.cutoffs = 0
                tree = self.search(ctx, seq.goal, (), d)
                if tree is not None:
                    return Proved(tree)
                if self.cutoffs == 0:
                    return NotFound("saturated")
        except _Timeout:
            pass
        except RecursionError:
            pass
        return NotFound("budget-exhausted")

    def search(self, ctx: tuple, goal: Formula, cons: tuple, d: int) -> Optional[ProofNode]:
        if self.th.pro:
            # every hypothesis can be contracted and weakened: work with sets
            uniq = tuple(dict.fromkeys(ctx))
            if len(uniq) != len(ctx):
                extras = list(ctx)
                for f in uniq:
                    extras.remove(f)
                sub = self.search(uniq, goal, (), d)
                if sub is None:
                    return None
                return self.with_weakening(ctx, goal, tuple(extras), sub)
            cons = ()
        key = (ctx, goal, cons)
        hit = self.proved.get(key)
        if hit is not None:
            return hit
        fail = self.failed.get(key)
        if fail is not None and (fail[1] or fail[0] >= d):
            if not fail[1]:
                self.cutoffs += 1
            return None
        self.steps += 1
        if self.steps % 512 == 0 and time.monotonic() > self.deadline:
            raise _Timeout()
        c0 = self.cutoffs
        tree = self._search(ctx, goal, cons, d)
        if tree is not None:
            self.proved[key] = tree
        else:
            complete = self.cutoffs == c0
            prev = self.failed.get(key)
            depth = max(d, prev[0]) if prev else d
            self.failed[key] = (depth, complete or bool(prev and prev[1]))
        return tree

    def _search(self, ctx, goal, cons, d):
        tree = self.close(ctx, goal)
        if tree is not None:
            return tree
        inv = self.invertible(ctx, goal)
        if inv is not None:
            build, subgoals = inv
            prems = []
            for c, g in subgoals:
                p = self.search(c, g, cons, d)
                if p is None:
                    return None
                prems.append(p)
            return build(prems)
        if d == 0:
            self.cutoffs += 1
            return None
        for build, subgoals in self.moves(ctx, goal, cons):
            prems = []
            for c, g, cs in subgoals:
                p = self.search(c, g, cs, d - 1)
                if p is None:
                    break
                prems.append(p)
            else:
                return build(prems)
        return None

    # ---------------------------------------------------------- axioms

    def close(self, ctx: tuple, goal: Formula) -> Optional[ProofNode]:
        if isinstance(goal, Top):
            return ProofNode("⊤R", ctx, goal)
        if Zero() in ctx:
            return ProofNode("0L", ctx, goal, principal=Zero())
        if goal in ctx:
            rest = _drop(ctx, goal)
            if all(self.reusable(f) for f in rest):
                return self.with_weakening(ctx, goal, rest, ProofNode("id", (goal,), goal))
        if isinstance(goal, One) and all(self.reusable(f) for f in ctx):
            return self.with_weakening(ctx, goal, ctx, ProofNode("1R", (), goal))
        for ax in self.axioms:
            if ax.goal != goal:
                continue
            rest = _sub(ctx, ax.hyps)
            if rest is not None and all(self.reusable(f) for f in rest):
                leaf = ProofNode("axiom", _sort(ax.hyps), goal)
                return self.with_weakening(ctx, goal, rest, leaf)
        return None

    # ------------------------------------------------------ invertible

    def fresh_var(self, fs) -> Var:
        used = _names_in(fs)
        for i in itertools.count(1):
            if f"v{i}" not in used:
                return Var(f"v{i}")

    def invertible(self, ctx: tuple, goal: Formula):
        if isinstance(goal, Lolli):
            c = _sort(ctx + (goal.l,))
            return (lambda ps: ProofNode("⊸R", ctx, goal, tuple(ps)), [(c, goal.r)])
        if isinstance(goal, With):
            return (lambda ps: ProofNode("&R", ctx, goal, tuple(ps)),
                    [(ctx, goal.l), (ctx, goal.r)])
        if isinstance(goal, Forall):
            y = self.fresh_var(ctx + (goal,))
            return (lambda ps: ProofNode("∀R", ctx, goal, tuple(ps), term=y),
                    [(ctx, substitute(goal.body, goal.var, y))])
        if isinstance(goal, Bang):
            if self.th.pro:
                return (lambda ps: ProofNode("PRO", ctx, goal, tuple(ps)), [(ctx, goal.f)])
            if all(isinstance(f, Bang) for f in ctx):
                return (lambda ps: ProofNode("!R", ctx, goal, tuple(ps)), [(ctx, goal.f)])
        for f in ctx:
            if isinstance(f, One):
                rest = _drop(ctx, f)
                return (lambda ps, f=f: ProofNode("1L", ctx, goal, tuple(ps), principal=f),
                        [(rest, goal)])
            if isinstance(f, Tensor):
                c = _sort(_drop(ctx, f) + (f.l, f.r))
                return (lambda ps, f=f: ProofNode("⊗L", ctx, goal, tuple(ps), principal=f),
                        [(c, goal)])
            if isinstance(f, Plus):
                rest = _drop(ctx, f)
                return (lambda ps, f=f: ProofNode("⊕L", ctx, goal, tuple(ps), principal=f),
                        [(_sort(rest + (f.l,)), goal), (_sort(rest + (f.r,)), goal)])
            if isinstance(f, Exists):
                y = self.fresh_var(ctx + (goal,))
                c = _sort(_drop(ctx, f) + (substitute(f.body, f.var, y),))
                return (lambda ps, f=f, y=y: ProofNode("∃L", ctx, goal, tuple(ps),
                                                       principal=f, term=y),
                        [(c, goal)])
        return None

    # ------------------------------------------------------- choices

    def term_pool(self, ctx: tuple, goal: Formula) -> list:
        fs = ctx + (goal,)
        pool = _closed_terms(fs)
        used = _names_in(fs)
        fresh = []
        for i in itertools.count(1):
            if len(fresh) >= self.b.max_terms:
                break
            if f"c{i}" not in used:
                fresh.append(Const(f"c{i}"))
        return pool + fresh

    def splits(self, rest: tuple, cons: tuple) -> Iterator[tuple]:
        """Ways to share ``rest`` between two premises: (left, right, copies, cons)."""
        items = list(rest)
        opts = []
        for f in items:
            opts.append((0, 1, 2) if self.reusable(f) else (0, 1))
        seen = set()
        for choice in itertools.product(*opts):
            left, right, copies = [], [], []
            cs = cons
            ok = True
            for f, c in zip(items, choice):
                if c == 0:
                    left.append(f)
                elif c == 1:
                    right.append(f)
                else:
                    cs = self.bump(cs, f)
                    if cs is None:
                        ok = False
                        break
                    left.append(f)
                    right.append(f)
                    copies.append(f)
            if not ok:
                continue
            sig = (_sort(left), _sort(right))
            if sig in seen:
                continue
            seen.add(sig)
            yield _sort(left), _sort(right), tuple(copies), cs

    def uses(self, ctx: tuple, f: Formula, cons: tuple):
        """Remove f from ctx, optionally keeping a contracted copy."""
        rest = _drop(ctx, f)
        yield rest, (), cons
        if self.reusable(f):
            cs = self.bump(cons, f)
            if cs is not None:
                yield ctx, (f,), cs

    def moves(self, ctx: tuple, goal: Formula, cons: tuple):
        if self.th.pro:
            yield from self.shared_moves(ctx, goal)
            return
        seen_f = set()
        for f in ctx:
            if f in seen_f:
                continue
            seen_f.add(f)
            yield from self.left_moves(ctx, goal, cons, f)
        yield from self.right_moves(ctx, goal, cons)
        if self.th.dne:
            for f in dict.fromkeys(ctx):
                if is_dneg(f):
                    c = _sort(_drop(ctx, f) + (f.l.l,))
                    yield (lambda ps, f=f: ProofNode("DNE-L", ctx, goal, tuple(ps), principal=f),
                           [(c, goal, cons)])
            if not isinstance(goal, Zero):
                c = _sort(ctx + (neg(goal),))
                yield (lambda ps: ProofNode("DNE-R", ctx, goal, (
                    ProofNode("⊸R", ctx, dneg(goal), tuple(ps)),)),
                       [(c, Zero(), cons)])
        yield from self.axiom_cuts(ctx, goal, cons)
        if self.b.cut:
            yield from self.analytic_cuts(ctx, goal, cons)

    def shared_moves(self, ctx, goal):
        """Moves when every hypothesis is reusable: principals are kept and
        both premises of a split receive the whole context."""
        def keep(f, rule, part, **kw):
            c = _sort(ctx + (part,))
            full = _sort(ctx + (f,))
            return (lambda ps: self.contract(ctx, goal, f, ProofNode(
                rule, full, goal, tuple(ps), principal=f, **kw))), [(c, goal, ())]

        for f in ctx:
            if isinstance(f, Bang) and f.f not in ctx:
                yield keep(f, "!L", f.f)
            elif isinstance(f, With):
                for side, part in ((0, f.l), (1, f.r)):
                    if part not in ctx:
                        yield keep(f, "&L", part, side=side)
            elif isinstance(f, Forall):
                for t in self.term_pool(ctx, goal):
                    part = substitute(f.body, f.var, t)
                    if part not in ctx:
                        yield keep(f, "∀L", part, term=t)
            elif isinstance(f, Lolli) and f.r not in ctx:
                copies = (f,) + ctx
                yield (self._lolli_builder(ctx, goal, f, ctx, ctx, copies),
                       [(ctx, f.l, ()), (_sort(ctx + (f.r,)), goal, ())])
        yield from self.right_moves(ctx, goal, ())
        if self.th.dne:
            for f in ctx:
                if is_dneg(f) and f.l.l not in ctx:
                    yield keep(f, "DNE-L", f.l.l)
            if not isinstance(goal, Zero) and neg(goal) not in ctx:
                c = _sort(ctx + (neg(goal),))
                yield (lambda ps: ProofNode("DNE-R", ctx, goal, (
                    ProofNode("⊸R", ctx, dneg(goal), tuple(ps)),)),
                       [(c, Zero(), ())])
        for ax in self.axioms:
            if _sub(ctx, ax.hyps) is None or ax.goal in ctx:
                continue
            c = _sort(ctx + (ax.goal,))
            axnode = ProofNode("axiom", _sort(ax.hyps), ax.goal)
            yield (lambda ps, ax=ax, axnode=axnode: self.with_copies(
                ctx, goal, ax.hyps, lambda full: ProofNode("cut", full, goal, (axnode,) + tuple(ps))),
                   [(c, goal, ())])

    def left_moves(self, ctx, goal, cons, f):
        def wrap(base_ctx, copies, node_builder):
            return lambda ps: self.with_copies(ctx, goal, copies, lambda c: node_builder(c, ps))

        if isinstance(f, Bang):
            for rest, copies, cs in self.uses(ctx, f, cons):
                c = _sort(rest + (f.f,))
                yield (wrap(rest, copies, lambda full, ps, f=f: ProofNode(
                    "!L", full, goal, tuple(ps), principal=f)), [(c, goal, cs)])
            return
        if isinstance(f, With):
            for rest, copies, cs in self.uses(ctx, f, cons):
                for side, part in ((0, f.l), (1, f.r)):
                    c = _sort(rest + (part,))
                    yield (wrap(rest, copies, lambda full, ps, f=f, side=side: ProofNode(
                        "&L", full, goal, tuple(ps), principal=f, side=side)), [(c, goal, cs)])
            return
        if isinstance(f, Forall):
            for rest, copies, cs in self.uses(ctx, f, cons):
                for t in self.term_pool(ctx, goal):
                    c = _sort(rest + (substitute(f.body, f.var, t),))
                    yield (wrap(rest, copies, lambda full, ps, f=f, t=t: ProofNode(
                        "∀L", full, goal, tuple(ps), principal=f, term=t)), [(c, goal, cs)])
            return
        if isinstance(f, Lolli):
            for rest, copies, cs in self.uses(ctx, f, cons):
                # when keeping f, the kept copy is an ordinary member of the split
                base = _drop(ctx, f)
                pool = base + ((f,) if copies else ())
                for left, right, split_copies, cs2 in self.splits(_sort(pool), cs):
                    all_copies = copies + split_copies
                    yield (self._lolli_builder(ctx, goal, f, left, right, all_copies),
                           [(left, f.l, cs2), (_sort(right + (f.r,)), goal, cs2)])

    def _lolli_builder(self, ctx, goal, f, left, right, copies):
        def build(ps):
            return self.with_copies(ctx, goal, copies, lambda full: ProofNode(
                "⊸L", full, goal, tuple(ps), principal=f))
        return build

    def right_moves(self, ctx, goal, cons):
        if isinstance(goal, Tensor) and self.th.pro:
            yield (lambda ps: self.with_copies(
                ctx, goal, ctx, lambda full: ProofNode("⊗R", full, goal, tuple(ps))),
                   [(ctx, goal.l, ()), (ctx, goal.r, ())])
        elif isinstance(goal, Tensor):
            for left, right, copies, cs in self.splits(ctx, cons):
                yield (lambda ps, copies=copies: self.with_copies(
                    ctx, goal, copies, lambda full: ProofNode("⊗R", full, goal, tuple(ps))),
                       [(left, goal.l, cs), (right, goal.r, cs)])
        elif isinstance(goal, Plus):
            for side, part in ((0, goal.l), (1, goal.r)):
                yield (lambda ps, side=side: ProofNode("⊕R", ctx, goal, tuple(ps), side=side),
                       [(ctx, part, cons)])
        elif isinstance(goal, Exists):
            for t in self.term_pool(ctx, goal):
                yield (lambda ps, t=t: ProofNode("∃R", ctx, goal, tuple(ps), term=t),
                       [(ctx, substitute(goal.body, goal.var, t), cons)])

    def axiom_cuts(self, ctx, goal, cons):
        for ax in self.axioms:
            rest = _sub(ctx, ax.hyps)
            if rest is None:
                continue
            c = _sort(rest + (ax.goal,))
            axnode = ProofNode("axiom", _sort(ax.hyps), ax.goal)
            yield (lambda ps, axnode=axnode: ProofNode("cut", ctx, goal, (axnode,) + tuple(ps)),
                   [(c, goal, cons)])

    def analytic_cuts(self, ctx, goal, cons):
        cands = []
        for f in ctx:
            for g in subformulas(f):
                if g not in cands and g not in ctx and not isinstance(g, (Atom, Zero, Top, One)):
                    cands.append(g)
        for a in cands:
            for left, right, copies, cs in self.splits(ctx, cons):
                yield (lambda ps, copies=copies: self.with_copies(
                    ctx, goal, copies, lambda full: ProofNode("cut", full, goal, tuple(ps))),
                       [(left, a, cs), (_sort(right + (a,)), goal, cs)])


def _sub(ctx: tuple, part: tuple) -> Optional[tuple]:
    rest = list(ctx)
    for f in part:
        if f not in rest:
            return None
        rest.remove(f)
    return tuple(rest)


def prove(s: Sequent, th: Theory = ILL, b: Budget = Budget(),
          axioms: tuple = ()) -> ProofResult:
    return _Search(th, b, tuple(axioms)).run(s)


@dataclass(frozen=True)
class Equivalent:
    forward: ProofNode
    backward: ProofNode


@dataclass(frozen=True)
class Unknown:
    forward: ProofResult
    backward: ProofResult


def _congruent(a: Formula, b: Formula, th: Theory, bud: Budget) -> Optional[ProofNode]:
    """A proof of ``a |- b`` assembled from proofs of matching components,
    or None when the outer shapes differ or a component is not found."""
    if a == b:
        return ProofNode("id", (a,), a)
    if isinstance(a, Bang) and not isinstance(b, Bang):
        p = _congruent(a.f, b, th, bud)
        return None if p is None else ProofNode("!L", (a,), b, (p,), principal=a)
    if type(a) is not type(b) or not children(a):
        return None
    if isinstance(a, Bang):
        p = entails(a.f, b.f, th, bud)
        if p is None:
            return None
        return ProofNode("!R", (a,), b, (ProofNode("!L", (a,), b.f, (p,), principal=a),))
    if isinstance(a, Lolli):
        p1 = entails(b.l, a.l, th, bud)
        p2 = p1 and entails(a.r, b.r, th, bud)
        if p2 is None:
            return None
        inner = ProofNode("⊸L", _sort((a, b.l)), b.r, (p1, p2), principal=a)
        return ProofNode("⊸R", (a,), b, (inner,))
    if isinstance(a, (Tensor, With, Plus)):
        p1 = entails(a.l, b.l, th, bud)
        p2 = p1 and entails(a.r, b.r, th, bud)
        if p2 is None:
            return None
        if isinstance(a, Tensor):
            split = ProofNode("⊗R", _sort((a.l, a.r)), b, (p1, p2))
            return ProofNode("⊗L", (a,), b, (split,), principal=a)
        if isinstance(a, With):
            return ProofNode("&R", (a,), b, (
                ProofNode("&L", (a,), b.l, (p1,), principal=a, side=0),
                ProofNode("&L", (a,), b.r, (p2,), principal=a, side=1)))
        return ProofNode("⊕L", (a,), b, (
            ProofNode("⊕R", (a.l,), b, (p1,), side=0),
            ProofNode("⊕R", (a.r,), b, (p2,), side=1)), principal=a)
    if isinstance(a, (Forall, Exists)):
        used = all_var_names(a) | all_var_names(b)
        v = next(Var(f"v{i}") for i in itertools.count(1) if f"v{i}" not in used)
        ia, ib = substitute(a.body, a.var, v), substitute(b.body, b.var, v)
        p = entails(ia, ib, th, bud)
        if p is None:
            return None
        if isinstance(a, Forall):
            return ProofNode("∀R", (a,), b, (
                ProofNode("∀L", (a,), ib, (p,), principal=a, term=v),), term=v)
        return ProofNode("∃L", (a,), b, (
            ProofNode("∃R", (ia,), b, (p,), term=v),), principal=a, term=v)
    return None


def entails(a: Formula, b: Formula, th: Theory = ILL, bud: Budget = Budget()) -> Optional[ProofNode]:
    """A proof of ``a |- b``: componentwise when the shapes agree, by full
    search otherwise."""
    p = _congruent(a, b, th, bud)
    if p is not None:
        return p
    res = prove(Sequent((a,), b), th, bud)
    return res.tree if isinstance(res, Proved) else None


def check_equiv(a: Formula, b: Formula, th: Theory = ILL, bud: Budget = Budget()):
    fw = _congruent(a, b, th, bud)
    fw = Proved(fw) if fw is not None else prove(Sequent((a,), b), th, bud)
    bw = _congruent(b, a, th, bud)
    bw = Proved(bw) if bw is not None else prove(Sequent((b,), a), th, bud)
    if isinstance(fw, Proved) and isinstance(bw, Proved):
        return Equivalent(fw.tree, bw.tree)
    return Unknown(fw, bw)


def check_derived_rule(premise: Sequent, conclusion: Sequent, th: Theory = ILL,
                       bud: Budget = Budget()) -> bool:
    """Is ``conclusion`` provable once ``premise`` (already instantiated with
    fresh atoms for its metavariables) is available as an axiom?"""
    res = prove(conclusion, th, bud, axioms=(premise,))
    if isinstance(res, Proved):
        replay(res.tree, th, axioms=(premise,))
        return True
    return False
