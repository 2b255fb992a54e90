"""Abstract syntax for the intuitionistic linear, intuitionistic and classical
linear formula languages, with substitution and alpha-equivalence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


def _node(cls):
    """Frozen dataclass whose structural hash is computed once."""
    cls = dataclass(frozen=True)(cls)
    structural = cls.__hash__

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = structural(self)
            object.__setattr__(self, "_hash", h)
        return h

    cls.__hash__ = __hash__
    return cls


# ---------------------------------------------------------------- terms

@_node
class Var:
    name: str


@_node
class Const:
    name: str


@_node
class App:
    fn: str
    args: tuple


Term = Union[Var, Const, App]


def is_var_name(name: str) -> bool:
    """Term identifiers starting with u..z denote variables."""
    return name[:1] in "uvwxyz"


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, App):
        out: set[str] = set()
        for a in t.args:
            out |= term_vars(a)
        return out
    return set()


def subst_term(t: Term, x: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == x else t
    if isinstance(t, App):
        return App(t.fn, tuple(subst_term(a, x, s) for a in t.args))
    return t


# ------------------------------------------------------------- formulas

class Formula:
    """Base class for every formula node, in all three languages."""

    __slots__ = ()


@_node
class Atom(Formula):
    name: str
    args: tuple = ()


@_node
class Top(Formula):
    pass


@_node
class Zero(Formula):
    pass


@_node
class One(Formula):
    pass


@_node
class Tensor(Formula):
    l: Formula
    r: Formula


@_node
class With(Formula):
    l: Formula
    r: Formula


@_node
class Plus(Formula):
    l: Formula
    r: Formula


@_node
class Lolli(Formula):
    l: Formula
    r: Formula


@_node
class Bang(Formula):
    f: Formula


@_node
class Forall(Formula):
    var: str
    body: Formula


@_node
class Exists(Formula):
    var: str
    body: Formula


# intuitionistic source language

@_node
class Bot(Formula):
    """Falsum; shared by the intuitionistic and classical linear sources."""


@_node
class TopIL(Formula):
    pass


@_node
class And(Formula):
    l: Formula
    r: Formula


@_node
class Or(Formula):
    l: Formula
    r: Formula


@_node
class Imp(Formula):
    l: Formula
    r: Formula


@_node
class ForallIL(Formula):
    var: str
    body: Formula


@_node
class ExistsIL(Formula):
    var: str
    body: Formula


# classical linear source language: reuses Top/Zero/One/Tensor/With/Plus,
# Forall/Exists and Bang; adds a primitive par and why-not.

@_node
class Par(Formula):
    l: Formula
    r: Formula


@_node
class QuestC(Formula):
    f: Formula


BangC = Bang

TOP, ZERO, ONE, BOT, TOP_IL = Top(), Zero(), One(), Bot(), TopIL()

BINARY = (Tensor, With, Plus, Lolli, And, Or, Imp, Par)
UNARY = (Bang, QuestC)
QUANT = (Forall, Exists, ForallIL, ExistsIL)
CONSTANTS = (Top, Zero, One, Bot, TopIL)

ILL_NODES = (Atom, Top, Zero, One, Tensor, With, Plus, Lolli, Bang, Forall, Exists)
IL_NODES = (Atom, Bot, TopIL, And, Or, Imp, ForallIL, ExistsIL)
CLL_NODES = (Atom, Top, Zero, One, Bot, Tensor, With, Plus, Par, Bang, QuestC,
             Forall, Exists)


def in_language(a: Formula, nodes: tuple) -> bool:
    return all(isinstance(n, nodes) for n in subformulas(a))


# ------------------------------------------------------ derived builders

def neg(a: Formula) -> Formula:
    return Lolli(a, ZERO)


def dneg(a: Formula) -> Formula:
    return Lolli(Lolli(a, ZERO), ZERO)


def quest(a: Formula) -> Formula:
    return neg(Bang(neg(a)))


def equiv(a: Formula, b: Formula) -> Formula:
    return With(Lolli(a, b), Lolli(b, a))


def is_neg(a: Formula) -> bool:
    return isinstance(a, Lolli) and isinstance(a.r, Zero)


def is_dneg(a: Formula) -> bool:
    return is_neg(a) and is_neg(a.l)


def is_quest(a: Formula) -> bool:
    return is_neg(a) and isinstance(a.l, Bang) and is_neg(a.l.f)


def atom(name: str, *args: Term) -> Atom:
    return Atom(name, tuple(args))


# ------------------------------------------------------------ traversal

def children(a: Formula) -> tuple:
    if isinstance(a, BINARY):
        return (a.l, a.r)
    if isinstance(a, UNARY):
        return (a.f,)
    if isinstance(a, QUANT):
        return (a.body,)
    return ()


def with_children(a: Formula, kids: tuple) -> Formula:
    if isinstance(a, BINARY):
        return type(a)(kids[0], kids[1])
    if isinstance(a, UNARY):
        return type(a)(kids[0])
    if isinstance(a, QUANT):
        return type(a)(a.var, kids[0])
    return a


def subformulas(a: Formula) -> Iterator[Formula]:
    stack = [a]
    while stack:
        f = stack.pop()
        yield f
        stack.extend(reversed(children(f)))


def size(a: Formula) -> int:
    return sum(1 for _ in subformulas(a))


def depth(a: Formula) -> int:
    kids = children(a)
    return 1 + max(map(depth, kids)) if kids else 0


def atom_names(a: Formula) -> list[str]:
    """Atom names in left-to-right order, with repetition."""
    return [f.name for f in subformulas(a) if isinstance(f, Atom)]


def free_vars(a: Formula) -> set[str]:
    if isinstance(a, Atom):
        out: set[str] = set()
        for t in a.args:
            out |= term_vars(t)
        return out
    if isinstance(a, QUANT):
        return free_vars(a.body) - {a.var}
    out = set()
    for c in children(a):
        out |= free_vars(c)
    return out


def all_var_names(a: Formula) -> set[str]:
    names: set[str] = set()
    for f in subformulas(a):
        if isinstance(f, Atom):
            for t in f.args:
                names |= term_vars(t)
        elif isinstance(f, QUANT):
            names.add(f.var)
    return names


def fresh_name(base: str, avoid: set[str]) -> str:
    cand = base + "'"
    while cand in avoid:
        cand += "'"
    return cand


def substitute(a: Formula, x: str, t: Term) -> Formula:
    """Capture-avoiding substitution a[t/x]."""
    if isinstance(a, Atom):
        if not a.args:
            return a
        return Atom(a.name, tuple(subst_term(s, x, t) for s in a.args))
    if isinstance(a, QUANT):
        if a.var == x or x not in free_vars(a):
            return a
        tv = term_vars(t)
        if a.var in tv:
            y = fresh_name(a.var, tv | all_var_names(a.body) | {x})
            body = substitute(a.body, a.var, Var(y))
            return type(a)(y, substitute(body, x, t))
        return type(a)(a.var, substitute(a.body, x, t))
    kids = children(a)
    if not kids:
        return a
    return with_children(a, tuple(substitute(c, x, t) for c in kids))


def _alpha_terms(s: Term, t: Term, env_a: dict, env_b: dict) -> bool:
    if isinstance(s, Var) and isinstance(t, Var):
        da, db = env_a.get(s.name), env_b.get(t.name)
        if da is None and db is None:
            return s.name == t.name
        return da == db
    if isinstance(s, App) and isinstance(t, App):
        return (s.fn == t.fn and len(s.args) == len(t.args)
                and all(_alpha_terms(p, q, env_a, env_b) for p, q in zip(s.args, t.args)))
    return type(s) is type(t) and not isinstance(s, Var) and s == t


def alpha_eq(a: Formula, b: Formula) -> bool:
    """Equality up to renaming of bound variables."""

    def go(p, q, env_a, env_b, lvl):
        if type(p) is not type(q):
            return False
        if isinstance(p, Atom):
            return (p.name == q.name and len(p.args) == len(q.args)
                    and all(_alpha_terms(s, t, env_a, env_b) for s, t in zip(p.args, q.args)))
        if isinstance(p, QUANT):
            return go(p.body, q.body, {**env_a, p.var: lvl}, {**env_b, q.var: lvl}, lvl + 1)
        return all(go(s, t, env_a, env_b, lvl) for s, t in zip(children(p), children(q)))

    return go(a, b, {}, {}, 0)


@dataclass(frozen=True)
class Sequent:
    """Multiset of hypotheses and a single conclusion."""

    hyps: tuple
    goal: Formula

    def key(self) -> tuple:
        return (tuple(sorted(self.hyps, key=repr)), self.goal)
