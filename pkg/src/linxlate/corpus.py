"""Seeded random formula generation for property tests and the CLI."""

from __future__ import annotations

import random
from typing import Iterator

from .formula import (
    And, Atom, Bang, Exists, ExistsIL, Forall, ForallIL, Formula, Imp, Lolli, Or,
    Par, Plus, QuestC, Tensor, Var, With, Const,
    BOT, ONE, TOP, TOP_IL, ZERO,
)
from .syntax import Lang

ATOM_NAMES = ("P", "Q", "R", "S", "T", "U")
VAR_NAMES = ("x", "y", "z", "w")

_SHAPES = {
    Lang.ILL: dict(binary=(Tensor, With, Plus, Lolli), unary=(Bang,),
                   quant=(Forall, Exists), consts=(TOP, ZERO, ONE)),
    Lang.CLL: dict(binary=(Tensor, With, Plus, Par), unary=(Bang, QuestC),
                   quant=(Forall, Exists), consts=(TOP, ZERO, ONE, BOT)),
    Lang.IL: dict(binary=(And, Or, Imp), unary=(),
                  quant=(ForallIL, ExistsIL), consts=(TOP_IL, BOT)),
}


def random_formula(rng: random.Random, depth: int = 4, atoms: int = 3,
                   variables: int = 2, lang: Lang | str = Lang.ILL,
                   constants: bool = True, quantifiers: bool = True) -> Formula:
    """A formula of height at most ``depth`` over ``atoms`` atom names and
    ``variables`` variable names."""
    shape = _SHAPES[Lang(lang)]
    names = ATOM_NAMES[:max(1, atoms)]
    vnames = VAR_NAMES[:variables]
    quant = shape["quant"] if (quantifiers and vnames) else ()

    def leaf(scope: tuple) -> Formula:
        if constants and rng.random() < 0.1:
            return rng.choice(shape["consts"])
        name = rng.choice(names)
        if vnames and rng.random() < 0.4:
            pool = scope or vnames
            arg = rng.choice(pool)
            return Atom(name, (Var(arg) if rng.random() < 0.9 else Const("c"),))
        return Atom(name)

    def go(d: int, scope: tuple) -> Formula:
        if d == 0 or rng.random() < 0.2:
            return leaf(scope)
        roll = rng.random()
        if quant and roll < 0.15:
            v = rng.choice(vnames)
            return rng.choice(quant)(v, go(d - 1, scope + (v,)))
        if shape["unary"] and roll < 0.3:
            return rng.choice(shape["unary"])(go(d - 1, scope))
        return rng.choice(shape["binary"])(go(d - 1, scope), go(d - 1, scope))

    return go(depth, ())


def corpus(seed: int, count: int, depth: int = 4, atoms: int = 3, variables: int = 2,
           lang: Lang | str = Lang.ILL, **kw) -> Iterator[Formula]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_formula(rng, depth, atoms, variables, lang, **kw)
