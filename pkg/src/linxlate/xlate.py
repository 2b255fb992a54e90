"""Formula translations between the intuitionistic, classical linear and
intuitionistic linear languages, and the negative and bang-based
translations within the intuitionistic linear language.

Every translation is a structurally recursive total function.  The
constants top, 0 and 1 are handled by the atomic clause of each
translation.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable

from .formula import (
    And, Atom, Bang, Bot, Exists, ExistsIL, Forall, ForallIL, Formula, Imp, Lolli,
    One, Or, Par, Plus, QuestC, Tensor, Top, TopIL, With, Zero,
    BOT, TOP, TOP_IL, ZERO, dneg, neg, quest,
)
from .syntax import Lang


class LanguageMismatch(ValueError):
    pass


_ATOMIC = (Atom, Top, Zero, One)
_BINARY = (Tensor, With, Plus, Lolli)


def _check_ill(a: Formula) -> None:
    if not isinstance(a, _ATOMIC + _BINARY + (Bang, Forall, Exists)):
        raise LanguageMismatch(f"not an intuitionistic linear formula: {a!r}")


# ------------------------------------------------ between the languages

def embed_il(a: Formula) -> Formula:
    if isinstance(a, Atom):
        return a
    if isinstance(a, Bot):
        return ZERO
    if isinstance(a, TopIL):
        return TOP
    if isinstance(a, And):
        return With(embed_il(a.l), embed_il(a.r))
    if isinstance(a, Or):
        return Plus(embed_il(a.l), embed_il(a.r))
    if isinstance(a, Imp):
        return Lolli(embed_il(a.l), embed_il(a.r))
    if isinstance(a, ForallIL):
        return Forall(a.var, embed_il(a.body))
    if isinstance(a, ExistsIL):
        return Exists(a.var, embed_il(a.body))
    raise LanguageMismatch(f"not an intuitionistic formula: {a!r}")


def embed_cll(a: Formula) -> Formula:
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, Bot):
        return ZERO
    if isinstance(a, Par):
        return neg(Tensor(neg(embed_cll(a.l)), neg(embed_cll(a.r))))
    if isinstance(a, QuestC):
        return quest(embed_cll(a.f))
    if isinstance(a, (Tensor, With, Plus)):
        return type(a)(embed_cll(a.l), embed_cll(a.r))
    if isinstance(a, Bang):
        return Bang(embed_cll(a.f))
    if isinstance(a, (Forall, Exists)):
        return type(a)(a.var, embed_cll(a.body))
    raise LanguageMismatch(f"not a classical linear formula: {a!r}")


def forget(a: Formula) -> Formula:
    """Erase the linear structure, landing in the intuitionistic language."""
    if isinstance(a, Atom):
        return a
    if isinstance(a, Zero):
        return BOT
    if isinstance(a, (Top, One)):
        return TOP_IL
    if isinstance(a, Bang):
        return forget(a.f)
    if isinstance(a, (Tensor, With)):
        return And(forget(a.l), forget(a.r))
    if isinstance(a, Plus):
        return Or(forget(a.l), forget(a.r))
    if isinstance(a, Lolli):
        return Imp(forget(a.l), forget(a.r))
    if isinstance(a, Forall):
        return ForallIL(a.var, forget(a.body))
    if isinstance(a, Exists):
        return ExistsIL(a.var, forget(a.body))
    raise LanguageMismatch(f"not an intuitionistic linear formula: {a!r}")


# ----------------------------------------------------- negative family

def _kolm_core(a: Formula) -> Formula:
    _check_ill(a)
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, _BINARY):
        return type(a)(dneg(_kolm_core(a.l)), dneg(_kolm_core(a.r)))
    if isinstance(a, Bang):
        return Bang(dneg(_kolm_core(a.f)))
    return type(a)(a.var, dneg(_kolm_core(a.body)))


def _kolm_outer(a: Formula) -> Formula:
    _check_ill(a)
    if isinstance(a, _ATOMIC):
        return dneg(a)
    if isinstance(a, _BINARY):
        return dneg(type(a)(_kolm_outer(a.l), _kolm_outer(a.r)))
    if isinstance(a, Bang):
        return dneg(Bang(_kolm_outer(a.f)))
    return dneg(type(a)(a.var, _kolm_outer(a.body)))


def kolmogorov(a: Formula, presentation: str = "outer") -> Formula:
    """Double negation in front of every subformula."""
    if presentation == "outer":
        return _kolm_outer(a)
    if presentation == "inner":
        return dneg(_kolm_core(a))
    raise ValueError(f"unknown presentation {presentation!r}")


def godel_gentzen(a: Formula) -> Formula:
    _check_ill(a)
    if isinstance(a, _ATOMIC):
        return dneg(a)
    if isinstance(a, Plus):
        return dneg(Plus(godel_gentzen(a.l), godel_gentzen(a.r)))
    if isinstance(a, _BINARY):
        return type(a)(godel_gentzen(a.l), godel_gentzen(a.r))
    if isinstance(a, Bang):
        return Bang(godel_gentzen(a.f))
    if isinstance(a, Exists):
        return dneg(Exists(a.var, godel_gentzen(a.body)))
    return Forall(a.var, godel_gentzen(a.body))


def kuroda_core(a: Formula) -> Formula:
    _check_ill(a)
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, _BINARY):
        return type(a)(kuroda_core(a.l), kuroda_core(a.r))
    if isinstance(a, Bang):
        return Bang(kuroda_core(a.f))
    if isinstance(a, Forall):
        return Forall(a.var, dneg(kuroda_core(a.body)))
    return Exists(a.var, kuroda_core(a.body))


def kuroda(a: Formula) -> Formula:
    return dneg(kuroda_core(a))


def linear_godel_gentzen(a: Formula) -> Formula:
    _check_ill(a)
    lg = linear_godel_gentzen
    if isinstance(a, _ATOMIC):
        return dneg(a)
    if isinstance(a, (Tensor, Plus)):
        return dneg(type(a)(lg(a.l), lg(a.r)))
    if isinstance(a, (With, Lolli)):
        return type(a)(lg(a.l), lg(a.r))
    if isinstance(a, Bang):
        return dneg(Bang(lg(a.f)))
    if isinstance(a, Exists):
        return dneg(Exists(a.var, lg(a.body)))
    return Forall(a.var, lg(a.body))


def linear_kuroda_core(a: Formula) -> Formula:
    _check_ill(a)
    k = linear_kuroda_core
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, (Tensor, Plus)):
        return type(a)(k(a.l), k(a.r))
    if isinstance(a, With):
        return With(dneg(k(a.l)), dneg(k(a.r)))
    if isinstance(a, Lolli):
        return Lolli(k(a.l), dneg(k(a.r)))
    if isinstance(a, Bang):
        return Bang(dneg(k(a.f)))
    if isinstance(a, Forall):
        return Forall(a.var, dneg(k(a.body)))
    return Exists(a.var, k(a.body))


def linear_kuroda(a: Formula) -> Formula:
    return dneg(linear_kuroda_core(a))


# ----------------------------------------------------------- bang family

def _gf_outer(a: Formula) -> Formula:
    _check_ill(a)
    if isinstance(a, _ATOMIC):
        return Bang(a)
    if isinstance(a, _BINARY):
        return Bang(type(a)(_gf_outer(a.l), _gf_outer(a.r)))
    if isinstance(a, Bang):
        return Bang(Bang(_gf_outer(a.f)))
    return Bang(type(a)(a.var, _gf_outer(a.body)))


def _gf_core(a: Formula) -> Formula:
    _check_ill(a)
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, _BINARY):
        return type(a)(Bang(_gf_core(a.l)), Bang(_gf_core(a.r)))
    if isinstance(a, Bang):
        return Bang(Bang(_gf_core(a.f)))
    return type(a)(a.var, Bang(_gf_core(a.body)))


def girard_full(a: Formula, presentation: str = "outer") -> Formula:
    """A bang in front of every subformula."""
    if presentation == "outer":
        return _gf_outer(a)
    if presentation == "inner":
        return Bang(_gf_core(a))
    raise ValueError(f"unknown presentation {presentation!r}")


def girard_star(a: Formula) -> Formula:
    """Call-by-value translation."""
    _check_ill(a)
    s = girard_star
    if isinstance(a, _ATOMIC):
        return Bang(a)
    if isinstance(a, (Tensor, Plus)):
        return type(a)(s(a.l), s(a.r))
    if isinstance(a, (With, Lolli)):
        return Bang(type(a)(s(a.l), s(a.r)))
    if isinstance(a, Bang):
        return Bang(s(a.f))
    if isinstance(a, Forall):
        return Bang(Forall(a.var, s(a.body)))
    return Exists(a.var, s(a.body))


def circ_core(a: Formula) -> Formula:
    _check_ill(a)
    c = circ_core
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, (Tensor, Plus)):
        return type(a)(Bang(c(a.l)), Bang(c(a.r)))
    if isinstance(a, With):
        return With(c(a.l), c(a.r))
    if isinstance(a, Lolli):
        return Lolli(Bang(c(a.l)), c(a.r))
    if isinstance(a, Bang):
        return Bang(c(a.f))
    if isinstance(a, Forall):
        return Forall(a.var, c(a.body))
    return Exists(a.var, Bang(c(a.body)))


def girard_circ(a: Formula, with_outer_bang: bool = True) -> Formula:
    """Call-by-name translation, or its core when the outer bang is off."""
    core = circ_core(a)
    return Bang(core) if with_outer_bang else core


# ------------------------------------------------- composed translations

def _g_circ_core(a: Formula) -> Formula:
    _check_ill(a)
    c = _g_circ_core
    if isinstance(a, _ATOMIC):
        return quest(Bang(a))
    if isinstance(a, Tensor):
        return Tensor(Bang(c(a.l)), Bang(c(a.r)))
    if isinstance(a, With):
        return With(c(a.l), c(a.r))
    if isinstance(a, Plus):
        return quest(Plus(Bang(c(a.l)), Bang(c(a.r))))
    if isinstance(a, Lolli):
        return Lolli(Bang(c(a.l)), c(a.r))
    if isinstance(a, Bang):
        return Bang(c(a.f))
    if isinstance(a, Forall):
        return Forall(a.var, c(a.body))
    return quest(Exists(a.var, Bang(c(a.body))))


def _g_star(a: Formula) -> Formula:
    _check_ill(a)
    s = _g_star
    if isinstance(a, _ATOMIC):
        return Bang(quest(Bang(a)))
    if isinstance(a, Tensor):
        return Tensor(s(a.l), s(a.r))
    if isinstance(a, (With, Lolli)):
        return Bang(type(a)(s(a.l), s(a.r)))
    if isinstance(a, Plus):
        return Bang(quest(Plus(s(a.l), s(a.r))))
    if isinstance(a, Bang):
        return Bang(s(a.f))
    if isinstance(a, Forall):
        return Bang(Forall(a.var, s(a.body)))
    return Bang(quest(Exists(a.var, s(a.body))))


def _ku_circ_core(a: Formula) -> Formula:
    _check_ill(a)
    c = _ku_circ_core
    if isinstance(a, _ATOMIC):
        return a
    if isinstance(a, (Tensor, With, Plus)):
        return type(a)(Bang(c(a.l)), Bang(c(a.r)))
    if isinstance(a, Lolli):
        return Lolli(Bang(c(a.l)), c(a.r))
    if isinstance(a, Bang):
        return Bang(c(a.f))
    if isinstance(a, Forall):
        return Forall(a.var, quest(Bang(c(a.body))))
    return Exists(a.var, Bang(c(a.body)))


def _ku_star_core(a: Formula) -> Formula:
    _check_ill(a)
    c = _ku_star_core
    if isinstance(a, _ATOMIC):
        return Bang(a)
    if isinstance(a, (Tensor, Plus)):
        return type(a)(c(a.l), c(a.r))
    if isinstance(a, (With, Lolli)):
        return Bang(type(a)(c(a.l), c(a.r)))
    if isinstance(a, Bang):
        return Bang(c(a.f))
    if isinstance(a, Forall):
        return Bang(Forall(a.var, quest(c(a.body))))
    return Exists(a.var, c(a.body))


class TranslationId(str, Enum):
    DAGGER = "dagger"
    DDAGGER = "ddagger"
    FORGET = "forget"
    KOLM_OUTER = "kolm-outer"
    KOLM_INNER = "kolm-inner"
    GG = "gg"
    KURODA = "kuroda"
    LIN_GG = "lgg"
    LIN_KURODA = "lkuroda"
    GF_OUTER = "gf-outer"
    GF_INNER = "gf-inner"
    STAR = "star"
    CIRC = "circ"
    G_CIRC = "g-circ"
    G_STAR = "g-star"
    KU_CIRC = "ku-circ"
    KU_STAR = "ku-star"

    @property
    def source(self) -> Lang:
        return {TranslationId.DAGGER: Lang.IL, TranslationId.DDAGGER: Lang.CLL}.get(self, Lang.ILL)

    @property
    def target(self) -> Lang:
        return Lang.IL if self is TranslationId.FORGET else Lang.ILL


_COMPOSED = {
    TranslationId.G_CIRC: lambda a: Bang(_g_circ_core(a)),
    TranslationId.G_STAR: _g_star,
    TranslationId.KU_CIRC: lambda a: Bang(quest(Bang(_ku_circ_core(a)))),
    TranslationId.KU_STAR: lambda a: Bang(quest(_ku_star_core(a))),
}


def composed(a: Formula, which: TranslationId | str) -> Formula:
    """Direct modular form of a negative translation followed by a Girard one."""
    which = TranslationId(which)
    if which not in _COMPOSED:
        raise ValueError(f"{which.value} is not a composed translation")
    return _COMPOSED[which](a)


TRANSLATIONS: dict[TranslationId, Callable[[Formula], Formula]] = {
    TranslationId.DAGGER: embed_il,
    TranslationId.DDAGGER: embed_cll,
    TranslationId.FORGET: forget,
    TranslationId.KOLM_OUTER: lambda a: kolmogorov(a, "outer"),
    TranslationId.KOLM_INNER: lambda a: kolmogorov(a, "inner"),
    TranslationId.GG: godel_gentzen,
    TranslationId.KURODA: kuroda,
    TranslationId.LIN_GG: linear_godel_gentzen,
    TranslationId.LIN_KURODA: linear_kuroda,
    TranslationId.GF_OUTER: lambda a: girard_full(a, "outer"),
    TranslationId.GF_INNER: lambda a: girard_full(a, "inner"),
    TranslationId.STAR: girard_star,
    TranslationId.CIRC: girard_circ,
    **_COMPOSED,
}


def translate(a: Formula, which: TranslationId | str) -> Formula:
    return TRANSLATIONS[TranslationId(which)](a)


def compose_literal(a: Formula, first: TranslationId | str,
                    second: TranslationId | str) -> Formula:
    """``second(first(a))``; both steps must stay inside the linear language."""
    first, second = TranslationId(first), TranslationId(second)
    for t in (first, second):
        if t.source is not Lang.ILL or t.target is not Lang.ILL:
            raise LanguageMismatch(
                f"{t.value} maps {t.source.value} to {t.target.value}; "
                "literal composition needs ill to ill steps")
    return translate(translate(a, first), second)


# the literal compositions whose direct forms are given by ``composed``
COMPOSITIONS = {
    TranslationId.G_CIRC: (TranslationId.GG, TranslationId.CIRC),
    TranslationId.G_STAR: (TranslationId.GG, TranslationId.STAR),
    TranslationId.KU_CIRC: (TranslationId.KURODA, TranslationId.CIRC),
    TranslationId.KU_STAR: (TranslationId.KURODA, TranslationId.STAR),
}
