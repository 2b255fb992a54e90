"""ASCII concrete syntax: tokenizer, precedence-climbing parser and a
minimal-parenthesis printer for the three formula languages.

Binding, tightest first: ``! ? ~``, ``*``, ``&``, ``+``, ``-o`` (right
associative).  The classical linear language replaces ``-o`` by ``par``
(binding between ``*`` and ``&``) and has a primitive ``?``; the
intuitionistic language uses ``/\\``, ``\\/`` and ``->``.  ``forall x.``
and ``exists x.`` extend as far right as possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .formula import (
    And, App, Atom, Bang, Bot, Const, Exists, ExistsIL, Forall, ForallIL, Formula,
    Imp, Lolli, One, Or, Par, Plus, QuestC, Sequent, Tensor, Top, TopIL, Var, With,
    Zero, BOT, ONE, TOP, TOP_IL, ZERO, is_neg, is_quest, is_var_name, neg, quest,
)


class Lang(str, Enum):
    IL = "il"
    CLL = "cll"
    ILL = "ill"


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple = ()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


class WrongLanguageError(ParseError):
    pass


# ------------------------------------------------------------- tokens

_ALIASES = {
    "⊗": "*", "⅋": "par", "⊕": "+", "⊸": "-o", "¬": "~", "∀": "forall",
    "∃": "exists", "⊤": "top", "⊥": "bot", "∧": "/\\", "∨": "\\/", "→": "->",
    "⊢": "|-",
}

_TOKEN = re.compile(
    r"\s*(?:(?P<sym>-o|->|\|-|/\\|\\/|[()*&+!?~.,])"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<num>[0-9]+)"
    r"|(?P<uni>[⊗⅋⊕⊸¬∀∃⊤⊥∧∨→⊢]))"
)


@dataclass(frozen=True)
class Token:
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip() == "":
                break
            off = pos + (len(rest) - len(rest.lstrip()))
            raise ParseError(f"unexpected character {text[off]!r}",
                             len(text[:off].encode()))
        kind = m.lastgroup
        tok = m.group(kind)
        start = m.start(kind)
        if kind == "uni":
            tok = _ALIASES[tok]
        out.append(Token(tok, len(text[:start].encode())))
        pos = m.end()
    out.append(Token("<end>", len(text.encode())))
    return out


# ------------------------------------------------------------ grammar

@dataclass(frozen=True)
class Grammar:
    tiers: tuple          # (token, constructor, right_assoc), loosest first
    unary: dict           # token -> builder
    constants: dict       # keyword -> formula
    forall: type
    exists: type


GRAMMARS = {
    Lang.ILL: Grammar(
        tiers=(("-o", Lolli, True), ("+", Plus, False), ("&", With, False),
               ("*", Tensor, False)),
        unary={"!": Bang, "?": quest, "~": neg},
        constants={"top": TOP, "0": ZERO, "1": ONE},
        forall=Forall, exists=Exists),
    Lang.CLL: Grammar(
        tiers=(("+", Plus, False), ("&", With, False), ("par", Par, False),
               ("*", Tensor, False)),
        unary={"!": Bang, "?": QuestC},
        constants={"top": TOP, "0": ZERO, "1": ONE, "bot": BOT},
        forall=Forall, exists=Exists),
    Lang.IL: Grammar(
        tiers=(("->", Imp, True), ("\\/", Or, False), ("/\\", And, False)),
        unary={"~": lambda a: Imp(a, BOT)},
        constants={"top": TOP_IL, "bot": BOT},
        forall=ForallIL, exists=ExistsIL),
}

_ALL_OPS = {t for g in GRAMMARS.values() for t, _, _ in g.tiers}
_ALL_OPS |= {t for g in GRAMMARS.values() for t in g.unary}
_ALL_CONSTS = {c for g in GRAMMARS.values() for c in g.constants}
_KEYWORDS = {"forall", "exists", "par", "top", "bot"}


class _Parser:
    def __init__(self, text: str, lang: Lang):
        self.toks = tokenize(text)
        self.i = 0
        self.lang = lang
        self.g = GRAMMARS[lang]

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected) -> None:
        t = self.tok
        if t.text in _ALL_OPS or t.text in _ALL_CONSTS:
            if not self._known(t.text):
                raise WrongLanguageError(
                    f"{t.text!r} is not part of the {self.lang.value} language",
                    t.offset, expected)
        what = "end of input" if t.text == "<end>" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.offset, expected)

    def _known(self, text: str) -> bool:
        g = self.g
        return (text in g.unary or text in g.constants
                or any(text == op for op, _, _ in g.tiers))

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            self.fail((text,))
        return self.advance()

    def binary_ops(self) -> tuple:
        return tuple(op for op, _, _ in self.g.tiers)

    def formula(self, level: int = 0) -> Formula:
        tiers = self.g.tiers
        if level == len(tiers):
            return self.unary()
        op, ctor, right = tiers[level]
        left = self.formula(level + 1)
        if right:
            if self.tok.text == op:
                self.advance()
                return ctor(left, self.formula(level))
            return left
        while self.tok.text == op:
            self.advance()
            left = ctor(left, self.formula(level + 1))
        return left

    def unary(self) -> Formula:
        t = self.tok.text
        if t in self.g.unary:
            self.advance()
            return self.g.unary[t](self.unary())
        if t in ("forall", "exists"):
            self.advance()
            v = self.tok
            if not (re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", v.text)
                    and is_var_name(v.text)):
                self.fail(("variable",))
            self.advance()
            self.expect(".")
            body = self.formula(0)
            return (self.g.forall if t == "forall" else self.g.exists)(v.text, body)
        return self.primary()

    def primary(self) -> Formula:
        t = self.tok
        if t.text in self.g.constants:
            self.advance()
            return self.g.constants[t.text]
        if t.text == "(":
            self.advance()
            f = self.formula(0)
            self.expect(")")
            return f
        if re.fullmatch(r"[A-Z][A-Za-z0-9_']*", t.text):
            self.advance()
            return Atom(t.text, self.args())
        self.fail(("atom", "constant", "(") + tuple(self.g.unary) + ("forall", "exists"))

    def args(self) -> tuple:
        if self.tok.text != "(":
            return ()
        self.advance()
        out = [self.term()]
        while self.tok.text == ",":
            self.advance()
            out.append(self.term())
        self.expect(")")
        return tuple(out)

    def term(self):
        t = self.tok
        if not re.fullmatch(r"[a-z0-9_][A-Za-z0-9_']*", t.text) or t.text in _KEYWORDS:
            self.fail(("term",))
        self.advance()
        if self.tok.text == "(":
            return App(t.text, self.args())
        return Var(t.text) if is_var_name(t.text) else Const(t.text)

    def done(self) -> None:
        if self.tok.text != "<end>":
            self.fail(self.binary_ops() + ("<end>",))


def parse(text: str, lang: Lang | str = Lang.ILL) -> Formula:
    p = _Parser(text, Lang(lang))
    f = p.formula()
    p.done()
    return f


def parse_sequent(text: str, lang: Lang | str = Lang.ILL) -> Sequent:
    """``A, B |- C``; the hypothesis list may be empty."""
    p = _Parser(text, Lang(lang))
    hyps = []
    if p.tok.text != "|-":
        hyps.append(p.formula())
        while p.tok.text == ",":
            p.advance()
            hyps.append(p.formula())
    if p.tok.text != "|-":
        p.fail((",", "|-") + p.binary_ops())
    p.advance()
    goal = p.formula()
    p.done()
    return Sequent(tuple(hyps), goal)


def read_formulas(text: str, lang: Lang | str = Lang.ILL) -> list[Formula]:
    """One formula per line; blank lines and ``#`` comments are skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line, lang))
    return out


# ------------------------------------------------------------ printer

def _lang_of(f: Formula) -> Lang:
    from .formula import subformulas
    for n in subformulas(f):
        if isinstance(n, (And, Or, Imp, ForallIL, ExistsIL, TopIL)):
            return Lang.IL
        if isinstance(n, (Par, QuestC)):
            return Lang.CLL
        if isinstance(n, Bot):
            # bot alone: CLL unless linear structure appears elsewhere
            return Lang.CLL if _has_linear(f) else Lang.IL
    return Lang.ILL


def _has_linear(f: Formula) -> bool:
    from .formula import subformulas
    return any(isinstance(n, (Tensor, With, Plus, Bang, Top, Zero, One, Forall, Exists))
               for n in subformulas(f))


def _term(t) -> str:
    if isinstance(t, App):
        return f"{t.fn}({', '.join(_term(a) for a in t.args)})"
    return t.name


def _tier_of(g: Grammar, f: Formula):
    for i, (op, ctor, right) in enumerate(g.tiers):
        if type(f) is ctor:
            return i, op, right
    return None


def to_text(f: Formula, lang: Lang | str | None = None) -> str:
    """Render with the fewest parentheses the parser needs to read it back."""
    g = GRAMMARS[Lang(lang) if lang else _lang_of(f)]
    n_tiers = len(g.tiers)

    def unary_sugar(a: Formula):
        if g is GRAMMARS[Lang.ILL]:
            if is_quest(a):
                return "?", a.l.f.l
            if is_neg(a):
                return "~", a.l
        elif g is GRAMMARS[Lang.IL]:
            if isinstance(a, Imp) and isinstance(a.r, Bot):
                return "~", a.l
        if isinstance(a, Bang):
            return "!", a.f
        if isinstance(a, QuestC):
            return "?", a.f
        return None

    def go(a: Formula, level: int, open_right: bool) -> str:
        sugar = unary_sugar(a)
        if sugar is not None:
            sym, body = sugar
            return sym + go(body, n_tiers, open_right)
        if isinstance(a, (Forall, Exists, ForallIL, ExistsIL)):
            kw = "forall" if isinstance(a, (Forall, ForallIL)) else "exists"
            text = f"{kw} {a.var}. {go(a.body, 0, True)}"
            return text if open_right else f"({text})"
        tier = _tier_of(g, a)
        if tier is not None:
            i, op, right = tier
            paren = i < level
            inner_open = True if paren else open_right
            if right:
                lhs = go(a.l, i + 1, False)
                rhs = go(a.r, i, inner_open)
            else:
                lhs = go(a.l, i, False)
                rhs = go(a.r, i + 1, inner_open)
            text = f"{lhs} {op} {rhs}"
            return f"({text})" if paren else text
        if isinstance(a, Atom):
            if a.args:
                return f"{a.name}({', '.join(_term(t) for t in a.args)})"
            return a.name
        for kw, c in g.constants.items():
            if a == c:
                return kw
        raise TypeError(f"cannot print {a!r} in this language")

    return go(f, 0, True)


def sequent_text(s: Sequent, lang: Lang | str | None = None) -> str:
    hyps = ", ".join(to_text(h, lang) for h in s.hyps)
    return f"{hyps} |- {to_text(s.goal, lang)}" if hyps else f"|- {to_text(s.goal, lang)}"
