"""The two equivalence matrices checked by ``check-tables``: decorated
double negations (columns IL_b and ILL) and decorated bangs (column ILL).

A and B are atoms; in quantifier rows A depends on the bound variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .formula import Formula
from .syntax import parse


class TableId(str, Enum):
    PROP4 = "prop4"
    PROP5 = "prop5"


ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x",
         "xi", "xii", "xiii", "xiv", "xv")


@dataclass(frozen=True)
class Row:
    label: str
    left: Formula
    right: Formula
    expected: tuple         # one bool per column
    finite_blind: bool = False
    note: str = ""


def _rows(spec: list, notes: dict) -> tuple:
    return tuple(Row(ROMAN[i], parse(a), parse(b), tuple(e), blind, notes.get(ROMAN[i], ""))
                 for i, (a, b, e, blind) in enumerate(spec))


Y, N = True, False

FINITE_BLIND_NOTE = (
    "finite domains turn forall into a finite meet; in algebras with the "
    "promotion law double negation is a nucleus that preserves finite meets, "
    "so no finite model of this kind separates the two sides there; without "
    "promotion a finite-domain instance reduces to the finite-meet case of "
    "row ii; the row is left to the prover, whose NotFound is the only "
    "negative evidence reported"
)

INTEGRAL_NOTE = (
    "in an integral algebra !(a*b) is an idempotent below both a and b, hence "
    "below !a*!b and below !(!a*!b); the failing direction needs a model "
    "without weakening, which these algebras cannot provide"
)

DNEG_ROWS = _rows([
    ("~~(~~A * ~~B)", "~~(A * B)", (Y, Y), False),
    ("~~(~~A & ~~B)", "~~(A & B)", (Y, N), False),
    ("~~(~~A + ~~B)", "~~(A + B)", (Y, Y), False),
    ("~~(~~A -o ~~B)", "~~(A -o B)", (Y, N), False),
    ("~~(~~A -o ~~B)", "~~(A -o ~~B)", (Y, Y), False),
    ("~~forall x. ~~A(x)", "~~forall x. A(x)", (N, N), True),
    ("~~exists x. ~~A(x)", "~~exists x. A(x)", (Y, Y), False),
    ("~~!~~A", "~~!A", (Y, N), False),
    ("~~(~~A * ~~B)", "~~A * ~~B", (Y, N), False),
    ("~~(~~A & ~~B)", "~~A & ~~B", (Y, Y), False),
    ("~~(~~A + ~~B)", "~~A + ~~B", (N, N), False),
    ("~~(~~A -o ~~B)", "~~A -o ~~B", (Y, Y), False),
    ("~~forall x. ~~A(x)", "forall x. ~~A(x)", (Y, Y), False),
    ("~~exists x. ~~A(x)", "exists x. ~~A(x)", (N, N), False),
    ("~~!~~A", "!~~A", (Y, N), False),
], {"vi": FINITE_BLIND_NOTE})

BANG_ROWS = _rows([
    ("!(!A * !B)", "!A * !B", (Y,), False),
    ("!(!A & !B)", "!A & !B", (N,), False),
    ("!(!A + !B)", "!A + !B", (Y,), False),
    ("!(!A -o !B)", "!A -o !B", (N,), False),
    ("!forall x. !A(x)", "forall x. !A(x)", (N,), False),
    ("!exists x. !A(x)", "exists x. !A(x)", (Y,), False),
    ("!!!A", "!!A", (Y,), False),
    ("!(!A * !B)", "!(A * B)", (N,), False),
    ("!(!A & !B)", "!(A & B)", (Y,), False),
    ("!(!A -o !B)", "!(A -o B)", (N,), False),
    ("!(!A -o !B)", "!(!A -o B)", (Y,), False),
    ("!forall x. !A(x)", "!forall x. A(x)", (Y,), False),
    ("!exists x. !A(x)", "!exists x. A(x)", (N,), False),
], {"viii": INTEGRAL_NOTE})

TABLES = {
    TableId.PROP4: (("ilb", "ill"), DNEG_ROWS),
    TableId.PROP5: (("ill",), BANG_ROWS),
}

