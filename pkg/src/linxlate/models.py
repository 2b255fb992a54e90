"""Finite algebraic countermodels: bounded commutative integral residuated
lattices with an exponential operator, and finite quantifier domains.

Elements are the integers ``0..n-1``; ``0`` is the bottom and ``n-1`` the
top, which is also the monoid unit (integrality).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Union

from .formula import (
    App, Atom, Bang, Const, Exists, Forall, Formula, Lolli, One, Plus, Sequent,
    Tensor, Top, Var, With, Zero, free_vars, subformulas,
)
from .proofs import ILL, Theory


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    n: int
    leq: tuple      # leq[a][b]
    meet: tuple
    join: tuple
    mul: tuple
    imp: tuple
    bang: tuple

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n - 1

    def neg(self, a: int) -> int:
        return self.imp[a][0]

    def order_pairs(self) -> list:
        return [(a, b) for a in range(self.n) for b in range(self.n)
                if a != b and self.leq[a][b]]

    def satisfies(self, th: Theory) -> bool:
        r = range(self.n)
        if th.pro and any(self.bang[a] != a for a in r):
            return False
        if th.dne and any(self.neg(self.neg(a)) != a for a in r):
            return False
        return True

    def law_violations(self) -> list:
        """Every algebra law that fails, checked exhaustively."""
        r = range(self.n)
        bad = []
        t = self.top
        L, M, I, B = self.leq, self.mul, self.imp, self.bang
        if any(M[t][a] != a for a in r):
            bad.append("top is not the unit")
        if any(M[a][b] != M[b][a] for a in r for b in r):
            bad.append("not commutative")
        if any(M[M[a][b]][c] != M[a][M[b][c]] for a in r for b in r for c in r):
            bad.append("not associative")
        if any(L[a][b] and not L[M[a][c]][M[b][c]] for a in r for b in r for c in r):
            bad.append("not monotone")
        if any(L[M[a][b]][c] != L[a][I[b][c]] for a in r for b in r for c in r):
            bad.append("residuation fails")
        if any(not L[B[a]][a] for a in r):
            bad.append("!a <= a fails")
        if any(not L[B[a]][B[B[a]]] for a in r):
            bad.append("!a <= !!a fails")
        if any(M[B[a]][B[b]] != B[self.meet[a][b]] for a in r for b in r):
            bad.append("!a * !b = !(a & b) fails")
        if B[t] != t:
            bad.append("!1 = 1 fails")
        if any(not L[B[a]][M[B[a]][B[a]]] for a in r):
            bad.append("contraction fails")
        if any(L[a][b] and not L[B[a]][B[b]] for a in r for b in r):
            bad.append("! not monotone")
        return bad

    def to_text(self) -> str:
        r = range(self.n)

        def table(name: str, t: tuple) -> list:
            out = [f"{name}:"]
            out.append("     " + " ".join(f"{b:>2}" for b in r))
            for a in r:
                out.append(f"  {a:>2} " + " ".join(f"{t[a][b]:>2}" for b in r))
            return out

        lines = [f"carrier: {' '.join(map(str, r))} (bottom 0, top/unit {self.top})",
                 "order: " + " ".join(f"{a}<{b}" for a, b in self.order_pairs())]
        lines += table("tensor", self.mul)
        lines += table("implies", self.imp)
        lines.append("bang: " + " ".join(f"!{a}={self.bang[a]}" for a in r))
        return "\n".join(lines)


@dataclass(frozen=True)
class Valuation:
    domain: int
    atoms: tuple            # ((name, args), value) pairs
    constants: tuple = ()   # (name, element of the domain) pairs
    variables: tuple = ()   # free variable assignment

    def atom(self, name: str, args: tuple) -> int:
        for k, v in self.atoms:
            if k == (name, args):
                return v
        raise EvaluationError(f"atom {name}{args} is unassigned")

    def to_text(self) -> str:
        lines = [f"domain: {' '.join(f'd{i}' for i in range(self.domain))}"]
        for (name, args), v in self.atoms:
            arg = f"({','.join(f'd{i}' for i in args)})" if args else ""
            lines.append(f"{name}{arg} = {v}")
        for name, d in self.constants + self.variables:
            lines.append(f"{name} = d{d}")
        return "\n".join(lines)


# --------------------------------------------------------- evaluation

def _term(t, v: Valuation, env: dict) -> int:
    if isinstance(t, Var):
        if t.name in env:
            return env[t.name]
        raise EvaluationError(f"variable {t.name} is unassigned")
    if isinstance(t, Const):
        for k, d in v.constants:
            if k == t.name:
                return d
        raise EvaluationError(f"constant {t.name} is unassigned")
    raise EvaluationError("function symbols are not interpreted")


def evaluate(a: Formula, alg: Algebra, v: Valuation, env: Optional[dict] = None) -> int:
    if env is None:
        env = dict(v.variables)
    if isinstance(a, Atom):
        return v.atom(a.name, tuple(_term(t, v, env) for t in a.args))
    if isinstance(a, (Top, One)):
        return alg.top
    if isinstance(a, Zero):
        return alg.bottom
    if isinstance(a, Tensor):
        return alg.mul[evaluate(a.l, alg, v, env)][evaluate(a.r, alg, v, env)]
    if isinstance(a, With):
        return alg.meet[evaluate(a.l, alg, v, env)][evaluate(a.r, alg, v, env)]
    if isinstance(a, Plus):
        return alg.join[evaluate(a.l, alg, v, env)][evaluate(a.r, alg, v, env)]
    if isinstance(a, Lolli):
        return alg.imp[evaluate(a.l, alg, v, env)][evaluate(a.r, alg, v, env)]
    if isinstance(a, Bang):
        return alg.bang[evaluate(a.f, alg, v, env)]
    if isinstance(a, (Forall, Exists)):
        op = alg.meet if isinstance(a, Forall) else alg.join
        acc = alg.top if isinstance(a, Forall) else alg.bottom
        for d in range(v.domain):
            acc = op[acc][evaluate(a.body, alg, v, {**env, a.var: d})]
        return acc
    raise EvaluationError(f"cannot evaluate {type(a).__name__}")


def _signature(fs) -> tuple:
    """Atom arities, constants and free variables occurring in ``fs``."""
    atoms: dict = {}
    consts: set = set()
    for f in fs:
        for g in subformulas(f):
            if isinstance(g, Atom):
                atoms.setdefault(g.name, len(g.args))
                for t in g.args:
                    if isinstance(t, Const):
                        consts.add(t.name)
                    elif isinstance(t, App):
                        raise EvaluationError("function symbols are not interpreted")
    fv: set = set()
    for f in fs:
        fv |= free_vars(f)
    return tuple(sorted(atoms.items())), tuple(sorted(consts)), tuple(sorted(fv))


def valuations(fs, n: int, domain: int) -> Iterator[Valuation]:
    atoms, consts, fv = _signature(fs)
    keys = [(name, args) for name, k in atoms
            for args in itertools.product(range(domain), repeat=k)]
    for cvals in itertools.product(range(domain), repeat=len(consts)):
        cs = tuple(zip(consts, cvals))
        for vvals in itertools.product(range(domain), repeat=len(fv)):
            vs = tuple(zip(fv, vvals))
            for vals in itertools.product(range(n), repeat=len(keys)):
                yield Valuation(domain, tuple(zip(keys, vals)), cs, vs)


def holds(s: Sequent, alg: Algebra, v: Valuation) -> bool:
    lhs = alg.top
    for h in s.hyps:
        lhs = alg.mul[lhs][evaluate(h, alg, v)]
    return bool(alg.leq[lhs][evaluate(s.goal, alg, v)])


def validates(s: Sequent, alg: Algebra, domain: int = 1) -> bool:
    fs = tuple(s.hyps) + (s.goal,)
    return all(holds(s, alg, v) for v in valuations(fs, alg.n, domain))


def violation(s: Sequent, alg: Algebra, domain: int = 1) -> Optional[Valuation]:
    fs = tuple(s.hyps) + (s.goal,)
    for v in valuations(fs, alg.n, domain):
        if not holds(s, alg, v):
            return v
    return None


# -------------------------------------------------------- enumeration

def _lattice_tables(n: int, leq: tuple) -> Optional[tuple]:
    r = range(n)
    meet = [[0] * n for _ in r]
    join = [[0] * n for _ in r]
    for a in r:
        for b in r:
            lower = [c for c in r if leq[c][a] and leq[c][b]]
            upper = [c for c in r if leq[a][c] and leq[b][c]]
            m = [c for c in lower if all(leq[d][c] for d in lower)]
            j = [c for c in upper if all(leq[c][d] for d in upper)]
            if len(m) != 1 or len(j) != 1:
                return None
            meet[a][b], join[a][b] = m[0], j[0]
    return tuple(map(tuple, meet)), tuple(map(tuple, join))


def _permute(rel: tuple, perm: tuple) -> tuple:
    n = len(perm)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(tuple(rel[inv[a]][inv[b]] for b in range(n)) for a in range(n))


def _permute_op(op: tuple, perm: tuple) -> tuple:
    """Relabel a binary operation table along ``perm``."""
    n = len(perm)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[op[a][b]]
    return tuple(map(tuple, out))


def _middle_perms(n: int) -> list:
    if n == 1:
        return [(0,)]
    return [(0,) + p + (n - 1,) for p in itertools.permutations(range(1, n - 1))]


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple:
    """Bounded lattices of size n, one per isomorphism class."""
    if n == 1:
        return (((True,),),)
    mids = list(range(1, n - 1))
    pairs = [(i, j) for i in mids for j in mids if i < j]
    perms = _middle_perms(n)
    out, seen = [], set()
    for bits in itertools.product((False, True), repeat=len(pairs)):
        leq = [[a == b or a == 0 or b == n - 1 for b in range(n)] for a in range(n)]
        for (i, j), bit in zip(pairs, bits):
            leq[i][j] = bit
        if any(leq[a][b] and leq[b][c] and not leq[a][c]
               for a in range(n) for b in range(n) for c in range(n)):
            continue
        rel = tuple(map(tuple, leq))
        if _lattice_tables(n, rel) is None:
            continue
        canon = min(_permute(rel, p) for p in perms)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(rel)
    return tuple(out)


def _automorphisms(n: int, leq: tuple) -> list:
    return [p for p in _middle_perms(n) if _permute(leq, p) == leq]


def _monoids(n: int, leq: tuple, meet: tuple, join: tuple) -> Iterator[tuple]:
    """Commutative monoids with unit top, monotone and preserving joins."""
    t = n - 1
    mul = [[None] * n for _ in range(n)]
    for a in range(n):
        mul[t][a] = mul[a][t] = a
        mul[0][a] = mul[a][0] = 0
    cells = [(a, b) for a in range(1, t) for b in range(a, t)]

    def consistent(a: int, b: int) -> bool:
        v = mul[a][b]
        for c in range(n):
            for d in range(n):
                w = mul[c][d]
                if w is None:
                    continue
                if leq[a][c] and leq[b][d] and not leq[v][w]:
                    return False
                if leq[c][a] and leq[d][b] and not leq[w][v]:
                    return False
        return True

    def full_check() -> bool:
        r = range(n)
        for a in r:
            for b in r:
                for c in r:
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        return False
                    if mul[a][join[b][c]] != join[mul[a][b]][mul[a][c]]:
                        return False
        return True

    def go(k: int) -> Iterator[tuple]:
        if k == len(cells):
            if full_check():
                yield tuple(map(tuple, mul))
            return
        a, b = cells[k]
        for v in range(n):
            if not leq[v][meet[a][b]]:
                continue
            mul[a][b] = mul[b][a] = v
            if consistent(a, b):
                yield from go(k + 1)
            mul[a][b] = mul[b][a] = None

    yield from go(0)


def _residual(n: int, leq: tuple, join: tuple, mul: tuple) -> tuple:
    imp = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            acc = 0
            for c in range(n):
                if leq[mul[a][c]][b]:
                    acc = join[acc][c]
            imp[a][b] = acc
    return tuple(map(tuple, imp))


def _bangs(n: int, leq: tuple, meet: tuple, mul: tuple) -> Iterator[tuple]:
    """Interior operators onto sets of idempotents closed under products."""
    t = n - 1
    idem = [a for a in range(n - 1) if mul[a][a] == a]
    for k in range(len(idem) + 1):
        for sub in itertools.combinations(idem, k):
            image = set(sub) | {t}
            if any(mul[a][b] not in image for a in image for b in image):
                continue
            bang = []
            for a in range(n):
                below = [s for s in image if leq[s][a]]
                top = [s for s in below if all(leq[u][s] for u in below)]
                if len(top) != 1:
                    break
                bang.append(top[0])
            else:
                bang = tuple(bang)
                if all(mul[bang[a]][bang[b]] == bang[meet[a][b]]
                       for a in range(n) for b in range(n)):
                    yield bang


@lru_cache(maxsize=None)
def _all_algebras(n: int) -> tuple:
    out = []
    for leq in lattices(n):
        meet, join = _lattice_tables(n, leq)
        autos = _automorphisms(n, leq)
        seen = set()
        for mul in _monoids(n, leq, meet, join):
            imp = _residual(n, leq, join, mul)
            for bang in _bangs(n, leq, meet, mul):
                canon = min((_permute_op(mul, p), tuple(p[bang[p.index(a)]] for a in range(n)))
                            for p in autos)
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(Algebra(n, leq, meet, join, mul, imp, bang))
    return tuple(out)


def enumerate_algebras(n: int, th: Theory = ILL) -> Iterator[Algebra]:
    """All algebras of size n satisfying the theory's laws, one per
    isomorphism class, in a fixed order."""
    for alg in _all_algebras(n):
        if alg.satisfies(th):
            yield alg


# ------------------------------------------------------ countermodels

@dataclass(frozen=True)
class Found:
    algebra: Algebra
    valuation: Valuation
    direction: str      # "forward" (a does not entail b) or "backward"
    sequent: Sequent

    def to_text(self) -> str:
        from .syntax import sequent_text
        return "\n".join([f"fails: {sequent_text(self.sequent, 'ill')}",
                          self.algebra.to_text(), self.valuation.to_text()])

    def recheck(self) -> bool:
        return self.algebra.law_violations() == [] and not holds(
            self.sequent, self.algebra, self.valuation)


@dataclass(frozen=True)
class NotFoundWithinBounds:
    max_size: int
    max_domain: int


CountermodelResult = Union[Found, NotFoundWithinBounds]


def _needs_domain(fs) -> bool:
    atoms, consts, fv = _signature(fs)
    return any(k for _, k in atoms) or bool(consts) or bool(fv) or any(
        isinstance(g, (Forall, Exists)) for f in fs for g in subformulas(f))


def refute(s: Sequent, th: Theory = ILL, max_size: int = 6,
           max_domain: int = 3) -> Optional[tuple]:
    """Smallest-first search for an algebra and valuation falsifying ``s``."""
    fs = tuple(s.hyps) + (s.goal,)
    domains = range(1, max_domain + 1) if _needs_domain(fs) else (1,)
    for n in range(2, max_size + 1):
        for d in domains:
            for alg in enumerate_algebras(n, th):
                v = violation(s, alg, d)
                if v is not None:
                    return alg, v
    return None


def find_countermodel(a: Formula, b: Formula, th: Theory = ILL, max_size: int = 6,
                      max_domain: int = 3) -> CountermodelResult:
    for direction, s in (("forward", Sequent((a,), b)), ("backward", Sequent((b,), a))):
        hit = refute(s, th, max_size, max_domain)
        if hit is not None:
            found = Found(hit[0], hit[1], direction, s)
            assert found.recheck()
            return found
    return NotFoundWithinBounds(max_size, max_domain)


# --------------------------------------------------------- table check

class Status(str, Enum):
    PROVED = "PROVED"
    REFUTED = "REFUTED"
    INCONCLUSIVE = "INCONCLUSIVE"
    INCONCLUSIVE_NEGATIVE = "INCONCLUSIVE-NEGATIVE"


@dataclass(frozen=True)
class Bounds:
    max_size: int = 6
    max_domain: int = 3
    budget: object = None   # prover Budget; None means the default


@dataclass
class Cell:
    theory: str
    expected: bool
    status: Status
    detail: str = ""
    evidence: object = None     # Equivalent proofs or a Found model
    seconds: float = 0.0

    @property
    def verdict(self) -> str:
        """match, mismatch or inconclusive against the expected mark."""
        if self.status is Status.PROVED:
            return "match" if self.expected else "mismatch"
        if self.status is Status.REFUTED:
            return "mismatch" if self.expected else "match"
        return "inconclusive"


@dataclass
class RowResult:
    row: object
    cells: list


@dataclass
class TableReport:
    table: str
    columns: tuple
    rows: list = field(default_factory=list)

    @property
    def mismatches(self) -> list:
        return [(r.row.label, c.theory) for r in self.rows for c in r.cells
                if c.verdict == "mismatch"]

    @property
    def undocumented_inconclusive(self) -> list:
        return [(r.row.label, c.theory) for r in self.rows for c in r.cells
                if c.verdict == "inconclusive" and not r.row.note]

    def text(self) -> str:
        from .syntax import to_text
        mark = {True: "yes", False: "no"}
        out = [f"table {self.table}: columns {' '.join(self.columns)}"]
        for r in self.rows:
            cells = "  ".join(f"{c.theory}={c.status.value}(expected {mark[c.expected]},"
                              f" {c.verdict})" for c in r.cells)
            out.append(f"({r.row.label}) {to_text(r.row.left)} <-> {to_text(r.row.right)}: {cells}")
            for c in r.cells:
                if c.detail:
                    out.append(f"    {c.theory}: {c.detail}")
            if r.row.note:
                out.append(f"    note: {r.row.note}")
        return "\n".join(out)

    def records(self) -> str:
        from .syntax import to_text
        recs = []
        for r in self.rows:
            for c in r.cells:
                recs.append("\n".join([
                    f"table={self.table}", f"row={r.row.label}", f"theory={c.theory}",
                    f"left={to_text(r.row.left)}", f"right={to_text(r.row.right)}",
                    f"expected={'holds' if c.expected else 'fails'}",
                    f"status={c.status.value}", f"verdict={c.verdict}"]))
        return "\n\n".join(recs)


def check_cell(row, theory: str, expected: bool, bounds: Bounds) -> Cell:
    start = time.monotonic()
    cell = _check_cell(row, theory, expected, bounds)
    cell.seconds = time.monotonic() - start
    return cell


def _check_cell(row, theory: str, expected: bool, bounds: Bounds) -> Cell:
    from .proofs import THEORIES
    from .prover import Budget, Equivalent, check_equiv

    th = THEORIES[theory]
    res = check_equiv(row.left, row.right, th, bounds.budget or Budget())
    if isinstance(res, Equivalent):
        return Cell(theory, expected, Status.PROVED, "both directions proved", res)
    missing = [name for name, r in (("forward", res.forward), ("backward", res.backward))
               if not hasattr(r, "tree")]
    why = ", ".join(f"{m} {getattr(getattr(res, m), 'reason', '')}" for m in missing)
    if row.finite_blind:
        return Cell(theory, expected, Status.INCONCLUSIVE_NEGATIVE,
                    f"prover NotFound ({why}); finite countermodel search not applied")
    hit = find_countermodel(row.left, row.right, th, bounds.max_size, bounds.max_domain)
    if isinstance(hit, Found):
        return Cell(theory, expected, Status.REFUTED,
                    f"{hit.direction} fails in an algebra of size {hit.algebra.n},"
                    f" domain {hit.valuation.domain}", hit)
    return Cell(theory, expected, Status.INCONCLUSIVE,
                f"prover NotFound ({why}); no countermodel up to size {bounds.max_size},"
                f" domain {bounds.max_domain}")


def check_table(which, bounds: Bounds = Bounds()) -> TableReport:
    from .tables import TABLES, TableId

    which = TableId(which)
    columns, rows = TABLES[which]
    report = TableReport(which.value, columns)
    for row in rows:
        cells = [check_cell(row, th, exp, bounds) for th, exp in zip(columns, row.expected)]
        report.rows.append(RowResult(row, cells))
    return report
