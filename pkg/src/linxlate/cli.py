"""Command-line front end.

Exit codes: 0 success or expected result, 1 mismatch (including a
refutation where a proof was expected), 2 usage, parse or language error,
3 inconclusive (budget or bounds exhausted).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import corpus as corpus_mod
from .formula import Sequent
from .models import Bounds, check_table
from .proofs import THEORIES
from .prover import Budget, Proved, prove
from .rewrite import SIMPLIFICATIONS, SimplificationId, Strategy, apply
from .syntax import Lang, ParseError, parse, parse_sequent, read_formulas, sequent_text, to_text
from .tables import TableId
from .xlate import LanguageMismatch, TranslationId, translate

OK, MISMATCH, USAGE, INCONCLUSIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _emit(out: list, fmt: str, **fields) -> None:
    if fmt == "records":
        if out:
            out.append("\n")
        out.append("\n".join(f"{k}={v}" for k, v in fields.items()) + "\n")
    else:
        out.append(" ".join(str(v) for v in fields.values()) + "\n")


def _budget(ns) -> Budget:
    return Budget(max_depth=ns.max_depth, max_contractions=ns.max_contractions,
                  max_terms=ns.max_terms, timeout_ms=ns.timeout_ms, cut=ns.cut)


def _sequent(text: str) -> Sequent:
    if "|-" in text:
        return parse_sequent(text, Lang.ILL)
    return Sequent((), parse(text, Lang.ILL))


def _inputs(ns, lang: Lang) -> list:
    if ns.input:
        with open(ns.input, encoding="utf-8") as fh:
            return read_formulas(fh.read(), lang)
    if ns.formula is None:
        raise ParseError("no formula given", 0, ("formula",))
    return [parse(ns.formula, lang)]


# ------------------------------------------------------------ commands

def cmd_translate(ns, out: list) -> int:
    tid = TranslationId(ns.translation)
    lang = Lang(ns.lang) if ns.lang else tid.source
    if lang is not tid.source:
        raise LanguageMismatch(f"{tid.value} translates {tid.source.value} formulas, not {lang.value}")
    for a in _inputs(ns, lang):
        b = translate(a, tid)
        if ns.format == "records":
            _emit(out, "records", translation=tid.value, input=to_text(a, lang),
                  output=to_text(b, tid.target))
        else:
            out.append(to_text(b, tid.target) + "\n")
    return OK


def cmd_simplify(ns, out: list) -> int:
    if ns.simplification == "none":
        rules, strategy = (), Strategy(ns.strategy or "outside")
    else:
        s = SIMPLIFICATIONS[SimplificationId(ns.simplification)]
        rules, strategy = s.rules, Strategy(ns.strategy or s.strategy)
    for a in _inputs(ns, Lang.ILL):
        trace: list = []
        b = apply(a, rules, strategy, trace)
        if ns.format == "records":
            _emit(out, "records", input=to_text(a), output=to_text(b), strategy=strategy.value,
                  firings=len(trace))
            for i, f in enumerate(trace if ns.trace else ()):
                out.append(f"step{i + 1}={f.describe()}\n")
        else:
            out.append(to_text(b) + "\n")
            if ns.trace:
                for f in trace:
                    out.append(f"  {f.describe()}  ->  {to_text(f.after)}\n")
    return OK


def cmd_prove(ns, out: list) -> int:
    s = _sequent(ns.sequent)
    th = THEORIES[ns.theory]
    res = prove(s, th, _budget(ns))
    proved = isinstance(res, Proved)
    status = "Proved" if proved else f"NotFound({res.reason})"
    if ns.format == "records":
        _emit(out, "records", sequent=sequent_text(s), theory=th.name, status=status,
              **({"size": res.tree.size()} if proved else {}))
    else:
        out.append(f"{status}: {sequent_text(s)} in {th.name}\n")
        if proved and ns.show_proof:
            out.append(res.tree.to_text() + "\n")
    if ns.expect == "proved":
        return OK if proved else INCONCLUSIVE
    return MISMATCH if proved else OK


def cmd_refute(ns, out: list) -> int:
    s = _sequent(ns.sequent)
    th = THEORIES[ns.theory]
    from .models import refute
    hit = refute(s, th, ns.max_size, ns.max_domain)
    if hit is not None:
        alg, v = hit
        if ns.format == "records":
            _emit(out, "records", sequent=sequent_text(s), theory=th.name, status="Found",
                  size=alg.n, domain=v.domain)
        else:
            out.append(f"Found countermodel for {sequent_text(s)} in {th.name}\n")
            out.append(alg.to_text() + "\n" + v.to_text() + "\n")
        return OK if ns.expect == "refuted" else MISMATCH
    if ns.format == "records":
        _emit(out, "records", sequent=sequent_text(s), theory=th.name,
              status="NotFoundWithinBounds", size=ns.max_size, domain=ns.max_domain)
    else:
        out.append(f"NotFoundWithinBounds (size <= {ns.max_size}, domain <= {ns.max_domain})\n")
    return INCONCLUSIVE


def cmd_check_tables(ns, out: list) -> int:
    which = list(TableId) if ns.table == "all" else [TableId(ns.table)]
    bounds = Bounds(ns.max_size, ns.max_domain, _budget(ns))
    code = OK
    for t in which:
        rep = check_table(t, bounds)
        out.append((rep.records() if ns.format == "records" else rep.text()) + "\n")
        if rep.mismatches:
            code = MISMATCH
        elif rep.undocumented_inconclusive and code == OK:
            code = INCONCLUSIVE
    return code


def cmd_corpus(ns, out: list) -> int:
    lang = Lang(ns.lang)
    for i, a in enumerate(corpus_mod.corpus(ns.seed, ns.count, ns.depth, ns.atoms,
                                            ns.vars, lang)):
        if ns.format == "records":
            _emit(out, "records", seed=ns.seed, index=i, formula=to_text(a, lang))
        else:
            out.append(to_text(a, lang) + "\n")
    return OK


def cmd_selftest(ns, out: list) -> int:
    from .acceptance import run_all
    ok = True
    for r in run_all(quick=ns.quick):
        ok &= r.ok
        out.append(r.line() + "\n")
        sys.stdout.write(out.pop())
        sys.stdout.flush()
    return OK if ok else MISMATCH


# -------------------------------------------------------------- parser

def _add_budget(p) -> None:
    b = Budget()
    p.add_argument("--theory", choices=sorted(THEORIES), default="ill")
    p.add_argument("--max-depth", type=int, default=b.max_depth)
    p.add_argument("--max-contractions", type=int, default=b.max_contractions)
    p.add_argument("--max-terms", type=int, default=b.max_terms)
    p.add_argument("--timeout-ms", type=int, default=b.timeout_ms)
    p.add_argument("--cut", action="store_true", help="allow analytic cuts")


def _add_bounds(p) -> None:
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--max-domain", type=int, default=3)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="linxlate", description="Negative and exponential translations "
                 "into intuitionistic linear logic, with proof and countermodel search.")
    ap.add_argument("--format", choices=("text", "records"), default="text")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("translate", help="apply a translation")
    p.add_argument("formula", nargs="?")
    p.add_argument("--input", help="file with one formula per line")
    p.add_argument("--translation", required=True, choices=[t.value for t in TranslationId])
    p.add_argument("--from", dest="lang", choices=[l.value for l in Lang])
    p.set_defaults(run=cmd_translate)

    p = sub.add_parser("simplify", help="rewrite with a simplification rule set")
    p.add_argument("formula", nargs="?")
    p.add_argument("--input")
    p.add_argument("--simplification", default=SimplificationId.GG_FROM_KOLM_O.value,
                   choices=[s.value for s in SimplificationId] + ["none"])
    p.add_argument("--strategy", choices=[s.value for s in Strategy])
    p.add_argument("--trace", action="store_true")
    p.set_defaults(run=cmd_simplify)

    p = sub.add_parser("prove", help="search for a proof of a sequent")
    p.add_argument("sequent")
    _add_budget(p)
    p.add_argument("--expect", choices=("proved", "notfound"), default="proved")
    p.add_argument("--show-proof", action="store_true")
    p.set_defaults(run=cmd_prove)

    p = sub.add_parser("refute", help="search for a finite countermodel")
    p.add_argument("sequent")
    p.add_argument("--theory", choices=sorted(THEORIES), default="ill")
    _add_bounds(p)
    p.add_argument("--expect", choices=("refuted", "valid"), default="refuted")
    p.set_defaults(run=cmd_refute)

    p = sub.add_parser("check-tables", help="check the equivalence matrices")
    p.add_argument("table", nargs="?", default="all", choices=[t.value for t in TableId] + ["all"])
    _add_budget(p)
    _add_bounds(p)
    p.set_defaults(run=cmd_check_tables, timeout_ms=3000)

    p = sub.add_parser("corpus", help="print seeded random formulas")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--atoms", type=int, default=3)
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lang", choices=[l.value for l in Lang], default="ill")
    p.set_defaults(run=cmd_corpus)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="smaller samples")
    p.set_defaults(run=cmd_selftest)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    out: list = []
    try:
        code = ns.run(ns, out)
    except ParseError as e:
        sys.stdout.write("".join(out))
        print(f"parse error: {e}", file=sys.stderr)
        return USAGE
    except (LanguageMismatch, OSError, ValueError) as e:
        sys.stdout.write("".join(out))
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    sys.stdout.write("".join(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
