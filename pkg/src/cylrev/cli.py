"""Command-line front end.

Every subcommand prints either plain ``key: value`` text or, with
``--json``, the same values as one JSON document.  Exit codes: 0 on
success, 1 on a verdict-level failure (table mismatch, failed internal
consistency check, failed prediction), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import CapacityError, CylrevError, PreconditionError, TheoremViolation
from .families import (
    block_report,
    conjecture_experiment,
    exp_bound_check,
    exp_closed_word,
    exp_report,
    reflect,
    reversibility_index,
    scale,
    scaled_kernel_prediction,
    translate,
)
from .gf2 import inverse_rule
from .recursion import DEFAULT_DELTA_CAP, PositionCollection, format_word
from .spectrum import (
    DEFAULT_TMAX_DELTA,
    Spectrum,
    irreversibility_witness,
    is_reversible,
    kernel,
    reversible_sizes,
    rule_bitstring,
    spectrum,
)
from .tables import reproduce_table1, reproduce_table2

BLOCK_H_CAP = DEFAULT_TMAX_DELTA
EXP_N_CAP = 14
CONJECTURE_M_CAP = 6


class UsageError(CylrevError):
    pass


@dataclass(frozen=True)
class RuleSpec:
    """A rule given as a 01-word or as an explicit position list."""

    collection: PositionCollection
    length: Optional[int] = None  # set for 01-word input

    @classmethod
    def parse(cls, text: str) -> "RuleSpec":
        kind, _, body = text.partition(":")
        if kind == "rule":
            return cls.from_rule(body)
        if kind == "positions":
            return cls(PositionCollection.parse(body))
        raise PreconditionError(f"unknown rule spec {text!r}")

    @classmethod
    def from_rule(cls, word: str) -> "RuleSpec":
        c = PositionCollection.from_rule(word)
        return cls(c, len(word))

    def format(self) -> str:
        if self.length is not None:
            return "rule:" + self.rule_text()
        return f"positions:{self.collection}"

    def rule_text(self) -> str:
        n = self.length if self.length is not None else self.collection.last + 1
        return rule_bitstring(self.collection, max(n, self.collection.last + 1)).to_text()


# ---------- output

def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ",".join(_fmt(v) for v in value) if value else "-"
    if value is None:
        return "-"
    return str(value)


def _text_block(d: dict) -> list[str]:
    return [f"{k}: {_fmt(v)}" for k, v in d.items()]


@dataclass
class Outcome:
    payload: dict
    lines: list[str]
    code: int = 0


def _spectrum_payload(s: Spectrum) -> dict:
    d = s.to_dict()
    d["complete"] = s.complete
    return d


def _rule_from_args(args) -> RuleSpec:
    if args.rule is not None:
        return RuleSpec.from_rule(args.rule)
    if args.positions is not None:
        return RuleSpec(PositionCollection.parse(args.positions))
    raise UsageError("one of --rule or --positions is required")


def _spectrum_for(c: PositionCollection, method: str = "auto", t_max=None,
                  cap: int = DEFAULT_DELTA_CAP, fallback_t_max=None) -> Spectrum:
    if (method in ("auto", "poly") and t_max is None and c.r > 1
            and c.delta > DEFAULT_TMAX_DELTA):
        if fallback_t_max is None:
            raise CapacityError(
                f"delta={c.delta} exceeds {DEFAULT_TMAX_DELTA}; pass --t-max")
        t_max = fallback_t_max
    return spectrum(c, method=method, t_max=t_max, cap=cap)


# ---------- commands

def cmd_check(args) -> Outcome:
    spec = _rule_from_args(args)
    c, n = spec.collection, args.n
    v = rule_bitstring(c, n)
    reversible = is_reversible(c, n)
    s = _spectrum_for(c, fallback_t_max=n)
    payload = {
        "rule": v.to_text(),
        "collection": list(c.positions),
        "n": n,
        "verdict": "REVERSIBLE" if reversible else "IRREVERSIBLE",
        "kernel": sorted(s.kernel, reverse=True),
    }
    if reversible:
        if args.inverse:
            w = inverse_rule(v)
            if w is None:
                raise TheoremViolation(f"{v} judged reversible but has no inverse")
            payload["inverse"] = w.to_text()
    else:
        w = irreversibility_witness(c, n)
        if w is None:
            raise TheoremViolation(f"{v} judged irreversible but no witness found")
        payload["witness"] = w.to_text()
    return Outcome(payload, _text_block(payload))


def cmd_spectrum(args) -> Outcome:
    c = _rule_from_args(args).collection
    s = _spectrum_for(c, args.method, args.t_max, args.cap)
    payload = _spectrum_payload(s)
    return Outcome(payload, _text_block(payload))


def cmd_sizes(args) -> Outcome:
    c = _rule_from_args(args).collection
    if args.hi < args.lo:
        raise UsageError(f"empty range {args.lo}..{args.hi}")
    rows = reversible_sizes(c, args.lo, args.hi)
    irreversible = [n for n, ok in rows if not ok]
    payload = {
        "collection": list(c.positions),
        "lo": args.lo,
        "hi": args.hi,
        "irreversible": irreversible,
        "sizes": [{"n": n, "reversible": ok} for n, ok in rows],
    }
    lines = [f"collection: {_fmt(list(c.positions))}",
             f"irreversible: {_fmt(irreversible)}"]
    lines += [f"{n}\t{'REVERSIBLE' if ok else 'IRREVERSIBLE'}" for n, ok in rows]
    return Outcome(payload, lines)


def cmd_kernel(args) -> Outcome:
    if args.values is not None:
        values = [int(t) for t in args.values.replace(",", " ").split()]
        payload = {"values": sorted(set(values), reverse=True),
                   "kernel": sorted(kernel(values), reverse=True)}
    else:
        c = _rule_from_args(args).collection
        s = _spectrum_for(c, t_max=args.t_max)
        payload = _spectrum_payload(s)
    return Outcome(payload, _text_block(payload))


def cmd_inverse(args) -> Outcome:
    spec = _rule_from_args(args)
    v = rule_bitstring(spec.collection, args.n)
    w = inverse_rule(v)
    payload = {"rule": v.to_text(), "n": args.n,
               "invertible": w is not None,
               "inverse": None if w is None else w.to_text()}
    return Outcome(payload, _text_block(payload))


def cmd_family(args) -> Outcome:
    if args.family == "block":
        if args.h > BLOCK_H_CAP:
            raise CapacityError(f"--h {args.h} exceeds the cap {BLOCK_H_CAP}")
        rep = block_report(args.h)
        payload = rep.to_dict()
        return Outcome(payload, _text_block(payload), 0 if rep.match else 1)
    if args.n > EXP_N_CAP:
        raise CapacityError(f"--n {args.n} exceeds the cap {EXP_N_CAP}")
    check = exp_bound_check(args.n)
    rep = exp_report(args.n)
    payload = rep.to_dict()
    payload["divisible"] = check.divisible
    payload["modulus_exponent"] = check.modulus_exponent
    if args.m is not None:
        payload["closed_word"] = format_word(exp_closed_word(args.n, args.m), run_length=True)
    ok = rep.match and check.divisible
    return Outcome(payload, _text_block(payload), 0 if ok else 1)


def cmd_transform(args) -> Outcome:
    c = _rule_from_args(args).collection
    if args.transform == "reflect":
        image = reflect(c)
    elif args.a is None:
        raise UsageError(f"{args.transform} needs --a")
    elif args.transform == "translate":
        image = translate(c, args.a)
    else:
        image = scale(c, args.a)
    payload = {"transform": args.transform, "collection": list(c.positions),
               "image": list(image.positions)}
    code = 0
    try:
        before = _spectrum_for(c)
        after = _spectrum_for(image)
    except CapacityError:
        payload["checked"] = False
    else:
        if args.transform == "scale":
            predicted = scaled_kernel_prediction(before.kernel, args.a)
            computed = after.kernel
        else:
            predicted, computed = before.exact_periods, after.exact_periods
        payload.update(checked=True,
                       predicted=sorted(predicted, reverse=True),
                       computed=sorted(computed, reverse=True),
                       match=predicted == computed)
        code = 0 if predicted == computed else 1
    return Outcome(payload, _text_block(payload), code)


def cmd_index(args) -> Outcome:
    c = _rule_from_args(args).collection
    idx = reversibility_index(c, cap=args.cap)
    payload = {"collection": list(c.positions)}
    payload.update(idx.to_dict())
    return Outcome(payload, _text_block(payload))


def cmd_conjecture(args) -> Outcome:
    if args.m_max > CONJECTURE_M_CAP:
        raise CapacityError(f"--m-max {args.m_max} exceeds the cap {CONJECTURE_M_CAP}")
    rows = conjecture_experiment(args.m_max)
    payload = {"rows": [r.to_dict() for r in rows]}
    lines = []
    for r in rows:
        label = "complete" if r.complete else f"complete up to {r.complete_up_to}"
        lines.append(f"m={r.m}\t{_fmt(list(r.collection))}\tmax_period={r.max_period}"
                     f"\tbound={r.bound}\t{r.status}\t({label})")
    return Outcome(payload, lines)


def cmd_tables(args) -> Outcome:
    rows = reproduce_table1(jobs=args.jobs) + reproduce_table2()
    failed = [r for r in rows if not r.passed]
    payload = {"rows": [r.to_dict() for r in rows], "failed": len(failed)}
    lines = []
    for r in rows:
        lines.append(f"table{r.table}\trow {r.row}\t({r.label})\tcomputed={_fmt(sorted(r.computed, reverse=True))}"
                     f"\tpublished={_fmt(sorted(r.published, reverse=True))}\t"
                     f"{'PASS' if r.passed else 'FAIL'}")
    lines.append(f"{len(rows) - len(failed)}/{len(rows)} rows match")
    return Outcome(payload, lines, 1 if failed else 0)


# ---------- parser

def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", action="store_true", help="emit JSON")
    out.add_argument("--out", help="write output to this file instead of stdout")

    rule = argparse.ArgumentParser(add_help=False)
    g = rule.add_mutually_exclusive_group()
    g.add_argument("--rule", help="rule as a 01-word, position 0 leftmost")
    g.add_argument("--positions", help="unit positions, e.g. 1,2,4")

    parser = argparse.ArgumentParser(
        prog="cylrev",
        description="Reversibility of additive cellular automata on cylinders.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[rule, out], help="verdict for one cylinder size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--inverse", action="store_true", help="print the inverse rule when reversible")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", parents=[rule, out], help="exact period lengths and kernel")
    p.add_argument("--method", choices=["auto", "brute", "poly", "both"], default="auto")
    p.add_argument("--t-max", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_DELTA_CAP, help="brute-force delta cap")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sizes", parents=[rule, out], help="verdicts over a range of sizes")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.set_defaults(func=cmd_sizes)

    p = sub.add_parser("kernel", parents=[rule, out], help="divisibility-minimal periods")
    p.add_argument("--values", help="explicit set, e.g. 42,21,14,7,3")
    p.add_argument("--t-max", type=int)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("inverse", parents=[rule, out], help="inverse rule on a cylinder")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("family", help="block and exponential families")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("block", parents=[out])
    q.add_argument("--h", type=int, required=True)
    q = fam.add_parser("exp", parents=[out])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, help="also print the closed-form word for K(m, 2^n - 1)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("transform", help="translate / scale / reflect a collection")
    tr = p.add_subparsers(dest="transform", required=True)
    for name in ("translate", "scale", "reflect"):
        q = tr.add_parser(name, parents=[rule, out])
        if name != "reflect":
            q.add_argument("--a", type=int, required=True)
        else:
            q.set_defaults(a=None)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("index", parents=[rule, out], help="reversibility index")
    p.add_argument("--cap", type=int, default=DEFAULT_DELTA_CAP)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("conjecture", parents=[out], help="(0, 1, 2^m) experiment")
    p.add_argument("--m-max", type=int, required=True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("tables", parents=[out], help="recompute the published tables")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args)
    except TheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, PreconditionError, CapacityError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        text = json.dumps(outcome.payload, indent=2) + "\n"
    else:
        text = "\n".join(outcome.lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
