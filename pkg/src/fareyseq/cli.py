"""``farey`` command line.

Payload goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 a check reported a failure, 2 usage or input error, 3 a computation cap
was exceeded, 4 a truncated enumeration ran out of range.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import analysis, core, cycles, oracle, primes
from .errors import ComputationCapExceeded, FareyOverflowError, InvariantError, TruncationExhausted
from .model import Fraction
from .serialize import dumps_jsonl, header_json, read_jsonl, triple_json

FORMATS = ("triples-jsonl", "fractions", "csv", "report-text")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _fraction(text: str) -> Fraction:
    try:
        return Fraction.parse(text)
    except (InvariantError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_gen(args, out):
    m = args.order
    if args.classic:
        if args.format == "fractions":
            out.writelines(f"{f}\n" for f in core.iter_classic(m))
            return 0
        triples = list(core.iter_triples(m))
    else:
        triples = core.generate(m).entries
    if args.format == "triples-jsonl":
        out.write(header_json(m, len(triples)) + "\n")
        out.writelines(triple_json(*t) + "\n" for t in triples)
    elif args.format == "fractions":
        out.writelines(f"{n}/{d}\n" for n, d, _ in triples)
    elif args.format == "csv":
        out.write("n,d,s\n")
        out.writelines(f"{n},{d},{s}\n" for n, d, s in triples)
    else:
        out.write(" || ".join(f"({n},{d},{s})" for n, d, s in triples) + "\n")
    return 0


def cmd_step(args, out):
    if args.input in (None, "-"):
        seq = read_jsonl(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as fp:
            seq = read_jsonl(fp)
    nxt, _ = core.step(seq, validate=False)
    out.write(dumps_jsonl(nxt))
    return 0


def cmd_created(args, out):
    for cf in core.created(args.order):
        out.write(json.dumps({"n": cf.n, "d": cf.d, "s_f": cf.s_f, "i_f": cf.i_f}, separators=(",", ":")) + "\n")
    return 0


def cmd_props(args, out):
    if args.order < 2:
        raise InvariantError("properties are stated for orders >= 2")
    ids = args.only or list(analysis.PROPERTY_IDS)
    reports = analysis.check_all(args.order, ids)
    for r in reports:
        out.write(r.to_json() + "\n")
    return 0 if all(r.holds for r in reports) else 1


def cmd_gap(args, out):
    if args.frac == (1, 1):
        raise InvariantError("1/1 has no successor")
    out.write(f"{analysis.gap(args.frac, args.order)}\n")
    return 0


def cmd_index(args, out):
    reg = core.registry(args.order)
    out.write(f"{analysis.order_index(args.frac, args.order, reg)}\n")
    return 0


def cmd_franel(args, out):
    rows = analysis.franel_table(args.max_order, verify=args.verify)
    if args.out in (None, "-"):
        analysis.write_franel_csv(rows, out)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fp:
            analysis.write_franel_csv(rows, fp)
    return 0


def cmd_cycles(args, out):
    d, c = args.denominator, args.c
    if args.ems:
        out.write(" ".join(map(str, cycles.ems(d, c, args.ems))) + "\n")
    else:
        out.write(cycles.cycle_set_for_denominator(d, c).render() + "\n")
    return 0


def cmd_primes(args, out):
    out.write(" ".join(map(str, primes.prime_stream(args.count, strict=args.strict))) + "\n")
    return 0


def cmd_twins(args, out):
    if args.paper_k is None:
        out.writelines(f"{p} {q}\n" for p, q in primes.twin_stream(args.count))
        return 0
    lines: list[str] = []
    primes.twin_primes_report(args.count, args.paper_k, lines)
    out.writelines(ln + "\n" for ln in lines)
    return 0


def selftest(max_order: int, out=None) -> bool:
    """Oracle-equivalence sweep over orders ``1 .. max_order``."""
    failures = []

    def report(name, ok, t0):
        status = "PASS" if ok else "FAIL"
        if out is not None:
            out.write(f"{status} {name} ({time.perf_counter() - t0:.1f}s)\n")
        if not ok:
            failures.append(name)

    t0 = time.perf_counter()
    ok = all(
        seq.fractions() == oracle.naive_farey(seq.order) for seq in core.iter_sequences(max_order)
    )
    report(f"sequences match enumeration for m <= {max_order}", ok, t0)

    t0 = time.perf_counter()
    ok = True
    for seq in core.iter_sequences(max_order):
        if seq.order >= 2:
            _, table = oracle.naive_s_table(seq.order)
            ok &= bool((seq.s[:-1] == table).all())
    report("s values match the brute-force countdown", ok, t0)

    t0 = time.perf_counter()
    ok = all(len(cm) == oracle.naive_totient(m + 1) for m, cm in core.iter_created(max_order))
    report("|C_m| = phi(m+1)", ok, t0)

    t0 = time.perf_counter()
    ok = True
    for reg in core.iter_sequences(max_order, with_registry=True):
        m = reg.order
        if m < 2:
            continue
        ok &= all(r.holds for r in analysis.check_all(m, reg=reg))
        seq = reg.sequence
        for pos, (a, b) in enumerate(zip(seq.n.tolist(), seq.d.tolist())):
            ok &= analysis.order_index((a, b), m, reg) == pos + 1
            if pos < len(seq) - 1:
                g = analysis.gap((a, b), m, int(reg.s_f[pos]))
                nxt = Fraction(int(seq.n[pos + 1]), int(seq.d[pos + 1]))
                ok &= g.value() == nxt.value() - Fraction(a, b).value()
    report("properties 1-7, order index and gap formula", ok, t0)

    t0 = time.perf_counter()
    limit = max(max_order, 3)
    ok = all(primes.is_prime_farey(p) == oracle.trial_division_is_prime(p) for p in range(2, limit + 1))
    ok &= all(
        primes.is_lesser_twin_farey(p)
        == (oracle.trial_division_is_prime(p) and oracle.trial_division_is_prime(p + 2))
        for p in range(3, limit + 1)
    )
    report(f"Farey prime and twin sieves match trial division for p <= {limit}", ok, t0)
    return not failures


def cmd_selftest(args, out):
    return 0 if selftest(args.max_order, out) else 1


def cmd_oracle(args, out):
    for n, d in oracle.naive_farey(args.order):
        out.write(f"{n}/{d}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farey", description="Farey sequence recursions, cycle sets and prime sieves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate F_M")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--format", choices=FORMATS, default="triples-jsonl")
    p.add_argument("--classic", action="store_true", help="stream with the next-term recursion")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("step", help="advance a JSON-lines sequence by one order")
    p.add_argument("--input", help="file to read (default: stdin)")
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("created", help="list C_M")
    p.add_argument("--order", type=_positive, required=True)
    p.set_defaults(func=cmd_created)

    p = sub.add_parser("props", help="check properties 1-7 at order M")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--only", type=int, nargs="+", choices=analysis.PROPERTY_IDS)
    p.set_defaults(func=cmd_props)

    for name, func in (("gap", cmd_gap), ("index", cmd_index)):
        p = sub.add_parser(name, help=f"{name} of a fraction in F_M")
        p.add_argument("--frac", type=_fraction, required=True)
        p.add_argument("--order", type=_positive, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("franel", help="Franel-Landau sums as CSV")
    p.add_argument("--max-order", type=_positive, required=True)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--verify", action="store_true", help="recompute through the index formula")
    p.set_defaults(func=cmd_franel)

    p = sub.add_parser("cycles", help="orders where denominator D carries countdown C")
    p.add_argument("--denominator", type=_positive, required=True)
    p.add_argument("--c", type=_positive, required=True)
    p.add_argument("--ems", type=_positive, metavar="K", help="list the first K terms of each progression")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("primes", help="odd primes from the intersection recursion")
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--strict", action="store_true", help="intersect every denominator up to the candidate")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("twins", help="twin prime pairs")
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--paper-k", type=_positive, metavar="K", help="use truncated sets with K terms")
    p.set_defaults(func=cmd_twins)

    p = sub.add_parser("selftest", help="oracle-equivalence sweep")
    p.add_argument("--max-order", type=_positive, default=60)
    p.set_defaults(func=cmd_selftest)

    # fixture regeneration; not advertised
    p = sub.add_parser("oracle-farey")
    p.add_argument("--order", type=_positive, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        return args.func(args, out)
    except InvariantError as exc:
        print(f"farey {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ComputationCapExceeded, FareyOverflowError) as exc:
        print(f"farey {args.command}: {exc}", file=sys.stderr)
        return 3
    except TruncationExhausted as exc:
        print(f"farey {args.command}: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
