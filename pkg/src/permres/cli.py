"""Batch command-line surface with JSON/CSV envelopes, two-prime verified
oracle values, a persistent result cache, and verification suites.

Exit codes: 0 success, 2 formula/oracle mismatch or failed verification,
3 resource cap exceeded, 4 invalid parameters.
"""

import argparse
import csv
import json
import os
import random
import sys
import time

from . import __version__, formulas, lascoux, verify
from .cache import ResultCache
from .ideals import FAMILIES, IdealSpec
from .oracle import betti_oracle, hilbert_oracle
from .simplicial import alexander_dual_ideal, perm2_complex, skeleton_complex
from .tensorspace import DEFAULT_NNZ_CAP, ResourceCapError

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3
EXIT_INVALID = 4

CACHE_ENV = "PERMRES_CACHE_DIR"


class _Parser(argparse.ArgumentParser):
    """argparse with the documented exit code for bad parameters."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _parse_range(text):
    """'3', '2..6', '2:6', or '2,4,6' -> list of ints."""
    text = text.strip()
    for sep in ("..", ":"):
        if sep in text and "," not in text:
            lo, hi = text.split(sep, 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
    return [int(part) for part in text.split(",")]


def _default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "permres")


def _open_cache(args):
    directory = args.cache_dir
    if directory is None:
        directory = _default_cache_dir()
    if directory.lower() in ("none", "off", ""):
        directory = None
    return ResultCache(directory, __version__,
                       rng=random.Random(f"audit-{args.prime_seed}"))


def _verified(cache_, seed, compute_for_field, **cell):
    """Two-prime agreement where each per-prime value goes through the
    cache; disagreement falls back to a third prime."""
    from .modular import agree_over_primes

    def cached_compute(field):
        return cache_.get_or_compute(
            lambda: compute_for_field(field), prime=field.modulus, **cell
        )

    return agree_over_primes(cached_compute, seed)


def _family(name):
    aliases = {"perm": "subpermanents", "det": "minors", "sqfree": "squarefree"}
    name = aliases.get(name, name)
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {FAMILIES}")
    return name


def _hilbert_formula(family, n, kappa, t):
    if family == "squarefree":
        return formulas.sqfree_ideal_hilbert(n, kappa, t)
    if family == "minors":
        # no term enumeration in the degenerate size-1 case
        if kappa == 1:
            return None
        return lascoux.det_ideal_hilbert(n, kappa, t)
    if kappa == 2:
        return formulas.perm2_ideal_hilbert(n, t)
    return None


def _betti_formula(family, n, kappa, i, d):
    if family == "squarefree":
        return formulas.sqfree_betti(n, kappa, i) if d == kappa + i else 0
    if family == "minors":
        if kappa == 1:
            return None
        return sum(t.dim for t in lascoux.lascoux_terms(n, kappa - 1, i + 1)
                   if t.degree == d)
    if d == kappa + i:
        return formulas.perm_linear_strand_dim(n, kappa, i + 1)
    return None


def cmd_hilbert(args, cache_):
    spec = IdealSpec(_family(args.family), args.n, args.kappa)
    cap = None if args.expensive else args.cap_nonzeros
    results = []
    primes = []
    for t in _parse_range(args.t):
        row = {"t": t}
        if args.mode in ("formula", "both"):
            row["formula"] = _hilbert_formula(spec.family, spec.n, spec.kappa, t)
        if args.mode in ("oracle", "both"):
            value, primes = _verified(
                cache_, args.prime_seed,
                lambda f, t=t: hilbert_oracle(spec, t, f, cap=cap),
                kind="hilbert", family=spec.family, n=spec.n,
                kappa=spec.kappa, t=t,
            )
            row["oracle"] = value
        if row.get("formula") is not None and "oracle" in row:
            row["match"] = row["formula"] == row["oracle"]
        results.append(row)
    return results, primes


def cmd_betti(args, cache_):
    spec = IdealSpec(_family(args.family), args.n, args.kappa)
    cap = None if args.expensive else args.cap_nonzeros
    steps = _parse_range(args.steps)
    if args.deg is not None and len(steps) != 1:
        raise ValueError("--deg requires a single step")
    results = []
    primes = []
    for i in steps:
        d = args.deg if args.deg is not None else spec.kappa + i
        row = {"step": i, "degree": d}
        if args.mode in ("formula", "both"):
            row["formula"] = _betti_formula(spec.family, spec.n, spec.kappa,
                                            i, d)
        if args.mode in ("oracle", "both"):
            value, primes = _verified(
                cache_, args.prime_seed,
                lambda f, i=i, d=d: betti_oracle(spec, i, d, f, cap=cap),
                kind="betti", family=spec.family, n=spec.n,
                kappa=spec.kappa, step=i, degree=d,
            )
            row["oracle"] = value
        if row.get("formula") is not None and "oracle" in row:
            row["match"] = row["formula"] == row["oracle"]
        results.append(row)
    return results, primes


def _term_row(term):
    return {
        "step": term.step,
        "strand": term.strand,
        "degree": term.degree,
        "lam_e": list(term.lam_e),
        "lam_f": list(term.lam_f),
        "dim": term.dim,
    }


def cmd_lascoux(args, cache_):
    if not (1 <= args.r < args.n):
        raise ValueError("need 1 <= r < n")
    results = []
    direct = lascoux.lascoux_terms(args.n, args.r, args.j)
    if args.engine in ("direct", "both"):
        results.extend(_term_row(t) for t in direct)
    if args.engine == "bott":
        results.extend(_term_row(t)
                       for t in lascoux.resolution_via_bott(args.n, args.r,
                                                            args.j))
    if args.engine == "both":
        via_bott = lascoux.resolution_via_bott(args.n, args.r, args.j)
        agree = sorted((t.lam_e, t.lam_f, t.dim) for t in direct) == sorted(
            (t.lam_e, t.lam_f, t.dim) for t in via_bott
        )
        results.append({"check": "engines-agree", "match": agree})
    return results, []


def cmd_bott(args, cache_):
    seq = tuple(int(x) for x in args.seq.split(","))
    outcome = lascoux.bott_reduce(seq)
    row = {"sequence": list(seq), "wall": outcome.wall}
    if not outcome.wall:
        row["cohomology_degree"] = outcome.degree
        row["partition"] = list(outcome.partition)
    return [row], []


def cmd_sr(args, cache_):
    if args.complex == "skeleton":
        if args.dim is None and args.kappa is None:
            raise ValueError("skeleton needs --dim or -k (dim = kappa - 2)")
        dim = args.dim if args.dim is not None else args.kappa - 2
        complex_ = skeleton_complex(args.n, dim)
    elif args.complex == "perm2":
        complex_ = perm2_complex(args.n)
    else:
        raise ValueError(f"unknown complex {args.complex!r}")
    row = {
        "complex": args.complex,
        "n": args.n,
        "f_vector": list(complex_.f_vector()),
        "h_vector": list(complex_.h_vector()),
    }
    if args.dual:
        row["dual_generators"] = [list(g) for g in
                                  alexander_dual_ideal(complex_)]
    return [row], []


def cmd_verify(args, cache_):
    rows = verify.run_suite(args.suite, expensive=args.expensive,
                            seed=args.prime_seed)
    passed = sum(1 for r in rows if r["ok"])
    rows.append({
        "suite": args.suite,
        "check": "summary",
        "ok": passed == len(rows),
        "detail": f"{passed}/{len(rows)} checks passed",
    })
    return rows, []


def _exit_code(results):
    for row in results:
        if row.get("match") is False or row.get("ok") is False:
            return EXIT_MISMATCH
    return EXIT_OK


def _emit(envelope, fmt, stream):
    if fmt == "json":
        json.dump(envelope, stream, indent=2, sort_keys=True)
        stream.write("\n")
        return
    rows = envelope["results"]
    fieldnames = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    writer = csv.DictWriter(stream, fieldnames=fieldnames, extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({
            k: json.dumps(v) if isinstance(v, (list, dict)) else v
            for k, v in row.items()
        })


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    fmt = shared.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const",
                     const="json", default="json", help="JSON envelope output")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv",
                     help="CSV output, one result per row")
    shared.add_argument("--cache-dir", default=None,
                        help=f"cache directory (default ${CACHE_ENV} or "
                             "~/.cache/permres; 'none' disables)")
    shared.add_argument("--prime-seed", type=int, default=0,
                        help="seed for drawing the random 31-bit primes")
    shared.add_argument("--expensive", action="store_true",
                        help="lift resource caps for large cells")
    shared.add_argument("--cap-nonzeros", type=int, default=DEFAULT_NNZ_CAP,
                        help="per-matrix nonzero cap for oracle cells")

    parser = _Parser(prog="permres",
                     description="Hilbert functions, Betti numbers, and "
                                 "resolution data with brute-force "
                                 "verification")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("hilbert", parents=[shared],
                       help="Hilbert function of an ideal family")
    p.add_argument("--family", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", "--kappa", type=int, required=True)
    p.add_argument("--t", required=True, help="degree or range, e.g. 2..6")
    p.add_argument("--mode", choices=("formula", "oracle", "both"),
                   default="both")
    p.set_defaults(handler=cmd_hilbert)

    p = sub.add_parser("betti", parents=[shared],
                       help="graded Betti numbers (step 0 = generators)")
    p.add_argument("--family", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", "--kappa", type=int, required=True)
    p.add_argument("--steps", required=True, help="step or range, e.g. 0..2")
    p.add_argument("--deg", type=int, default=None,
                   help="explicit degree (default: linear strand kappa+step)")
    p.add_argument("--mode", choices=("formula", "oracle", "both"),
                   default="both")
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser("lascoux", parents=[shared],
                       help="resolution terms for the ideal of minors")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True,
                   help="minors have size r+1")
    p.add_argument("-j", type=int, required=True, help="resolution step")
    p.add_argument("--engine", choices=("direct", "bott", "both"),
                   default="direct")
    p.set_defaults(handler=cmd_lascoux)

    p = sub.add_parser("bott", parents=[shared],
                       help="dotted Weyl walk on a weight sequence")
    p.add_argument("--seq", required=True, help="comma-separated integers")
    p.set_defaults(handler=cmd_bott)

    p = sub.add_parser("sr", parents=[shared],
                       help="Stanley-Reisner complexes: f/h vectors, duals")
    p.add_argument("--complex", choices=("skeleton", "perm2"), required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--dim", type=int, default=None,
                   help="skeleton dimension")
    p.add_argument("-k", "--kappa", type=int, default=None,
                   help="skeleton via ideal degree (dim = kappa - 2)")
    p.add_argument("--dual", action="store_true",
                   help="include the Alexander dual ideal generators")
    p.set_defaults(handler=cmd_sr)

    p = sub.add_parser("verify", parents=[shared],
                       help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=tuple(sorted(verify.SUITES)) + ("all",))
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_INVALID

    started = time.perf_counter()
    cache_ = _open_cache(args)
    request = {
        "command": args.command,
        "params": {
            k: v
            for k, v in sorted(vars(args).items())
            if k not in ("handler", "command", "format", "cache_dir",
                         "prime_seed", "expensive", "cap_nonzeros")
        },
        "format": args.format,
        "cache_dir": cache_.directory,
        "prime_seed": args.prime_seed,
        "expensive": args.expensive,
    }
    try:
        results, primes = args.handler(args, cache_)
    except ResourceCapError as exc:
        envelope = {
            "request": request,
            "error": {"type": "resource-cap", "message": str(exc)},
            "results": [],
            "primes": [],
            "timing_seconds": round(time.perf_counter() - started, 6),
            "version": __version__,
        }
        _emit(envelope, args.format, sys.stdout)
        return EXIT_RESOURCE
    except (ValueError, KeyError) as exc:
        print(f"permres: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID

    envelope = {
        "request": request,
        "results": results,
        "primes": primes,
        "timing_seconds": round(time.perf_counter() - started, 6),
        "version": __version__,
    }
    _emit(envelope, args.format, sys.stdout)
    return _exit_code(results)


if __name__ == "__main__":
    sys.exit(main())
