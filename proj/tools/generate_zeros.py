#!/usr/bin/env python3
"""Write the first N ordinates of nontrivial zeta zeros, one per line.

The library ingests zeros; it never computes them. This script produces the
bundled table with python-flint (Arb, rigorous isolation) when installed and
falls back to mpmath.zetazero otherwise. The mpmath path appends in chunks
so an interrupted run can be resumed with --resume.

    python3 tools/generate_zeros.py --count 10000 --out data/zeros_10k.txt
    python3 tools/generate_zeros.py --count 2000 --out /tmp/check.txt --backend mpmath
"""
import argparse
import os
import sys


def flint_zeros(start, count, digits):
    import flint

    flint.ctx.dps = digits + 10
    for z in flint.acb.zeta_zeros(start, count):
        yield z.imag.str(digits, radius=False)


def mpmath_zeros(start, count, digits):
    import mpmath

    mpmath.mp.dps = digits + 4
    for n in range(start, start + count):
        yield mpmath.nstr(mpmath.zetazero(n).imag, digits, strip_zeros=False)


def pick_backend(name):
    if name != "auto":
        return name
    try:
        import flint  # noqa: F401
        return "flint"
    except ImportError:
        return "mpmath"


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--resume", action="store_true")
    ap.add_argument("--digits", type=int, default=16,
                    help="significant digits written per ordinate")
    ap.add_argument("--backend", choices=["auto", "flint", "mpmath"], default="auto")
    args = ap.parse_args()

    backend = pick_backend(args.backend)
    start = 1
    if args.resume and os.path.exists(args.out):
        with open(args.out) as fh:
            start = 1 + sum(1 for ln in fh if ln.strip() and not ln.startswith("#"))
    remaining = args.count - start + 1
    if remaining <= 0:
        return 0
    source = {"flint": "python-flint acb.zeta_zeros", "mpmath": "mpmath.zetazero"}[backend]
    gen = flint_zeros if backend == "flint" else mpmath_zeros

    mode = "a" if start > 1 else "w"
    with open(args.out, mode) as fh:
        if start == 1:
            fh.write("# ordinates of the first %d nontrivial zeta zeros (%s)\n" % (args.count, source))
        for n, gamma in enumerate(gen(start, remaining, args.digits), start):
            fh.write(gamma + "\n")
            if n % 100 == 0:
                fh.flush()
                print(n, file=sys.stderr, flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
