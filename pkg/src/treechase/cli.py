"""Command-line driver.

Subcommands:
  sweep   seeded Monte-Carlo frame-error sweep, CSV on stdout or --out
  replay  decode a likelihood-matrix file verbosely and check the trace
          against a golden transcript (the packaged worked example by default)
  chi2    print the chi-square sphere-radius quantile used by threshold mode

Exit codes: 0 success, 1 configuration/usage error, 2 trace mismatch.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from .channel import load_pi
from .decoder import DecoderConfig, compare_traces, decode_with_trace
from .galois import make_field
from .rscode import CodeParams
from .sim import SweepConfig, parse_snr_spec, rows_to_csv, run_sweep
from .stats import chi2_threshold


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); config errors must be 1
        raise CliError(message)


def _build_parser() -> _Parser:
    top = _Parser(prog="treechase")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sw = sub.add_parser("sweep", help="Monte-Carlo FER sweep")
    sw.add_argument("--code", default="2,4,15,11", metavar="p,m,n,k",
                    help="field characteristic, extension degree, length, dimension")
    sw.add_argument("--snr", default="5.0", metavar="a:b:step|v1,v2,...")
    sw.add_argument("--alg", default="tcgs", metavar="tcgs,lcc,hdd")
    sw.add_argument("--L", type=int, default=16, help="trial budget for tcgs")
    sw.add_argument("--eta", type=int, default=4, help="low-reliability positions for lcc")
    sw.add_argument("--frames", type=int, default=20000, help="max frames per point")
    sw.add_argument("--min-errors", type=int, default=100,
                    help="stop a point after this many frame errors (0 = never)")
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--threshold-eps", type=float, default=None)
    sw.add_argument("--genie", action="store_true")
    sw.add_argument("--workers", type=int, default=1)
    sw.add_argument("--out", default=None, help="CSV path (default stdout)")
    sw.add_argument("--timing", action="store_true",
                    help="report measured wall seconds (breaks byte reproducibility)")

    rp = sub.add_parser("replay", help="verbose single decode of a matrix file")
    rp.add_argument("--pi", required=True, help="likelihood matrix file")
    rp.add_argument("--L", type=int, default=16)
    rp.add_argument("--k", type=int, default=2, help="code dimension for the replayed code")
    rp.add_argument("--golden", default=None,
                    help="trace transcript to verify against (default: packaged example)")

    ch = sub.add_parser("chi2", help="chi-square upper (eps/2)-quantile")
    ch.add_argument("--eps", type=float, required=True)
    ch.add_argument("--dof", type=int, required=True)
    return top


def _parse_code(spec: str) -> tuple[int, int, int, int]:
    parts = spec.split(",")
    if len(parts) != 4:
        raise ValueError(f"--code needs p,m,n,k, got {spec!r}")
    p, m, n, k = (int(t) for t in parts)
    return p, m, n, k


def _cmd_sweep(args) -> int:
    p, m, n, k = _parse_code(args.code)
    cfg = SweepConfig(p=p, m=m, n=n, k=k,
                      snr_db=parse_snr_spec(args.snr),
                      algorithms=tuple(t.strip() for t in args.alg.split(",") if t.strip()),
                      L=args.L, eta=args.eta, max_frames=args.frames,
                      min_errors=args.min_errors, seed=args.seed,
                      threshold_eps=args.threshold_eps, genie=args.genie,
                      workers=args.workers)
    rows = run_sweep(cfg)
    text = rows_to_csv(rows, timing=args.timing)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _replay_code(q: int, n: int, k: int) -> CodeParams:
    """Code convention for replayed matrices: prime q evaluates at 0..n-1,
    q = 2^m at the first n powers of the primitive element."""
    if q < 2:
        raise ValueError(f"bad q = {q}")
    mdeg = q.bit_length() - 1
    if q == 1 << mdeg and mdeg > 1:
        fld = make_field(2, mdeg)
        pts = tuple(fld.exp_order()[:n])
    else:
        fld = make_field(q, 1)
        if n > q:
            raise ValueError("n > q for a prime-field matrix")
        pts = tuple(range(n))
    return CodeParams(field=fld, n=n, k=k, eval_points=pts)


def _cmd_replay(args) -> int:
    pi = load_pi(args.pi)
    q, n = pi.shape
    code = _replay_code(q, n, args.k)
    res, lines = decode_with_trace(code, pi, DecoderConfig(max_trials=args.L))
    for ln in lines:
        print(ln)
    if args.golden:
        with open(args.golden) as fh:
            golden = fh.read().splitlines()
    else:
        golden = (resources.files("treechase") / "fixtures" / "example1.trace") \
            .read_text().splitlines()
    ok, diag = compare_traces(lines, golden)
    if not ok:
        print(f"trace mismatch: {diag}", file=sys.stderr)
        return 2
    return 0


def _cmd_chi2(args) -> int:
    print(f"{chi2_threshold(args.eps, args.dof):.9f}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "replay":
            return _cmd_replay(args)
        return _cmd_chi2(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
