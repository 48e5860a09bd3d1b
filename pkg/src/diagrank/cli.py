"""Command-line interface.

Subcommands cover the matrix pipeline (rank, complete, decide, approx,
exact, oracle, upper-bound), the hieroglyph pipeline (hiero overlap /
decide / approx / canon), seeded instance generation (gen) and a
micro-benchmark runner (bench).  ``--json`` switches any subcommand to
the machine-readable payload; plain text output is human-facing and not
stability-guaranteed.

Exit codes: 0 success (and "yes" for decisions), 1 for "no"/"exhausted",
2 for usage, input, format and guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from typing import Any

from . import generate, gf2, hieroglyph, rankmin
from .completion import complete_nondegenerate

BENCH_MAX_DIM = 2048


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _read_matrix(path: str) -> gf2.Gf2Matrix:
    return gf2.parse_matrix(_read_text(path))


def _read_hieroglyph(arg: str) -> hieroglyph.Hieroglyph:
    if arg != "-" and not os.path.isfile(arg):
        return hieroglyph.parse_hieroglyph(arg)
    return hieroglyph.parse_hieroglyph(_read_text(arg))


def _payload(command: str, n: int, **fields: Any) -> dict[str, Any]:
    base: dict[str, Any] = {
        "command": command,
        "n": n,
        "k": None,
        "answer": None,
        "rank_bounds": None,
        "witness_diagonal": None,
        "achieved_rank": None,
    }
    base.update(fields)
    return base


def _bounds_json(lower: int, upper: int) -> dict[str, int]:
    return {"lower": lower, "upper": upper}


def _cmd_rank(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    r = gf2.rank(m)
    return _payload("rank", m.n, achieved_rank=r), str(r), 0


def _cmd_complete(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    completed, d = complete_nondegenerate(m)
    payload = _payload(
        "complete",
        m.n,
        answer="yes",
        witness_diagonal=d.to_string(),
        achieved_rank=m.n,
        matrix=gf2.render_matrix(completed),
    )
    text = f"diagonal: {d.to_string()}\n{gf2.render_matrix(completed)}".rstrip("\n")
    return payload, text, 0


def _decision_payload(command, n, k, outcome, m) -> tuple[dict, str, int]:
    if outcome.witness is not None:
        achieved = gf2.rank(gf2.with_diagonal(m, outcome.witness))
        payload = _payload(
            command,
            n,
            k=k,
            answer="yes",
            witness_diagonal=outcome.witness.to_string(),
            achieved_rank=achieved,
        )
        return payload, f"yes witness={outcome.witness.to_string()} achieved_rank={achieved}", 0
    return _payload(command, n, k=k, answer="no"), "no", 1


def _cmd_decide(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    outcome = rankmin.min_rank_decide(m, args.k)
    return _decision_payload("decide", m.n, args.k, outcome, m)


def _cmd_approx(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    bounds, witness = rankmin.min_rank_approx(m)
    payload = _payload(
        "approx",
        m.n,
        rank_bounds=_bounds_json(bounds.lower, bounds.upper),
        witness_diagonal=witness.to_string(),
        achieved_rank=bounds.upper,
    )
    text = f"lower={bounds.lower} upper={bounds.upper} witness={witness.to_string()}"
    return payload, text, 0


def _cmd_exact(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    result = rankmin.min_rank_exact(m, args.k_max)
    if result is None:
        payload = _payload("exact", m.n, k=args.k_max, answer="exhausted")
        return payload, f"exhausted k_max={args.k_max}", 1
    value, witness = result
    payload = _payload(
        "exact",
        m.n,
        k=value,
        answer="yes",
        witness_diagonal=witness.to_string(),
        achieved_rank=gf2.rank(gf2.with_diagonal(m, witness)),
    )
    return payload, f"rank={value} witness={witness.to_string()}", 0


def _cmd_oracle(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    value, witness = rankmin.min_rank_oracle(m)
    payload = _payload(
        "oracle",
        m.n,
        answer="yes",
        rank_bounds=_bounds_json(value, value),
        witness_diagonal=witness.to_string(),
        achieved_rank=value,
    )
    return payload, f"rank={value} witness={witness.to_string()}", 0


def _cmd_upper_bound(args) -> tuple[dict, str, int]:
    m = _read_matrix(args.file)
    d = rankmin.upper_bound_even_rows(m)
    achieved = gf2.rank(gf2.with_diagonal(m, d))
    payload = _payload(
        "upper-bound",
        m.n,
        rank_bounds=_bounds_json(0, m.n - 1),
        witness_diagonal=d.to_string(),
        achieved_rank=achieved,
    )
    text = f"witness={d.to_string()} achieved_rank={achieved} bound={m.n - 1}"
    return payload, text, 0


def _cmd_hiero_overlap(args) -> tuple[dict, str, int]:
    h = _read_hieroglyph(args.word)
    m = hieroglyph.overlap_matrix(h)
    payload = _payload("hiero-overlap", h.n, alphabet=list(h.alphabet), matrix=gf2.render_matrix(m))
    return payload, gf2.render_matrix(m).rstrip("\n"), 0


def _cmd_hiero_decide(args) -> tuple[dict, str, int]:
    h = _read_hieroglyph(args.word)
    m = hieroglyph.overlap_matrix(h)
    outcome = rankmin.min_rank_decide(m, args.k)
    payload, text, code = _decision_payload("hiero-decide", h.n, args.k, outcome, m)
    payload["alphabet"] = list(h.alphabet)
    payload["twist_witness"] = payload["witness_diagonal"]
    return payload, text, code


def _cmd_hiero_approx(args) -> tuple[dict, str, int]:
    h = _read_hieroglyph(args.word)
    m = hieroglyph.overlap_matrix(h)
    bounds, witness = rankmin.min_rank_approx(m)
    payload = _payload(
        "hiero-approx",
        h.n,
        rank_bounds=_bounds_json(bounds.lower, bounds.upper),
        witness_diagonal=witness.to_string(),
        achieved_rank=bounds.upper,
        alphabet=list(h.alphabet),
        twist_witness=witness.to_string(),
    )
    text = f"lower={bounds.lower} upper={bounds.upper} witness={witness.to_string()}"
    return payload, text, 0


def _cmd_hiero_canon(args) -> tuple[dict, str, int]:
    h = _read_hieroglyph(args.word)
    canon = hieroglyph.canonical_form(h)
    payload = _payload(
        "hiero-canon",
        h.n,
        alphabet=list(canon.alphabet),
        canonical=canon.to_text(),
    )
    return payload, canon.to_text(), 0


def _cmd_gen(args) -> tuple[dict, str, int]:
    m = generate.gen_random(args.n, args.density, args.seed)
    payload = _payload(
        "gen",
        args.n,
        density=args.density,
        seed=args.seed,
        matrix=gf2.render_matrix(m),
    )
    return payload, gf2.render_matrix(m).rstrip("\n"), 0


_BENCH_OPS = {
    "rank": lambda m, k: gf2.rank(m),
    "complete": lambda m, k: complete_nondegenerate(m),
    "decide": lambda m, k: rankmin.min_rank_decide(m, k),
    "approx": lambda m, k: rankmin.min_rank_approx(m),
    "oracle": lambda m, k: rankmin.min_rank_oracle(m),
}


def run_bench(algo: str, sizes: list[int], k: int, reps: int, seed: int) -> list[dict]:
    """Median wall time of ``algo`` per size; inputs derive from the seed."""
    if algo not in _BENCH_OPS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if reps < 1:
        raise ValueError("reps must be positive")
    for n in sizes:
        if not 0 <= n <= BENCH_MAX_DIM:
            raise ValueError(f"size {n} outside 0..{BENCH_MAX_DIM}")
    op = _BENCH_OPS[algo]
    results = []
    for n in sizes:
        m = generate.gen_random(n, 0.5, seed + n)
        times = []
        for _ in range(reps):
            start = time.perf_counter()
            op(m, k)
            times.append(time.perf_counter() - start)
        results.append(
            {"algo": algo, "n": n, "reps": reps, "median_seconds": statistics.median(times)}
        )
    return results


def _cmd_bench(args) -> tuple[dict, str, int]:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = run_bench(args.algo, sizes, args.k, args.reps, args.seed)
    lines = ["algo,n,reps,median_seconds"]
    lines += [f"{r['algo']},{r['n']},{r['reps']},{r['median_seconds']:.6f}" for r in rows]
    return {"command": "bench", "rows": rows}, "\n".join(lines), 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit a JSON payload")

    parser = argparse.ArgumentParser(
        prog="diagrank",
        description="Minimum rank of a GF(2) matrix over free rewrites of its main diagonal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, **kwargs):
        p = sub.add_parser(name, parents=[shared], help=help_, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("rank", _cmd_rank, "rank of a matrix")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = add("complete", _cmd_complete, "rewrite the diagonal to reach full rank")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = add("decide", _cmd_decide, "is some diagonal rewrite of rank <= k?")
    p.add_argument("--k", type=int, required=True, help="rank budget")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = add("approx", _cmd_approx, "factor-2 bracket on the minimum rank")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = add("exact", _cmd_exact, "exact minimum rank, searching budgets 0..k-max")
    p.add_argument("--k-max", type=int, required=True, help="largest budget to try")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = add("oracle", _cmd_oracle, "brute-force minimum over all 2^n diagonals")
    p.add_argument("file", help="matrix file, or - for stdin")

    p = add("upper-bound", _cmd_upper_bound, "even-row-sum diagonal, rank <= n-1")
    p.add_argument("file", help="matrix file, or - for stdin")

    hiero = sub.add_parser("hiero", help="double-occurrence word pipeline")
    hsub = hiero.add_subparsers(dest="hiero_command", required=True)

    def add_hiero(name, func, help_):
        p = hsub.add_parser(name, parents=[shared], help=help_)
        p.set_defaults(func=func)
        p.add_argument("word", help="word, file containing one, or - for stdin")
        return p

    add_hiero("overlap", _cmd_hiero_overlap, "interlacement matrix of the word")
    p = add_hiero("decide", _cmd_hiero_decide, "realizable with at most k Möbius strips?")
    p.add_argument("--k", type=int, required=True, help="strip budget")
    add_hiero("approx", _cmd_hiero_approx, "factor-2 bracket on the strip count")
    add_hiero("canon", _cmd_hiero_canon, "canonical form under rotation/reversal/relabeling")

    p = add("gen", _cmd_gen, "seeded random matrix with zero diagonal")
    p.add_argument("--n", type=int, required=True, help="dimension")
    p.add_argument("--density", type=float, default=0.5, help="off-diagonal one-probability")
    p.add_argument("--seed", type=int, default=0, help="SplitMix64 seed")

    p = add("bench", _cmd_bench, "median wall times as CSV")
    p.add_argument("--algo", required=True, choices=sorted(_BENCH_OPS), help="operation to time")
    p.add_argument("--sizes", required=True, help="comma-separated dimensions, e.g. 16,32,64")
    p.add_argument("--k", type=int, default=1, help="budget for decide timings")
    p.add_argument("--reps", type=int, default=3, help="repetitions per size")
    p.add_argument("--seed", type=int, default=0, help="instance seed")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = args.func(args)
    except (gf2.MatrixFormatError, hieroglyph.HieroglyphFormatError) as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except rankmin.OracleSizeError as exc:
        print(f"guard error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
