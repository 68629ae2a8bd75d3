"""Command-line interface.

Exit codes: 0 success / property verified, 1 property violated or decode
failure (a witness is emitted), 2 usage error, 3 resource cap exceeded.
Machine mode (--machine) prints one record per line as space-separated
key=value fields; output is byte-identical for identical configurations,
including across worker counts.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass, field

from . import analysis, channel, code, decoder
from .syndrome import MIN_CODE_LENGTH, sign_preserving_number, syndrome_tuple
from .words import Word, adjacency_profile, pad, parse_word, read_words

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ROUND_BUDGET_ENV = "TWOEDIT_ROUND_BUDGET"


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    params: code.CodeParams | None = None
    words: list[Word] = field(default_factory=list)
    input_path: str | None = None
    machine: bool = False
    seed: int = 0
    workers: int = 1
    enum_cap: int | None = None
    round_budget: int | None = None
    mode: str = code.MODE_BUCKET
    top: int = 5
    index: int | None = None
    pattern: str | None = None
    random_edits: bool = False
    vector: tuple[int, ...] | None = None
    pair: tuple[Word, Word] | None = None
    cut: tuple[int, int] | None = None
    relation: tuple[int, int] | None = None
    k: int = 5
    action: str | None = None


def _emit(cfg: RunConfig, record: str, human: str, **fields) -> None:
    if cfg.machine:
        parts = [f"record={record}"] + [f"{k}={v}" for k, v in fields.items()]
        print(" ".join(parts))
    else:
        print(human)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _params_fields(p: code.CodeParams) -> dict:
    r = p.residues
    return {"n": r.n, "k1": r.s0, "k2": r.s1, "k3": r.s2, "k4": r.s3}


def _input_words(cfg: RunConfig) -> list[Word]:
    if cfg.words:
        return cfg.words
    if cfg.input_path:
        with open(cfg.input_path, encoding="ascii") as handle:
            return read_words(handle)
    return read_words(sys.stdin)


def _cmd_syndrome(cfg: RunConfig) -> int:
    for w in _input_words(cfg):
        st = syndrome_tuple(w)
        _emit(cfg, "syndrome", f"{w}: {st.to_kv()}", word=w, **_params_key_values(st))
    return EXIT_OK


def _params_key_values(st) -> dict:
    return {"n": st.n, "s0": st.s0, "s1": st.s1, "s2": st.s2, "s3": st.s3}


def _cmd_check(cfg: RunConfig) -> int:
    p = cfg.params
    label = ",".join(str(v) for v in _params_fields(p).values())
    for w in _input_words(cfg):
        member = code.is_codeword(w, p)
        _emit(
            cfg,
            "check",
            f"{w}: {'member' if member else 'not a member'} of the code ({label})",
            word=w,
            member=_bool(member),
            **_params_fields(p),
        )
    return EXIT_OK


def _cmd_enumerate(cfg: RunConfig) -> int:
    members = code.enumerate_codewords(cfg.params, cfg.enum_cap)
    if cfg.machine:
        for i, w in enumerate(members):
            print(f"record=codeword index={i} word={w}")
        print(f"record=enumerate size={len(members)} " + _kv(_params_fields(cfg.params)))
    else:
        for w in members:
            print(w)
    return EXIT_OK


def _kv(fields: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in fields.items())


def _cmd_census(cfg: RunConfig) -> int:
    census = code.bucket_census(cfg.n, cfg.enum_cap, cfg.workers)
    for rank, (st, count) in enumerate(census.top(cfg.top), 1):
        _emit(
            cfg,
            "bucket",
            f"#{rank}: count={count} {st.to_kv()}",
            n=cfg.n,
            rank=rank,
            s0=st.s0,
            s1=st.s1,
            s2=st.s2,
            s3=st.s3,
            count=count,
        )
    best, best_count = census.largest()
    r = code.redundancy(code.CodeParams(best), size=best_count)
    _emit(
        cfg,
        "census",
        f"n={cfg.n}: {census.total()} words in {census.class_count()} classes; "
        f"largest={best_count}, redundancy={r:.6f} (bound {code.redundancy_bound(cfg.n):.6f})",
        n=cfg.n,
        words=census.total(),
        buckets=census.class_count(),
        max_count=best_count,
        redundancy=f"{r:.6f}",
        bound=f"{code.redundancy_bound(cfg.n):.6f}",
        floor=code.pigeonhole_floor(cfg.n),
    )
    return EXIT_OK


def _cmd_best_params(cfg: RunConfig) -> int:
    params, count = code.best_params(cfg.n, cfg.enum_cap, cfg.workers)
    r = code.redundancy(params, size=count)
    _emit(
        cfg,
        "params",
        f"best class at n={cfg.n}: {params.residues.to_kv()} count={count} redundancy={r:.6f}",
        **_params_fields(params),
        count=count,
        redundancy=f"{r:.6f}",
    )
    return EXIT_OK


def _cmd_encode(cfg: RunConfig) -> int:
    w = code.encode_index(cfg.index, cfg.params, cfg.enum_cap)
    _emit(cfg, "encode", str(w), index=cfg.index, word=w)
    return EXIT_OK


def _cmd_rank(cfg: RunConfig) -> int:
    ws = _input_words(cfg)
    if len(ws) != 1:
        raise ValueError(f"rank expects exactly one word, got {len(ws)}")
    m = code.decode_index(ws[0], cfg.params, cfg.enum_cap)
    _emit(cfg, "rank", str(m), word=ws[0], index=m)
    return EXIT_OK


def _cmd_decode(cfg: RunConfig) -> int:
    status = EXIT_OK
    for w in _input_words(cfg):
        try:
            decoded = decoder.decode(w, cfg.params)
        except decoder.NoCandidateError:
            _emit(
                cfg,
                "decode-failure",
                f"{w}: no codeword within {decoder.MAX_EDITS} edits",
                received=w,
                kind="no_candidate",
                **_params_fields(cfg.params),
            )
            status = EXIT_VIOLATION
        except decoder.AmbiguousDecodeError:
            _emit(
                cfg,
                "decode-failure",
                f"{w}: ambiguous decode (parameters unverified?)",
                received=w,
                kind="ambiguous",
                **_params_fields(cfg.params),
            )
            status = EXIT_VIOLATION
        else:
            _emit(cfg, "decode", str(decoded), received=w, word=decoded)
    return status


def _cmd_corrupt(cfg: RunConfig) -> int:
    rng = random.Random(cfg.seed)
    for w in _input_words(cfg):
        if cfg.random_edits:
            pattern = channel.random_pattern(rng, len(w))
        else:
            pattern = channel.parse_pattern(cfg.pattern or "")
        result = channel.apply_errors(w, pattern)
        _emit(
            cfg,
            "corrupt",
            str(result),
            word=w,
            pattern=channel.format_pattern(pattern) or "-",
            result=result,
        )
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    report = code.scan_pairwise_distance(cfg.n, cfg.mode, cfg.workers, cfg.enum_cap)
    for v in report.violations:
        _emit(
            cfg,
            "violation",
            f"words {v.x} and {v.y} share a class but are at distance {v.distance}",
            mode=report.mode,
            n=report.n,
            x=v.x,
            y=v.y,
            distance=v.distance,
            key=",".join(str(k) for k in v.key),
        )
    _emit(
        cfg,
        "verify",
        f"verify mode={report.mode} n={report.n}: {report.words} words, "
        f"{report.groups} groups, {report.pairs} pairs checked, "
        f"min distance {report.min_distance if report.min_distance is not None else 'none'}: "
        f"{'OK' if report.ok else 'VIOLATED'}",
        mode=report.mode,
        n=report.n,
        words=report.words,
        groups=report.groups,
        pairs=report.pairs,
        min_distance=report.min_distance if report.min_distance is not None else "none",
        violations=len(report.violations),
        status="ok" if report.ok else "violated",
    )
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_analyze(cfg: RunConfig) -> int:
    if cfg.action == "sigma":
        if cfg.vector is not None:
            value = sign_preserving_number(cfg.vector)
            _emit(cfg, "sigma", str(value), vector=",".join(map(str, cfg.vector)), value=value)
        else:
            x, y = cfg.pair
            fx = adjacency_profile(pad(x))
            fy = adjacency_profile(pad(y))
            diff = tuple(a - b for a, b in zip(fx, fy))
            value = sign_preserving_number(diff)
            _emit(
                cfg,
                "sigma",
                f"profile difference {','.join(map(str, diff))}: sigma={value}",
                x=x,
                y=y,
                diff=",".join(map(str, diff)),
                value=value,
            )
        return EXIT_OK
    if cfg.action == "classify":
        x, y = cfg.pair
        sep = analysis.separate_errors(x, y, cfg.k, cfg.round_budget)
        for e in analysis.classify_errors(sep.u, sep.v, sep.alignment):
            _emit(
                cfg,
                "classified",
                f"position {e.position}: {e.kind} value {e.value:+d}",
                position=e.position,
                kind=e.kind,
                value=e.value,
            )
        kinds, values = analysis.pair_type(sep.u, sep.v, sep.alignment)
        _emit(
            cfg,
            "pair-type",
            f"pair type: ({', '.join(kinds)}) values ({', '.join(map(str, values))})",
            x=x,
            y=y,
            u=sep.u,
            v=sep.v,
            s=sep.s,
            r=sep.r,
            rounds=len(sep.rounds),
            kinds=",".join(kinds),
            values=",".join(map(str, values)),
        )
        return EXIT_OK
    if cfg.action == "segment":
        x, y = cfg.pair
        rel_s, rel_r = cfg.relation if cfg.relation else (None, None)
        _, _, alignment = analysis.find_relation(x, y, rel_s, rel_r)
        i, j = cfg.cut
        out_x, out_y = analysis.segment_once(x, y, alignment, (i, j))
        filler = str(out_x)[i : i + len(out_x) - len(x)]
        _emit(
            cfg,
            "segment",
            f"{out_x} / {out_y}",
            x=x,
            y=y,
            i=i,
            j=j,
            filler=filler,
            x_out=out_x,
            y_out=out_y,
        )
        return EXIT_OK
    raise ValueError(f"unknown analyze action {cfg.action!r}")


_COMMANDS = {
    "syndrome": _cmd_syndrome,
    "check": _cmd_check,
    "enumerate": _cmd_enumerate,
    "census": _cmd_census,
    "best-params": _cmd_best_params,
    "encode": _cmd_encode,
    "rank": _cmd_rank,
    "decode": _cmd_decode,
    "corrupt": _cmd_corrupt,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
}


def run(cfg: RunConfig) -> int:
    try:
        return _COMMANDS[cfg.command](cfg)
    except (code.ResourceCapError, analysis.RoundBudgetError) as exc:
        _emit(cfg, "error", f"resource cap exceeded: {exc}", kind="resource", message=str(exc))
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _add_common(sub: argparse.ArgumentParser, io_words: bool = False) -> None:
    sub.add_argument("--machine", action="store_true", help="one key=value record per line")
    sub.add_argument("--enum-cap", type=int, default=None, help="enumeration length cap")
    sub.add_argument("--round-budget", type=int, default=None, help="segmentation round cap")
    if io_words:
        sub.add_argument("words", nargs="*", help="words as 0/1 strings (default: stdin)")
        sub.add_argument("--input", help="file of words, one per line")


def _add_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, required=True, help=f"code length (>= {MIN_CODE_LENGTH})")
    sub.add_argument("--params", required=True, help="residues k1,k2,k3,k4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoedit",
        description="Tools for binary codes correcting two insertions/deletions/substitutions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("syndrome", help="residue tuple of each word")
    _add_common(p, io_words=True)

    p = subs.add_parser("check", help="membership of each word in a code")
    _add_params(p)
    _add_common(p, io_words=True)

    p = subs.add_parser("enumerate", help="all codewords in lexicographic order")
    _add_params(p)
    _add_common(p)

    p = subs.add_parser("census", help="syndrome class sizes over the whole space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", type=int, default=5, help="how many classes to list")
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("best-params", help="parameters of the largest class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("encode", help="codeword with the given lexicographic index")
    _add_params(p)
    p.add_argument("--index", type=int, required=True)
    _add_common(p)

    p = subs.add_parser("rank", help="lexicographic index of a codeword")
    _add_params(p)
    _add_common(p, io_words=True)

    p = subs.add_parser("decode", help="unique codeword within two edits")
    _add_params(p)
    _add_common(p, io_words=True)

    p = subs.add_parser("corrupt", help="apply an edit pattern to each word")
    p.add_argument("--pattern", help="pattern spec, e.g. sub@4=1,del@2,ins@0=1")
    p.add_argument("--random", action="store_true", help="seeded random pattern instead")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, io_words=True)

    p = subs.add_parser("verify", help="pairwise distance sweep over all classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--mode",
        choices=(code.MODE_BUCKET, code.MODE_EXACT),
        default=code.MODE_BUCKET,
        help="group by residues (bucket) or by exact weight sums (exact)",
    )
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("analyze", help="sign-preserving numbers, classification, segmentation")
    p.add_argument("action", choices=("sigma", "classify", "segment"))
    p.add_argument("--vector", help="comma-separated integers (sigma)")
    p.add_argument("--x", help="first word")
    p.add_argument("--y", help="second word")
    p.add_argument("--cut", help="cut i,j (segment)")
    p.add_argument("--rel", help="relation shape s,r (segment; default: smallest)")
    p.add_argument("--k", type=int, default=5, help="target separation (classify)")
    _add_common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.machine = getattr(args, "machine", False)
    cfg.enum_cap = getattr(args, "enum_cap", None)
    cfg.round_budget = getattr(args, "round_budget", None)
    if cfg.round_budget is None and os.environ.get(ROUND_BUDGET_ENV):
        cfg.round_budget = int(os.environ[ROUND_BUDGET_ENV])
    cfg.n = getattr(args, "n", None)
    cfg.workers = getattr(args, "workers", 1)
    cfg.seed = getattr(args, "seed", 0)
    cfg.top = getattr(args, "top", 5)
    cfg.index = getattr(args, "index", None)
    cfg.pattern = getattr(args, "pattern", None)
    cfg.random_edits = getattr(args, "random", False)
    cfg.mode = getattr(args, "mode", code.MODE_BUCKET)
    cfg.input_path = getattr(args, "input", None)
    cfg.k = getattr(args, "k", 5)
    cfg.action = getattr(args, "action", None)
    if getattr(args, "words", None):
        cfg.words = [parse_word(w) for w in args.words]
    if getattr(args, "params", None) is not None:
        parts = [int(v) for v in args.params.split(",")]
        if len(parts) != 4:
            raise ValueError("--params needs four comma-separated residues")
        cfg.params = code.CodeParams.from_values(cfg.n, *parts)
    if getattr(args, "vector", None):
        cfg.vector = tuple(int(v) for v in args.vector.split(","))
    if getattr(args, "x", None) is not None or getattr(args, "y", None) is not None:
        if not (getattr(args, "x", None) and getattr(args, "y", None)):
            raise ValueError("--x and --y must be given together")
        cfg.pair = (parse_word(args.x), parse_word(args.y))
    if getattr(args, "cut", None):
        i, j = (int(v) for v in args.cut.split(","))
        cfg.cut = (i, j)
    if getattr(args, "rel", None):
        rs, rr = (int(v) for v in args.rel.split(","))
        cfg.relation = (rs, rr)
    if cfg.command == "analyze":
        if cfg.action == "sigma" and cfg.vector is None and cfg.pair is None:
            raise ValueError("analyze sigma needs --vector or --x/--y")
        if cfg.action in ("classify", "segment") and cfg.pair is None:
            raise ValueError(f"analyze {cfg.action} needs --x and --y")
        if cfg.action == "segment" and cfg.cut is None:
            raise ValueError("analyze segment needs --cut i,j")
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
