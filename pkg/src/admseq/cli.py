"""Command-line front end.

Subcommands read JSON documents (files or ``-`` for stdin) and print a
single JSON report to stdout with sorted keys, so identical inputs yield
byte-identical reports.  Exit codes: 0 when the check or construction
succeeds, 1 when the mathematics refuses (a failed verdict or an
impossible decomposition), 2 for malformed input."""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys

import numpy as np

from .bridge import decomp_to_isometry
from .carpenter import carpenter_decompose
from .checkers import sum_of_projections_check
from .errors import (
    DimensionError,
    KadisonError,
    MajorizationError,
    PlanningError,
    SequenceError,
    TraceMismatchError,
)
from .operators import (
    decomp_from_json,
    decomp_residual,
    decomp_to_json,
    frame_operator,
    op_from_json,
    op_to_json,
)
from .seqkit import kadison_check, majorizes, seq_from_json
from .streams import VectorStream, stream_from_json

REFUSALS = (KadisonError, MajorizationError, TraceMismatchError, PlanningError)
PARSE_ERRORS = (
    SequenceError,
    DimensionError,
    json.JSONDecodeError,
    OSError,
    KeyError,
    TypeError,
    ValueError,
)


def _load(path: str):
    """Read a JSON document and remember a digest of the raw bytes."""
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            raw = fh.read()
    return json.loads(raw.decode("utf-8")), hashlib.sha256(raw).hexdigest()


def _jsonable(x):
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return x
    return x


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _report(args, command: str, digests: dict, **fields) -> dict:
    rep = {"command": command, "seed": args.seed, "inputs": digests}
    rep.update({k: _jsonable(v) for k, v in fields.items()})
    return rep


def _write_json(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _cmd_check_kadison(args) -> int:
    obj, digest = _load(args.sequence)
    rep = kadison_check(seq_from_json(obj), alpha=args.alpha, tol=args.tol)
    _emit(
        _report(
            args,
            "check-kadison",
            {"sequence": digest},
            satisfied=rep.satisfied,
            a=rep.a,
            b=rep.b,
            alpha=rep.alpha,
            integer_gap=rep.integer_gap,
        )
    )
    return 0 if rep.satisfied else 1


def _cmd_check_majorize(args) -> int:
    xi_obj, xi_digest = _load(args.xi)
    eta_obj, eta_digest = _load(args.eta)
    xi = seq_from_json(xi_obj)
    eta = seq_from_json(eta_obj)
    if not (xi.is_finite and eta.is_finite):
        raise SequenceError("majorization compares finite sequences")
    verdict = majorizes(xi.values, eta.values, tol=args.tol)
    _emit(
        _report(
            args,
            "check-majorize",
            {"xi": xi_digest, "eta": eta_digest},
            holds=verdict.holds,
            failing_index=verdict.failing_index,
            sum_gap=verdict.sum_gap,
        )
    )
    return 0 if verdict.holds else 1


def _target_path(out: str) -> str:
    if out.endswith(".json"):
        return out[: -len(".json")] + ".target.json"
    return out + ".target.json"


def _cmd_decompose(args) -> int:
    obj, digest = _load(args.input)
    xi = seq_from_json(obj["weights"])
    stream = (
        stream_from_json(obj["stream"]) if "stream" in obj else VectorStream.basis()
    )
    try:
        decomp, certs, tag = carpenter_decompose(
            xi,
            stream,
            stages=args.stages,
            extend_limit=args.extend_limit,
            tol=args.tol,
        )
    except REFUSALS as exc:
        _emit(
            _report(
                args, "decompose", {"input": digest}, ok=False, error=str(exc)
            )
        )
        return 1
    written = []
    if args.out:
        _write_json(args.out, decomp_to_json(decomp))
        target = frame_operator(
            list(decomp.terms) + list(decomp.remainder), dim=decomp.dim
        )
        tpath = _target_path(args.out)
        _write_json(tpath, op_to_json(target))
        written = [args.out, tpath]
    _emit(
        _report(
            args,
            "decompose",
            {"input": digest},
            ok=True,
            case={"tag": tag.tag, "k": tag.k, "M": _jsonable(tag.M), "N": _jsonable(tag.N)},
            dim=decomp.dim,
            num_terms=len(decomp.terms),
            num_remainder=len(decomp.remainder),
            stages=len(certs),
            max_stage_residual=max((c.residual for c in certs), default=0.0),
            majorizations_hold=all(c.majorization.holds for c in certs),
            written=written,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    dec_obj, dec_digest = _load(args.decomposition)
    op_obj, op_digest = _load(args.operator)
    decomp = decomp_from_json(dec_obj)
    target = op_from_json(op_obj)
    residual = decomp_residual(target, decomp, with_remainder=not args.no_remainder)
    ok = residual <= args.tol
    _emit(
        _report(
            args,
            "verify",
            {"decomposition": dec_digest, "operator": op_digest},
            ok=ok,
            residual=residual,
            tol=args.tol,
            num_terms=len(decomp.terms),
            num_remainder=len(decomp.remainder),
        )
    )
    return 0 if ok else 1


def _cmd_check_sums(args) -> int:
    obj, digest = _load(args.operator)
    a = op_from_json(obj)
    rep, witness = sum_of_projections_check(a, tol=args.tol, witness=args.witness)
    fields = dict(
        decomposable=rep.decomposable,
        num_projections=rep.num_projections,
        trace=rep.trace,
        rank=rep.rank,
        excess=rep.excess,
        deficiency=rep.deficiency,
        reason=rep.reason,
    )
    if witness is not None:
        fields["witness_residual"] = decomp_residual(a, witness)
        if args.out:
            _write_json(args.out, decomp_to_json(witness))
            fields["written"] = [args.out]
    _emit(_report(args, "check-sums", {"operator": digest}, **fields))
    return 0 if rep.decomposable else 1


def _matrix_to_json(m: np.ndarray) -> dict:
    rows, cols = m.shape
    return {
        "rows": rows,
        "cols": cols,
        "entries": [[float(z.real), float(z.imag)] for z in m.reshape(-1)],
    }


def _cmd_bridge(args) -> int:
    obj, digest = _load(args.decomposition)
    decomp = decomp_from_json(obj)
    record = decomp_to_isometry(decomp)
    deviation = float(
        np.max(np.abs(record.diagonal - np.asarray(record.weights)))
    ) if record.weights else 0.0
    if args.out:
        _write_json(
            args.out,
            {
                "isometry": _matrix_to_json(record.isometry),
                "sqrt_gram": _matrix_to_json(record.sqrt_gram),
                "kept_indices": list(record.kept_indices),
                "weights": list(record.weights),
            },
        )
    _emit(
        _report(
            args,
            "bridge",
            {"decomposition": digest},
            ok=True,
            kept_indices=list(record.kept_indices),
            rank=int(np.linalg.matrix_rank(record.sqrt_gram, tol=1e-10)),
            diagonal_deviation=deviation,
            written=[args.out] if args.out else [],
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="admseq",
        description="checks and constructions for weighted rank-one decompositions",
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="recorded in reports for reproducibility"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-kadison", help="integrality test for a weight sequence")
    p.add_argument("sequence", help="sequence JSON (path or -)")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_check_kadison)

    p = sub.add_parser("check-majorize", help="majorization test xi against eta")
    p.add_argument("xi", help="finite sequence JSON (path or -)")
    p.add_argument("eta", help="finite sequence JSON (path or -)")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_check_majorize)

    p = sub.add_parser("decompose", help="stage a decomposition of a stream")
    p.add_argument("input", help='JSON with "weights" and optional "stream"')
    p.add_argument("--stages", type=int, default=10)
    p.add_argument("--extend-limit", type=int, default=10_000)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out", help="write the decomposition here plus <out>.target.json")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="residual of a decomposition against an operator")
    p.add_argument("decomposition", help="decomposition JSON (path or -)")
    p.add_argument("operator", help="operator JSON (path or -)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument(
        "--no-remainder",
        action="store_true",
        help="ignore remainder terms when reconstructing",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check-sums", help="is the operator a sum of projections?")
    p.add_argument("operator", help="operator JSON (path or -)")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--witness", action="store_true", help="construct the projections")
    p.add_argument("--out", help="write the witness decomposition here")
    p.set_defaults(func=_cmd_check_sums)

    p = sub.add_parser("bridge", help="polar isometry of a decomposition's placement")
    p.add_argument("decomposition", help="decomposition JSON (path or -)")
    p.add_argument("--out", help="write the isometry record here")
    p.set_defaults(func=_cmd_bridge)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except REFUSALS as exc:
        _emit({"command": args.command, "ok": False, "error": str(exc)})
        return 1
    except PARSE_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
