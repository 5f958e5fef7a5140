"""
Command-line front end of the Clifford commutant toolkit.

Results go to stdout (or --out), log lines to stderr. Exit status is 0 on success,
1 on a domain error and 2 on a usage error.
"""

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from acceptance import TIERS, run_tier
from backend.schemas import (
    ClassSchema,
    ClassTableSchema,
    CountReportSchema,
    GramExport,
    MagicReportSchema,
    MatrixSchema,
    MonomialSchema,
    WeingartenExport,
)
from commutant import (
    class_table,
    dimension,
    enumerate_classes,
    gram,
    orbit_size,
    reduced_basis,
    weingarten,
)
from config import settings
from dense import (
    DenseOperator,
    exact_twirl,
    from_amplitudes,
    plus_state,
    random_state,
    t_state,
    weingarten_twirl,
    zero_state,
)
from gf import FMatrix, GLTransform
from magic import magic_report, state_orbit
from monomial import apply_gl, canonical, normal_form, reduce
from utils.errors import BadShape, CommutantError
from utils.logging import get_logger, setup_logging


logger = get_logger(__name__)


class UsageError(Exception):
    """Arguments parse but do not make sense together"""


def format_number(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(x)
    return format(x, ".17g")


def dumps(obj) -> str:
    """Deterministic JSON with 17 significant digits for every float"""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_number(float(obj))
    return json.dumps(obj)


def parse_shard(text: Optional[str]):
    if text is None:
        return None
    try:
        index, count = (int(x) for x in text.split("/"))
    except ValueError as e:
        raise UsageError(f"--shard expects i/m, got {text!r}") from e
    if count < 1 or not 0 <= index < count:
        raise UsageError(f"shard index must satisfy 0 <= i < m, got {text}")
    return index, count


def emit(args, payload=None, rows: Optional[List[List[str]]] = None, text: Optional[str] = None) -> None:
    """Write a result as JSON, CSV rows or plain text to --out or stdout"""
    if args.format == "csv" and rows is not None:
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator="\n").writerows(rows)
        out = buffer.getvalue()
    elif args.format is None and text is not None:
        out = text + "\n"
    else:
        out = dumps(payload) + "\n"
    if args.out:
        Path(args.out).write_text(out)
        logger.info(f"wrote {args.out}")
    else:
        sys.stdout.write(out)


def read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise BadShape(f"cannot read JSON from {path}: {e}") from e


def load_state(args):
    n, q = args.n, args.q
    kind = args.state
    if kind == "zero":
        return zero_state(n, q)
    if kind == "plus":
        return plus_state(n, q)
    if kind == "T":
        return t_state(n)
    if kind == "random":
        return random_state(n, seed=args.seed if args.seed is not None else settings.seed, q=q)
    data = read_json(kind)
    if "re" not in data or "im" not in data or len(data["re"]) != len(data["im"]):
        raise BadShape(f"{kind} must hold matching \"re\" and \"im\" amplitude lists")
    values = [complex(re, im) for re, im in zip(data["re"], data["im"])]
    return from_amplitudes(values, q)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_dim(args) -> int:
    report = CountReportSchema.from_report(dimension(args.n, args.k, args.q))
    emit(args, report.model_dump(), report.csv_rows(), text=str(report.total))
    return 0


def cmd_enumerate(args) -> int:
    shard = parse_shard(args.shard)
    classes = [ClassSchema.from_class(c) for c in enumerate_classes(args.n, args.k, args.q, shard)]
    rows = [["m", "V", "G"]] + [[str(c.m), " ".join(c.V), c.G] for c in classes]
    emit(args, [c.model_dump() for c in classes], rows, text=str(len(classes)))
    return 0


def cmd_basis(args) -> int:
    if args.kind == "mho":
        payload = []
        for c in enumerate_classes(args.n, args.k, args.q):
            entry = ClassSchema.from_class(c).model_dump()
            entry["size"] = orbit_size(c, args.n)
            payload.append(entry)
        emit(args, payload)
        return 0
    basis = reduced_basis(args.k, args.q)
    emit(args, [MonomialSchema.from_monomial(m).model_dump() for m in basis])
    return 0


def cmd_gram(args) -> int:
    g = gram(args.n, args.k, args.q, workers=args.workers)
    emit(args, GramExport.from_gram(g).model_dump())
    return 0


def cmd_weingarten(args) -> int:
    g = gram(args.n, args.k, args.q, workers=args.workers)
    w = weingarten(g)
    emit(args, WeingartenExport.from_weingarten(w, args.n, args.k, args.q).model_dump())
    return 0


def cmd_twirl(args) -> int:
    if not args.input:
        raise UsageError("twirl needs --in <matrix.json>")
    matrix = MatrixSchema.model_validate(read_json(args.input)).to_array()
    op = DenseOperator(matrix, args.n, args.k, args.q)
    if args.method == "weingarten":
        g = gram(args.n, args.k, args.q, workers=args.workers)
        result = weingarten_twirl(op, g.basis, weingarten(g))
    else:
        result = exact_twirl(op)
    emit(args, MatrixSchema.from_array(result.matrix).model_dump())
    return 0


def cmd_rewrite(args) -> int:
    if not args.input:
        raise UsageError("rewrite needs --in <monomial.json>")
    mono = MonomialSchema.model_validate(read_json(args.input)).to_monomial()
    if args.op == "gl":
        if not args.gl:
            raise UsageError("rewrite --op gl needs --gl <matrix text>")
        a = FMatrix.from_text(args.gl, mono.q)
        payload = MonomialSchema.from_monomial(apply_gl(mono, GLTransform.from_matrix(a))).model_dump()
    elif args.op == "reduce":
        result = reduce(mono)
        payload = {
            "reduced": MonomialSchema.from_monomial(result.reduced).model_dump(),
            "dpower": result.dpower,
            "beta": result.beta,
        }
    elif args.op == "canonical":
        payload = MonomialSchema.from_monomial(canonical(mono)).model_dump()
    else:
        nf = normal_form(mono)
        payload = {
            "projective": MonomialSchema.from_monomial(nf.projective).model_dump(),
            "unitary": MonomialSchema.from_monomial(nf.unitary).model_dump(),
            "dpower": nf.dpower,
            "primitive_count": nf.primitive_count,
        }
    emit(args, payload)
    return 0


def cmd_magic(args) -> int:
    state = load_state(args)
    monomials = [MonomialSchema.model_validate(read_json(p)).to_monomial() for p in args.monomial or []]
    report = MagicReportSchema.from_report(magic_report(state, monomials=monomials)).model_dump()
    if args.orbit:
        report["orbit"] = state_orbit(state, args.orbit).as_dict()
    emit(args, report)
    return 0


def cmd_table(args) -> int:
    table = ClassTableSchema.from_table(class_table(args.k, args.n, q=args.q))
    emit(args, table.model_dump(), table.csv_rows())
    return 0


def cmd_verify(args) -> int:
    tiers = [args.tier] if args.tier else list(TIERS)
    summary: Dict[str, Dict[str, bool]] = {}
    for tier in tiers:
        logger.info(f"verification tier {tier}")
        summary[tier] = run_tier(tier, slow=True if args.slow else None)
    passed = all(all(checks.values()) for checks in summary.values())
    emit(args, {"passed": passed, "tiers": summary})
    return 0 if passed else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--n", type=int, default=1, help="number of qudits")
    common.add_argument("-k", "--k", type=int, default=4, help="number of tensor copies")
    common.add_argument("-q", "--q", type=int, default=2, help="prime local dimension")
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--shard", default=None, help="i/m, deal subspaces round-robin")
    common.add_argument("--dense-cap", type=int, default=None)
    common.add_argument("--out", default=None, help="write the result to this path")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--log-level", default=None, choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    parser = argparse.ArgumentParser(prog="commutant", description="Clifford commutant toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="commutant dimension")
    p.set_defaults(func=cmd_dim)
    p = sub.add_parser("enumerate", parents=[common], help="stream commutant classes")
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("basis", parents=[common], help="emit mho classes or reduced monomials")
    p.add_argument("--kind", choices=("monomial", "mho"), default="monomial")
    p.set_defaults(func=cmd_basis)
    p = sub.add_parser("gram", parents=[common], help="Gram matrix of the reduced basis")
    p.set_defaults(func=cmd_gram)
    p = sub.add_parser("weingarten", parents=[common], help="Clifford-Weingarten matrix")
    p.set_defaults(func=cmd_weingarten)
    p = sub.add_parser("twirl", parents=[common], help="Clifford twirl of a matrix JSON file")
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--method", choices=("exact", "weingarten"), default="exact")
    p.set_defaults(func=cmd_twirl)
    p = sub.add_parser("rewrite", parents=[common], help="rewrite a monomial JSON file")
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--op", choices=("reduce", "canonical", "normal-form", "gl"), default="reduce")
    p.add_argument("--gl", default=None, help="invertible matrix in row/digit text, e.g. 10/11")
    p.set_defaults(func=cmd_rewrite)
    p = sub.add_parser("magic", parents=[common], help="magic report of a pure state")
    p.add_argument("--state", default="zero", help="zero, plus, T, random or a JSON amplitude file")
    p.add_argument("--monomial", action="append", help="monomial JSON file for an extra Δ_Ω")
    p.add_argument("--orbit", type=int, default=None, help="also report the k-copy orbit weights")
    p.set_defaults(func=cmd_magic)
    p = sub.add_parser("table", parents=[common], help="two-sided permutation class table")
    p.set_defaults(func=cmd_table)
    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks tier by tier")
    p.add_argument("--tier", choices=TIERS, default=None)
    p.add_argument("--slow", action="store_true", help="include the heavy checks")
    p.set_defaults(func=cmd_verify)
    return parser


OVERRIDES = {"dense_cap": "dense_cap", "tol": "tolerance", "workers": "workers", "seed": "seed"}


@contextmanager
def apply_overrides(args):
    """CLI flags take precedence over environment settings for the duration of one command"""
    saved = {field: getattr(settings, field) for field in OVERRIDES.values()}
    try:
        for flag, field in OVERRIDES.items():
            value = getattr(args, flag)
            if value is not None:
                setattr(settings, field, value)
        yield settings
    finally:
        for field, value in saved.items():
            setattr(settings, field, value)


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(args.log_level or settings.log_level)
    get_logger(__name__, {"command": args.command}).debug(f"running {args.command} with n={args.n}, k={args.k}, q={args.q}")
    try:
        with apply_overrides(args):
            return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CommutantError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValidationError as e:
        print(f"error: BadShape: {e.error_count()} invalid field(s): {e.errors()[0]['msg']}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
