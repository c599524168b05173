"""Command-line front end: ``tropalg <verb> [options] [FILE ...]``.

Matrices are read from files (or stdin for ``-``) as JSON documents or
plain-text grids. Every result is printed as one JSON document; ``suite``
prints one report per line followed by a summary line.

Exit codes: 0 ok, 1 a check failed, 2 usage error, 3 computation error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from . import charpoly as cp
from . import matrix as mx
from .errors import BadArity, KindMismatch, LengthMismatch, ParseError, SizeMismatch, TropalgError
from .identities import REGISTRY, check
from .io import error_obj, matrix_to_obj, parse_matrix, polynomial_to_obj, roots_to_obj, to_jsonable
from .report import IdentityId, Status
from .semiring import SemiringKind, format_element
from .suite import SuiteConfig, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3

# errors caused by what the user asked for, rather than by the mathematics
_USAGE_ERRORS = (ParseError, KindMismatch, SizeMismatch, BadArity, LengthMismatch)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _dump(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, ensure_ascii=False)


def _default_seed() -> int:
    raw = os.environ.get("TROPALG_SEED")
    if raw is None or raw == "":
        return 1
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"TROPALG_SEED must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _UsageError(f"cannot read {path}: {e.strerror}") from None


def load_matrix(path: str, semiring: Optional[str] = None) -> mx.Matrix:
    """Parse a matrix file; ``semiring`` may only lift rmax input to supertropical."""
    A = parse_matrix(_read(path))
    if semiring is None:
        return A
    target = SemiringKind.parse(semiring)
    if target is A.kind:
        return A
    if A.kind is SemiringKind.RMAX and target is SemiringKind.SUPERTROPICAL:
        return A.to_kind(target)
    raise KindMismatch(f"cannot coerce {A.kind.value} input to {target.value}; only rmax -> supertropical")


def _value_doc(A: mx.Matrix, value) -> dict[str, Any]:
    return {"semiring": A.kind.value, "value": format_element(value)}


def _cmd_single(args) -> tuple[str, int]:
    A = load_matrix(args.file, args.semiring)
    verb = args.verb
    if verb == "det":
        return _dump(_value_doc(A, mx.det(A))), EXIT_OK
    if verb == "per":
        return _dump(_value_doc(A, mx.permanent(A))), EXIT_OK
    if verb == "compound":
        if not 1 <= args.k <= A.n:
            raise BadArity(f"k must be in 1..{A.n}, got {args.k}")
        C = mx.compound(A, args.k)
        doc = matrix_to_obj(C.inner)
        doc["k"] = args.k
        doc["index"] = [list(I.members) for I in C.index]
        return _dump(doc), EXIT_OK
    if verb == "adjoint":
        return _dump(mx.adjoint(A)), EXIT_OK
    if verb == "qinv":
        return _dump(mx.quasi_inverse(A)), EXIT_OK
    if verb == "star":
        return _dump(mx.kleene_star(A)), EXIT_OK
    if verb == "definite-form":
        d = mx.definite_form(A, args.side)
        return _dump({
            "side": d.side,
            "normalizer": d.normalizer,
            "definite": d.definite_part,
            "permutation": list(d.permutation),
        }), EXIT_OK
    if verb == "charpoly":
        return _dump(polynomial_to_obj(cp.char_poly(A))), EXIT_OK
    if verb == "eigen":
        return _dump(roots_to_obj(A.kind, cp.corner_roots(cp.char_poly(A)))), EXIT_OK
    raise _UsageError(f"unknown verb {verb}")  # pragma: no cover - argparse restricts verbs


def _parse_id(text: str) -> IdentityId:
    for id in IdentityId:
        if text in (id.value, id.name, id.name.lower()):
            return id
    raise _UsageError(f"unknown identity {text!r}")


def _cmd_check(args) -> tuple[str, int]:
    id = _parse_id(args.id)
    spec = REGISTRY[id]
    if id is IdentityId.SIGN_LEMMAS:
        if args.files:
            raise BadArity("sign lemmas take --n and --semiring, not matrix files")
        if args.n is None or args.semiring is None:
            raise BadArity("sign lemmas need --n and --semiring")
        r = check(id, {"n": args.n, "kind": SemiringKind.parse(args.semiring)})
    else:
        names = spec.matrices + spec.optional
        if not len(spec.matrices) <= len(args.files) <= len(names):
            want = "/".join(names)
            raise BadArity(f"{id.value} takes matrices {want}; got {len(args.files)} file(s)")
        inputs: dict[str, Any] = {name: load_matrix(p, args.semiring) for name, p in zip(names, args.files)}
        if args.m is not None:
            inputs["m"] = args.m
        r = check(id, inputs)
    return r.to_json(), EXIT_FAIL if r.status is Status.FAIL else EXIT_OK


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _cmd_suite(args) -> tuple[str, int]:
    if any(n < 1 for n in args.sizes) or args.trials < 0:
        raise BadArity("sizes must be positive and trials non-negative")
    kinds = tuple(SemiringKind.parse(s) for s in args.semirings.split(",")) if args.semirings else tuple(SemiringKind)
    ids = tuple(_parse_id(s) for s in args.ids.split(",")) if args.ids else None
    config = SuiteConfig(
        semirings=kinds,
        sizes=args.sizes,
        trials=args.trials,
        seed=args.seed if args.seed is not None else _default_seed(),
        ids=ids,
        fixtures=not args.no_fixtures,
        grid=not args.no_grid,
        keep_all=args.all,
    )
    reports = run_suite(config)
    lines = [r.to_json() for r in reports]
    summary = summarize(reports)
    summary["seed"] = config.seed
    lines.append(json.dumps({"summary": summary}, sort_keys=True))
    return "\n".join(lines), EXIT_OK if summary["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropalg", description="Exact linear algebra over extended tropical semirings.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    def single(name: str, help: str) -> argparse.ArgumentParser:
        q = sub.add_parser(name, help=help)
        q.add_argument("file", nargs="?", default="-", help="matrix file, '-' for stdin")
        q.add_argument("--semiring", help="lift rmax input to supertropical")
        return q

    single("det", "determinant")
    single("per", "permanent")
    single("compound", "k-th compound matrix").add_argument("--k", type=int, required=True)
    single("adjoint", "adjoint matrix")
    single("qinv", "quasi-inverse")
    single("star", "Kleene star")
    single("definite-form", "dominant normalizer and definite part").add_argument(
        "--side", choices=("left", "right"), default="left")
    single("charpoly", "characteristic polynomial")
    single("eigen", "corner roots of the characteristic polynomial")

    c = sub.add_parser("check", help="run one identity checker")
    c.add_argument("--id", required=True)
    c.add_argument("files", nargs="*", help="matrices in the order A, B/E")
    c.add_argument("--m", type=int, help="power for the power/spectral identities")
    c.add_argument("--n", type=int, help="size for the sign lemmas")
    c.add_argument("--semiring", help="semiring for the sign lemmas, or rmax->supertropical lift")

    s = sub.add_parser("suite", help="run the verification suite")
    s.add_argument("--sizes", type=_csv_ints, default=(3, 4))
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=None, help="defaults to TROPALG_SEED, then 1")
    s.add_argument("--semirings", help="comma-separated subset of rmax,smax,supertropical")
    s.add_argument("--ids", help="comma-separated identity ids")
    s.add_argument("--no-grid", action="store_true")
    s.add_argument("--no-fixtures", action="store_true")
    s.add_argument("--all", action="store_true", help="print every instance, not aggregates")
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Execute a command; returns (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "check":
            out, code = _cmd_check(args)
        elif args.verb == "suite":
            out, code = _cmd_suite(args)
        else:
            out, code = _cmd_single(args)
        return code, out + "\n", ""
    except _UsageError as e:
        return EXIT_USAGE, "", json.dumps({"error": "UsageError", "message": str(e)}) + "\n"
    except _USAGE_ERRORS as e:
        return EXIT_USAGE, "", json.dumps(error_obj(e), ensure_ascii=False) + "\n"
    except TropalgError as e:
        return EXIT_COMPUTE, "", json.dumps(error_obj(e), ensure_ascii=False) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
