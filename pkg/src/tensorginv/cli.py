"""Command-line front end.

Every subcommand writes one JSON report (to ``--output`` or stdout)::

    tensorginv core --input a.json -o report.json
    tensorginv coreep --input fixture:example5_2
    tensorginv verify --a a.json --x x.json --expect MoorePenrose
    tensorginv fixtures example3_1 --tensor A -o a.json

Operands are tensor documents (see :mod:`tensorginv.io`). A fixture
document written by ``fixtures NAME`` is accepted as well; append
``#NAME`` to pick one of its tensors (default ``A``). ``fixture:NAME``
reads a bundled fixture directly.

Inverse reports carry::

    operation, input_shapes, formula, index_used, ranks_of_powers,
    tolerance, result, verification, classification, defining_tags, verified

Exit status is 0 on success, 2 when a precondition fails (not index one,
exponent below the index, violated sum hypotheses, shape mismatch) or the
result does not satisfy its defining equations, and 1 on I/O, parse or
numerical failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence

from . import __version__
from .config import ToleranceConfig
from .errors import (
    BadExponent,
    HypothesisViolated,
    NotIndexOne,
    ShapeMismatch,
    TensorFileError,
    TensorInverseError,
    UnknownFixture,
)
from .fixtures import NAMES, Fixture, fixture
from .inverses import (
    CoreEPFormula,
    CoreFormula,
    InverseKind,
    InverseResult,
    core_ep_inverse,
    core_inverse,
    drazin_inverse,
    group_inverse,
    index_profile,
    moore_penrose,
)
from .io import dumps, tensor_from_dict, tensor_to_dict
from .tensor import DenseTensor, einstein_product, rshrank
from .verify import SYSTEMS, check, classify_report

EXIT_OK = 0
EXIT_IO = 1
EXIT_PRECONDITION = 2

PRECONDITION_ERRORS = (NotIndexOne, BadExponent, HypothesisViolated, ShapeMismatch)
FIXTURE_PREFIX = "fixture:"


class UsageError(Exception):
    """Bad command line; reported with exit status 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for preconditions
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def fixture_to_dict(fx: Fixture) -> dict:
    return {
        "name": fx.name,
        "description": fx.description,
        "tensors": {k: tensor_to_dict(v) for k, v in fx.tensors.items()},
        "golden": {k: tensor_to_dict(v) for k, v in fx.golden.items()},
        "facts": dict(fx.facts),
    }


def load_operand(operand: str) -> DenseTensor:
    """Load ``path``, ``path#NAME`` or ``fixture:NAME[#TENSOR]``."""
    source, _, name = operand.partition("#")
    if source.startswith(FIXTURE_PREFIX):
        fx = fixture(source[len(FIXTURE_PREFIX):])
        return _pick(fx.tensors, name or "A", operand)
    try:
        doc = json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise TensorFileError(f"{source}: invalid JSON: {exc}") from exc
    if isinstance(doc, dict) and "tensors" in doc:
        if not isinstance(doc["tensors"], dict):
            raise TensorFileError(f"{source}: 'tensors' must be an object")
        return tensor_from_dict(_pick(doc["tensors"], name or "A", operand))
    if name:
        raise TensorFileError(f"{source} holds a single tensor; drop '#{name}'")
    return tensor_from_dict(doc)


def _pick(table: dict, name: str, operand: str):
    if name not in table:
        raise TensorFileError(f"{operand}: no tensor {name!r}; available: {', '.join(table)}")
    return table[name]


def _shape_dict(t: DenseTensor) -> dict:
    return {"left_modes": list(t.left_modes), "right_modes": list(t.right_modes)}


def _tolerance(args) -> ToleranceConfig:
    try:
        return ToleranceConfig(
            rank_rtol=args.rank_rtol,
            eq_atol=args.atol,
            eq_rtol=args.rtol,
            svd_method=args.svd,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _inverse_report(op: str, a: DenseTensor, res: InverseResult, tol: ToleranceConfig) -> dict:
    k = res.index_used if a.is_square else None
    if res.kind is InverseKind.CORE_EP or res.kind is InverseKind.DRAZIN:
        # the defining equations use ind(A), which is the first stabilized power
        k = _first_stable(res.ranks_of_powers)
    report = check(a, res.value, k, tol)
    tags = list(SYSTEMS[res.kind.value])
    return {
        "operation": op,
        "input_shapes": {"a": _shape_dict(a)},
        "formula": res.formula,
        "index_used": res.index_used,
        "ranks_of_powers": list(res.ranks_of_powers),
        "tolerance": tol.to_dict(),
        "result": tensor_to_dict(res.value),
        "verification": report.to_dict(),
        "classification": sorted(classify_report(report)),
        "defining_tags": tags,
        "verified": report.holds(*tags),
    }


def _first_stable(ranks) -> Optional[int]:
    for j in range(len(ranks) - 1):
        if ranks[j] == ranks[j + 1]:
            return j + 1
    return None


def _cmd_pinv(args, tol):
    a = load_operand(args.input)
    return _inverse_report("pinv", a, moore_penrose(a, tol), tol)


def _cmd_group(args, tol):
    a = load_operand(args.input)
    return _inverse_report("group", a, group_inverse(a, tol), tol)


def _cmd_drazin(args, tol):
    a = load_operand(args.input)
    return _inverse_report("drazin", a, drazin_inverse(a, tol, args.l), tol)


def _cmd_core(args, tol):
    a = load_operand(args.input)
    res = core_inverse(a, tol, args.formula, args.seed)
    return _inverse_report("core", a, res, tol)


def _cmd_coreep(args, tol):
    a = load_operand(args.input)
    res = core_ep_inverse(a, tol, args.formula, args.l)
    return _inverse_report("coreep", a, res, tol)


def _cmd_index(args, tol):
    a = load_operand(args.input)
    k, ranks = index_profile(a, tol)
    return {
        "operation": "index",
        "input_shapes": {"a": _shape_dict(a)},
        "tolerance": tol.to_dict(),
        "result": k,
        "ranks_of_powers": list(ranks),
    }


def _cmd_rank(args, tol):
    a = load_operand(args.input)
    return {
        "operation": "rank",
        "input_shapes": {"a": _shape_dict(a)},
        "tolerance": tol.to_dict(),
        "result": rshrank(a, tol),
    }


def _cmd_einsum(args, tol):
    a, b = load_operand(args.a), load_operand(args.b)
    return {
        "operation": "einsum",
        "input_shapes": {"a": _shape_dict(a), "b": _shape_dict(b)},
        "result": tensor_to_dict(einstein_product(a, b)),
    }


def _cmd_verify(args, tol):
    a, x = load_operand(args.a), load_operand(args.x)
    report = check(a, x, args.k, tol)
    labels = sorted(classify_report(report))
    out = {
        "operation": "verify",
        "input_shapes": {"a": _shape_dict(a), "x": _shape_dict(x)},
        "tolerance": tol.to_dict(),
        "verification": report.to_dict(),
        "classification": labels,
    }
    if args.expect:
        out["expected"] = args.expect
        out["defining_tags"] = list(SYSTEMS[args.expect])
        out["verified"] = args.expect in labels
    return out


def _cmd_fixtures(args, tol):
    if args.list:
        return {"operation": "fixtures", "names": list(NAMES)}
    if args.name is None:
        raise UsageError("fixtures: give a NAME or --list")
    fx = fixture(args.name)
    if args.tensor:
        table = {**fx.tensors, **fx.golden}
        return tensor_to_dict(_pick(table, args.tensor, args.name))
    return fixture_to_dict(fx)


COMMANDS: Dict[str, Callable] = {
    "pinv": _cmd_pinv,
    "group": _cmd_group,
    "drazin": _cmd_drazin,
    "core": _cmd_core,
    "coreep": _cmd_coreep,
    "index": _cmd_index,
    "rank": _cmd_rank,
    "verify": _cmd_verify,
    "einsum": _cmd_einsum,
    "fixtures": _cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="write the JSON report here instead of stdout")
    common.add_argument("--rank-rtol", type=float, default=None, help="relative singular-value cutoff")
    common.add_argument("--atol", type=float, default=ToleranceConfig.eq_atol, help="absolute equality tolerance")
    common.add_argument("--rtol", type=float, default=ToleranceConfig.eq_rtol, help="relative equality tolerance")
    common.add_argument("--svd", choices=("jacobi", "lapack"), default=ToleranceConfig.svd_method)

    parser = _Parser(prog="tensorginv", description="Generalized inverses of even-order tensors.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    helps = {
        "pinv": "Moore-Penrose inverse",
        "group": "group inverse (index one only)",
        "drazin": "Drazin inverse",
        "core": "core inverse (index one only)",
        "coreep": "core-EP inverse",
        "index": "index and ranks of powers",
        "rank": "rank of the reshaped matrix",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--input", "-i", required=True, help="tensor file, path#NAME or fixture:NAME")
        if name in ("drazin", "coreep"):
            p.add_argument("--l", type=int, default=None, help="exponent l >= index (default: the index)")
        if name == "core":
            p.add_argument("--formula", choices=[f.value for f in CoreFormula], default=CoreFormula.GROUP_MP.value)
            p.add_argument("--seed", type=int, default=None, help="seed for randomized {1,3} or inner inverses")
        if name == "coreep":
            p.add_argument(
                "--formula", choices=[f.value for f in CoreEPFormula], default=CoreEPFormula.POWER_PINV.value
            )

    p = sub.add_parser("verify", parents=[common], help="check a candidate X against every defining equation")
    p.add_argument("--a", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--k", type=int, default=None, help="index used by 1kT and EP (default: ind(A))")
    p.add_argument("--expect", choices=sorted(SYSTEMS), default=None, help="exit 2 unless X is of this kind")

    p = sub.add_parser("einsum", parents=[common], help="Einstein product A * B")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("fixtures", parents=[common], help="emit a bundled example")
    p.add_argument("name", nargs="?", choices=NAMES)
    p.add_argument("--tensor", default=None, help="emit only this tensor or golden inverse")
    p.add_argument("--list", action="store_true", help="list fixture names")
    return parser


def _emit(doc: dict, output: Optional[str]) -> None:
    text = dumps(doc, indent=1) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        tol = _tolerance(args)
        doc = COMMANDS[args.command](args, tol)
        _emit(doc, args.output)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except PRECONDITION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (OSError, TensorFileError, UnknownFixture, TensorInverseError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO
    if doc.get("verified") is False:
        print(f"error: result fails its defining equations {doc['defining_tags']}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
