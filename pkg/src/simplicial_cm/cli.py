"""Command-line front end.

Input is a JSON document such as::

    {"ambient_dim": 2, "generators": [[2, 0], [0, 1], [3, 1], [1, 2]], "basis": [0, 1]}

read from a file argument or standard input.  Exit status: 0 success,
1 malformed input, 2 semigroup not simplicial, 3 a verification failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import apery, closure as closure_mod, decomposition
from .errors import BoundTooSmall, NotSimplicial, ParseError, RankZero, ValidationError
from .semigroup import AffineSemigroup, build_semigroup

log = logging.getLogger("simplicial_cm")

EXIT_OK, EXIT_INPUT, EXIT_NOT_SIMPLICIAL, EXIT_VERIFY = 0, 1, 2, 3
DEFAULT_SEED = 20260101

COMMANDS = ("decompose", "cm-check", "cm-closure", "saturate", "verify", "probe-minimality")


@dataclass
class SemigroupSpec:
    ambient_dim: int
    generators: list
    basis: Optional[list] = None
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"ambient_dim": self.ambient_dim, "generators": [list(g) for g in self.generators]}
        if self.basis is not None:
            out["basis"] = list(self.basis)
        return out


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_spec(text: str) -> SemigroupSpec:
    """Parse and validate a semigroup document; duplicates are dropped with a warning."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - {"ambient_dim", "generators", "basis"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    n = doc.get("ambient_dim")
    gens = doc.get("generators")
    if not _is_int(n) or n < 1:
        raise ValidationError("ambient_dim must be a positive integer")
    if not isinstance(gens, list) or not gens:
        raise ValidationError("generators must be a nonempty list")
    for g in gens:
        if not isinstance(g, list) or not all(_is_int(x) for x in g):
            raise ValidationError(f"generator {g!r} is not a list of integers")
        if len(g) != n:
            raise ValidationError(f"generator {g} does not have length {n}")
        if not any(g):
            raise ValidationError("zero generator")
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or not all(_is_int(i) for i in basis):
            raise ValidationError("basis must be a list of indices")
        if any(not 0 <= i < len(gens) for i in basis):
            raise ValidationError("basis index out of range")
    unique, warnings = [], []
    position = {}
    for g in gens:
        t = tuple(g)
        if t in position:
            warnings.append(f"duplicate generator {list(t)} dropped")
            continue
        position[t] = len(unique)
        unique.append(t)
    if basis is not None:
        basis = [position[tuple(gens[i])] for i in basis]
    for w in warnings:
        log.warning(w)
    return SemigroupSpec(n, unique, basis, warnings)


# -- report assembly ---------------------------------------------------------

def _q(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _point(S: AffineSemigroup, lam) -> dict:
    return {"ambient": [_q(v) for v in S.ambient(lam)], "lambda": [_q(v) for v in lam]}


def _class_entry(S: AffineSemigroup, c: apery.AperyClass) -> dict:
    height = apery.ideal_height(c.ideal)
    return {
        "elements": [_point(S, e) for e in c.elements],
        "shift": _point(S, c.shift),
        "ideal": {
            "lambda_exponents": [list(g) for g in c.ideal.min_gens],
            "ambient_exponents": [[_q(v) for v in S.ambient(g)] for g in c.ideal.min_gens],
            "unit": c.ideal.is_unit,
            "height": "full" if height == float("inf") else height,
        },
    }


def _gens(S: AffineSemigroup) -> list:
    return [list(g) for g in S.generators]


def run(spec: SemigroupSpec, command: str, bound: Optional[int] = None, verify: bool = False,
        samples: int = 100, seed: int = DEFAULT_SEED) -> tuple[dict, int]:
    """Execute ``command`` on the parsed spec; returns (report, exit code)."""
    S = build_semigroup(spec.generators, spec.basis)
    dec = decomposition.decompose(S)
    cm = decomposition.is_cohen_macaulay(S, dec)
    report = {
        "command": command,
        "input": spec.to_dict(),
        "warnings": list(spec.warnings),
        "basis": {"indices": list(S.basis), "vectors": [list(e) for e in S.basis_vectors]},
        "rank": S.rank,
        "f": dec.f,
        "apery_set": [_point(S, e) for c in dec.classes for e in c.elements],
        "classes": [_class_entry(S, c) for c in dec.classes],
        "cohen_macaulay": {
            "is_cm": cm.is_cm,
            "witness": None if cm.witness is None else {
                "class": cm.witness[0],
                "elements": [_point(S, cm.witness[1]), _point(S, cm.witness[2])],
            },
        },
    }
    report["apery_set"].sort(key=lambda p: [Fraction(v) for v in p["lambda"]])
    code = EXIT_OK
    vbound = bound if bound is not None else decomposition.default_bound(dec)
    verification = {}

    if command in ("cm-closure", "saturate", "verify"):
        clo = closure_mod.cm_closure(S)
        sat = closure_mod.saturate(S)
        report["closure"] = {
            "generators": _gens(clo.closure),
            "apery_set": [_point(clo.closure, e) for e in apery.apery_set(clo.closure)],
            "is_cm": True,
        }
        report["saturation"] = {"generators": _gens(sat.saturation)}
        b_c = closure_mod.is_subsemigroup(S, clo.closure)
        c_s = closure_mod.is_subsemigroup(clo.closure, sat.saturation)
        report["chain"] = {
            "B_in_closure": b_c,
            "closure_in_saturation": c_s,
            "B_equals_closure": b_c and closure_mod.is_subsemigroup(clo.closure, S),
            "closure_equals_saturation": c_s and closure_mod.is_subsemigroup(sat.saturation, clo.closure),
        }
        if command == "verify" or verify:
            verification["saturation"] = closure_mod.verify_saturation(S, sat, vbound)
    if command == "verify" or (verify and command in ("decompose", "cm-check")):
        verification["decomposition"] = decomposition.verify_decomposition(S, dec, vbound)
    if verification:
        report["verification"] = dict(verification, bound=vbound)
        if not all(verification.values()):
            code = EXIT_VERIFY
    if command == "probe-minimality":
        summary = closure_mod.probe_minimality(
            S, samples=samples, seed=seed, bound=bound if bound is not None else 2)
        report["probe"] = {
            "samples": summary.samples,
            "seed": seed,
            "cm_found": summary.cm_found,
            "violations": [[list(x) for x in v] for v in summary.violations],
        }
        if summary.violations:
            code = EXIT_VERIFY
    return report, code


# -- output ------------------------------------------------------------------

def to_machine(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def from_machine(text: str) -> dict:
    return json.loads(text)


def _fmt_point(p: dict) -> str:
    amb = "(" + ", ".join(str(v) for v in p["ambient"]) + ")"
    lam = "(" + ", ".join(str(v) for v in p["lambda"]) + ")"
    return f"{amb} [lambda {lam}]"


def to_text(report: dict) -> str:
    lines = []
    add = lines.append
    add(f"generators: {report['input']['generators']}")
    for w in report["warnings"]:
        add(f"warning: {w}")
    add(f"basis: {report['basis']['vectors']} (indices {report['basis']['indices']})")
    add(f"rank d = {report['rank']}, classes f = {report['f']}")
    add("apery set:")
    for p in report["apery_set"]:
        add(f"  {_fmt_point(p)}")
    for j, c in enumerate(report["classes"], 1):
        ideal = c["ideal"]
        gens = "T" if ideal["unit"] else ", ".join(
            f"t^({', '.join(map(str, e))})" for e in ideal["ambient_exponents"])
        add(f"class {j}: shift {_fmt_point(c['shift'])}; ideal {gens}; height {ideal['height']}")
        for e in c["elements"]:
            add(f"    element {_fmt_point(e)}")
    cm = report["cohen_macaulay"]
    if cm["is_cm"]:
        add("Cohen-Macaulay: yes")
    else:
        w = cm["witness"]
        add(f"Cohen-Macaulay: no (class {w['class'] + 1} contains "
            f"{_fmt_point(w['elements'][0])} and {_fmt_point(w['elements'][1])})")
    if "closure" in report:
        add(f"closure generators: {report['closure']['generators']}")
        add("closure apery set: " + ", ".join(_fmt_point(p) for p in report["closure"]["apery_set"]))
    if "saturation" in report:
        add(f"saturation generators: {report['saturation']['generators']}")
    if "chain" in report:
        for k, v in report["chain"].items():
            add(f"{k}: {v}")
    if "verification" in report:
        v = report["verification"]
        for k in ("decomposition", "saturation"):
            if k in v:
                add(f"verify {k} (bound {v['bound']}): {'pass' if v[k] else 'FAIL'}")
    if "probe" in report:
        p = report["probe"]
        add(f"probe: {p['samples']} samples (seed {p['seed']}), {p['cm_found']} CM, "
            f"{len(p['violations'])} violations")
    return "\n".join(lines) + "\n"


def _add_common(p: argparse.ArgumentParser) -> None:
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    p.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    p.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                   help="lambda-box cap for verification and probing")
    p.add_argument("--basis", default=argparse.SUPPRESS, help="comma separated generator indices")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplicial-cm", description=__doc__.splitlines()[0])
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-", help="JSON file, '-' for stdin")
        _add_common(p)
        if name in ("decompose", "cm-check", "cm-closure", "saturate"):
            p.add_argument("--verify", action="store_true")
        if name == "probe-minimality":
            p.add_argument("--samples", type=int, default=100)
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    bound = getattr(args, "bound", None)
    basis = getattr(args, "basis", None)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input) as fh:
                text = fh.read()
        spec = parse_spec(text)
        if basis:
            try:
                spec.basis = [int(i) for i in basis.split(",")]
            except ValueError as exc:
                raise ValidationError(f"bad --basis {basis!r}") from exc
            if any(not 0 <= i < len(spec.generators) for i in spec.basis):
                raise ValidationError("basis index out of range")
        if bound is not None and bound < 1:
            raise ValidationError("--bound must be >= 1")
    except (OSError, ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report, code = run(
            spec, args.command, bound=bound, verify=getattr(args, "verify", False),
            samples=getattr(args, "samples", 100), seed=getattr(args, "seed", DEFAULT_SEED))
    except (NotSimplicial, RankZero) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SIMPLICIAL
    except BoundTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = to_machine(report) if fmt == "machine" else to_text(report)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
