"""Command-line front end: search, build, construct, verify, enumerate, classify.

A single ``neargroup`` binary with subcommands.  Human-readable reports go
to stdout; the equivalent JSON document is printed instead with ``--json``
and written to a file with ``--out``.  Every JSON document carries a
versioned ``schema`` field.  Exit status: 0 on success or a clean pass,
1 when a verification fails or a search comes back empty, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .associators import (
    EXAMPLE_VARIANTS,
    construct_standard,
    data_from_obj,
    data_to_obj,
    example_data,
)
from .braiding import braiding_record, classify, enumerate_braidings
from .coherence import oracle_sweep, trivial_group_verdict, verify_all
from .fields import SmallField
from .groups import AbelianGroup
from .pi_structures import (
    PiStructure,
    field_from_pi,
    fields_isomorphic,
    find_all_pi,
    pi_from_field,
)


@dataclass(frozen=True)
class CommandConfig:
    """Everything one invocation needs, validated before any work starts."""

    subcommand: str
    group: str | None = None
    field: int | None = None
    pi: str | None = None
    input: Path | None = None
    out: Path | None = None
    root_bound: int | None = None
    oracle: bool = False
    json_output: bool = False
    family: str | None = None
    k: int | None = None

    def validate(self) -> None:
        if self.input is not None and not self.input.is_file():
            raise ValueError(f"input file {self.input} does not exist")
        if self.out is not None:
            parent = self.out.resolve().parent
            if not parent.is_dir():
                raise ValueError(f"output directory {parent} does not exist")


def _emit(cfg: CommandConfig, text: str, obj: dict) -> None:
    payload = json.dumps(obj, indent=2)
    print(payload if cfg.json_output else text)
    if cfg.out is not None:
        cfg.out.write_text(payload + "\n")


def _resolve_pair(cfg: CommandConfig) -> tuple[AbelianGroup, PiStructure] | None:
    """Group and permutation from --field or --group/--pi; None if none exist."""
    if cfg.field is not None:
        return pi_from_field(cfg.field)
    group = AbelianGroup.parse_descriptor(cfg.group)
    if cfg.pi is not None:
        pi = PiStructure.parse(group, cfg.pi)
        field_from_pi(group, pi)
        return group, pi
    found = find_all_pi(group)
    if not found:
        print(
            f"{group.descriptor()} admits no compatible permutation; "
            "it is not the unit group of a finite field"
        )
        return None
    return group, found[0]


def _cmd_search_pi(cfg: CommandConfig) -> int:
    group = AbelianGroup.parse_descriptor(cfg.group)
    found = find_all_pi(group)
    noun = "structure" if len(found) == 1 else "structures"
    lines = [f"{group.descriptor()}: {len(found)} {noun}"]
    for pi in found:
        lines.append(f"  {pi}   (omega = {pi.omega().name})")
    obj = {
        "schema": "pi-list@1",
        "group": group.descriptor(),
        "count": len(found),
        "structures": [str(pi) for pi in found],
    }
    _emit(cfg, "\n".join(lines), obj)
    return 0 if found else 1


def _format_table(op, q: int) -> str:
    w = len(str(q - 1))
    lines = [" " * (w + 2) + " ".join(f"{b:>{w}}" for b in range(q))]
    lines.append(" " * (w + 1) + "-" * ((w + 1) * q))
    for a in range(q):
        lines.append(f"{a:>{w}} | " + " ".join(f"{op(a, b):>{w}}" for b in range(q)))
    return "\n".join(lines)


def _cmd_build_field(cfg: CommandConfig) -> int:
    pair = _resolve_pair(cfg)
    if pair is None:
        return 1
    group, pi = pair
    table = field_from_pi(group, pi)
    q = table.q
    standard = fields_isomorphic(table, SmallField(q))
    lines = [
        f"F{q} reconstructed from {group.descriptor()} with pi = {pi}",
        "element i >= 1 is the i-th group element; 0 is the zero element",
        "",
        "addition:",
        _format_table(table.add, q),
        "",
        "multiplication:",
        _format_table(table.mul, q),
        "",
        f"isomorphic to the standard field of order {q}: {'yes' if standard else 'NO'}",
    ]
    obj = {
        "schema": "field-table@1",
        "q": q,
        "group": group.descriptor(),
        "pi": str(pi),
        "add": [[table.add(a, b) for b in range(q)] for a in range(q)],
        "mul": [[table.mul(a, b) for b in range(q)] for a in range(q)],
        "standard": standard,
    }
    _emit(cfg, "\n".join(lines), obj)
    return 0 if standard else 1


def _cmd_construct(cfg: CommandConfig) -> int:
    pair = _resolve_pair(cfg)
    if pair is None:
        return 1
    group, pi = pair
    data = construct_standard(group, pi)
    text = (
        f"constructed ({group.descriptor()}, {data.k}) with pi = {pi}, "
        f"delta = {data.delta:+d}, all unit scalars 1"
    )
    if cfg.out is not None:
        text += f"\ndata written to {cfg.out}"
    _emit(cfg, text, data_to_obj(data))
    return 0


def _cmd_verify(cfg: CommandConfig) -> int:
    data = data_from_obj(json.loads(cfg.input.read_text()))
    reports = verify_all(data)
    ok = all(r.passed for r in reports)
    lines = [r.render() for r in reports]
    obj = {
        "schema": "verification-run@1",
        "input": str(cfg.input),
        "reports": [r.to_obj() for r in reports],
    }
    if cfg.oracle:
        results = oracle_sweep(data)
        bad = [r for r in results if not r.passed]
        ok = ok and not bad
        noun = "disagreement" if len(bad) == 1 else "disagreements"
        lines.append(
            f"pentagon oracle: {len(results)} word/channel pairs, {len(bad)} {noun}"
        )
        lines.extend(r.render() for r in bad[:5])
        obj["oracle"] = {
            "checked": len(results),
            "failures": [
                {
                    "word": [str(x) for x in r.word],
                    "summand": str(r.summand),
                    "mismatches": len(r.mismatches),
                }
                for r in bad
            ],
        }
    obj["status"] = "pass" if ok else "fail"
    lines.append(f"overall: {'pass' if ok else 'FAIL'}")
    _emit(cfg, "\n".join(lines), obj)
    return 0 if ok else 1


def _cmd_braidings(cfg: CommandConfig) -> int:
    data = data_from_obj(json.loads(cfg.input.read_text()))
    kwargs = {}
    if cfg.root_bound is not None:
        kwargs["root_order_bound"] = cfg.root_bound
    found = enumerate_braidings(data, **kwargs)
    noun = "braiding" if len(found) == 1 else "braidings"
    lines = [
        f"({data.group.descriptor()}, {data.k}) with pi = {data.pi}: "
        f"{len(found)} {noun}"
    ]
    records = []
    for b in found:
        rec = braiding_record(data, b)
        records.append(rec)
        tags = [
            "symmetric" if rec["symmetric"] else "not symmetric",
            "balanced" if rec["twists"] else "not balanced",
        ]
        psi = ", ".join(str(v) for v in b.psi)
        lines.append(f"  sigma3(eps) = {b.sigma3_eps}, psi = ({psi}): {', '.join(tags)}")
    obj = {
        "schema": "braiding-list@1",
        "group": data.group.descriptor(),
        "pi": str(data.pi),
        "count": len(found),
        "braidings": records,
    }
    _emit(cfg, "\n".join(lines), obj)
    return 0 if found else 1


def _cmd_classify(cfg: CommandConfig) -> int:
    name, _, variant = cfg.family.partition(":")
    data = example_data(name, variant or None)
    row = classify(data)
    obj = {"schema": "classification@1", **row.to_obj()}
    _emit(cfg, row.render(), obj)
    return 0


def _cmd_obstruction(cfg: CommandConfig) -> int:
    verdict = trivial_group_verdict(cfg.k)
    obj = {
        "schema": "obstruction@1",
        "k": verdict.k,
        "obstructed": verdict.obstructed,
        "flip_determinant": verdict.flip_determinant,
        "determinant_angles": [[str(l), str(m)] for l, m in verdict.solutions],
        "reason": verdict.reason,
    }
    _emit(cfg, verdict.render(), obj)
    return 0


def _cmd_fixtures(cfg: CommandConfig) -> int:
    lines = []
    entries = []
    ok = True
    for name, variants in EXAMPLE_VARIANTS.items():
        for variant in variants:
            data = example_data(name, variant)
            reports = verify_all(data)
            passed = all(r.passed for r in reports)
            ok = ok and passed
            label = name if variant is None else f"{name}:{variant}"
            lines.append(f"{label:14} {'pass' if passed else 'FAIL'}")
            for report in reports:
                for fam in report.families:
                    if not fam.passed:
                        lines.append(f"    family {fam.family}: {len(fam.failures)} failures")
            entries.append(
                {
                    "family": name,
                    "variant": variant,
                    "passed": passed,
                    "reports": [r.to_obj() for r in reports],
                }
            )
    obj = {"schema": "fixture-report@1", "fixtures": entries}
    _emit(cfg, "\n".join(lines), obj)
    return 0 if ok else 1


_HANDLERS = {
    "search-pi": _cmd_search_pi,
    "build-field": _cmd_build_field,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "braidings": _cmd_braidings,
    "classify": _cmd_classify,
    "obstruction": _cmd_obstruction,
    "fixtures": _cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neargroup",
        description=(
            "Exact near-group category toolkit: search compatible permutations, "
            "rebuild finite fields, construct associator data, verify coherence, "
            "and enumerate braidings."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="command")

    def command(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument(
            "--json",
            action="store_true",
            dest="json_output",
            help="print the JSON document instead of the text report",
        )
        p.add_argument(
            "--out", type=Path, metavar="FILE", help="also write the JSON document here"
        )
        return p

    def source_options(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument(
            "--field", type=int, metavar="Q", help="prime power; use the standard field"
        )
        src.add_argument("--group", metavar="DESC", help='group descriptor, e.g. "Z4"')
        p.add_argument(
            "--pi",
            metavar="CYCLES",
            help='permutation in cycle notation, e.g. "(g g2 g3)" '
            "(with --group; defaults to the first one found)",
        )

    p = command("search-pi", "list the compatible order-3 permutations of a group")
    p.add_argument(
        "--group",
        required=True,
        metavar="DESC",
        help='group descriptor, e.g. "Z4" or "Z2xZ2"',
    )

    p = command("build-field", "reconstruct the finite field from a group and permutation")
    source_options(p)

    p = command("construct", "build the standard associator data and save it")
    source_options(p)

    p = command("verify", "run every coherence check on saved data")
    p.add_argument(
        "--input",
        required=True,
        type=Path,
        metavar="FILE",
        help="data file written by construct",
    )
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also compare both pentagon paths on every four-letter word",
    )

    p = command("braidings", "enumerate the braidings of saved data")
    p.add_argument(
        "--input",
        required=True,
        type=Path,
        metavar="FILE",
        help="data file written by construct",
    )
    p.add_argument(
        "--root-bound",
        type=int,
        dest="root_bound",
        metavar="N",
        help="largest root-of-unity order kept (escalates automatically if needed)",
    )

    p = command("classify", "print the classification row for a built-in family")
    p.add_argument(
        "--family",
        required=True,
        metavar="NAME",
        help='family name, optionally with a variant: "Z2k1", "Z2k1:zeta3", "Z4k3"',
    )

    p = command("obstruction", "decide solvability when the group is trivial")
    p.add_argument(
        "--k", required=True, type=int, metavar="K", help="multiplicity of m in m*m"
    )

    command("fixtures", "verify the built-in worked examples")
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CommandConfig(
        subcommand=args.subcommand,
        group=getattr(args, "group", None),
        field=getattr(args, "field", None),
        pi=getattr(args, "pi", None),
        input=getattr(args, "input", None),
        out=getattr(args, "out", None),
        root_bound=getattr(args, "root_bound", None),
        oracle=getattr(args, "oracle", False),
        json_output=getattr(args, "json_output", False),
        family=getattr(args, "family", None),
        k=getattr(args, "k", None),
    )
    try:
        cfg.validate()
        return _HANDLERS[cfg.subcommand](cfg)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
