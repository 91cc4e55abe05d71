"""Command-line front end.

One subcommand per operation; reports are deterministic text, suitable for
golden-file diffing in the machine format.  Exit codes: 0 success, 1 failed
mathematical check, 2 malformed input or degree overflow.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .constructions import coequalizer, coproduct, induced_from_cocone, induced_from_coeq
from .errors import DegreeOverflowError, HopfForgeError, NotFiniteDimensionalError, ParseError
from .fields import Field
from .files import (
    load_presentation,
    load_table,
    parse_field,
    parse_map_file,
    print_map,
    print_presentation,
    print_table,
)
from .findim import check_bialgebra_axioms, compile_presentation, coreflection_probe, solve_antipode
from .presentation import check_hopf_map, hopf_map_report, validate
from .report import ValidationReport
from .standard import builtin_examples, make_example

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

DEGREE_ENV_VAR = "HOPFFORGE_DEGREE_BOUND"


def _env_degree_bound() -> int | None:
    raw = os.environ.get(DEGREE_ENV_VAR)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise HopfForgeError(f"{DEGREE_ENV_VAR} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfforge",
        description="Compute with finitely presented bialgebras and Hopf algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, degree=True, field=True):
        if degree:
            p.add_argument("-d", "--degree-bound", type=int, default=None,
                           help="completion degree bound (also %s)" % DEGREE_ENV_VAR)
        if field:
            p.add_argument("--field", default=None, metavar="Q|Fp",
                           help="override the base field declared in the file")
        p.add_argument("-o", "--output", default=None, help="write the report to a file")
        p.add_argument("--format", choices=["human", "machine"], default="human")

    p = sub.add_parser("validate", help="run the bialgebra/Hopf checks on a presentation")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("nf", help="normal form of a polynomial modulo a presentation")
    p.add_argument("file")
    p.add_argument("poly")
    common(p)

    p = sub.add_parser("basis", help="normal-word basis up to a degree")
    p.add_argument("file")
    p.add_argument("-n", "--max-degree", type=int, required=True)
    p.add_argument("--figure", default=None, help="save a per-degree census figure")
    common(p)

    p = sub.add_parser("grouplikes", help="monomial grouplikes up to a degree")
    p.add_argument("file")
    p.add_argument("-n", "--max-degree", type=int, required=True)
    p.add_argument("--figure", default=None, help="save a per-degree census figure")
    common(p)

    p = sub.add_parser("coproduct", help="coproduct of presentations")
    p.add_argument("files", nargs="+")
    common(p)

    p = sub.add_parser("coequalizer", help="coequalizer of a pair of maps (map file)")
    p.add_argument("mapfile")
    common(p)

    p = sub.add_parser("induce", help="universal-property factorizations")
    mode = p.add_subparsers(dest="mode", required=True)
    pc = mode.add_parser("coeq", help="factor a map through a coequalizer")
    pc.add_argument("pairfile", help="map file with the coequalized pair")
    pc.add_argument("mapfile", help="map file with the map to factor")
    common(pc)
    pk = mode.add_parser("cocone", help="map out of a coproduct from cocone legs")
    pk.add_argument("mapfiles", nargs="+", help="one single-map file per factor")
    common(pk)

    p = sub.add_parser("compile", help="compile a presentation to a structure table")
    p.add_argument("file")
    p.add_argument("-n", "--max-degree", type=int, required=True)
    common(p)

    p = sub.add_parser("antipode", help="solve the antipode system of a table file")
    p.add_argument("tablefile")
    common(p, degree=False, field=False)

    p = sub.add_parser("probe", help="largest Hopf coordinate subspace of a table")
    p.add_argument("tablefile")
    p.add_argument("--max-dim", type=int, default=12)
    common(p, degree=False, field=False)

    p = sub.add_parser("example", help="emit a bundled example presentation")
    p.add_argument("name", choices=sorted(builtin_examples()))
    common(p)

    return parser


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _report_text(args, report: ValidationReport, heading: str = "") -> str:
    lines = report.machine_lines()
    if args.format == "human":
        body = [heading] if heading else []
        body.extend(lines)
        total = len(report.checks)
        passed = sum(c.passed for c in report.checks)
        body.append(f"{passed}/{total} checks passed")
        return "\n".join(body)
    return "\n".join(lines)


def _load(args, path: str):
    field = parse_field(args.field) if getattr(args, "field", None) else None
    bound = args.degree_bound if getattr(args, "degree_bound", None) is not None else _env_degree_bound()
    return load_presentation(Path(path), field, bound)


def _cmd_validate(args) -> int:
    pres = _load(args, args.file)
    report = validate(pres)
    _emit(args, _report_text(args, report, f"validation of {args.file}"))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_nf(args) -> int:
    pres = _load(args, args.file)
    _emit(args, str(pres.nf(pres.algebra.parse(args.poly))))
    return EXIT_OK


def _census_lines(words, degree) -> tuple[list[str], list[int]]:
    counts = [sum(1 for w in words if len(w) == d) for d in range(degree + 1)]
    lines = ["*".join(w) or "1" for w in words]
    lines.append(f"count: {len(words)}")
    return lines, counts


def _cmd_basis(args) -> int:
    pres = _load(args, args.file)
    words = pres.basis(args.max_degree)
    lines, counts = _census_lines(words, args.max_degree)
    if args.figure:
        from .plots import save_census_figure

        save_census_figure(Path(args.figure), counts,
                           f"normal words of {Path(args.file).name}", "basis words per degree")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_grouplikes(args) -> int:
    pres = _load(args, args.file)
    words = pres.grouplikes(args.max_degree)
    lines, counts = _census_lines(words, args.max_degree)
    if args.figure:
        from .plots import save_census_figure

        save_census_figure(Path(args.figure), counts,
                           f"monomial grouplikes of {Path(args.file).name}",
                           "grouplikes per degree")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_coproduct(args) -> int:
    factors = [_load(args, f) for f in args.files]
    bound = args.degree_bound if args.degree_bound is not None else _env_degree_bound()
    result = coproduct(factors, bound)
    text = print_presentation(result.presentation)
    for l, renaming in enumerate(result.labeling.renamings, start=1):
        for g, renamed in renaming.items():
            text += f"# q_{l}: {g} -> {renamed}\n"
    _emit(args, text)
    return EXIT_OK


def _parse_pair(args, path: str) -> tuple:
    maps = parse_map_file(Path(path).read_text(), Path(path).parent,
                          parse_field(args.field) if args.field else None,
                          args.degree_bound)
    return maps


def _cmd_coequalizer(args) -> int:
    maps = _parse_pair(args, args.mapfile)
    if len(maps) != 2:
        raise HopfForgeError("coequalizer needs a map file with exactly two 'map:' sections")
    f, g = maps
    for name, m in (("f", f), ("g", g)):
        if not check_hopf_map(m):
            _emit(args, f"CHECK hopf-map-{name} FAIL")
            return EXIT_CHECK_FAILED
    bound = args.degree_bound if args.degree_bound is not None else _env_degree_bound()
    result = coequalizer(f, g, bound)
    _emit(args, print_presentation(result.presentation))
    return EXIT_OK


def _cmd_induce_coeq(args) -> int:
    pair = _parse_pair(args, args.pairfile)
    if len(pair) != 2:
        raise HopfForgeError("the pair file must hold exactly two 'map:' sections")
    hmaps = _parse_pair(args, args.mapfile)
    if len(hmaps) != 1:
        raise HopfForgeError("the map file to factor must hold exactly one 'map:' section")
    bound = args.degree_bound if args.degree_bound is not None else _env_degree_bound()
    coeq = coequalizer(pair[0], pair[1], bound)
    induced = induced_from_coeq(hmaps[0], coeq)
    report = hopf_map_report(induced)
    text = print_map(induced) + _report_text(args, report)
    _emit(args, text)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_induce_cocone(args) -> int:
    legs = []
    for path in args.mapfiles:
        maps = _parse_pair(args, path)
        if len(maps) != 1:
            raise HopfForgeError(f"{path}: cocone leg files hold exactly one 'map:' section")
        legs.append(maps[0])
    bound = args.degree_bound if args.degree_bound is not None else _env_degree_bound()
    result = coproduct([m.source for m in legs], bound)
    induced = induced_from_cocone(legs, result.labeling)
    report = hopf_map_report(induced)
    text = print_map(induced) + _report_text(args, report)
    _emit(args, text)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_compile(args) -> int:
    pres = _load(args, args.file)
    table = compile_presentation(pres, args.max_degree)
    _emit(args, print_table(table))
    return EXIT_OK


def _cmd_antipode(args) -> int:
    table = load_table(Path(args.tablefile))
    axioms = check_bialgebra_axioms(table)
    if not axioms.ok:
        _emit(args, _report_text(args, axioms, f"axioms of {args.tablefile}"))
        return EXIT_CHECK_FAILED
    s = solve_antipode(table)
    if s is None:
        _emit(args, "INFEASIBLE: no antipode")
        return EXIT_CHECK_FAILED
    rows = [" ".join(table.field.format(c) for c in row) for row in s]
    _emit(args, "antipode:\n" + "\n".join(rows))
    return EXIT_OK


def _cmd_probe(args) -> int:
    table = load_table(Path(args.tablefile))
    result = coreflection_probe(table, args.max_dim)
    if result is None:
        _emit(args, "NOT FOUND: no Hopf coordinate subspace")
        return EXIT_CHECK_FAILED
    names = (
        [table.labels[i] for i in result.indices]
        if table.labels
        else [str(i) for i in result.indices]
    )
    _emit(args, f"dimension: {result.dim}\nbasis: {' '.join(names)}")
    return EXIT_OK


def _cmd_example(args) -> int:
    field = parse_field(args.field) if args.field else Field(0)
    bound = args.degree_bound if args.degree_bound is not None else _env_degree_bound()
    pres = make_example(args.name, field, bound)
    _emit(args, print_presentation(pres))
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "nf": _cmd_nf,
    "basis": _cmd_basis,
    "grouplikes": _cmd_grouplikes,
    "coproduct": _cmd_coproduct,
    "coequalizer": _cmd_coequalizer,
    "compile": _cmd_compile,
    "antipode": _cmd_antipode,
    "probe": _cmd_probe,
    "example": _cmd_example,
}


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "induce":
            handler = _cmd_induce_coeq if args.mode == "coeq" else _cmd_induce_cocone
            return handler(args)
        return _COMMANDS[args.command](args)
    except (ParseError, DegreeOverflowError, NotFiniteDimensionalError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except HopfForgeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
