"""Line-oriented file formats: presentations, structure tables, map files.

Printing is canonical and round-trips bit-exactly through parsing.  Parse
errors carry the offending line number.
"""

from __future__ import annotations

import re
from pathlib import Path

from .algebra import FreeAlgebra, FreePoly, TensorPoly
from .errors import HopfForgeError, ParseError
from .fields import Field, QQ, Scalar
from .findim import Matrix, StructureTable, Vector
from .parsing import parse_fraction
from .presentation import HopfMap, HopfPresentation


def parse_field(text: str, line: int = 1) -> Field:
    text = text.strip()
    if text == "Q":
        return QQ
    m = re.fullmatch(r"F(\d+)", text)
    if m is None:
        raise ParseError(f"expected field 'Q' or 'F<p>', got {text!r}", line, 1)
    try:
        return Field(int(m.group(1)))
    except HopfForgeError as e:
        raise ParseError(str(e), line, 1) from None


def _sections(text: str):
    """Split into (line_number, line) pairs, dropping blanks and comment lines.

    Only whole-line comments are recognized: '#' also appears inside the
    '(#)' tensor separator, so inline stripping would corrupt tensor values.
    """
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield i, line


# -- presentation files -------------------------------------------------------

_SECTION_NAMES = {"relations", "delta", "counit", "antipode"}


def parse_presentation(
    text: str,
    field_override: Field | None = None,
    degree_bound_override: int | None = None,
) -> HopfPresentation:
    field: Field | None = None
    generators: list[str] | None = None
    degree_bound: int | None = None
    section: str | None = None
    relations: list[tuple[int, str]] = []
    delta_lines: list[tuple[int, str]] = []
    counit_lines: list[tuple[int, str]] = []
    antipode_lines: list[tuple[int, str]] | None = None

    for i, line in _sections(text):
        stripped = line.strip()
        head, _, rest = stripped.partition(":")
        key = head.strip().lower()
        if key == "field" and _:
            field = parse_field(rest, i)
            continue
        if key == "generators" and _:
            generators = rest.split()
            continue
        if key == "degree_bound" and _:
            try:
                degree_bound = int(rest.strip())
            except ValueError:
                raise ParseError(f"degree_bound must be an integer, got {rest.strip()!r}", i, 1)
            continue
        if key in _SECTION_NAMES and _ and not rest.strip():
            section = key
            if key == "antipode":
                antipode_lines = []
            continue
        if section is None:
            raise ParseError(f"unexpected line outside any section: {stripped!r}", i, 1)
        bucket = {
            "relations": relations,
            "delta": delta_lines,
            "counit": counit_lines,
            "antipode": antipode_lines,
        }[section]
        bucket.append((i, stripped))

    if generators is None:
        raise ParseError("missing 'generators:' line", 1, 1)
    if field_override is not None:
        field = field_override
    if field is None:
        field = QQ
    if degree_bound_override is not None:
        degree_bound = degree_bound_override

    alg = FreeAlgebra(generators, field)

    def arrow_split(line: str, lineno: int) -> tuple[str, str]:
        if "->" not in line:
            raise ParseError(f"expected 'generator -> value', got {line!r}", lineno, 1)
        lhs, rhs = line.split("->", 1)
        lhs = lhs.strip()
        if lhs not in generators:
            raise ParseError(f"table entry for unknown generator {lhs!r}", lineno, 1)
        return lhs, rhs.strip()

    def wrap(lineno: int, parse):
        try:
            return parse()
        except ParseError as e:
            raise ParseError(e.args[0].split(": ", 1)[-1], lineno, e.column) from None

    rel_polys = [wrap(i, lambda line=line: alg.parse(line)) for i, line in relations]
    delta: dict[str, TensorPoly] = {}
    for i, line in delta_lines:
        g, rhs = arrow_split(line, i)
        delta[g] = wrap(i, lambda rhs=rhs: alg.parse_tensor(rhs))
    counit: dict[str, Scalar] = {}
    for i, line in counit_lines:
        g, rhs = arrow_split(line, i)
        frac = wrap(i, lambda rhs=rhs, i=i: parse_fraction(rhs, i))
        counit[g] = field.of(frac.numerator, frac.denominator)
    antipode: dict[str, FreePoly] | None = None
    if antipode_lines is not None:
        antipode = {}
        for i, line in antipode_lines:
            g, rhs = arrow_split(line, i)
            antipode[g] = wrap(i, lambda rhs=rhs: alg.parse(rhs))

    for g in generators:
        if g not in delta:
            raise ParseError(f"missing delta entry for generator {g!r}", 1, 1)
        if g not in counit:
            raise ParseError(f"missing counit entry for generator {g!r}", 1, 1)
        if antipode is not None and g not in antipode:
            raise ParseError(f"missing antipode entry for generator {g!r}", 1, 1)

    return HopfPresentation.build(alg, rel_polys, delta, counit, antipode, degree_bound)


def print_presentation(pres: HopfPresentation) -> str:
    lines = [
        f"field: {pres.algebra.field}",
        f"generators: {' '.join(pres.algebra.generators)}",
        f"degree_bound: {pres.degree_bound}",
    ]
    if pres.relations:
        lines.append("relations:")
        lines.extend(str(r) for r in pres.relations)
    lines.append("delta:")
    lines.extend(f"{g} -> {pres.delta[g]}" for g in pres.algebra.generators)
    lines.append("counit:")
    lines.extend(f"{g} -> {pres.algebra.field.format(pres.counit[g])}"
                 for g in pres.algebra.generators)
    if pres.antipode is not None:
        lines.append("antipode:")
        lines.extend(f"{g} -> {pres.antipode[g]}" for g in pres.algebra.generators)
    return "\n".join(lines) + "\n"


# -- structure-table files ----------------------------------------------------


def parse_table(text: str) -> StructureTable:
    field = QQ
    dim: int | None = None
    section: str | None = None
    mul_lines: list[tuple[int, str]] = []
    plain: dict[str, list[tuple[int, str]]] = {"unit": [], "delta": [], "counit": [], "antipode": []}
    has_antipode = False
    labels: tuple[str, ...] | None = None

    for i, line in _sections(text):
        stripped = line.strip()
        head, sep, rest = stripped.partition(":")
        key = head.strip().lower()
        if key == "dim" and sep:
            dim = int(rest.strip())
            continue
        if key == "field" and sep:
            field = parse_field(rest, i)
            continue
        if key == "basis" and sep:
            labels = tuple(rest.split())
            continue
        if key in ("mul", "unit", "delta", "counit", "antipode") and sep and not rest.strip():
            section = key
            if key == "antipode":
                has_antipode = True
            continue
        if section == "mul":
            mul_lines.append((i, stripped))
        elif section in plain:
            plain[section].append((i, stripped))
        else:
            raise ParseError(f"unexpected line outside any section: {stripped!r}", i, 1)

    if dim is None:
        raise ParseError("missing 'dim:' header", 1, 1)
    n = dim

    def scalars(chunk: str, lineno: int, count: int) -> Vector:
        parts = chunk.split()
        if len(parts) != count:
            raise ParseError(f"expected {count} entries, got {len(parts)}", lineno, 1)
        out = []
        for p in parts:
            frac = parse_fraction(p, lineno)
            out.append(field.of(frac.numerator, frac.denominator))
        return tuple(out)

    mul = [[None] * n for _ in range(n)]
    for lineno, line in mul_lines:
        head, sep, rest = line.partition("->")
        if not sep:
            raise ParseError("mul lines read 'i j -> c0 ... c_{n-1}'", lineno, 1)
        try:
            i, j = (int(x) for x in head.split())
        except ValueError:
            raise ParseError("mul line must start with two basis indices", lineno, 1)
        mul[i][j] = scalars(rest, lineno, n)
    for i in range(n):
        for j in range(n):
            if mul[i][j] is None:
                raise ParseError(f"missing mul entry for ({i}, {j})", 1, 1)

    if len(plain["unit"]) != 1:
        raise ParseError("unit section must hold exactly one line", 1, 1)
    unit = scalars(plain["unit"][0][1], plain["unit"][0][0], n)

    delta: list[Matrix] = [None] * n  # type: ignore[list-item]
    for lineno, line in plain["delta"]:
        head, sep, rest = line.partition("->")
        if not sep:
            raise ParseError("delta lines read 'i -> row-major n*n entries'", lineno, 1)
        i = int(head.strip())
        flat = scalars(rest, lineno, n * n)
        delta[i] = tuple(flat[j * n : (j + 1) * n] for j in range(n))
    for i in range(n):
        if delta[i] is None:
            raise ParseError(f"missing delta entry for basis index {i}", 1, 1)

    if len(plain["counit"]) != 1:
        raise ParseError("counit section must hold exactly one line", 1, 1)
    counit = scalars(plain["counit"][0][1], plain["counit"][0][0], n)

    antipode: Matrix | None = None
    if has_antipode:
        rows = plain["antipode"]
        if len(rows) != n:
            raise ParseError(f"antipode section must hold {n} matrix rows", 1, 1)
        antipode = tuple(scalars(line, lineno, n) for lineno, line in rows)

    return StructureTable(field, n, tuple(tuple(row) for row in mul), unit,
                          tuple(delta), counit, antipode, labels)


def print_table(t: StructureTable) -> str:
    f = t.field
    lines = [f"dim: {t.dim}", f"field: {f}"]
    if t.labels:
        lines.append(f"basis: {' '.join(t.labels)}")
    lines.append("mul:")
    for i in range(t.dim):
        for j in range(t.dim):
            lines.append(f"{i} {j} -> {' '.join(f.format(c) for c in t.mul[i][j])}")
    lines.append("unit:")
    lines.append(" ".join(f.format(c) for c in t.unit))
    lines.append("delta:")
    for i in range(t.dim):
        flat = [c for row in t.delta[i] for c in row]
        lines.append(f"{i} -> {' '.join(f.format(c) for c in flat)}")
    lines.append("counit:")
    lines.append(" ".join(f.format(c) for c in t.counit))
    if t.antipode is not None:
        lines.append("antipode:")
        for row in t.antipode:
            lines.append(" ".join(f.format(c) for c in row))
    return "\n".join(lines) + "\n"


# -- map files ----------------------------------------------------------------


def parse_map_file(text: str, base_dir: Path, field_override: Field | None = None,
                   degree_bound_override: int | None = None) -> list[HopfMap]:
    """A map file names source/target presentation files and one or two
    generator-image lists (two for a coequalizer pair)."""
    source: HopfPresentation | None = None
    target: HopfPresentation | None = None
    image_blocks: list[list[tuple[int, str]]] = []

    for i, line in _sections(text):
        stripped = line.strip()
        head, sep, rest = stripped.partition(":")
        key = head.strip().lower()
        if key == "source" and sep:
            source = load_presentation(base_dir / rest.strip(), field_override,
                                       degree_bound_override)
            continue
        if key == "target" and sep:
            target = load_presentation(base_dir / rest.strip(), field_override,
                                       degree_bound_override)
            continue
        if key == "map" and sep and not rest.strip():
            image_blocks.append([])
            continue
        if not image_blocks:
            raise ParseError(f"unexpected line before any 'map:' section: {stripped!r}", i, 1)
        image_blocks[-1].append((i, stripped))

    if source is None or target is None:
        raise ParseError("map file needs 'source:' and 'target:' lines", 1, 1)
    if not image_blocks:
        raise ParseError("map file needs at least one 'map:' section", 1, 1)

    maps: list[HopfMap] = []
    for block in image_blocks:
        images: dict[str, FreePoly] = {}
        for lineno, line in block:
            if "->" not in line:
                raise ParseError(f"expected 'generator -> image', got {line!r}", lineno, 1)
            lhs, rhs = line.split("->", 1)
            g = lhs.strip()
            if g not in source.algebra.generators:
                raise ParseError(f"image for unknown source generator {g!r}", lineno, 1)
            images[g] = target.algebra.parse(rhs.strip())
        missing = set(source.algebra.generators) - set(images)
        if missing:
            raise ParseError(f"map is missing images for {sorted(missing)}", 1, 1)
        maps.append(HopfMap(source, target, images))
    return maps


def print_map(m: HopfMap) -> str:
    lines = ["map:"]
    lines.extend(f"{g} -> {m.images[g]}" for g in m.source.algebra.generators)
    return "\n".join(lines) + "\n"


# -- path helpers -------------------------------------------------------------


def load_presentation(path: Path, field_override: Field | None = None,
                      degree_bound_override: int | None = None) -> HopfPresentation:
    return parse_presentation(Path(path).read_text(), field_override, degree_bound_override)


def load_table(path: Path) -> StructureTable:
    return parse_table(Path(path).read_text())
