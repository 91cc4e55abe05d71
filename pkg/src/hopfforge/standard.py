"""Constructors for the standard example presentations.

Group algebras of finitely presented groups, monoid bialgebras (grouplike
generators, no antipode) and the 4-dimensional Sweedler Hopf algebra.
Formal inverses get dedicated generators (``g`` pairs with ``g_inv``) with
explicit two-sided inverse relations, so every relation stays polynomial
and the antipode is a plain generator table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import FreeAlgebra, FreePoly, TensorPoly, Word
from .errors import CharacteristicError, HopfForgeError
from .fields import Field, QQ, Scalar
from .presentation import HopfPresentation

# A relator is a word in the group generators with integer exponents,
# e.g. ((("g", 3),),) for g^3 = 1.
Relator = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Relator, ...] = ()

    def __post_init__(self):
        for rel in self.relators:
            if not rel:
                raise HopfForgeError("relators must be nonempty")
            for g, e in rel:
                if g not in self.generators:
                    raise HopfForgeError(f"relator uses unknown generator {g!r}")
                if e == 0:
                    raise HopfForgeError("relator exponents must be nonzero")


def inverse_name(gen: str) -> str:
    return f"{gen}_inv"


def _relator_word(rel: Relator) -> Word:
    word: list[str] = []
    for g, e in rel:
        letter = g if e > 0 else inverse_name(g)
        word.extend([letter] * abs(e))
    return tuple(word)


def _grouplike_tables(alg: FreeAlgebra):
    delta = {g: alg.gen(g).tensor(alg.gen(g)) for g in alg.generators}
    counit = {g: alg.field.one for g in alg.generators}
    return delta, counit


def group_algebra(
    group: GroupPresentation, field: Field = QQ, degree_bound: int | None = None
) -> HopfPresentation:
    """Hopf presentation of k[G]: grouplike generators, antipode = inversion."""
    alphabet: list[str] = []
    for g in group.generators:
        alphabet.extend([g, inverse_name(g)])
    alg = FreeAlgebra(alphabet, field)
    one = alg.one()
    relations: list[FreePoly] = []
    for g in group.generators:
        gi = inverse_name(g)
        relations.append(alg.word(g, gi) - one)
        relations.append(alg.word(gi, g) - one)
    for rel in group.relators:
        relations.append(alg.poly({_relator_word(rel): alg.field.one}) - one)
    delta, counit = _grouplike_tables(alg)
    antipode: dict[str, FreePoly] = {}
    for g in group.generators:
        antipode[g] = alg.gen(inverse_name(g))
        antipode[inverse_name(g)] = alg.gen(g)
    return HopfPresentation.build(alg, relations, delta, counit, antipode, degree_bound)


def monoid_bialgebra(
    generators: Sequence[str],
    relations: Sequence[tuple[Word, Word]] = (),
    field: Field = QQ,
    degree_bound: int | None = None,
) -> HopfPresentation:
    """Bialgebra of a presented monoid: grouplike generators, no antipode."""
    alg = FreeAlgebra(generators, field)
    polys = [
        alg.poly({tuple(lhs): alg.field.one}) - alg.poly({tuple(rhs): alg.field.one})
        for lhs, rhs in relations
    ]
    delta, counit = _grouplike_tables(alg)
    return HopfPresentation.build(alg, polys, delta, counit, None, degree_bound)


def sweedler_h4(field: Field = QQ, degree_bound: int | None = None) -> HopfPresentation:
    """Sweedler's 4-dimensional Hopf algebra: g grouplike, x (1, g)-primitive."""
    if field.char == 2:
        raise CharacteristicError("the 4-dimensional Sweedler algebra needs characteristic != 2")
    alg = FreeAlgebra(["g", "x"], field)
    relations = [
        alg.parse("g*g - 1"),
        alg.parse("x*x"),
        alg.parse("x*g + g*x"),
    ]
    delta: dict[str, TensorPoly] = {
        "g": alg.parse_tensor("g (#) g"),
        "x": alg.parse_tensor("x (#) 1 + g (#) x"),
    }
    counit: dict[str, Scalar] = {"g": field.one, "x": field.zero}
    antipode: dict[str, FreePoly] = {"g": alg.parse("g"), "x": alg.parse("-g*x")}
    return HopfPresentation.build(alg, relations, delta, counit, antipode, degree_bound)


def primitive_element_bialgebra(field: Field = QQ, degree_bound: int | None = None) -> HopfPresentation:
    """Free bialgebra on one primitive element; infinite dimensional."""
    alg = FreeAlgebra(["x"], field)
    delta = {"x": alg.parse_tensor("x (#) 1 + 1 (#) x")}
    counit = {"x": field.zero}
    return HopfPresentation.build(alg, [], delta, counit, None, degree_bound)


def cyclic_group_algebra(n: int, gen: str = "g", field: Field = QQ,
                         degree_bound: int | None = None) -> HopfPresentation:
    if n < 1:
        raise HopfForgeError("cyclic order must be positive")
    return group_algebra(GroupPresentation((gen,), (((gen, n),),)), field, degree_bound)


def integers_group_algebra(gen: str = "t", field: Field = QQ,
                           degree_bound: int | None = None) -> HopfPresentation:
    """Group algebra of Z, i.e. Laurent polynomials as a Hopf algebra."""
    return group_algebra(GroupPresentation((gen,)), field, degree_bound)


def idempotent_monoid_bialgebra(field: Field = QQ, degree_bound: int | None = None) -> HopfPresentation:
    """k{1, e} with e^2 = e; a bialgebra with no antipode."""
    return monoid_bialgebra(["e"], [((("e", "e")), ("e",))], field, degree_bound)


def trivial_group_algebra(field: Field = QQ) -> HopfPresentation:
    return group_algebra(GroupPresentation(()), field)


def builtin_examples() -> dict[str, "_ExampleFactory"]:
    return dict(_EXAMPLES)


def make_example(name: str, field: Field = QQ, degree_bound: int | None = None) -> HopfPresentation:
    try:
        factory = _EXAMPLES[name]
    except KeyError:
        known = ", ".join(sorted(_EXAMPLES))
        raise HopfForgeError(f"unknown example {name!r}; available: {known}") from None
    return factory(field, degree_bound)


_ExampleFactory = object

_EXAMPLES = {
    "z2": lambda f, d: cyclic_group_algebra(2, "g", f, d),
    "z3": lambda f, d: cyclic_group_algebra(3, "g", f, d),
    "z4": lambda f, d: cyclic_group_algebra(4, "g", f, d),
    "z": lambda f, d: integers_group_algebra("t", f, d),
    "trivial": lambda f, d: trivial_group_algebra(f),
    "sweedler": lambda f, d: sweedler_h4(f, d),
    "grouplike-x": lambda f, d: monoid_bialgebra(["x"], [], f, d),
    "free-monoid-xy": lambda f, d: monoid_bialgebra(["x", "y"], [], f, d),
    "idempotent": lambda f, d: idempotent_monoid_bialgebra(f, d),
    "primitive-x": lambda f, d: primitive_element_bialgebra(f, d),
}
