"""Colimits of finitely presented bialgebras and Hopf algebras.

Coequalizers quotient the target by the ideal of generator-image
differences; coproducts glue the factor presentations on a disjoint
alphabet.  Both come with their universal-property factorization.

The coequalizer ideal generated by {f(b) - g(b), b a generator} equals the
ideal of all pointwise differences: f(xy) - g(xy) =
f(x)(f(y) - g(y)) + (f(x) - g(x))g(y), so generator differences suffice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FreeAlgebra, FreePoly, GenMap, TensorPoly
from .errors import AlgebraMismatchError, HopfForgeError
from .fields import Scalar
from .presentation import HopfMap, HopfPresentation

COLIMIT_EXTRA_DEGREE = 2


@dataclass(frozen=True)
class CoproductLabeling:
    """Renamings of factor generators into the coproduct alphabet, with the
    induced inclusion maps (the coproduct's structure maps)."""

    renamings: tuple[dict[str, str], ...]
    inclusions: tuple[HopfMap, ...]


@dataclass(frozen=True)
class Coproduct:
    presentation: HopfPresentation
    labeling: CoproductLabeling


@dataclass(frozen=True)
class Coequalizer:
    presentation: HopfPresentation
    projection: HopfMap
    pair: tuple[HopfMap, HopfMap]


def _coproduct_renamings(factors: list[HopfPresentation]) -> tuple[dict[str, str], ...]:
    all_gens = [g for f in factors for g in f.algebra.generators]
    if len(set(all_gens)) == len(all_gens):
        return tuple({g: g for g in f.algebra.generators} for f in factors)
    return tuple(
        {g: f"{g}@{l}" for g in f.algebra.generators} for l, f in enumerate(factors, start=1)
    )


def coproduct(
    factors: list[HopfPresentation], degree_bound: int | None = None
) -> Coproduct:
    """Coproduct of a finite family of bialgebra/Hopf presentations.

    The alphabet is the disjoint union of the factor alphabets and the
    relation set the union of the renamed factor relations; the
    comultiplication, counit and antipode tables are the renamed factor
    tables (the antipode extending anti-multiplicatively).  The result is
    Hopf iff every factor is.
    """
    if not factors:
        raise HopfForgeError("coproduct needs at least one factor")
    field = factors[0].algebra.field
    for f in factors[1:]:
        if f.algebra.field != field:
            raise AlgebraMismatchError("coproduct factors must share the base field")
    renamings = _coproduct_renamings(factors)
    alphabet = [renamings[l][g] for l, f in enumerate(factors) for g in f.algebra.generators]
    alg = FreeAlgebra(alphabet, field)

    relations: list[FreePoly] = []
    delta: dict[str, TensorPoly] = {}
    counit: dict[str, Scalar] = {}
    hopf = all(f.is_hopf for f in factors)
    antipode: dict[str, FreePoly] | None = {} if hopf else None
    for l, f in enumerate(factors):
        rename = GenMap(f.algebra, alg, {g: alg.gen(renamings[l][g]) for g in f.algebra.generators})
        for r in f.relations:
            relations.append(rename(r))
        for g in f.algebra.generators:
            delta[renamings[l][g]] = rename.apply_tensor(f.delta[g])
            counit[renamings[l][g]] = f.counit[g]
            if hopf:
                antipode[renamings[l][g]] = rename(f.antipode[g])

    if degree_bound is None:
        degree_bound = max(f.degree_bound for f in factors) + COLIMIT_EXTRA_DEGREE
    pres = HopfPresentation.build(alg, relations, delta, counit, antipode, degree_bound)
    inclusions = tuple(
        HopfMap(f, pres, {g: alg.gen(renamings[l][g]) for g in f.algebra.generators})
        for l, f in enumerate(factors)
    )
    return Coproduct(pres, CoproductLabeling(renamings, inclusions))


def coequalizer(f: HopfMap, g: HopfMap, degree_bound: int | None = None) -> Coequalizer:
    """Quotient of the common target by the ideal of generator differences."""
    if f.source is not g.source and f.source != g.source:
        raise AlgebraMismatchError("coequalized maps must share their source")
    if f.target is not g.target and f.target != g.target:
        raise AlgebraMismatchError("coequalized maps must share their target")
    target = f.target
    diffs = [
        f.images[b] - g.images[b]
        for b in f.source.algebra.generators
    ]
    relations = list(target.relations) + [d for d in diffs if not d.is_zero()]
    if degree_bound is None:
        degree_bound = max(target.degree_bound, f.source.degree_bound) + COLIMIT_EXTRA_DEGREE
    pres = HopfPresentation.build(
        target.algebra, relations, target.delta, target.counit, target.antipode, degree_bound
    )
    projection = HopfMap(target, pres, {g_: target.algebra.gen(g_) for g_ in target.algebra.generators})
    return Coequalizer(pres, projection, (f, g))


def induced_from_coeq(h: HopfMap, coeq: Coequalizer) -> HopfMap:
    """The unique map from the quotient with h' after the projection equal to h.

    Requires h to equalize the coequalized pair on every source generator.
    """
    f, g = coeq.pair
    if h.source != f.target:
        raise AlgebraMismatchError("h must be defined on the coequalizer's target algebra")
    for b in f.source.algebra.generators:
        if h.target.nf(h(f.images[b]) - h(g.images[b])) != h.target.algebra.zero():
            raise HopfForgeError(
                f"map does not equalize the pair: images of generator {b!r} differ"
            )
    return HopfMap(coeq.presentation, h.target, dict(h.images))


def induced_from_cocone(maps: list[HopfMap], labeling: CoproductLabeling) -> HopfMap:
    """The unique map out of the coproduct restricting to each cocone leg."""
    if len(maps) != len(labeling.inclusions):
        raise HopfForgeError("one cocone map per coproduct factor is required")
    target = maps[0].target
    for m in maps[1:]:
        if m.target != target:
            raise AlgebraMismatchError("cocone maps must share their target")
    images: dict[str, FreePoly] = {}
    for l, m in enumerate(maps):
        incl = labeling.inclusions[l]
        if m.source != incl.source:
            raise AlgebraMismatchError(f"cocone map {l} is not defined on factor {l}")
        for g, renamed in labeling.renamings[l].items():
            images[renamed] = m.images[g]
    source = labeling.inclusions[0].target
    return HopfMap(source, target, images)
