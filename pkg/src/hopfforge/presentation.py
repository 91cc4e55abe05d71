"""Finitely presented bialgebras and Hopf algebras.

A presentation bundles an alphabet, relations, the comultiplication and
counit tables on generators and (for Hopf presentations) the antipode
table, together with a completed rewrite system for the relation ideal.
``validate`` checks the (co)algebra axioms at generator level and the
ideal/coideal/antipode-stability conditions per relation, all modulo the
rewrite system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import (
    FreeAlgebra,
    FreePoly,
    GenMap,
    TensorPoly,
    Word,
    apply_scalar_table,
    apply_tensor_table,
)
from .errors import AlgebraMismatchError, DegreeOverflowError, HopfForgeError
from .fields import Scalar
from .report import ValidationReport
from .rewrite import RewriteSystem, basis_up_to_degree, complete, normal_form, tensor_normal_form

DEFAULT_EXTRA_DEGREE = 4


def default_degree_bound(
    relations: Sequence[FreePoly],
    delta: Mapping[str, TensorPoly],
    antipode: Mapping[str, FreePoly] | None,
) -> int:
    """2 * (max degree appearing in the data) + 4; covers the bundled examples."""
    degrees = [r.degree() for r in relations]
    degrees += [t.degree() for t in delta.values()]
    if antipode:
        degrees += [p.degree() for p in antipode.values()]
    return 2 * max(degrees, default=1) + DEFAULT_EXTRA_DEGREE


@dataclass(frozen=True)
class HopfPresentation:
    """A bialgebra presentation; with an antipode table, a Hopf presentation."""

    algebra: FreeAlgebra
    relations: tuple[FreePoly, ...]
    delta: Mapping[str, TensorPoly]
    counit: Mapping[str, Scalar]
    antipode: Mapping[str, FreePoly] | None
    degree_bound: int
    rewrite: RewriteSystem

    @staticmethod
    def build(
        algebra: FreeAlgebra,
        relations: Sequence[FreePoly],
        delta: Mapping[str, TensorPoly],
        counit: Mapping[str, Scalar],
        antipode: Mapping[str, FreePoly] | None = None,
        degree_bound: int | None = None,
    ) -> "HopfPresentation":
        gens = set(algebra.generators)
        for label, table in (("delta", delta), ("counit", counit)):
            if set(table) != gens:
                raise HopfForgeError(f"{label} table must cover the alphabet exactly")
        if antipode is not None and set(antipode) != gens:
            raise HopfForgeError("antipode table must cover the alphabet exactly")
        if degree_bound is None:
            degree_bound = default_degree_bound(relations, delta, antipode)
        system = complete(algebra, list(relations), degree_bound)
        return HopfPresentation(
            algebra,
            tuple(relations),
            dict(delta),
            dict(counit),
            dict(antipode) if antipode is not None else None,
            degree_bound,
            system,
        )

    @property
    def is_hopf(self) -> bool:
        return self.antipode is not None

    # -- extensions of the generator tables, always followed by normal forms

    def nf(self, p: FreePoly) -> FreePoly:
        return normal_form(p, self.rewrite)

    def tensor_nf(self, t: TensorPoly) -> TensorPoly:
        return tensor_normal_form(t, self.rewrite)

    def delta_of(self, p: FreePoly) -> TensorPoly:
        return self.tensor_nf(apply_tensor_table(self.delta, p))

    def eps_of(self, p: FreePoly) -> Scalar:
        return apply_scalar_table(self.counit, p)

    def antipode_map(self) -> GenMap:
        if self.antipode is None:
            raise HopfForgeError("presentation has no antipode table")
        return GenMap(self.algebra, self.algebra, self.antipode, anti=True)

    def s_of(self, p: FreePoly) -> FreePoly:
        return self.nf(self.antipode_map()(p))

    def basis(self, degree: int) -> list[Word]:
        return basis_up_to_degree(self.rewrite, degree)

    # -- axioms

    def antipode_axiom_check(self, p: FreePoly) -> bool:
        """Both convolution identities m(id (x) S)Delta = eta eps = m(S (x) id)Delta on p."""
        if self.antipode is None:
            raise HopfForgeError("presentation has no antipode table")
        if 2 * p.degree() > self.degree_bound:
            raise DegreeOverflowError(2 * p.degree(), self.degree_bound)
        smap = self.antipode_map()
        dp = self.delta_of(p)
        alg = self.algebra
        want = alg.one().scale(self.eps_of(p))
        left = alg.zero()
        right = alg.zero()
        for (u, v), c in dp.terms.items():
            pu = alg.poly({u: alg.field.one})
            pv = alg.poly({v: alg.field.one})
            left = left + (pu * smap(pv)).scale(c)
            right = right + (smap(pu) * pv).scale(c)
        return self.nf(left - want).is_zero() and self.nf(right - want).is_zero()

    def grouplikes(self, degree: int) -> list[Word]:
        """Monomial grouplikes: basis words w with Delta(w) = w (x) w, eps(w) = 1."""
        if 2 * degree > self.degree_bound:
            raise DegreeOverflowError(2 * degree, self.degree_bound)
        alg = self.algebra
        out = []
        for w in self.basis(degree):
            p = alg.poly({w: alg.field.one})
            if self.eps_of(p) != alg.field.one:
                continue
            if (self.delta_of(p) - p.tensor(p)).is_zero():
                out.append(w)
        return out

    def random_normal_words(self, degree: int, count: int, seed: int = 0) -> list[Word]:
        """Deterministic sample (with replacement) from the normal-word basis."""
        words = self.basis(degree)
        rng = random.Random(seed)
        return [words[rng.randrange(len(words))] for _ in range(count)]


def validate(pres: HopfPresentation) -> ValidationReport:
    """Generator-level bialgebra/Hopf checks plus per-relation ideal conditions.

    Coassociativity, counit and the antipode identity are checked on every
    generator; every relation is checked to span a coideal (and to be killed
    by the antipode when one is present), all modulo the rewrite system.
    """
    report = ValidationReport()
    if not pres.rewrite.fully_confluent:
        report.verified_up_to = pres.degree_bound
    alg = pres.algebra
    f = alg.field
    try:
        for g in alg.generators:
            pg = alg.gen(g)
            dg = pres.delta_of(pg)

            # (a) coassociativity: (Delta (x) id) Delta(g) = (id (x) Delta) Delta(g),
            # compared term by term as triples of normal words
            left: dict[tuple[Word, Word, Word], Scalar] = {}
            right: dict[tuple[Word, Word, Word], Scalar] = {}
            for (u, v), c in dg.terms.items():
                du = pres.delta_of(alg.poly({u: f.one}))
                for (a, b), k in du.terms.items():
                    key = (a, b, v)
                    s = f.add(left.get(key, f.zero), f.mul(c, k))
                    if s:
                        left[key] = s
                    else:
                        left.pop(key, None)
                dv = pres.delta_of(alg.poly({v: f.one}))
                for (a, b), k in dv.terms.items():
                    key = (u, a, b)
                    s = f.add(right.get(key, f.zero), f.mul(c, k))
                    if s:
                        right[key] = s
                    else:
                        right.pop(key, None)
            report.add(f"coassoc:{g}", left == right)

            # (b) counit: (eps (x) id) Delta(g) = g = (id (x) eps) Delta(g)
            lft = alg.zero()
            rgt = alg.zero()
            for (u, v), c in dg.terms.items():
                lft = lft + alg.poly({v: f.mul(c, pres.eps_of(alg.poly({u: f.one})))})
                rgt = rgt + alg.poly({u: f.mul(c, pres.eps_of(alg.poly({v: f.one})))})
            target = pres.nf(pg)
            report.add(f"counit:{g}", pres.nf(lft) == target and pres.nf(rgt) == target)

            # (d) antipode identity on the generator
            if pres.is_hopf:
                report.add(f"antipode:{g}", pres.antipode_axiom_check(pg))

        # (c) relation ideal is a coideal (and antipode-stable in the Hopf case)
        for i, r in enumerate(pres.relations, start=1):
            report.add(f"relation-nf:{i}", pres.nf(r).is_zero())
            report.add(f"coideal-delta:{i}", pres.delta_of(r).is_zero())
            report.add(f"coideal-counit:{i}", pres.eps_of(r) == f.zero)
            if pres.is_hopf:
                report.add(f"hopf-ideal:{i}", pres.s_of(r).is_zero())
    except DegreeOverflowError as e:
        raise DegreeOverflowError(e.required, pres.degree_bound) from None
    return report


@dataclass(frozen=True)
class HopfMap:
    """Map of presentations determined by generator images in the target."""

    source: HopfPresentation
    target: HopfPresentation
    images: Mapping[str, FreePoly]

    def genmap(self) -> GenMap:
        return GenMap(self.source.algebra, self.target.algebra, self.images)

    def __call__(self, p: FreePoly) -> FreePoly:
        return self.target.nf(self.genmap()(p))

    @staticmethod
    def identity(pres: HopfPresentation) -> "HopfMap":
        return HopfMap(pres, pres, {g: pres.algebra.gen(g) for g in pres.algebra.generators})


def hopf_map_report(m: HopfMap) -> ValidationReport:
    """Per-condition breakdown behind check_hopf_map."""
    report = ValidationReport()
    src, tgt = m.source, m.target
    if src.algebra.field != tgt.algebra.field:
        raise AlgebraMismatchError("source and target live over different fields")
    phi = m.genmap()
    for i, r in enumerate(src.relations, start=1):
        report.add(f"map-relation:{i}", tgt.nf(phi(r)).is_zero())
    for g in src.algebra.generators:
        img = phi(src.algebra.gen(g))
        lhs = tgt.delta_of(img)
        rhs = tgt.tensor_nf(phi.apply_tensor(src.delta[g]))
        report.add(f"map-delta:{g}", lhs == rhs)
        report.add(f"map-counit:{g}", tgt.eps_of(img) == src.counit[g])
        if src.is_hopf and tgt.is_hopf:
            report.add(f"map-antipode:{g}", tgt.s_of(img) == tgt.nf(phi(src.antipode[g])))
    return report


def check_hopf_map(m: HopfMap) -> bool:
    """True iff the generator images define a bialgebra (resp. Hopf) map."""
    return hopf_map_report(m).ok
