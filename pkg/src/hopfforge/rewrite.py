"""Degree-truncated completion for two-sided ideals of the free algebra.

A rewrite system holds monic, inter-reduced rules ``leading word -> tail``
oriented by the degree-lexicographic order.  ``complete`` resolves all
overlap ambiguities whose overlap word stays within the degree bound; the
resulting normal forms are canonical representatives of the quotient, and
the status records whether any overlap had to be deferred.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebra import FreeAlgebra, FreePoly, TensorPoly, Word
from .errors import DegreeOverflowError, HopfForgeError


@dataclass(frozen=True)
class Rule:
    lead: Word
    tail: FreePoly

    def poly(self) -> FreePoly:
        """The monic ideal element lead - tail."""
        alg = self.tail.algebra
        return alg.poly({self.lead: alg.field.one}) - self.tail


class RewriteSystem:
    """Immutable reduction system for a two-sided ideal, valid up to degree D."""

    def __init__(
        self,
        algebra: FreeAlgebra,
        rules: tuple[Rule, ...],
        degree_bound: int,
        fully_confluent: bool,
    ):
        self.algebra = algebra
        self.rules = rules
        self.degree_bound = degree_bound
        self.fully_confluent = fully_confluent

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RewriteSystem):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.rules == other.rules
            and self.degree_bound == other.degree_bound
            and self.fully_confluent == other.fully_confluent
        )

    def __hash__(self):
        return hash((self.algebra, self.rules, self.degree_bound, self.fully_confluent))

    @property
    def status(self) -> str:
        return "full" if self.fully_confluent else f"up-to-degree {self.degree_bound}"

    def __repr__(self) -> str:
        return f"<RewriteSystem {len(self.rules)} rules, confluent: {self.status}>"

    def dump(self) -> str:
        lines = [f"{'*'.join(r.lead) or '1'} => {r.tail}" for r in self.rules]
        lines.append(f"confluent: {self.status}")
        return "\n".join(lines)


class Membership(Enum):
    YES = "yes"
    NO_UP_TO_D = "no-up-to-degree"


@dataclass(frozen=True)
class MembershipResult:
    verdict: Membership
    definitive: bool  # a No is only definitive when the system is fully confluent


def _make_rule(p: FreePoly) -> Rule:
    lead = p.leading_word()
    f = p.algebra.field
    inv = f.inv(p.terms[lead])
    monic = p.scale(inv)
    tail = p.algebra.poly({lead: f.one}) - monic
    return Rule(lead, tail)


def _find_reduction(word: Word, rules: list[Rule] | tuple[Rule, ...]):
    """Leftmost occurrence of any rule lead; smallest rule index breaks ties."""
    best = None
    for pos in range(len(word)):
        for idx, rule in enumerate(rules):
            n = len(rule.lead)
            if word[pos : pos + n] == rule.lead:
                return pos, idx
    return best


def _reduce(p: FreePoly, rules: list[Rule] | tuple[Rule, ...]) -> FreePoly:
    alg = p.algebra
    out = alg.zero()
    work = p
    while not work.is_zero():
        # pick the largest remaining word so progress is monotone in deglex
        w = work.leading_word()
        c = work.terms[w]
        hit = _find_reduction(w, rules)
        term = alg.poly({w: c})
        if hit is None:
            out = out + term
            work = work - term
        else:
            pos, idx = hit
            rule = rules[idx]
            prefix = alg.poly({w[:pos]: alg.field.one})
            suffix = alg.poly({w[pos + len(rule.lead) :]: alg.field.one})
            work = work - term + (prefix * rule.tail * suffix).scale(c)
    return out


def _overlaps(u: Word, v: Word, same_rule: bool):
    """Ambiguities between leads u and v.

    Yields (word, a, b, c, d) with word = a u b = c v d.  Covers proper
    suffix/prefix overlaps and containments; the trivial u == v overlap of a
    rule with itself is skipped.
    """
    # suffix of u meets prefix of v
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            yield u + v[k:], (), v[k:], u[:-k], ()
    # v contained in u
    if len(v) < len(u) or (len(v) == len(u) and not same_rule):
        for pos in range(len(u) - len(v) + 1):
            if u[pos : pos + len(v)] == v:
                yield u, (), (), u[:pos], u[pos + len(v) :]


def _interreduce(rules: list[Rule]) -> list[Rule]:
    changed = True
    while changed:
        changed = False
        for i in range(len(rules)):
            others = rules[:i] + rules[i + 1 :]
            p = _reduce(rules[i].poly(), others)
            if p.is_zero():
                rules = others
                changed = True
                break
            new = _make_rule(p)
            if new != rules[i]:
                rules = others + [new]
                changed = True
                break
    alg = rules[0].tail.algebra if rules else None
    if alg is not None:
        rules.sort(key=lambda r: alg.word_key(r.lead))
    return rules


def complete(
    algebra: FreeAlgebra, relations: list[FreePoly], degree_bound: int
) -> RewriteSystem:
    """Run overlap completion on the given ideal generators up to degree_bound."""
    for r in relations:
        if r.is_zero():
            raise HopfForgeError("zero relation supplied")
        if r.degree() > degree_bound:
            raise DegreeOverflowError(r.degree(), degree_bound)

    rules: list[Rule] = []
    for r in relations:
        p = _reduce(r, rules)
        if not p.is_zero():
            rules.append(_make_rule(p))
            rules = _interreduce(rules)

    deferred = False
    while True:
        rules = _interreduce(rules)
        deferred = False
        new_polys: list[FreePoly] = []
        for i, ri in enumerate(rules):
            for j, rj in enumerate(rules):
                for word, a, b, c, d in _overlaps(ri.lead, rj.lead, same_rule=i == j):
                    if len(word) > degree_bound:
                        deferred = True
                        continue
                    alg = algebra
                    left = alg.poly({a: alg.field.one}) * ri.tail * alg.poly({b: alg.field.one})
                    right = alg.poly({c: alg.field.one}) * rj.tail * alg.poly({d: alg.field.one})
                    s = _reduce(left - right, rules)
                    if not s.is_zero():
                        new_polys.append(s)
        if not new_polys:
            break
        for p in new_polys:
            q = _reduce(p, rules)
            if not q.is_zero():
                rules.append(_make_rule(q))
    return RewriteSystem(algebra, tuple(rules), degree_bound, fully_confluent=not deferred)


def normal_form(p: FreePoly, system: RewriteSystem) -> FreePoly:
    """Canonical representative of p modulo the ideal, valid up to the bound."""
    if p.degree() > system.degree_bound:
        raise DegreeOverflowError(p.degree(), system.degree_bound)
    return _reduce(p, system.rules)


def tensor_normal_form(t: TensorPoly, system: RewriteSystem) -> TensorPoly:
    """Componentwise normal form; zero iff t lies in I(x)T + T(x)I up to the bound."""
    alg = t.algebra
    out = TensorPoly(alg, {})
    for (u, v), c in t.terms.items():
        if max(len(u), len(v)) > system.degree_bound:
            raise DegreeOverflowError(max(len(u), len(v)), system.degree_bound)
        left = _reduce(alg.poly({u: alg.field.one}), system.rules)
        right = _reduce(alg.poly({v: alg.field.one}), system.rules)
        out = out + left.tensor(right).scale(c)
    return out


def basis_up_to_degree(system: RewriteSystem, degree: int) -> list[Word]:
    """All irreducible words of length <= degree, in degree-lexicographic order."""
    if degree > system.degree_bound:
        raise DegreeOverflowError(degree, system.degree_bound)
    leads = [r.lead for r in system.rules]
    if () in leads:
        return []  # the ideal contains 1; the quotient is the zero ring

    def reducible_at_end(w: Word) -> bool:
        return any(w[-len(l) :] == l for l in leads if 0 < len(l) <= len(w))

    out: list[Word] = []
    frontier: list[Word] = [()]
    out.append(())
    for _ in range(degree):
        nxt: list[Word] = []
        for w in frontier:
            for g in system.algebra.generators:
                cand = w + (g,)
                if not reducible_at_end(cand):
                    nxt.append(cand)
        out.extend(nxt)
        frontier = nxt
    return out


def ideal_contains(p: FreePoly, system: RewriteSystem) -> MembershipResult:
    nf = normal_form(p, system)
    if nf.is_zero():
        return MembershipResult(Membership.YES, definitive=True)
    return MembershipResult(Membership.NO_UP_TO_D, definitive=system.fully_confluent)


def residual_overlaps(system: RewriteSystem) -> list[Word]:
    """Overlap words within the bound whose ambiguity does not resolve to 0.

    Empty for any system produced by ``complete``; exposed so soundness tests
    can re-verify confluence independently of the completion loop.
    """
    alg = system.algebra
    bad: list[Word] = []
    for i, ri in enumerate(system.rules):
        for j, rj in enumerate(system.rules):
            for word, a, b, c, d in _overlaps(ri.lead, rj.lead, same_rule=i == j):
                if len(word) > system.degree_bound:
                    continue
                left = alg.poly({a: alg.field.one}) * ri.tail * alg.poly({b: alg.field.one})
                right = alg.poly({c: alg.field.one}) * rj.tail * alg.poly({d: alg.field.one})
                if not _reduce(left - right, system.rules).is_zero():
                    bad.append(word)
    return bad
