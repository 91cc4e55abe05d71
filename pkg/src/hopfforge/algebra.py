"""Free (tensor) algebra arithmetic over an exact field.

Words are tuples of generator names, the empty word being the unit.  A
``FreePoly`` is a finite map from words to nonzero scalars; a ``TensorPoly``
is the analogue over pairs of words and carries comultiplication values.
All values are immutable after construction and all operations are pure.

Term maps are kept in canonical form (no zero coefficients) and iterated in
degree-lexicographic order, so printing is deterministic.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import AlgebraMismatchError, UnknownGeneratorError
from .fields import Field, QQ, Scalar

Word = tuple[str, ...]
EMPTY_WORD: Word = ()


class FreeAlgebra:
    """A free associative algebra on an ordered finite alphabet.

    The declared generator order induces the degree-lexicographic word
    order used everywhere (normal forms, printing, rule orientation).
    """

    def __init__(self, generators: Sequence[str], field: Field = QQ):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise AlgebraMismatchError(f"duplicate generator in {gens}")
        self.generators = gens
        self.field = field
        self._index = {g: i for i, g in enumerate(gens)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeAlgebra)
            and self.generators == other.generators
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.generators, self.field))

    def __repr__(self) -> str:
        return f"FreeAlgebra({list(self.generators)}, {self.field})"

    def word_key(self, w: Word):
        """Degree-lexicographic sort key; lex by declared order within a degree."""
        try:
            return (len(w), tuple(self._index[g] for g in w))
        except KeyError as e:
            raise UnknownGeneratorError(f"unknown generator {e.args[0]!r}") from None

    def check_word(self, w: Word) -> None:
        for g in w:
            if g not in self._index:
                raise UnknownGeneratorError(f"unknown generator {g!r}")

    def poly(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]]) -> FreePoly:
        """Build a polynomial, merging duplicate words and dropping zeros."""
        acc: dict[Word, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            self.check_word(w)
            s = self.field.add(acc.get(w, self.field.zero), c)
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return FreePoly(self, acc)

    def tensor_poly(
        self, terms: Mapping[tuple[Word, Word], Scalar] | Iterable[tuple[tuple[Word, Word], Scalar]]
    ) -> TensorPoly:
        acc: dict[tuple[Word, Word], Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (u, v), c in items:
            self.check_word(u)
            self.check_word(v)
            s = self.field.add(acc.get((u, v), self.field.zero), c)
            if s:
                acc[(u, v)] = s
            else:
                acc.pop((u, v), None)
        return TensorPoly(self, acc)

    def gen(self, name: str) -> FreePoly:
        if name not in self._index:
            raise UnknownGeneratorError(f"unknown generator {name!r}")
        return FreePoly(self, {(name,): self.field.one})

    def word(self, *names: str) -> FreePoly:
        self.check_word(names)
        return FreePoly(self, {tuple(names): self.field.one})

    def one(self) -> FreePoly:
        return FreePoly(self, {EMPTY_WORD: self.field.one})

    def zero(self) -> FreePoly:
        return FreePoly(self, {})

    def tensor_one(self) -> TensorPoly:
        return TensorPoly(self, {(EMPTY_WORD, EMPTY_WORD): self.field.one})

    def parse(self, text: str) -> FreePoly:
        from .parsing import parse_poly

        return parse_poly(text, self)

    def parse_tensor(self, text: str) -> TensorPoly:
        from .parsing import parse_tensor

        return parse_tensor(text, self)


def _check_same(a: FreeAlgebra, b: FreeAlgebra) -> None:
    if a != b:
        raise AlgebraMismatchError(f"mixing elements of {a!r} and {b!r}")


class FreePoly:
    """Element of the free algebra; canonical map word -> nonzero scalar."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: dict[Word, Scalar]):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, w: Word) -> Scalar:
        return self.terms.get(w, self.algebra.field.zero)

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: self.algebra.word_key(t[0]))

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=self.algebra.word_key)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreePoly)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self.terms.items())))

    def __add__(self, other: FreePoly) -> FreePoly:
        _check_same(self.algebra, other.algebra)
        f = self.algebra.field
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = f.add(acc.get(w, f.zero), c)
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return FreePoly(self.algebra, acc)

    def __neg__(self) -> FreePoly:
        f = self.algebra.field
        return FreePoly(self.algebra, {w: f.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: FreePoly) -> FreePoly:
        return self + (-other)

    def scale(self, c: Scalar) -> FreePoly:
        f = self.algebra.field
        if not c:
            return self.algebra.zero()
        return FreePoly(self.algebra, {w: f.mul(c, k) for w, k in self.terms.items()})

    def __mul__(self, other: FreePoly) -> FreePoly:
        """Noncommutative product: concatenation on words, bilinear on sums."""
        _check_same(self.algebra, other.algebra)
        f = self.algebra.field
        acc: dict[Word, Scalar] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = f.add(acc.get(w, f.zero), f.mul(a, b))
                if s:
                    acc[w] = s
                else:
                    acc.pop(w, None)
        return FreePoly(self.algebra, acc)

    def tensor(self, other: FreePoly) -> TensorPoly:
        _check_same(self.algebra, other.algebra)
        f = self.algebra.field
        acc: dict[tuple[Word, Word], Scalar] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                s = f.add(acc.get((u, v), f.zero), f.mul(a, b))
                if s:
                    acc[(u, v)] = s
                else:
                    acc.pop((u, v), None)
        return TensorPoly(self.algebra, acc)

    def __str__(self) -> str:
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"<FreePoly {self}>"


class TensorPoly:
    """Element of T(V) (x) T(V); canonical map (word, word) -> nonzero scalar."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: dict[tuple[Word, Word], Scalar]):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal component word length; -1 for zero."""
        return max((max(len(u), len(v)) for u, v in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[Word, Word], Scalar]]:
        key = self.algebra.word_key
        return sorted(self.terms.items(), key=lambda t: (key(t[0][0]), key(t[0][1])))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorPoly)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self.terms.items())))

    def __add__(self, other: TensorPoly) -> TensorPoly:
        _check_same(self.algebra, other.algebra)
        f = self.algebra.field
        acc = dict(self.terms)
        for k, c in other.terms.items():
            s = f.add(acc.get(k, f.zero), c)
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return TensorPoly(self.algebra, acc)

    def __neg__(self) -> TensorPoly:
        f = self.algebra.field
        return TensorPoly(self.algebra, {k: f.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: TensorPoly) -> TensorPoly:
        return self + (-other)

    def scale(self, c: Scalar) -> TensorPoly:
        f = self.algebra.field
        if not c:
            return TensorPoly(self.algebra, {})
        return TensorPoly(self.algebra, {k: f.mul(c, v) for k, v in self.terms.items()})

    def __mul__(self, other: TensorPoly) -> TensorPoly:
        """Componentwise product: (a (x) b)(c (x) d) = ac (x) bd, bilinearly."""
        _check_same(self.algebra, other.algebra)
        f = self.algebra.field
        acc: dict[tuple[Word, Word], Scalar] = {}
        for (u1, v1), a in self.terms.items():
            for (u2, v2), b in other.terms.items():
                k = (u1 + u2, v1 + v2)
                s = f.add(acc.get(k, f.zero), f.mul(a, b))
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return TensorPoly(self.algebra, acc)

    def swap(self) -> TensorPoly:
        """Flip the two tensor legs."""
        acc: dict[tuple[Word, Word], Scalar] = {}
        f = self.algebra.field
        for (u, v), c in self.terms.items():
            k = (v, u)
            s = f.add(acc.get(k, f.zero), c)
            if s:
                acc[k] = s
        return TensorPoly(self.algebra, acc)

    def __str__(self) -> str:
        from .parsing import format_tensor

        return format_tensor(self)

    def __repr__(self) -> str:
        return f"<TensorPoly {self}>"


class GenMap:
    """Algebra map determined by generator images.

    In homomorphic mode the extension satisfies phi(uv) = phi(u)phi(v);
    in anti-homomorphic mode phi(uv) = phi(v)phi(u).  Both send 1 to 1.
    Anti mode is how antipodes extend (maps into the op-coop structure).
    """

    def __init__(
        self,
        source: FreeAlgebra,
        target: FreeAlgebra,
        images: Mapping[str, FreePoly],
        anti: bool = False,
    ):
        missing = set(source.generators) - set(images)
        extra = set(images) - set(source.generators)
        if missing or extra:
            raise UnknownGeneratorError(
                f"generator map must cover the source alphabet exactly "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )
        for g, img in images.items():
            if img.algebra != target:
                raise AlgebraMismatchError(f"image of {g!r} lives in the wrong algebra")
        self.source = source
        self.target = target
        self.images = dict(images)
        self.anti = anti

    def __call__(self, p: FreePoly) -> FreePoly:
        if p.algebra != self.source:
            raise AlgebraMismatchError("polynomial is not over the map's source algebra")
        out = self.target.zero()
        for w, c in p.terms.items():
            img = self.target.one()
            letters = reversed(w) if self.anti else w
            for g in letters:
                img = img * self.images[g]
            out = out + img.scale(c)
        return out

    def apply_tensor(self, t: TensorPoly) -> TensorPoly:
        """Apply the map to both legs: (phi (x) phi)(t)."""
        if t.algebra != self.source:
            raise AlgebraMismatchError("tensor element is not over the map's source algebra")
        out = TensorPoly(self.target, {})
        for (u, v), c in t.terms.items():
            left = self(self.source.poly({u: self.source.field.one}))
            right = self(self.source.poly({v: self.source.field.one}))
            out = out + left.tensor(right).scale(c)
        return out

    def compose(self, inner: GenMap) -> GenMap:
        """self after inner, as a single generator table.

        Mode composition: anti after anti is homomorphic.
        """
        if inner.target != self.source:
            raise AlgebraMismatchError("composition mismatch")
        images = {g: self(inner.images[g]) for g in inner.source.generators}
        return GenMap(inner.source, self.target, images, anti=self.anti != inner.anti)

    @staticmethod
    def identity(algebra: FreeAlgebra) -> GenMap:
        return GenMap(algebra, algebra, {g: algebra.gen(g) for g in algebra.generators})


def apply_tensor_table(table: Mapping[str, TensorPoly], p: FreePoly) -> TensorPoly:
    """Multiplicative extension of a generator -> TensorPoly table.

    This is how a comultiplication defined on generators extends to the
    whole algebra: Delta(g1...gn) = Delta(g1) * ... * Delta(gn), linearly
    over sums, with Delta(1) = 1 (x) 1.
    """
    alg = p.algebra
    for g in alg.generators:
        if g not in table:
            raise UnknownGeneratorError(f"no comultiplication entry for generator {g!r}")
    out = TensorPoly(alg, {})
    for w, c in p.terms.items():
        val = alg.tensor_one()
        for g in w:
            val = val * table[g]
        out = out + val.scale(c)
    return out


def apply_scalar_table(table: Mapping[str, Scalar], p: FreePoly) -> Scalar:
    """Multiplicative extension of a generator -> scalar table (a counit)."""
    f = p.algebra.field
    total = f.zero
    for w, c in p.terms.items():
        val = f.one
        for g in w:
            if g not in table:
                raise UnknownGeneratorError(f"no counit entry for generator {g!r}")
            val = f.mul(val, table[g])
        total = f.add(total, f.mul(c, val))
    return total
