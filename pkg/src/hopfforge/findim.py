"""Finite-dimensional structure-constant oracle.

A ``StructureTable`` pins a bialgebra to explicit multiplication and
comultiplication tensors in a fixed basis, so every axiom becomes an exact
tensor identity and antipode existence becomes an exact linear system (both
convolution identities are linear in the antipode matrix).  ``compile``
bridges from finitely presented objects; ``coreflection_probe`` searches
coordinate subspaces for the largest one that is a Hopf subbialgebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import HopfForgeError, NotFiniteDimensionalError
from .fields import Field, Scalar
from .presentation import HopfPresentation
from .report import ValidationReport

Vector = tuple[Scalar, ...]
Matrix = tuple[Vector, ...]


@dataclass(frozen=True)
class StructureTable:
    """Bialgebra structure constants over an exact field.

    e_i e_j = sum_k mul[i][j][k] e_k; Delta(e_i) = sum_{j,k} delta[i][j][k]
    e_j (x) e_k; 1 = sum_i unit[i] e_i.  The antipode matrix, when present,
    has S(e_j) = sum_i antipode[i][j] e_i.
    """

    field: Field
    dim: int
    mul: tuple[tuple[Vector, ...], ...]
    unit: Vector
    delta: tuple[Matrix, ...]
    counit: Vector
    antipode: Matrix | None = None
    labels: tuple[str, ...] | None = None  # display names for basis vectors

    def __post_init__(self):
        n = self.dim
        if (
            len(self.mul) != n
            or any(len(row) != n or any(len(v) != n for v in row) for row in self.mul)
            or len(self.unit) != n
            or len(self.delta) != n
            or any(len(m) != n or any(len(r) != n for r in m) for m in self.delta)
            or len(self.counit) != n
            or (self.antipode is not None and len(self.antipode) != n)
        ):
            raise HopfForgeError("structure tensors are dimensionally inconsistent")


def _vec_add(f: Field, a: Vector, b: Vector) -> Vector:
    return tuple(f.add(x, y) for x, y in zip(a, b))


def _vec_scale(f: Field, c: Scalar, a: Vector) -> Vector:
    return tuple(f.mul(c, x) for x in a)


def _zero_vec(f: Field, n: int) -> Vector:
    return tuple(f.zero for _ in range(n))


def _product(t: StructureTable, a: Vector, b: Vector) -> Vector:
    f = t.field
    out = _zero_vec(f, t.dim)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            out = _vec_add(f, out, _vec_scale(f, f.mul(ai, bj), t.mul[i][j]))
    return out


def check_bialgebra_axioms(t: StructureTable) -> ValidationReport:
    """Exact verification of all bialgebra axioms, reporting per axiom."""
    f = t.field
    n = t.dim
    report = ValidationReport()

    ok = True
    detail = ""
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (e_i e_j) e_k vs e_i (e_j e_k)
                lhs = _product(t, t.mul[i][j], _basis(f, n, k))
                rhs = _product(t, _basis(f, n, i), t.mul[j][k])
                if lhs != rhs:
                    ok, detail = False, f"({i},{j},{k})"
    report.add("associativity", ok, detail)

    ok = all(
        _product(t, t.unit, _basis(f, n, j)) == _basis(f, n, j)
        and _product(t, _basis(f, n, j), t.unit) == _basis(f, n, j)
        for j in range(n)
    )
    report.add("unit", ok)

    ok = True
    detail = ""
    for i in range(n):
        lhs: dict[tuple[int, int, int], Scalar] = {}
        rhs: dict[tuple[int, int, int], Scalar] = {}
        for j in range(n):
            for k in range(n):
                c = t.delta[i][j][k]
                if not c:
                    continue
                for a in range(n):
                    for b in range(n):
                        if t.delta[j][a][b]:
                            _acc(f, lhs, (a, b, k), f.mul(c, t.delta[j][a][b]))
                        if t.delta[k][a][b]:
                            _acc(f, rhs, (j, a, b), f.mul(c, t.delta[k][a][b]))
        if lhs != rhs:
            ok, detail = False, str(i)
    report.add("coassociativity", ok, detail)

    ok = True
    for i in range(n):
        left = _zero_vec(f, n)
        right = _zero_vec(f, n)
        for j in range(n):
            for k in range(n):
                c = t.delta[i][j][k]
                if not c:
                    continue
                left = _vec_add(f, left, _vec_scale(f, f.mul(c, t.counit[j]), _basis(f, n, k)))
                right = _vec_add(f, right, _vec_scale(f, f.mul(c, t.counit[k]), _basis(f, n, j)))
        if left != _basis(f, n, i) or right != _basis(f, n, i):
            ok = False
    report.add("counit", ok)

    # Delta(1) = 1 (x) 1 and eps(1) = 1
    want = {}
    for j, uj in enumerate(t.unit):
        for k, uk in enumerate(t.unit):
            if uj and uk:
                _acc(f, want, (j, k), f.mul(uj, uk))
    got = {}
    for i, ui in enumerate(t.unit):
        if not ui:
            continue
        for j in range(n):
            for k in range(n):
                if t.delta[i][j][k]:
                    _acc(f, got, (j, k), f.mul(ui, t.delta[i][j][k]))
    report.add("delta-unit", got == want)
    eps1 = f.zero
    for i, ui in enumerate(t.unit):
        eps1 = f.add(eps1, f.mul(ui, t.counit[i]))
    report.add("counit-unit", eps1 == f.one)

    ok = True
    detail = ""
    for i in range(n):
        for j in range(n):
            # Delta(e_i e_j) vs Delta(e_i) Delta(e_j)
            lhs: dict[tuple[int, int], Scalar] = {}
            for k, c in enumerate(t.mul[i][j]):
                if not c:
                    continue
                for a in range(n):
                    for b in range(n):
                        if t.delta[k][a][b]:
                            _acc(f, lhs, (a, b), f.mul(c, t.delta[k][a][b]))
            rhs: dict[tuple[int, int], Scalar] = {}
            for a in range(n):
                for b in range(n):
                    ci = t.delta[i][a][b]
                    if not ci:
                        continue
                    for c_ in range(n):
                        for d in range(n):
                            cj = t.delta[j][c_][d]
                            if not cj:
                                continue
                            prod_l = t.mul[a][c_]
                            prod_r = t.mul[b][d]
                            coeff = f.mul(ci, cj)
                            for p, cp in enumerate(prod_l):
                                if not cp:
                                    continue
                                for q, cq in enumerate(prod_r):
                                    if cq:
                                        _acc(f, rhs, (p, q), f.mul(coeff, f.mul(cp, cq)))
            if lhs != rhs:
                ok, detail = False, f"({i},{j})"
    report.add("delta-multiplicative", ok, detail)

    ok = True
    for i in range(n):
        for j in range(n):
            lhs = f.zero
            for k, c in enumerate(t.mul[i][j]):
                lhs = f.add(lhs, f.mul(c, t.counit[k]))
            if lhs != f.mul(t.counit[i], t.counit[j]):
                ok = False
    report.add("counit-multiplicative", ok)

    if t.antipode is not None:
        report.add("antipode-identity", antipode_satisfies_axiom(t, t.antipode))
    return report


def _basis(f: Field, n: int, i: int) -> Vector:
    return tuple(f.one if j == i else f.zero for j in range(n))


def _acc(f: Field, acc: dict, key, value: Scalar) -> None:
    s = f.add(acc.get(key, f.zero), value)
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def antipode_satisfies_axiom(t: StructureTable, s: Matrix) -> bool:
    """Exact check of both convolution identities for a candidate matrix."""
    f = t.field
    n = t.dim
    for a in range(n):
        left = _zero_vec(f, n)
        right = _zero_vec(f, n)
        for j in range(n):
            for k in range(n):
                c = t.delta[a][j][k]
                if not c:
                    continue
                s_k = tuple(s[i][k] for i in range(n))
                s_j = tuple(s[i][j] for i in range(n))
                left = _vec_add(f, left, _vec_scale(f, c, _product(t, _basis(f, n, j), s_k)))
                right = _vec_add(f, right, _vec_scale(f, c, _product(t, s_j, _basis(f, n, k))))
        want = _vec_scale(f, t.counit[a], t.unit)
        if left != want or right != want:
            return False
    return True


def _solve_exact(field: Field, rows: list[list[Scalar]], rhs: list[Scalar]):
    """Gaussian elimination over the exact field; None if inconsistent.

    Returns a particular solution with free variables set to zero.
    """
    f = field
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][ncols]:
            return None
    solution = [f.zero] * ncols
    for row, c in zip(m, pivot_cols):
        solution[c] = row[ncols]
    return solution


def solve_antipode(t: StructureTable) -> Matrix | None:
    """Solve the 2 n^2 exact linear equations for the antipode matrix.

    Antipodes are unique when they exist, so a consistent system pins a
    single solution; returns None when the system is infeasible.
    """
    f = t.field
    n = t.dim
    rows: list[list[Scalar]] = []
    rhs: list[Scalar] = []

    def var(i: int, k: int) -> int:  # index of unknown s[i][k]
        return i * n + k

    for a in range(n):
        for target in range(n):
            # m (id (x) S) Delta(e_a) = eps(e_a) 1, coordinate `target`
            row = [f.zero] * (n * n)
            for j in range(n):
                for k in range(n):
                    c = t.delta[a][j][k]
                    if not c:
                        continue
                    for i in range(n):
                        coeff = f.mul(c, t.mul[j][i][target])
                        if coeff:
                            row[var(i, k)] = f.add(row[var(i, k)], coeff)
            rows.append(row)
            rhs.append(f.mul(t.counit[a], t.unit[target]))
            # m (S (x) id) Delta(e_a) = eps(e_a) 1
            row = [f.zero] * (n * n)
            for j in range(n):
                for k in range(n):
                    c = t.delta[a][j][k]
                    if not c:
                        continue
                    for i in range(n):
                        coeff = f.mul(c, t.mul[i][k][target])
                        if coeff:
                            row[var(i, j)] = f.add(row[var(i, j)], coeff)
            rows.append(row)
            rhs.append(f.mul(t.counit[a], t.unit[target]))

    solution = _solve_exact(f, rows, rhs)
    if solution is None:
        return None
    s = tuple(tuple(solution[var(i, k)] for k in range(n)) for i in range(n))
    assert antipode_satisfies_axiom(t, s)
    return s


def compile_presentation(pres: HopfPresentation, degree: int) -> StructureTable:
    """Tables over the normal-word basis, when it stabilizes at `degree`.

    Raises NotFiniteDimensionalError when the basis still grows from degree
    to degree + 1 or a product/coproduct leaves the span.
    """
    if degree + 1 > pres.degree_bound:
        raise HopfForgeError(
            f"degree bound {pres.degree_bound} too small to decide stabilization at {degree}"
        )
    basis = pres.basis(degree)
    if pres.basis(degree + 1) != basis:
        raise NotFiniteDimensionalError(degree)
    alg = pres.algebra
    f = alg.field
    n = len(basis)
    index = {w: i for i, w in enumerate(basis)}

    def expand(p) -> Vector:
        out = [f.zero] * n
        for w, c in p.terms.items():
            if w not in index:
                raise NotFiniteDimensionalError(degree)
            out[index[w]] = f.add(out[index[w]], c)
        return tuple(out)

    mul = tuple(
        tuple(
            expand(pres.nf(alg.poly({u: f.one}) * alg.poly({v: f.one})))
            for v in basis
        )
        for u in basis
    )
    unit = expand(alg.one())
    delta = []
    for w in basis:
        d = pres.delta_of(alg.poly({w: f.one}))
        mat = [[f.zero] * n for _ in range(n)]
        for (u, v), c in d.terms.items():
            if u not in index or v not in index:
                raise NotFiniteDimensionalError(degree)
            mat[index[u]][index[v]] = f.add(mat[index[u]][index[v]], c)
        delta.append(tuple(tuple(row) for row in mat))
    counit = tuple(pres.eps_of(alg.poly({w: f.one})) for w in basis)
    antipode = None
    if pres.is_hopf:
        cols = [expand(pres.s_of(alg.poly({w: f.one}))) for w in basis]
        antipode = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    labels = tuple("*".join(w) or "1" for w in basis)
    return StructureTable(f, n, mul, unit, delta, counit, antipode, labels)


@dataclass(frozen=True)
class ProbeResult:
    indices: tuple[int, ...]
    dim: int
    antipode: Matrix


def coreflection_probe(t: StructureTable, max_dim: int = 12) -> ProbeResult | None:
    """Largest coordinate subspace that is a Hopf subbialgebra.

    Exhaustive over subsets of the given basis containing the unit's
    support; the answer is a lower bound for the dimension of a maximal
    Hopf subbialgebra in this basis.  None when no subset qualifies.
    """
    n = t.dim
    if n > max_dim:
        raise HopfForgeError(f"dimension {n} exceeds the exhaustive threshold {max_dim}")
    f = t.field
    required = frozenset(i for i, c in enumerate(t.unit) if c)
    optional = sorted(set(range(n)) - required)

    def closed(subset: frozenset[int]) -> bool:
        for i in subset:
            for j in subset:
                if any(c and k not in subset for k, c in enumerate(t.mul[i][j])):
                    return False
            for a in range(n):
                for b in range(n):
                    if t.delta[i][a][b] and (a not in subset or b not in subset):
                        return False
        return True

    def restrict(indices: tuple[int, ...]) -> StructureTable:
        pos = {g: i for i, g in enumerate(indices)}
        m = len(indices)
        mul = tuple(
            tuple(tuple(t.mul[i][j][k] for k in indices) for j in indices) for i in indices
        )
        delta = tuple(
            tuple(tuple(t.delta[i][a][b] for b in indices) for a in indices) for i in indices
        )
        labels = tuple(t.labels[i] for i in indices) if t.labels else None
        return StructureTable(
            f,
            m,
            mul,
            tuple(t.unit[i] for i in indices),
            delta,
            tuple(t.counit[i] for i in indices),
            None,
            labels,
        )

    for size in range(len(optional), -1, -1):
        for extra in combinations(optional, size):
            subset = frozenset(required) | frozenset(extra)
            if not closed(subset):
                continue
            indices = tuple(sorted(subset))
            s = solve_antipode(restrict(indices))
            if s is not None:
                return ProbeResult(indices, len(indices), s)
    return None
