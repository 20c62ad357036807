"""Affine Hilbert functions, symbolic-reduction bounds and Veronese ranks.

HF_I(d) is read off a degree-compatible Groebner basis as the number of
standard monomials of total degree at most d.  Two independent bounds
bracket it without a basis: jde_dimension gives an upper bound from the
degree-(d+e) truncated span of the generators, and the rank of a
Veronese matrix at known solutions gives a lower bound.  The module
also emits the well-constrained certification system that pins k
solutions to a rank statement; it never solves or certifies anything
itself.
"""

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Optional

from .arith import PrimeField, RationalField
from .groebner import GroebnerBasis
from .poly import PolyRing, mono_divides, mono_mul, polys_to_json


class OrderNotDegreeCompatible(ValueError):
    """The affine Hilbert function needs a degree-compatible order."""


class BudgetExceeded(ValueError):
    """p^n points is past the brute-force enumeration budget."""


class SingularSubmatrix(ValueError):
    """The selected Veronese columns are not invertible at the points."""


class DuplicatePoints(UserWarning):
    pass


@dataclass(frozen=True)
class HilbertProfile:
    values: dict                 # d -> HF(d), for d in [0, d_max]
    stabilized_at: Optional[int]
    stable_value: Optional[int]

    def row(self) -> tuple:
        return tuple(self.values[d] for d in sorted(self.values))


def _standard_monomial_degrees(lms, n, d_max):
    """Degrees of monomials of degree <= d_max outside <lms>.

    Standard monomials form a downward-closed set, so the search prunes
    a whole subtree as soon as one leading monomial divides the current
    partial exponent vector.
    """
    degrees = []
    exps = [0] * n

    def visit(var, total):
        if var == n:
            degrees.append(total)
            return
        e = 0
        while total + e <= d_max:
            exps[var] = e
            if any(mono_divides(lm, exps) for lm in lms):
                break
            visit(var + 1, total + e)
            e += 1
        exps[var] = 0

    # mono_divides compares pairwise; lists work as well as tuples
    visit(0, 0)
    return degrees


def affine_hilbert_function(basis: GroebnerBasis, d_max: int) -> HilbertProfile:
    """HF(d) for d in [0, d_max], with plateau detection.

    A plateau is definitive: a standard monomial of degree d+1 has a
    standard divisor of degree d, so one flat step means flat forever.
    """
    ring = basis.ring
    if not ring.order.degree_compatible:
        raise OrderNotDegreeCompatible(
            f"{ring.order.name} does not refine total degree")
    if d_max < 0:
        raise ValueError("d_max must be non-negative")
    lms = basis.leading_monomials
    if any(sum(m) == 0 for m in lms):
        degrees = []  # unit ideal: no standard monomials at all
    else:
        degrees = _standard_monomial_degrees(lms, ring.nvars, d_max)
    per = [0] * (d_max + 2)
    for t in degrees:
        per[t] += 1
    values, total = {}, 0
    for d in range(d_max + 1):
        total += per[d]
        values[d] = total
    stabilized_at = None
    for d in range(d_max):
        if all(per[t] == 0 for t in range(d + 1, d_max + 1)):
            stabilized_at = d
            break
    if not degrees:
        stabilized_at = 0
    stable = values[stabilized_at] if stabilized_at is not None else None
    return HilbertProfile(values, stabilized_at, stable)


def _exact_degree_monomials(n, deg):
    """All exponent tuples of total degree deg, generated recursively."""
    if n == 1:
        yield (deg,)
        return
    for e in range(deg + 1):
        for rest in _exact_degree_monomials(n - 1, deg - e):
            yield (e,) + rest


@lru_cache(maxsize=None)
def monomial_columns(n: int, d: int) -> tuple:
    """Canonical enumeration: ascending degree, descending lex inside
    a degree block.  Length C(n+d, d)."""
    out = []
    for deg in range(d + 1):
        block = sorted(_exact_degree_monomials(n, deg), reverse=True)
        out.extend(block)
    return tuple(out)


def _strip_content(row: dict) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in row:
            row[k] //= g


def _echelon_insert(pivots: dict, row: dict) -> Optional[int]:
    """Reduce one integer row against the pivot rows in place; register
    and return its pivot column, or None when it vanishes.

    Fraction-free: cross-multiply with the minimal factors and strip the
    gcd afterwards so entries stay small.
    """
    while row:
        col = min(row)
        piv = pivots.get(col)
        if piv is None:
            _strip_content(row)
            if row[col] < 0:
                for k in row:
                    row[k] = -row[k]
            pivots[col] = row
            return col
        a, b = piv[col], row[col]
        g = gcd(a, b)
        ma, mb = b // g, a // g
        for k, v in piv.items():
            nv = row.get(k, 0) * mb - v * ma
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
        for k in list(row):
            if k not in piv:
                row[k] *= mb
        _strip_content(row)
    return None


def jde_dimension(h, d: int, e: int):
    """dim of the degree-<=d slice of the span of all m*h_i with
    deg(m*h_i) <= d+e, and the Hilbert upper bound C(n+d,d) - dim.

    Columns are ordered high degree first, so pivots landing in the tail
    block count exactly the vectors of the span that live in degree <= d.
    """
    if d < 0 or e < 0:
        raise ValueError("d and e must be non-negative")
    h = [f for f in h if not f.is_zero()]
    if not h:
        raise ValueError("empty system")
    ring = h[0].ring
    n = ring.nvars
    D = d + e
    cols = sorted(
        {m for deg in range(D + 1) for m in _exact_degree_monomials(n, deg)},
        key=lambda m: (-sum(m), ring.key(m)))
    index = {m: j for j, m in enumerate(cols)}
    low_start = next((j for j, m in enumerate(cols) if sum(m) <= d), len(cols))

    rational = isinstance(ring.field, RationalField)
    pivots = {}
    for f in h:
        df = f.degree()
        if df > D:
            continue
        for deg in range(D - df + 1):
            for m in _exact_degree_monomials(n, deg):
                row = {index[mono_mul(fm, m)]: c for fm, c in f.terms}
                if rational:
                    den = 1
                    for v in row.values():
                        den = den * v.denominator // gcd(den, v.denominator)
                    row = {k: int(v * den) for k, v in row.items()}
                    _echelon_insert(pivots, row)
                else:
                    _echelon_insert_field(pivots, row, ring.field)
    dim = sum(1 for c in pivots if c >= low_start)
    return dim, comb(n + d, d) - dim


def _echelon_insert_field(pivots: dict, row: dict, field) -> Optional[int]:
    while row:
        col = min(row)
        piv = pivots.get(col)
        if piv is None:
            inv = field.inv(row[col])
            pivots[col] = {k: field.mul(v, inv) for k, v in row.items()}
            return col
        c = row[col]
        for k, v in piv.items():
            nv = field.sub(row.get(k, field.zero), field.mul(c, v))
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return None


@dataclass(frozen=True)
class VeroneseMatrix:
    points: tuple
    degree: int
    columns: tuple   # monomial enumeration, length C(n+d,d)
    entries: tuple   # k rows of field elements

    @property
    def shape(self):
        return len(self.entries), len(self.columns)


def veronese_matrix(points, d: int, field) -> VeroneseMatrix:
    """Row j holds every monomial of degree <= d evaluated at point j."""
    points = [tuple(pt) for pt in points]
    if not points:
        raise ValueError("at least one point is required")
    n = len(points[0])
    if any(len(pt) != n for pt in points):
        raise ValueError("points of mixed dimension")
    cols = monomial_columns(n, d)
    modulus = getattr(field, "p", None)
    rows = []
    for pt in points:
        row = []
        for m in cols:
            v = field.one if modulus else Fraction(1)
            for x, exp in zip(pt, m):
                if exp:
                    v = v * pow(x, exp, modulus) if modulus else v * x ** exp
                    if modulus:
                        v %= modulus
            row.append(v)
        rows.append(tuple(row))
    return VeroneseMatrix(tuple(points), d, cols, tuple(rows))


def _dense_rank(rows, field) -> int:
    """Exact row reduction; works for prime fields and rationals."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    modular = isinstance(field, PrimeField)
    rank, rpos = 0, 0
    for col in range(ncols):
        piv = next((k for k in range(rpos, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[rpos], rows[piv] = rows[piv], rows[rpos]
        inv = field.inv(rows[rpos][col]) if modular else 1 / rows[rpos][col]
        if modular:
            rows[rpos] = [field.mul(v, inv) for v in rows[rpos]]
        else:
            rows[rpos] = [v * inv for v in rows[rpos]]
        for k in range(len(rows)):
            if k != rpos and rows[k][col]:
                c = rows[k][col]
                if modular:
                    rows[k] = [field.sub(u, field.mul(c, v))
                               for u, v in zip(rows[k], rows[rpos])]
                else:
                    rows[k] = [u - c * v for u, v in zip(rows[k], rows[rpos])]
        rank += 1
        rpos += 1
        if rpos == len(rows):
            break
    return rank


def veronese_rank_lower_bound(points, d: int, field) -> int:
    """rank M_d(points); a lower bound for HF(d) of any ideal whose
    solution set the (distinct, verified) points belong to."""
    seen, unique = set(), []
    for pt in points:
        key = tuple(pt)
        if key in seen:
            warnings.warn("duplicate points dropped", DuplicatePoints)
            continue
        seen.add(key)
        unique.append(key)
    M = veronese_matrix(unique, d, field)
    return _dense_rank(M.entries, field)


def find_points_bruteforce(system, budget: int = 10 ** 7) -> list:
    """All F_p-rational common zeros, by exhaustive sweep.

    Desk-scale oracle: radical ideals with all solutions rational have
    exactly ideal_degree of them.
    """
    polys = list(system.generators) if isinstance(system, GroebnerBasis) else list(system)
    if not polys:
        raise ValueError("empty system")
    ring = polys[0].ring
    field = ring.field
    if not isinstance(field, PrimeField):
        raise ValueError("brute force needs a prime field")
    p, n = field.p, ring.nvars
    if p ** n > budget:
        raise BudgetExceeded(f"{p}^{n} exceeds the budget {budget}")
    pts = []
    from itertools import product

    for pt in product(range(p), repeat=n):
        if all(f.evaluate(pt) == 0 for f in polys):
            pts.append(pt)
    return pts


@dataclass(frozen=True)
class CertificationSystem:
    polynomials: tuple   # k*n + k*k equations over a fresh y/L ring
    columns: tuple       # the k selected monomials
    points: tuple
    degree: int

    @property
    def ring(self):
        return self.polynomials[0].ring

    def to_json(self) -> str:
        payload = polys_to_json(list(self.polynomials))
        payload["columns"] = [list(m) for m in self.columns]
        payload["degree"] = self.degree
        return json.dumps(payload)


def emit_certification_system(system, points, d: int, columns) -> CertificationSystem:
    """The well-constrained system pinning k solutions: G(y_i) for each
    point slot plus Lambda * S_d(y) - I, in kn + k^2 variables.

    Emission only; the caller hands the file to an external certifier.
    """
    polys = list(system.generators) if isinstance(system, GroebnerBasis) else list(system)
    if not polys:
        raise ValueError("empty system")
    ring = polys[0].ring
    field = ring.field
    n = ring.nvars
    k = len(points)
    if len(columns) != k:
        raise ValueError(f"need exactly k = {k} columns, got {len(columns)}")
    if len(polys) != n:
        raise ValueError(
            f"well-constrained emission needs n = {n} generators, got {len(polys)}")
    columns = [tuple(m) for m in columns]
    for m in columns:
        if len(m) != n or sum(m) > d:
            raise ValueError(f"column {m} is not a degree-<={d} monomial")
    # invertibility of S_d at the points, checked exactly
    S = []
    modulus = getattr(field, "p", None)
    for pt in points:
        row = []
        for m in columns:
            v = field.one if modulus else Fraction(1)
            for x, exp in zip(pt, m):
                if exp:
                    v = v * pow(x, exp, modulus) if modulus else v * x ** exp
                    if modulus:
                        v %= modulus
            row.append(v)
        S.append(row)
    if _dense_rank(S, field) != k:
        raise SingularSubmatrix(
            "selected columns are singular at the points; choose others")

    names = [f"y{i + 1}_{v}" for i in range(k) for v in ring.vars]
    names += [f"L{i + 1}_{j + 1}" for i in range(k) for j in range(k)]
    big = PolyRing(names, field, ring.order)
    nv = len(names)
    one = field.one if modulus else Fraction(1)

    gens = []
    for i in range(k):
        # G(y_i): source variable v becomes coordinate y{i+1}_v
        offset = i * n
        for f in polys:
            terms = []
            for m, c in f.terms:
                exps = [0] * nv
                for t, e in enumerate(m):
                    exps[offset + t] = e
                terms.append((tuple(exps), c))
            gens.append(big.poly(terms))
    lam_base = k * n
    for i in range(k):
        for j in range(k):
            # row i of Lambda . S_d(y) minus the identity, entry (i, j)
            terms = []
            if i == j:
                terms.append(((0,) * nv, field.from_int(-1)))
            for l in range(k):
                exps = [0] * nv
                exps[lam_base + i * k + l] = 1
                for t, e in enumerate(columns[j]):
                    exps[l * n + t] = e
                terms.append((tuple(exps), one))
            gens.append(big.poly(terms))
    assert len(gens) == k * n + k * k
    return CertificationSystem(tuple(gens), tuple(columns), tuple(tuple(pt) for pt in points), d)
