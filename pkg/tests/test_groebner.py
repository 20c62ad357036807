import random
from fractions import Fraction

import pytest

from satura.arith import QQ, prime_field
from satura.groebner import (NotZeroDimensional, buchberger, ideal_degree,
                             is_zero_dimensional, normal_form, quotient_basis,
                             s_polynomial, verify_groebner)
from satura.poly import GREVLEX, LEX, PolyRing


def random_system(ring, rng, count=3, max_deg=3):
    out = []
    for _ in range(count):
        terms = []
        for _ in range(rng.randrange(1, 5)):
            m = tuple(rng.randrange(max_deg + 1) for _ in range(ring.nvars))
            terms.append((m, Fraction(rng.randint(-5, 5))))
        f = ring.poly(terms)
        if not f.is_zero():
            out.append(f)
    return out


def test_textbook_basis():
    # <x^2+y, xy-1>: reduced grevlex basis is {x^2+y, xy-1, y^2+x}
    R = PolyRing(("x", "y"), QQ)
    gb = buchberger([R.parse("x^2 + y"), R.parse("x*y - 1")])
    assert set(map(str, gb)) == {"x^2 + y", "x*y - 1", "y^2 + x"}
    assert verify_groebner(gb)
    assert ideal_degree(gb) == 3


def test_katsura2_lex():
    R = PolyRing(("u0", "u1"), QQ, LEX)
    gb = buchberger([R.parse("u0 + 2*u1 - 1"),
                     R.parse("u0^2 + 2*u1^2 - u0")])
    assert set(gb.leading_monomials) == {(1, 0), (0, 2)}
    assert verify_groebner(gb, [R.parse("u0 + 2*u1 - 1")])


def test_unit_ideal():
    R = PolyRing(("x", "y"), prime_field(13))
    gb = buchberger([R.parse("x + 1"), R.parse("x + 2")])
    assert gb.is_unit
    assert len(gb) == 1 and str(gb.generators[0]) == "1"
    assert ideal_degree(gb) == 0
    assert quotient_basis(gb) == []


def test_zero_input():
    R = PolyRing(("x",), QQ)
    gb = buchberger([R.zero()])
    assert len(gb) == 0
    assert not is_zero_dimensional(gb)


def test_shuffle_gives_identical_basis():
    rng = random.Random(21)
    R = PolyRing(("x", "y", "z"), prime_field(32003))
    base = PolyRing(("x", "y", "z"), QQ)
    for _ in range(25):
        gens = [R.coerce(f) for f in random_system(base, rng)]
        if not gens:
            continue
        gb = buchberger(gens)
        for _ in range(3):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled) == gb
        assert verify_groebner(gb, gens)


def test_reduced_shape():
    # No leading monomial of the reduced basis divides a monomial of
    # another member, and every generator is monic.
    rng = random.Random(22)
    R = PolyRing(("x", "y"), QQ)
    for _ in range(25):
        gens = random_system(R, rng)
        gb = buchberger(gens)
        lms = gb.leading_monomials
        for i, g in enumerate(gb):
            assert g.lc() == Fraction(1)
            for j, lm in enumerate(lms):
                if i == j:
                    continue
                for m, _ in g.terms:
                    assert not all(a <= b for a, b in zip(lm, m))


def test_normal_form_membership():
    R = PolyRing(("x", "y"), QQ)
    f1, f2 = R.parse("x^2 + y"), R.parse("x*y - 1")
    gb = buchberger([f1, f2])
    rng = random.Random(23)
    for _ in range(20):
        a, b = (random_system(R, rng, count=1) or [R.one()] for _ in range(2))
        combo = a[0] * f1 + b[0] * f2
        assert gb.contains(combo)
        r = normal_form(combo + R.parse("x"), gb)
        assert r == normal_form(R.parse("x"), gb)
    assert not gb.contains(R.one())


def test_spoly_reduces_to_zero_on_basis():
    R = PolyRing(("x", "y", "z"), QQ)
    gb = buchberger([R.parse("x^2 - y*z"), R.parse("y^2 - x*z"),
                     R.parse("z^2 - x*y")])
    gens = list(gb)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert normal_form(s_polynomial(gens[i], gens[j]), gb).is_zero()


def test_quotient_basis_downward_closed():
    R = PolyRing(("x", "y"), prime_field(101))
    gb = buchberger([R.parse("x^3 + x + 1"), R.parse("y^2 + x*y + 2")])
    q = quotient_basis(gb)
    assert len(q) == 6 == ideal_degree(gb)
    qset = set(q)
    for m in q:
        for i, e in enumerate(m):
            if e:
                assert m[:i] + (e - 1,) + m[i + 1:] in qset


def test_positive_dimension_rejected():
    R = PolyRing(("x", "y"), QQ)
    gb = buchberger([R.parse("x*y - 1")])
    assert not is_zero_dimensional(gb)
    with pytest.raises(NotZeroDimensional):
        quotient_basis(gb)


def test_degree_order_invariance():
    rng = random.Random(24)
    R = PolyRing(("x", "y"), QQ)
    hits = 0
    for _ in range(40):
        gens = random_system(R, rng, count=3, max_deg=2)
        gb = buchberger(gens)
        if not is_zero_dimensional(gb) or gb.is_unit:
            continue
        hits += 1
        lex_gens = [R.with_order(LEX).coerce(f) for f in gens]
        assert ideal_degree(buchberger(lex_gens)) == ideal_degree(gb)
    assert hits >= 5  # the fuzz actually exercised the comparison
