"""Division, Buchberger, reduced bases, Frobenius powers."""

import random

import pytest

from beideals import (
    GF,
    QQ,
    Graph,
    IdealBasis,
    PolyContext,
    buchberger,
    colon_contains,
    divmod_basis,
    edge_ideal_generators,
    enumerate_connected_graphs,
    frobenius_power,
    is_groebner_basis,
    normal_form,
    not_in_bracket_m,
    s_polynomial,
)
from beideals.polys import Polynomial, mono_divides

from test_polys import random_poly


def edge_basis(g, fld=QQ):
    return edge_ideal_generators(PolyContext(g.n, fld), g)


CLAW = Graph(4, [(1, 2), (1, 3), (1, 4)])
DIAMOND = Graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def test_division_reexpansion():
    rng = random.Random(31)
    for fld in (QQ, GF(2), GF(5)):
        ctx = PolyContext(2, fld)
        for _ in range(40):
            f = random_poly(ctx, rng, nterms=6, maxdeg=3)
            divisors = [random_poly(ctx, rng, nterms=3, maxdeg=2) for _ in range(3)]
            divisors = [d for d in divisors if not d.is_zero()]
            qs, r = divmod_basis(f, divisors)
            assert sum((q * d for q, d in zip(qs, divisors)), r) == f
            for m in r.terms:
                assert not any(mono_divides(d.lm(), m) for d in divisors)


def test_division_depends_on_divisor_order():
    ctx = PolyContext(1, QQ)
    x, y = ctx.x(1), ctx.y(1)
    f = x ** 2 * y + x * y ** 2 + y ** 2
    a = x * y - ctx.one()
    c = y ** 2 - ctx.one()
    _, r1 = divmod_basis(f, [a, c])
    _, r2 = divmod_basis(f, [c, a])
    assert r1 == x + y + ctx.one()
    assert r2 == 2 * x + ctx.one()
    # against a Groebner basis the remainder is order-independent
    gb = buchberger(IdealBasis([a, c]))
    flipped = IdealBasis(list(gb.polys)[::-1])
    assert normal_form(f, gb) == normal_form(f, flipped)


def test_normal_form_empty_basis():
    ctx = PolyContext(2, QQ)
    f = ctx.x(1) + ctx.y(2)
    assert normal_form(f, []) == f


def test_s_polynomial_cancels_leads():
    g = edge_basis(DIAMOND)
    polys = list(g.polys)
    for a in polys:
        for c in polys:
            if a.lm() == c.lm():
                continue
            s = s_polynomial(a, c)
            if not s.is_zero():
                from beideals.polys import mono_lcm

                assert s.lm() < mono_lcm(a.lm(), c.lm())


def test_buchberger_is_idempotent():
    gb = buchberger(edge_basis(CLAW))
    again = buchberger(IdealBasis(list(gb.polys)))
    assert set(gb.polys) == set(again.polys)
    assert gb.marked_groebner and again.marked_groebner


def test_reduced_basis_shape():
    gb = buchberger(edge_basis(CLAW))
    polys = list(gb.polys)
    for f in polys:
        assert f.lc() == f.ctx.field.one
        for m in f.terms:
            assert not any(mono_divides(h.lm(), m) for h in polys if h is not f)


def test_same_ideal_same_reduced_basis():
    base = edge_basis(DIAMOND)
    gb1 = buchberger(base)
    padded = list(base.polys)
    padded.append(padded[0] * padded[1])
    padded.append(padded[2] + padded[3])
    gb2 = buchberger(IdealBasis(padded))
    assert set(gb1.polys) == set(gb2.polys)


def test_membership_by_normal_form():
    rng = random.Random(13)
    gens = list(edge_basis(DIAMOND).polys)
    gb = buchberger(IdealBasis(gens))
    ctx = gens[0].ctx
    for _ in range(10):
        member = ctx.zero()
        for f in gens:
            member = member + random_poly(ctx, rng, nterms=2, maxdeg=1) * f
        assert normal_form(member, gb).is_zero()
    assert not normal_form(ctx.x(1), gb).is_zero()


def test_is_groebner_basis_detects_gaps():
    gens = edge_basis(CLAW)
    assert not is_groebner_basis(gens)  # the claw needs degree three elements
    assert is_groebner_basis(buchberger(gens))


def test_characteristic_does_not_change_leads():
    for n in range(2, 5):
        for g in enumerate_connected_graphs(n):
            leads = []
            for fld in (QQ, GF(2), GF(3)):
                gb = buchberger(edge_basis(g, fld))
                leads.append(sorted(f.lm() for f in gb.polys))
            assert leads[0] == leads[1] == leads[2]


def test_frobenius_power_validation():
    with pytest.raises(ValueError):
        frobenius_power(edge_basis(CLAW, QQ), 2)
    basis = edge_basis(CLAW, GF(2))
    with pytest.raises(ValueError):
        frobenius_power(basis, 6)
    with pytest.raises(ValueError):
        frobenius_power(basis, 1)


def test_frobenius_power_is_termwise():
    basis = edge_basis(CLAW, GF(3))
    bracket = frobenius_power(basis, 9)
    for f, fq in zip(basis.polys, bracket.polys):
        assert fq == f ** 9
        assert fq.terms == {tuple(9 * e for e in m): c for m, c in f.terms.items()}


def test_bracket_power_contains_qth_powers_of_members():
    rng = random.Random(3)
    for p in (2, 3):
        basis = edge_basis(Graph(3, [(1, 2), (2, 3)]), GF(p))
        gb_bracket = buchberger(frobenius_power(basis, p))
        ctx = basis.ctx
        for _ in range(5):
            member = ctx.zero()
            for f in basis.polys:
                member = member + random_poly(ctx, rng, nterms=2, maxdeg=1) * f
            assert normal_form(member ** p, gb_bracket).is_zero()


def test_colon_contains_requires_marked_basis():
    basis = edge_basis(CLAW, GF(2))
    with pytest.raises(ValueError):
        colon_contains(basis.polys[0], basis, IdealBasis(list(basis.polys)))


def test_colon_contains_simple_case():
    ctx = PolyContext(1, GF(2))
    x, y = ctx.x(1), ctx.y(1)
    target = buchberger(IdealBasis([x * x]))
    gens = IdealBasis([x])
    assert colon_contains(x, gens, target)          # x * x = x^2
    assert not colon_contains(y, gens, target)      # x * y is not in (x^2)


def test_not_in_bracket_m():
    ctx = PolyContext(1, GF(2))
    x, y = ctx.x(1), ctx.y(1)
    assert not_in_bracket_m(x * y, 2)
    assert not not_in_bracket_m(x ** 2, 2)
    assert not_in_bracket_m(x ** 2 + x * y, 2)  # one surviving term is enough
    with pytest.raises(ValueError):
        not_in_bracket_m(x, 3)
    with pytest.raises(ValueError):
        not_in_bracket_m(PolyContext(1, QQ).x(1), 2)


def test_ideal_basis_validates():
    ctx = PolyContext(2, QQ)
    f = ctx.x(1) * ctx.y(2) - ctx.x(2) * ctx.y(1)
    with pytest.raises(ValueError):
        IdealBasis([ctx.zero(), f])
    with pytest.raises(ValueError):
        IdealBasis([f, PolyContext(3, QQ).x(1)])
    assert IdealBasis([f]).polys == (f,)
