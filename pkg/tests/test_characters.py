from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lspin.chars import CharacterGroup, Generator, LFactorProduct, tate_factor
from lspin.errors import (
    InconsistentRelations,
    MissingSatakeValue,
    NotDivisible,
    PoleAtS,
    UnknownGenerator,
)

from latticetools import presentation_catalog


# -- group operations --------------------------------------------------------


def test_inverse_cancellation(free_group):
    g = free_group
    half = Fraction(1, 2)
    s = g.character(sigma=1)
    left = g.nu_power(half) * s
    right = g.nu_power(half) * s.inverse()
    assert left * right == g.nu


def test_order_two_reduction(xi_group):
    g = xi_group
    assert g.character(xi=3, sigma=1) == g.character(xi=1, sigma=1)
    assert g.character(xi=2).is_trivial


def test_relation_folds_nu_part():
    # chi1 = nu, the IIIb special position
    g = CharacterGroup(
        [Generator("chi1"), Generator("sigma")],
        relations=[({"chi1": 1}, Fraction(-1))],
    )
    assert g.character(chi1=1, sigma=1) == g.nu * g.character(sigma=1)


def test_normalize_idempotent(xi_group):
    chi = xi_group.character(nu=Fraction(7, 2), xi=5, sigma=-3)
    again = xi_group.character(nu=chi.nu_exp, **{"xi": chi.exps[0], "sigma": chi.exps[1]})
    assert chi == again


def test_unknown_generator(free_group):
    with pytest.raises(UnknownGenerator):
        free_group.character(tau=1)


def test_nu_only_relation_rejected():
    with pytest.raises(InconsistentRelations):
        CharacterGroup([Generator("sigma")], relations=[({}, Fraction(2))])


def test_hidden_nu_relation_rejected():
    # chi = nu and chi = nu^2 combine to nu = 1
    with pytest.raises(InconsistentRelations):
        CharacterGroup(
            [Generator("chi")],
            relations=[({"chi": 1}, Fraction(-1)), ({"chi": 1}, Fraction(-2))],
        )


def test_mixed_ramified_relation_rejected():
    with pytest.raises(InconsistentRelations):
        CharacterGroup(
            [Generator("xi", unramified=False), Generator("sigma")],
            relations=[({"xi": 1, "sigma": -1}, Fraction(0))],
        )


def test_relation_contradicting_disequality():
    with pytest.raises(InconsistentRelations):
        CharacterGroup(
            [Generator("chi")],
            relations=[({"chi": 1}, Fraction(0))],
            disequalities=[({"chi": 1}, Fraction(0))],
        )


# -- ramification ------------------------------------------------------------


def test_is_unramified_basic(free_group):
    g = free_group
    assert (g.nu_power(Fraction(3, 2)) * g.character(sigma=1)).is_unramified


def test_is_unramified_ramified_generator():
    g = CharacterGroup([Generator("xi", unramified=False), Generator("sigma")])
    assert not g.character(xi=1, sigma=1).is_unramified
    assert g.character(sigma=1).is_unramified


def test_ramified_part_cancels_under_relation():
    g = CharacterGroup([Generator("xi", unramified=False, order=2), Generator("sigma")])
    assert g.character(xi=2, sigma=1).is_unramified


# -- Tate factors ------------------------------------------------------------


def test_tate_factor_unramified(free_group):
    chi = free_group.nu_power(Fraction(1, 2)) * free_group.character(sigma=1)
    assert tate_factor(chi).factors == (chi,)


def test_tate_factor_ramified_is_one():
    g = CharacterGroup([Generator("xi", unramified=False), Generator("sigma")])
    assert tate_factor(g.character(xi=1, sigma=1)).is_one


def test_tate_factor_trivial(free_group):
    assert tate_factor(free_group.one).degree == 1


def test_tate_degree_additive(xi_group):
    ram = CharacterGroup([Generator("xi", unramified=False), Generator("sigma")])
    x, s = ram.character(xi=1), ram.character(sigma=1)
    combos = [(x, s), (s, s), (x, x)]
    for a, b in combos:
        product = tate_factor(a) * tate_factor(b)
        assert product.degree == sum(1 for c in (a, b) if c.is_unramified)
        assert product.degree in (0, 1, 2)


# -- L-factor arithmetic -----------------------------------------------------


def test_divide_exact_cancellation(free_group):
    s = free_group.character(sigma=1)
    p = tate_factor(s) * tate_factor(free_group.nu * s)
    assert p.divide_exact(tate_factor(s)) == tate_factor(free_group.nu * s)


def test_product_commutes(free_group):
    s = free_group.character(sigma=1)
    ns = free_group.nu * s
    assert tate_factor(s) * tate_factor(ns) == tate_factor(ns) * tate_factor(s)


def test_divides_with_multiplicity(free_group):
    half = free_group.nu_power(Fraction(1, 2))
    chi = half * free_group.character(sigma=1)
    single = tate_factor(chi)
    square = single * single
    assert single.divides(square)
    assert not square.divides(single)


def test_divide_exact_failure(free_group):
    s = free_group.character(sigma=1)
    with pytest.raises(NotDivisible):
        tate_factor(s).divide_exact(tate_factor(free_group.nu * s))


def test_ramified_factor_rejected():
    g = CharacterGroup([Generator("xi", unramified=False)])
    with pytest.raises(InconsistentRelations):
        LFactorProduct((g.character(xi=1),))


# -- numeric model -----------------------------------------------------------


def test_numeric_trivial_character(free_group):
    p = tate_factor(free_group.one)
    assert abs(p.numeric_eval(3, {}, 1.0) - 1.5) < 1e-12


def test_numeric_empty_product():
    assert LFactorProduct().numeric_eval(7, {}, 2.3 + 1j) == 1


def test_numeric_nu_shift(free_group):
    # nu(varpi) = 1/3, so L(s, nu) at s=0 equals L(s, 1) at s=1
    p = tate_factor(free_group.nu)
    q = tate_factor(free_group.one)
    assert abs(p.numeric_eval(3, {}, 0.0) - q.numeric_eval(3, {}, 1.0)) < 1e-12
    assert abs(p.numeric_eval(3, {}, 0.0) - 1.5) < 1e-12


def test_numeric_pole_reported(free_group):
    with pytest.raises(PoleAtS):
        tate_factor(free_group.one).numeric_eval(3, {}, 0.0)


def test_numeric_missing_satake(free_group):
    with pytest.raises(MissingSatakeValue):
        tate_factor(free_group.character(sigma=1)).numeric_eval(3, {}, 1.0)


def test_sample_satake_respects_relations():
    g = CharacterGroup(
        [Generator("xi", order=2), Generator("chi1"), Generator("sigma")],
        relations=[({"chi1": 1}, Fraction(-1))],
    )
    rng = Random(5)
    for q in (2, 3, 5):
        satake = g.sample_satake(q, rng)
        assert abs(satake["xi"] ** 2 - 1) < 1e-9
        assert abs(satake["xi"] + 1) < 1e-9  # nontrivial square root
        assert abs(satake["chi1"] - 1 / q) < 1e-9


# -- rendering ---------------------------------------------------------------


@pytest.mark.parametrize(
    "nu, exps, expected",
    [
        (Fraction(0), {}, "1"),
        (Fraction(1), {}, "nu"),
        (Fraction(1, 2), {"sigma": 1}, "nu^{1/2}*sigma"),
        (Fraction(-3, 2), {"chi": 1, "sigma": 2}, "nu^{-3/2}*chi*sigma^2"),
        (Fraction(2), {"sigma": -1}, "nu^{2}*sigma^-1"),
    ],
)
def test_render(free_group, nu, exps, expected):
    assert free_group.character(nu=nu, **exps).render() == expected


def test_lfactor_render_sorted(free_group):
    s = free_group.character(sigma=1)
    p = tate_factor(free_group.nu * s) * tate_factor(s)
    assert p.render() == "L(s, nu*sigma) * L(s, sigma)"


# -- group laws (property-based) ----------------------------------------------


@st.composite
def characters(draw, group):
    nu = Fraction(draw(st.integers(-8, 8)), 2)
    exps = {
        g.name: draw(st.integers(-5, 5))
        for g in group.generators
    }
    return group.character(nu=nu, **exps)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_group_laws(data):
    group = CharacterGroup(
        [Generator("xi", order=2), Generator("chi"), Generator("sigma")]
    )
    a = data.draw(characters(group))
    b = data.draw(characters(group))
    c = data.draw(characters(group))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_trivial
    assert a * group.one == a


# -- normal form vs brute force -----------------------------------------------


def test_normal_form_matches_bruteforce_enumeration():
    rng = Random(11)
    for pres in presentation_catalog():
        gens = [Generator(f"g{i}") for i in range(pres.n)]
        group = CharacterGroup(
            gens,
            relations=[
                ({f"g{i}": e for i, e in enumerate(row) if e}, Fraction(0))
                for row in pres.relation_rows
            ],
        )

        def char_of(vec):
            return group.character(**{f"g{i}": e for i, e in enumerate(vec) if e})

        reps = pres.enumerate_representatives(free_bound=1)
        sample = reps if len(reps) <= 30 else rng.sample(reps, 30)
        for i, v in enumerate(sample):
            for w in sample[i + 1 :]:
                assert (char_of(v) == char_of(w)) == pres.equivalent(v, w)
        # shifting by lattice elements never changes the class
        for v in sample[:10]:
            shift = pres.random_lattice_element(rng)
            assert char_of(v) == char_of([a + b for a, b in zip(v, shift)])
            assert pres.equivalent(v, [a + b for a, b in zip(v, shift)])


def test_torsion_order_computed():
    rng = Random(3)
    for pres in presentation_catalog()[:8]:
        gens = [Generator(f"g{i}") for i in range(pres.n)]
        group = CharacterGroup(
            gens,
            relations=[
                ({f"g{i}": e for i, e in enumerate(row) if e}, Fraction(0))
                for row in pres.relation_rows
            ],
        )
        expected = 1
        for d in pres.torsion:
            expected *= d
        if pres.free_rank == 0:
            assert group.torsion_order() == expected
        else:
            assert group.torsion_order() is None


def test_distinct_products_separate_numerically():
    # relation-free generic system: unequal products must separate > 1e-6
    group = CharacterGroup([Generator("chi"), Generator("sigma")])
    rng = Random(77)
    s = group.character(sigma=1)
    c = group.character(chi=1)
    p = tate_factor(s) * tate_factor(group.nu * c * s)
    q = tate_factor(c * s) * tate_factor(group.nu * s)
    assert p != q
    best = 0.0
    for _ in range(20):
        base = rng.choice([2, 3, 5])
        satake = group.sample_satake(base, rng)
        spt = complex(rng.uniform(-1.5, 1.5), rng.uniform(0.2, 1.8))
        best = max(best, abs(p.numeric_eval(base, satake, spt) - q.numeric_eval(base, satake, spt)))
    assert best > 1e-6
