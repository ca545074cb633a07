from fractions import Fraction

import pytest

from lspin.chars import CharacterGroup, Generator
from lspin.errors import MalformedAtom
from lspin.gl2 import (
    CuspidalAtom,
    GelfandGraev,
    GENERIC_PRINCIPAL_SERIES,
    Gl2ModuleExpr,
    JordanModule,
    MirabolicExpr,
    ONE_DIMENSIONAL,
    OneDim,
    OneStExt,
    NoCentralThree,
    PrincipalSeries,
    SelfExtPrincipal,
    SelfExtStOne,
    ShriekStar,
    StOneExt,
    StarPush,
    Steinberg,
    central_character,
    euler_characteristic,
    expr,
    jordan_induced,
    jshriek_specialization,
    principal_series,
)


@pytest.fixture
def g():
    return CharacterGroup([Generator("chi"), Generator("sigma")])


def half(g, k=1):
    return g.nu_power(Fraction(k, 2))


# -- principal series normalization -------------------------------------------


def test_ratio_nu_gives_st_one(g):
    s = g.character(sigma=1)
    atom = principal_series(half(g) * s, half(g, -1) * s)
    assert atom == StOneExt(s)
    assert atom.render() == "sigma*M_(St:1)"


def test_ratio_nu_inverse_gives_one_st(g):
    s = g.character(sigma=1)
    atom = principal_series(half(g, -1) * s, half(g) * s)
    assert atom == OneStExt(s)


def test_generic_ratio_is_irreducible(g):
    c, s = g.character(chi=1), g.character(sigma=1)
    atom = principal_series(c * s, s)
    assert isinstance(atom, PrincipalSeries)
    assert atom.render() == "chi*sigma x sigma"


# -- constituents --------------------------------------------------------------


def test_constituents_st_one(g):
    s = g.character(sigma=1)
    assert expr(StOneExt(s)).constituents() == (OneDim(s), Steinberg(s))


def test_constituents_irreducible_ps(g):
    c, s = g.character(chi=1), g.character(sigma=1)
    atom = principal_series(c * s, s)
    assert expr(atom).constituents() == (atom,)


def test_constituents_ps_symmetric(g):
    c, s = g.character(chi=1), g.character(sigma=1)
    one = expr(principal_series(c * s, s))
    other = expr(principal_series(s, c * s))
    assert one.constituents() == other.constituents()


def test_constituents_nc_three(g):
    one = g.one
    got = expr(NoCentralThree(one)).constituents()
    assert got == (OneDim(one), OneDim(one), Steinberg(one))


def test_constituents_self_extensions(g):
    s = g.character(sigma=1)
    c = g.character(chi=1)
    assert expr(SelfExtStOne(s)).constituents() == (
        OneDim(s),
        OneDim(s),
        Steinberg(s),
        Steinberg(s),
    )
    base = principal_series(c * s, s)
    assert len(expr(SelfExtPrincipal(c * s, s)).constituents()) == 2


def test_self_extension_requires_irreducible_base(g):
    s = g.character(sigma=1)
    with pytest.raises(MalformedAtom):
        SelfExtPrincipal(half(g) * s, half(g, -1) * s)


def test_jordan_constituents_and_collapse(g):
    c, s = g.character(chi=1), g.character(sigma=1)
    atom = jordan_induced(c * s, s, 3)
    assert len(expr(atom).constituents()) == 3
    assert jordan_induced(c * s, s, 1) == principal_series(c * s, s)


# -- one-dimensional quotients --------------------------------------------------


def test_one_dim_quotients(g):
    s = g.character(sigma=1)
    nus = g.nu * s
    assert expr(OneDim(s)).one_dim_quotient_dim(s) == 1
    assert expr(OneDim(s)).one_dim_quotient_dim(nus) == 0
    assert expr(Steinberg(nus)).one_dim_quotient_dim(nus) == 0
    assert expr(StOneExt(nus)).one_dim_quotient_dim(nus) == 1
    assert expr(OneStExt(nus)).one_dim_quotient_dim(nus) == 0
    assert expr(NoCentralThree(s)).one_dim_quotient_dim(s) == 1
    assert expr(SelfExtStOne(nus)).one_dim_quotient_dim(nus) == 1
    c = g.character(chi=1)
    assert expr(SelfExtPrincipal(c * s, s)).one_dim_quotient_dim(s) == 0
    assert expr(CuspidalAtom(twist=g.nu, omega=s**2)).one_dim_quotient_dim(nus) == 0


def test_jordan_top_counts_layerwise(g):
    s = g.character(sigma=1)
    block = jordan_induced(half(g) * s, half(g, -1) * s, 2)
    # each layer is sigma*M_(St:1); the length-1 rule applies per layer
    assert expr(block).one_dim_quotient_dim(s) == 2
    assert expr(block).one_dim_quotient_dim(g.nu * s) == 0


# -- central characters ---------------------------------------------------------


def test_atom_central_characters(g):
    c, s = g.character(chi=1), g.character(sigma=1)
    assert central_character(OneDim(s)) == s**2
    assert central_character(principal_series(c * s, s)) == c * s**2
    assert central_character(NoCentralThree(s)) is None
    assert central_character(CuspidalAtom(twist=g.nu, omega=c)) == g.nu**2 * c


# -- j_! i_* central specializations ---------------------------------------------


def test_jshriek_single_block(g):
    s = g.character(sigma=1)
    got = jshriek_specialization(JordanModule.from_characters([s]), s**2)
    # sigma nu^{-1/2} x sigma^{-1} nu^{1/2} sigma^2 normalizes to sigma*M_(1:St)
    assert got == expr(OneStExt(s))


def test_jshriek_model_point_of_iib(g):
    c, s = g.character(chi=1), g.character(sigma=1)
    a = g.nu * c * s
    mu = g.nu**2 * c**2 * s**2
    got = jshriek_specialization(JordanModule.from_characters([a]), mu)
    assert got == expr(OneStExt(g.nu * c * s))
    # direct substitution into the lemma formula chi nu^{-1/2} x chi^{-1} nu^{1/2} mu
    formula = expr(
        principal_series(a / half(g), a.inverse() * half(g) * mu)
    )
    assert got.constituents() == formula.constituents()


def test_jshriek_zero(g):
    assert jshriek_specialization(JordanModule.zero(), g.one).is_zero


# -- Euler characteristics --------------------------------------------------------


def test_euler_s2_plus_jistar(g):
    s = g.character(sigma=1)
    x = MirabolicExpr(
        [GelfandGraev(), ShriekStar(JordanModule.from_characters([g.nu * s]))]
    )
    assert euler_characteristic(x, GENERIC_PRINCIPAL_SERIES) == 1


def test_euler_jistar_vanishes(g):
    s = g.character(sigma=1)
    x = MirabolicExpr([ShriekStar(JordanModule.from_characters([s, g.nu * s]))])
    assert euler_characteristic(x, GENERIC_PRINCIPAL_SERIES) == 0
    assert euler_characteristic(x, ONE_DIMENSIONAL) == 0


def test_euler_s2_against_one_dimensional(g):
    x = MirabolicExpr([GelfandGraev()])
    assert euler_characteristic(x, ONE_DIMENSIONAL) == 0
    assert euler_characteristic(x, GENERIC_PRINCIPAL_SERIES) == 1


def test_euler_istar_vanishes(g):
    s = g.character(sigma=1)
    x = MirabolicExpr([StarPush(expr(Steinberg(s))), StarPush(None)])
    assert euler_characteristic(x, GENERIC_PRINCIPAL_SERIES) == 0


# -- rendering --------------------------------------------------------------------


def test_expr_rendering(g):
    s = g.character(sigma=1)
    module = expr(OneDim(g.nu**2 * s), NoCentralThree(g.nu * s))
    assert module.render() == "(nu^{2}*sigma o det) + nu*sigma*M^nc_(1:St:1)"
    assert Gl2ModuleExpr.zero().render() == "0"


def test_jordan_module_rendering(g):
    s = g.character(sigma=1)
    blocks = JordanModule.from_characters([g.nu * s, g.nu * s, s])
    assert blocks.render() == "nu*sigma^(2) + sigma"
