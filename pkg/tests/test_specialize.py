from fractions import Fraction

import pytest

from lspin.corpus import ALL_CASES, CASES_BY_ID
from lspin.engine import hom_dim, probe_characters
from lspin.errors import GenericInput
from lspin.gl2 import (
    OneDim,
    SelfExtPrincipal,
    SelfExtStOne,
    StOneExt,
    Steinberg,
    central_character as atom_central_character,
    expr,
)
from lspin.specialize import central_specialization, jshriek_of_a

HALF = Fraction(1, 2)


def test_ivd_specializations():
    pi = CASES_BY_ID["IVd"].build()
    sigma = pi["sigma"]
    assert central_specialization(pi, sigma**2) == expr(OneDim(sigma))
    assert central_specialization(pi, pi.group.nu * sigma**2).is_zero


def test_vib_steinberg_branch():
    pi = CASES_BY_ID["VIb"].build()
    sigma, nu = pi["sigma"], pi.group.nu
    assert central_specialization(pi, nu**2 * sigma**2) == expr(Steinberg(nu * sigma))
    assert central_specialization(pi, sigma**2).is_zero


def test_iiib_special_self_extension():
    pi = CASES_BY_ID["IIIb:chi1=nu"].build()
    sigma, nu = pi["sigma"], pi.group.nu
    assert central_specialization(pi, nu**2 * sigma**2) == expr(SelfExtStOne(nu * sigma))


def test_iiib_model_point_self_extension():
    pi = CASES_BY_ID["IIIb"].build()
    chi, sigma = pi["chi"], pi["sigma"]
    h = pi.group.nu_power(HALF)
    zeta = central_specialization(pi, pi.group.nu * chi * sigma**2)
    assert zeta == expr(SelfExtPrincipal(h * chi * sigma, h * sigma))


def test_quadratic_branch_selected_by_relation():
    pi = CASES_BY_ID["IIIb:chi^2=1"].build()
    chi, sigma, nu = pi["chi"], pi["sigma"], pi.group.nu
    zeta = central_specialization(pi, nu**2 * sigma**2)
    assert zeta == expr(StOneExt(nu * chi * sigma), StOneExt(nu * sigma))


def test_generic_input_rejected():
    pi = CASES_BY_ID["VIa"].build()
    with pytest.raises(GenericInput):
        central_specialization(pi, pi["sigma"] ** 2)
    with pytest.raises(GenericInput):
        jshriek_of_a(pi, pi["sigma"] ** 2)


def test_constituent_match_all_branches():
    # zeta_mu(Pi) has the constituents of zeta_mu(j_!i_*(A)) whenever A != 0
    for case in ALL_CASES:
        if case.zeta_mus is None:
            continue
        pi = case.build()
        from lspin.catalog import gk_decomposition

        if gk_decomposition(pi).a.is_zero:
            continue
        for mu in case.zeta_mus(pi):
            zeta = central_specialization(pi, mu)
            assert zeta.constituents() == jshriek_of_a(pi, mu).constituents(), (
                case.case_id,
                mu.render(),
            )


def test_central_character_coherence():
    for case in ALL_CASES:
        if case.zeta_mus is None:
            continue
        pi = case.build()
        for mu in case.zeta_mus(pi):
            for atom in central_specialization(pi, mu).atoms:
                cc = atom_central_character(atom)
                assert cc is not None, f"{case.case_id}: M^nc leaked into zeta_mu"
                assert cc == mu, (case.case_id, atom.render())


def test_quotient_dims_match_hom_dims_spot():
    ivd = CASES_BY_ID["IVd"].build()
    sigma = ivd["sigma"]
    assert central_specialization(ivd, sigma**2).one_dim_quotient_dim(sigma) == 1
    assert hom_dim(ivd, sigma) == 1

    iiib = CASES_BY_ID["IIIb"].build()
    nus = iiib.group.nu * iiib["sigma"]
    zeta = central_specialization(iiib, nus**2)
    assert zeta.one_dim_quotient_dim(nus) == 1 == hom_dim(iiib, nus)

    vib = CASES_BY_ID["VIb"].build()
    nus = vib.group.nu * vib["sigma"]
    zeta = central_specialization(vib, nus**2)
    assert zeta.one_dim_quotient_dim(nus) == 0 == hom_dim(vib, nus)


def test_probe_floor():
    for case in ALL_CASES:
        pi = case.build()
        assert len(probe_characters(pi)) >= 81, case.case_id
