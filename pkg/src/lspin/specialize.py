"""Central specializations zeta_mu of the mirabolic restriction, per type.

For a non-generic representation the maximal quotient on which the center of
Gl(2) acts by mu has finite length, and its module shape is an exact table:
special values of mu produce indecomposable extensions whose one-dimensional
tops carry the equivariant functionals, while off the special branches the
shape agrees with the specialization of j_! i_*(A).  Branch equality tests
are decided by the session's relation system; coincidences not forced by a
declared relation fall to the generic row.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import ReprSpec, _table2_a
from .chars import Character
from .errors import GenericInput
from .gl2 import (
    CuspidalAtom,
    Gl2ModuleExpr,
    JordanModule,
    OneDim,
    SelfExtPrincipal,
    SelfExtStOne,
    StOneExt,
    OneStExt,
    Steinberg,
    expr,
    jshriek_specialization,
    principal_series,
)


def _nu(pi: ReprSpec, a) -> Character:
    return pi.group.nu_power(Fraction(a))


def central_specialization(pi: ReprSpec, mu: Character) -> Gl2ModuleExpr:
    """zeta_mu of the mirabolic restriction of a non-generic representation."""
    if pi.is_generic:
        raise GenericInput(
            f"type {pi.tag} is generic; its central specialization has infinite length"
        )
    p = pi.params
    s = p.get("sigma")
    nu = pi.group.nu
    h = Fraction(1, 2)
    tag = pi.tag

    if tag == "IIb":
        c = p["chi"]
        return expr(principal_series(_nu(pi, h) * c * s, _nu(pi, -h) / c / s * mu))

    if tag == "IIIb":
        c = p["chi"]
        if c == nu:
            if mu == _nu(pi, 4) * s**2:
                return expr(
                    principal_series(_nu(pi, h) * s, _nu(pi, Fraction(7, 2)) * s),
                    StOneExt(_nu(pi, 2) * s),
                )
            if mu == _nu(pi, 2) * s**2:
                return expr(SelfExtStOne(nu * s))
            return expr(
                principal_series(_nu(pi, h) * s, _nu(pi, -h) / s * mu),
                principal_series(_nu(pi, Fraction(3, 2)) * s, _nu(pi, Fraction(-3, 2)) / s * mu),
            )
        if mu == nu * c * s**2:
            return expr(SelfExtPrincipal(_nu(pi, h) * c * s, _nu(pi, h) * s))
        if (c**2).is_trivial and mu == _nu(pi, 2) * s**2:
            return expr(StOneExt(nu * c * s), StOneExt(nu * s))
        if mu == _nu(pi, 2) * s**2:
            return expr(
                StOneExt(nu * s),
                principal_series(_nu(pi, h) * c * s, _nu(pi, Fraction(3, 2)) / c * s),
            )
        if mu == _nu(pi, 2) * c**2 * s**2:
            return expr(
                StOneExt(nu * c * s),
                principal_series(_nu(pi, h) * s, _nu(pi, Fraction(3, 2)) * c**2 * s),
            )
        return expr(
            principal_series(_nu(pi, h) * s, _nu(pi, -h) / s * mu),
            principal_series(_nu(pi, h) * c * s, _nu(pi, -h) / c / s * mu),
        )

    if tag == "IVb":
        if mu == s**2:
            return expr(OneStExt(s))
        return expr(principal_series(_nu(pi, h) * s, _nu(pi, -h) / s * mu))

    if tag == "IVc":
        if mu == _nu(pi, 4) * s**2:
            return expr(
                principal_series(_nu(pi, -h) * s, _nu(pi, Fraction(9, 2)) * s),
                StOneExt(_nu(pi, 2) * s),
            )
        if mu == nu * s**2:
            return expr(SelfExtPrincipal(_nu(pi, Fraction(3, 2)) * s, _nu(pi, -h) * s))
        return expr(
            principal_series(_nu(pi, -h) * s, _nu(pi, h) / s * mu),
            principal_series(_nu(pi, Fraction(3, 2)) * s, _nu(pi, Fraction(-3, 2)) / s * mu),
        )

    if tag == "IVd":
        if mu == s**2:
            return expr(OneDim(s))
        return Gl2ModuleExpr.zero()

    if tag == "Vb":
        return expr(principal_series(_nu(pi, h) * s, _nu(pi, -h) / s * mu))

    if tag == "Vc":
        # the Vb row under sigma -> xi*sigma
        x = p["xi"]
        return expr(principal_series(_nu(pi, h) * x * s, _nu(pi, -h) * x / s * mu))

    if tag == "Vd":
        x = p["xi"]
        if mu == _nu(pi, 2) * x * s**2:
            return expr(principal_series(nu * s, nu * x * s))
        return Gl2ModuleExpr.zero()

    if tag == "VIb":
        if mu == _nu(pi, 2) * s**2:
            return expr(Steinberg(nu * s))
        return Gl2ModuleExpr.zero()

    if tag in ("VIc", "VId"):
        if mu == _nu(pi, 2) * s**2:
            return expr(StOneExt(nu * s))
        return expr(principal_series(_nu(pi, h) * s, _nu(pi, -h) / s * mu))

    if tag == "VIIIb":
        w = p["omega_pi"]
        if mu == _nu(pi, 2) * w:
            return expr(CuspidalAtom(twist=nu, omega=w))
        return Gl2ModuleExpr.zero()

    if tag == "IXb":
        w = p["omega_pi"]
        if mu == nu * w:
            return expr(CuspidalAtom(twist=_nu(pi, h) * p["xi"], omega=w))
        return Gl2ModuleExpr.zero()

    if tag == "XIb":
        return expr(principal_series(_nu(pi, h) * s, _nu(pi, -h) / s * mu))

    # CuspNonGen: all Jacquet modules of a cuspidal representation vanish
    return Gl2ModuleExpr.zero()


def jshriek_of_a(pi: ReprSpec, mu: Character) -> Gl2ModuleExpr:
    """zeta_mu(j_! i_*(A)) for the catalog's A column of a non-generic type."""
    if pi.is_generic:
        raise GenericInput(f"type {pi.tag} is generic; A is derived data there")
    blocks = JordanModule.from_characters(_table2_a(pi))
    return jshriek_specialization(blocks, mu)
