"""Catalog of irreducible GSp(4) representation types.

For each Sally-Tadic type tag this module records: the named character
parameters, genericity, the central character, the eigencharacter multiset
Delta_0 (with its nu^{+-1/2} shifts Delta_+ and Delta_-), split Bessel
admissibility, the Gelfand-Kazhdan data (m_Pi, A, B), and the total L-factor
column.  Non-generic Delta_0 is derived from the A column; generic Delta_0
ships as an embedded table tagged derived and is confirmed by the
decomposition oracle in the test suite.

Cuspidal Gl(2) data are opaque: only the central character omega_pi and the
cuspidal flag enter any computation, so types VII/VIII/IX/X take omega_pi as
a character parameter and the XI types (normalized with omega_pi = 1) take
only sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chars import Character, CharacterGroup, sort_key
from .errors import ConstraintViolation, NoBesselModel, UnknownType
from .gl2 import (
    CuspidalAtom,
    GelfandGraev,
    Gl2ModuleExpr,
    JordanModule,
    MirabolicExpr,
    OneDim,
    NoCentralThree,
    ShriekStar,
    StarPush,
    Steinberg,
    expr,
    jordan_induced,
    principal_series,
)

TAGS: tuple[str, ...] = (
    "I", "IIa", "IIb", "IIIa", "IIIb",
    "IVa", "IVb", "IVc", "IVd",
    "Va", "Vb", "Vc", "Vd",
    "VIa", "VIb", "VIc", "VId",
    "VII", "VIIIa", "VIIIb", "IXa", "IXb",
    "X", "XIa", "XIb",
    "CuspGen", "CuspNonGen",
)

GENERIC_TAGS = frozenset(
    {"I", "IIa", "IIIa", "IVa", "Va", "VIa", "VII", "VIIIa", "IXa", "X", "XIa", "CuspGen"}
)

#: ordered parameter names per type, used for positional construction
PARAM_NAMES: dict[str, tuple[str, ...]] = {
    "I": ("chi1", "chi2", "sigma"),
    "IIa": ("chi", "sigma"),
    "IIb": ("chi", "sigma"),
    "IIIa": ("chi", "sigma"),
    "IIIb": ("chi", "sigma"),
    "IVa": ("sigma",),
    "IVb": ("sigma",),
    "IVc": ("sigma",),
    "IVd": ("sigma",),
    "Va": ("xi", "sigma"),
    "Vb": ("xi", "sigma"),
    "Vc": ("xi", "sigma"),
    "Vd": ("xi", "sigma"),
    "VIa": ("sigma",),
    "VIb": ("sigma",),
    "VIc": ("sigma",),
    "VId": ("sigma",),
    "VII": ("chi", "omega_pi"),
    "VIIIa": ("omega_pi",),
    "VIIIb": ("omega_pi",),
    "IXa": ("xi", "omega_pi"),
    "IXb": ("xi", "omega_pi"),
    "X": ("omega_pi", "sigma"),
    "XIa": ("sigma",),
    "XIb": ("sigma",),
    "CuspGen": ("omega",),
    "CuspNonGen": ("omega",),
}


class ReprSpec:
    """An irreducible representation: type tag plus named character parameters.

    Construction enforces the type-mandated constraints: xi of exact order two
    for the V and IX families, the type I irreducibility disequalities, and
    the IIIb normalization chi = nu^{-1} -> chi = nu (twisting sigma).
    """

    def __init__(self, tag: str, **params: Character):
        if tag not in PARAM_NAMES:
            raise UnknownType(f"unknown representation type tag {tag!r}")
        expected = PARAM_NAMES[tag]
        if tuple(sorted(params)) != tuple(sorted(expected)):
            raise ConstraintViolation(
                f"type {tag} takes parameters {expected}, got {tuple(sorted(params))}"
            )
        groups = {chi.group for chi in params.values()}
        if len(groups) != 1:
            raise ConstraintViolation("all parameters must live in one character group")
        self.tag = tag
        self.group: CharacterGroup = next(iter(groups))
        self.params = dict(params)
        self._validate()

    @classmethod
    def from_positional(cls, tag: str, args: list[Character]) -> "ReprSpec":
        if tag not in PARAM_NAMES:
            raise UnknownType(f"unknown representation type tag {tag!r}")
        names = PARAM_NAMES[tag]
        if len(args) != len(names):
            raise ConstraintViolation(
                f"type {tag} takes {len(names)} parameter(s) {names}, got {len(args)}"
            )
        return cls(tag, **dict(zip(names, args)))

    def _validate(self) -> None:
        nu = self.group.nu
        if self.tag in ("Va", "Vb", "Vc", "Vd", "IXa", "IXb"):
            xi = self.params["xi"]
            if not (xi**2).is_trivial:
                raise ConstraintViolation(f"type {self.tag} requires xi^2 = 1, got xi = {xi}")
            if xi.is_trivial:
                raise ConstraintViolation(f"type {self.tag} requires xi != 1")
        if self.tag == "I":
            c1, c2 = self.params["chi1"], self.params["chi2"]
            for chi, label in ((c1, "chi1"), (c2, "chi2")):
                if chi == nu or chi == nu.inverse():
                    raise ConstraintViolation(
                        f"type I requires {label} != nu^(+-1); these parameters "
                        "belong to types IIIa/IIIb"
                    )
            for chi, label in ((c1 * c2, "chi1*chi2"), (c1 / c2, "chi1/chi2")):
                if chi == nu or chi == nu.inverse():
                    raise ConstraintViolation(
                        f"type I requires {label} != nu^(+-1); these parameters "
                        "belong to types IIa/IIb"
                    )
        if self.tag == "IIIb" and self.params["chi"] == nu.inverse():
            # nu^{-1} |x (sigma o det) ~ nu |x (nu^{-1} sigma o det)
            self.params = {
                "chi": nu,
                "sigma": nu.inverse() * self.params["sigma"],
            }

    @property
    def is_generic(self) -> bool:
        return self.tag in GENERIC_TAGS

    def __getitem__(self, name: str) -> Character:
        return self.params[name]

    def __eq__(self, other):
        if not isinstance(other, ReprSpec):
            return NotImplemented
        return self.tag == other.tag and self.params == other.params

    def __hash__(self):
        return hash((self.tag, tuple(sorted(self.params.items(), key=lambda kv: kv[0]))))

    def render(self) -> str:
        args = ", ".join(self.params[n].render() for n in PARAM_NAMES[self.tag])
        return f"{self.tag}({args})"

    def __repr__(self):
        return f"<repr {self.render()}>"


@dataclass(frozen=True)
class BesselDatum:
    """A split Bessel datum Lambda = rho boxtimes rho*, rho* = omega rho^{-1}."""

    rho: Character
    rho_star: Character
    admissible: bool

    def render(self) -> str:
        status = "" if self.admissible else " (no Bessel model)"
        return f"rho = {self.rho} ; rho* = {self.rho_star}{status}"


@dataclass(frozen=True)
class GKData:
    """Gelfand-Kazhdan data: 0 -> j_!i_*(A) -> Pi^bar/S_2^m -> i_*(B) -> 0."""

    whittaker_multiplicity: int
    a: JordanModule
    b: Optional[Gl2ModuleExpr]

    def mirabolic_expression(self) -> MirabolicExpr:
        atoms: list = [GelfandGraev()] * self.whittaker_multiplicity
        atoms.append(ShriekStar(self.a))
        atoms.append(StarPush(self.b))
        return MirabolicExpr(atoms)


def central_character(pi: ReprSpec) -> Character:
    """The central character omega, from the inducing data of each type."""
    p = pi.params
    tag = pi.tag
    if tag == "I":
        return p["chi1"] * p["chi2"] * p["sigma"] ** 2
    if tag in ("IIa", "IIb"):
        return p["chi"] ** 2 * p["sigma"] ** 2
    if tag in ("IIIa", "IIIb"):
        return p["chi"] * p["sigma"] ** 2
    if tag in ("IVa", "IVb", "IVc", "IVd", "VIa", "VIb", "VIc", "VId", "XIa", "XIb"):
        return p["sigma"] ** 2
    if tag in ("Va", "Vb", "Vc", "Vd"):
        return p["xi"] ** 2 * p["sigma"] ** 2
    if tag == "VII":
        return p["chi"] * p["omega_pi"]
    if tag in ("VIIIa", "VIIIb"):
        return p["omega_pi"]
    if tag in ("IXa", "IXb"):
        return p["xi"] * p["omega_pi"]
    if tag == "X":
        return p["omega_pi"] * p["sigma"] ** 2
    return p["omega"]


def _nu(pi: ReprSpec, a) -> Character:
    return pi.group.nu_power(Fraction(a))


def _table2_a(pi: ReprSpec) -> list[Character]:
    """The A column of the non-generic module table (single Jordan blocks)."""
    p, tag = pi.params, pi.tag
    if tag == "IIb":
        return [_nu(pi, 1) * p["chi"] * p["sigma"]]
    if tag == "IIIb":
        return [_nu(pi, 1) * p["sigma"], _nu(pi, 1) * p["chi"] * p["sigma"]]
    if tag in ("IVb", "VIc", "VId", "XIb"):
        return [_nu(pi, 1) * p["sigma"]]
    if tag == "IVc":
        return [p["sigma"], _nu(pi, 2) * p["sigma"]]
    if tag == "Vb":
        return [_nu(pi, 1) * p["sigma"]]
    if tag == "Vc":
        return [_nu(pi, 1) * p["xi"] * p["sigma"]]
    # IVd, Vd, VIb, VIIIb, IXb, CuspNonGen
    return []


def _generic_delta0(pi: ReprSpec) -> list[Character]:
    """Embedded Delta_0 rows for generic types (derived; oracle-confirmed)."""
    p, tag = pi.params, pi.tag
    h = Fraction(1, 2)
    if tag == "I":
        s = p["sigma"]
        return [s, p["chi1"] * s, p["chi2"] * s, p["chi1"] * p["chi2"] * s]
    if tag == "IIa":
        s = p["sigma"]
        return [s, _nu(pi, h) * p["chi"] * s, p["chi"] ** 2 * s]
    if tag == "IIIa":
        s = p["sigma"]
        return [_nu(pi, h) * s, _nu(pi, h) * p["chi"] * s]
    if tag == "IVa":
        return [_nu(pi, Fraction(3, 2)) * p["sigma"]]
    if tag == "Va":
        s = p["sigma"]
        return [_nu(pi, h) * s, _nu(pi, h) * p["xi"] * s]
    if tag == "VIa":
        chi = _nu(pi, h) * p["sigma"]
        return [chi, chi]
    if tag == "X":
        return [p["sigma"], p["omega_pi"] * p["sigma"]]
    if tag == "XIa":
        return [_nu(pi, h) * p["sigma"]]
    # VII, VIIIa, IXa, CuspGen
    return []


def delta0(pi: ReprSpec) -> tuple[Character, ...]:
    """The multiset Delta_0 of twisted Siegel-Jacquet eigencharacters."""
    if pi.is_generic:
        chars = _generic_delta0(pi)
    else:
        shift = _nu(pi, Fraction(-3, 2))
        chars = [shift * chi for chi in _table2_a(pi)]
    return tuple(sorted(chars, key=sort_key))


def delta_plus(pi: ReprSpec) -> tuple[Character, ...]:
    half = _nu(pi, Fraction(1, 2))
    return tuple(sorted((half * chi for chi in delta0(pi)), key=sort_key))


def delta_minus(pi: ReprSpec) -> tuple[Character, ...]:
    half = _nu(pi, Fraction(-1, 2))
    return tuple(sorted((half * chi for chi in delta0(pi)), key=sort_key))


def admissible_bessel_set(pi: ReprSpec) -> Optional[tuple[Character, ...]]:
    """None for generic types (every rho is admissible); else Delta_+ as a set."""
    if pi.is_generic:
        return None
    seen: list[Character] = []
    for chi in delta_plus(pi):
        if chi not in seen:
            seen.append(chi)
    return tuple(sorted(seen, key=sort_key))


def bessel_datum(pi: ReprSpec, rho: Character) -> BesselDatum:
    omega = central_character(pi)
    admissible = pi.is_generic or rho in delta_plus(pi)
    return BesselDatum(rho=rho, rho_star=omega / rho, admissible=admissible)


def admissible_bessel_data(pi: ReprSpec) -> list[BesselDatum]:
    """All admissible Bessel data for a non-generic pi (finite set).

    Raises NoBesselModel when the type has none; generic callers should pick
    their own rho (every choice is admissible).
    """
    rhos = admissible_bessel_set(pi)
    if rhos is None:
        raise NoBesselModel(f"type {pi.tag} is generic; any rho is admissible")
    if not rhos:
        raise NoBesselModel(f"type {pi.tag} admits no split Bessel model")
    return [bessel_datum(pi, rho) for rho in rhos]


def _table2_b(pi: ReprSpec) -> Gl2ModuleExpr:
    """The B column of the non-generic module table, stored verbatim."""
    p, tag = pi.params, pi.tag
    s = p.get("sigma")
    h = Fraction(1, 2)
    if tag == "IIb":
        chi = p["chi"]
        if (chi**2).is_trivial:
            return expr(jordan_induced(_nu(pi, h) * chi * s, _nu(pi, 1) * s, 2))
        return expr(
            principal_series(_nu(pi, h) * chi * s, _nu(pi, 1) * chi**2 * s),
            principal_series(_nu(pi, h) * chi * s, _nu(pi, 1) * s),
        )
    if tag == "IIIb":
        chi = p["chi"]
        if chi == pi.group.nu:
            return expr(OneDim(_nu(pi, 2) * s), NoCentralThree(_nu(pi, 1) * s))
        return expr(
            OneDim(_nu(pi, 1) * chi * s),
            OneDim(_nu(pi, 1) * s),
            principal_series(_nu(pi, h) * chi * s, _nu(pi, h) * s),
        )
    if tag == "IVb":
        return expr(
            Steinberg(s),
            principal_series(_nu(pi, Fraction(5, 2)) * s, _nu(pi, h) * s),
        )
    if tag == "IVc":
        return expr(
            OneDim(_nu(pi, 2) * s),
            principal_series(_nu(pi, Fraction(3, 2)) * s, _nu(pi, -h) * s),
        )
    if tag == "IVd":
        return expr(OneDim(s))
    if tag == "Vb":
        return expr(principal_series(_nu(pi, Fraction(3, 2)) * p["xi"] * s, _nu(pi, h) * s))
    if tag == "Vc":
        # Vb under sigma -> xi*sigma
        return expr(principal_series(_nu(pi, Fraction(3, 2)) * s, _nu(pi, h) * p["xi"] * s))
    if tag == "Vd":
        return expr(principal_series(_nu(pi, 1) * p["xi"] * s, _nu(pi, 1) * s))
    if tag == "VIb":
        return expr(Steinberg(_nu(pi, 1) * s))
    if tag == "VIc":
        return expr(OneDim(_nu(pi, 1) * s))
    if tag == "VId":
        return expr(
            OneDim(_nu(pi, 1) * s),
            principal_series(_nu(pi, h) * s, _nu(pi, h) * s),
        )
    if tag == "VIIIb":
        return expr(CuspidalAtom(twist=_nu(pi, 1), omega=p["omega_pi"]))
    if tag == "IXb":
        return expr(CuspidalAtom(twist=_nu(pi, h) * p["xi"], omega=p["omega_pi"]))
    # XIb, CuspNonGen
    return Gl2ModuleExpr.zero()


def gk_decomposition(pi: ReprSpec) -> GKData:
    """(m_Pi, A, B); B is not encoded (None) for generic types."""
    m = 1 if pi.is_generic else 0
    if pi.is_generic:
        shift = _nu(pi, Fraction(3, 2))
        a = JordanModule.from_characters(shift * chi for chi in delta0(pi))
        return GKData(m, a, None)
    a = JordanModule.from_characters(_table2_a(pi))
    return GKData(m, a, _table2_b(pi))


def total_lfactor_characters(pi: ReprSpec) -> Optional[list[Character]]:
    """The total L-factor column as characters, or None for 'none' rows."""
    p, tag = pi.params, pi.tag
    s = p.get("sigma")
    h = Fraction(1, 2)
    if tag == "I":
        return [s, p["chi1"] * s, p["chi2"] * s, p["chi1"] * p["chi2"] * s]
    if tag == "IIa":
        return [s, p["chi"] ** 2 * s, _nu(pi, h) * p["chi"] * s]
    if tag == "IIb":
        c = p["chi"]
        return [s, c**2 * s, _nu(pi, -h) * c * s, _nu(pi, h) * c * s]
    if tag == "IIIa":
        return [_nu(pi, h) * p["chi"] * s, _nu(pi, h) * s]
    if tag == "IIIb":
        c = p["chi"]
        return [_nu(pi, -h) * c * s, _nu(pi, -h) * s, _nu(pi, h) * c * s, _nu(pi, h) * s]
    if tag == "IVa":
        return [_nu(pi, Fraction(3, 2)) * s]
    if tag == "IVb":
        return [_nu(pi, Fraction(3, 2)) * s, _nu(pi, -h) * s]
    if tag == "IVc":
        return [_nu(pi, h) * s, _nu(pi, Fraction(-3, 2)) * s, _nu(pi, Fraction(3, 2)) * s]
    if tag == "Va":
        return [_nu(pi, h) * s, _nu(pi, h) * p["xi"] * s]
    if tag == "Vb":
        return [_nu(pi, -h) * s, _nu(pi, h) * p["xi"] * s, _nu(pi, h) * s]
    if tag == "Vc":
        x = p["xi"]
        return [_nu(pi, h) * s, _nu(pi, -h) * x * s, _nu(pi, h) * x * s]
    if tag == "VIa":
        return [_nu(pi, h) * s, _nu(pi, h) * s]
    if tag == "VIc":
        return [_nu(pi, -h) * s, _nu(pi, h) * s, _nu(pi, h) * s]
    if tag == "VId":
        return [_nu(pi, -h) * s, _nu(pi, -h) * s, _nu(pi, h) * s, _nu(pi, h) * s]
    if tag in ("VII", "VIIIa", "IXa", "CuspGen"):
        return []
    if tag == "X":
        return [s, p["omega_pi"] * s]
    if tag == "XIa":
        return [_nu(pi, h) * s]
    if tag == "XIb":
        return [_nu(pi, -h) * s, _nu(pi, h) * s]
    # IVd, Vd, VIb, VIIIb, IXb, CuspNonGen: no split Bessel model
    return None
