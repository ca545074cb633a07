"""Formal Grothendieck-style calculus of finite-length Gl(2) modules.

Atoms follow the Bernstein-Zelevinsky conventions: a x b denotes the
normalized principal series induced from a nu^{1/2} boxtimes b nu^{-1/2},
irreducible iff a/b is not nu^{+-1}.  The factory :func:`principal_series`
canonicalizes the reducible cases to the indecomposable length-two modules

    nu^{1/2} chi x nu^{-1/2} chi = chi M_(St:1)   (socle St(chi), top one-dim)
    nu^{-1/2} chi x nu^{1/2} chi = chi M_(1:St)   (socle one-dim, top St(chi))

so Table-style rows written uniformly "for all mu" specialize to the correct
module shape automatically.  The mirabolic (Gl_a(2)) layer records the
Gelfand-Kazhdan filtration atoms S_2, j_!i_*(A), i_*(B) with their Euler
characteristic contributions m_Y, 0, 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .chars import Character, sort_key
from .errors import MalformedAtom

# ---------------------------------------------------------------------------
# Gl(2) atoms


@dataclass(frozen=True)
class OneDim:
    """The character chi o det."""

    chi: Character

    def render(self) -> str:
        return f"({self.chi} o det)"


@dataclass(frozen=True)
class Steinberg:
    """The twisted Steinberg representation St(chi)."""

    chi: Character

    def render(self) -> str:
        return "St" if self.chi.is_trivial else f"{self.chi}*St"


@dataclass(frozen=True)
class PrincipalSeries:
    """Irreducible a x b; construct via :func:`principal_series`."""

    a: Character
    b: Character

    def render(self) -> str:
        return f"{self.a} x {self.b}"


@dataclass(frozen=True)
class StOneExt:
    """chi M_(St:1): the unique indecomposable extension of chi o det by St(chi)."""

    chi: Character

    def render(self) -> str:
        return "M_(St:1)" if self.chi.is_trivial else f"{self.chi}*M_(St:1)"


@dataclass(frozen=True)
class OneStExt:
    """chi M_(1:St): socle chi o det, top St(chi)."""

    chi: Character

    def render(self) -> str:
        return "M_(1:St)" if self.chi.is_trivial else f"{self.chi}*M_(1:St)"


@dataclass(frozen=True)
class NoCentralThree:
    """chi M^nc_(1:St:1): length three, socle and top chi o det, no central character."""

    chi: Character

    def render(self) -> str:
        return "M^nc_(1:St:1)" if self.chi.is_trivial else f"{self.chi}*M^nc_(1:St:1)"


@dataclass(frozen=True)
class SelfExtPrincipal:
    """M^c: the self-extension of an irreducible a x b admitting a central character."""

    a: Character
    b: Character

    def __post_init__(self):
        ratio = self.a / self.b
        nu = self.a.group.nu
        if ratio == nu or ratio == nu.inverse():
            raise MalformedAtom("self-extension base principal series must be irreducible")

    def render(self) -> str:
        base = f"{self.a} x {self.b}"
        return f"M^c_({base}:{base})"


@dataclass(frozen=True)
class SelfExtStOne:
    """chi M^c_(St:1:St:1): the self-extension of chi M_(St:1) with a central character."""

    chi: Character

    def render(self) -> str:
        return "M^c_(St:1:St:1)" if self.chi.is_trivial else f"{self.chi}*M^c_(St:1:St:1)"


@dataclass(frozen=True)
class JordanInduced:
    """a x b^(n): induced from a Jordan block of length n on the second character."""

    a: Character
    b: Character
    length: int

    def render(self) -> str:
        return f"{self.a} x {self.b}^({self.length})"


@dataclass(frozen=True)
class CuspidalAtom:
    """An opaque irreducible cuspidal Gl(2) atom, twisted, with known central character."""

    twist: Character
    omega: Character
    name: str = "pi_c"

    def render(self) -> str:
        return self.name if self.twist.is_trivial else f"{self.twist}*{self.name}"


Gl2Atom = Union[
    OneDim,
    Steinberg,
    PrincipalSeries,
    StOneExt,
    OneStExt,
    NoCentralThree,
    SelfExtPrincipal,
    SelfExtStOne,
    JordanInduced,
    CuspidalAtom,
]


def principal_series(a: Character, b: Character) -> Gl2Atom:
    """a x b, canonicalized to M_(St:1)/M_(1:St) when the ratio is nu^{+-1}."""
    nu = a.group.nu
    ratio = a / b
    half = a.group.nu_power(Fraction(1, 2))
    if ratio == nu:
        return StOneExt(a / half)
    if ratio == nu.inverse():
        return OneStExt(a * half)
    return PrincipalSeries(a, b)


def jordan_induced(a: Character, b: Character, length: int) -> Gl2Atom:
    if length < 1:
        raise MalformedAtom("Jordan length must be >= 1")
    if length == 1:
        return principal_series(a, b)
    return JordanInduced(a, b, length)


def central_character(atom: Gl2Atom) -> Optional[Character]:
    """The central character of the atom, or None (M^nc has none)."""
    if isinstance(atom, (OneDim, Steinberg, StOneExt, OneStExt, SelfExtStOne)):
        return atom.chi**2
    if isinstance(atom, (PrincipalSeries, SelfExtPrincipal, JordanInduced)):
        return atom.a * atom.b
    if isinstance(atom, CuspidalAtom):
        return atom.twist**2 * atom.omega
    if isinstance(atom, NoCentralThree):
        return None
    raise MalformedAtom(f"unknown atom {atom!r}")


def _canonical_ps(a: Character, b: Character) -> PrincipalSeries:
    # a x b and b x a are isomorphic when irreducible; sort for multiset use
    lo, hi = sorted((a, b), key=sort_key)
    return PrincipalSeries(lo, hi)


def atom_constituents(atom: Gl2Atom) -> tuple[Gl2Atom, ...]:
    """Irreducible constituents with multiplicity, in canonical order."""
    if isinstance(atom, (OneDim, Steinberg, CuspidalAtom)):
        return (atom,)
    if isinstance(atom, PrincipalSeries):
        return (_canonical_ps(atom.a, atom.b),)
    if isinstance(atom, (StOneExt, OneStExt)):
        return (OneDim(atom.chi), Steinberg(atom.chi))
    if isinstance(atom, NoCentralThree):
        return (OneDim(atom.chi), OneDim(atom.chi), Steinberg(atom.chi))
    if isinstance(atom, SelfExtPrincipal):
        return 2 * (_canonical_ps(atom.a, atom.b),)
    if isinstance(atom, SelfExtStOne):
        return 2 * (OneDim(atom.chi), Steinberg(atom.chi))
    if isinstance(atom, JordanInduced):
        return atom.length * atom_constituents(principal_series(atom.a, atom.b))
    raise MalformedAtom(f"unknown atom {atom!r}")


def _top_one_dim(atom: Gl2Atom, rho: Character) -> int:
    """Multiplicity of (rho o det) in the maximal semisimple quotient."""
    if isinstance(atom, OneDim):
        return int(atom.chi == rho)
    if isinstance(atom, (Steinberg, PrincipalSeries, OneStExt, CuspidalAtom)):
        return 0
    if isinstance(atom, (StOneExt, NoCentralThree, SelfExtStOne)):
        return int(atom.chi == rho)
    if isinstance(atom, SelfExtPrincipal):
        return 0
    if isinstance(atom, JordanInduced):
        # layer-by-layer: each layer counts like its length-1 base
        layer = principal_series(atom.a, atom.b)
        return atom.length * _top_one_dim(layer, rho)
    raise MalformedAtom(f"unknown atom {atom!r}")


@dataclass(frozen=True)
class Gl2ModuleExpr:
    """A formal sum of Gl(2) atoms (the zero module is the empty sum)."""

    atoms: tuple[Gl2Atom, ...]

    def __init__(self, atoms: Iterable[Gl2Atom] = ()):
        object.__setattr__(self, "atoms", tuple(sorted(atoms, key=lambda a: a.render())))

    @staticmethod
    def zero() -> "Gl2ModuleExpr":
        return Gl2ModuleExpr(())

    @property
    def is_zero(self) -> bool:
        return not self.atoms

    def __add__(self, other: "Gl2ModuleExpr") -> "Gl2ModuleExpr":
        return Gl2ModuleExpr(self.atoms + other.atoms)

    def constituents(self) -> tuple[Gl2Atom, ...]:
        out: list[Gl2Atom] = []
        for atom in self.atoms:
            out.extend(atom_constituents(atom))
        return tuple(sorted(out, key=lambda a: a.render()))

    def one_dim_quotient_dim(self, rho: Character) -> int:
        """dim Hom(-, rho o det): one-dimensional tops matching rho, summed."""
        return sum(_top_one_dim(atom, rho) for atom in self.atoms)

    def render(self) -> str:
        if not self.atoms:
            return "0"
        return " + ".join(atom.render() for atom in self.atoms)

    def __str__(self):
        return self.render()


def expr(*atoms: Gl2Atom) -> Gl2ModuleExpr:
    return Gl2ModuleExpr(atoms)


# ---------------------------------------------------------------------------
# Finite-length Gl(1) modules (Jordan blocks)


@dataclass(frozen=True)
class JordanModule:
    """A finite-length Gl(1) module: a multiset of Jordan blocks (chi, length)."""

    blocks: tuple[tuple[Character, int], ...]

    def __init__(self, blocks: Iterable[tuple[Character, int]] = ()):
        object.__setattr__(
            self,
            "blocks",
            tuple(sorted(blocks, key=lambda bl: (sort_key(bl[0]), bl[1]))),
        )

    @staticmethod
    def from_characters(chars: Iterable[Character]) -> "JordanModule":
        """Group equal characters into single Jordan blocks (cyclic modules)."""
        counts: dict[Character, int] = {}
        for chi in chars:
            counts[chi] = counts.get(chi, 0) + 1
        return JordanModule(tuple(counts.items()))

    @staticmethod
    def zero() -> "JordanModule":
        return JordanModule(())

    @property
    def is_zero(self) -> bool:
        return not self.blocks

    def constituents(self) -> tuple[Character, ...]:
        out: list[Character] = []
        for chi, n in self.blocks:
            out.extend([chi] * n)
        return tuple(sorted(out, key=sort_key))

    def twist(self, mu: Character) -> "JordanModule":
        return JordanModule(tuple((chi * mu, n) for chi, n in self.blocks))

    def render(self) -> str:
        if not self.blocks:
            return "0"
        return " + ".join(
            chi.render() if n == 1 else f"{chi.render()}^({n})" for chi, n in self.blocks
        )

    def __str__(self):
        return self.render()


def jshriek_specialization(blocks: JordanModule, mu: Character) -> Gl2ModuleExpr:
    """Central specialization of j_! i_*(A) at mu.

    Each Jordan block (chi, n) contributes an n-layer module with graded
    pieces chi nu^{-1/2} x chi^{-1} nu^{1/2} mu.
    """
    half = mu.group.nu_power(Fraction(1, 2))
    atoms = [
        jordan_induced(chi / half, chi.inverse() * half * mu, n)
        for chi, n in blocks.blocks
    ]
    return Gl2ModuleExpr(atoms)


# ---------------------------------------------------------------------------
# Mirabolic Gl_a(2) layer and Euler characteristics


@dataclass(frozen=True)
class GelfandGraev:
    """The module S_2 = (j_!)^2 C."""

    def render(self) -> str:
        return "S_2"


@dataclass(frozen=True)
class ShriekStar:
    """j_! i_*(A) for a finite-length Gl(1) module A."""

    blocks: JordanModule

    def render(self) -> str:
        return f"j_!i_*({self.blocks.render()})"


@dataclass(frozen=True)
class StarPush:
    """i_*(B); the payload may be None when B is not encoded (generic types)."""

    payload: Optional[Gl2ModuleExpr]

    def render(self) -> str:
        inner = "B" if self.payload is None else self.payload.render()
        return f"i_*({inner})"


MirabolicAtom = Union[GelfandGraev, ShriekStar, StarPush]


@dataclass(frozen=True)
class MirabolicExpr:
    """A formal sum of S_2, j_!i_*(A), i_*(B) atoms."""

    atoms: tuple[MirabolicAtom, ...]

    def __init__(self, atoms: Iterable[MirabolicAtom] = ()):
        object.__setattr__(self, "atoms", tuple(atoms))

    def render(self) -> str:
        if not self.atoms:
            return "0"
        return " + ".join(a.render() for a in self.atoms)


@dataclass(frozen=True)
class EulerTarget:
    """A test object Y with its Whittaker multiplicity m_Y."""

    description: str
    whittaker_multiplicity: int


GENERIC_PRINCIPAL_SERIES = EulerTarget("generic principal series", 1)
ONE_DIMENSIONAL = EulerTarget("one-dimensional", 0)


def euler_characteristic(x: MirabolicExpr, y: EulerTarget) -> int:
    """chi(X, Y) = dim Hom - dim Ext^1 in the fixed-central-character category.

    Additive over the formal sum with atom values S_2 -> m_Y, j_!i_*(A) -> 0,
    i_*(B) -> 0, so the total is m_Y times the number of S_2 atoms.
    """
    total = 0
    for atom in x.atoms:
        if isinstance(atom, GelfandGraev):
            total += y.whittaker_multiplicity
        elif isinstance(atom, (ShriekStar, StarPush)):
            total += 0
        else:
            raise MalformedAtom(f"unknown mirabolic atom {atom!r}")
    return total
