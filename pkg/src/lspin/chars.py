"""Exact algebra of smooth Gl(1) characters and Tate L-factor products.

A character is written nu^a * g1^e1 * ... * gk^ek where nu is the valuation
character, a is an exact rational, the gi are named session generators and the
ei are integers.  Declared relations (including finite generator orders) span
an integer lattice; normal forms reduce the generator exponents modulo that
lattice via a Hermite-style integer elimination, folding the nu-part of each
applied relation into the nu-exponent.  Characters compare equal exactly when
their normal forms coincide.

Tate factors follow the standard normalization

    L(s, chi) = (1 - chi(varpi) q^{-s})^{-1}

for unramified chi and L(s, chi) = 1 otherwise; this constant is a convention,
with nu(varpi) = q^{-1} for residue cardinality q.  Numeric evaluation models
chi(varpi) = q^{-a} * prod satake(gi)^{ei} for caller-supplied Satake values.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    InconsistentRelations,
    MissingSatakeValue,
    NotDivisible,
    PoleAtS,
    UnknownGenerator,
)

#: raw relation/character data before a group exists: (exponent map, nu-exponent)
RawMonomial = tuple[Mapping[str, int], Fraction]

_POLE_TOL = 1e-12


@dataclass(frozen=True)
class Generator:
    """A named generator of the character group.

    ``order`` declares a finite order n (the relation g^n = 1), e.g. 2 for the
    quadratic character xi.  Ramification is a session-level flag; unramified
    is the default.
    """

    name: str
    unramified: bool = True
    order: Optional[int] = None

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise InconsistentRelations(f"generator {self.name}: order must be positive")


class CharacterGroup:
    """Finitely presented abelian group of smooth characters.

    Instances are immutable; characters keep a reference to their group and
    are normalized on construction, so equality and hashing are structural on
    normal forms.  Groups themselves compare by identity (one per session).
    """

    def __init__(
        self,
        generators: Iterable[Generator],
        relations: Iterable[RawMonomial] = (),
        disequalities: Iterable[RawMonomial] = (),
    ):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise InconsistentRelations("duplicate generator names")
        if "nu" in names:
            raise InconsistentRelations("'nu' is reserved for the valuation character")
        self.generators = gens
        self._index = {g.name: i for i, g in enumerate(gens)}

        rows: list[tuple[list[int], Fraction]] = []
        for i, g in enumerate(gens):
            if g.order is not None:
                vec = [0] * len(gens)
                vec[i] = g.order
                rows.append((vec, Fraction(0)))
        for expmap, nu in relations:
            rows.append((list(self._vector(expmap)), Fraction(nu)))
        for vec, nu in rows:
            self._reject_mixed(vec, nu)
        self._pivots = _hermite_rows(rows, len(gens))

        self.one = self._make(Fraction(0), (0,) * len(gens))
        self.nu = self.nu_power(1)
        for expmap, nu in disequalities:
            if self._make(Fraction(nu), self._vector(expmap)).is_trivial:
                raise InconsistentRelations(
                    "relations force an asserted disequality to become trivial"
                )

    # -- construction helpers ------------------------------------------------

    def _vector(self, expmap: Mapping[str, int]) -> tuple[int, ...]:
        vec = [0] * len(self.generators)
        for name, e in expmap.items():
            if name not in self._index:
                raise UnknownGenerator(f"undeclared generator {name!r}")
            vec[self._index[name]] += int(e)
        return tuple(vec)

    def _reject_mixed(self, vec: Sequence[int], nu: Fraction) -> None:
        ram = any(e and not g.unramified for g, e in zip(self.generators, vec))
        unram = nu != 0 or any(e and g.unramified for g, e in zip(self.generators, vec))
        if ram and unram:
            raise InconsistentRelations(
                "relation equates a ramified generator monomial with an unramified character"
            )

    def character(self, nu: Fraction | int = 0, **exps: int) -> "Character":
        """Build nu^nu * prod name^exp from keyword exponents."""
        return self._make(Fraction(nu), self._vector(exps))

    def from_raw(self, raw: RawMonomial) -> "Character":
        expmap, nu = raw
        return self._make(Fraction(nu), self._vector(expmap))

    def nu_power(self, a: Fraction | int) -> "Character":
        return self._make(Fraction(a), (0,) * len(self.generators))

    def _make(self, nu: Fraction, vec: Sequence[int]) -> "Character":
        rnu, rvec = self._reduce(nu, vec)
        return Character(self, rnu, rvec)

    # -- normal form ---------------------------------------------------------

    def _reduce(self, nu: Fraction, vec: Sequence[int]) -> tuple[Fraction, tuple[int, ...]]:
        """Reduce an exponent vector modulo the relation lattice.

        Applying the relation prod g^v * nu^r = 1 with multiplicity c rewrites
        nu^a prod g^e as nu^{a - c r} prod g^{e - c v}; floor division against
        each pivot leaves every pivot coordinate in [0, pivot).
        """
        out = list(vec)
        a = Fraction(nu)
        for col, pvec, pnu in self._pivots:
            c = out[col] // pvec[col]
            if c:
                for j in range(len(out)):
                    out[j] -= c * pvec[j]
                a -= c * pnu
        return a, tuple(out)

    # -- misc ----------------------------------------------------------------

    def torsion_order(self) -> Optional[int]:
        """Order of the torsion quotient part, or None if pivots miss columns."""
        total = 1
        if len(self._pivots) < len(self.generators):
            return None
        for col, pvec, _ in self._pivots:
            total *= pvec[col]
        return total

    def sample_satake(self, q: int, rng: Random) -> dict[str, complex]:
        """Random Satake values for the unramified generators, respecting relations.

        Free generators get uniform unit-modulus values; relation-bound pivot
        generators are solved from the later columns, twisting the principal
        root by a primitive pivot-th root of unity so that finite-order
        generators stay away from trivial values (xi of order 2 maps to -1).
        """
        values: dict[str, complex] = {}
        pivot_cols = {col for col, _, _ in self._pivots}
        for i, g in enumerate(self.generators):
            if g.unramified and i not in pivot_cols:
                values[g.name] = cmath.exp(2j * cmath.pi * rng.random())
        for col, pvec, pnu in sorted(self._pivots, reverse=True):
            if not self.generators[col].unramified:
                continue
            rest = complex(q) ** complex(-pnu)
            for j in range(col + 1, len(pvec)):
                if pvec[j]:
                    rest *= values[self.generators[j].name] ** pvec[j]
            p = pvec[col]
            root = (1 / rest) ** (1.0 / p)
            values[self.generators[col].name] = root * cmath.exp(2j * cmath.pi / p)
        return values

    def __repr__(self):
        return f"CharacterGroup({', '.join(g.name for g in self.generators)})"


def _hermite_rows(
    rows: list[tuple[list[int], Fraction]], n: int
) -> tuple[tuple[int, tuple[int, ...], Fraction], ...]:
    """Column-echelon integer elimination of relation rows.

    Returns pivot rows (pivot column, vector, nu-exponent) with positive
    pivots, entries above each pivot reduced into [0, pivot).  A row whose
    vector vanishes but whose nu-part does not asserts nu^r = 1, which is
    impossible for the infinite-order valuation character.
    """
    work = [[list(v), Fraction(a)] for v, a in rows]
    pivots: list[tuple[int, list[int], Fraction]] = []
    for col in range(n):
        while True:
            live = [r for r in work if r[0][col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[0][col]))
            base = live[0]
            for other in live[1:]:
                c = other[0][col] // base[0][col]
                if c:
                    for j in range(n):
                        other[0][j] -= c * base[0][j]
                    other[1] -= c * base[1]
        live = [r for r in work if r[0][col] != 0]
        if live:
            vec, a = live[0]
            work.remove(live[0])
            if vec[col] < 0:
                vec = [-x for x in vec]
                a = -a
            pivots.append((col, vec, a))
        for r in work:
            if not any(r[0]) and r[1] != 0:
                raise InconsistentRelations(f"relations force nu^{r[1]} = 1")
        work = [r for r in work if any(r[0])]
    # canonical form: reduce earlier rows at later pivot columns
    for i in range(len(pivots)):
        for j in range(i + 1, len(pivots)):
            colj, vecj, aj = pivots[j]
            c = pivots[i][1][colj] // vecj[colj]
            if c:
                for k in range(n):
                    pivots[i][1][k] -= c * vecj[k]
                pivots[i] = (pivots[i][0], pivots[i][1], pivots[i][2] - c * aj)
    return tuple((col, tuple(vec), a) for col, vec, a in pivots)


@dataclass(frozen=True)
class Character:
    """A smooth character in normal form.

    Do not construct directly; use :meth:`CharacterGroup.character` or the
    arithmetic operators, which normalize.  Normalization is idempotent, so
    the constructor re-reduces defensively.
    """

    group: CharacterGroup
    nu_exp: Fraction
    exps: tuple[int, ...]

    def __post_init__(self):
        nu, vec = self.group._reduce(self.nu_exp, self.exps)
        object.__setattr__(self, "nu_exp", nu)
        object.__setattr__(self, "exps", vec)

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: "Character") -> "Character":
        self._same_group(other)
        return Character(
            self.group,
            self.nu_exp + other.nu_exp,
            tuple(a + b for a, b in zip(self.exps, other.exps)),
        )

    def __truediv__(self, other: "Character") -> "Character":
        return self * other.inverse()

    def inverse(self) -> "Character":
        return Character(self.group, -self.nu_exp, tuple(-e for e in self.exps))

    def __pow__(self, n: int) -> "Character":
        return Character(self.group, n * self.nu_exp, tuple(n * e for e in self.exps))

    def _same_group(self, other: "Character") -> None:
        if self.group is not other.group:
            raise InconsistentRelations("characters belong to different sessions")

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return (
            self.group is other.group
            and self.nu_exp == other.nu_exp
            and self.exps == other.exps
        )

    def __hash__(self):
        return hash((id(self.group), self.nu_exp, self.exps))

    # -- predicates ----------------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return self.nu_exp == 0 and not any(self.exps)

    @property
    def is_unramified(self) -> bool:
        """True iff every generator with nonzero normal-form exponent is unramified."""
        return all(g.unramified for g, e in zip(self.group.generators, self.exps) if e)

    # -- rendering and numeric model ------------------------------------------

    def render(self) -> str:
        """Canonical text form nu^{a/b}*g1^e1*... with exponent 1 omitted."""
        parts = []
        if self.nu_exp == 1:
            parts.append("nu")
        elif self.nu_exp != 0:
            parts.append("nu^{%s}" % self.nu_exp)
        for g, e in zip(self.group.generators, self.exps):
            if e == 1:
                parts.append(g.name)
            elif e != 0:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<chr {self.render()}>"

    def value_at_uniformizer(self, q: int, satake: Mapping[str, complex]) -> complex:
        """chi(varpi) under nu(varpi) = q^{-1} and the given Satake values."""
        value = complex(q) ** complex(-self.nu_exp)
        for g, e in zip(self.group.generators, self.exps):
            if e:
                if g.name not in satake:
                    raise MissingSatakeValue(f"no Satake value for generator {g.name!r}")
                value *= satake[g.name] ** e
        return value


def sort_key(chi: Character) -> str:
    """Canonical ordering key: the rendered form."""
    return chi.render()


@dataclass(frozen=True)
class LFactorProduct:
    """A finite multiset of unramified characters, one per Tate factor.

    The empty multiset is the trivial factor 1.  Multiplication is multiset
    union, division is exact multiset subtraction, equality is multiset
    equality of normal forms.
    """

    factors: tuple[Character, ...]

    def __init__(self, factors: Iterable[Character] = ()):
        fs = tuple(sorted(factors, key=sort_key))
        for chi in fs:
            if not chi.is_unramified:
                raise InconsistentRelations(
                    f"ramified character {chi} cannot appear in an L-factor product"
                )
        object.__setattr__(self, "factors", fs)

    @property
    def is_one(self) -> bool:
        return not self.factors

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "LFactorProduct") -> "LFactorProduct":
        return LFactorProduct(self.factors + other.factors)

    def divide_exact(self, other: "LFactorProduct") -> "LFactorProduct":
        remaining = list(self.factors)
        for chi in other.factors:
            try:
                remaining.remove(chi)
            except ValueError:
                raise NotDivisible(f"factor L(s, {chi}) is absent from {self.render()}")
        return LFactorProduct(remaining)

    def divides(self, other: "LFactorProduct") -> bool:
        """True iff self is a sub-multiset of other."""
        try:
            other.divide_exact(self)
        except NotDivisible:
            return False
        return True

    def contains(self, chi: Character) -> bool:
        return chi in self.factors

    def twist(self, mu: Character) -> "LFactorProduct":
        """Multiply every factor character by mu, dropping ramified results."""
        return LFactorProduct(chi * mu for chi in self.factors if (chi * mu).is_unramified)

    def render(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"L(s, {chi.render()})" for chi in self.factors)

    def __str__(self):
        return self.render()

    def numeric_eval(self, q: int, satake: Mapping[str, complex], s: complex) -> complex:
        """prod (1 - chi(varpi) q^{-s})^{-1} over the stored factors."""
        result = complex(1)
        qs = complex(q) ** complex(-s)
        for chi in self.factors:
            den = 1 - chi.value_at_uniformizer(q, satake) * qs
            if abs(den) < _POLE_TOL:
                raise PoleAtS(f"L(s, {chi}) has a pole at s = {s}")
            result /= den
        return result


def tate_factor(chi: Character) -> LFactorProduct:
    """Singleton product {L(s, chi)} for unramified chi, else the trivial 1."""
    if chi.is_unramified:
        return LFactorProduct((chi,))
    return LFactorProduct()
