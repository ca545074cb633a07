"""Subregular factors, functional dimensions, total L-factors, verifications.

The subregular factor attached to an admissible split Bessel datum
Lambda = rho boxtimes rho* is a product of Tate factors L(s, nu^{1/2} tau mu)
over tau in {rho, rho*}: for the six generic types with poles the condition
is tau in Delta_-, and the four non-generic types with poles carry fixed
products.  A factor L(s, nu^{1/2} tau) is present exactly when the
(H_+, nu tau)-functional space is one-dimensional; the correspondence and
divisibility checks below verify this and the independence of the total
L-factor from the choice of Bessel datum, case by case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Optional, Sequence

from .catalog import (
    ReprSpec,
    BesselDatum,
    admissible_bessel_set,
    bessel_datum,
    central_character,
    delta_minus,
    delta_plus,
    total_lfactor_characters,
)
from .chars import Character, LFactorProduct, tate_factor
from .errors import NoBesselModel, PoleAtS
from .specialize import central_specialization

#: generic types that admit subregular poles (all others default to 1)
GENERIC_POLE_TAGS = frozenset({"I", "IIa", "Va", "VIa", "X", "XIa"})


def _nu(pi: ReprSpec, a) -> Character:
    return pi.group.nu_power(Fraction(a))


def _distinct_taus(lam: BesselDatum) -> list[Character]:
    taus = [lam.rho]
    if lam.rho_star != lam.rho:
        taus.append(lam.rho_star)
    return taus


def subregular_factor(
    pi: ReprSpec, lam: BesselDatum, mu: Optional[Character] = None
) -> LFactorProduct:
    """The subregular L-factor for an admissible Bessel datum, mu-twisted."""
    if not lam.admissible:
        raise NoBesselModel(
            f"Lambda with rho = {lam.rho} yields no split Bessel model for type {pi.tag}"
        )
    if mu is None:
        mu = pi.group.one
    half = _nu(pi, Fraction(1, 2))
    taus = _distinct_taus(lam)
    tag = pi.tag
    s = pi.params.get("sigma")

    if tag in GENERIC_POLE_TAGS:
        dminus = set(delta_minus(pi))
        out = LFactorProduct()
        for tau in taus:
            if tau in dminus:
                out = out * tate_factor(half * tau * mu)
        return out
    if tag == "IIIb":
        chi = pi.params["chi"]
        if any(tau == s or tau == chi * s for tau in taus):
            # the row's value is the full two-factor product, emitted once
            return tate_factor(half * chi * s * mu) * tate_factor(half * s * mu)
        return LFactorProduct()
    if tag == "IVc":
        nu = pi.group.nu
        if any(tau == nu * s or tau == nu.inverse() * s for tau in taus):
            return tate_factor(_nu(pi, Fraction(3, 2)) * s * mu)
        return LFactorProduct()
    if tag in ("VIc", "VId"):
        if any(tau == s for tau in taus):
            return tate_factor(half * s * mu)
        return LFactorProduct()
    return LFactorProduct()


def hom_dim(pi: ReprSpec, rho_tilde: Character) -> int:
    """dim Hom_{Gl(2)}(Pi^bar, rho_tilde o det), per the classification.

    Non-generic support: Delta_+ for IIb/Vb/Vc/XIb; Delta_+ together with
    nu Delta_+ for IIIb/VIc/VId; Delta_+ plus the single character nu^2 sigma
    for IVc (with no functional at sigma although sigma lies in nu Delta_+);
    the single character sigma for the one-dimensional type IVd.  Generic
    support: Delta_+ for the six generic types with poles, nothing for the
    rest (in particular IIIa and IVa carry no functional on Delta_+).
    """
    dplus = set(delta_plus(pi))
    tag = pi.tag
    if pi.is_generic:
        return int(tag in GENERIC_POLE_TAGS and rho_tilde in dplus)
    if tag in ("IIb", "Vb", "Vc", "XIb"):
        return int(rho_tilde in dplus)
    if tag in ("IIIb", "VIc", "VId"):
        nu = pi.group.nu
        return int(rho_tilde in dplus or any(rho_tilde == nu * c for c in dplus))
    if tag == "IVc":
        return int(rho_tilde in dplus or rho_tilde == _nu(pi, 2) * pi.params["sigma"])
    if tag == "IVd":
        return int(rho_tilde == pi.params["sigma"])
    return 0


def total_lfactor(
    pi: ReprSpec, lam: BesselDatum, mu: Optional[Character] = None
) -> LFactorProduct:
    """The total spinor L-factor; reads Lambda only through admissibility."""
    if not lam.admissible:
        raise NoBesselModel(
            f"Lambda with rho = {lam.rho} yields no split Bessel model for type {pi.tag}"
        )
    if mu is None:
        mu = pi.group.one
    chars = total_lfactor_characters(pi)
    if chars is None:
        raise NoBesselModel(f"type {pi.tag} admits no split Bessel model")
    out = LFactorProduct()
    for chi in chars:
        out = out * tate_factor(chi * mu)
    return out


# ---------------------------------------------------------------------------
# Probe sets


def probe_characters(
    pi: ReprSpec,
    nu_exponents: Optional[Sequence[Fraction]] = None,
    exponent_window: Optional[range] = None,
) -> list[Character]:
    """The default probe set of candidate characters rho~.

    Characters nu^a * m with a over half-integer steps in [-2, 2] and m over
    monomials in the type's parameters with exponents in {-1, 0, 1}; every
    table entry lies in this window.  When that yields fewer than 81 distinct
    probes (few parameters, or finite-order parameters collapsing monomials)
    the exponent window widens until the floor is met.  Both windows are
    overridable.
    """
    if nu_exponents is None:
        nu_exponents = [Fraction(k, 2) for k in range(-4, 5)]
    names = sorted({name for name in pi.params})

    def build(window: range) -> list[Character]:
        probes: list[Character] = []
        seen = set()
        for exps in itertools.product(window, repeat=len(names)):
            mono = pi.group.one
            for name, e in zip(names, exps):
                mono = mono * pi.params[name] ** e
            for a in nu_exponents:
                chi = pi.group.nu_power(a) * mono
                if chi not in seen:
                    seen.add(chi)
                    probes.append(chi)
        return probes

    if exponent_window is not None:
        return build(exponent_window)
    for k in range(1, 9):
        probes = build(range(-k, k + 1))
        if len(probes) >= 81:
            return probes
    return probes


def special_position_notes(pi: ReprSpec) -> list[str]:
    """Parameter coincidences the printed tables do not branch on.

    The engine still evaluates every condition literally under the declared
    relations, but reports flag these cases instead of guessing at rows the
    classification never certifies (e.g. type I with chi1 = chi2, type III
    with chi = 1, type X with trivial omega_pi).
    """
    notes = []
    flag = "outside printed branches: "
    if pi.tag == "I":
        c1, c2 = pi.params["chi1"], pi.params["chi2"]
        if c1 == c2:
            notes.append(flag + "type I with chi1 = chi2")
        if c1.is_trivial or c2.is_trivial or (c1 * c2).is_trivial:
            notes.append(flag + "type I with a trivial chi-coincidence")
    if pi.tag in ("IIIa", "IIIb") and pi.params["chi"].is_trivial:
        notes.append(flag + "type III with chi = 1 (compare the VI family)")
    if pi.tag == "X" and pi.params["omega_pi"].is_trivial:
        notes.append(flag + "type X with trivial omega_pi (compare the XI family)")
    return notes


def _bessel_sweep(pi: ReprSpec, rhos: Optional[Iterable[Character]] = None) -> list[BesselDatum]:
    """Admissible Bessel data to verify: the full finite set when non-generic,
    otherwise a representative sweep (every rho is admissible for generic pi)."""
    admissible = admissible_bessel_set(pi)
    if admissible is not None:
        if not admissible:
            raise NoBesselModel(f"type {pi.tag} admits no split Bessel model")
        return [bessel_datum(pi, rho) for rho in admissible]
    if rhos is None:
        omega = central_character(pi)
        candidates = list(delta_minus(pi))
        candidates += [omega / chi for chi in delta_minus(pi)]
        candidates += probe_characters(pi)
        rhos = candidates
    out, seen = [], set()
    for rho in rhos:
        if rho not in seen:
            seen.add(rho)
            out.append(bessel_datum(pi, rho))
    return out


# ---------------------------------------------------------------------------
# Verification reports


@dataclass(frozen=True)
class CheckFailure:
    check: str
    expected: str
    actual: str
    type_tag: str
    branch: str

    def render(self) -> str:
        return (
            f"[{self.check}] {self.type_tag} ({self.branch}): "
            f"expected {self.expected}, got {self.actual}"
        )


@dataclass
class VerificationReport:
    case_id: str
    checks_run: int = 0
    failures: list[CheckFailure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, name: str, ok: bool, expected: str, actual: str, branch: str = "") -> None:
        self.checks_run += 1
        if not ok:
            self.failures.append(
                CheckFailure(
                    check=name,
                    expected=expected,
                    actual=actual,
                    type_tag=self.case_id.split(":")[0],
                    branch=branch or self.case_id,
                )
            )

    def merge(self, other: "VerificationReport") -> None:
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def render(self) -> str:
        status = "ok" if self.passed else "FAIL"
        lines = [f"{self.case_id}: {self.checks_run} checks, {status}"]
        lines += ["  " + f.render() for f in self.failures]
        lines += ["  note: " + n for n in self.notes]
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "case": self.case_id,
            "checks_run": self.checks_run,
            "failures": [
                {
                    "check": f.check,
                    "expected": f.expected,
                    "actual": f.actual,
                    "type": f.type_tag,
                    "branch": f.branch,
                }
                for f in self.failures
            ],
            "notes": list(self.notes),
        }


def correspondence_check(
    pi: ReprSpec,
    case_id: Optional[str] = None,
    rhos: Optional[Iterable[Character]] = None,
) -> VerificationReport:
    """Poles <-> functionals, for every admissible Bessel datum.

    For each unramified tau in {rho, rho*}: the factor L(s, nu^{1/2} tau)
    divides the subregular factor iff dim Hom(Pi^bar, (nu tau) o det) = 1.
    Generic types additionally admit at most one distinct subregular factor
    per Bessel datum (two would force rho != rho* both inside Delta_-).
    """
    report = VerificationReport(case_id or pi.tag)
    report.notes.extend(special_position_notes(pi))
    half = _nu(pi, Fraction(1, 2))
    nu = pi.group.nu
    try:
        lams = _bessel_sweep(pi, rhos)
    except NoBesselModel:
        report.notes.append("no split Bessel model; nothing to check")
        return report
    for lam in lams:
        sreg = subregular_factor(pi, lam)
        for tau in _distinct_taus(lam):
            if not tau.is_unramified:
                continue
            present = sreg.contains(half * tau)
            functional = hom_dim(pi, nu * tau) == 1
            report.check(
                "correspondence",
                present == functional,
                f"factor L(s, {half * tau}) present iff hom_dim({nu * tau}) = 1",
                f"present={present}, hom_dim={hom_dim(pi, nu * tau)}",
                branch=f"rho={lam.rho}",
            )
        if pi.is_generic:
            distinct = set(sreg.factors)
            report.check(
                "correspondence",
                len(distinct) <= 1,
                "at most one distinct subregular factor",
                sreg.render(),
                branch=f"rho={lam.rho}",
            )
    return report


def divisibility_and_independence_check(
    pi: ReprSpec,
    case_id: Optional[str] = None,
    rhos: Optional[Iterable[Character]] = None,
    numeric_samples: int = 20,
    seed: int = 20260810,
) -> VerificationReport:
    """sreg | total exactly, and the total is the same for every Bessel datum."""
    report = VerificationReport(case_id or pi.tag)
    report.notes.extend(special_position_notes(pi))
    try:
        lams = _bessel_sweep(pi, rhos)
    except NoBesselModel:
        report.notes.append("no split Bessel model; nothing to check")
        return report
    totals, sregs = [], []
    for lam in lams:
        total = total_lfactor(pi, lam)
        sreg = subregular_factor(pi, lam)
        totals.append((lam, total))
        sregs.append((lam, sreg))
        report.check(
            "divisibility",
            sreg.divides(total),
            f"{sreg.render()} divides {total.render()}",
            "not divisible" if not sreg.divides(total) else "ok",
            branch=f"rho={lam.rho}",
        )
    reference = totals[0][1]
    for lam, total in totals[1:]:
        report.check(
            "independence",
            total == reference,
            reference.render(),
            total.render(),
            branch=f"rho={lam.rho}",
        )
    if numeric_samples and len(totals) > 1:
        rng = Random(seed)
        points = sample_points(pi.group, rng, numeric_samples)
        for q, satake, spt in points:
            try:
                ref = reference.numeric_eval(q, satake, spt)
                worst = max(
                    abs(total.numeric_eval(q, satake, spt) - ref) for _, total in totals[1:]
                )
            except PoleAtS:
                continue
            report.check(
                "independence-numeric",
                worst <= 1e-9,
                "<= 1e-9",
                f"{worst:.3e}",
                branch=f"q={q}",
            )
    return report


def sample_points(group, rng: Random, count: int) -> list[tuple[int, dict, complex]]:
    """Seeded (q, satake, s) sample points with s kept away from poles.

    Satake values are unit modulus and respect the declared relations; s is
    drawn with a nonzero imaginary part so the factors (1 - chi q^{-s}) stay
    bounded away from zero for unit-modulus data.
    """
    points = []
    for _ in range(count):
        q = rng.choice([2, 3, 5])
        satake = group.sample_satake(q, rng)
        s = complex(rng.uniform(-1.5, 1.5), rng.uniform(0.1, 0.9) * 2)
        points.append((q, satake, s))
    return points


def hom_cross_validation(
    pi: ReprSpec, case_id: Optional[str] = None, probes: Optional[Sequence[Character]] = None
) -> VerificationReport:
    """one_dim_quotient_dim(zeta_{rho~^2}, rho~) == hom_dim for every probe.

    Only meaningful for non-generic pi (the central specialization of a
    generic representation has infinite length).
    """
    report = VerificationReport(case_id or pi.tag)
    if pi.is_generic:
        report.notes.append("generic type: central specialization not encoded")
        return report
    if probes is None:
        probes = probe_characters(pi)
    for rho_t in probes:
        zeta = central_specialization(pi, rho_t**2)
        got = zeta.one_dim_quotient_dim(rho_t)
        want = hom_dim(pi, rho_t)
        report.check(
            "hom",
            got == want,
            f"hom_dim({rho_t}) = {want}",
            f"one_dim_quotient_dim = {got}",
            branch=f"rho~={rho_t}",
        )
    return report


def multiplicity_bound_check(
    pi: ReprSpec, case_id: Optional[str] = None, probes: Optional[Sequence[Character]] = None
) -> VerificationReport:
    """hom_dim never exceeds 1 over the probe set (multiplicity one)."""
    report = VerificationReport(case_id or pi.tag)
    if probes is None:
        probes = probe_characters(pi)
    for rho_t in probes:
        d = hom_dim(pi, rho_t)
        report.check(
            "multiplicity",
            d <= 1,
            "hom_dim <= 1",
            str(d),
            branch=f"rho~={rho_t}",
        )
    return report
