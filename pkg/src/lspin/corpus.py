"""Embedded verification corpus and table regeneration.

One case per classification-table row and per constraint branch of the
module table (IIb with chi^2 = 1, IIIb with chi^2 = 1 and with chi = nu).
Each case rebuilds its character group from scratch, so cases are independent
and can be evaluated concurrently; reports merge by case id.

Snapshots are canonical-rendered text committed under snapshots/, one file
per table row, hand-checked against the published tables; regeneration
recomputes every row from the engines and diffs byte-for-byte.  The
environment variable LSPIN_CORPUS_DIR points the reader at an external
snapshot tree.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from .catalog import (
    ReprSpec,
    admissible_bessel_set,
    bessel_datum,
    central_character,
    delta_plus,
    gk_decomposition,
)
from .chars import Character, CharacterGroup, Generator, sort_key
from .engine import (
    VerificationReport,
    correspondence_check,
    divisibility_and_independence_check,
    hom_cross_validation,
    multiplicity_bound_check,
    probe_characters,
    subregular_factor,
    total_lfactor,
)
from .errors import LspinError, NoBesselModel
from .gl2 import (
    GENERIC_PRINCIPAL_SERIES,
    ONE_DIMENSIONAL,
    NoCentralThree,
    central_character as atom_central_character,
    euler_characteristic,
)
from .specialize import central_specialization, jshriek_of_a

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CorpusCase:
    """A type tag at one constraint branch, with its snapshot bindings."""

    case_id: str
    slug: str
    tag: str
    branch: str
    build: Callable[[], ReprSpec]
    #: Table 4 rho column, embedded independently of the catalog:
    #: "all" for generic rows, a callable for finite rows, None for "none" rows
    rho_column: Optional[object] = None
    #: mu values at which the zeta table row is snapshotted (non-generic only)
    zeta_mus: Optional[Callable[[ReprSpec], list[Character]]] = None


def _group(*gens: Generator, diseq: tuple[str, ...] = ()) -> CharacterGroup:
    return CharacterGroup(gens, disequalities=[({name: 1}, Fraction(0)) for name in diseq])


def _free(*names: str) -> CharacterGroup:
    return _group(*(Generator(n) for n in names))


def _build_simple(tag: str, *names: str) -> Callable[[], ReprSpec]:
    def build() -> ReprSpec:
        g = _free(*names)
        return ReprSpec(tag, **{n: g.character(**{n: 1}) for n in names})

    return build


def _build_order2(tag: str, quad: str, *names: str) -> Callable[[], ReprSpec]:
    def build() -> ReprSpec:
        g = _group(Generator(quad, order=2), *(Generator(n) for n in names), diseq=(quad,))
        params = {quad: g.character(**{quad: 1})}
        params.update({n: g.character(**{n: 1}) for n in names})
        return ReprSpec(tag, **params)

    return build


def _build_iiib_chinu() -> ReprSpec:
    g = _free("sigma")
    return ReprSpec("IIIb", chi=g.nu, sigma=g.character(sigma=1))


def _s(pi: ReprSpec) -> Character:
    return pi.params["sigma"]


def _n(pi: ReprSpec, a) -> Character:
    return pi.group.nu_power(Fraction(a))


ALL_CASES: tuple[CorpusCase, ...] = (
    CorpusCase("I", "I", "I", "generic-position", _build_simple("I", "chi1", "chi2", "sigma"),
               rho_column="all"),
    CorpusCase("IIa", "IIa", "IIa", "generic-position", _build_simple("IIa", "chi", "sigma"),
               rho_column="all"),
    CorpusCase("IIb", "IIb", "IIb", "generic-position", _build_simple("IIb", "chi", "sigma"),
               rho_column=lambda pi: [pi["chi"] * _s(pi)],
               zeta_mus=lambda pi: [
                   pi["chi"] ** 2 * _s(pi) ** 2,
                   _n(pi, 2) * pi["chi"] ** 2 * _s(pi) ** 2,
                   _s(pi) ** 2,
               ]),
    CorpusCase("IIb:chi^2=1", "IIb_chi2eq1", "IIb", "chi^2=1", _build_order2("IIb", "chi", "sigma"),
               rho_column=lambda pi: [pi["chi"] * _s(pi)],
               zeta_mus=lambda pi: [
                   _s(pi) ** 2,
                   _n(pi, 2) * _s(pi) ** 2,
                   _n(pi, 3) * _s(pi) ** 2,
               ]),
    CorpusCase("IIIa", "IIIa", "IIIa", "generic-position", _build_simple("IIIa", "chi", "sigma"),
               rho_column="all"),
    CorpusCase("IIIb", "IIIb", "IIIb", "generic-position", _build_simple("IIIb", "chi", "sigma"),
               rho_column=lambda pi: [_s(pi), pi["chi"] * _s(pi)],
               zeta_mus=lambda pi: [
                   _n(pi, 1) * pi["chi"] * _s(pi) ** 2,
                   _n(pi, 2) * _s(pi) ** 2,
                   _n(pi, 2) * pi["chi"] ** 2 * _s(pi) ** 2,
                   _s(pi) ** 2,
                   _n(pi, 4) * _s(pi) ** 2,
               ]),
    CorpusCase("IIIb:chi^2=1", "IIIb_chi2eq1", "IIIb", "chi^2=1",
               _build_order2("IIIb", "chi", "sigma"),
               rho_column=lambda pi: [_s(pi), pi["chi"] * _s(pi)],
               zeta_mus=lambda pi: [
                   _n(pi, 1) * pi["chi"] * _s(pi) ** 2,
                   _n(pi, 2) * _s(pi) ** 2,
                   _s(pi) ** 2,
                   _n(pi, 3) * _s(pi) ** 2,
               ]),
    CorpusCase("IIIb:chi1=nu", "IIIb_chi1eqnu", "IIIb", "chi1=nu", _build_iiib_chinu,
               rho_column=lambda pi: [_s(pi), pi.group.nu * _s(pi)],
               zeta_mus=lambda pi: [
                   _n(pi, 4) * _s(pi) ** 2,
                   _n(pi, 2) * _s(pi) ** 2,
                   _s(pi) ** 2,
               ]),
    CorpusCase("IVa", "IVa", "IVa", "generic-position", _build_simple("IVa", "sigma"),
               rho_column="all"),
    CorpusCase("IVb", "IVb", "IVb", "generic-position", _build_simple("IVb", "sigma"),
               rho_column=lambda pi: [_s(pi)],
               zeta_mus=lambda pi: [_s(pi) ** 2, _n(pi, 2) * _s(pi) ** 2]),
    CorpusCase("IVc", "IVc", "IVc", "generic-position", _build_simple("IVc", "sigma"),
               rho_column=lambda pi: [pi.group.nu * _s(pi), pi.group.nu.inverse() * _s(pi)],
               zeta_mus=lambda pi: [
                   _n(pi, 4) * _s(pi) ** 2,
                   _n(pi, 1) * _s(pi) ** 2,
                   _n(pi, 2) * _s(pi) ** 2,
               ]),
    CorpusCase("IVd", "IVd", "IVd", "generic-position", _build_simple("IVd", "sigma"),
               rho_column=None,
               zeta_mus=lambda pi: [_s(pi) ** 2, _n(pi, 1) * _s(pi) ** 2]),
    CorpusCase("Va", "Va", "Va", "generic-position", _build_order2("Va", "xi", "sigma"),
               rho_column="all"),
    CorpusCase("Vb", "Vb", "Vb", "generic-position", _build_order2("Vb", "xi", "sigma"),
               rho_column=lambda pi: [_s(pi)],
               zeta_mus=lambda pi: [_s(pi) ** 2, _n(pi, 2) * _s(pi) ** 2]),
    CorpusCase("Vc", "Vc", "Vc", "generic-position", _build_order2("Vc", "xi", "sigma"),
               rho_column=lambda pi: [pi["xi"] * _s(pi)],
               zeta_mus=lambda pi: [_s(pi) ** 2, _n(pi, 2) * _s(pi) ** 2]),
    CorpusCase("Vd", "Vd", "Vd", "generic-position", _build_order2("Vd", "xi", "sigma"),
               rho_column=None,
               zeta_mus=lambda pi: [
                   _n(pi, 2) * pi["xi"] * _s(pi) ** 2,
                   _s(pi) ** 2,
               ]),
    CorpusCase("VIa", "VIa", "VIa", "generic-position", _build_simple("VIa", "sigma"),
               rho_column="all"),
    CorpusCase("VIb", "VIb", "VIb", "generic-position", _build_simple("VIb", "sigma"),
               rho_column=None,
               zeta_mus=lambda pi: [_n(pi, 2) * _s(pi) ** 2, _s(pi) ** 2]),
    CorpusCase("VIc", "VIc", "VIc", "generic-position", _build_simple("VIc", "sigma"),
               rho_column=lambda pi: [_s(pi)],
               zeta_mus=lambda pi: [_n(pi, 2) * _s(pi) ** 2, _s(pi) ** 2]),
    CorpusCase("VId", "VId", "VId", "generic-position", _build_simple("VId", "sigma"),
               rho_column=lambda pi: [_s(pi)],
               zeta_mus=lambda pi: [_n(pi, 2) * _s(pi) ** 2, _s(pi) ** 2]),
    CorpusCase("VII", "VII", "VII", "generic-position", _build_simple("VII", "chi", "omega_pi"),
               rho_column="all"),
    CorpusCase("VIIIa", "VIIIa", "VIIIa", "generic-position",
               _build_simple("VIIIa", "omega_pi"), rho_column="all"),
    CorpusCase("VIIIb", "VIIIb", "VIIIb", "generic-position",
               _build_simple("VIIIb", "omega_pi"),
               rho_column=None,
               zeta_mus=lambda pi: [
                   _n(pi, 2) * pi["omega_pi"],
                   pi["omega_pi"],
               ]),
    CorpusCase("IXa", "IXa", "IXa", "generic-position",
               _build_order2("IXa", "xi", "omega_pi"), rho_column="all"),
    CorpusCase("IXb", "IXb", "IXb", "generic-position",
               _build_order2("IXb", "xi", "omega_pi"),
               rho_column=None,
               zeta_mus=lambda pi: [
                   _n(pi, 1) * pi["omega_pi"],
                   pi["omega_pi"],
               ]),
    CorpusCase("X", "X", "X", "generic-position", _build_simple("X", "omega_pi", "sigma"),
               rho_column="all"),
    CorpusCase("XIa", "XIa", "XIa", "generic-position", _build_simple("XIa", "sigma"),
               rho_column="all"),
    CorpusCase("XIb", "XIb", "XIb", "generic-position", _build_simple("XIb", "sigma"),
               rho_column=lambda pi: [_s(pi)],
               zeta_mus=lambda pi: [_s(pi) ** 2, _n(pi, 2) * _s(pi) ** 2]),
    CorpusCase("cusp-gen", "cusp_gen", "CuspGen", "generic-position",
               _build_simple("CuspGen", "omega"), rho_column="all"),
    CorpusCase("cusp-nongen", "cusp_nongen", "CuspNonGen", "generic-position",
               _build_simple("CuspNonGen", "omega"),
               rho_column=None,
               zeta_mus=lambda pi: [pi["omega"], _n(pi, 2) * pi["omega"]]),
)

CASES_BY_ID = {c.case_id: c for c in ALL_CASES}


def select_cases(selector: Optional[str] = None) -> list[CorpusCase]:
    """All cases, or those matching a case id / type tag / tag:branch prefix."""
    if not selector:
        return list(ALL_CASES)
    picked = [
        c for c in ALL_CASES
        if selector in (c.case_id, c.tag) or c.case_id.startswith(selector + ":")
    ]
    if not picked:
        raise LspinError(f"no corpus case matches {selector!r}")
    return picked


# ---------------------------------------------------------------------------
# Table regeneration


def _sreg_row(case: CorpusCase, pi: ReprSpec, rho: Character, header: str) -> str:
    lam = bessel_datum(pi, rho)
    sreg = subregular_factor(pi, lam)
    return "\n".join(
        [
            "table: sreg",
            f"row: {header}",
            f"case: {case.case_id}",
            f"Lambda: rho = {lam.rho} ; rho* = {lam.rho_star}",
            f"sreg: {sreg.render()}",
        ]
    ) + "\n"


#: Table 1 row ids in print order
TABLE1_ROWS: tuple[str, ...] = (
    "I-rho", "I-rhostar", "IIa-rho", "IIa-rhostar", "Va-rho", "Va-rhostar",
    "VIa-rho", "VIa-rhostar", "X-rho", "X-rhostar", "XIa-rho", "XIa-rhostar",
    "IIIb", "IVc", "VIc", "VId", "default",
)


def regenerate_table1() -> dict[str, str]:
    """The subregular-factor table, recomputed from the engine per row."""
    from .catalog import delta_minus

    rows: dict[str, str] = {}
    for tag in ("I", "IIa", "Va", "VIa", "X", "XIa"):
        case = CASES_BY_ID[tag]
        pi = case.build()
        omega = central_character(pi)
        dminus = delta_minus(pi)
        # prefer a datum with rho != rho*, so the two sub-rows are distinct
        target = next((t for t in dminus if omega / t not in dminus), dminus[0])
        rows[f"{tag}-rho"] = _sreg_row(case, pi, target, f"{tag} (rho in Delta_-)")
        rows[f"{tag}-rhostar"] = _sreg_row(
            case, pi, omega / target, f"{tag} (rho* in Delta_-)"
        )
    for tag, header in (
        ("IIIb", "IIIb (rho in {sigma, chi*sigma})"),
        ("IVc", "IVc (rho in {nu*sigma, nu^{-1}*sigma})"),
        ("VIc", "VIc (rho = sigma)"),
        ("VId", "VId (rho = sigma)"),
    ):
        case = CASES_BY_ID[tag]
        pi = case.build()
        rho = admissible_bessel_set(pi)[0]
        rows[tag] = _sreg_row(case, pi, rho, header)
    # default row: an admissible datum whose type carries no subregular pole
    case = CASES_BY_ID["IIb"]
    pi = case.build()
    rho = admissible_bessel_set(pi)[0]
    rows["default"] = _sreg_row(case, pi, rho, "default (otherwise)")
    return rows


#: Table 4 rows in print order (row id = case id)
TABLE4_ROWS: tuple[str, ...] = (
    "I", "IIa", "IIb", "IIIa", "IIIb", "IVa", "IVb", "IVc", "IVd",
    "Va", "Vb", "Vc", "Vd", "VIa", "VIb", "VIc", "VId",
    "VII", "VIIIa", "VIIIb", "IXa", "IXb", "X", "XIa", "XIb",
    "cusp-gen", "cusp-nongen",
)


def regenerate_table4() -> dict[str, str]:
    """The total-L-factor table, one row per type tag.

    Finite rho rows evaluate the total at every admissible datum and mark any
    disagreement; "none" rows must raise NoBesselModel; generic rows sample
    three data and must agree.
    """
    rows: dict[str, str] = {}
    for row_id in TABLE4_ROWS:
        case = CASES_BY_ID[row_id]
        pi = case.build()
        lines = ["table: total", f"row: {case.tag}", f"case: {case.case_id}"]
        admissible = admissible_bessel_set(pi)
        if admissible is None:
            probes = [pi.group.one, probe_characters(pi)[1], probe_characters(pi)[-1]]
            totals = [total_lfactor(pi, bessel_datum(pi, rho)) for rho in probes]
            lines.append("rho: all")
            value = totals[0].render()
            if any(t != totals[0] for t in totals):
                value += "  [MISMATCH ACROSS LAMBDA]"
            lines.append(f"total: {value}")
        elif not admissible:
            lines.append("rho: none")
            try:
                total_lfactor(pi, bessel_datum(pi, pi.group.one))
                lines.append("total: [ERROR: NoBesselModel not raised]")
            except NoBesselModel:
                lines.append("total: --- (NoBesselModel)")
        else:
            lines.append("rho: " + " | ".join(chi.render() for chi in admissible))
            totals = [total_lfactor(pi, bessel_datum(pi, rho)) for rho in admissible]
            value = totals[0].render()
            if any(t != totals[0] for t in totals):
                value += "  [MISMATCH ACROSS LAMBDA]"
            lines.append(f"total: {value}")
        rows[row_id] = "\n".join(lines) + "\n"
    return rows


#: Table 3 rows: every non-generic corpus case, in corpus order
TABLE3_ROWS: tuple[str, ...] = tuple(c.case_id for c in ALL_CASES if c.zeta_mus is not None)


def regenerate_table3() -> dict[str, str]:
    """The central-specialization table at each snapshotted mu branch."""
    rows: dict[str, str] = {}
    for case in ALL_CASES:
        if case.zeta_mus is None:
            continue
        pi = case.build()
        lines = ["table: zeta", f"row: {case.tag} ({case.branch})", f"case: {case.case_id}"]
        for mu in case.zeta_mus(pi):
            zeta = central_specialization(pi, mu)
            lines.append(f"zeta[{mu.render()}] = {zeta.render()}")
        rows[case.case_id] = "\n".join(lines) + "\n"
    return rows


# ---------------------------------------------------------------------------
# Snapshots


def snapshot_root() -> Path:
    override = os.environ.get("LSPIN_CORPUS_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "snapshots"


def _snapshot_path(table: str, row_id: str) -> Path:
    case = CASES_BY_ID.get(row_id)
    slug = case.slug if case else row_id.replace(":", "_").replace("^", "").replace("=", "eq")
    return snapshot_root() / f"table_{table}" / f"{slug}.txt"


_REGENERATORS = {
    "sreg": (regenerate_table1, TABLE1_ROWS),
    "zeta": (regenerate_table3, TABLE3_ROWS),
    "total": (regenerate_table4, TABLE4_ROWS),
}

TABLE_NAMES = tuple(sorted(_REGENERATORS))


def regenerate(table: str) -> list[tuple[str, str]]:
    """(row id, rendered text) in print order for one of sreg/zeta/total."""
    regen, order = _REGENERATORS[table]
    rows = regen()
    return [(row_id, rows[row_id]) for row_id in order]


def diff_table(table: str) -> tuple[str, list[str]]:
    """Regenerate a table and diff each row against its snapshot file.

    Returns the rendered table and the list of mismatched row ids (missing
    snapshot files count as mismatches).
    """
    mismatches = []
    chunks = []
    for row_id, text in regenerate(table):
        chunks.append(text)
        path = _snapshot_path(table, row_id)
        if not path.exists():
            mismatches.append(f"{row_id}: snapshot {path} missing")
            continue
        expected = path.read_text()
        if expected != text:
            mismatches.append(
                f"{row_id}: regenerated row differs from snapshot\n"
                f"--- snapshot\n{expected}--- regenerated\n{text}"
            )
    return "\n".join(chunks), mismatches


def write_snapshots(table: str) -> list[Path]:
    """Write the regenerated rows out as the committed snapshot files."""
    written = []
    for row_id, text in regenerate(table):
        path = _snapshot_path(table, row_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        written.append(path)
    return written


# ---------------------------------------------------------------------------
# Verification checks


def check_delta(case: CorpusCase) -> VerificationReport:
    """Delta_+ from the module table equals Table 4's rho column, plus the
    rho <-> rho* symmetry and the Delta_+ / nu Delta_+ disjointness statement."""
    report = VerificationReport(case.case_id)
    pi = case.build()
    dplus = delta_plus(pi)
    if case.rho_column == "all":
        report.notes.append("generic type: every rho admissible")
    elif case.rho_column is None:
        report.check(
            "delta",
            admissible_bessel_set(pi) == (),
            "no admissible rho",
            ", ".join(c.render() for c in dplus) or "(empty)",
        )
    else:
        expected = sorted(case.rho_column(pi), key=sort_key)
        got = list(admissible_bessel_set(pi))
        report.check(
            "delta",
            got == expected,
            " | ".join(c.render() for c in expected),
            " | ".join(c.render() for c in got),
        )
        omega = central_character(pi)
        for rho in got:
            partner = omega / rho
            report.check(
                "delta",
                partner == rho or partner in got,
                f"rho* of {rho} admissible or equal to rho",
                partner.render(),
            )
    if not pi.is_generic:
        overlap = set(dplus) & {pi.group.nu * chi for chi in dplus}
        expect_overlap = case.case_id == "IIIb:chi1=nu"
        report.check(
            "delta",
            bool(overlap) == expect_overlap,
            "Delta_+ meets nu Delta_+ only for IIIb with chi = nu^(+-1)",
            f"overlap = {sorted(c.render() for c in overlap)}",
        )
    return report


def check_correspondence(case: CorpusCase) -> VerificationReport:
    return correspondence_check(case.build(), case_id=case.case_id)


def check_independence(case: CorpusCase) -> VerificationReport:
    return divisibility_and_independence_check(case.build(), case_id=case.case_id)


def check_constituents(case: CorpusCase) -> VerificationReport:
    """zeta_mu(Pi) and zeta_mu(j_!i_*(A)) share constituents; central-character
    coherence; A = 0 types vanish off their listed mu."""
    report = VerificationReport(case.case_id)
    pi = case.build()
    if pi.is_generic:
        report.notes.append("generic type: central specialization not encoded")
        return report
    a_blocks = gk_decomposition(pi).a
    mus = case.zeta_mus(pi) if case.zeta_mus else []
    for mu in mus:
        zeta = central_specialization(pi, mu)
        if not a_blocks.is_zero:
            lhs = zeta.constituents()
            rhs = jshriek_of_a(pi, mu).constituents()
            report.check(
                "constituents",
                lhs == rhs,
                " + ".join(a.render() for a in rhs) or "0",
                " + ".join(a.render() for a in lhs) or "0",
                branch=f"mu={mu}",
            )
        for atom in zeta.atoms:
            report.check(
                "constituents",
                not isinstance(atom, NoCentralThree),
                "no M^nc atom in any central specialization",
                atom.render(),
                branch=f"mu={mu}",
            )
            cc = atom_central_character(atom)
            if cc is not None:
                report.check(
                    "constituents",
                    cc == mu,
                    f"central character {mu}",
                    cc.render(),
                    branch=f"mu={mu}",
                )
    if a_blocks.is_zero and mus:
        special, rest = mus[0], mus[1:]
        report.check(
            "constituents",
            not central_specialization(pi, special).is_zero
            or case.tag == "CuspNonGen",
            "nonzero value at the listed mu",
            central_specialization(pi, special).render(),
            branch=f"mu={special}",
        )
        for mu in rest:
            zeta = central_specialization(pi, mu)
            report.check(
                "constituents",
                zeta.is_zero,
                "0 off the listed mu",
                zeta.render(),
                branch=f"mu={mu}",
            )
    return report


def check_hom(case: CorpusCase) -> VerificationReport:
    report = hom_cross_validation(case.build(), case_id=case.case_id)
    report.merge(multiplicity_bound_check(case.build(), case_id=case.case_id))
    return report


def check_euler(case: CorpusCase) -> VerificationReport:
    """chi(S_2^{m} + j_!i_*(A) + i_*(B), Y) = m_Pi m_Y for both targets."""
    report = VerificationReport(case.case_id)
    pi = case.build()
    gk = gk_decomposition(pi)
    x = gk.mirabolic_expression()
    for target in (GENERIC_PRINCIPAL_SERIES, ONE_DIMENSIONAL):
        expected = gk.whittaker_multiplicity * target.whittaker_multiplicity
        got = euler_characteristic(x, target)
        report.check(
            "euler",
            got == expected,
            f"m_Pi * m_Y = {expected}",
            str(got),
            branch=target.description,
        )
    return report


CHECKS: dict[str, Callable[[CorpusCase], VerificationReport]] = {
    "delta": check_delta,
    "correspondence": check_correspondence,
    "independence": check_independence,
    "constituents": check_constituents,
    "hom": check_hom,
    "euler": check_euler,
}

CHECK_NAMES = tuple(sorted(CHECKS))


def run_verification(
    check: str = "all",
    selector: Optional[str] = None,
    workers: int = 1,
) -> tuple[str, int, int]:
    """Run verification suites over the corpus.

    Returns (rendered report, checks run, failure count).  Results are keyed
    and merged by (check, case id), so they are independent of worker count
    and scheduling.
    """
    names = CHECK_NAMES if check == "all" else (check,)
    for name in names:
        if name not in CHECKS:
            raise LspinError(
                f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)} or all"
            )
    cases = select_cases(selector)
    jobs = [(name, case) for name in names for case in cases]

    def run(job: tuple[str, CorpusCase]) -> tuple[str, str, VerificationReport]:
        name, case = job
        return name, case.case_id, CHECKS[name](case)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]
    results.sort(key=lambda r: (r[0], r[1]))

    lines = []
    total_checks = 0
    total_failures = 0
    for name in names:
        per_check = [r for r in results if r[0] == name]
        n_checks = sum(r[2].checks_run for r in per_check)
        n_fail = sum(len(r[2].failures) for r in per_check)
        total_checks += n_checks
        total_failures += n_fail
        status = "ok" if n_fail == 0 else f"{n_fail} FAILURES"
        lines.append(f"check {name}: {len(per_check)} cases, {n_checks} checks, {status}")
        for _, case_id, report in per_check:
            if report.failures:
                lines.extend("  " + f.render() for f in report.failures)
    lines.append(f"summary: {total_checks} checks, {total_failures} failures")
    return "\n".join(lines) + "\n", total_checks, total_failures
