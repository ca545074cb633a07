"""
The representation catalog and split Bessel data
================================================

Every irreducible GSp(4) type carries an eigencharacter multiset Delta_0
whose shift Delta_+ governs which split Bessel data Lambda = rho x rho*
exist: generic types admit every rho, non-generic types exactly rho in
Delta_+.
"""

from lspin import (
    ReprSpec,
    CharacterGroup,
    Generator,
    admissible_bessel_set,
    bessel_datum,
    central_character,
    delta0,
    delta_plus,
    gk_decomposition,
)

group = CharacterGroup([Generator("chi"), Generator("sigma")])
chi, sigma = group.character(chi=1), group.character(sigma=1)

for pi in (
    ReprSpec("IIIa", chi=chi, sigma=sigma),
    ReprSpec("IIIb", chi=chi, sigma=sigma),
    ReprSpec("IVc", sigma=sigma),
    ReprSpec("IVd", sigma=sigma),
):
    admissible = admissible_bessel_set(pi)
    print(f"{pi.render():>22}: omega = {central_character(pi)}")
    print(f"{'':>22}  Delta_0 = {', '.join(map(str, delta0(pi))) or '(empty)'}")
    if admissible is None:
        print(f"{'':>22}  Bessel data: all rho (generic)")
    else:
        print(f"{'':>22}  Bessel data: {', '.join(map(str, admissible)) or 'none'}")

# rho* is determined by the central character: rho* = omega / rho.
pi = ReprSpec("IIIb", chi=chi, sigma=sigma)
lam = bessel_datum(pi, sigma)
print(f"\nIIIb datum: {lam.render()}")

# The Gelfand-Kazhdan filtration 0 -> j_!i_*(A) -> Pi/S_2^m -> i_*(B) -> 0.
gk = gk_decomposition(pi)
print(f"IIIb: m_Pi = {gk.whittaker_multiplicity}, A = {gk.a}, B = {gk.b}")

special = ReprSpec("IIIb", chi=group.nu, sigma=sigma)
gk = gk_decomposition(special)
print(f"IIIb at chi = nu: A = {gk.a}, B = {gk.b}")
