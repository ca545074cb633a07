"""
Subregular poles and equivariant functionals
============================================

A subregular factor L(s, nu^{1/2} tau) occurs for tau in {rho, rho*} exactly
when the one-dimensional space of (nu tau)-equivariant functionals is
nonzero.  The functional dimension is read off the central specialization:
its one-dimensional top at the model point matches the classification.
"""

from lspin import (
    CharacterGroup,
    Generator,
    ReprSpec,
    bessel_datum,
    central_specialization,
    hom_dim,
    subregular_factor,
    total_lfactor,
)

group = CharacterGroup([Generator("sigma")])
sigma, nu = group.character(sigma=1), group.nu

# Type IVc admits rho in {nu sigma, nu^{-1} sigma}; both give the single
# subregular factor L(s, nu^{3/2} sigma).
pi = ReprSpec("IVc", sigma=sigma)
for rho in (nu * sigma, nu.inverse() * sigma):
    lam = bessel_datum(pi, rho)
    print(f"IVc, rho = {rho}: sreg = {subregular_factor(pi, lam)}")
    print(f"            total = {total_lfactor(pi, lam)}")

# The correspondence: nu^{3/2} sigma = nu^{1/2} (nu sigma) and the functional
# at rho~ = nu (nu sigma) = nu^2 sigma exists, while at rho~ = sigma it does
# not (the exception of the classification).
print(f"hom_dim(IVc, nu^2 sigma) = {hom_dim(pi, nu**2 * sigma)}")
print(f"hom_dim(IVc, sigma)      = {hom_dim(pi, sigma)}")

# The module shapes explain both: at mu = (nu^2 sigma)^2 the specialization
# has a one-dimensional top nu^2 sigma, at mu = sigma^2 the Steinberg sits on
# top and no functional survives.
for rho_t in (nu**2 * sigma, sigma):
    zeta = central_specialization(pi, rho_t**2)
    dim = zeta.one_dim_quotient_dim(rho_t)
    print(f"zeta at {rho_t}^2: {zeta}   -> top multiplicity {dim}")
