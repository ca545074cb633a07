"""
Exact character algebra and Tate factors
=========================================

Characters of Gl(1) live in a finitely presented abelian group: a rational
exponent on the valuation character nu plus integer exponents on named
generators.  Relations (including finite generator orders) are folded into a
normal form, so equality is exact and decidable.
"""

from fractions import Fraction

from lspin import CharacterGroup, Generator, tate_factor

# A session with a free unramified sigma, a quadratic xi, and a chi1 that the
# relation system pins to nu (the IIIb special position).
group = CharacterGroup(
    [Generator("xi", order=2), Generator("chi1"), Generator("sigma")],
    relations=[({"chi1": 1}, Fraction(-1))],  # chi1 * nu^{-1} = 1
)

sigma = group.character(sigma=1)
xi = group.character(xi=1)
chi1 = group.character(chi1=1)
half = group.nu_power(Fraction(1, 2))

print("normal forms fold relations into the nu-exponent:")
print(f"  chi1          = {chi1}")
print(f"  xi^3 * sigma  = {group.character(xi=3, sigma=1)}")
print(f"  chi1 == nu    : {chi1 == group.nu}")

# Tate factors: unramified characters contribute (1 - chi(varpi) q^{-s})^{-1},
# ramified ones contribute the trivial factor.
product = tate_factor(half * sigma) * tate_factor(half * chi1 * sigma)
print(f"\nL-factor product: {product}")
print(f"degree two, divides itself: {product.divides(product * product)}")

# The numeric model: nu(varpi) = q^{-1}, Satake values for the generators.
satake = {"sigma": 0.6 + 0.8j, "xi": -1.0, "chi1": 1 / 3}
value = product.numeric_eval(3, satake, s=0.25 + 1j)
print(f"numeric value at q=3, s=0.25+1j: {value:.6f}")

# L(s, nu) at s=0 equals L(s, 1) at s=1: the nu-shift is a shift in s.
lhs = tate_factor(group.nu).numeric_eval(3, {}, 0.0)
rhs = tate_factor(group.one).numeric_eval(3, {}, 1.0)
print(f"shift coherence: {lhs:.6f} == {rhs:.6f}")
