"""
How big must the prime be?
==========================

Exact answers to three questions about the linkage system, using
nothing but big integers and rationals: how many primes can be unlucky,
how likely one random prime-field run reproduces the rational count,
and how many bits of prime buy a 99% guarantee.
"""

from fractions import Fraction

from satura import (BoundsInput, bounds_report, discriminant_degree_bound,
                    lucky_probability_lower_bound, min_prime_exponent,
                    nu_upper_bound)
from satura.problems import alt_system

degrees = alt_system().degrees()

# scenario one: the i=6 count with the saturated ideal degree capped at 47
g6 = BoundsInput.from_system(degrees, n=8, g_upper=47)
print("discriminant degree bound:",
      f"{discriminant_degree_bound(g6):,}")
print("unlucky prime cap nu:", f"{g6.resolved_nu():,}",
      f"(= C({47 + 9}, 9))")

# ((p-1)/p)^nu is astronomically wide an exponent, so past a bit budget
# the module returns a rigorous enclosure instead of the exact power
for k in (20, 35, 55):
    b = lucky_probability_lower_bound((1 << k) + 1, g6.resolved_nu())
    print(f"luckiness at ~2^{k}: {b}")

target = Fraction(99, 100)
print("bits for 99% success, i=6 inputs:",
      min_prime_exponent(g6, target))

# scenario two: the full g_0 count, ideal degree up to 18700
g0 = BoundsInput.from_system(degrees, n=8, g_upper=18700)
print("bits for 99% success, i=0 inputs:",
      min_prime_exponent(g0, target))

# everything at once, as the CLI reports it
rep = bounds_report(BoundsInput.from_system(degrees, n=8, g_upper=47,
                                            p=(1 << 55) + 1),
                    target=target)
print("\nfull report at p = 2^55 + 1:")
for key, value in rep.to_dict().items():
    print(f"  {key}: {value}")
