"""
The four-bar linkage system, end to end
=======================================

Fifteen polynomials in eight variables describe the coupler curve of a
planar four-bar mechanism, written in isotropic coordinates so complex
conjugation acts as a variable swap.  The structure checks below are
the transcription firewall: if any of them failed, every count later
in the pipeline would be garbage.
"""

from satura import (alt_system, bezout_bound, compute_gi, degree_profile,
                    prime_field, verify_base_locus)
from satura.problems import ALT_CONJ_PAIRS, alt_conj

inst = alt_system()
degrees, d_min, d_max = degree_profile(inst)
print(f"{inst.r} polynomials in {inst.n} variables")
print(f"degrees {degrees}, D_min={d_min}, D_max={d_max}")
print(f"product of degrees: {bezout_bound(degrees):,}")

# conjugation pairing: f_j and f_sigma(j) swap under bar-exchange
swaps = sum(1 for j, k in ALT_CONJ_PAIRS.items() if j != k)
assert all(alt_conj(inst.polys[j - 1]) == inst.polys[k - 1]
           for j, k in ALT_CONJ_PAIRS.items())
print(f"conjugation involution holds ({swaps} swapped indices, "
      f"{inst.r - swaps} self-paired)")

# all 15 polynomials vanish identically on the 7 declared linear spaces
report = verify_base_locus(inst)
print(f"base locus: {len(inst.base_locus)} linear spaces, "
      f"{report.checked} vanishing identities, ok={report.ok}")

# the counts the mechanism literature cares about: g_7 = 7 trivially
# (one linear slice of the 7 nontrivial generators), g_6 = 43
for i, p in ((7, 32003), (6, 2 ** 15 + 3)):
    res = compute_gi(inst, i, prime_field(p), seed=2024)
    print(f"g_{i} over F_{p}: {res.value}   ({res.elapsed:.2f} s)")

# a full sweep down to i=0 reproduces 1108, 3832, 8716, 10858, 8652 but
# needs hours with this engine; run the CLI with --i 5 for the largest
# cell that finishes over coffee (234, about half a minute).
print("lower-i cells are long-running; see README for the table")
