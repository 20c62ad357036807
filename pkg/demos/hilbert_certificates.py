"""
Certifying a count with Hilbert functions
=========================================

A randomized count is only as good as the draw that produced it.  This
script replays the exact certification argument for the plane-conics
system: an affine Hilbert function computed from a Groebner basis over
Q, squeezed between a symbolic-reduction upper bound and a Veronese
rank lower bound, pins the count at 18 with no randomness left.
"""

import time

from satura import (affine_hilbert_function, buchberger, jde_dimension,
                    prime_field, veronese_rank_lower_bound)
from satura.hilbert import emit_certification_system, find_points_bruteforce
from satura.problems import conics_pstar_system

# six fixed linear combinations of the 14 conics polynomials
combos = conics_pstar_system()
print("combination degrees:", [g.degree() for g in combos])

# exact Hilbert function over Q: the expensive, trustworthy route
start = time.time()
basis = buchberger(combos)
prof = affine_hilbert_function(basis, 5)
print(f"Groebner basis over Q: {len(basis)} generators, "
      f"{time.time() - start:.1f} s")
print(f"HF row: {prof.row()}  (stable at d={prof.stabilized_at}, "
      f"value {prof.stable_value})")

# the symbolic upper bounds: spans of m*h_i truncated to degree <= d.
# e is the extra multiplier degree; the bound tightens as e grows and
# meets the true Hilbert value well before the Groebner basis finishes.
print("\n d=2 bounds:")
for e in range(6):
    dim, bound = jde_dimension(combos, 2, e)
    print(f"  e={e}: dim {dim:3d}, bound {bound}")
print(" d=3 bounds:")
for e in range(5):
    dim, bound = jde_dimension(combos, 3, e)
    print(f"  e={e}: dim {dim:3d}, bound {bound}")

# rank of a Veronese matrix at verified solutions bounds HF from below.
# Over a prime field we can sweep a small system exhaustively.
F = prime_field(11)
ring = combos[0].ring.with_field(F)
toy = [ring.parse("a1^2 - 1"), ring.parse("a2^2 - a2"), ring.parse("a3"),
       ring.parse("a4 - 1"), ring.parse("b1 - 2"), ring.parse("b2 + 3")]
pts = find_points_bruteforce(toy)
print(f"\ntoy split system: {len(pts)} rational points")
for d in (1, 2):
    lo = veronese_rank_lower_bound(pts, d, F)
    hf = affine_hilbert_function(buchberger(toy), 4).values[d]
    print(f"  d={d}: rank {lo} <= HF {hf}")

# when the points only approximate solutions, a well-constrained square
# system pins them exactly: one copy of the equations per point plus a
# normalization forcing the selected Veronese submatrix to the identity
columns = [(0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0),
           (0, 1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0)]
cert = emit_certification_system(toy, pts, 2, columns)
k, n = len(pts), len(toy)
print(f"\ncertification system: {len(cert.polynomials)} equations "
      f"(= {k}*{n} + {k}^2) in {cert.ring.nvars} variables")
print("first point block:",
      ", ".join(str(g) for g in cert.polynomials[:3]), "...")
print(f"serialized: {len(cert.to_json()):,} bytes of JSON")
