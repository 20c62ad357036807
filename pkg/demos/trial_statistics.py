"""
Measuring the failure rate instead of trusting it
=================================================

At small primes a random draw visibly fails some of the time: the count
comes out wrong, the ideal degenerates, or the job blows its time cap.
A trial batch tallies every outcome into a histogram whose buckets sum
to N by construction, and the success fraction can be compared against
the theoretical lower bounds.

With N=60 this runs in under a minute; bump TRIALS for tighter bands
(the 500-trial batches in the acceptance suite take a few minutes).
"""

import os

from satura import run_trials
from satura.problems import example_monomial_system, alt_system

TRIALS = int(os.environ.get("TRIALS", "60"))

# the toy system never fails at a 15-bit prime
rep = run_trials(example_monomial_system(), 1, 32003, TRIALS, seed=2024)
print(f"monomial example, p=32003: {rep.histogram} "
      f"-> success {rep.success_fraction:.3f}")

# the linkage count at i=6 and a deliberately small prime p=251:
# published replication puts the success rate near 0.96
rep = run_trials(alt_system(), 6, 251, TRIALS, seed=2024)
print(f"linkage i=6, p=251 (reference {rep.reference}, "
      f"source {rep.reference_source}):")
for bucket, count in sorted(rep.histogram.items()):
    print(f"   {bucket:>10}: {count}")
print(f"   success fraction {rep.success_fraction:.3f} over {rep.trials} trials")
print(f"   wall time {rep.wall_time:.1f} s, "
      f"median trial {rep.time_stats['median']:.2f} s")

# every batch is bit-reproducible from its master seed: trial t draws
# seed split_seed(seed, t) no matter how many workers are running
again = run_trials(alt_system(), 6, 251, TRIALS, seed=2024)
assert again.histogram == rep.histogram
print("rerun with the same seed: identical histogram")
