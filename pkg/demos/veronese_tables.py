"""
Secant defects of quadratic Veronese varieties
==============================================

Compute the defect sequence of v2(P^n) and of its projections from a point.
"""

from __future__ import annotations

from terracini import SampleConfig, build_spec, defect_profile, n_scorza

cfg = SampleConfig(seed=0)

# v2(P^n) spans P^N(n) and fills it after exactly n secant steps
for n in range(2, 6):
    p = defect_profile(build_spec(f"veronese:n={n},d=2", cfg), cfg)
    print(f"n={n}  N={p.N} (N(n)={n_scorza(n)})  k0={p.k0}  delta={p.delta}  zeta={p.zeta}")

# projecting from a general point or from a point of the variety loses one step
for mode in ("general", "inner"):
    p = defect_profile(build_spec(f"veronese:n=4,d=2|project:{mode}", cfg), cfg)
    print(f"{mode:>8}: N={p.N}  k0={p.k0}  zeta={p.zeta}")
