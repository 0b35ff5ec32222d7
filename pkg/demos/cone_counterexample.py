"""
Cones break the bounds
======================

A cone over the rational normal quintic is 1-defective, but its tangential
projection is not; without smoothness the defect need not propagate.
"""

from __future__ import annotations

from terracini import SampleConfig, build_spec, defect_profile, phi_bound, tangential_projection, vertex_dimension

cfg = SampleConfig()
x = build_spec("veronese:n=1,d=5|cone", cfg)
p = defect_profile(x, cfg)
print("cone: n", p.n, "N", p.N, "delta", p.delta, "vertex dim", vertex_dimension(x, cfg))
print("phi bound", phi_bound(p.n, p.k0, p.delta1), "violated:", p.N > phi_bound(p.n, p.k0, p.delta1))

z = tangential_projection(x, 1, cfg)
print("X_1 delta1 =", defect_profile(z, cfg).delta1)

# the cone over the Veronese surface gains exactly one in delta1
c = defect_profile(build_spec("veronese:n=2,d=2|cone", cfg), cfg)
print("cone over v2(P^2): delta1 =", c.delta1)
