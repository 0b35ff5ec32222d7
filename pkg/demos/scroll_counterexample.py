"""
A rational normal scroll with non-additive defects
==================================================

The surface scroll S(1,4) has delta1 = 0 yet delta2 = 2. The defect
sequence is not additive, and N sits strictly below the phi bound.
"""

from __future__ import annotations

from terracini import (
    SampleConfig,
    ambient_span_dim,
    build_spec,
    check_additivity,
    defect_profile,
    phi_bound,
    projective_dimension,
    tangential_projection,
    vertex_dimension,
)

cfg = SampleConfig()
x = build_spec("scroll:1,4", cfg)
p = defect_profile(x, cfg)
print("secant dims", p.secant_dims, "delta", p.delta)
print("additive:", check_additivity(p.delta), " N =", p.N, "<= phi =", phi_bound(p.n, p.k0, p.delta1))

# projecting from a general tangent plane gives a surface in P^3, a cone
# with a point vertex that does not fill its span
x1 = tangential_projection(x, 1, cfg)
print("X_1: dim", projective_dimension(x1, cfg), "span", ambient_span_dim(x1, cfg), "vertex", vertex_dimension(x1, cfg))
