# %% [markdown]
# # A reflexive 4-polytope that is very ample but not normal
#
# We build the polytope from its nine vertices, look at its facets and
# lattice points, find the point of 2P that is not a sum of two lattice
# points, and see why the toric ring still has depth 1.

# %%
from polydepth import instances
from polydepth.polytope import dual_polytope, is_reflexive, lattice_points
from polydepth.semigroup import decompose_point, is_normal, is_very_ample, spans_lattice
from polydepth.algebra.depth import depth

P = instances.non_normal_polytope()
print(P)
for f in P.facets:
    print("  ", f)
print("reflexive:", is_reflexive(P))

# %% [markdown]
# Every facet has right-hand side 1, so the dual is a lattice polytope.
# The lattice points are the vertices plus the origin and (0, 0, +-1, 0).

# %%
pts = lattice_points(P)
print(len(pts), "lattice points")
for p in pts:
    print("  ", p)

# %% [markdown]
# Normality fails at height 2: the Hilbert basis of the cone over P has
# one element of height 2, and it is exactly (1, 1, 3, 2).

# %%
cert = is_normal(P)
print("normal:", bool(cert), "witness:", cert.witness)
print("as a sum of 2:", decompose_point((1, 1, 3, 2), 2, P))
print("as a sum of 3:", decompose_point((1, 1, 3, 2), 3, P))

# %% [markdown]
# With three summands the origin lets the decomposition go through, and the
# vertex cones confirm very ampleness.  Since the lattice points also span
# Z^5 (after appending a 1), the depth is forced down to 1.

# %%
print("very ample:", bool(is_very_ample(P)))
print("spans lattice:", spans_lattice(P))
fast = depth(P, "shortcut")
slow = depth(P, "exact")
print(f"depth via {fast.method}: {fast.value}")
print(f"depth via resolution: {slow.value}, Betti ranks {slow.details['betti']}")
print("dual normal:", bool(is_normal(dual_polytope(P))))
