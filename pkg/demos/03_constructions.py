# %% [markdown]
# # Every depth in dimension 5
#
# Bipyramids over reflexive polytopes raise the depth by one and keep the
# dual normal; products with [-1, 1] keep a non-normal very ample polytope
# non-normal and very ample.  Starting from dimension 4 this gives reflexive
# 5-polytopes of every depth from 1 to 6 with normal duals.

# %%
from polydepth import instances
from polydepth.algebra.depth import depth
from polydepth.polytope import bipyramid, cube, dual_polytope, is_reflexive, product_with_cube
from polydepth.semigroup import is_normal, is_very_ample

L = instances.non_normal_polytope()
base = {
    1: product_with_cube(L, 1),
    2: bipyramid(L),
    3: bipyramid(instances.depth2_polytope()),
    4: bipyramid(instances.depth3_polytope()),
    5: bipyramid(instances.depth4_polytope()),
    6: cube(5),
}

# %%
for r, Q in base.items():
    res = depth(Q, "shortcut")
    print(
        f"depth {res.value} ({res.method}): reflexive {is_reflexive(Q)}, "
        f"{len(Q.lattice_points)} lattice points, dual normal {bool(is_normal(dual_polytope(Q)))}"
    )
    assert res.value == r

# %% [markdown]
# The product with a segment stays very ample while the bipyramid does not:
# a very ample bipyramid over a reflexive polytope is already normal.

# %%
Q = product_with_cube(L, 1)
B = bipyramid(L)
print("P x [-1,1]: normal", bool(is_normal(Q)), "very ample", bool(is_very_ample(Q)))
print("bipyr(P):   normal", bool(is_normal(B)), "very ample", bool(is_very_ample(B)))

# %% [markdown]
# Cross-check one bipyramid step with an honest resolution.

# %%
P3 = instances.depth4_polytope()
print("depth P3 =", depth(P3, "exact").value, " depth bipyr(P3) =", depth(bipyramid(P3), "exact").value)
