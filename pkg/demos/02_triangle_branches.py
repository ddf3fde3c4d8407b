"""The knot 8_18 has no 1-gon or bigon, so the engine has to branch."""

# %%
from stategenus import minimal_genus_states, parse_gauss
from stategenus.smoothing import (
    GaussStateCode,
    detect_smallest_mgon,
    smooth_anti_triangle,
    smooth_triangle,
)

g = parse_gauss("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]")
start = GaussStateCode.initial(g)
tri = detect_smallest_mgon(start)
print("triangle on crossings", tri.crossings)

# %% [markdown]
# Smoothing a triangle one way produces a new circle through its three
# crossings.  The other way produces no circle and rejoins the strands into
# one long component.  Both have to be explored.

# %%
print("triangle branch:     ", smooth_triangle(start, tri))
print("anti-triangle branch:", smooth_anti_triangle(start, tri))

# %%
res = minimal_genus_states(g)
for i, leaf in enumerate(res.all_leaves):
    print(f"leaf {i}: {len(leaf)} circles  {leaf}")
print("best:", res.best)
