"""Follow the trefoil through the smoothing engine one step at a time."""

# %%
from stategenus import compute_invariants, parse_gauss
from stategenus.engine import walk
from stategenus.invariants import build_state_graph

trefoil = parse_gauss("[[1,2,3,1,2,3]]")
print("crossings:", trefoil.crossing_count)

# %% [markdown]
# Each node of the search is a Gauss-state code: the word still to be
# smoothed, the circles found so far, and the smoothed crossings.  The
# finding printed next to it is what gets smoothed next.

# %%
for node, finding in walk(trefoil):
    kind = type(finding).__name__ if finding else "leaf"
    print(f"{str(node):40s} {kind}")

# %% [markdown]
# The leaf holds three circles.  Collapsing each circle to a vertex and each
# crossing to an edge gives a triangle graph, which is simple but has an odd
# cycle, so the crosscap number equals the unoriented genus.

# %%
rep = compute_invariants(trefoil)
graph = build_state_graph(rep.witness)
print("state code:", rep.witness)
print("state graph edges:", graph.edges)
print("simple:", rep.simple, " bipartite:", rep.bipartite)
print("unoriented genus:", rep.unoriented_genus, " crosscap number:", rep.crosscap)
