"""Check the engine against brute force over every state of small diagrams."""

# %%
import time

from stategenus import compute_invariants
from stategenus.census import load_fixture
from stategenus.oracle import brute_force_invariants, brute_force_max_circles

recs = list(load_fixture("knots", 9)) + list(load_fixture("links", 9))
print(len(recs), "diagrams with at most 9 crossings")

# %% [markdown]
# The oracle smooths every crossing both ways, all 2^c combinations, and
# traces the circles directly.  It knows nothing about m-gons.

# %%
t0 = time.perf_counter()
mismatches = []
for rec in recs:
    a, b = compute_invariants(rec.gauss), brute_force_invariants(rec.gauss)
    if (a.unoriented_genus, a.crosscap) != (b.unoriented_genus, b.crosscap):
        mismatches.append(rec.name)
print(f"{len(mismatches)} mismatches in {time.perf_counter() - t0:.1f} s")

# %%
best, winners = brute_force_max_circles(recs[-1].gauss)
print(recs[-1].name, "has", len(winners), "optimal states with", best, "circles")
