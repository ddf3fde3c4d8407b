"""Run the bundled census, print the distribution tables and fit the defect decay."""

# %%
import numpy as np

from stategenus.census import (
    defect_report,
    fit_exponential_decay,
    load_fixture,
    process_batch,
    render_defects,
    render_summary,
    summarize,
)

knots = process_batch(load_fixture("knots"))
links = process_batch(load_fixture("links"))
print(len(knots), "knots,", len(links), "links")

# %%
print(render_summary(summarize(knots)))

# %%
print(render_summary(summarize(links)))

# %% [markdown]
# A defect is a diagram whose crosscap number exceeds its unoriented genus.
# They get rarer as the crossing number grows.

# %%
kd = defect_report(knots)
print(render_defects(kd))

# %%
points = [(c, row.proportion) for c, row in kd.items() if c >= 7 and row.total]
amp, rate = fit_exponential_decay(points)
print(f"fit over c=7..12: proportion ~ {amp:.3f} exp(-{rate:.4f} c)")
cs = np.array([c for c, _ in points])
resid = np.array([p for _, p in points]) - amp * np.exp(-rate * cs)
print("residuals:", np.round(resid, 5))
