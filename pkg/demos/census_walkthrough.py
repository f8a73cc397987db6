# %% [markdown]
# Census of K_{8,k}^q for q <= 100
#
# The published count for this grid is 589 DAS and 11 non-DAS.  Exact
# computation finds five more non-DAS pineapples, all with two-component
# mates.  Each one is shown with a float spectrum check as a second opinion.

# %%
import numpy as np

from pineapple_spectra.graph import make_pineapple
from pineapple_spectra.oracle import census

table = census(8, range(1, 7), range(1, 101))
print(table.summary())

# %%
for row in table.non_das:
    g = make_pineapple(row.params)
    spectrum = np.linalg.eigvalsh(g.adjacency.astype(float))
    for mate in row.mates:
        h = mate.spec.realize()
        other = np.linalg.eigvalsh(h.adjacency.astype(float))
        close = np.allclose(spectrum, other, atol=1e-6)
        print(f"{str(row.params):>18}  {mate.spec.describe():<45} float check {close}")
