# %% [markdown]
# Classifying a single pineapple
#
# K_{p,k}^q is a clique on p vertices plus an independent set of q vertices,
# each joined to the same k clique vertices.  We ask whether any
# non-isomorphic graph shares its adjacency spectrum.

# %%
from pineapple_spectra.classifier import enumerate_mates
from pineapple_spectra.closed_forms import pineapple_poly
from pineapple_spectra.graph import PineappleParams, make_pineapple
from pineapple_spectra.spectra import char_poly

params = PineappleParams(5, 1, 12)
print(pineapple_poly(params))

# %% The closed form agrees with a direct Berkowitz computation
g = make_pineapple(params)
assert pineapple_poly(params).expand() == char_poly(g)
print(g.order, "vertices,", g.edge_count, "edges")

# %% Every mate the classifier knows about, each one checked by the oracle
result = enumerate_mates(params)
print("DAS" if result.das else "non-DAS")
for mate in result.mates:
    print(" ", mate)

# %% [markdown]
# Three different graphs on 17 vertices share this spectrum.  The JSON form
# round-trips, which is what the CLI's `--format json` prints.

# %%
print(result.to_json()[:200], "...")
