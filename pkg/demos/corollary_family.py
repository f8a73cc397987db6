# %% [markdown]
# An infinite non-DAS family
#
# For odd a >= 3, take p = (7a-1)/2, k = (a-1)/2, q = (5a-1)/2.  The union
# K_a + CS(clique=(5a-1)/2, indep=(3a-1)/2) + aK_1 is cospectral with the
# pineapple.  Spot-check the first few members.

# %%
import time

from pineapple_spectra.classifier import corollary_family

for a in range(3, 16, 2):
    t0 = time.perf_counter()
    params, mate = corollary_family(a)
    print(f"a={a:2d}  K_{{{params.p},{params.k}}}^{{{params.q}}}  ~  {mate.spec.describe()}"
          f"   ({time.perf_counter() - t0:.2f}s)")

# %% Even a is rejected, since the parameters would not be integers
try:
    corollary_family(4)
except ValueError as err:
    print("a=4:", err)
