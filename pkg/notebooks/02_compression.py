# %% [markdown]
# # How many walks collapse onto one filling
#
# Every admissible pair maps to a filling; the terms over a fiber add up to a
# single t^N (1-t)^des.

# %%
from collections import Counter

from hlbc.exactpoly import tpoly_str
from hlbc.formula import compressed_fiber_demo, verify_compression

rep = verify_compression("C", 2, (2, 1))
rep.pairs, rep.fillings, rep.factor

# %% fiber size histogram
Counter(f.size for f in rep.fibers)

# %% the largest fibers
for f in sorted(rep.fibers, key=lambda f: -f.size)[:3]:
    print(f.filling.columns, f.size, tpoly_str(f.total))

# %% rank three: 12496 walks against 2527 fillings
big = verify_compression("C", 3, (3, 2, 1))
big.ok, big.pairs, big.fillings, float(big.factor)

# %% [markdown]
# Grouping by the *compressed* filling instead is too coarse: this fiber of
# two walks sums to (1-t)(1-t+t^2), which is not of the form t^a (1-t)^b.

# %%
demo = compressed_fiber_demo(2, (3, 2))
print(demo.w, [" ".join(map(str, c)) for c in demo.chains])
print(tpoly_str(demo.total), demo.factored_form)
