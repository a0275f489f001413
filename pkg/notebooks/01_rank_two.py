# %% [markdown]
# # P_(2,1) for Sp(4), two ways
#
# Fillings on one side, folded alcove walks on the other.

# %%
from hlbc import HLPoly, enumerate_fillings, lambda_chain, schwer_evaluate, tableau_evaluate
from hlbc.chains import dump_chain
from hlbc.fillings import content, render_filling, stat_des, stat_N

chain = lambda_chain("C", 2, (2, 1))
print(dump_chain(chain))  # 7 roots, "||" separates the two column groups

# %%
F = enumerate_fillings("C", 2, (2, 1))
len(F)  # 27

# %% a few fillings with their statistics; barred letters print as negatives
for s in F[:4]:
    print(render_filling(s.columns))
    print("N =", stat_N(s), " des =", stat_des(s), " content (doubled) =", content(s))
    print()

# %%
P = tableau_evaluate("C", 2, (2, 1), F)
Q = schwer_evaluate(chain)
print(P)
P == Q  # True

# %% t = 0 gives the character of the 16-dimensional module, t = 1 the orbit sum
sum(P.specialize_t(0).values()), len(P.specialize_t(1))

# %% round trip through JSON
HLPoly.loads(2, P.dumps()) == P
