# %% [markdown]
# # Type B and half-integral exponents
#
# Weights are stored doubled; the spin part shows up as exponents like x1^(1/2).

# %%
from hlbc import dimension, kn_fillings, lambda_chain, schwer_evaluate, tableau_evaluate
from hlbc.chains import mu_from_coefficients

mu = mu_from_coefficients((1, 1))  # omega_1 + omega_2 in B2
chain = lambda_chain("B", 2, mu)
mu, chain.lam  # lam is doubled: (3/2, 1/2)

# %%
P = tableau_evaluate("B", 2, mu)
print(P)
P == schwer_evaluate(chain)

# %% fillings with N = 0 count the irreducible module
len(kn_fillings("B", 2, mu)), dimension("B", 2, chain.lam)

# %% rank three, every fundamental weight once
mu3 = (3, 2, 1)
P3 = tableau_evaluate("B", 3, mu3)
P3 == schwer_evaluate(lambda_chain("B", 3, mu3)), len(P3)
