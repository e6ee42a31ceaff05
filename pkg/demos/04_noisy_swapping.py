"""
Swapping noisy pairs
====================

Both pairs carry white noise with visibility alpha. After the Bell
measurement the AD state is an X state. Its average entanglement never exceeds
the product of the input values, and concurrence never falls below
negativity.
"""

import numpy as np

from swapkit import (
    NoisyPairParams,
    average_noisy_concurrence,
    average_noisy_negativity,
    concurrence_xstate,
    depolarize,
    negativity_xstate,
    swap_noisy_pairs,
)
from swapkit.swap import branch_probabilities

params = NoisyPairParams.of(0.8, 0.5)
print("P_Phi, P_Psi =", branch_probabilities(params))
for o in swap_noisy_pairs(params):
    print(o.label, np.round(np.real(np.diag(o.state)), 4), "anti-diagonal", np.round(o.state[0, 3].real, 4), np.round(o.state[1, 2].real, 4))

# %%
# Sweep visibility at two Schmidt weights.
print("\n p0   alpha   C_av     C_in^2   N_av     N_in^2")
for p0 in (0.5, 0.2):
    for alpha in np.linspace(0.2, 1.0, 5):
        p = NoisyPairParams.of(alpha, p0)
        x = depolarize(p.schmidt, alpha)
        print(f"{p0:4.2f}  {alpha:4.2f}   {average_noisy_concurrence(p):.4f}   {concurrence_xstate(x) ** 2:.4f}   "
              f"{average_noisy_negativity(p):.4f}   {negativity_xstate(x) ** 2:.4f}")

# %%
# The full figure grids come from the command line, e.g.
#   swapkit sweep --experiment fig6-compare --grid p0=0:1:0.1 --out fig6.csv
