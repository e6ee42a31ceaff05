"""
Measuring entanglement of two qubits
====================================

Concurrence and negativity for pure Schmidt pairs, then for the same pairs
mixed with white noise. Both measures score 1 on a Bell state and 0 on a
product state.
"""

import numpy as np

from swapkit import (
    SchmidtPair,
    concurrence_pure,
    concurrence_schmidt,
    concurrence_wootters_oracle,
    concurrence_xstate,
    depolarize,
    negativity,
    negativity_xstate,
    schmidt_pair_state,
)

# A Schmidt pair sqrt(p0)|00> + sqrt(p1)|11>. The purity formula, the Schmidt
# formula and the partial-transpose spectrum all give the same number.
for p0 in (0.5, 0.25, 0.1, 0.0):
    sp = SchmidtPair(p0)
    v = schmidt_pair_state(sp)
    print(f"p0={p0:4.2f}  C_pure={concurrence_pure(v):.4f}  C_schmidt={concurrence_schmidt(sp):.4f}  N={negativity(v):.4f}")

# %%
# Mix the pair with white noise: rho = alpha |phi><phi| + (1 - alpha) I/4.
# The result is an X state, so closed forms apply. The Wootters spectrum
# is an independent check.
sp = SchmidtPair(0.3)
print("\nalpha   C_closed  C_wootters  N_closed  N_spectral")
for alpha in np.linspace(0, 1, 6):
    x = depolarize(sp, alpha)
    m = x.matrix()
    print(f"{alpha:4.2f}   {concurrence_xstate(x):.6f}  {concurrence_wootters_oracle(m):.6f}    "
          f"{negativity_xstate(x):.6f}  {negativity(m):.6f}")

# %%
# Entanglement survives the noise only above alpha = 1/(1 + 4 sqrt(p0 p1)).
# For the balanced pair this is 1/3.
for p0 in (0.5, 0.3, 0.1):
    thr = 1 / (1 + 4 * np.sqrt(p0 * (1 - p0)))
    below = concurrence_xstate(depolarize(SchmidtPair(p0), thr - 1e-6))
    above = concurrence_xstate(depolarize(SchmidtPair(p0), thr + 1e-6))
    print(f"p0={p0}: threshold {thr:.4f}, C just below {below:.2e}, just above {above:.2e}")
