"""
Teleporting through the swapped channel
=======================================

A maximally entangled channel teleports perfectly. A partially entangled
channel still gives fidelity 1, but only with probability 2 b^2, thanks to an
ancilla and a unitary on Danny's side. A noisy channel gives fidelity below
one.
"""

import numpy as np

from swapkit import ChannelState, NoisyPairParams, UnknownQubit, teleport_probabilistic, teleport_standard
from swapkit.teleport import average_fidelity, swap_channel, teleport_noisy_all, total_success_probability

rng = np.random.default_rng(5)
chi = UnknownQubit.random(rng)

for r in teleport_standard(chi, ChannelState.pure(1 / np.sqrt(2))):
    print(f"standard  {r.outcome_label:5s} p={r.outcome_probability:.3f}  F={r.fidelity:.12f}")

# %%
a, b = np.sqrt(0.8), np.sqrt(0.2)
res = teleport_probabilistic(chi, ChannelState.pure(a, b))
for r in res:
    print(f"probabilistic {r.outcome_label:5s} ancilla ok with p={r.success_probability:.3f}  F={r.fidelity:.12f}  "
          f"(failure branch F={r.failure_fidelity:.3f})")
print(f"total success {total_success_probability(res):.6f} vs 2b^2 = {2 * b * b:.6f}")

# %%
# The channel left behind by a noisy swap. Fidelity climbs back to 1 as the
# visibility goes to 1; a fully mixed channel gives 1/2 on average.
print("\nalpha  success  mean F")
for alpha in np.linspace(0.2, 1.0, 5):
    channel = swap_channel(NoisyPairParams.of(alpha, 0.5), "Phi+")
    res = teleport_noisy_all(chi, channel)
    print(f"{alpha:4.2f}   {total_success_probability(res):.4f}   {average_fidelity(res):.4f}")
