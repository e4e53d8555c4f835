"""A kinetic state whose spatial density never moves while the state turns.

The harmonic flow rotates phase space rigidly.  Adding a multiple of
A chi to a function of the energy leaves the spatial density frozen
while the full distribution rotates away and comes back after 2 pi.
On a 16-per-axis grid the drift is dominated by resolution; use 32 or more.

    python demos/04_frozen_density.py [n]
"""
import sys

from vlasov_memory.appendix_lab import run_appendix


def main(n=32):
    rep = run_appendix(n=n)
    print(f"grid {n}^4, scale {rep.scale:g}")
    for t, drift in zip(rep.times, rep.rho_drift):
        print(f"  t = {t:5.2f}  |rho(t) - rho(0)|_1 = {drift:.2e}")
    print(f"quarter turn moves the state by {rep.quarter_change / rep.f0_l1:.1%} of its mass")
    print(f"after one period the state is back to {rep.period_error / rep.f0_l1:.1e}")
    print("criteria:", rep.criteria())


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 32)
