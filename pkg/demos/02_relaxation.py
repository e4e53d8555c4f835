"""Particles in a flat-bottomed well lose their energy to the medium.

Runs a shortened version of the ``shifted_well_relaxation`` preset and
prints the energy ledger next to what the trajectory actually does: the
confined energy stays under its ceiling, the dissipation functional stays
nonpositive, and the particles slow down.

    python demos/02_relaxation.py [t_end]
"""
import sys

import numpy as np

from vlasov_memory import diagnostics as dg
from vlasov_memory.config import parse_config
from vlasov_memory.dynamics import simulate
from vlasov_memory.presets import preset


def main(t_end=60.0):
    data = preset("shifted_well_relaxation")
    data["run"]["t_end"] = t_end
    cfg = parse_config(data)
    ens, model = cfg.initial(), cfg.model()
    led = dg.constants_ledger(ens, model)
    print("constants:", {k: round(v, 4) for k, v in led.as_dict().items()})

    tr = simulate(ens, model, cfg["run"]["dt"], t_end, record_every=cfg["run"]["record_every"])
    E = dg.energy_series(tr, model.sigma, model.potential, model.kernel.kappa)
    k = dg.dissipation_kT(tr, model.sigma, model.kernel)
    speed = np.linalg.norm(tr.p, axis=2).max(axis=1)
    print(f"{'t':>6} {'energy':>9} {'modified':>9} {'k(T)':>10} {'max speed':>9}")
    for i in np.linspace(0, len(tr.times) - 1, 9).astype(int):
        print(f"{tr.times[i]:6.1f} {E.energy[i]:9.4f} {E.modified[i]:9.4f} {k[i]:10.2e} {speed[i]:9.4f}")
    print(f"sup energy {E.energy.max():.4f} vs ceiling {led.E1:.4f}; max k(T) {k.max():.2e}")


if __name__ == "__main__":
    main(float(sys.argv[1]) if len(sys.argv) > 1 else 60.0)
