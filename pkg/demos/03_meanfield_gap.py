"""How far is a finite particle system from its kinetic limit?

Solves the kinetic equation once with many weighted particles, then runs
small particle systems next to it.  The transport distance grows like
1/sqrt(N) on a short horizon, which is what the mean-field estimate
predicts; the explicit constant is printed too, and it is very loose.

    python demos/03_meanfield_gap.py
"""
import math

import numpy as np

from vlasov_memory.config import parse_config
from vlasov_memory.meanfield import C_of_T, Scenario, coupled_run, discretize_density, solve_meanfield
from vlasov_memory.presets import preset


def main(seeds=4, M=2048):
    cfg = parse_config(preset("meanfield_scaling"))
    model, run, spec = cfg.model(), cfg["run"], cfg.density()
    sc = Scenario(model, run["dt"], run["t_end"], run["record_every"], run["policy"])
    ref = solve_meanfield(discretize_density(spec, M, "grid"), sc)
    C = C_of_T(model.sigma, model.kernel, model.potential, model.drive, run["t_end"])
    print(f"reference: {ref.trajectory.w.size} weighted points, C(T) = {C.nested:.3g}")
    Ns, med = [64, 128, 256], []
    for N in Ns:
        reps = [coupled_run(discretize_density(spec, N, "iid", seed=1000 * N + s), ref) for s in range(seeds)]
        med.append(float(np.median([r.sup_w1 for r in reps])))
        worst = max(r.sup_coupling for r in reps)
        print(f"N = {N:4d}: median sup W1 = {med[-1]:.4f}, worst coupling gap {worst:.3f} "
              f"(bound {C.nested / math.sqrt(N):.3g})")
    print(f"log-log slope: {np.polyfit(np.log(Ns), np.log(med), 1)[0]:.2f}")


if __name__ == "__main__":
    main()
