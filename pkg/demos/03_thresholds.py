# %% [markdown]
# Where switching becomes possible.  For the triaxial body the analytic
# bounds bracket the amplitude found by bisection on the shooting scan.
# For a body with equal hard-axis factors the threshold and the switching
# time are known exactly.

# %%
import math

from magswitch.dynamics import MaterialParams
from magswitch.shooting import ShootingConfig, find_ucrit, shoot_scan
from magswitch.thresholds import minimal_time_symmetric, threshold_report

fast = ShootingConfig(U=1.0, theta_grid_size=16, dt=1e-2, n_candidates=2, dense_factor=4)

tri = MaterialParams(0.6, (0.2, 0.5, 1.0))
rep = threshold_report(tri)
est = find_ucrit(tri, (0.1, rep.u_plan * math.sqrt(1.1)), 1e-3, template=fast)
print(f"u_stab {rep.u_stab:.5f} <= numeric {est.value:.4f} <= u_plan {rep.u_plan:.4f}")

# %%
sym = MaterialParams(0.6, (0.1, 0.2, 0.2))
rep = threshold_report(sym)
est = find_ucrit(sym, (0.0125, 0.055), 5e-4, template=fast)
print(f"exact threshold {rep.u_crit_closed_form:.5f}, bisection {est.value:.5f}")

print(f"{'U':>6} {'T exact':>10} {'T shooting':>11}")
for U in (0.03, 0.05, 0.1, 0.2, 0.5, 1.0):
    res = shoot_scan(ShootingConfig(U=U, theta_grid_size=16), sym)
    print(f"{U:6.2f} {minimal_time_symmetric(U, sym):10.4f} {res.best.T:11.4f}")
