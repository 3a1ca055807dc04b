# %% [markdown]
# Strong fields switch along nearly planar paths: the excursion out of
# the final plane shrinks like 1/U.

# %%
from magswitch.dynamics import MaterialParams
from magswitch.extremal import planarity_measure
from magswitch.shooting import ShootingConfig, shoot_scan

params = MaterialParams(0.6, (0.2, 0.5, 1.0))
prev = None
for U in (2.5, 5.0, 10.0, 20.0, 40.0):
    best = shoot_scan(ShootingConfig(U=U, t_max=10.0 / U), params).best
    p = planarity_measure(best.trajectory)
    ratio = f"{prev / p:.2f}" if prev else "-"
    print(f"U={U:5.1f}  T={best.T:.5f}  U*T={U * best.T:.4f}  planarity={p:.5f}  ratio={ratio}")
    prev = p
