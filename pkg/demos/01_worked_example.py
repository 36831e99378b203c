"""Walk through the period-6 automorphism x -> (x + y, -x) step by step.

Run with ``python demos/01_worked_example.py``.
"""
from periodic_torus import AffineTorusMap, Mat2, complete_characteristic, fixed_points, lower_period_set, map_period

A = Mat2(1, 1, -1, 0)
f = AffineTorusMap(A)
print("map:", f)
print("period:", map_period(f))

# %% fixed points of the powers f, f^2, f^3 (period divides 6)
for m in (1, 2, 3):
    pts = fixed_points(f.power(m)).points
    print(f"Fix(f^{m}):", ", ".join(f"({p.x}, {p.y})" for p in pts))

# %% points of smaller period, grouped into orbits with their rotation data
for orbit in lower_period_set(f):
    pts = " ".join(f"({p.x},{p.y})" for p in orbit.points)
    print(f"orbit of period {orbit.n_i}: {pts}   lambda={orbit.lambda_i} delta={orbit.delta_i} d={orbit.d_i}")

# %% the complete characteristic collects (n_i, d_i)
print("characteristic:", complete_characteristic(f))
