"""The hemisphere model of disks.

The n-disk is the upper hemisphere of the unit n-sphere; one suspension
step q glues a time slot onto a lower disk, and iterating it gives a
single chart Q from the unit cube.  The canonical section inverts that
chart, which is what lets us define maps *out of* the quotient.
"""

import numpy as np

from difftop import (Q, gen_plot, include_j, include_k, q, random_disk,
                     reflect, retract, retract_homotopy, section)

rng = np.random.default_rng(0)

print("=== the chart on the 2-disk (upper hemisphere in R^3) ===")
for t in ([0.0, 0.0], [0.5, 0.0], [0.5, 0.5], [0.25, 0.75]):
    print(f"  Q(2, {t}) = {np.round(Q(2, t), 6)}")

print("\n=== the chart is exactly inverted by the section ===")
worst = 0.0
for _ in range(5000):
    w = random_disk(3, rng)
    worst = max(worst, float(np.max(np.abs(Q(3, section(3, w)) - w))))
print(f"  Q(section(w)) vs w over 5000 uniform points of the 3-disk: {worst:.2e}")

print("\n=== the generating chart from the whole plane ===")
print("  gen_plot(1, -5) =", gen_plot(1, [-5.0]), " (lambda saturates left)")
print("  gen_plot(1,  7) =", gen_plot(1, [7.0]), " (and right)")

print("\n=== boundary sphere, reflection, suspension ===")
v = np.array([0.6, 0.8])
print("  include_j appends 0:      ", include_j(2, v))
print("  reflect flips hemisphere: ", reflect(2, include_j(2, v)))
w = random_disk(1, rng)
print("  q(1, w, 0) is inclusion:  ", np.array_equal(q(1, w, 0.0),
                                                     include_k(1, w)))
print("  q(1, w, 1) lands low:     ", np.round(q(1, w, 1.0), 6))

print("\n=== deformation retraction of the 3-disk onto the 2-disk ===")
w = random_disk(3, rng)
print("  start (s=0):", np.round(retract_homotopy(2, w, 0.0), 6))
for s in (0.3, 0.6, 1.0):
    print(f"  s={s}:       ", np.round(retract_homotopy(2, w, s), 6))
print("  end equals include_k(retract(w)):",
      np.max(np.abs(retract_homotopy(2, w, 1.0)
                    - include_k(2, retract(2, w)))) < 1e-10)
