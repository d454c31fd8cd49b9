"""
The branched root and the closed form
=====================================

``L(k, w) = 1 / sqrt(k^2 - w^2)`` is only meaningful once the root is pinned
down.  Here it is continued along the segment from ``0`` to ``w``, starting
from the value ``k``.
"""

import numpy as np

from hankelcos import TransformPoint, branched_sqrt, closed_form_L

# Below the branch point the root is real and positive
for w in (0.0, 0.5, 0.9):
    print(f"w = {w:4.2f}   sqrt = {branched_sqrt(TransformPoint(1.0, w)).value:.12f}")

# Past w = k it turns negative imaginary, the limit of a slightly lossy k
for w in (1.5, 2.0, 3.0):
    p = TransformPoint(1.0, w)
    print(f"w = {w:4.2f}   sqrt = {branched_sqrt(p).value:.12f}   L = {closed_form_L(p):.12f}")

# A small loss moves the branch point off the real axis; the real-k values
# are recovered continuously as the loss goes to zero
for loss in (1e-1, 1e-3, 1e-6):
    p = TransformPoint(1 - 1j * loss, 2.0)
    print(f"Im k = {-loss:8.1e}   L = {closed_form_L(p):.9f}")

# L is even in w and w L depends on k / w only
k, w = 1 - 0.2j, 0.7
print("even:", closed_form_L(TransformPoint(k, w)) == closed_form_L(TransformPoint(k, -w)))
print("scaling:", [complex(np.round(lam * w * closed_form_L(TransformPoint(lam * k, lam * w)), 12))
                   for lam in (0.5, 1.0, 3.0)])
