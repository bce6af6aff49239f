# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#       jupytext_version: 1.16.0
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# # The Markov loop
#
# Three mutations around the Markov quiver, twice. We decompose the
# tropical X-space into sign cones, find the cone that the loop maps into
# its own interior and read off the stretch factor.

import math

import numpy as np

from signstab import MutationLoop, inductive_check, sign_cone_decomposition
from signstab.tropical import apply_loop_trop, sign_string

B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
loop = MutationLoop(B, (0, 1, 2, 0, 1, 2))
loop.is_valid

# The sign cones of one traversal. Only full-dimensional cones are kept.

decomp = sign_cone_decomposition(loop)
len(decomp)

for eps, cone in decomp[:5]:
    print(sign_string(eps), cone.rays)

# The inductive check stops at the first cone that is mapped strictly
# inside itself and is entered by both basepoint orbits.

report = inductive_check(loop, n_max=1)
print(report.verdict, sign_string(report.stable_sign))
print(np.array(report.e_stable))
print(report.char_e, report.stretch_factor, 9 + 4 * math.sqrt(5))

# The orbit of l+ settles into the stable sign after one traversal.

pts, signs = apply_loop_trop(loop, (1, 1, 1), 5)
[sign_string(s) for s in signs]

# Projectively the orbit converges to the Perron direction,
# proportional to (1, -golden ratio, 1/golden ratio).

v = np.array([float(x) for x in pts[-1]])
v / v[0], (1 + math.sqrt(5)) / 2

report.perron_vector, report.perron_in_stable_cone
