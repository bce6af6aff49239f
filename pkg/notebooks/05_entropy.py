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

# # Entropy: bounds, degree growth and Lyapunov exponents

import math

import numpy as np

from signstab import (MutationLoop, degree_bounds, degree_growth_slope, entropy_bounds,
                      inductive_check, lyapunov_exponent)
from signstab.symbolic import loop_a_degrees

markov = MutationLoop([[0, 2, -2], [-2, 0, 2], [2, -2, 0]], (0, 1, 2, 0, 1, 2))
est = entropy_bounds(inductive_check(markov, n_max=1))
est.lower_x, est.upper, est.point_estimate

# One-step log growth of |C^(n)|_max settles on log(lambda) quickly.

ratios, slope = degree_growth_slope(markov, (0, 15), "C")
np.round(ratios, 8), slope - math.log(9 + 4 * math.sqrt(5))

# For the Kronecker l = 2 loop the A-degrees grow linearly: entropy zero.

kron = MutationLoop([[0, -2], [2, 0]], (0, 1))
degs = loop_a_degrees(kron, 8)
degs, [degree_bounds(kron, n) for n in range(len(degs))]

# Lyapunov exponents only see the components a vector actually has.

m = [[9, -4, 4], [-12, 9, -4], [4, -4, 1]]
lyapunov_exponent(m, (1, 0, 0), 40), lyapunov_exponent([[2, 0], [0, 1]], (0, 1), 20)
