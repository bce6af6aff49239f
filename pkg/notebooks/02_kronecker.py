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

# # Kronecker quivers
#
# For l >= 2 the tropical map of (mu_1, mu_2) has four linear pieces. The
# inductive check never terminates here; an invariant cone settles it.

import math

import sympy

from signstab import Cone, MutationLoop, heuristic_check, inductive_check
from signstab import path_presentation_matrix, sign_cone_normals
from signstab.tropical import sign_string


def kronecker(l):
    return MutationLoop([[0, -l], [l, 0]], (0, 1))


for eps in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
    print(sign_string(eps), sign_cone_normals(kronecker(3), eps),
          path_presentation_matrix(kronecker(3), eps))

inductive_check(kronecker(3), n_max=4).verdict

# + tags=["parameters"]
levels = [2, 3, 4, 5]
# -

cand = Cone([(1, 0), (1, 1)])
for l in levels:
    r = heuristic_check(kronecker(l), cand)
    lam = ((l * l - 2) + l * math.sqrt(l * l - 4)) / 2
    print(l, r.verdict, r.char_e, r.stretch_factor, lam,
          r.diagnostics["strict_interior"])

# The stretch factor comes from nu^2 + (2 - l^2) nu + 1, whose roots
# involve sqrt(l^2 - 4).

nu, l = sympy.symbols("nu l", positive=True)
sympy.solve(nu ** 2 + (2 - l ** 2) * nu + 1, nu)
