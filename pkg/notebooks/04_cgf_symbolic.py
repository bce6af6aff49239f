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

# # C-, G-, F-matrices and cluster variables
#
# Along any mutation word the c-vectors are sign-coherent, G is the
# inverse transpose of C, and the F-polynomials have max-degree matrix F.

from signstab import (a_variables_along_word, cgf_along_loop, cgf_along_word,
                      f_polynomials_along_word, separation_check, verify_cgf_identities)
from signstab import MutationLoop

B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
word = (0, 1, 2, 0)
state = cgf_along_word(B, word)[-1]
state.c, state.g, state.f

polys = f_polynomials_along_word(B, word)
[p.format(["y_1", "y_2", "y_3"]) for p in polys[:2]]

verify_cgf_identities(B, word)

# Cluster variables, reduced to numerator over monomial.

vs, degs = a_variables_along_word(B, (0,))
vs[0].format(), degs

separation_check(B, word)

# Snapshots along the Markov loop: C^(1) is the presentation matrix of
# the tropical signs, and the recursion C^(n+1) = E_phi C^(n) takes over.

loop = MutationLoop(B, (0, 1, 2, 0, 1, 2))
for s in cgf_along_loop(loop, 3):
    print(s.m, s.c)
