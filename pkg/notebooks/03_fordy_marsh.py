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

# # Fordy-Marsh loops and two-sided stability
#
# A palindromic vector a gives a period-one quiver with a length-one loop
# (mutation at 1, then the cyclic shift).

import numpy as np

from signstab import fm_build, fm_invariant_cone, fm_stability
from signstab.fm import closed_form_poly
from signstab.tropical import sign_string

loop = fm_build((2, 2))
print(np.array(loop.b0.b), loop.sigma)

r = fm_stability((2, 2))
print(r.verdict, sign_string(r.stable_sign), r.stretch_factor)
print(r.diagnostics["closed_form_poly"], r.diagnostics["generic_agrees"])

# Invariance of the cone {s x_1 >= 0, s(x_1 + x_i) >= 0} depends only on
# the first entry.

for a in [(2, 2), (1, 1), (3, 0, 3)]:
    for s in (1, -1):
        print(a, s, fm_invariant_cone(a, s)[1]["invariant"])

# Mixed signs: the loop is two-sided sign-stable, with opposite stable
# signs on the positive and negative cones.

r = fm_stability((-2, 2, 4, 2, -2))
print(r.verdict, sign_string(r.stable_sign), sign_string(r.stable_sign_minus))
print(r.char_e, r.char_e_minus)
print(r.stretch_factor, r.entropy_lower_x)

# Finite-type vectors give periodic loops, which are certified not to be
# sign-stable.

for a in [(1,), (0,), (-1,)]:
    rep = fm_stability(a)
    print(a, rep.verdict, rep.diagnostics.get("obstruction"))
