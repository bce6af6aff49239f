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

# # Exporting sign cones
#
# Ray data for every sign cone, and boundary arcs of the rank-3 cones in
# the stereographic chart from (1,1,1), as written by
# `signstab cones export --project stereographic`.

import csv
import io

from signstab import MutationLoop, sign_cone_decomposition, stereographic_arcs
from signstab.tropical import sign_string

loop = MutationLoop([[0, 2, -2], [-2, 0, 2], [2, -2, 0]], (0, 1, 2, 0, 1, 2))

buf = io.StringIO()
w = csv.writer(buf)
w.writerow(["sign", "arc", "t", "u", "v"])
for eps, cone in sign_cone_decomposition(loop):
    for row in stereographic_arcs(cone, samples=8):
        w.writerow([sign_string(eps)] + list(row))
lines = buf.getvalue().splitlines()
len(lines), lines[:4]
