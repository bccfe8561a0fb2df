"""Build the three trees, check that two of them coincide, and export one.

Run with ``python3 demos/03_tree_verification.py [height]``.
"""

import sys

import numpy as np

from fareytree import build_tree, export, verify

height = int(sys.argv[1]) if len(sys.argv) > 1 else 40

trees = {kind: build_tree(kind, 8) for kind in ("farey", "terminal", "young")}
print("level sizes to height 8:", trees["farey"].level_sizes())

# the young tree is the image of the farey tree, and it lands exactly on the terminal tree
same = all(
    np.array_equal(a, b) and np.array_equal(p, q)
    for a, b, p, q in zip(
        trees["young"].levels, trees["terminal"].levels, trees["young"].parents, trees["terminal"].parents
    )
)
print("young tree == terminal tree to height 8:", same)

# vertices per (m, n) block on level 4
print("level 4 blocks:", trees["terminal"].blocks(4))

report = verify(height, "all")
print(report.summary())

# streaming keeps two levels at a time; same checks, same answer
print(verify(height, "theorem1", stream=True).summary())

dot = export(build_tree("terminal", 2), "dot").decode()
print("\n" + dot)
