"""Terminal pairs: two numbers that pin down a whole L-shape.

Run with ``python3 demos/02_terminal_pairs_and_lshapes.py``.
"""

from fareytree import LShape, TerminalPair, check_E, decompress, enumerate_E_lshapes, u_map
from fareytree.terminal import children

shape = LShape(bottom=(1, 2, 4, 7), left=(1, 3, 6))
print("L-shape", shape.bottom, shape.left, "satisfies the equations:", check_E(shape))

pair = shape.terminal_pair()
print("its terminal pair:", pair)

# walking up the parent map peels one cell off per step
p = pair
while p.m + p.n > 2:
    q = u_map(p)
    print(f"  {p} -> {q}")
    p = q

# and the walk is enough to rebuild the L-shape
print("decompressed:", decompress(pair))

# going down, each pair has one or two children
root = TerminalPair.of(1, 1, 1, 1)
frontier = [root]
for level in range(4):
    print(f"level {level}:", " ".join(str(x) for x in frontier))
    frontier = [c for p in frontier for c in children(p).present()]

# brute force agrees: every valid 4 x 3 L-shape, with its terminal pair
print("\nall L-shapes of size (4,3):")
for s in enumerate_E_lshapes(4, 3):
    print("  ", s.bottom, s.left, "->", s.terminal_pair())
