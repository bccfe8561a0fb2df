"""Generalized Farey sequences, their gaps, and the ranking table each gap
picks out.

Run with ``python3 demos/01_farey_gaps_and_ranking_tables.py``.
"""

from fareytree import (
    FareyVertex,
    delta,
    delta_one_sided,
    farey_intervals,
    farey_sequence,
    make,
    ranking_table,
    suranyi_table,
)

# G(3, 2): every p/q with p <= 3 and q <= 2, plus 0 and infinity
print("G(3,2):", farey_sequence(3, 2))

# the six open gaps between neighbours
for v in farey_intervals(3, 2):
    print("  gap", v)

# a slope inside (1, 3/2) ranks the cells of a 4 x 3 grid by s + t*xi
table = ranking_table(4, 3, make(5, 4))
print("\nranking table at 5/4 (top row first):")
print(table)
print("young:", table.is_young(), " terminal pair:", table.terminal_pair())

# every slope in the same gap gives the same table; the mediant is the default
gap = FareyVertex(make(1), make(3, 2), 3, 2)
print("same table at the mediant 4/3:", suranyi_table(gap).rows == table.rows)

# corner difference tau(m,1) - tau(1,n) as the slope sweeps across G(3,2)
print("\ncorner difference for the 4 x 3 grid:")
for v in farey_intervals(3, 2):
    t = suranyi_table(v)
    print(f"  {str(v):<22} {t(4, 1):>3} - {t(1, 3):>3} = {t(4, 1) - t(1, 3)}")

# at a breakpoint the difference jumps; the one-sided limits show by how much
x = make(1)
print(
    "\nat 1: left", delta_one_sided(4, 3, x, "left"),
    " value", delta(4, 3, x),
    " right", delta_one_sided(4, 3, x, "right"),
)
