#!/usr/bin/env python3
"""Branching factors: every branching step generates a recurrence
T(k) <= sum T(k - c_i); the largest root of 1 - sum x^(-c_i) bounds the
search-tree growth as that root to the power k."""

from copack import branching_factor
from copack.cli import command_factors

# A step deleting one vertex in one child and two in another gives the
# golden-ratio recurrence.
print("decrements [1, 2]  ->  %.6f" % branching_factor([1, 2]))

# Adding children grows the factor; deeper decrements shrink it.
print("decrements [1, 2, 2] ->  %.6f" % branching_factor([1, 2, 2]))
print("decrements [1, 3]    ->  %.6f" % branching_factor([1, 3]))

print("\nall solver steps:")
print("%-16s %-10s %-10s %s" % ("step", "computed", "reference", "decrements"))
for row in command_factors():
    print("%-16s %-10.4f %-10.4f %s"
          % (row["step"], row["computed"], row["reference"],
             ",".join(map(str, row["decrements"]))))

worst = max(command_factors(), key=lambda r: r["computed"])
print("\nworst step: %s at %.4f -> search tree in O(%.4f^k)"
      % (worst["step"], worst["computed"], worst["computed"]))
