# coding: utf-8

# # Quantities and unit systems
#
# A quantity is a number tied to a unit system and a dimension. Arithmetic
# tracks the dimension; converting between systems only rescales the number.

import dimcheck as dc
from dimcheck.dimension import LENGTH, TIME, MASS, ACCELERATION, FORCE

# ## Measuring in two systems

x = dc.val("SI", 3, LENGTH)
print(dc.measure(x, "SI"), "m")
print(dc.measure(x, "CGS"), "cm")

# A ratio of lengths has no dimension, so its measure is the same everywhere.

r = (x + x) / x
print(r.dim, dc.measure(r, "SI"), dc.measure(r, "CGS"))

# ## Mixing systems
#
# Operands may live in different systems. The result is expressed in the
# system of the left operand.

half_metre = dc.val("CGS", 50, LENGTH)
print(x + half_metre)

# ## Dimension errors are caught at the operation

t = dc.val("SI", 2, TIME)
try:
    x + t
except dc.DimensionMismatch as exc:
    print("rejected:", exc)

# ## Building up a force

m = dc.val("SI", 2, MASS)
a = dc.val("SI", 3, ACCELERATION)
F = m * a
print(F, dc.is_judgment(F, FORCE))
print("in CGS:", dc.measure(F, "CGS"), "dyn")
