# coding: utf-8

# # The pendulum period without solving anything
#
# The period of a pendulum can only depend on its length, on g, and (maybe)
# on its mass. Dimensional analysis alone pins down how.

import math

import dimcheck as dc
from dimcheck.dimension import LENGTH, TIME, MASS, ACCELERATION

# ## Which combinations are independent?

print(dc.are_indep([LENGTH, ACCELERATION]))        # l, g
print(dc.are_indep([TIME, LENGTH, ACCELERATION]))  # tau, l, g

# tau^2 is l/g up to a dimensionless factor:

ev = dc.find_dep(TIME, [LENGTH, ACCELERATION])
print(ev)

# ## The scaling law

law = dc.scaling_law(("tau", TIME), [("l", LENGTH), ("g", ACCELERATION), ("m", MASS)])
print(law)

# Mass gets exponent 0: it cannot be combined with l and g into anything
# dimensionless, so the period does not depend on it.

# ## A numeric check

l = dc.val("SI", 0.5, LENGTH)
g = dc.val("SI", 9.81, ACCELERATION)
tau = dc.root(l / g, 2)
print(tau, tau.dim == TIME)
print("2*pi*sqrt(l/g) =", 2 * math.pi * tau.value, "s")

# ## When the target is out of reach
#
# No product of powers of a length and a time gives a mass.

try:
    dc.solve_exponents(MASS, [LENGTH, TIME])
except dc.NotDependent as exc:
    print(exc)
