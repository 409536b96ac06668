# coding: utf-8

# # Does a formula care which units you use?
#
# A raw equation is plain arithmetic on numbers. If it describes something
# physical, evaluating it in any unit system and then converting the answer
# must agree with converting first. The tester tries many random systems.

from pathlib import Path

from dimcheck.covariance import check_covariance, trial_sizes
from dimcheck.lang import parse_file

MODELS = Path(__file__).resolve().parent.parent / "models"
model = parse_file(MODELS / "newton_raw.dim")

# Each trial draws base-unit sizes between 0.1 and 10 of the reference.

print(trial_sizes(42, 0, 3))

# ## m*a survives every change of units

print(check_covariance(model, "F").to_dict())

# ## m+a does not

rep = check_covariance(model, "Fsum", trials=10)
print(rep.verdict, "first failure at trial", rep.first_failure, "max rel error", rep.max_rel_error)

# ## A right formula with a wrong declared dimension also fails

print(check_covariance(model, "wrongdim", trials=10).verdict)

# ## Nonlinear but well typed is fine

for name in ("period", "kinetic", "ratio"):
    print(name, check_covariance(model, name).verdict)
