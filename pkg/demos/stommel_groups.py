# coding: utf-8

# # Nondimensionalizing a two-vessel heat model
#
# Two exchange rates and two temperatures. The base dimensions here are time
# and temperature, so this uses a custom dimension class.

from pathlib import Path

from dimcheck.lang import check, parse_file

MODELS = Path(__file__).resolve().parent.parent / "models"

model = parse_file(MODELS / "stommel.dim")
print(model.dim_class)

# ## Pi groups, chosen automatically

(entry,) = [e for e in check(model).entries if e.kind == "pigroups"]
data = entry.data
print("basis:", data["independent"])
for g in data["groups"]:
    print(f"  {g['group']} = {g['value']}")
print(f"{len(data['groups'])} groups = {data['total']} variables - rank {data['rank']}")
print(entry.message)

# ## The same groups in other units
#
# Rescaling time changes both rates by the same factor, so d/c is unchanged.

from dimcheck.pi import decompose, pi_groups

named = [(n, model.vars[n].dim) for n in ("c", "d", "Te", "T0")]
dec = decompose(named)
values = model.values()
hours = {
    n: type(q)(q.value * 3600 if n in ("c", "d") else q.value, q.dim, "Hours", q.registry)
    for n, q in values.items()
}
print([g.value for g in pi_groups(dec, values)])
print([g.value for g in pi_groups(dec, hours)])
