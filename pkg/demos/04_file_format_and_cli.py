"""Defining a group in the text format and driving the same pipelines.

The parser accepts the format below; the command-line tool exposes the
same machinery (`unitwist validate/present/gamma/strata/c0/report ...`).
This script parses an inline definition of the three-dimensional
Heisenberg group, validates it, and prints a stratum picked with inline
point coordinates.
"""

from unitwist.cli import run_stratum, run_validate
from unitwist.groupfile import parse_group_file

TEXT = """
[group]
name = heisenberg
generators = X Y V
parameters = y0

[coproduct]
V = X (x) Y

[rmatrix]
1 3 1          # r = u_X wedge u_V, supported on the normal abelian plane

[subgroup T]
params = s1 s2
X = s1
V = s2

[point slice]
Y = y0
"""

data = parse_group_file(TEXT)
ok, lines = run_validate(data, max_degree=4, strict=True)
print("\n".join(lines))
print("validation:", "pass" if ok else "FAIL")
print()

stratum = run_stratum(data, "T", "slice")
print("\n".join(stratum.lines()))
print()

# inline coordinates work too
stratum = run_stratum(data, "T", "Y=3")
print("\n".join(stratum.lines()))
