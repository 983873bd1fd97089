"""Raising operators and Rodrigues chains.

The m-factor raising operator adds one box to each of the first m rows of
the label and multiplies by prod_{j<=m} (lam_j + beta(m-j+1)) — provided
the label has at most m nonzero parts.  Chaining raising operators from
the empty partition and dividing by the hook product reconstructs every
family polynomial.
"""

from fractions import Fraction

from heckepoly.families import construct, jack
from heckepoly.parameters import hermite_spec, jack_spec, laguerre_spec
from heckepoly.raising import (
    hook_product,
    raising_apply,
    raising_operator,
    rodrigues,
)

spec = jack_spec(2, 1)

# Climb from the vacuum: 1 -> m_1 -> J_(2,0), collecting the constants.
current = jack((0, 0), spec)
for step in range(2):
    constant, current = raising_apply(1, current)
    print(f"step {step + 1}: constant {constant}, label {current.label},",
          current.poly.pretty())

# m = N adds a full column: J_(1,1) = x_1 x_2.
constant, column = raising_apply(2, jack((0, 0), spec))
print("full column: constant", constant, "->", column.poly.pretty())

# The length hypothesis is essential.  Outside it the image is an exact
# two-term combination, not a multiple of a single family polynomial:
image = raising_operator(1, spec)(jack((2, 1), spec).poly)
decomposition = 3 * jack((3, 1), spec).poly + jack((2, 2), spec).poly
assert image == decomposition
print("\nR_1 J_(2,1) = 3 J_(3,1) + J_(2,2)  (raising needs <= m nonzero parts)")

# Rodrigues: the chain constant telescopes to the hook product, so dividing
# by it recovers the monic polynomial for all three families.
print("\nhook product for (2,1) at beta=1:", hook_product((2, 1), 1))
for family_spec in (
    jack_spec(2, 1),
    hermite_spec(2, 1),
    laguerre_spec(2, 1, Fraction(1, 2)),
):
    for lam in [(2, 0), (2, 1), (2, 2)]:
        chain = rodrigues(lam, family_spec)
        direct = construct(lam, family_spec)
        assert chain.poly == direct.poly
        print(f"  {family_spec.family:8s} {lam}: rodrigues == direct")

print("\nraising constants and Rodrigues chains verified exactly")
