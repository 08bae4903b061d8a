"""Propagating discreteness verdicts through an assembly.

Whether a representation of the assembled group factors through a discrete
quotient reduces to the same question for the pieces: coproducts take the
conjunction, quotient steps change nothing, free factors are discrete.
Verdicts are three-valued so partial knowledge propagates honestly.

Run:  python demos/06_discreteness.py
"""

from devissage import (Coproduct, Leaf, Quotient, Verdict, assemble_direct,
                       discreteness_verdict, fold_verdicts)
from devissage.corpus import line_cycle

cfg = line_cycle(3)
res = assemble_direct(cfg)

for verdicts in ({"X1": "discrete", "X2": "discrete", "X3": "discrete"},
                 {"X1": "discrete", "X2": "not-discrete", "X3": "discrete"},
                 {"X1": "discrete", "X2": "unknown", "X3": "discrete"}):
    out = discreteness_verdict(cfg, res, verdicts)
    print(f"{verdicts} -> {out.overall.value}")

print("\nper-node detail for the last run:")
for name, nv in out.per_node:
    print(f"  {name}: {nv.verdict.value} ({nv.reason})")

# The fold is insensitive to how the assembly tree is shaped.
D, N = Verdict.DISCRETE, Verdict.NOT_DISCRETE
tree = Coproduct((Quotient(Coproduct((Leaf(D), Leaf(N)))), Leaf(D)))
print("\nfold of ((D * N)/~ * D):", fold_verdicts(tree).value)
