"""Three-valued discreteness propagation.

A continuous homomorphism out of a topological group is *discrete* when its
kernel is open.  For the groups assembled here the question reduces to the
restrictions: a map out of a coproduct is discrete iff its restriction to
every factor is, and passing to a quotient changes nothing.  Free factors
are discrete outright.  The calculus below folds user-supplied per-piece
verdicts through that structure, with ``unknown`` as the third value:
any ``not-discrete`` wins, otherwise any ``unknown`` wins, otherwise
``discrete``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Union

from .assembly import AssemblyResult
from .configuration import Configuration

__all__ = [
    "Verdict",
    "combine",
    "NodeVerdict",
    "DiscretenessVerdict",
    "discreteness_verdict",
    "Leaf",
    "Coproduct",
    "Quotient",
    "fold_verdicts",
]


class Verdict(str, Enum):
    DISCRETE = "discrete"
    NOT_DISCRETE = "not-discrete"
    UNKNOWN = "unknown"


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Three-valued conjunction: not-discrete dominates unknown dominates discrete."""
    out = Verdict.DISCRETE
    for v in verdicts:
        if v is Verdict.NOT_DISCRETE:
            return Verdict.NOT_DISCRETE
        if v is Verdict.UNKNOWN:
            out = Verdict.UNKNOWN
    return out


@dataclass(frozen=True)
class NodeVerdict:
    verdict: Verdict
    reason: str


@dataclass(frozen=True)
class DiscretenessVerdict:
    overall: Verdict
    per_node: tuple[tuple[str, NodeVerdict], ...]


def discreteness_verdict(cfg: Configuration,
                         result: AssemblyResult,
                         restrictions: Mapping[str, Verdict | str]) -> DiscretenessVerdict:
    """Fold restriction verdicts through the assembled group.

    ``restrictions`` must cover every component; singulars with nontrivial
    groups must be covered too (trivial ones are discrete outright).  The
    free conjugators contribute a discrete free factor.  Edge relations are
    quotient steps and preserve the verdict, so they contribute nothing.
    """
    verdicts = {k: Verdict(v) for k, v in restrictions.items()}
    entries: list[tuple[str, NodeVerdict]] = []
    for c in cfg.components:
        if c.id not in verdicts:
            raise ValueError(f"missing verdict for component {c.id}")
        entries.append((c.id, NodeVerdict(verdicts[c.id], "supplied restriction verdict")))
    for s in cfg.singulars:
        if not s.group.generators:
            entries.append((s.id, NodeVerdict(Verdict.DISCRETE, "trivial group")))
        elif s.id in verdicts:
            entries.append((s.id, NodeVerdict(verdicts[s.id], "supplied restriction verdict")))
        else:
            raise ValueError(f"missing verdict for nontrivial singular {s.id}")
    free_count = sum(1 for origin in result.dictionary.values()
                     if origin.kind in ("edge", "conjugator"))
    if free_count:
        entries.append(("(free factor)",
                        NodeVerdict(Verdict.DISCRETE,
                                    f"free factor of rank {free_count}")))
    overall = combine(v.verdict for _, v in entries)
    return DiscretenessVerdict(overall, tuple(entries))


# A tiny expression tree modelling how verdicts compose: coproducts take the
# conjunction of their children, quotients are transparent.  The test suite
# checks exhaustively that every such tree folds to the flat conjunction of
# its leaves.

@dataclass(frozen=True)
class Leaf:
    verdict: Verdict


@dataclass(frozen=True)
class Coproduct:
    children: tuple["VerdictTree", ...]


@dataclass(frozen=True)
class Quotient:
    child: "VerdictTree"


VerdictTree = Union[Leaf, Coproduct, Quotient]


def fold_verdicts(tree: VerdictTree) -> Verdict:
    if isinstance(tree, Leaf):
        return tree.verdict
    if isinstance(tree, Quotient):
        return fold_verdicts(tree.child)
    return combine(fold_verdicts(child) for child in tree.children)


def tree_leaves(tree: VerdictTree) -> list[Verdict]:
    if isinstance(tree, Leaf):
        return [tree.verdict]
    if isinstance(tree, Quotient):
        return tree_leaves(tree.child)
    out: list[Verdict] = []
    for child in tree.children:
        out.extend(tree_leaves(child))
    return out
