"""Ready-made gluing configurations.

The all-trivial family (every group trivial) exercises the pure graph
combinatorics: a nodal cubic, cycles of lines, stars, chains, and bouquets
of parallel edges.  The remaining builders attach small nontrivial groups
(Z/2, S3) to components, singulars, or edges.
"""

from __future__ import annotations

from .configuration import ComponentNode, Configuration, Edge, SingularNode
from .homs import hom
from .presentations import (Presentation, cyclic_presentation,
                            trivial_presentation)
from .words import GenId, Word, gen

__all__ = [
    "trivial_edge",
    "nodal_cubic",
    "bouquet",
    "line_cycle",
    "star",
    "chain",
    "double_bouquet",
    "component_nodal",
    "z2_nodal",
    "s3_nodal",
    "z2_chain",
    "z2_double_bouquet",
    "squared_interface",
    "equivariant_z2",
    "symmetric3_presentation",
    "all_trivial_corpus",
    "full_corpus",
]

_TRIVIAL = trivial_presentation()


def trivial_edge(edge_id: str, component: ComponentNode,
                 singular: SingularNode) -> Edge:
    return Edge(edge_id, component.id, singular.id, _TRIVIAL,
                hom(_TRIVIAL, component.group, {}),
                hom(_TRIVIAL, singular.group, {}))


def bouquet(edge_count: int) -> Configuration:
    """One component, one singular point, ``edge_count`` parallel edges."""
    comp = ComponentNode("X1", _TRIVIAL)
    sing = SingularNode("Z1", _TRIVIAL)
    edges = tuple(trivial_edge(f"e{i}", comp, sing)
                  for i in range(1, edge_count + 1))
    return Configuration((comp,), (sing,), edges)


def nodal_cubic() -> Configuration:
    """An irreducible curve with one node: two preimages over one singular point."""
    return bouquet(2)


def line_cycle(n: int) -> Configuration:
    """A cycle of n lines: consecutive lines meet in one point."""
    comps = tuple(ComponentNode(f"X{i}", _TRIVIAL) for i in range(1, n + 1))
    sings = tuple(SingularNode(f"Z{i}", _TRIVIAL) for i in range(1, n + 1))
    edges = []
    for i in range(1, n + 1):
        j = i % n + 1  # Z_i joins X_i and X_{i+1}, cyclically
        edges.append(trivial_edge(f"e{i}a", comps[i - 1], sings[i - 1]))
        edges.append(trivial_edge(f"e{i}b", comps[j - 1], sings[i - 1]))
    return Configuration(comps, sings, tuple(edges))


def star(n: int) -> Configuration:
    """n lines through one common point."""
    comps = tuple(ComponentNode(f"X{i}", _TRIVIAL) for i in range(1, n + 1))
    sing = SingularNode("Z1", _TRIVIAL)
    edges = tuple(trivial_edge(f"e{i}", comps[i - 1], sing) for i in range(1, n + 1))
    return Configuration(comps, (sing,), edges)


def chain(n: int) -> Configuration:
    """n lines in a row, consecutive ones meeting in a point."""
    comps = tuple(ComponentNode(f"X{i}", _TRIVIAL) for i in range(1, n + 1))
    sings = tuple(SingularNode(f"Z{i}", _TRIVIAL) for i in range(1, n))
    edges = []
    for i in range(1, n):
        edges.append(trivial_edge(f"e{i}a", comps[i - 1], sings[i - 1]))
        edges.append(trivial_edge(f"e{i}b", comps[i], sings[i - 1]))
    return Configuration(comps, sings, tuple(edges))


def double_bouquet(a: int, b: int) -> Configuration:
    """One component with two singular points, ``a`` and ``b`` parallel edges."""
    comp = ComponentNode("X1", _TRIVIAL)
    s1, s2 = SingularNode("Z1", _TRIVIAL), SingularNode("Z2", _TRIVIAL)
    edges = [trivial_edge(f"e{i}", comp, s1) for i in range(1, a + 1)]
    edges += [trivial_edge(f"f{i}", comp, s2) for i in range(1, b + 1)]
    return Configuration((comp,), (s1, s2), tuple(edges))


def component_nodal(group: Presentation) -> Configuration:
    """A nodal component carrying the given group (namespace must be X1)."""
    comp = ComponentNode("X1", group)
    sing = SingularNode("Z1", _TRIVIAL)
    edges = (trivial_edge("e1", comp, sing), trivial_edge("e2", comp, sing))
    return Configuration((comp,), (sing,), edges)


def z2_nodal() -> Configuration:
    """Nodal component with fundamental group Z/2: assembles to Z/2 * Z."""
    return component_nodal(cyclic_presentation("X1", 2))


def symmetric3_presentation(namespace: str) -> Presentation:
    """S3 as <s, t | s^2, t^2, (st)^3>."""
    s, t = GenId(namespace, 0), GenId(namespace, 1)
    return Presentation((s, t), (Word(((s, 1),) * 2), Word(((t, 1),) * 2),
                                 Word(((s, 1), (t, 1)) * 3)))


def s3_nodal() -> Configuration:
    """Nodal component with fundamental group S3: assembles to S3 * Z."""
    return component_nodal(symmetric3_presentation("X1"))


def z2_chain() -> Configuration:
    """Chain of three lines, the first carrying Z/2; assembles to Z/2."""
    comps = (ComponentNode("X1", cyclic_presentation("X1", 2)),
             ComponentNode("X2", _TRIVIAL), ComponentNode("X3", _TRIVIAL))
    sings = (SingularNode("Z1", _TRIVIAL), SingularNode("Z2", _TRIVIAL))
    edges = (trivial_edge("e1a", comps[0], sings[0]),
             trivial_edge("e1b", comps[1], sings[0]),
             trivial_edge("e2a", comps[1], sings[1]),
             trivial_edge("e2b", comps[2], sings[1]))
    return Configuration(comps, sings, edges)


def z2_double_bouquet() -> Configuration:
    """Z/2 component with two nodes: assembles to Z/2 * F2, with two
    singulars so the recursive route genuinely splits."""
    comp = ComponentNode("X1", cyclic_presentation("X1", 2))
    s1, s2 = SingularNode("Z1", _TRIVIAL), SingularNode("Z2", _TRIVIAL)
    edges = (trivial_edge("e1", comp, s1), trivial_edge("e2", comp, s1),
             trivial_edge("f1", comp, s2), trivial_edge("f2", comp, s2))
    return Configuration((comp,), (s1, s2), edges)


def squared_interface() -> Configuration:
    """Z/4 component glued to a Z/2 singular along the squares.

    The edge group generator maps to a two-letter word (the square of the
    component generator), so equivariance genuinely traces words rather
    than single letters.
    """
    comp = ComponentNode("X1", cyclic_presentation("X1", 4))
    sing = SingularNode("Z1", cyclic_presentation("Z1", 2))
    a, b = GenId("X1", 0), GenId("Z1", 0)
    edges = []
    for eid in ("e1", "e2"):
        group = cyclic_presentation(eid, 2)
        c = group.generators[0]
        edges.append(Edge(eid, comp.id, sing.id, group,
                          hom(group, comp.group, {c: Word(((a, 1), (a, 1)))}),
                          hom(group, sing.group, {c: gen(b)})))
    return Configuration((comp,), (sing,), tuple(edges))


def equivariant_z2() -> Configuration:
    """Both node groups Z/2, glued along Z/2 edge groups.

    Each edge group generator maps to the component generator under psi and
    to the singular generator under phi, so gluings must be equivariant;
    the assembled group is Z/2 x Z.
    """
    comp = ComponentNode("X1", cyclic_presentation("X1", 2))
    sing = SingularNode("Z1", cyclic_presentation("Z1", 2))
    edges = []
    for eid in ("e1", "e2"):
        group = cyclic_presentation(eid, 2)
        c = group.generators[0]
        edges.append(Edge(eid, comp.id, sing.id, group,
                          hom(group, comp.group, {c: gen(GenId("X1", 0))}),
                          hom(group, sing.group, {c: gen(GenId("Z1", 0))})))
    return Configuration((comp,), (sing,), tuple(edges))


def all_trivial_corpus() -> dict[str, Configuration]:
    """Ten connected configurations with every group trivial."""
    return {
        "nodal_cubic": nodal_cubic(),
        "cycle2": line_cycle(2),
        "cycle3": line_cycle(3),
        "cycle4": line_cycle(4),
        "cycle5": line_cycle(5),
        "star3": star(3),
        "chain3": chain(3),
        "bouquet3": bouquet(3),
        "bouquet4": bouquet(4),
        "double_bouquet22": double_bouquet(2, 2),
    }


def full_corpus() -> dict[str, Configuration]:
    """The all-trivial family plus the small nontrivial-group configurations."""
    corpus = all_trivial_corpus()
    corpus.update({
        "z2_nodal": z2_nodal(),
        "z2_chain": z2_chain(),
        "z2_double_bouquet": z2_double_bouquet(),
        "equivariant_z2": equivariant_z2(),
        "squared_interface": squared_interface(),
        "s3_nodal": s3_nodal(),
    })
    return corpus
