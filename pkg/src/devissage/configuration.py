"""The combinatorial model of a glued space and its incidence graph.

A configuration records the connected pieces of the normalization
(components), the connected pieces of the singular locus (singulars), and
one edge per connected piece of the preimage of the singular locus, each
edge carrying a group with maps psi (into its component's group) and phi
(into its singular's group).  The incidence graph is bipartite with
multi-edges; its spanning trees drive all base-point choices downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .homs import Hom
from .presentations import Presentation

__all__ = [
    "ComponentNode",
    "SingularNode",
    "Edge",
    "Configuration",
    "IncidenceGraph",
    "DisconnectedError",
    "validate_config",
    "build_graph",
    "is_connected",
    "free_rank",
    "spanning_tree",
]

_ID_RE = re.compile(r"^[A-Za-z0-9_-]+$")


class DisconnectedError(ValueError):
    """The incidence graph is not connected."""


@dataclass(frozen=True)
class ComponentNode:
    id: str
    group: Presentation


@dataclass(frozen=True)
class SingularNode:
    id: str
    group: Presentation


@dataclass(frozen=True)
class Edge:
    id: str
    component: str
    singular: str
    group: Presentation
    psi: Hom  # edge group -> component group
    phi: Hom  # edge group -> singular group


@dataclass(frozen=True)
class Configuration:
    components: tuple[ComponentNode, ...]
    singulars: tuple[SingularNode, ...]
    edges: tuple[Edge, ...]

    def component(self, node_id: str) -> ComponentNode:
        for c in self.components:
            if c.id == node_id:
                return c
        raise KeyError(node_id)

    def singular(self, node_id: str) -> SingularNode:
        for s in self.singulars:
            if s.id == node_id:
                return s
        raise KeyError(node_id)

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)


def validate_config(cfg: Configuration) -> list[str]:
    """Structural checks; returns a list of problems (empty means ok)."""
    errors: list[str] = []
    if not cfg.components:
        errors.append("configuration has no components")

    ids: list[str] = ([c.id for c in cfg.components]
                      + [s.id for s in cfg.singulars]
                      + [e.id for e in cfg.edges])
    seen: set[str] = set()
    for i in ids:
        if not _ID_RE.match(i):
            errors.append(f"invalid id {i!r} (letters, digits, _, - only)")
        if i in seen:
            errors.append(f"duplicate id {i!r}")
        seen.add(i)

    comp_ids = {c.id for c in cfg.components}
    sing_ids = {s.id for s in cfg.singulars}
    used_singulars: set[str] = set()
    for e in cfg.edges:
        if e.component not in comp_ids:
            errors.append(f"edge {e.id}: unknown component {e.component!r}")
        if e.singular not in sing_ids:
            errors.append(f"edge {e.id}: unknown singular {e.singular!r}")
        used_singulars.add(e.singular)

    for s in cfg.singulars:
        if s.id not in used_singulars:
            errors.append(f"singular {s.id} has no incident edges")
    if not cfg.singulars and (len(cfg.components) > 1 or cfg.edges):
        errors.append("a configuration without singulars must be a single bare component")

    namespaces: dict[str, str] = {}
    groups = ([(c.id, c.group) for c in cfg.components]
              + [(s.id, s.group) for s in cfg.singulars]
              + [(e.id, e.group) for e in cfg.edges])
    for owner, group in groups:
        for ns in group.namespaces():
            if ns in namespaces:
                errors.append(f"namespace {ns!r} used by both {namespaces[ns]} and {owner}")
            else:
                namespaces[ns] = owner
            if "@" in ns or "#" in ns or ns.startswith("x."):
                errors.append(f"namespace {ns!r} of {owner} uses characters reserved "
                              "for assembly-derived generators")

    for e in cfg.edges:
        if e.component not in comp_ids or e.singular not in sing_ids:
            continue
        if e.psi.source != e.group:
            errors.append(f"edge {e.id}: psi source is not the edge group")
        if e.phi.source != e.group:
            errors.append(f"edge {e.id}: phi source is not the edge group")
        if e.psi.target != cfg.component(e.component).group:
            errors.append(f"edge {e.id}: psi target is not the group of {e.component}")
        if e.phi.target != cfg.singular(e.singular).group:
            errors.append(f"edge {e.id}: phi target is not the group of {e.singular}")
    return errors


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite multigraph: component vertices vs singular vertices."""

    component_ids: tuple[str, ...]
    singular_ids: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (edge id, component id, singular id)

    @cached_property
    def vertex_count(self) -> int:
        return len(self.component_ids) + len(self.singular_ids)

    def betti(self) -> int:
        """First Betti number E - V + 1 of a connected graph."""
        return len(self.edges) - self.vertex_count + 1


def build_graph(cfg: Configuration) -> IncidenceGraph:
    return IncidenceGraph(
        tuple(c.id for c in cfg.components),
        tuple(s.id for s in cfg.singulars),
        tuple((e.id, e.component, e.singular) for e in cfg.edges),
    )


def _bfs(graph: IncidenceGraph, root: str) -> tuple[list[str], set[tuple[str, str]]]:
    """Tree edges in discovery order plus the set of visited vertices."""
    start = ("c", root)
    visited = {start}
    queue = [start]
    tree: list[str] = []
    while queue:
        kind, vid = queue.pop(0)
        for eid, cid, sid in graph.edges:
            if kind == "c" and cid == vid:
                other = ("s", sid)
            elif kind == "s" and sid == vid:
                other = ("c", cid)
            else:
                continue
            if other not in visited:
                visited.add(other)
                tree.append(eid)
                queue.append(other)
    return tree, visited


def is_connected(graph: IncidenceGraph) -> bool:
    if not graph.component_ids:
        return False
    _, visited = _bfs(graph, min(graph.component_ids))
    return len(visited) == graph.vertex_count


def free_rank(cfg: Configuration) -> int:
    """Edges - singulars - components + 1 for a connected configuration.

    This is the rank of the free factor contributed by the gluing pattern
    alone, and equals the incidence graph's first Betti number.
    """
    graph = build_graph(cfg)
    if not is_connected(graph):
        raise DisconnectedError("free rank requires a connected configuration")
    return len(cfg.edges) - len(cfg.singulars) - len(cfg.components) + 1


def spanning_tree(graph: IncidenceGraph,
                  root: str | None = None) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Deterministic spanning tree: breadth-first from ``root`` (default the
    lexicographically least component), edges explored in listed order.

    Returns (tree edge ids in discovery order, cotree edge ids in listed
    order); the cotree size equals the graph's first Betti number.
    """
    if not graph.component_ids:
        raise DisconnectedError("empty graph")
    if root is None:
        root = min(graph.component_ids)
    elif root not in graph.component_ids:
        raise ValueError(f"root {root!r} is not a component id")
    tree, visited = _bfs(graph, root)
    if len(visited) != graph.vertex_count:
        raise DisconnectedError("graph is not connected")
    in_tree = set(tree)
    cotree = tuple(eid for eid, _, _ in graph.edges if eid not in in_tree)
    return tuple(tree), cotree
