"""Finite covers of a glued configuration, modelled as descent tuples.

A descent tuple assigns to every component and singular node a finite fiber
with an action of that node's group, and to every edge a gluing bijection
from the component fiber to the singular fiber, equivariant for the edge
group (phi_k(a) . lam_k(s) = lam_k(psi_k(a) . s)).  Connected tuples of
degree d correspond to transitive degree-d actions of the assembled
presentation; ``enumerate_tuples`` counts the former without ever looking
at an assembled presentation, which makes it an independent check on every
assembly route.

The dictionary between the two sides is pinned down by one convention that
must match ``assemble_direct`` exactly: the free generator of a cotree edge
k acts on the root fiber by (transport singular(k) -> root) o lam_k o
(transport root -> component(k)), where transports are composites of tree
gluings along the unique tree paths and the component-to-singular direction
of lam_k is positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assembly import AssemblyResult, free_edge_generator
from .configuration import (Configuration, DisconnectedError, build_graph,
                            is_connected)
from .homs import Hom, count_transitive_actions, eval_word, hom
from .perms import (Perm, compose, identity_perm, inverse_perm, symmetric)
from .presentations import Presentation
from .words import GenId

__all__ = [
    "DescentTuple",
    "TupleIso",
    "is_tuple_iso",
    "validate_tuple",
    "tuple_components",
    "enumerate_tuples",
    "rep_of_tuple",
    "tuple_of_rep",
    "EquivalenceRow",
    "EquivalenceReport",
    "equivalence_report",
]

Fiber = tuple[int, dict[GenId, Perm]]  # (size, generator actions)


@dataclass(frozen=True)
class DescentTuple:
    """Fibers with group actions, glued by bijections along edges."""

    component_fibers: dict[str, Fiber]
    singular_fibers: dict[str, Fiber]
    gluings: dict[str, Perm]  # edge id -> map component fiber -> singular fiber


@dataclass(frozen=True)
class TupleIso:
    """An isomorphism of descent tuples: one bijection per fiber."""

    component_maps: dict[str, Perm]
    singular_maps: dict[str, Perm]


def is_tuple_iso(cfg: Configuration, source: DescentTuple,
                 target: DescentTuple, iso: TupleIso) -> bool:
    """True iff the per-fiber bijections commute with every action and
    every gluing."""
    for c in cfg.components:
        size, action = source.component_fibers[c.id]
        tsize, taction = target.component_fibers[c.id]
        alpha = iso.component_maps.get(c.id)
        if alpha is None or size != tsize or sorted(alpha) != list(range(size)):
            return False
        for g in c.group.generators:
            if compose(alpha, action[g]) != compose(taction[g], alpha):
                return False
    for s in cfg.singulars:
        size, action = source.singular_fibers[s.id]
        tsize, taction = target.singular_fibers[s.id]
        beta = iso.singular_maps.get(s.id)
        if beta is None or size != tsize or sorted(beta) != list(range(size)):
            return False
        for g in s.group.generators:
            if compose(beta, action[g]) != compose(taction[g], beta):
                return False
    for e in cfg.edges:
        alpha = iso.component_maps[e.component]
        beta = iso.singular_maps[e.singular]
        if compose(beta, source.gluings[e.id]) != compose(target.gluings[e.id], alpha):
            return False
    return True


def _action_violations(label: str, group: Presentation, fiber: Fiber) -> list[str]:
    size, action = fiber
    problems = []
    for g in group.generators:
        p = action.get(g)
        if p is None or len(p) != size or sorted(p) != list(range(size)):
            problems.append(f"{label}: image of {g} is not a permutation of the fiber")
            return problems
    for i, rel in enumerate(group.relations):
        if eval_word(rel, action, size) != identity_perm(size):
            problems.append(f"{label}: relator #{i} does not act trivially")
    return problems


def validate_tuple(cfg: Configuration, t: DescentTuple) -> list[str]:
    """Relator satisfaction of every action, edge equivariance of every gluing."""
    problems: list[str] = []
    for c in cfg.components:
        if c.id not in t.component_fibers:
            problems.append(f"missing component fiber {c.id}")
            continue
        problems += _action_violations(f"component {c.id}", c.group,
                                       t.component_fibers[c.id])
    for s in cfg.singulars:
        if s.id not in t.singular_fibers:
            problems.append(f"missing singular fiber {s.id}")
            continue
        problems += _action_violations(f"singular {s.id}", s.group,
                                       t.singular_fibers[s.id])
    extra = (set(t.component_fibers) - {c.id for c in cfg.components}) \
        | (set(t.singular_fibers) - {s.id for s in cfg.singulars}) \
        | (set(t.gluings) - {e.id for e in cfg.edges})
    for name in sorted(extra):
        problems.append(f"unexpected entry {name}")
    if problems:
        return problems
    for e in cfg.edges:
        lam = t.gluings.get(e.id)
        csize, caction = t.component_fibers[e.component]
        ssize, saction = t.singular_fibers[e.singular]
        if lam is None or len(lam) != csize or sorted(lam) != list(range(ssize)):
            problems.append(f"edge {e.id}: gluing is not a bijection between the fibers")
            continue
        for a in e.group.generators:
            psi_perm = eval_word(e.psi.image(a), caction, csize)
            phi_perm = eval_word(e.phi.image(a), saction, ssize)
            if compose(phi_perm, lam) != compose(lam, psi_perm):
                problems.append(f"edge {e.id}: gluing is not equivariant at generator {a}")
    return problems


def tuple_components(cfg: Configuration, t: DescentTuple) -> tuple[frozenset, ...]:
    """Finest partition of the disjoint union of fibers closed under all
    actions and gluings; the cover is connected iff there is one block."""
    points: list[tuple[str, str, int]] = []
    for c in cfg.components:
        size, _ = t.component_fibers[c.id]
        points += [("c", c.id, x) for x in range(size)]
    for s in cfg.singulars:
        size, _ = t.singular_fibers[s.id]
        points += [("s", s.id, x) for x in range(size)]
    index = {pt: i for i, pt in enumerate(points)}
    parent = list(range(len(points)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for c in cfg.components:
        size, action = t.component_fibers[c.id]
        for p in action.values():
            for x in range(size):
                union(index[("c", c.id, x)], index[("c", c.id, p[x])])
    for s in cfg.singulars:
        size, action = t.singular_fibers[s.id]
        for p in action.values():
            for x in range(size):
                union(index[("s", s.id, x)], index[("s", s.id, p[x])])
    for e in cfg.edges:
        lam = t.gluings[e.id]
        for x in range(len(lam)):
            union(index[("c", e.component, x)], index[("s", e.singular, lam[x])])

    blocks: dict[int, set] = {}
    for pt, i in index.items():
        blocks.setdefault(find(i), set()).add(pt)
    return tuple(sorted((frozenset(b) for b in blocks.values()), key=min))


class _Structure:
    """Index tables for the scan: fibers in a fixed order, generator slots,
    relator paths and edge constraints rewritten over slot numbers.

    All letter paths are stored reversed so that pointwise tracing (first
    path entry applied first) realizes the left action."""

    def __init__(self, cfg: Configuration):
        comps = sorted(cfg.components, key=lambda c: c.id)
        sings = sorted(cfg.singulars, key=lambda s: s.id)
        self.fiber_names = [("c", c.id) for c in comps] + [("s", s.id) for s in sings]
        self.fiber_of = {name: i for i, name in enumerate(self.fiber_names)}
        groups = [c.group for c in comps] + [s.group for s in sings]
        self.gen_ids = [g.generators for g in groups]
        self.slot_of = [{g: i for i, g in enumerate(gens)} for gens in self.gen_ids]
        self.rel_by_slot: list[dict[int, list]] = []
        for f, group in enumerate(groups):
            slots = self.slot_of[f]
            table: dict[int, list] = {}
            for rel in group.relations:
                if not rel.letters:
                    continue
                path = tuple((slots[g], s) for g, s in reversed(rel.letters))
                for sl in {i for i, _ in path}:
                    table.setdefault(sl, []).append(path)
            self.rel_by_slot.append(table)

        self.edge_ids = [e.id for e in cfg.edges]
        self.edge_comp = []
        self.edge_sing = []
        self.edge_constraints = []
        for e in cfg.edges:
            cf = self.fiber_of[("c", e.component)]
            sf = self.fiber_of[("s", e.singular)]
            self.edge_comp.append(cf)
            self.edge_sing.append(sf)
            constraints = []
            for a in e.group.generators:
                psi_path = tuple((self.slot_of[cf][g], s)
                                 for g, s in reversed(e.psi.image(a).letters))
                phi_path = tuple((self.slot_of[sf][g], s)
                                 for g, s in reversed(e.phi.image(a).letters))
                constraints.append((psi_path, phi_path))
            self.edge_constraints.append(constraints)

        nf = len(self.fiber_names)
        # Scan moves per fiber, in a fixed order: generator slots first, then
        # incident edges in listed order (forward from components, backward
        # from singulars).  The same order drives canonical relabelling.
        self.moves: list[list[tuple[int, int]]] = [[] for _ in range(nf)]
        self.edges_at_fiber: list[list[int]] = [[] for _ in range(nf)]
        for f in range(nf):
            self.moves[f] = [(0, sl) for sl in range(len(self.gen_ids[f]))]
        for ei in range(len(cfg.edges)):
            self.moves[self.edge_comp[ei]].append((1, ei))
            self.moves[self.edge_sing[ei]].append((2, ei))
            self.edges_at_fiber[self.edge_comp[ei]].append(ei)
            self.edges_at_fiber[self.edge_sing[ei]].append(ei)


def _scan(st: _Structure, d: int, emit) -> None:
    """Enumerate connected degree-d tuples, one canonically labelled pointed
    representative per (tuple, base point in the root fiber) pair.

    Points of each fiber are labelled in the order a fixed breadth-first
    scan from (root fiber, point 0) discovers them; a fresh label may only
    be introduced when every smaller label of that fiber is in use, which
    removes all per-fiber relabelling freedom.  Constraints (relators and
    edge equivariance) prune as soon as a trace is fully determined.
    """
    nf = len(st.fiber_names)
    ne = len(st.edge_ids)
    img = [[[-1] * d for _ in st.gen_ids[f]] for f in range(nf)]
    pre = [[[-1] * d for _ in st.gen_ids[f]] for f in range(nf)]
    lam = [[-1] * d for _ in range(ne)]
    lpre = [[-1] * d for _ in range(ne)]
    counts = [0] * nf
    queue: list[tuple[int, int]] = [(0, 0)]
    counts[0] = 1

    def trace(f: int, path, x: int) -> int:
        for sl, s in path:
            x = img[f][sl][x] if s > 0 else pre[f][sl][x]
            if x < 0:
                return -1
        return x

    def relators_ok(f: int, slot: int) -> bool:
        for path in st.rel_by_slot[f].get(slot, ()):
            for start in range(counts[f]):
                x = trace(f, path, start)
                if x >= 0 and x != start:
                    return False
        return True

    def equivariant(ei: int) -> bool:
        cf, sf = st.edge_comp[ei], st.edge_sing[ei]
        row = lam[ei]
        for psi_path, phi_path in st.edge_constraints[ei]:
            for x in range(counts[cf]):
                y = trace(cf, psi_path, x)
                lhs = row[y] if y >= 0 else -1
                u = row[x]
                rhs = trace(sf, phi_path, u) if u >= 0 else -1
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        return True

    def gen_ok(f: int, slot: int) -> bool:
        if not relators_ok(f, slot):
            return False
        return all(equivariant(ei) for ei in st.edges_at_fiber[f])

    def dfs(qi: int, mi: int) -> None:
        if qi == len(queue):
            if all(c == d for c in counts):
                emit(img, lam)
            return
        f, p = queue[qi]
        moves = st.moves[f]
        if mi == len(moves):
            dfs(qi + 1, 0)
            return
        kind, idx = moves[mi]
        if kind == 0:
            row, col = img[f][idx], pre[f][idx]
            if row[p] >= 0:
                dfs(qi, mi + 1)
                return
            n = counts[f]
            for q in range(min(n + 1, d)):
                if col[q] >= 0:
                    continue
                row[p], col[q] = q, p
                fresh = q == n
                if fresh:
                    counts[f] = n + 1
                    queue.append((f, q))
                if gen_ok(f, idx):
                    dfs(qi, mi + 1)
                if fresh:
                    counts[f] = n
                    queue.pop()
                row[p], col[q] = -1, -1
        elif kind == 1:  # gluing forward, at a component point
            row, col = lam[idx], lpre[idx]
            if row[p] >= 0:
                dfs(qi, mi + 1)
                return
            sf = st.edge_sing[idx]
            n = counts[sf]
            for q in range(min(n + 1, d)):
                if col[q] >= 0:
                    continue
                row[p], col[q] = q, p
                fresh = q == n
                if fresh:
                    counts[sf] = n + 1
                    queue.append((sf, q))
                if equivariant(idx):
                    dfs(qi, mi + 1)
                if fresh:
                    counts[sf] = n
                    queue.pop()
                row[p], col[q] = -1, -1
        else:  # gluing backward, at a singular point
            row, col = lam[idx], lpre[idx]
            if col[p] >= 0:
                dfs(qi, mi + 1)
                return
            cf = st.edge_comp[idx]
            n = counts[cf]
            for q in range(min(n + 1, d)):
                if row[q] >= 0:
                    continue
                row[q], col[p] = p, q
                fresh = q == n
                if fresh:
                    counts[cf] = n + 1
                    queue.append((cf, q))
                if equivariant(idx):
                    dfs(qi, mi + 1)
                if fresh:
                    counts[cf] = n
                    queue.pop()
                row[q], col[p] = -1, -1

    dfs(0, 0)


def _canonical(st: _Structure, d: int, img, lam):
    """Least encoding over the d choices of base point in the root fiber.

    Relabelling a complete tuple from each seed reuses the scan's move
    order, so conjugate tuples produce identical least encodings.
    """
    nf = len(st.fiber_names)
    ne = len(st.edge_ids)
    best = None
    for seed in range(d):
        m = [[-1] * d for _ in range(nf)]
        inv = [[-1] * d for _ in range(nf)]
        cnt = [0] * nf
        m[0][seed] = 0
        inv[0][0] = seed
        cnt[0] = 1
        order = [(0, seed)]
        for f, p in order:
            for kind, idx in st.moves[f]:
                if kind == 0:
                    tf, t = f, img[f][idx][p]
                elif kind == 1:
                    tf, t = st.edge_sing[idx], lam[idx][p]
                else:
                    tf = st.edge_comp[idx]
                    t = lam[idx].index(p)
                if m[tf][t] < 0:
                    m[tf][t] = cnt[tf]
                    inv[tf][cnt[tf]] = t
                    cnt[tf] += 1
                    order.append((tf, t))
        enc: list[int] = []
        new_img = []
        for f in range(nf):
            rows = []
            for sl in range(len(st.gen_ids[f])):
                old = img[f][sl]
                row = tuple(m[f][old[inv[f][x]]] for x in range(d))
                rows.append(row)
                enc.extend(row)
            new_img.append(rows)
        new_lam = []
        for ei in range(ne):
            cf, sf = st.edge_comp[ei], st.edge_sing[ei]
            old = lam[ei]
            row = tuple(m[sf][old[inv[cf][x]]] for x in range(d))
            new_lam.append(row)
            enc.extend(row)
        key = tuple(enc)
        if best is None or key < best[0]:
            best = (key, new_img, new_lam)
    return best


def _tuple_from_tables(st: _Structure, d: int, img, lam) -> DescentTuple:
    component_fibers: dict[str, Fiber] = {}
    singular_fibers: dict[str, Fiber] = {}
    for f, (kind, name) in enumerate(st.fiber_names):
        action = {g: tuple(img[f][sl]) for sl, g in enumerate(st.gen_ids[f])}
        fiber: Fiber = (d, action)
        if kind == "c":
            component_fibers[name] = fiber
        else:
            singular_fibers[name] = fiber
    gluings = {eid: tuple(lam[ei]) for ei, eid in enumerate(st.edge_ids)}
    return DescentTuple(component_fibers, singular_fibers, gluings)


def enumerate_tuples(cfg: Configuration, degree: int) -> list[DescentTuple]:
    """All connected descent tuples with fibers of size exactly ``degree``,
    up to isomorphism, in a deterministic order.

    Over a connected configuration every fiber of a connected tuple has the
    same size, so a single degree describes the whole cover.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if not is_connected(build_graph(cfg)):
        raise DisconnectedError("tuple census requires a connected configuration")
    st = _Structure(cfg)
    found: dict[tuple, tuple] = {}

    def emit(img, lam):
        key, new_img, new_lam = _canonical(st, degree, img, lam)
        if key not in found:
            found[key] = (new_img, new_lam)

    _scan(st, degree, emit)
    return [_tuple_from_tables(st, degree, img, lam)
            for _, (img, lam) in sorted(found.items())]


def _transports(cfg: Configuration, result: AssemblyResult,
                t: DescentTuple, degree: int) -> dict[tuple[str, str], Perm]:
    """Tree-path transport maps root fiber -> each fiber."""
    if result.tree is None or result.root is None:
        raise ValueError("transports need a tree-based assembly result")
    tree = set(result.tree)
    tau: dict[tuple[str, str], Perm] = {("c", result.root): identity_perm(degree)}
    frontier = [("c", result.root)]
    while frontier:
        kind, vid = frontier.pop(0)
        for e in cfg.edges:
            if e.id not in tree:
                continue
            lam = t.gluings[e.id]
            if kind == "c" and e.component == vid and ("s", e.singular) not in tau:
                tau[("s", e.singular)] = compose(lam, tau[("c", vid)])
                frontier.append(("s", e.singular))
            elif kind == "s" and e.singular == vid and ("c", e.component) not in tau:
                tau[("c", e.component)] = compose(inverse_perm(lam), tau[("s", vid)])
                frontier.append(("c", e.component))
    return tau


def rep_of_tuple(cfg: Configuration, result: AssemblyResult,
                 t: DescentTuple) -> Hom:
    """The action of the assembled presentation on the root-component fiber.

    Node generators act through tree-edge transport; the free generator of
    a cotree edge acts by the gluing composite around its fundamental cycle.
    Relators are verified to act trivially; a violation means the assembly
    and the census disagree on conventions, which is a bug, so it raises
    RuntimeError rather than returning a report.
    """
    degree = t.component_fibers[result.root][0]
    tau = _transports(cfg, result, t, degree)

    images: dict[GenId, Perm] = {}
    for c in cfg.components:
        _, action = t.component_fibers[c.id]
        tr = tau[("c", c.id)]
        tr_inv = inverse_perm(tr)
        for g in c.group.generators:
            images[g] = compose(tr_inv, compose(action[g], tr))
    for s in cfg.singulars:
        _, action = t.singular_fibers[s.id]
        tr = tau[("s", s.id)]
        tr_inv = inverse_perm(tr)
        for g in s.group.generators:
            images[g] = compose(tr_inv, compose(action[g], tr))
    tree = set(result.tree)
    for e in cfg.edges:
        if e.id in tree:
            continue
        x = free_edge_generator(e.id)
        images[x] = compose(inverse_perm(tau[("s", e.singular)]),
                            compose(t.gluings[e.id], tau[("c", e.component)]))

    pres = result.presentation
    ident = identity_perm(degree)
    for rel in pres.relations:
        if eval_word(rel, images, degree) != ident:
            raise RuntimeError(f"relator {rel} does not act trivially; "
                               "tuple/assembly dictionary is inconsistent")
    return hom(pres, symmetric(degree), images)


def tuple_of_rep(cfg: Configuration, result: AssemblyResult,
                 rep: Hom) -> DescentTuple:
    """Inverse of ``rep_of_tuple`` up to isomorphism: every fiber is a copy
    of the representation space, tree gluings are identities, and each
    cotree gluing realizes its free generator's image."""
    if result.tree is None:
        raise ValueError("need a tree-based assembly result")
    if rep.source != result.presentation:
        raise ValueError("representation is not of the assembled presentation")
    degree = rep.target.degree
    images = rep.images_dict()
    ident = identity_perm(degree)
    for rel in result.presentation.relations:
        if eval_word(rel, images, degree) != ident:
            raise ValueError(f"representation violates relator {rel}")

    component_fibers = {
        c.id: (degree, {g: images[g] for g in c.group.generators})
        for c in cfg.components}
    singular_fibers = {
        s.id: (degree, {g: images[g] for g in s.group.generators})
        for s in cfg.singulars}
    tree = set(result.tree)
    gluings = {e.id: (ident if e.id in tree
                      else images[free_edge_generator(e.id)])
               for e in cfg.edges}
    return DescentTuple(component_fibers, singular_fibers, gluings)


@dataclass(frozen=True)
class EquivalenceRow:
    degree: int
    tuples: int
    reps: int


@dataclass(frozen=True)
class EquivalenceReport:
    """Per-degree comparison of the cover census with the assembled
    presentation's transitive-action count; pass iff they always agree."""

    rows: tuple[EquivalenceRow, ...]
    passed: bool


def equivalence_report(cfg: Configuration, result: AssemblyResult,
                       max_degree: int) -> EquivalenceReport:
    rows = []
    for d in range(1, max_degree + 1):
        rows.append(EquivalenceRow(
            d, len(enumerate_tuples(cfg, d)),
            count_transitive_actions(result.presentation, d)))
    return EquivalenceReport(tuple(rows),
                             all(r.tuples == r.reps for r in rows))
