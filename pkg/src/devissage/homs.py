"""Homomorphisms from presented groups into finite permutation groups.

This module is the verification substrate for everything else: since the
word problem is undecidable in general, equality claims about presented
groups are only ever certified through exhaustive enumeration of their
finite actions.  ``enumerate_homs`` is the universal oracle;
``count_transitive_actions`` counts connected covers of the classifying
object, i.e. transitive actions up to simultaneous conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from .perms import (Perm, PermGroupTarget, compose, identity_perm,
                    inverse_perm)
from .presentations import Presentation
from .words import GenId, Word

__all__ = [
    "Hom",
    "hom",
    "Fingerprint",
    "eval_word",
    "map_word",
    "verify_hom",
    "pullback",
    "enumerate_homs",
    "hom_count",
    "fingerprint",
    "count_transitive_actions",
]

Image = Union[Word, Perm]


@dataclass(frozen=True)
class Hom:
    """A homomorphism described on generators.

    Images are words when the target is a presentation and permutations when
    it is a finite group.  Relator-vanishing is checkable (and checked by
    ``verify_hom``) only in the permutation case; word-valued homs are
    certified indirectly, through the finite actions they transport.
    """

    source: Presentation
    target: Presentation | PermGroupTarget
    images: tuple[tuple[GenId, Image], ...]

    def image(self, g: GenId) -> Image:
        for k, v in self.images:
            if k == g:
                return v
        raise KeyError(g)

    def images_dict(self) -> dict[GenId, Image]:
        return dict(self.images)


def hom(source: Presentation,
        target: Presentation | PermGroupTarget,
        images: Mapping[GenId, Image]) -> Hom:
    """Build a ``Hom``, checking every source generator has a valid image."""
    pairs = []
    for g in source.generators:
        if g not in images:
            raise ValueError(f"missing image for {g}")
        img = images[g]
        if isinstance(target, PermGroupTarget):
            if not (isinstance(img, tuple) and len(img) == target.degree):
                raise ValueError(f"image of {g} is not a degree-{target.degree} permutation")
        else:
            if not isinstance(img, Word):
                raise ValueError(f"image of {g} must be a word")
            unknown = img.generators() - set(target.generators)
            if unknown:
                raise ValueError(f"image of {g} uses unknown generators {sorted(map(str, unknown))}")
        pairs.append((g, img))
    extra = set(images) - set(source.generators)
    if extra:
        raise ValueError(f"images given for non-generators {sorted(map(str, extra))}")
    return Hom(source, target, tuple(pairs))


def eval_word(w: Word, images: Mapping[GenId, Perm], degree: int) -> Perm:
    """Evaluate a word in a permutation action (rightmost letter first)."""
    out = identity_perm(degree)
    for g, s in reversed(w.letters):
        p = images[g] if s > 0 else inverse_perm(images[g])
        out = compose(p, out)
    return out


def map_word(w: Word, images: Mapping[GenId, Word]) -> Word:
    """Substitute generator images into a word (no reduction)."""
    parts: list[tuple[GenId, int]] = []
    for g, s in w.letters:
        img = images[g] if s > 0 else images[g].inverse()
        parts.extend(img.letters)
    return Word(tuple(parts))


def verify_hom(h: Hom) -> bool:
    """True iff every relator of the source maps to the identity.

    Only decidable for permutation targets.
    """
    if not isinstance(h.target, PermGroupTarget):
        raise ValueError("verify_hom needs a finite permutation target")
    d = h.target.degree
    images = h.images_dict()
    universe = set(h.target.elements)
    if any(img not in universe for img in images.values()):
        return False
    ident = identity_perm(d)
    return all(eval_word(r, images, d) == ident for r in h.source.relations)


def pullback(h: Hom, via: Hom) -> Hom:
    """Transport a permutation-valued hom along a word-valued one.

    ``via`` maps presentation P into presentation Q; composing with
    ``h : Q -> G`` yields the induced hom ``P -> G``.
    """
    if not isinstance(h.target, PermGroupTarget):
        raise ValueError("pullback target must be a permutation group")
    if via.target != h.source:
        raise ValueError("hom sources do not line up")
    d = h.target.degree
    himg = h.images_dict()
    images = {g: eval_word(w, himg, d) for g, w in via.images}
    return hom(via.source, h.target, images)


def _indexed_relators(p: Presentation) -> tuple[dict[GenId, int], list[tuple[tuple[int, int], ...]]]:
    pos = {g: i for i, g in enumerate(p.generators)}
    rels = [tuple((pos[g], s) for g, s in w.letters)
            for w in p.relations if w.letters]
    return pos, rels


def _iter_image_tuples(p: Presentation, g: PermGroupTarget) -> Iterator[tuple[Perm, ...]]:
    """Depth-first search over generator images in listed order.

    A relator is checked as soon as its last-listed generator receives an
    image; this early pruning is what keeps larger probes tractable.
    """
    r = len(p.generators)
    _, rels = _indexed_relators(p)
    by_last: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in range(r)]
    for rel in rels:
        by_last[max(i for i, _ in rel)].append(rel)
    d = g.degree
    ident = identity_perm(d)
    elements = g.elements
    chosen: list[Perm] = []
    inverses: list[Perm] = []

    def ok(rel: tuple[tuple[int, int], ...]) -> bool:
        out = ident
        for gi, s in reversed(rel):
            out = compose(chosen[gi] if s > 0 else inverses[gi], out)
        return out == ident

    def walk(k: int) -> Iterator[tuple[Perm, ...]]:
        if k == r:
            yield tuple(chosen)
            return
        for el in elements:
            chosen.append(el)
            inverses.append(inverse_perm(el))
            if all(ok(rel) for rel in by_last[k]):
                yield from walk(k + 1)
            chosen.pop()
            inverses.pop()

    yield from walk(0)


def enumerate_homs(p: Presentation, g: PermGroupTarget) -> list[Hom]:
    """All homs from ``p`` to ``g``, in a fixed deterministic order."""
    gens = p.generators
    return [Hom(p, g, tuple(zip(gens, images)))
            for images in _iter_image_tuples(p, g)]


def hom_count(p: Presentation, g: PermGroupTarget) -> int:
    return sum(1 for _ in _iter_image_tuples(p, g))


@dataclass(frozen=True)
class Fingerprint:
    """Hom counts into a list of probe groups.

    Equal fingerprints are a necessary (not sufficient) condition for two
    presentations to define isomorphic groups.
    """

    probes: tuple[PermGroupTarget, ...]
    counts: tuple[int, ...]

    def __str__(self) -> str:
        return ", ".join(f"{p}:{c}" for p, c in zip(self.probes, self.counts))


def fingerprint(p: Presentation, probes: Sequence[PermGroupTarget]) -> Fingerprint:
    probes = tuple(probes)
    return Fingerprint(probes, tuple(hom_count(p, g) for g in probes))


def count_transitive_actions(p: Presentation, degree: int) -> int:
    """Transitive actions of ``p`` on {0..degree-1} up to conjugation.

    Equivalently: isomorphism classes of connected degree-``degree`` covers
    of the classifying object.  The search enumerates one canonically
    labelled table per pointed action (points are labelled in the order a
    fixed scan discovers them, so per-table relabelling freedom is gone),
    then divides out the base-point choice by automorphism counting: each
    isomorphism class of transitive actions contains degree/|Aut| pointed
    tables, so the class count is sum(|Aut|)/degree.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    gens = p.generators
    r = len(gens)
    if r == 0:
        return 1 if degree == 1 else 0
    _, rels = _indexed_relators(p)
    # Pointwise tracing applies letters one at a time, so walk them reversed
    # to realize the left action (rightmost letter acts first).
    paths = [tuple(reversed(rel)) for rel in rels]
    by_gen: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in range(r)]
    for path in paths:
        for gi in {i for i, _ in path}:
            by_gen[gi].append(path)

    d = degree
    img = [[-1] * d for _ in range(r)]
    pre = [[-1] * d for _ in range(r)]
    state = {"discovered": 1, "aut_total": 0}

    def relators_ok(gi: int) -> bool:
        # Prune on any relator trace that is fully determined and fails.
        n = state["discovered"]
        for path in by_gen[gi]:
            for start in range(n):
                x = start
                for gj, s in path:
                    x = img[gj][x] if s > 0 else pre[gj][x]
                    if x < 0:
                        break
                else:
                    if x != start:
                        return False
        return True

    def automorphisms() -> int:
        # Seeds whose scan-relabelling reproduces the table verbatim are
        # exactly the automorphisms of the action (they act freely).
        count = 0
        for seed in range(d):
            m = [-1] * d
            m[seed] = 0
            order = [seed]
            for x in order:
                for gi in range(r):
                    y = img[gi][x]
                    if m[y] < 0:
                        m[y] = len(order)
                        order.append(y)
            if all(m[img[gi][x]] == img[gi][m[x]]
                   for gi in range(r) for x in range(d)):
                count += 1
        return count

    def scan(cell: int) -> None:
        if cell == d * r:
            state["aut_total"] += automorphisms()
            return
        point, gi = divmod(cell, r)
        n = state["discovered"]
        if point >= n:
            return  # the scan closed up early: a proper sub-action, too small
        row, col = img[gi], pre[gi]
        limit = min(n + 1, d)
        for q in range(limit):
            if col[q] >= 0:
                continue
            row[point] = q
            col[q] = point
            fresh = q == n
            if fresh:
                state["discovered"] = n + 1
            if relators_ok(gi):
                scan(cell + 1)
            if fresh:
                state["discovered"] = n
            row[point] = -1
            col[q] = -1

    scan(0)
    total = state["aut_total"]
    if total % d:
        raise RuntimeError("automorphism bookkeeping is inconsistent")
    return total // d
