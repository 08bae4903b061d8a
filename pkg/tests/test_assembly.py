"""Direct, recursive, and curve-path assembly."""

from __future__ import annotations

import pytest

from devissage import (DisconnectedError, GenId, assemble_direct,
                       assemble_recursive, block_order, curve_assembly, cyclic,
                       cyclic_presentation, fingerprint, free_edge_generator,
                       free_rank, hom_count, split_blocks, subconfiguration,
                       symmetric, word)
from devissage.corpus import (all_trivial_corpus, bouquet, chain,
                              double_bouquet, equivariant_z2, full_corpus,
                              line_cycle, nodal_cubic, z2_chain,
                              z2_double_bouquet, z2_nodal)

PROBES = (symmetric(2), cyclic(3), symmetric(3), cyclic(4))


# --- direct ------------------------------------------------------------------

def test_nodal_cubic_assembles_to_free_rank_one():
    res = assemble_direct(nodal_cubic())
    assert res.presentation.generators == (free_edge_generator("e2"),)
    assert res.presentation.relations == ()
    assert res.method == "direct" and res.tree == ("e1",)


def test_z2_nodal_assembles_to_z2_star_z():
    res = assemble_direct(z2_nodal())
    a = GenId("X1", 0)
    x = free_edge_generator("e2")
    assert set(res.presentation.generators) == {a, x}
    assert res.presentation.relations == (word((a, 1), (a, 1)),)
    assert hom_count(res.presentation, symmetric(2)) == 4  # reference.py


def test_equivariant_edges_produce_conjugation_relations():
    res = assemble_direct(equivariant_z2())
    a, b = GenId("X1", 0), GenId("Z1", 0)
    x = free_edge_generator("e2")
    # tree edge e1: a = b; cotree edge e2: a = x^-1 b x
    assert word((a, -1), (b, 1)) in res.presentation.relations
    assert word((a, -1), (x, -1), (b, 1), (x, 1)) in res.presentation.relations


@pytest.mark.parametrize("name,cfg", sorted(all_trivial_corpus().items()))
def test_all_trivial_configs_assemble_free(name, cfg):
    res = assemble_direct(cfg)
    rank = free_rank(cfg)
    assert res.presentation.rank == rank
    assert res.presentation.relations == ()
    for probe in PROBES:
        assert hom_count(res.presentation, probe) == probe.order ** rank


def test_dictionary_tracks_origins():
    res = assemble_direct(z2_nodal())
    a = GenId("X1", 0)
    assert res.dictionary[a].kind == "component"
    assert res.dictionary[free_edge_generator("e2")].kind == "edge"


def test_direct_requires_connected():
    from devissage import ComponentNode, Configuration, trivial_presentation
    cfg = Configuration((ComponentNode("X1", trivial_presentation()),
                         ComponentNode("X2", trivial_presentation())), (), ())
    with pytest.raises(DisconnectedError):
        assemble_direct(cfg)


def test_bare_component_assembles_to_its_own_group():
    from devissage import ComponentNode, Configuration
    group = cyclic_presentation("X1", 4)
    cfg = Configuration((ComponentNode("X1", group),), (), ())
    res = assemble_direct(cfg)
    assert res.presentation.generators == group.generators
    assert res.presentation.relations == group.relations


def test_root_choice_never_changes_fingerprints():
    for cfg in (line_cycle(3), z2_chain(), double_bouquet(2, 2)):
        base = None
        for comp in cfg.components:
            res = assemble_direct(cfg, root=comp.id)
            fp = fingerprint(res.presentation, PROBES)
            assert base is None or fp == base
            base = fp


# --- blocks and their order --------------------------------------------------

def test_single_singular_block_is_whole_config():
    blocks = split_blocks(bouquet(3))
    assert len(blocks) == 1
    assert blocks[0].components == ("X1",)
    assert set(blocks[0].edges) == {"e1", "e2", "e3"}


def test_cycle_blocks():
    blocks = {b.singular: b for b in split_blocks(line_cycle(2))}
    assert set(blocks["Z1"].components) == {"X1", "X2"}
    assert set(blocks["Z2"].components) == {"X1", "X2"}


def test_chain_blocks_and_order():
    cfg = chain(3)
    blocks = {b.singular: b for b in split_blocks(cfg)}
    assert blocks["Z1"].components == ("X1", "X2")
    assert blocks["Z2"].components == ("X2", "X3")
    assert block_order(cfg) == ("Z1", "Z2")


def test_star_of_singulars_order_is_listed_order():
    cfg = double_bouquet(2, 2)
    assert block_order(cfg) == ("Z1", "Z2")


def test_single_block_order():
    assert block_order(bouquet(3)) == ("Z1",)


def test_split_blocks_rejects_no_singulars():
    from devissage import ComponentNode, Configuration, trivial_presentation
    cfg = Configuration((ComponentNode("X1", trivial_presentation()),), (), ())
    with pytest.raises(ValueError):
        split_blocks(cfg)


def test_subconfiguration_induced():
    cfg = chain(3)
    sub = subconfiguration(cfg, ["Z1"])
    assert {c.id for c in sub.components} == {"X1", "X2"}
    assert [s.id for s in sub.singulars] == ["Z1"]
    assert {e.id for e in sub.edges} == {"e1a", "e1b"}


# --- recursive ---------------------------------------------------------------

def test_recursive_delegates_when_one_singular():
    cfg = bouquet(3)
    assert assemble_recursive(cfg) == assemble_direct(cfg)


@pytest.mark.parametrize("cfg_factory", [
    lambda: line_cycle(2), lambda: line_cycle(3), lambda: line_cycle(4),
    lambda: line_cycle(5), lambda: chain(3), lambda: chain(4),
    lambda: double_bouquet(2, 2), lambda: z2_chain(),
    lambda: z2_double_bouquet()])
def test_recursive_matches_direct_fingerprints(cfg_factory):
    cfg = cfg_factory()
    fp_direct = fingerprint(assemble_direct(cfg).presentation, PROBES)
    fp_rec = fingerprint(assemble_recursive(cfg).presentation, PROBES)
    assert fp_direct == fp_rec


def test_cycle2_recursive_is_free_rank_one():
    res = assemble_recursive(line_cycle(2))
    assert res.method == "recursive"
    assert res.presentation.relations == ()
    assert res.presentation.rank == 1
    assert hom_count(res.presentation, symmetric(3)) == 6


def test_chain3_recursive_is_trivial_group():
    res = assemble_recursive(chain(3))
    for probe in PROBES:
        assert hom_count(res.presentation, probe) == 1


def test_recursive_dictionary_marks_copies_and_conjugators():
    res = assemble_recursive(z2_double_bouquet())
    kinds = {o.kind for o in res.dictionary.values()}
    assert "component" in kinds and "edge" in kinds
    copies = [o for o in res.dictionary.values()
              if o.kind == "component" and o.detail.startswith("copy@")]
    assert copies, "shared component should appear as a renamed copy"
    assert res.tree is None


# --- curve fast path ---------------------------------------------------------

@pytest.mark.parametrize("name,cfg", sorted(all_trivial_corpus().items()))
def test_curve_path_equals_direct_on_trivial_configs(name, cfg):
    fast = curve_assembly(cfg)
    direct = assemble_direct(cfg)
    assert fast.presentation == direct.presentation
    assert fast.method == "curve-fast-path"


def test_curve_path_keeps_component_groups():
    res = curve_assembly(z2_nodal())
    assert res.presentation == assemble_direct(z2_nodal()).presentation


def test_curve_path_rejects_nontrivial_singular_or_edge_groups():
    with pytest.raises(ValueError):
        curve_assembly(equivariant_z2())


# --- method agreement over the full corpus (cheap probes only) ---------------

@pytest.mark.parametrize("name,cfg", sorted(full_corpus().items()))
def test_methods_agree_everywhere(name, cfg):
    small = (symmetric(2), symmetric(3))
    direct = assemble_direct(cfg)
    recursive = assemble_recursive(cfg)
    assert fingerprint(direct.presentation, small) == \
        fingerprint(recursive.presentation, small)
