"""Closed-braid diagrams, Kauffman states, Turaev genus, dealternating numbers."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusknot.braid import BraidWord, lemma_word, torus_braid_word
from torusknot.diagram import (
    DisconnectedDiagram,
    MalformedPDCode,
    all_a,
    all_b,
    brute_force_dealternating,
    change_crossings,
    closure_diagram,
    dealternating_number_diagram,
    export_pd,
    import_pd,
    is_alternating,
    state_components,
    turaev_genus_diagram,
)


# ----------------------------------------------------------------------
# closures and states


def test_closure_shape():
    d = closure_diagram(torus_braid_word(4, 5))
    assert d.n_crossings == 15
    assert d.strands == 4
    assert d.free_circles == 0
    assert sorted(d.labels) == list(range(1, 31))


def test_closure_of_empty_word_is_free_circles():
    d = closure_diagram(BraidWord(3, ()))
    assert d.n_crossings == 0
    assert d.free_circles == 3


def test_all_a_of_a_closure_counts_strands():
    for p, q in ((2, 3), (3, 4), (4, 5), (5, 6), (6, 7)):
        assert all_a(closure_diagram(torus_braid_word(p, q))).component_count == p
    assert all_a(closure_diagram(lemma_word(5, 7))).component_count == 5


def test_two_strand_closures_are_alternating():
    for q in (2, 3, 5, 8):
        d = closure_diagram(torus_braid_word(2, q))
        assert is_alternating(d)
        assert all_b(d).component_count == q
        assert turaev_genus_diagram(d) == 0


def test_standard_many_strand_closures_are_not_alternating():
    assert not is_alternating(closure_diagram(torus_braid_word(3, 4)))
    assert not is_alternating(closure_diagram(torus_braid_word(4, 5)))


def test_state_components_explicit_assignment():
    d = closure_diagram(torus_braid_word(2, 3))
    assert state_components(d, "AAA").component_count == 2
    assert state_components(d, "BBB").component_count == 3
    assert state_components(d, "ABA").component_count == 1
    with pytest.raises(ValueError):
        state_components(d, "AA")
    with pytest.raises(ValueError):
        state_components(d, "AAX")


@settings(max_examples=150, deadline=None)
@given(
    st.integers(2, 6).flatmap(
        lambda p: st.tuples(
            st.just(p), st.lists(st.integers(1, p - 1), min_size=1, max_size=16)
        )
    ),
    st.data(),
)
def test_single_smoothing_flip_changes_count_by_one(pw, data):
    p, letters = pw
    d = closure_diagram(BraidWord(p, tuple(letters)))
    assignment = data.draw(
        st.lists(
            st.sampled_from("AB"), min_size=len(letters), max_size=len(letters)
        )
    )
    i = data.draw(st.integers(0, len(letters) - 1))
    flipped = list(assignment)
    flipped[i] = "B" if flipped[i] == "A" else "A"
    before = state_components(d, assignment).component_count
    after = state_components(d, flipped).component_count
    assert abs(after - before) == 1


# ----------------------------------------------------------------------
# Turaev genus


def test_turaev_genus_values():
    assert turaev_genus_diagram(closure_diagram(torus_braid_word(1, 1))) == 0
    assert turaev_genus_diagram(closure_diagram(lemma_word(4, 4))) == 2
    assert turaev_genus_diagram(closure_diagram(lemma_word(6, 6))) == 6
    assert turaev_genus_diagram(closure_diagram(lemma_word(6, 7))) == 6


def test_turaev_genus_euler_identity():
    for p, q in ((4, 5), (5, 6), (5, 8), (6, 7)):
        d = closure_diagram(lemma_word(p, q))
        c = d.n_crossings
        s_a = all_a(d).component_count
        s_b = all_b(d).component_count
        assert 2 * turaev_genus_diagram(d) == 2 + c - s_a - s_b


def test_turaev_genus_rejects_disconnected():
    # sigma_1 on three strands: the third strand closes to a split circle.
    with pytest.raises(DisconnectedDiagram):
        turaev_genus_diagram(closure_diagram(BraidWord(3, (1,))))


# ----------------------------------------------------------------------
# crossing changes


def test_change_crossings_involution_and_signs():
    d = closure_diagram(torus_braid_word(3, 4))
    changed = change_crossings(d, (0, 3, 5))
    assert changed.signs != d.signs
    assert [s for i, s in enumerate(changed.signs) if i in (0, 3, 5)] == ["-"] * 3
    assert change_crossings(changed, (0, 3, 5)) == d
    assert change_crossings(d, ()) == d


def test_change_crossings_bad_index():
    d = closure_diagram(torus_braid_word(2, 3))
    with pytest.raises(IndexError):
        change_crossings(d, (3,))


# ----------------------------------------------------------------------
# dealternating numbers


def test_alternating_diagrams_need_no_changes():
    for q in (2, 5, 9):
        report = dealternating_number_diagram(closure_diagram(torus_braid_word(2, q)))
        assert report.minimum_changes == 0
        assert report.witness == ()


def test_golden_full_twist_dealternating():
    report = dealternating_number_diagram(closure_diagram(torus_braid_word(4, 4)))
    assert report.minimum_changes == 4
    assert report.witness == (1, 4, 7, 10)


def test_witness_yields_alternating_diagram():
    for p, q in ((3, 4), (4, 5), (5, 6), (6, 7)):
        for word in (torus_braid_word(p, q),) + (
            (lemma_word(p, q),) if p >= 4 else ()
        ):
            d = closure_diagram(word)
            report = dealternating_number_diagram(d)
            assert len(report.witness) == report.minimum_changes
            assert is_alternating(change_crossings(d, report.witness))


def test_solver_matches_brute_force_on_torus_words():
    for p, q in ((2, 3), (2, 7), (3, 4), (3, 5), (4, 4)):
        d = closure_diagram(torus_braid_word(p, q))
        assert (
            dealternating_number_diagram(d).minimum_changes
            == brute_force_dealternating(d)
        )


def test_solver_matches_brute_force_on_random_words():
    rng = random.Random(11)
    done = 0
    while done < 30:
        strands = rng.randint(2, 4)
        length = rng.randint(1, 12)
        word = BraidWord(
            strands, tuple(rng.randint(1, strands - 1) for _ in range(length))
        )
        d = closure_diagram(word)
        assert (
            dealternating_number_diagram(d).minimum_changes
            == brute_force_dealternating(d)
        ), word.as_text()
        done += 1


def test_component_structure_partitions_crossings():
    d = closure_diagram(lemma_word(5, 7))
    report = dealternating_number_diagram(d)
    seen = sorted(c for comp in report.component_structure for c in comp.crossings)
    assert seen == list(range(d.n_crossings))
    total = sum(len(comp.changes) for comp in report.component_structure)
    assert total == report.minimum_changes


def test_brute_force_limit():
    with pytest.raises(ValueError):
        brute_force_dealternating(closure_diagram(torus_braid_word(4, 5)))


# ----------------------------------------------------------------------
# PD codes


def test_pd_roundtrip_is_byte_exact():
    for word in (torus_braid_word(3, 4), lemma_word(4, 5), lemma_word(6, 6)):
        d = closure_diagram(word)
        text = export_pd(d)
        again = import_pd(text)
        assert again == d
        assert export_pd(again) == text


def test_pd_preserves_free_circles():
    d = closure_diagram(BraidWord(2, ()))
    text = export_pd(d)
    assert json.loads(text)["circles"] == 2
    assert import_pd(text).free_circles == 2


def test_pd_import_validates_labels():
    good = json.loads(export_pd(closure_diagram(torus_braid_word(2, 3))))
    del good["strands"]
    import_pd(json.dumps(good))  # strand count is optional

    bad = json.loads(export_pd(closure_diagram(torus_braid_word(2, 3))))
    bad["crossings"][0][0] = 99  # label 99 appears once, its partner zero times
    with pytest.raises(MalformedPDCode):
        import_pd(json.dumps(bad))

    bad = json.loads(export_pd(closure_diagram(torus_braid_word(2, 3))))
    bad["crossings"][0][4] = "x"
    with pytest.raises(MalformedPDCode):
        import_pd(json.dumps(bad))

    bad = json.loads(export_pd(closure_diagram(torus_braid_word(2, 3))))
    bad["crossings"][0] = bad["crossings"][0][:4]
    with pytest.raises(MalformedPDCode):
        import_pd(json.dumps(bad))


def test_pd_import_rejects_non_json():
    with pytest.raises(ValueError):
        import_pd("not json at all {")


def test_dealternating_on_imported_diagram():
    d = closure_diagram(lemma_word(4, 4))
    again = import_pd(export_pd(d))
    assert (
        dealternating_number_diagram(again).minimum_changes
        == dealternating_number_diagram(d).minimum_changes
    )
