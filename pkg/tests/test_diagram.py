import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vbraid.action import act_quad, act_sigma, act_sigma_inv
from vbraid.diagram import (
    BOX_BY_NAME,
    BOXES,
    arrow_table,
    certify_nontrivial,
    classify,
    l1_norm,
    pattern_matches,
    sample_matching,
    symbol_matches,
    verify_arrow,
    verify_closure,
    verify_diagram,
)
from vbraid.words import RHO, SIGMA, SIGMA_INV, BraidWord, parse_word, random_reduced_word

ints = st.integers(-(10**6), 10**6)
quads = st.tuples(ints, ints, ints, ints)


def arrow(label):
    matches = [a for a in arrow_table() if a.label == label]
    assert len(matches) >= 1
    return matches[0]


class TestSymbols:
    @pytest.mark.parametrize(
        "symbol, member, nonmember",
        [
            ("0", 0, 1),
            ("+", 3, 0),
            ("-", -2, 0),
            ("+0", 0, -1),
            ("-0", -5, 2),
        ],
    )
    def test_membership(self, symbol, member, nonmember):
        assert symbol_matches(symbol, member)
        assert not symbol_matches(symbol, nonmember)

    def test_unknown_symbol(self):
        with pytest.raises(ValueError):
            symbol_matches("++", 1)

    def test_pattern_matching(self):
        assert pattern_matches(("+", "+0", "0", "-"), (2, 0, 0, -1))
        assert not pattern_matches(("+", "+0", "0", "-"), (2, 0, 1, -1))


class TestClassify:
    def test_strictly_negative_pair(self):
        boxes = classify((-1, -1, 0, 4))
        assert [box.name for box in boxes] == ["B6"]

    def test_start_vector(self):
        assert [box.name for box in classify((0, 2, 0, 1))] == ["B1"]

    def test_after_one_crossing(self):
        assert [box.name for box in classify((2, 0, 0, 3))] == ["B2"]

    def test_outside_the_diagram(self):
        assert classify((7, 1, 4, 1)) == []
        assert classify((0, 0, 0, 0)) == []

    @given(quads)
    def test_boxes_are_pairwise_disjoint(self, quad):
        assert len(classify(quad)) <= 1


class TestArrowTable:
    def test_counts(self):
        arrows = arrow_table()
        assert len(arrows) == 19
        crossing = [a for a in arrows if a.generator != RHO]
        virtual = [a for a in arrows if a.generator == RHO]
        assert len(crossing) == 14
        assert sorted(a.case for a in crossing) == list(range(1, 15))
        assert len(virtual) == 5
        assert {(a.source, a.target) for a in virtual} == {
            ("B1", "B1"),
            ("B2", "B4"),
            ("B3", "B5"),
            ("B6", "B8"),
            ("B7", "B9"),
        }

    def test_closed_form_spot_values(self):
        assert arrow("2").closed_form(0, 2, 0, 1) == (2, 0, 0, 3)
        assert arrow("1").closed_form(0, 2, 0, 1) == (-2, 0, 0, 3)
        assert arrow("3").closed_form(-2, 0, 0, 3) == (-2, -2, 0, 5)
        assert arrow("9").closed_form(-1, -1, 0, 4) == (-1, -2, 0, 5)

    def test_case_13_sample(self):
        image = arrow("13").closed_form(-1, 2, 3, -4)
        assert image == (5, -4, -5, 2)
        assert image == act_sigma((-1, 2, 3, -4))
        assert l1_norm(image) == 16 > 10 == l1_norm((-1, 2, 3, -4))

    def test_case_9_image_stays_in_box(self):
        image = act_sigma_inv((-1, -1, 0, 4))
        assert image == (-1, -2, 0, 5)
        assert BOX_BY_NAME["B6"].matches(image)

    @pytest.mark.parametrize("a", arrow_table(), ids=lambda a: a.describe())
    def test_every_arrow_on_samples(self, a):
        check = verify_arrow(a, 400, random.Random(hash(a.describe()) & 0xFFFF))
        assert check.ok, check.as_dict()

    @settings(max_examples=300)
    @given(quads, st.sampled_from([a for a in arrow_table() if a.generator != RHO]))
    def test_closed_form_agrees_wherever_source_matches(self, quad, a):
        if pattern_matches(BOX_BY_NAME[a.source].pattern, quad):
            image = act_quad(a.generator, quad)
            assert image == a.closed_form(*quad)
            assert pattern_matches(BOX_BY_NAME[a.target].pattern, image)
            assert l1_norm(image) > l1_norm(quad)


class TestSampling:
    def test_respects_pattern(self):
        rng = random.Random(4)
        for box in BOXES:
            for _ in range(200):
                assert box.matches(sample_matching(box.pattern, rng))

    def test_half_line_symbols_hit_their_boundary(self):
        rng = random.Random(9)
        samples = [sample_matching(("+0", "+", "-", "-"), rng) for _ in range(200)]
        assert any(s[0] == 0 for s in samples)
        assert any(s[0] > 1000 for s in samples)
        assert any(s[0] == 1 for s in samples)


class TestClosure:
    def test_diagram_is_closed(self):
        assert verify_closure().ok

    def test_successors_of_b2(self):
        # reached by crossings only, so sigma and rho successors suffice
        sources = {(a.source, a.generator) for a in arrow_table()}
        assert ("B2", SIGMA) in sources
        assert ("B2", RHO) in sources

    def test_successors_of_b8(self):
        # reached by rho only, so both crossing successors must exist
        sources = {(a.source, a.generator) for a in arrow_table()}
        assert ("B8", SIGMA) in sources
        assert ("B8", SIGMA_INV) in sources

    def test_start_box_has_all_generators(self):
        sources = {(a.source, a.generator) for a in arrow_table()}
        for kind in (SIGMA, SIGMA_INV, RHO):
            assert ("B1", kind) in sources


class TestNorm:
    def test_values(self):
        assert l1_norm((7, 4, 1, 1)) == 13
        assert l1_norm((3, 1, 6, 1)) == 11
        assert l1_norm((0, 0, 0, 0)) == 0

    def test_norm_can_drop_outside_the_diagram(self):
        # negative control: monotonicity is a property of the nine regions,
        # not of arbitrary quadruples (13 -> 11 here)
        start = (7, 1, 4, 1)
        assert classify(start) == []
        image = act_sigma_inv(start)
        assert image == (3, 1, 6, 1)
        assert l1_norm(image) == 11 < 13 == l1_norm(start)


class TestVerifyDiagram:
    def test_full_report(self):
        report = verify_diagram(300, random.Random(17))
        assert report.ok
        payload = report.as_dict()
        assert payload["pass"] is True
        assert len(payload["arrows"]) == 19
        assert payload["closure"]["pass"] is True

    def test_requires_samples(self):
        with pytest.raises(ValueError):
            verify_arrow(arrow_table()[0], 0, random.Random(0))


class TestCertify:
    def test_single_crossing(self):
        cert = certify_nontrivial(parse_word("s1", 2))
        assert cert.nontrivial
        assert cert.image == (2, 0, 0, 3)
        assert cert.boxes == ("B1", "B2")
        assert cert.norms == (3, 5)

    def test_empty_word_trivial(self):
        cert = certify_nontrivial(parse_word("", 2))
        assert cert.trivial
        assert cert.image == (0, 2, 0, 1)

    def test_single_virtual_letter(self):
        cert = certify_nontrivial(parse_word("r1", 2))
        assert cert.nontrivial
        assert cert.image == (0, 1, 0, 2)
        assert cert.boxes == ("B1", "B1")
        assert cert.norms == (3, 3)

    def test_conjugated_crossing(self):
        cert = certify_nontrivial(parse_word("s1 r1 S1", 2))
        assert cert.nontrivial
        assert cert.image != (0, 2, 0, 1)
        assert cert.boxes == ("B1", "B2", "B4", "B6")

    def test_word_reducing_to_identity(self):
        cert = certify_nontrivial(parse_word("s1 r1 r1 S1", 2))
        assert cert.trivial

    def test_norms_increase_along_crossings(self):
        rng = random.Random(23)
        for _ in range(300):
            word = random_reduced_word(2, rng.randint(1, 50), rng)
            cert = certify_nontrivial(word)
            assert cert.violation is None
            assert not cert.trivial
            assert cert.image != cert.start
            for (kind, _), before, after in zip(
                cert.reduced.letters, cert.norms, cert.norms[1:]
            ):
                if kind == RHO:
                    assert after == before
                else:
                    assert after > before

    def test_final_box_matches_image(self):
        rng = random.Random(29)
        for _ in range(200):
            word = random_reduced_word(2, rng.randint(1, 40), rng)
            cert = certify_nontrivial(word)
            assert [box.name for box in classify(cert.image)] == [cert.boxes[-1]]

    def test_alternate_start_vectors(self):
        cert = certify_nontrivial(parse_word("r1", 2), start=(0, 5, 0, 2))
        assert cert.nontrivial
        assert cert.image == (0, 2, 0, 5)

    @pytest.mark.parametrize(
        "start", [(0, 2, 0, 2), (1, 2, 0, 1), (0, 0, 0, 1), (0, 2, 0, -1), (0, 2, 1, 3)]
    )
    def test_rejects_bad_start_vectors(self, start):
        with pytest.raises(ValueError):
            certify_nontrivial(parse_word("s1", 2), start=start)

    def test_rejects_other_strand_counts(self):
        with pytest.raises(ValueError):
            certify_nontrivial(parse_word("s1", 3))
