import pytest

from errors import (
    AntisymmetryViolation, BadParam, DuplicateElement, NoBottom, PosetSyntaxError,
    TooFewFactors, UnboundedFactor, UnknownName,
)
from services.catalog import boolean_lattice, chain, m_atoms
from services.poset_core import (
    atoms, build_poset, complements_of, covers, direct_product, is_atomistic, is_boolean,
    is_boolean_lattice, is_complemented, is_distributive, is_lattice, is_pseudocomplemented,
    is_ssc, is_uniquely_complemented, is_wssc, lower_cone, parse_poset, poset_to_text,
    poset_weight, pseudocomplement_of, upper_cone, weight,
)


class TestParsing:
    def test_parses_ac4_file(self, data_dir, ac4):
        P = parse_poset((data_dir / "ac4.poset").read_text())
        assert P.elements == ac4.elements
        assert P.up == ac4.up
        assert P.bottom == 0 and P.top == 9

    def test_comments_and_blank_lines_are_ignored(self):
        P = parse_poset("# leading comment\n\nposet v1\nelem 0  # zero\nelem 1\nle 0 1\n")
        assert P.elements == ("0", "1")
        assert P.leq(0, 1)

    def test_empty_file(self):
        with pytest.raises(PosetSyntaxError) as excinfo:
            parse_poset("")
        assert excinfo.value.line == 1

    def test_missing_header(self):
        with pytest.raises(PosetSyntaxError) as excinfo:
            parse_poset("elem a\n")
        assert "line 1" in str(excinfo.value)

    def test_duplicate_element_reports_line(self):
        with pytest.raises(DuplicateElement) as excinfo:
            parse_poset("poset v1\nelem a\nelem a\n")
        assert excinfo.value.line == 3

    def test_unknown_name(self):
        with pytest.raises(UnknownName) as excinfo:
            parse_poset("poset v1\nelem a\nle a b\n")
        assert excinfo.value.line == 3

    def test_unknown_directive(self):
        with pytest.raises(PosetSyntaxError):
            parse_poset("poset v1\nelem a\nge a a\n")

    def test_cycle_violates_antisymmetry(self):
        with pytest.raises(AntisymmetryViolation):
            parse_poset("poset v1\nelem a\nelem b\nelem c\nle a b\nle b c\nle c a\n")

    def test_writer_round_trip(self, ac4):
        again = parse_poset(poset_to_text(ac4, comment="atom coatom 4"))
        assert again.elements == ac4.elements
        assert again.up == ac4.up

    def test_covers_of_chain(self):
        assert covers(chain(3)) == [(0, 1), (1, 2)]

    def test_build_rejects_duplicates(self):
        with pytest.raises(DuplicateElement):
            build_poset(["a", "a"], [])


class TestCones:
    def test_upper_and_lower_cones(self, boolean3):
        # {1} and {2} lie below {1,2} and 1
        assert upper_cone(boolean3, [1, 2]) == (4, 7)
        assert lower_cone(boolean3, [4, 5]) == (0, 1)

    def test_empty_set_cone_is_everything(self, boolean3):
        assert upper_cone(boolean3, []) == tuple(range(8))
        assert lower_cone(boolean3, []) == tuple(range(8))

    def test_bad_id(self, boolean3):
        with pytest.raises(BadParam):
            upper_cone(boolean3, [8])


class TestAtomsAndWeights:
    def test_ac4(self, ac4):
        assert atoms(ac4) == (1, 2, 3, 4)
        assert poset_weight(ac4) == 4
        assert [weight(ac4, x) for x in range(10)] == [0, 1, 1, 1, 1, 3, 3, 3, 3, 4]

    def test_no_bottom(self):
        P = build_poset(["a", "b"], [])
        with pytest.raises(NoBottom):
            atoms(P)


class TestComplements:
    def test_unique_complements_in_ac4(self, ac4):
        for i in range(1, 5):
            assert complements_of(ac4, i) == (i + 4,)
        assert complements_of(ac4, 0) == (9,)
        assert is_uniquely_complemented(ac4)

    def test_m_atoms_has_several_complements(self, triangle_poset):
        assert complements_of(triangle_poset, 1) == (2, 3)
        assert not is_uniquely_complemented(triangle_poset)

    def test_pseudocomplements(self, boolean2, triangle_poset):
        assert pseudocomplement_of(boolean2, 1) == 2
        assert pseudocomplement_of(boolean2, 0) == 3
        assert is_pseudocomplemented(chain(3))
        assert pseudocomplement_of(triangle_poset, 1) is None
        assert not is_pseudocomplemented(triangle_poset)


class TestPredicates:
    def test_distributivity_witness(self, triangle_poset):
        verdict = is_distributive(triangle_poset)
        assert not verdict
        assert verdict.witness == ("a", "b", "c")

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_power_sets_are_boolean_lattices(self, n):
        P = boolean_lattice(n)
        assert is_boolean(P)
        assert is_lattice(P)
        assert is_boolean_lattice(P)
        assert is_atomistic(P)

    def test_ac4_is_boolean_but_not_a_lattice(self, ac4):
        assert is_boolean(ac4)
        verdict = is_lattice(ac4)
        assert not verdict
        assert verdict.reason == "join"
        assert verdict.witness == ("q1", "q2")
        assert not is_boolean_lattice(ac4)

    def test_chain_is_not_complemented(self):
        verdict = is_complemented(chain(3))
        assert not verdict
        assert verdict.witness == ("c1",)
        assert is_boolean(chain(3)).reason == "complementation"

    def test_unbounded_is_not_boolean(self):
        verdict = is_boolean(build_poset(["a", "b"], []))
        assert not verdict
        assert verdict.reason == "bounded"

    def test_semi_complemented(self, ac4, triangle_poset):
        assert is_ssc(ac4) and is_wssc(ac4)
        assert is_ssc(triangle_poset)
        assert not is_ssc(chain(3))
        assert not is_wssc(chain(3))

    def test_atomistic(self, ac4):
        assert is_atomistic(ac4)
        assert not is_atomistic(chain(3))

    def test_m_atoms_is_a_lattice(self):
        assert is_lattice(m_atoms(3))


class TestDirectProduct:
    def test_two_chains(self):
        product = direct_product([chain(2), chain(2)])
        P = product.carrier
        assert P.elements == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
        assert P.leq(1, 3) and not P.leq(1, 2)
        assert product.coord_of(2) == (1, 0)
        assert product.id_of_coords((1, 1)) == 3

    def test_three_chains_size_and_atoms(self):
        product = direct_product([chain(3)] * 3)
        assert product.carrier.size == 27
        assert len(atoms(product.carrier)) == 3

    def test_product_of_2_chains_is_boolean(self):
        assert is_boolean_lattice(direct_product([chain(2)] * 3).carrier)

    def test_too_few_factors(self):
        with pytest.raises(TooFewFactors):
            direct_product([chain(2)])

    def test_unbounded_factor(self):
        with pytest.raises(UnboundedFactor):
            direct_product([chain(2), build_poset(["a", "b"], [])])
