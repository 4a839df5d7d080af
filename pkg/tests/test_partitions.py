import pytest
from hypothesis import given, strategies as st

from orbitnorm.errors import CapacityError, ContractError, PartitionParseError
from orbitnorm.partitions import (
    EpsDiagram,
    Partition,
    enumerate_eps_diagrams,
    is_eps_diagram,
    parse_partition,
    partitions_of,
)

partitions = st.lists(st.integers(min_value=1, max_value=12), max_size=10).map(Partition)


class TestParse:
    def test_normalizes_identity(self):
        assert parse_partition("7,2,2") == (7, 2, 2)

    def test_sorts_input(self):
        assert parse_partition("1,6,1") == (6, 1, 1)

    def test_whitespace_and_spaces(self):
        assert parse_partition(" 4 2,2 ") == (4, 2, 2)

    def test_zero_part_rejected(self):
        with pytest.raises(PartitionParseError, match="0"):
            parse_partition("6,0,1")

    def test_non_integer_rejected(self):
        with pytest.raises(PartitionParseError, match="x"):
            parse_partition("3,x")

    def test_empty_text_is_empty_partition(self):
        assert parse_partition("") == ()


class TestDual:
    def test_known(self):
        assert Partition([6, 1, 1]).dual() == (3, 1, 1, 1, 1, 1)
        assert Partition([4, 2, 2]).dual() == (3, 3, 1, 1)

    def test_empty(self):
        assert Partition().dual() == ()

    @given(partitions)
    def test_involution(self, p):
        assert p.dual().dual() == p

    @given(partitions)
    def test_size_preserved(self, p):
        assert p.dual().size == p.size


class TestMultiplicities:
    def test_counting(self):
        assert Partition([7, 2, 2]).multiplicities() == {7: 1, 2: 2}
        assert Partition([1, 1, 1, 1]).multiplicities() == {1: 4}
        assert Partition().multiplicities() == {}

    @given(partitions)
    def test_round_trip(self, p):
        mults = p.multiplicities()
        rebuilt = Partition(part for part, r in mults.items() for _ in range(r))
        assert rebuilt == p
        assert sum(part * r for part, r in mults.items()) == p.size


class TestEpsDiagram:
    def test_orthogonal_examples(self):
        assert is_eps_diagram(Partition([7, 2, 2]), 1)
        assert is_eps_diagram(Partition([2, 2]), 1)
        assert not is_eps_diagram(Partition([2]), 1)

    def test_symplectic_examples(self):
        assert not is_eps_diagram(Partition([3, 1]), -1)
        assert is_eps_diagram(Partition([6, 1, 1]), -1)

    def test_empty_valid_for_both(self):
        assert is_eps_diagram(Partition(), 1)
        assert is_eps_diagram(Partition(), -1)

    def test_bad_eps_rejected(self):
        with pytest.raises(ContractError):
            is_eps_diagram(Partition([1]), 2)

    def test_diagram_constructor_validates(self):
        with pytest.raises(ContractError, match="odd part 3"):
            EpsDiagram(Partition([3, 1]), -1)

    def test_very_even_orthogonal_is_single_diagram(self):
        # all-even partitions do not split under the full orthogonal group
        assert is_eps_diagram(Partition([4, 4, 2, 2]), 1)


class TestEnumerate:
    def test_symplectic_four(self):
        got = [list(d.partition) for d in enumerate_eps_diagrams(4, -1)]
        assert got == [[4], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    def test_zero(self):
        assert [d.partition for d in enumerate_eps_diagrams(0, 1)] == [()]

    def test_orthogonal_two(self):
        assert [list(d.partition) for d in enumerate_eps_diagrams(2, 1)] == [[1, 1]]

    def test_capacity(self):
        with pytest.raises(CapacityError):
            enumerate_eps_diagrams(100, 1)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("ORBIT_MAX_SIZE", "3")
        with pytest.raises(CapacityError):
            enumerate_eps_diagrams(4, -1)

    def test_subset_of_all_partitions(self):
        for n in range(0, 10):
            everything = set(partitions_of(n))
            for eps in (1, -1):
                assert {d.partition for d in enumerate_eps_diagrams(n, eps)} <= everything


class TestEraseFirstColumn:
    def test_examples(self):
        assert Partition([6, 1, 1]).erase_first_column() == (5,)
        assert Partition([1, 1, 1]).erase_first_column() == ()
        assert Partition([4, 2, 2]).erase_first_column() == (3, 1, 1)

    def test_flips_validity(self):
        # exhaustive up to size 20: erasure sends eps-diagrams to (-eps)-diagrams
        for n in range(0, 21):
            for eps in (1, -1):
                for d in enumerate_eps_diagrams(n, eps):
                    erased = d.partition.erase_first_column()
                    assert is_eps_diagram(erased, -eps), d
