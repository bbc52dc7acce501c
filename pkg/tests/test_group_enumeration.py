import pytest

from domain.algebra.finite_group_core import direct_product, element_orders, is_abelian
from domain.algebra.group_enumeration import enumerate_groups_exhaustive, isomorphism
from domain.algebra.standard_groups import cyclic_group, dihedral_group, symmetric_group
from domain.errors import InvalidTable, OrderCapExceeded


class TestIsomorphism:
    def test_isomorphic_constructions(self, s3):
        f = isomorphism(s3, dihedral_group(3))
        assert f is not None
        H = dihedral_group(3)
        assert all(f[s3.table[a][b]] == H.table[f[a]][f[b]] for a in s3.elements for b in s3.elements)

    def test_nonisomorphic_groups(self, z2xz2, z6, s3):
        assert isomorphism(cyclic_group(4), z2xz2) is None
        assert isomorphism(z6, s3) is None
        assert isomorphism(z6, cyclic_group(5)) is None

    def test_product_of_coprime_cyclics(self):
        assert isomorphism(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)) is not None


class TestExhaustiveEnumeration:
    @pytest.mark.parametrize("order,classes", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 2)])
    def test_class_counts(self, order, classes):
        assert len(enumerate_groups_exhaustive(order)) == classes

    def test_order_six_representatives(self, z6, s3):
        groups = enumerate_groups_exhaustive(6)
        assert sum(is_abelian(G) for G in groups) == 1
        assert any(isomorphism(G, s3) is not None for G in groups)
        assert any(isomorphism(G, z6) is not None for G in groups)

    def test_search_order_does_not_change_classes(self):
        default = enumerate_groups_exhaustive(6)
        permuted = enumerate_groups_exhaustive(6, search_order=[5, 3, 1, 4, 2])
        assert len(default) == len(permuted)
        for G in default:
            assert sum(isomorphism(G, H) is not None for H in permuted) == 1

    def test_representatives_sorted(self):
        groups = enumerate_groups_exhaustive(4)
        assert [sorted(element_orders(G)) for G in groups] == [[1, 2, 2, 2], [1, 2, 4, 4]]

    def test_bad_arguments(self):
        with pytest.raises(OrderCapExceeded):
            enumerate_groups_exhaustive(9)
        with pytest.raises(OrderCapExceeded):
            enumerate_groups_exhaustive(6, cap=5)
        with pytest.raises(InvalidTable):
            enumerate_groups_exhaustive(0)
        with pytest.raises(ValueError):
            enumerate_groups_exhaustive(4, search_order=[1, 1, 2])
