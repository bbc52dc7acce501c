import pytest

from domain.algebra.finite_group_core import element_orders, is_abelian, is_cyclic
from domain.algebra.standard_groups import (
    alternating_group,
    cyclic_group,
    cyclic_semidirect_product,
    dicyclic_group,
    dihedral_group,
    multiplicative_order,
    primes_up_to,
    symmetric_group,
    unit_of_order,
)
from domain.errors import InvalidAction, InvalidTable


class TestFamilies:
    def test_cyclic(self):
        G = cyclic_group(5)
        assert G.labels == ("e", "g", "g^2", "g^3", "g^4")
        assert is_cyclic(G).witness == 1

    def test_dihedral_has_n_plus_one_involutions(self):
        for n in (3, 4, 5, 6):
            D = dihedral_group(n)
            assert D.order == 2 * n
            involutions = element_orders(D).count(2)
            assert involutions == (n if n % 2 else n + 1)

    def test_quaternion_groups(self):
        Q8 = dicyclic_group(2)
        assert sorted(element_orders(Q8)) == [1, 2, 4, 4, 4, 4, 4, 4]
        Q16 = dicyclic_group(4)
        assert Q16.order == 16
        assert element_orders(Q16).count(2) == 1
        assert max(element_orders(Q16)) == 8

    def test_dicyclic_of_order_12(self):
        G = dicyclic_group(3)
        assert G.order == 12
        assert not is_abelian(G)
        assert element_orders(G).count(2) == 1

    def test_symmetric_and_alternating_orders(self):
        assert [symmetric_group(n).order for n in (1, 2, 3, 4)] == [1, 2, 6, 24]
        assert [alternating_group(n).order for n in (3, 4, 5)] == [3, 12, 60]

    def test_nonpositive_parameters(self):
        for build in (cyclic_group, dihedral_group, dicyclic_group):
            with pytest.raises(InvalidTable):
                build(0)


class TestSemidirectHelpers:
    def test_units(self):
        assert multiplicative_order(2, 7) == 3
        assert unit_of_order(7, 3) == 2
        assert unit_of_order(5, 2) == 4

    def test_missing_unit(self):
        with pytest.raises(InvalidAction):
            unit_of_order(7, 4)

    def test_z5_by_z2_is_dihedral_of_order_10(self):
        G = cyclic_semidirect_product(5, 2)
        assert sorted(element_orders(G)) == sorted(element_orders(dihedral_group(5)))

    def test_primes(self):
        assert primes_up_to(12) == [2, 3, 5, 7, 11]
        assert primes_up_to(1) == []
