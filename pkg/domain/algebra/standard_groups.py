# domain/algebra/standard_groups.py
"""Named families of small groups, all built through the validating constructors"""
from math import gcd
from typing import List

from domain.algebra.finite_group_core import (
    group_from_permutations,
    group_from_table,
    semidirect_product,
)
from domain.entities.finite_group import FiniteGroup
from domain.entities.permutation import Permutation
from domain.errors import InvalidAction, InvalidTable


def _power_label(symbol: str, k: int) -> str:
    if k == 0:
        return "e"
    if k == 1:
        return symbol
    return f"{symbol}^{k}"


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with element k standing for g^k"""
    if n < 1:
        raise InvalidTable(f"cyclic group needs n >= 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(n, table, [_power_label("g", k) for k in range(n)])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; r^i s^j sits at index i + n*j"""
    if n < 1:
        raise InvalidTable(f"dihedral group needs n >= 1, got {n}")
    order = 2 * n
    table = [[0] * order for _ in range(order)]
    for i in range(n):
        for j in range(2):
            for k in range(n):
                for l in range(2):
                    rot = (i + (k if j == 0 else -k)) % n
                    table[i + n * j][k + n * l] = rot + n * ((j + l) % 2)
    labels = []
    for j in range(2):
        for i in range(n):
            r = _power_label("r", i)
            labels.append(r if j == 0 else ("s" if i == 0 else f"{r}s"))
    return group_from_table(order, table, labels)


def dicyclic_group(n: int) -> FiniteGroup:
    """Dic_n of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>.

    n = 2 gives the quaternion group Q8; powers of two give the
    generalized quaternion groups.
    """
    if n < 1:
        raise InvalidTable(f"dicyclic group needs n >= 1, got {n}")
    m = 2 * n
    order = 2 * m
    table = [[0] * order for _ in range(order)]
    for i in range(m):
        for j in range(2):
            for k in range(m):
                for l in range(2):
                    exp = i + (k if j == 0 else -k)
                    if j == 1 and l == 1:
                        exp += n
                    table[i + m * j][k + m * l] = exp % m + m * ((j + l) % 2)
    labels = []
    for j in range(2):
        for i in range(m):
            a = _power_label("a", i)
            labels.append(a if j == 0 else ("x" if i == 0 else f"{a}x"))
    return group_from_table(order, table, labels)


def symmetric_group(n: int) -> FiniteGroup:
    if n < 2:
        return group_from_permutations([], degree=max(n, 0))
    transposition = Permutation.from_cycles([(0, 1)], n)
    long_cycle = Permutation.from_cycles([tuple(range(n))], n)
    return group_from_permutations([transposition, long_cycle])


def alternating_group(n: int) -> FiniteGroup:
    if n < 3:
        return group_from_permutations([], degree=max(n, 0))
    # the 3-cycles (0 1 k) generate A_n
    gens = [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)]
    return group_from_permutations(gens)


def multiplicative_order(r: int, p: int) -> int:
    k, x = 1, r % p
    while x != 1 % p:
        x = (x * r) % p
        k += 1
    return k


def unit_of_order(p: int, q: int) -> int:
    """Smallest unit r mod p of multiplicative order exactly q"""
    for r in range(2, p):
        if gcd(r, p) == 1 and multiplicative_order(r, p) == q:
            return r
    raise InvalidAction(f"no unit of order {q} modulo {p}")


def cyclic_semidirect_product(p: int, q: int) -> FiniteGroup:
    """Z_p x| Z_q where the generator of Z_q acts as x -> r*x"""
    r = unit_of_order(p, q)
    automorphism = Permutation(tuple((r * x) % p for x in range(p)))
    return semidirect_product(cyclic_group(p), cyclic_group(q), 1, automorphism)


def primes_up_to(n: int) -> List[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]
