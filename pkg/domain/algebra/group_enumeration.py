# domain/algebra/group_enumeration.py
"""Brute-force enumeration of all groups of a given small order.

Cayley tables with identity 0 are filled cell by cell under Latin-square
constraints, pruning every partial table that already violates
associativity. Complete tables are validated and deduplicated up to
isomorphism.
"""
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from domain.algebra.finite_group_core import element_orders, group_from_table
from domain.entities.finite_group import FiniteGroup
from domain.errors import InvalidTable, OrderCapExceeded

DEFAULT_EXHAUSTIVE_CAP = 8
UNKNOWN = -1


class _TableSearch:
    """Backtracking over the (n-1) x (n-1) non-identity block"""

    def __init__(self, order: int, search_order: Sequence[int]):
        self.n = order
        self.values = list(search_order)
        self.cells = [(a, b) for a in self.values for b in self.values]
        self.table = [[UNKNOWN] * order for _ in range(order)]
        for a in range(order):
            self.table[0][a] = a
            self.table[a][0] = a
        self.row_used = [{a} for a in range(order)]
        self.col_used = [{a} for a in range(order)]
        self.found: List[List[List[int]]] = []

    def run(self) -> List[List[List[int]]]:
        self._fill(0)
        return self.found

    def _fill(self, k: int) -> None:
        if k == len(self.cells):
            self.found.append([row[:] for row in self.table])
            return
        a, b = self.cells[k]
        for c in [0] + self.values:
            if c in self.row_used[a] or c in self.col_used[b]:
                continue
            self.table[a][b] = c
            self.row_used[a].add(c)
            self.col_used[b].add(c)
            if self._consistent(a, b):
                self._fill(k + 1)
            self.row_used[a].discard(c)
            self.col_used[b].discard(c)
            self.table[a][b] = UNKNOWN

    def _consistent(self, a: int, b: int) -> bool:
        """Associativity of every fully known triple that uses cell (a, b)"""
        T, n = self.table, self.n
        c = T[a][b]
        for x in range(n):
            # (a b) x = a (b x)
            cx, bx = T[c][x], T[b][x]
            if cx != UNKNOWN and bx != UNKNOWN:
                abx = T[a][bx]
                if abx != UNKNOWN and abx != cx:
                    return False
            # x (a b) = (x a) b
            xc, xa = T[x][c], T[x][a]
            if xc != UNKNOWN and xa != UNKNOWN:
                xab = T[xa][b]
                if xab != UNKNOWN and xab != xc:
                    return False
        for x in range(n):
            for y in range(n):
                # (x y) b = x (y b) where x y = a
                if T[x][y] == a:
                    yb = T[y][b]
                    if yb != UNKNOWN:
                        right = T[x][yb]
                        if right != UNKNOWN and right != c:
                            return False
                # a (x y) = (a x) y where x y = b
                if T[x][y] == b:
                    ax = T[a][x]
                    if ax != UNKNOWN:
                        left = T[ax][y]
                        if left != UNKNOWN and left != c:
                            return False
        return True


def _generating_set(G: FiniteGroup) -> List[int]:
    """Greedy generators, preferring elements of large order"""
    orders = element_orders(G)
    candidates = sorted(G.elements, key=lambda a: (-orders[a], a))
    reached = {G.identity}
    gens: List[int] = []
    for g in candidates:
        if len(reached) == G.order:
            break
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        while frontier:
            fresh = []
            for m in frontier:
                for h in gens:
                    x = G.table[m][h]
                    if x not in reached:
                        reached.add(x)
                        fresh.append(x)
            frontier = fresh
    return gens


def _spanning_tree(G: FiniteGroup, gens: Sequence[int]) -> List[Tuple[int, int, int]]:
    """(element, parent, generator) with element = parent * generator, in BFS order"""
    seen = {G.identity}
    edges = []
    frontier = [G.identity]
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                x = G.table[m][g]
                if x not in seen:
                    seen.add(x)
                    edges.append((x, m, g))
                    fresh.append(x)
        frontier = fresh
    return edges


def isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[Dict[int, int]]:
    """An isomorphism G -> H as an element map, or None.

    Tries every assignment of generator images with matching element
    orders; each assignment extends along a spanning tree and is accepted
    if it is bijective and respects products with every generator.
    """
    if G.order != H.order or sorted(element_orders(G)) != sorted(element_orders(H)):
        return None
    gens = _generating_set(G)
    edges = _spanning_tree(G, gens)
    g_orders, h_orders = element_orders(G), element_orders(H)
    choices = [[h for h in H.elements if h_orders[h] == g_orders[g]] for g in gens]
    for images in product(*choices):
        image_of = dict(zip(gens, images))
        f = {G.identity: H.identity}
        for x, parent, g in edges:
            f[x] = H.table[f[parent]][image_of[g]]
        if len(set(f.values())) != G.order:
            continue
        if all(f[G.table[a][g]] == H.table[f[a]][image_of[g]] for a in G.elements for g in gens):
            return f
    return None


def enumerate_groups_exhaustive(
    order: int,
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    search_order: Optional[Sequence[int]] = None,
) -> List[FiniteGroup]:
    """One representative per isomorphism class of groups of the given order.

    ``search_order`` permutes the non-identity elements, changing the order
    in which cells are filled and values tried; the classes found do not
    depend on it.
    """
    if order < 1:
        raise InvalidTable(f"order must be positive, got {order}")
    if order > cap:
        raise OrderCapExceeded(order, cap, "enumerate_groups_exhaustive")
    if search_order is None:
        search_order = range(1, order)
    if sorted(search_order) != list(range(1, order)):
        raise ValueError(f"search order must permute 1..{order - 1}")

    representatives: List[FiniteGroup] = []
    for table in _TableSearch(order, search_order).run():
        G = group_from_table(order, table)
        if not any(isomorphism(G, R) is not None for R in representatives):
            representatives.append(G)
    return sorted(representatives, key=lambda G: (sorted(element_orders(G)), G.table))
