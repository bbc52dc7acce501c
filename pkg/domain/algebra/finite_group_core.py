# domain/algebra/finite_group_core.py
"""Concrete finite groups: construction, validation, subgroups, conjugacy.

Every group is held as its full Cayley table. All functions are pure; the
only state is the immutable ``FiniteGroup`` they receive.
"""
import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from domain.entities.finite_group import CosetQuotient, FiniteGroup, SubgroupHandle
from domain.entities.permutation import Permutation
from domain.errors import (
    ClosureTooLarge,
    DegreeMismatch,
    InvalidAction,
    InvalidTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
)

logger = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 64
DEFAULT_FULL_SCAN_MAX = 64
DEFAULT_CLOSURE_CAP = 5040


class CyclicCheck(NamedTuple):
    cyclic: bool
    witness: Optional[int]

    def __bool__(self) -> bool:
        return self.cyclic


# ===== CONSTRUCTION =====

def group_from_table(
    order: int,
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    *,
    full_scan_max: int = DEFAULT_FULL_SCAN_MAX,
) -> FiniteGroup:
    """Validate a Cayley table and build the group.

    Checks run in the order shape, Latin square, identity, inverses,
    associativity; the first failure raises with the offending cell or
    triple. The result is relabelled so that element 0 is the identity.
    """
    if order < 1:
        raise InvalidTable(f"order must be positive, got {order}")
    rows = [list(row) for row in table]
    if len(rows) != order:
        raise InvalidTable(f"table has {len(rows)} rows, expected {order}")
    for i, row in enumerate(rows):
        if len(row) != order:
            raise InvalidTable(f"row {i} has {len(row)} entries, expected {order}", cell=(i, len(row)))
        for j, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidTable(f"cell ({i}, {j}) holds non-integer {value!r}", cell=(i, j))
            if value < 0 or value >= order:
                raise InvalidTable(f"cell ({i}, {j}) = {value} is outside 0..{order - 1}", cell=(i, j))
            row[j] = int(value)
    if labels is not None and len(labels) != order:
        raise InvalidTable(f"{len(labels)} labels for {order} elements")

    _check_latin_square(rows)
    identity = _find_identity(rows)
    _find_inverses(rows, identity)
    _check_associative(rows, identity, full_scan_max)

    if identity != 0:
        logger.debug(f"Relabelling: identity found at {identity}, swapping with 0")
        rows, labels = _swap_with_zero(rows, labels, identity)
        identity = 0

    inverses = _find_inverses(rows, identity)
    return FiniteGroup(
        order=order,
        table=tuple(tuple(row) for row in rows),
        identity=identity,
        inverses=tuple(inverses),
        labels=tuple(str(label) for label in labels) if labels is not None else None,
    )


def _check_latin_square(rows: List[List[int]]) -> None:
    n = len(rows)
    for i, row in enumerate(rows):
        seen: Dict[int, int] = {}
        for j, value in enumerate(row):
            if value in seen:
                raise NotLatinSquare("row", i, value, (i, j))
            seen[value] = j
    for j in range(n):
        seen = {}
        for i in range(n):
            value = rows[i][j]
            if value in seen:
                raise NotLatinSquare("column", j, value, (i, j))
            seen[value] = i


def _find_identity(rows: List[List[int]]) -> int:
    n = len(rows)
    for e in range(n):
        if all(rows[e][a] == a and rows[a][e] == a for a in range(n)):
            return e
    raise NoIdentity(n)


def _find_inverses(rows: List[List[int]], identity: int) -> List[int]:
    inverses = []
    for a, row in enumerate(rows):
        # Latin rows hold the identity exactly once
        b = row.index(identity)
        if rows[b][a] != identity:
            raise NoInverse(a)
        inverses.append(b)
    return inverses


def _check_associative(rows: List[List[int]], identity: int, full_scan_max: int) -> None:
    arr = np.asarray(rows, dtype=np.int64)
    n = arr.shape[0]
    if n <= full_scan_max:
        left = arr[arr]            # left[a, b, c] = (a*b)*c
        right = arr[:, arr]        # right[a, b, c] = a*(b*c)
        bad = np.argwhere(left != right)
        if bad.size:
            a, b, c = (int(v) for v in bad[0])
            raise NotAssociative((a, b, c), int(left[a, b, c]), int(right[a, b, c]))
        return
    # Light's test: (x*y)*s = x*(y*s) for every s of a generating set
    for s in _greedy_generating_set(rows, identity):
        left = arr[arr, s]
        right = arr[:, arr[:, s]]
        bad = np.argwhere(left != right)
        if bad.size:
            a, b = (int(v) for v in bad[0])
            raise NotAssociative((a, b, s), int(left[a, b]), int(right[a, b]))


def _greedy_generating_set(rows: List[List[int]], identity: int) -> List[int]:
    n = len(rows)
    closed = {identity}
    gens: List[int] = []
    while len(closed) < n:
        g = min(set(range(n)) - closed)
        gens.append(g)
        frontier = [g]
        closed.add(g)
        while frontier:
            fresh = []
            for x in frontier:
                for y in list(closed):
                    for z in (rows[x][y], rows[y][x]):
                        if z not in closed:
                            closed.add(z)
                            fresh.append(z)
            frontier = fresh
    return gens


def _swap_with_zero(
    rows: List[List[int]], labels: Optional[Sequence[str]], e: int
) -> Tuple[List[List[int]], Optional[List[str]]]:
    n = len(rows)
    perm = list(range(n))
    perm[0], perm[e] = e, 0
    new_rows = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            new_rows[perm[a]][perm[b]] = perm[rows[a][b]]
    new_labels = None
    if labels is not None:
        new_labels = list(labels)
        new_labels[0], new_labels[e] = labels[e], labels[0]
    return new_rows, new_labels


def group_from_permutations(
    gens: Sequence[Permutation],
    degree: Optional[int] = None,
    *,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> FiniteGroup:
    """Close a set of permutations under composition and tabulate the result"""
    if gens:
        expected = degree if degree is not None else gens[0].degree
        for position, g in enumerate(gens):
            if g.degree != expected:
                raise DegreeMismatch(expected, g.degree, position)
        degree = expected
    elif degree is None:
        degree = 0

    identity = tuple(range(degree))
    elements: List[Tuple[int, ...]] = [identity]
    index: Dict[Tuple[int, ...], int] = {identity: 0}
    cursor = 0
    while cursor < len(elements):
        p = elements[cursor]
        cursor += 1
        for g in gens:
            q = tuple(p[k] for k in g.images)
            if q not in index:
                index[q] = len(elements)
                elements.append(q)
                if len(elements) > closure_cap:
                    raise ClosureTooLarge(closure_cap)

    order = len(elements)
    table = [
        [index[tuple(p[k] for k in q)] for q in elements]
        for p in elements
    ]
    labels = [Permutation(p).to_cycle_string() for p in elements]
    return group_from_table(order, table, labels)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (g, h) stored at index g*|H| + h"""
    m = H.order
    order = G.order * m
    table = [[0] * order for _ in range(order)]
    for g1 in range(G.order):
        for h1 in range(m):
            row = table[g1 * m + h1]
            for g2 in range(G.order):
                base = G.table[g1][g2] * m
                for h2 in range(m):
                    row[g2 * m + h2] = base + H.table[h1][h2]
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.order) for h in range(m)]
    return group_from_table(order, table, labels)


def semidirect_product(
    N: FiniteGroup,
    Q: FiniteGroup,
    q_generator: int,
    automorphism: Permutation,
) -> FiniteGroup:
    """N x| Q for cyclic Q, where q_generator acts on N by ``automorphism``.

    (n1, q1)(n2, q2) = (n1 * phi^k(n2), q1 q2) with q1 = q_generator^k.
    """
    if automorphism.degree != N.order:
        raise InvalidAction(f"automorphism has degree {automorphism.degree}, N has order {N.order}")
    phi = automorphism.images
    for a in range(N.order):
        for b in range(N.order):
            if phi[N.table[a][b]] != N.table[phi[a]][phi[b]]:
                raise InvalidAction(f"not a homomorphism of N at ({a}, {b})")
    q_order = element_order(Q, q_generator)
    if q_order != Q.order:
        raise InvalidAction(f"{q_generator} has order {q_order} and does not generate Q of order {Q.order}")

    phi_powers = [tuple(range(N.order))]
    for _ in range(q_order):
        phi_powers.append(tuple(phi[x] for x in phi_powers[-1]))
    if any(phi_powers[q_order][x] != x for x in range(N.order)):
        raise InvalidAction(f"automorphism order does not divide {q_order}")

    log: Dict[int, int] = {}
    current = Q.identity
    for k in range(q_order):
        log[current] = k
        current = Q.table[current][q_generator]

    m = Q.order
    order = N.order * m
    table = [[0] * order for _ in range(order)]
    for n1 in range(N.order):
        for q1 in range(m):
            twist = phi_powers[log[q1]]
            row = table[n1 * m + q1]
            for n2 in range(N.order):
                head = N.table[n1][twist[n2]] * m
                for q2 in range(m):
                    row[n2 * m + q2] = head + Q.table[q1][q2]
    labels = [f"({N.label(n)},{Q.label(q)})" for n in range(N.order) for q in range(m)]
    return group_from_table(order, table, labels)


# ===== ELEMENTS =====

def multiply(G: FiniteGroup, a: int, b: int) -> int:
    return G.table[a][b]


def power(G: FiniteGroup, a: int, k: int) -> int:
    if k < 0:
        a, k = G.inverses[a], -k
    k %= element_order(G, a)
    result = G.identity
    for _ in range(k):
        result = G.table[result][a]
    return result


def element_order(G: FiniteGroup, a: int) -> int:
    k, x = 1, a
    while x != G.identity:
        x = G.table[x][a]
        k += 1
    return k


def element_orders(G: FiniteGroup) -> List[int]:
    return [element_order(G, a) for a in G.elements]


def conjugate_element(G: FiniteGroup, g: int, a: int) -> int:
    """g * a * g^-1"""
    return G.table[G.table[g][a]][G.inverses[g]]


def is_abelian(G: FiniteGroup) -> bool:
    return bool((G.array == G.array.T).all())


# ===== SUBGROUPS =====

def _handle(G: FiniteGroup, members: Iterable[int]) -> SubgroupHandle:
    return SubgroupHandle(parent=G, members=tuple(sorted(set(members))))


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> SubgroupHandle:
    gens = list(dict.fromkeys(gens))
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        fresh = []
        for m in frontier:
            row = G.table[m]
            for g in gens:
                x = row[g]
                if x not in members:
                    members.add(x)
                    fresh.append(x)
        frontier = fresh
    return _handle(G, members)


def cyclic_subgroup(G: FiniteGroup, a: int) -> SubgroupHandle:
    members = [G.identity]
    x = a
    while x != G.identity:
        members.append(x)
        x = G.table[x][a]
    return _handle(G, members)


def trivial_subgroup(G: FiniteGroup) -> SubgroupHandle:
    return _handle(G, [G.identity])


def whole_group(G: FiniteGroup) -> SubgroupHandle:
    return _handle(G, G.elements)


def is_subgroup(G: FiniteGroup, members: Iterable[int]) -> bool:
    members = set(members)
    if G.identity not in members:
        return False
    return all(G.table[a][G.inverses[b]] in members for a in members for b in members)


def subgroup_from_members(G: FiniteGroup, members: Iterable[int]) -> SubgroupHandle:
    members = set(members)
    if not is_subgroup(G, members):
        raise InvalidTable(f"{sorted(members)} is not closed under the group operation")
    return _handle(G, members)


def conjugacy_classes(G: FiniteGroup) -> List[Tuple[int, ...]]:
    """Classes ordered by their smallest element"""
    assigned = [False] * G.order
    classes = []
    for a in G.elements:
        if assigned[a]:
            continue
        orbit = {conjugate_element(G, g, a) for g in G.elements}
        for x in orbit:
            assigned[x] = True
        classes.append(tuple(sorted(orbit)))
    return classes


def center(G: FiniteGroup) -> SubgroupHandle:
    return _handle(
        G,
        (z for z in G.elements if all(G.table[z][a] == G.table[a][z] for a in G.elements)),
    )


def normal_closure(G: FiniteGroup, seed: Iterable[int]) -> SubgroupHandle:
    # a conjugation-closed generating set generates a normal subgroup
    closed = {conjugate_element(G, g, s) for s in set(seed) for g in G.elements}
    return subgroup_generated(G, sorted(closed))


def commutator_subgroup(G: FiniteGroup) -> SubgroupHandle:
    commutators = {
        G.table[G.table[a][b]][G.table[G.inverses[a]][G.inverses[b]]]
        for a in G.elements
        for b in G.elements
    }
    return normal_closure(G, commutators)


def all_subgroups(G: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> List[SubgroupHandle]:
    """Every subgroup once, sorted by (size, members).

    Seeds with the cyclic subgroups, then joins each new subgroup with each
    cyclic subgroup until nothing new appears.
    """
    if G.order > cap:
        raise OrderCapExceeded(G.order, cap, "all_subgroups")
    found: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    cyclic: List[Tuple[SubgroupHandle, int]] = []
    for a in G.elements:
        H = cyclic_subgroup(G, a)
        if H.members not in found:
            found[H.members] = (a,)
            cyclic.append((H, a))

    frontier = [(H, (a,)) for H, a in cyclic]
    while frontier:
        fresh = []
        for H, gens in frontier:
            for _, c in cyclic:
                if c in H:
                    continue
                J = subgroup_generated(G, gens + (c,))
                if J.members not in found:
                    found[J.members] = gens + (c,)
                    fresh.append((J, gens + (c,)))
        frontier = fresh
    return sorted((_handle(G, members) for members in found), key=lambda H: (H.size, H.members))


def normality_violation(G: FiniteGroup, H: SubgroupHandle) -> Optional[Tuple[int, int]]:
    """First (g, h) with g h g^-1 outside H, or None when H is normal"""
    for g in G.elements:
        for h in H.members:
            if conjugate_element(G, g, h) not in H:
                return g, h
    return None


def is_normal(G: FiniteGroup, H: SubgroupHandle) -> bool:
    return normality_violation(G, H) is None


def require_normal(G: FiniteGroup, N: SubgroupHandle) -> None:
    violation = normality_violation(G, N)
    if violation is not None:
        raise NotNormal(N.members, *violation)


def normal_subgroups(G: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> List[SubgroupHandle]:
    return [H for H in all_subgroups(G, cap) if is_normal(G, H)]


def conjugate_subgroup(G: FiniteGroup, g: int, H: SubgroupHandle) -> SubgroupHandle:
    return _handle(G, (conjugate_element(G, g, h) for h in H.members))


def conjugates_of_subgroup(G: FiniteGroup, H: SubgroupHandle) -> List[SubgroupHandle]:
    """Distinct conjugates gHg^-1 in order of first appearance"""
    seen: Dict[Tuple[int, ...], SubgroupHandle] = {}
    for g in G.elements:
        K = conjugate_subgroup(G, g, H)
        seen.setdefault(K.members, K)
    return list(seen.values())


def normalizer(G: FiniteGroup, H: SubgroupHandle) -> SubgroupHandle:
    return _handle(G, (g for g in G.elements if conjugate_subgroup(G, g, H).members == H.members))


def proper_normal_witness(G: FiniteGroup) -> Optional[SubgroupHandle]:
    """A nontrivial proper normal subgroup if one exists.

    Any such subgroup contains the normal closure of one of its elements,
    so scanning single-element normal closures is enough.
    """
    for a in G.elements:
        if a == G.identity:
            continue
        N = normal_closure(G, [a])
        if not N.is_whole():
            return N
    return None


def is_simple(G: FiniteGroup) -> bool:
    return G.order > 1 and proper_normal_witness(G) is None


# ===== QUOTIENTS AND CYCLICITY =====

def quotient(G: FiniteGroup, N: SubgroupHandle) -> CosetQuotient:
    require_normal(G, N)
    projection = [-1] * G.order
    representatives: List[int] = []
    for a in G.elements:
        if projection[a] != -1:
            continue
        index = len(representatives)
        representatives.append(a)
        for m in N.members:
            projection[G.table[a][m]] = index
    table = [
        [projection[G.table[r][s]] for s in representatives]
        for r in representatives
    ]
    labels = [f"{G.label(r)}N" for r in representatives]
    Q = group_from_table(len(representatives), table, labels)
    return CosetQuotient(
        group=Q,
        projection=tuple(projection),
        kernel=N,
        representatives=tuple(representatives),
    )


def is_cyclic(G: FiniteGroup) -> CyclicCheck:
    for a in G.elements:
        if element_order(G, a) == G.order:
            return CyclicCheck(True, a)
    return CyclicCheck(False, None)


def subgroup_is_cyclic(H: SubgroupHandle) -> bool:
    return any(element_order(H.parent, m) == H.size for m in H.members)
