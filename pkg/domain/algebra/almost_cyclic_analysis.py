# domain/algebra/almost_cyclic_analysis.py
"""Conjugate generators and finite checks of the almost-cyclic lemmas.

An element x of G is a conjugate generator when every element of G is
conjugate to some power of x; G is almost cyclic when it has one. Each
``check_*`` function evaluates one statement on one concrete group and
returns a LemmaCheckResult. Instance-level checks (one subgroup, one
generator) raise on violated preconditions; the ``sweep_*`` helpers fold
all instances of a group into a single result.
"""
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from domain.algebra.finite_group_core import (
    DEFAULT_ORDER_CAP,
    all_subgroups,
    center,
    conjugacy_classes,
    conjugate_element,
    conjugate_subgroup,
    conjugates_of_subgroup,
    cyclic_subgroup,
    element_order,
    is_abelian,
    is_cyclic,
    is_normal,
    normal_closure,
    power,
    proper_normal_witness,
    quotient,
    require_normal,
    subgroup_is_cyclic,
)
from domain.entities.finite_group import FiniteGroup, SubgroupHandle
from domain.entities.lemma_check import ConjGenCertificate, LemmaCheckResult, LemmaId
from domain.errors import NotConjugateGenerator, QuotientNotCyclic, TrivialSubgroup


def _describe(G: FiniteGroup, name: Optional[str]) -> str:
    return name if name is not None else f"group of order {G.order}"


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


# ===== DECISION PROCEDURES =====

def _power_index(G: FiniteGroup, x: int) -> Dict[int, int]:
    """x^n -> n for n in 0..ord(x)-1"""
    index = {}
    current, n = G.identity, 0
    while current not in index:
        index[current] = n
        current = G.table[current][x]
        n += 1
    return index


def _search_witness(
    G: FiniteGroup, y: int, powers: Dict[int, int], conjugators: Sequence[int]
) -> Optional[Tuple[int, int]]:
    # (a, n) in lexicographic order; n is unique once a is fixed
    for a in conjugators:
        n = powers.get(conjugate_element(G, a, y))
        if n is not None:
            return a, n
    return None


def _first_uncovered(G: FiniteGroup, x: int) -> Optional[int]:
    powers = _power_index(G, x)
    for y in G.elements:
        if _search_witness(G, y, powers, G.elements) is None:
            return y
    return None


def is_conjugate_generator(G: FiniteGroup, x: int) -> Optional[ConjGenCertificate]:
    """Certificate that every y is conjugate to a power of x, or None"""
    powers = _power_index(G, x)
    witnesses = []
    for y in G.elements:
        found = _search_witness(G, y, powers, G.elements)
        if found is None:
            return None
        witnesses.append(found)
    return ConjGenCertificate(generator=x, witnesses=tuple(witnesses))


def conjugate_generators(G: FiniteGroup) -> List[int]:
    return [x for x in G.elements if _first_uncovered(G, x) is None]


def is_almost_cyclic(G: FiniteGroup) -> bool:
    return any(_first_uncovered(G, x) is None for x in G.elements)


def require_conjugate_generator(G: FiniteGroup, x: int) -> None:
    missed = _first_uncovered(G, x)
    if missed is not None:
        raise NotConjugateGenerator(x, missed)


def least_power_in(G: FiniteGroup, x: int, N: SubgroupHandle) -> int:
    """Least m >= 1 with x^m in N"""
    m, current = 1, x
    while current not in N:
        current = G.table[current][x]
        m += 1
    return m


# ===== RESULT HELPERS =====

def _passed(lemma: LemmaId, descriptor: str, details: str, **witness: Any) -> LemmaCheckResult:
    return LemmaCheckResult(lemma, descriptor, True, details=details, witness=witness or None)


def _vacuous(lemma: LemmaId, descriptor: str, details: str) -> LemmaCheckResult:
    return LemmaCheckResult(lemma, descriptor, True, vacuous=True, details=details)


def _failed(lemma: LemmaId, descriptor: str, details: str, **counterexample: Any) -> LemmaCheckResult:
    return LemmaCheckResult(lemma, descriptor, False, counterexample=counterexample, details=details)


def _no_generator(lemma: LemmaId, descriptor: str) -> LemmaCheckResult:
    return _vacuous(lemma, descriptor, "no conjugate generator")


def fold_results(lemma: LemmaId, descriptor: str, results: Sequence[LemmaCheckResult]) -> LemmaCheckResult:
    """One result per group: the first failure, else a pass unless every instance was vacuous"""
    for result in results:
        if not result.passed:
            return result.for_group(descriptor)
    substantive = [r for r in results if not r.vacuous]
    if not substantive:
        return _vacuous(lemma, descriptor, "no instance satisfies the hypothesis")
    return _passed(lemma, descriptor, f"{len(substantive)} instances verified", instances=len(substantive))


# ===== GROUP-LEVEL CHECKS =====

def check_center_lemma(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    """Z(G) lies in <x> for every conjugate generator x"""
    descriptor = _describe(G, name)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.CENTER, descriptor)
    Z = center(G)
    for x in gens:
        X = cyclic_subgroup(G, x)
        outside = [z for z in Z.members if z not in X]
        if outside:
            return _failed(LemmaId.CENTER, descriptor, "central element outside <x>",
                           generator=x, central_element=outside[0])
    return _passed(LemmaId.CENTER, descriptor, f"|Z(G)| = {Z.size} inside <x> for {len(gens)} generators",
                   center_order=Z.size)


def check_union_of_conjugates(
    G: FiniteGroup,
    name: Optional[str] = None,
    cap: int = DEFAULT_ORDER_CAP,
    subgroups: Optional[Sequence[SubgroupHandle]] = None,
) -> LemmaCheckResult:
    """The conjugates of a proper subgroup never cover G.

    With n distinct conjugates the union has at most n|H| - (n - 1) elements.
    """
    descriptor = _describe(G, name)
    if subgroups is None:
        subgroups = all_subgroups(G, cap)
    checked = 0
    for H in subgroups:
        if not H.is_proper():
            continue
        conjugates = conjugates_of_subgroup(G, H)
        n = len(conjugates)
        union = set()
        for K in conjugates:
            union.update(K.members)
        bound = n * H.size - (n - 1)
        if len(union) == G.order or len(union) > bound:
            return _failed(LemmaId.UNION_OF_CONJUGATES, descriptor, "conjugates of a proper subgroup too large",
                           subgroup=list(H.members), conjugates=n, union_size=len(union), bound=bound)
        checked += 1
    if checked == 0:
        return _vacuous(LemmaId.UNION_OF_CONJUGATES, descriptor, "no proper subgroup")
    return _passed(LemmaId.UNION_OF_CONJUGATES, descriptor, f"{checked} proper subgroups", subgroups=checked)


def check_finite_ac_iff_cyclic(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    descriptor = _describe(G, name)
    gens = conjugate_generators(G)
    cyclic = is_cyclic(G)
    if bool(gens) != cyclic.cyclic:
        return _failed(LemmaId.FINITE_AC_IFF_CYCLIC, descriptor, "almost cyclic and cyclic disagree",
                       almost_cyclic=bool(gens), cyclic=cyclic.cyclic,
                       conjugate_generator=gens[0] if gens else None, cyclic_witness=cyclic.witness)
    return _passed(LemmaId.FINITE_AC_IFF_CYCLIC, descriptor, f"almost cyclic = cyclic = {cyclic.cyclic}",
                   cyclic=cyclic.cyclic, cyclic_witness=cyclic.witness)


def check_prime_order_conjgen(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    """A conjugate generator of prime order p forces |G| = p with no proper normal subgroup"""
    descriptor = _describe(G, name)
    prime_gens = [x for x in conjugate_generators(G) if _is_prime(element_order(G, x))]
    if not prime_gens:
        return _vacuous(LemmaId.PRIME_ORDER_CONJGEN, descriptor, "no conjugate generator of prime order")
    witness = proper_normal_witness(G)
    for x in prime_gens:
        p = element_order(G, x)
        if witness is not None:
            return _failed(LemmaId.PRIME_ORDER_CONJGEN, descriptor, "proper normal subgroup exists",
                           generator=x, normal_subgroup=list(witness.members))
        if G.order != p:
            return _failed(LemmaId.PRIME_ORDER_CONJGEN, descriptor, "order differs from the generator's order",
                           generator=x, prime=p, order=G.order)
    return _passed(LemmaId.PRIME_ORDER_CONJGEN, descriptor, f"simple of prime order {G.order}", prime=G.order)


def check_exponent_property(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    """ord(x) is an exponent of G for every conjugate generator x"""
    descriptor = _describe(G, name)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.EXPONENT, descriptor)
    for x in gens:
        n = element_order(G, x)
        for y in G.elements:
            if power(G, y, n) != G.identity:
                return _failed(LemmaId.EXPONENT, descriptor, "y^n is not the identity",
                               generator=x, exponent=n, element=y)
    return _passed(LemmaId.EXPONENT, descriptor, f"exponent {element_order(G, gens[0])}",
                   exponent=element_order(G, gens[0]))


def check_abelian_corollary(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    """An abelian almost cyclic group is cyclic"""
    descriptor = _describe(G, name)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.ABELIAN_COROLLARY, descriptor)
    if not is_abelian(G):
        return _vacuous(LemmaId.ABELIAN_COROLLARY, descriptor, "not abelian")
    cyclic = is_cyclic(G)
    if not cyclic:
        return _failed(LemmaId.ABELIAN_COROLLARY, descriptor, "abelian almost cyclic group is not cyclic",
                       conjugate_generator=gens[0])
    return _passed(LemmaId.ABELIAN_COROLLARY, descriptor, "cyclic", cyclic_witness=cyclic.witness)


def check_central_subgroup_cyclic(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    descriptor = _describe(G, name)
    if not is_almost_cyclic(G):
        return _no_generator(LemmaId.CENTRAL_SUBGROUP_CYCLIC, descriptor)
    Z = center(G)
    if not subgroup_is_cyclic(Z):
        return _failed(LemmaId.CENTRAL_SUBGROUP_CYCLIC, descriptor, "center is not cyclic",
                       center=list(Z.members))
    return _passed(LemmaId.CENTRAL_SUBGROUP_CYCLIC, descriptor, f"cyclic center of order {Z.size}",
                   center_order=Z.size)


def check_normal_closure_generates(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    """The normal closure of a conjugate generator is all of G"""
    descriptor = _describe(G, name)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.NORMAL_CLOSURE, descriptor)
    for x in gens:
        closure = normal_closure(G, [x])
        if not closure.is_whole():
            return _failed(LemmaId.NORMAL_CLOSURE, descriptor, "normal closure is proper",
                           generator=x, closure=list(closure.members))
    return _passed(LemmaId.NORMAL_CLOSURE, descriptor, f"{len(gens)} generators", generators=len(gens))


def check_class_count_bound(G: FiniteGroup, name: Optional[str] = None) -> LemmaCheckResult:
    """Every conjugacy class meets <x>, so there are at most ord(x) classes"""
    descriptor = _describe(G, name)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.CLASS_COUNT_BOUND, descriptor)
    classes = len(conjugacy_classes(G))
    for x in gens:
        n = element_order(G, x)
        if classes > n:
            return _failed(LemmaId.CLASS_COUNT_BOUND, descriptor, "more classes than powers of x",
                           generator=x, classes=classes, bound=n)
    return _passed(LemmaId.CLASS_COUNT_BOUND, descriptor, f"{classes} classes", classes=classes)


def check_product_factors(
    P: FiniteGroup, G: FiniteGroup, H: FiniteGroup, name: Optional[str] = None
) -> LemmaCheckResult:
    """If G x H is almost cyclic then so are G and H"""
    descriptor = _describe(P, name)
    if not is_almost_cyclic(P):
        return _no_generator(LemmaId.PRODUCT_FACTORS, descriptor)
    for side, factor in (("left", G), ("right", H)):
        if not is_almost_cyclic(factor):
            return _failed(LemmaId.PRODUCT_FACTORS, descriptor, "factor of an almost cyclic product is not",
                           factor=side, factor_order=factor.order)
    return _passed(LemmaId.PRODUCT_FACTORS, descriptor, "both factors almost cyclic")


# ===== INSTANCE-LEVEL CHECKS =====

def check_quotient_conjgen(G: FiniteGroup, N: SubgroupHandle, name: Optional[str] = None) -> LemmaCheckResult:
    """xN is a conjugate generator of G/N whenever x is one of G"""
    descriptor = _describe(G, name)
    require_normal(G, N)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.QUOTIENT_CONJGEN, descriptor)
    Q = quotient(G, N)
    for x in gens:
        image = Q.project(x)
        if is_conjugate_generator(Q.group, image) is None:
            return _failed(LemmaId.QUOTIENT_CONJGEN, descriptor, "image of x is not a conjugate generator",
                           generator=x, kernel=list(N.members), coset=image)
    return _passed(LemmaId.QUOTIENT_CONJGEN, descriptor, f"quotient of order {Q.group.order}",
                   kernel=list(N.members), quotient_order=Q.group.order)


def check_conjugate_intersection(
    G: FiniteGroup, H: SubgroupHandle, x: int, name: Optional[str] = None
) -> LemmaCheckResult:
    """Some conjugate gHg^-1 meets <x> nontrivially"""
    descriptor = _describe(G, name)
    if H.is_trivial():
        raise TrivialSubgroup("check_conjugate_intersection")
    require_conjugate_generator(G, x)
    X = cyclic_subgroup(G, x)
    for g in G.elements:
        meet = [k for k in conjugate_subgroup(G, g, H).members if k in X and k != G.identity]
        if meet:
            return _passed(LemmaId.CONJUGATE_INTERSECTION, descriptor, f"conjugator {g}",
                           conjugator=g, element=meet[0])
    return _failed(LemmaId.CONJUGATE_INTERSECTION, descriptor, "every conjugate meets <x> trivially",
                   subgroup=list(H.members), generator=x)


def check_normal_intersection(
    G: FiniteGroup, N: SubgroupHandle, x: int, name: Optional[str] = None
) -> LemmaCheckResult:
    """N meets <x> in exactly <x^m>, m least with x^m in N"""
    descriptor = _describe(G, name)
    require_normal(G, N)
    if N.is_trivial():
        raise TrivialSubgroup("check_normal_intersection")
    require_conjugate_generator(G, x)
    m = least_power_in(G, x, N)
    meet = tuple(sorted(set(N.members) & cyclic_subgroup(G, x).member_set))
    expected = cyclic_subgroup(G, power(G, x, m)).members
    if meet != expected:
        return _failed(LemmaId.NORMAL_INTERSECTION, descriptor, "intersection differs from <x^m>",
                       normal_subgroup=list(N.members), generator=x, m=m,
                       intersection=list(meet), expected=list(expected))
    return _passed(LemmaId.NORMAL_INTERSECTION, descriptor, f"m = {m}", m=m)


def check_cyclic_quotient_lemmas(
    G: FiniteGroup, N: SubgroupHandle, name: Optional[str] = None
) -> LemmaCheckResult:
    """For a cyclic quotient G/N and conjugate generator x, with m least such that x^m lies in N:

    some power of x projects onto a generator of G/N; x^m is a conjugate
    generator of N using conjugators from N alone; m is an exponent of G/N.
    """
    descriptor = _describe(G, name)
    require_normal(G, N)
    if N.is_trivial():
        raise TrivialSubgroup("check_cyclic_quotient_lemmas")
    Q = quotient(G, N)
    if not is_cyclic(Q.group):
        raise QuotientNotCyclic(Q.group.order)
    gens = conjugate_generators(G)
    if not gens:
        return _no_generator(LemmaId.CYCLIC_QUOTIENT, descriptor)

    kernel = list(N.members)
    least_powers = {}
    for x in gens:
        k = next(
            (k for k in range(1, element_order(G, x) + 1)
             if element_order(Q.group, Q.project(power(G, x, k))) == Q.group.order),
            None,
        )
        if k is None:
            return _failed(LemmaId.CYCLIC_QUOTIENT, descriptor, "no power of x generates G/N",
                           generator=x, kernel=kernel)

        m = least_power_in(G, x, N)
        xm = power(G, x, m)
        least_powers[x] = m
        powers = _power_index(G, xm)
        for y in N.members:
            if _search_witness(G, y, powers, N.members) is None:
                return _failed(LemmaId.CYCLIC_QUOTIENT, descriptor, "no conjugator inside N",
                               generator=x, kernel=kernel, m=m, element=y)

        for g in G.elements:
            if power(Q.group, Q.project(g), m) != Q.group.identity:
                return _failed(LemmaId.CYCLIC_QUOTIENT, descriptor, "m does not annihilate G/N",
                               generator=x, kernel=kernel, m=m, element=g)
    return _passed(LemmaId.CYCLIC_QUOTIENT, descriptor, f"quotient of order {Q.group.order}",
                   kernel=kernel, quotient_order=Q.group.order, least_powers=least_powers)


# ===== SWEEP =====

def sweep_group(
    G: FiniteGroup,
    name: str,
    factors: Optional[Tuple[FiniteGroup, FiniteGroup]] = None,
    cap: int = DEFAULT_ORDER_CAP,
) -> List[LemmaCheckResult]:
    """Every lemma on one group, one folded result per lemma, sorted by lemma id"""
    subgroups = all_subgroups(G, cap)
    normals = [N for N in subgroups if is_normal(G, N)]
    gens = conjugate_generators(G)

    def quotient_instances() -> LemmaCheckResult:
        return fold_results(LemmaId.QUOTIENT_CONJGEN, name,
                            [check_quotient_conjgen(G, N, name) for N in normals])

    def intersection_instances() -> LemmaCheckResult:
        return fold_results(LemmaId.CONJUGATE_INTERSECTION, name, [
            check_conjugate_intersection(G, H, x, name)
            for H in subgroups if not H.is_trivial()
            for x in gens
        ])

    def normal_instances() -> LemmaCheckResult:
        return fold_results(LemmaId.NORMAL_INTERSECTION, name, [
            check_normal_intersection(G, N, x, name)
            for N in normals if not N.is_trivial()
            for x in gens
        ])

    def cyclic_quotient_instances() -> LemmaCheckResult:
        results = []
        for N in normals:
            if N.is_trivial() or not is_cyclic(quotient(G, N).group):
                continue
            results.append(check_cyclic_quotient_lemmas(G, N, name))
        return fold_results(LemmaId.CYCLIC_QUOTIENT, name, results)

    def product_instance() -> LemmaCheckResult:
        if factors is None:
            return _vacuous(LemmaId.PRODUCT_FACTORS, name, "not a direct product")
        return check_product_factors(G, factors[0], factors[1], name)

    checks: Dict[LemmaId, Callable[[], LemmaCheckResult]] = {
        LemmaId.CENTER: lambda: check_center_lemma(G, name),
        LemmaId.UNION_OF_CONJUGATES: lambda: check_union_of_conjugates(G, name, cap, subgroups),
        LemmaId.FINITE_AC_IFF_CYCLIC: lambda: check_finite_ac_iff_cyclic(G, name),
        LemmaId.QUOTIENT_CONJGEN: quotient_instances,
        LemmaId.CONJUGATE_INTERSECTION: intersection_instances,
        LemmaId.NORMAL_INTERSECTION: normal_instances,
        LemmaId.CYCLIC_QUOTIENT: cyclic_quotient_instances,
        LemmaId.PRIME_ORDER_CONJGEN: lambda: check_prime_order_conjgen(G, name),
        LemmaId.EXPONENT: lambda: check_exponent_property(G, name),
        LemmaId.ABELIAN_COROLLARY: lambda: check_abelian_corollary(G, name),
        LemmaId.CENTRAL_SUBGROUP_CYCLIC: lambda: check_central_subgroup_cyclic(G, name),
        LemmaId.NORMAL_CLOSURE: lambda: check_normal_closure_generates(G, name),
        LemmaId.CLASS_COUNT_BOUND: lambda: check_class_count_bound(G, name),
        LemmaId.PRODUCT_FACTORS: product_instance,
    }
    return [checks[lemma]() for lemma in sorted(checks, key=lambda lemma: lemma.value)]
