# application/services/catalog_service.py
import logging
import time
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from domain.algebra.finite_group_core import DEFAULT_ORDER_CAP, direct_product, is_cyclic
from domain.algebra.group_enumeration import DEFAULT_EXHAUSTIVE_CAP, enumerate_groups_exhaustive
from domain.algebra.standard_groups import (
    alternating_group,
    cyclic_group,
    cyclic_semidirect_product,
    dicyclic_group,
    dihedral_group,
    primes_up_to,
    symmetric_group,
)
from domain.entities.catalog_entry import CatalogEntry, Provenance
from domain.entities.finite_group import FiniteGroup
from domain.errors import GroupTheoryError, OrderCapExceeded
from domain.services.ICatalogService import ICatalogService
from domain.services.rop_service import ROPService
from domain.utils.result import Result
from infrastructure.monitoring.logging.structured_logger import StructuredLogger

structured_logger = StructuredLogger(__name__)


def _dicyclic_name(n: int) -> str:
    return {2: "Q8", 4: "Q16"}.get(n, f"Dic{n}")


def _product_entry(left: CatalogEntry, right: CatalogEntry) -> CatalogEntry:
    return CatalogEntry(
        name=f"{left.name}x{right.name}",
        group=direct_product(left.group, right.group),
        construction=Provenance("direct_product", factors=(left.name, right.name)),
        factor_groups=(left.group, right.group),
    )


def build_catalog(max_order: int, cap: int = DEFAULT_ORDER_CAP) -> List[CatalogEntry]:
    """Named groups up to max_order, sorted by (order, name).

    Families: cyclic, dihedral, symmetric, alternating, dicyclic, pairwise
    direct products of small members, products of three cyclic groups and
    the nonabelian Z_p x| Z_q.
    """
    if max_order > cap:
        raise OrderCapExceeded(max_order, cap, "build_catalog")
    started = time.perf_counter()
    entries: Dict[str, CatalogEntry] = {}

    def add(entry: CatalogEntry) -> None:
        if entry.name in entries:
            raise ValueError(f"duplicate catalog name {entry.name}")
        entries[entry.name] = entry

    def family(name: str, build: Callable[[int], FiniteGroup], tag: str, n: int, **params: int) -> CatalogEntry:
        entry = CatalogEntry(name, build(n), Provenance(tag, tuple(({"n": n} | params).items())))
        add(entry)
        return entry

    cyclic: Dict[int, CatalogEntry] = {}
    for n in range(1, max_order + 1):
        cyclic[n] = family(f"Z{n}", cyclic_group, "cyclic", n)
    for n in range(3, max_order // 2 + 1):
        family(f"D{n}", dihedral_group, "dihedral", n)
    small: Dict[str, CatalogEntry] = {}
    n = 3
    while factorial(n) <= max_order:
        small[f"S{n}"] = family(f"S{n}", symmetric_group, "symmetric", n)
        n += 1
    n = 4
    while factorial(n) // 2 <= max_order:
        small[f"A{n}"] = family(f"A{n}", alternating_group, "alternating", n)
        n += 1
    for n in range(2, max_order // 4 + 1):
        small[_dicyclic_name(n)] = family(_dicyclic_name(n), dicyclic_group, "dicyclic", n)
    if "D4" in entries:
        small["D4"] = entries["D4"]

    # base order fixes which factor comes first in product names
    base: List[CatalogEntry] = [cyclic[n] for n in range(2, max_order // 2 + 1)]
    base += [small[name] for name in ("S3", "D4", "Q8", "A4") if name in small]
    base = [entry for entry in base if entry.order * 2 <= max_order]
    for i, left in enumerate(base):
        for right in base[i:]:
            if left.order * right.order <= max_order:
                add(_product_entry(left, right))

    for a in range(2, max_order + 1):
        for b in range(a, max_order + 1):
            for c in range(b, max_order + 1):
                if a * b * c > max_order:
                    break
                add(_product_entry(_product_entry(cyclic[a], cyclic[b]), cyclic[c]))

    primes = primes_up_to(max_order)
    for p in primes:
        for q in primes:
            if (p - 1) % q == 0 and p * q <= max_order:
                add(CatalogEntry(
                    name=f"Z{p}:Z{q}",
                    group=cyclic_semidirect_product(p, q),
                    construction=Provenance("semidirect_product", (("p", p), ("q", q)), (f"Z{p}", f"Z{q}")),
                ))

    catalog = sorted(entries.values(), key=lambda e: (e.order, e.name))
    structured_logger.log_performance(
        "build_catalog", (time.perf_counter() - started) * 1000, max_order=max_order, groups=len(catalog)
    )
    return catalog


def cyclic_only(catalog: Sequence[CatalogEntry]) -> List[CatalogEntry]:
    return [entry for entry in catalog if is_cyclic(entry.group)]


def enumerate_entries(
    order: int,
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    search_order: Optional[Sequence[int]] = None,
) -> List[CatalogEntry]:
    """Exhaustive representatives of one order, named E{order}.{k} from k = 1"""
    started = time.perf_counter()
    groups = enumerate_groups_exhaustive(order, cap, search_order)
    structured_logger.log_performance(
        "enumerate_groups_exhaustive", (time.perf_counter() - started) * 1000, order=order, classes=len(groups)
    )
    return [
        CatalogEntry(f"E{order}.{k}", G, Provenance("exhaustive", (("order", order), ("index", k))))
        for k, G in enumerate(groups, start=1)
    ]


class CatalogService(ICatalogService):
    """Named test universes: the constructed catalog and exhaustive enumerations"""

    def __init__(self, order_cap: int = DEFAULT_ORDER_CAP, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP):
        self.order_cap = order_cap
        self.exhaustive_cap = exhaustive_cap
        self.rop_service = ROPService()
        self.logger = logging.getLogger(__name__)
        self._cache: Dict[int, List[CatalogEntry]] = {}

    def build_catalog(self, max_order: int) -> Result[List[CatalogEntry], str]:
        if max_order in self._cache:
            return Result.success(self._cache[max_order])
        result = self.rop_service.try_catch(build_catalog)(max_order, self.order_cap)
        if result.is_success:
            self._cache[max_order] = result.value
        return result

    def get_entry(self, name: str, max_order: Optional[int] = None) -> Result[CatalogEntry, str]:
        return self.build_catalog(max_order or self.order_cap).bind(lambda catalog: self._find(catalog, name))

    def enumerate_groups(
        self, order: int, search_order: Optional[Sequence[int]] = None
    ) -> Result[List[CatalogEntry], str]:
        return self.rop_service.try_catch(enumerate_entries, errors=(GroupTheoryError, ValueError))(
            order, self.exhaustive_cap, search_order
        )

    @staticmethod
    def _find(catalog: Sequence[CatalogEntry], name: str) -> Result[CatalogEntry, str]:
        for entry in catalog:
            if entry.name == name:
                return Result.success(entry)
        return Result.error(f"Unknown catalog group '{name}'")
