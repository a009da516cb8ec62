"""The built-in catalog: every family member up to an order bound, plus curated products."""
from math import factorial
from typing import List, Optional
import logging

from sympy import isprime

from app.catalog.spec_parser import GroupSpec, parse_group_spec
from app.config import Settings
from app.domain.group_table import GroupTable

logger = logging.getLogger(__name__)

# mostly solvable centerless products, for the conjecture scanners
CURATED_PRODUCTS = (
    "product:sym:3,cyclic:2",
    "product:sym:3,cyclic:3",
    "product:dicyclic:2,cyclic:2",
    "product:dihedral:4,cyclic:2",
    "product:dihedral:4,cyclic:3",
    "product:alt:4,cyclic:2",
    "product:alt:4,cyclic:3",
    "product:sym:3,sym:3",
    "product:sym:4,cyclic:2",
    "product:dihedral:3,dihedral:5",
    "product:sym:3,alt:4",
    "product:affine:5,sym:3",
    "product:sym:4,sym:3",
    "product:affine:7,sym:3",
    "product:sym:3,heisenberg:3",
)


def spec_order(spec: GroupSpec) -> int:
    """Order of the group a family spec builds, without building it."""
    family, params = spec.family, spec.params
    if family == "product":
        return spec_order(spec.children[0]) * spec_order(spec.children[1])
    if family == "cyclic":
        return params[0]
    if family == "dihedral":
        return 2 * params[0]
    if family == "dicyclic":
        return 4 * params[0]
    if family == "sym":
        return factorial(params[0])
    if family == "alt":
        return max(1, factorial(params[0]) // 2)
    if family == "elemab":
        return params[0] ** params[1]
    if family == "heisenberg":
        return params[0] ** 3
    if family == "affine":
        return params[0] * (params[0] - 1)
    raise ValueError(f"Order of {spec.render()} is not known before loading")


def builtin_specs(max_order: int) -> List[GroupSpec]:
    """Specs of every built-in group of order at most max_order, sorted by (order, spec)."""
    texts = [f"cyclic:{n}" for n in range(1, max_order + 1)]
    texts += [f"dihedral:{n}" for n in range(3, max_order // 2 + 1)]
    texts += [f"dicyclic:{n}" for n in range(2, max_order // 4 + 1)]
    texts += [f"sym:{n}" for n in range(3, 8)]
    texts += [f"alt:{n}" for n in range(4, 8)]
    for p in range(2, max_order + 1):
        if not isprime(p):
            continue
        texts += [f"elemab:{p},{k}" for k in range(2, 64) if p ** k <= max_order]
        if p > 2:
            texts.append(f"heisenberg:{p}")
        if p >= 5:
            texts.append(f"affine:{p}")
    texts += CURATED_PRODUCTS

    specs = [parse_group_spec(text) for text in texts]
    specs = [spec for spec in specs if spec_order(spec) <= max_order]
    return sorted(specs, key=lambda spec: (spec_order(spec), spec.render()))


def builtin_catalog(max_order: int, settings: Optional[Settings] = None) -> List[GroupTable]:
    """Build every built-in group of order at most max_order."""
    settings = settings or Settings()
    specs = builtin_specs(min(max_order, settings.max_order))
    groups = [spec.build(settings) for spec in specs]
    logger.info(f"Built-in catalog up to order {max_order}: {len(groups)} groups")
    return groups
