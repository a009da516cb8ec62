"""Constructors for the standard group families.

Naming follows the catalog conventions: `D4` is the symmetry group of the
square (order 8), `Dic2` is the quaternion group, `E_8` is (C2)^3 and
`H27` is the Heisenberg group mod 3.
"""
from math import factorial
from typing import Optional
import logging

import numpy as np
from sympy import isprime, primitive_root

from app.config import Settings
from app.domain.errors import OrderCapExceeded, ParameterOutOfRange
from app.domain.group_table import GroupTable
from app.domain.perm import Perm
from app.groups.subgroups import group_generators
from app.groups.table_builder import build_from_cayley, build_from_generators

logger = logging.getLogger(__name__)

MAX_SYMMETRIC_DEGREE = 7


def _require(condition: bool, message: str):
    if not condition:
        raise ParameterOutOfRange(message)


def validate_parameters(family: str, params) -> None:
    """Check family parameter bounds.

    Raises:
        ParameterOutOfRange
    """
    if family in ("cyclic", "dihedral"):
        n, = params
        _require(n >= 1, f"{family}: n must be at least 1, got {n}")
    elif family == "dicyclic":
        n, = params
        _require(n >= 2, f"dicyclic: n must be at least 2, got {n}")
    elif family in ("sym", "alt"):
        n, = params
        _require(1 <= n <= MAX_SYMMETRIC_DEGREE,
                 f"{family}: n must be in [1, {MAX_SYMMETRIC_DEGREE}], got {n}")
    elif family == "elemab":
        p, k = params
        _require(isprime(p), f"elemab: p must be prime, got {p}")
        _require(k >= 1, f"elemab: k must be at least 1, got {k}")
    elif family == "heisenberg":
        p, = params
        _require(p > 2 and isprime(p), f"heisenberg: p must be an odd prime, got {p}")
    elif family == "affine":
        p, = params
        _require(isprime(p), f"affine: p must be prime, got {p}")


def _check_order(order: int, settings: Settings):
    if order > settings.max_order:
        raise OrderCapExceeded(settings.max_order, order)


def make_cyclic(n: int, settings: Optional[Settings] = None) -> GroupTable:
    """C_n; make_cyclic(1) is the trivial group."""
    settings = settings or Settings()
    validate_parameters("cyclic", (n,))
    _check_order(n, settings)
    k = np.arange(n)
    table = np.add.outer(k, k) % n
    return build_from_cayley(table, f"C{n}", settings=settings, generators=[1 % n])


def make_dihedral(n: int, settings: Optional[Settings] = None) -> GroupTable:
    """Symmetries of the regular n-gon, order 2n.

    Element k + n*f is r^k s^f, with s r s = r^-1.
    """
    settings = settings or Settings()
    validate_parameters("dihedral", (n,))
    _check_order(2 * n, settings)
    k = np.arange(2 * n) % n
    f = np.arange(2 * n) // n
    # r^a s^f * r^b s^g = r^(a + (-1)^f b) s^(f+g)
    rot = (k[:, None] + np.where(f[:, None] == 1, -k[None, :], k[None, :])) % n
    flip = f[:, None] ^ f[None, :]
    table = rot + n * flip
    return build_from_cayley(table, f"D{n}", settings=settings, generators=[1 % n, n])


def make_dicyclic(n: int, settings: Optional[Settings] = None) -> GroupTable:
    """Dic_n = <a, x | a^2n = 1, x^2 = a^n, x^-1 a x = a^-1>, order 4n.

    Element k + 2n*f is a^k x^f. Dic2 is the quaternion group.
    """
    settings = settings or Settings()
    validate_parameters("dicyclic", (n,))
    m = 2 * n
    _check_order(2 * m, settings)
    k = np.arange(2 * m) % m
    f = np.arange(2 * m) // m
    a, b = k[:, None], k[None, :]
    fa, fb = f[:, None], f[None, :]
    # x a^b = a^-b x and x^2 = a^n
    exponent = np.where(fa == 1, a - b, a + b) + np.where((fa == 1) & (fb == 1), n, 0)
    table = exponent % m + m * (fa ^ fb)
    return build_from_cayley(table, f"Dic{n}", settings=settings, generators=[1, m])


def make_symmetric(n: int, settings: Optional[Settings] = None) -> GroupTable:
    """S_n on points 0..n-1, generated by (0 1) and (0 1 ... n-1)."""
    settings = settings or Settings()
    validate_parameters("sym", (n,))
    _check_order(factorial(n), settings)
    gens = []
    if n >= 2:
        gens.append(Perm.from_cycles(n, (0, 1)))
    if n >= 3:
        gens.append(Perm.from_cycles(n, tuple(range(n))))
    return build_from_generators(gens, f"S{n}", settings)


def make_alternating(n: int, settings: Optional[Settings] = None) -> GroupTable:
    """A_n on points 0..n-1, generated by the 3-cycles (0 1 i)."""
    settings = settings or Settings()
    validate_parameters("alt", (n,))
    _check_order(max(1, factorial(n) // 2), settings)
    gens = [Perm.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return build_from_generators(gens, f"A{n}", settings)


def make_elementary_abelian(p: int, k: int, settings: Optional[Settings] = None) -> GroupTable:
    """(C_p)^k; element index is the base-p number of its coordinates."""
    settings = settings or Settings()
    validate_parameters("elemab", (p, k))
    order = p ** k
    _check_order(order, settings)
    powers = p ** np.arange(k)
    digits = (np.arange(order)[:, None] // powers) % p
    table = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers
    return build_from_cayley(table, f"E_{order}", settings=settings, generators=powers.tolist())


def make_heisenberg(p: int, settings: Optional[Settings] = None) -> GroupTable:
    """Upper unitriangular 3x3 matrices mod an odd prime p, order p^3 and exponent p.

    (a, b, c) is the matrix with a, b above the diagonal and c in the corner;
    (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b').
    """
    settings = settings or Settings()
    validate_parameters("heisenberg", (p,))
    order = p ** 3
    _check_order(order, settings)
    idx = np.arange(order)
    a, b, c = idx % p, (idx // p) % p, idx // (p * p)
    na = (a[:, None] + a[None, :]) % p
    nb = (b[:, None] + b[None, :]) % p
    nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
    table = na + p * nb + p * p * nc
    return build_from_cayley(table, f"H{order}", settings=settings, generators=[1, p])


def make_affine(p: int, settings: Optional[Settings] = None) -> GroupTable:
    """AGL(1, p): maps x -> ax + b over Z_p, order p(p-1).

    Element (a - 1) * p + b is x -> ax + b; products apply the left factor first.
    """
    settings = settings or Settings()
    validate_parameters("affine", (p,))
    order = p * (p - 1)
    _check_order(order, settings)
    idx = np.arange(order)
    a, b = idx // p + 1, idx % p
    # x -> a1 x + b1, then x -> a2 x + b2
    na = (a[None, :] * a[:, None]) % p
    nb = (a[None, :] * b[:, None] + b[None, :]) % p
    table = (na - 1) * p + nb
    generators = [1 % order, (int(primitive_root(p)) - 1) * p] if p > 2 else [1]
    return build_from_cayley(table, f"AGL1_{p}", settings=settings, generators=generators)


def direct_product(G: GroupTable, H: GroupTable, settings: Optional[Settings] = None) -> GroupTable:
    """G x H with element (g, h) at index g * |H| + h."""
    settings = settings or Settings()
    n, m = G.order, H.order
    _check_order(n * m, settings)
    table = (G.mul[:, None, :, None].astype(np.int64) * m + H.mul[None, :, None, :]).reshape(n * m, n * m)
    labels = [f"({G.label(g)}, {H.label(h)})" for g in range(n) for h in range(m)]
    generators = [g * m for g in group_generators(G)] + [int(h) for h in group_generators(H)]
    logger.debug(f"Direct product {G.name} x {H.name}, order {n * m}")
    return build_from_cayley(table, f"{G.name}x{H.name}", labels=labels,
                             settings=settings, generators=generators)
