"""
Exact degree of a holomorphic family of planes

|W| is the degree of the Pluecker map z -> [maximal minors of the basis]. It is
computed directly, and independently as the number of points z in S^2 where
W(z) meets a fixed test subspace of complementary dimension.
"""

import time
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from canonical.uniton_type import UnitonType
from config import DEFAULT_SEED
from custom_logging.custom_logger import get_logger
from exactalg.rational_function import RationalFunction, z
from grassmann.loops import extract_X0, model_from_loop
from grassmann.model_space import ModelSpace, PlaneFamily
from loopalg.factors import LoopProduct
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "GRASSMANN_DEGREE"

_RING = QQ_I[z]
PolyRow = List[Poly]


def _as_poly(expr) -> Poly:
    return Poly(expr, z, domain=QQ_I)


_POLY_ZERO = _as_poly(0)
_POLY_ONE = _as_poly(1)


def _cleared_rows(rows: Sequence[Sequence[RationalFunction]]) -> List[PolyRow]:
    """Each row times the lcm of its denominators; row spans are unchanged away from poles"""
    out = []
    for row in rows:
        lcm = _POLY_ONE
        for e in row:
            if not e.is_zero:
                lcm = lcm.lcm(e.den)
        out.append([_POLY_ZERO if e.is_zero else e.num * lcm.exquo(e.den) for e in row])
    return out


def _det(rows: Sequence[PolyRow]) -> Poly:
    size = len(rows)
    if size == 0:
        return _POLY_ONE
    matrix = DomainMatrix(
        [[_RING.from_sympy(p.as_expr()) for p in row] for row in rows], (size, size), _RING
    )
    return _as_poly(_RING.to_sympy(matrix.det()))


def _lowest_order(p: Poly) -> int:
    return min(monom[0] for monom, _ in p.terms())


def pluecker_degree(plane: PlaneFamily) -> int:
    """max degree of the maximal minors minus the degree of their gcd"""
    start = time.time()
    r = plane.dim
    if r == 0:
        return 0

    rows = _cleared_rows(plane.basis)
    columns = [c for c in range(plane.space.dim) if any(not row[c].is_zero for row in rows)]
    if len(columns) < r:
        raise InvalidInputError(f"Basis of rank {r} uses only {len(columns)} columns")

    common: Optional[Poly] = None
    top = -1
    count = 0
    for subset in combinations(columns, r):
        minor = _det([[row[c] for c in subset] for row in rows])
        if minor.is_zero:
            continue
        count += 1
        top = max(top, minor.degree())
        common = minor if common is None else common.gcd(minor)

    if common is None:
        raise InvalidInputError("All maximal minors vanish: basis is rank-deficient")

    degree = top - common.degree()
    clogger.log_performance(
        "pluecker_degree",
        time.time() - start,
        {"dim": r, "ambient": plane.space.dim, "nonzero_minors": count, "degree": degree},
    )
    return degree


def _slot_columns(uniton_type: UnitonType, slots: Sequence[Sequence[int]]) -> List[int]:
    n = uniton_type.n
    return sorted(power * n + a for power, coords in enumerate(slots) for a in coords)


def schubert_test_space(uniton_type: UnitonType) -> PlaneFamily:
    """
    Coordinate subspace Z of codimension dim W, W being any plane of this type:
    slot 0 holds E_k + ... + E_1 + V_n, slot i holds E_k + ... + E_(i+1),
    the top slot holds E_k minus V_1
    """
    n, k, v = uniton_type.n, uniton_type.k, uniton_type.v
    space = ModelSpace(n, k, 0)
    if k == 0:
        return PlaneFamily(space)

    if k == 1:
        slots = [[a for a in range(n) if (v[a] >= 1 and a != 0) or a == n - 1]]
    else:
        slots = [[a for a in range(n) if v[a] >= 1 or a == n - 1]]
        for i in range(1, k - 1):
            slots.append([a for a in range(n) if v[a] >= i + 1])
        slots.append([a for a in range(n) if v[a] == k and a != 0])

    columns = _slot_columns(uniton_type, slots)
    return PlaneFamily(space, [space.unit(*space.slot(c)) for c in columns])


def x0_ambient_columns(uniton_type: UnitonType) -> List[int]:
    """Coordinates of C^n + lambda (E_k + ... + E_2) + ... + lambda^(k-1) E_k, where X_0 lives"""
    n, k, v = uniton_type.n, uniton_type.k, uniton_type.v
    if k == 0:
        return []
    slots = [list(range(n))]
    for i in range(1, k):
        slots.append([a for a in range(n) if v[a] >= i + 1])
    return _slot_columns(uniton_type, slots)


def _chart_determinants(
    plane_rows: Sequence[Sequence[RationalFunction]],
    test_rows: Sequence[Sequence[RationalFunction]],
    complements: Sequence[np.ndarray],
    columns: Sequence[int],
    at_infinity: bool,
) -> Tuple[Poly, Poly]:
    """det[W; Z] in one chart, and its gcd with det[W; random complement]"""

    def chart(e: RationalFunction) -> RationalFunction:
        return e.compose_reciprocal() if at_infinity else e

    p = _cleared_rows([[chart(row[c]) for c in columns] for row in plane_rows])
    q = _cleared_rows([[chart(row[c]) for c in columns] for row in test_rows])
    d = _det(p + q)
    if d.is_zero:
        return d, d

    common = d
    for comp in complements:
        other = _det(p + [[_as_poly(int(x)) for x in row] for row in comp])
        if not other.is_zero:
            common = common.gcd(other)
    return d, common


def schubert_count(
    plane: PlaneFamily,
    test_space: PlaneFamily,
    columns: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> int:
    """
    Number of z in S^2, with multiplicity, where W(z) meets the test space
    columns restricts to a coordinate subspace holding both; base points of the
    basis are divided out using random complements
    """
    start = time.time()
    space = plane.space
    if test_space.space != space:
        plane = plane.in_window(test_space.space.low, test_space.space.k)
        space = plane.space
    columns = list(range(space.dim)) if columns is None else sorted(columns)

    outside = set(range(space.dim)) - set(columns)
    for name, rows in (("W", plane.basis), ("test space", test_space.basis)):
        for row in rows:
            if any(not row[c].is_zero for c in outside):
                raise InvalidInputError(f"{name} has components outside the chosen coordinates")
    if plane.dim + test_space.dim != len(columns):
        raise InvalidInputError(
            f"dim W = {plane.dim} and dim Z = {test_space.dim} are not complementary in {len(columns)} coordinates"
        )

    rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
    complements = [
        rng.integers(-9, 10, size=(test_space.dim, len(columns))) for _ in range(2)
    ]

    d, common = _chart_determinants(plane.basis, test_space.basis, complements, columns, False)
    if d.is_zero:
        raise InvalidInputError("W(z) meets the test space for every z; the count is infinite")
    finite = d.exquo(common).degree()

    d_inf, common_inf = _chart_determinants(
        plane.basis, test_space.basis, complements, columns, True
    )
    at_infinity = _lowest_order(d_inf.exquo(common_inf))

    clogger.log_performance(
        "schubert_count",
        time.time() - start,
        {"finite": finite, "at_infinity": at_infinity},
    )
    return finite + at_infinity


def x0_degrees(h: LoopProduct, uniton_type: UnitonType) -> Tuple[int, int]:
    """(|W|, |X_0|) for the big-cell factor H = exp C"""
    w_degree = pluecker_degree(model_from_loop(h, uniton_type))
    x0_degree = pluecker_degree(extract_X0(h, uniton_type))
    clogger.info(f"[{MODULE_NAME}] type {uniton_type}: |W| = {w_degree}, |X_0| = {x0_degree}")
    return w_degree, x0_degree


def x0_degree_matches(h: LoopProduct, uniton_type: UnitonType) -> bool:
    w_degree, x0_degree = x0_degrees(h, uniton_type)
    return w_degree == x0_degree
