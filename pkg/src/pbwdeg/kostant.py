"""Graded Kostant partition function and the min-degree lower bound.

``P_nu(q)`` counts multisets of positive roots summing to ``nu``, graded by
the number of parts.  The table is a bounded knapsack over the lattice box
``0 <= nu <= bound`` in simple-root coordinates, processing one positive
root at a time.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import InvariantViolated, NegativeBound, ZeroPolynomial
from .rootsys import Root, RootSystem, Weight

MAX_TABLE_POINTS = 400_000


@dataclass(frozen=True)
class GradedPartitionTable:
    root_system: RootSystem
    bound: Root
    # shape bound+1 along each root axis, last axis = power of q
    data: np.ndarray

    def __contains__(self, nu) -> bool:
        return all(0 <= c <= b for c, b in zip(nu, self.bound))

    def polynomial(self, nu: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients of P_nu(q); the empty tuple is the zero polynomial."""
        nu = tuple(int(c) for c in nu)
        if any(c < 0 for c in nu):
            return ()
        if nu not in self:
            raise KeyError(f"{nu} lies outside the table bound {self.bound}")
        coeffs = [int(c) for c in self.data[nu]]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def __getitem__(self, nu) -> Tuple[int, ...]:
        return self.polynomial(nu)

    def items(self):
        for nu in itertools.product(*(range(b + 1) for b in self.bound)):
            yield nu, self.polynomial(nu)


def table_size(bound: Sequence[int]) -> int:
    size = 1
    for b in bound:
        size *= b + 1
    return size


def kostant_table(rs: RootSystem, bound: Sequence[int]) -> GradedPartitionTable:
    bound = tuple(int(b) for b in bound)
    if len(bound) != rs.rank:
        raise ValueError(f"bound {bound} has wrong length for {rs}")
    if any(b < 0 for b in bound):
        raise NegativeBound(f"bound {bound} has a negative coordinate")
    # no decomposition of nu <= bound has more than height(bound) parts
    max_deg = sum(bound)
    shape = tuple(b + 1 for b in bound) + (max_deg + 1,)
    data = np.zeros(shape, dtype=object)
    data.fill(0)
    data[(0,) * rs.rank + (0,)] = 1
    for alpha in rs.positive_roots:
        if any(a > b for a, b in zip(alpha, bound)):
            continue
        old = data.copy()
        m = 1
        while all(m * a <= b for a, b in zip(alpha, bound)) and m <= max_deg:
            src = tuple(slice(0, b + 1 - m * a) for a, b in zip(alpha, bound)) + (slice(0, max_deg + 1 - m),)
            dst = tuple(slice(m * a, b + 1) for a, b in zip(alpha, bound)) + (slice(m, max_deg + 1),)
            data[dst] += old[src]
            m += 1
    return GradedPartitionTable(rs, bound, data)


def kostant_polynomial(rs: RootSystem, nu: Sequence[int]) -> Tuple[int, ...]:
    nu = tuple(nu)
    if any(c < 0 for c in nu):
        return ()
    return kostant_table(rs, nu).polynomial(nu)


def mindeg(coeffs: Sequence[int]) -> int:
    coeffs = getattr(coeffs, "coeffs", coeffs)
    for k, c in enumerate(coeffs):
        if c:
            return k
    raise ZeroPolynomial("mindeg of the zero polynomial is undefined")


def enumerate_decompositions(rs: RootSystem, nu: Sequence[int]) -> Dict[int, int]:
    """Count multisets of positive roots summing to nu by explicit search.

    Independent of the table: walks roots in order with non-increasing
    index, so each multiset is produced exactly once.
    """
    roots = rs.positive_roots
    counts: Dict[int, int] = {}

    def walk(rest, start, parts):
        if not any(rest):
            counts[parts] = counts.get(parts, 0) + 1
            return
        for k in range(start, -1, -1):
            alpha = roots[k]
            if all(a <= r for a, r in zip(alpha, rest)):
                walk(tuple(r - a for r, a in zip(rest, alpha)), k, parts + 1)

    walk(tuple(nu), len(roots) - 1, 0)
    return counts


@dataclass(frozen=True)
class MinDegreeRow:
    weight: Weight
    filtration_mindeg: int
    kostant_mindeg: int

    @property
    def strict(self) -> bool:
        return self.filtration_mindeg > self.kostant_mindeg


def mindeg_bound_check(module, gc, table: GradedPartitionTable = None) -> List[MinDegreeRow]:
    """Compare mindeg p_{lam,nu} with mindeg P_{lam - nu} at every weight nu."""
    rs = module.root_system
    lam = module.highest_weight
    if table is None:
        bound = rs.weight_to_root_int(tuple(a - b for a, b in zip(lam, module.lowest_weight)))
        table = kostant_table(rs, bound)
    rows = []
    for nu in module.weights():
        diff = rs.weight_to_root_int(tuple(a - b for a, b in zip(lam, nu)))
        lower = mindeg(table.polynomial(diff))
        have = mindeg(gc[nu])
        if have < lower:
            raise InvariantViolated(
                f"mindeg p_(lam,{nu}) = {have} < mindeg P_{diff} = {lower}")
        rows.append(MinDegreeRow(nu, have, lower))
    return rows


def lowest_weight_bound(rs: RootSystem, lam: Sequence[int]):
    """mindeg P_{lam - w0 lam}, or None when the lattice box is too large."""
    bound = rs.weight_to_root_int(tuple(a - b for a, b in zip(lam, rs.w0_image(lam))))
    if table_size(bound) * (sum(bound) + 1) > MAX_TABLE_POINTS * 8:
        return None
    return mindeg(kostant_table(rs, bound).polynomial(bound))
