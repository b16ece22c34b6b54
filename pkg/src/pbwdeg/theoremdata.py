"""Predicted PBW degrees of fundamental modules and explicit lowering monomials.

``expected_degree`` holds the closed-form degree of p_{omega_i}(q) for every
simple type.  ``figure1_recipe`` builds, for each fundamental weight, a
product of commuting root vectors ``f_{theta_1}^{b_1} ... f_{theta_r}^{b_r}``
that carries v_{omega_i} to the lowest weight line.  Each theta is the
highest root of a sub-diagram obtained by stripping nodes; the node sets
are written out per family below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidNode, RowNotCovered
from .hwmod import HWModule, apply_power, root_operator
from .rootsys import LieType, Root, RootSystem, build_root_system
from .sparse import Vector

AS_PRINTED = "as-printed"
REPAIRED = "repaired"

_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 2, 4, 6, 4, 2),
    ("E", 7): (2, 5, 6, 8, 7, 4, 3),
    ("E", 8): (4, 8, 8, 14, 11, 8, 6, 2),
    ("F", 4): (2, 6, 4, 2),
    ("G", 2): (2, 2),
}


def _ceil_half(k: int) -> int:
    return -(-k // 2)


def expected_degree(lie_type: LieType, i: int) -> int:
    n, fam = lie_type.rank, lie_type.family
    if not isinstance(i, int) or not 1 <= i <= n:
        raise InvalidNode(f"node {i} not in 1..{n} for {lie_type}")
    if fam == "A":
        return min(i, n + 1 - i)
    if fam == "B":
        return _ceil_half(n) if i == n else 2 * _ceil_half(i)
    if fam == "C":
        return i
    if fam == "D":
        return _ceil_half(n - 1) if i >= n - 1 else 2 * _ceil_half(i)
    return _EXCEPTIONAL_DEGREES[(fam, n)][i - 1]


def degree_table(lie_type: LieType) -> Tuple[int, ...]:
    return tuple(expected_degree(lie_type, i) for i in range(1, lie_type.rank + 1))


@dataclass(frozen=True)
class Factor:
    nodes: Tuple[int, ...]  # simple roots generating the subalgebra
    exponent: int
    root: Root  # its highest root, ambient simple-root coordinates
    label: str  # e.g. "theta(C3)" or "alpha(4)"


@dataclass(frozen=True)
class MonomialRecipe:
    lie_type: LieType
    node: int
    factors: Tuple[Factor, ...]
    source_row: str
    status: str = AS_PRINTED

    @property
    def degree(self) -> int:
        return sum(f.exponent for f in self.factors)

    @property
    def weight_drop(self) -> Root:
        out = [0] * self.lie_type.rank
        for f in self.factors:
            for k, c in enumerate(f.root):
                out[k] += f.exponent * c
        return tuple(out)

    def describe(self) -> str:
        parts = []
        for f in self.factors:
            parts.append(f"f_{f.label}" + (f"^{f.exponent}" if f.exponent != 1 else ""))
        return " ".join(parts)


def _span(a: int, b: int) -> Tuple[int, ...]:
    return tuple(range(a, b + 1))


# exceptional chains: each stage strips the node k with theta = c_k omega_k
# (and, from D_6 on, the stripped leg) of the previous stage
_E6 = [_span(1, 6), (1, 3, 4, 5, 6), (3, 4, 5), (4,)]
_E7 = [_span(1, 7), _span(2, 7), (2, 3, 4, 5)]
_E8 = [_span(1, 8), _span(1, 7), _span(2, 7), (2, 3, 4, 5)]
_F4 = [_span(1, 4), (2, 3, 4), (2, 3)]

_EXCEPTIONAL_ROWS = {
    ("E", 6): {
        1: ("E_6, omega_1: f_{theta_{E_6}} f_{theta_{A_5}}", [(_E6[0], 1), (_E6[1], 1)]),
        6: ("E_6, omega_6: f_{theta_{E_6}} f_{theta_{A_5}}", [(_E6[0], 1), (_E6[1], 1)]),
        3: ("E_6, omega_3: f^2_{theta_{E_6}} f_{theta_{A_5}} f_{theta_{A_3}}",
            [(_E6[0], 2), (_E6[1], 1), (_E6[2], 1)]),
        5: ("E_6, omega_5: f^2_{theta_{E_6}} f_{theta_{A_5}} f_{theta_{A_3}}",
            [(_E6[0], 2), (_E6[1], 1), (_E6[2], 1)]),
        4: ("E_6, omega_4: f^3_{theta_{E_6}} f_{theta_{A_5}} f_{theta_{A_3}} f_{alpha_4}",
            [(_E6[0], 3), (_E6[1], 1), (_E6[2], 1), ((4,), 1)]),
    },
    ("E", 7): {
        2: ("E_7, omega_2: f^2_{theta_{E_7}} f_{theta_{D_6}} f_{theta_{D_4}} f_{alpha_2}",
            [(_E7[0], 2), (_E7[1], 1), (_E7[2], 1), ((2,), 1)]),
        3: ("E_7, omega_3: f^3_{theta_{E_7}} f_{theta_{D_6}} f_{theta_{D_4}} f_{alpha_3}",
            [(_E7[0], 3), (_E7[1], 1), (_E7[2], 1), ((3,), 1)]),
        4: ("E_7, omega_4: f^4_{theta_{E_7}} f^2_{theta_{D_6}} f^2_{theta_{D_4}}",
            [(_E7[0], 4), (_E7[1], 2), (_E7[2], 2)]),
        5: ("E_7, omega_5: f^3_{theta_{E_7}} f^2_{theta_{D_6}} f_{theta_{D_4}} f_{alpha_5}",
            [(_E7[0], 3), (_E7[1], 2), (_E7[2], 1), ((5,), 1)]),
        6: ("E_7, omega_6: f^2_{theta_{E_7}} f^2_{theta_{D_6}}", [(_E7[0], 2), (_E7[1], 2)]),
        7: ("E_7, omega_7: f_{theta_{E_7}} f_{theta_{D_6}} f_{alpha_7}",
            [(_E7[0], 1), (_E7[1], 1), ((7,), 1)]),
    },
    ("E", 8): {
        1: ("E_8, omega_1: f^2_{theta_{E_8}} f^2_{theta_{E_7}}", [(_E8[0], 2), (_E8[1], 2)]),
        2: ("E_8, omega_2: f^3_{theta_{E_8}} f^2_{theta_{E_7}} f_{theta_{D_6}} f_{theta_{D_4}} f_{alpha_2}",
            [(_E8[0], 3), (_E8[1], 2), (_E8[2], 1), (_E8[3], 1), ((2,), 1)]),
        3: ("E_8, omega_3: f^4_{theta_{E_8}} f^3_{theta_{E_7}} f_{theta_{D_6}} f_{theta_{D_4}} f_{alpha_3}",
            [(_E8[0], 4), (_E8[1], 3), (_E8[2], 1), (_E8[3], 1), ((3,), 1)]),
        4: ("E_8, omega_4: f^6_{theta_{E_8}} f^4_{theta_{E_7}} f^2_{theta_{D_6}} f^2_{theta_{D_4}}",
            [(_E8[0], 6), (_E8[1], 4), (_E8[2], 2), (_E8[3], 2)]),
        5: ("E_8, omega_5: f^5_{theta_{E_8}} f^3_{theta_{E_7}} f^2_{theta_{D_6}} f_{theta_{D_4}} f_{alpha_5}",
            [(_E8[0], 5), (_E8[1], 3), (_E8[2], 2), (_E8[3], 1), ((5,), 1)]),
        6: ("E_8, omega_6: f^4_{theta_{E_8}} f^2_{theta_{E_7}} f^2_{theta_{D_6}}",
            [(_E8[0], 4), (_E8[1], 2), (_E8[2], 2)]),
        7: ("E_8, omega_7: f^3_{theta_{E_8}} f_{theta_{E_7}} f_{theta_{D_6}} f_{alpha_7}",
            [(_E8[0], 3), (_E8[1], 1), (_E8[2], 1), ((7,), 1)]),
    },
    ("F", 4): {
        # the printed theta_{A_2} is read as the rank-2 stage {2, 3} of the chain
        2: ("F_4, omega_2: f^3_{theta_{F_4}} f_{theta_{C_3}} f_{theta_{A_2}} f_{alpha_2}",
            [(_F4[0], 3), (_F4[1], 1), (_F4[2], 1), ((2,), 1)]),
        3: ("F_4, omega_3: f^2_{theta_{F_4}} f_{theta_{C_3}} f_{theta_{C_2}}",
            [(_F4[0], 2), (_F4[1], 1), (_F4[2], 1)]),
        4: ("F_4, omega_4: f_{theta_{F_4}} f_{theta_{C_3}}", [(_F4[0], 1), (_F4[1], 1)]),
    },
    ("G", 2): {
        1: ("G_2, omega_1: f_{theta_{G_2}} f_{alpha_1}", [(_span(1, 2), 1), ((1,), 1)]),
    },
}


def _classical_rows(lie_type: LieType, i: int):
    """(source_row, printed factors, repaired factors or None) for A-D."""
    n, fam = lie_type.rank, lie_type.family
    if fam == "A":
        m = min(i, n + 1 - i)
        factors = [(_span(1 + k, n - k), 1) for k in range(m)]
        return "A_n, omega_i: f_{theta_{A_n}} f_{theta_{A_{n-2}}} ... (min{i, n+1-i} factors)", factors, None
    if fam == "C":
        factors = [(_span(k + 1, n), 1) for k in range(i)]
        return "C_n, omega_i: f_{theta_{C_n}} f_{theta_{C_{n-1}}} ... f_{theta_{C_{n+1-i}}}", factors, None
    if fam == "B":
        if i == n and n % 2 == 0:
            factors = [(_span(2 * k + 1, n), 1) for k in range(n // 2)]
            return "B_n, n even, omega_n: f_{theta_{B_n}} f_{theta_{B_{n-2}}} ... f_{theta_{B_2}}", factors, None
        if i == n:
            factors = [(_span(2 * k + 1, n), 1) for k in range((n - 1) // 2)] + [((n,), 1)]
            return ("B_n, n odd, omega_n: f_{theta_{B_n}} f_{theta_{B_{n-2}}} ... f_{alpha_n}",
                    factors, None)
        if i % 2 == 0:
            factors = [(_span(2 * k + 1, n), 2) for k in range(i // 2)]
            return "B_n, omega_{2i}: f^2_{theta_{B_n}} ... f^2_{theta_{B_{n+2-2i}}}", factors, None
        j = (i - 1) // 2
        printed = [(_span(2 * k + 1, n), 2) for k in range(j + 1)] + [((i,), 1)]
        repaired = [(_span(2 * k + 1, n), 2) for k in range(j)] + [(_span(2 * j + 1, n), 1), ((i,), 1)]
        return ("B_n, omega_{2i+1}: f^2_{theta_{B_n}} ... f^2_{theta_{B_{n-2i}}} f_{alpha_{2i+1}}",
                printed, repaired)
    if fam == "D":
        if i >= n - 1 and n % 2 == 0:
            factors = [(_span(2 * k + 1, n), 1) for k in range((n - 2) // 2)] + [((i,), 1)]
            return ("D_n, n even, omega_i (i = n-1, n): f_{theta_{D_n}} ... f_{theta_{D_4}} f_{alpha_i}",
                    factors, None)
        if i >= n - 1:
            # the final stage {n-2, n-1, n} is D_3 = A_3
            factors = [(_span(2 * k + 1, n), 1) for k in range((n - 1) // 2)]
            return ("D_n, n odd, omega_i (i = n-1, n): f_{theta_{D_n}} ... f_{theta_{D_5}} f_{theta_{A_4}}",
                    factors, None)
        if i % 2 == 0:
            factors = [(_span(2 * k + 1, n), 2) for k in range(i // 2)]
            return "D_n, omega_{2i}: f^2_{theta_{D_n}} ... f^2_{theta_{D_{n+2-2i}}}", factors, None
        j = (i - 1) // 2
        factors = [(_span(2 * k + 1, n), 2) for k in range(j)] + [(_span(2 * j + 1, n), 1), ((i,), 1)]
        return ("D_n, omega_{2i+1}: f^2_{theta_{D_n}} ... f_{theta_{D_{n-2i}}} f_{alpha_{2i+1}}",
                factors, None)
    raise RowNotCovered(f"no classical row for {lie_type}")


def _raw_rows(lie_type: LieType, i: int):
    rs = build_root_system(lie_type)
    n = lie_type.rank
    if not isinstance(i, int) or not 1 <= i <= n:
        raise InvalidNode(f"node {i} not in 1..{n} for {lie_type}")
    theta_weight = rs.root_to_weight(rs.highest_root)
    if theta_weight == rs.fundamental_weight(i):
        return f"X_n, omega_i = theta: f^2_{{theta_{{{lie_type.family}_{n}}}}}", [(_span(1, n), 2)], None
    if lie_type.family in "ABCD":
        return _classical_rows(lie_type, i)
    rows = _EXCEPTIONAL_ROWS.get((lie_type.family, n), {})
    if i not in rows:
        raise RowNotCovered(f"no recipe row for {lie_type}, omega_{i}")
    source, factors = rows[i]
    return source, factors, None


def _resolve(rs: RootSystem, factors) -> Tuple[Factor, ...]:
    out = []
    for nodes, exp in factors:
        if len(nodes) == 1:
            label = f"alpha({nodes[0]})"
        else:
            sub_type, _ = rs.sub_root_system(nodes)
            label = f"theta({sub_type})"
        out.append(Factor(tuple(nodes), exp, rs.subsystem_highest_root(nodes), label))
    return tuple(out)


def figure1_variants(lie_type: LieType, i: int) -> List[MonomialRecipe]:
    """The printed recipe, followed by the repaired one when a repair rule exists."""
    rs = build_root_system(lie_type)
    source, printed, repaired = _raw_rows(lie_type, i)
    out = [MonomialRecipe(lie_type, i, _resolve(rs, printed), source, AS_PRINTED)]
    if repaired is not None:
        out.append(MonomialRecipe(lie_type, i, _resolve(rs, repaired), source, REPAIRED))
    return out


def figure1_recipe(lie_type: LieType, i: int) -> MonomialRecipe:
    """The printed recipe, or its repair when the printed one fails the weight check."""
    rs = build_root_system(lie_type)
    variants = figure1_variants(lie_type, i)
    for recipe in variants:
        if recipe_weight_check(rs, recipe, i):
            return recipe
    return variants[-1]


def recipe_weight_check(rs: RootSystem, recipe: MonomialRecipe, i: int) -> bool:
    """True iff the recipe lowers omega_i exactly to w0(omega_i)."""
    omega = rs.fundamental_weight(i)
    drop = tuple(a - b for a, b in zip(omega, rs.w0_image(omega)))
    return rs.root_to_weight(recipe.weight_drop) == drop


@dataclass(frozen=True)
class RecipeApplication:
    vector: Vector = field(repr=False)
    nonzero: bool
    lowest: bool  # lies in V(lam)_{w0 lam}
    degree: int


def apply_recipe(module: HWModule, recipe: MonomialRecipe) -> RecipeApplication:
    """Apply the recipe's root-vector powers (rightmost factor first) to v_lam."""
    vec = module.highest_vector()
    for f in reversed(recipe.factors):
        vec = apply_power(root_operator(module, f.root), vec, f.exponent)
        if not vec:
            break
    nonzero = bool(vec)
    lowest = nonzero and module.vector_weight(vec) == module.lowest_weight
    return RecipeApplication(vec, nonzero, lowest, recipe.degree)


def recipe_factors_commute(module: HWModule, recipe: MonomialRecipe) -> bool:
    ops = [root_operator(module, f.root) for f in recipe.factors]
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            if not ops[a].commutator(ops[b]).is_zero():
                return False
    return True


def recipe_exponents_are_pairings(rs: RootSystem, recipe: MonomialRecipe) -> bool:
    """Whether each exponent equals <omega_i, theta_j^vee>."""
    omega = rs.fundamental_weight(recipe.node)
    return all(rs.pairing(omega, f.root) == f.exponent for f in recipe.factors)


def comark(rs: RootSystem, i: int) -> int:
    return rs.pairing(rs.fundamental_weight(i), rs.highest_root)


def comark_check(module: HWModule, i: int) -> bool:
    """f_theta^a v != 0 and f_theta^(a+1) v = 0 for a = comark(i)."""
    rs = module.root_system
    a = comark(rs, i)
    op = root_operator(module, rs.highest_root)
    vec = apply_power(op, module.highest_vector(), a)
    return bool(vec) and not op.apply(vec)
