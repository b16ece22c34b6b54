"""Irreducible highest-weight modules with exact sparse operator matrices.

The module V(lam) is grown level by level below the highest weight.  Every
candidate vector ``f_i b`` (``b`` a basis vector one level up) is tested
through the joint raising map ``v -> (e_1 v, ..., e_n v)``, which is
injective away from the highest weight of an irreducible module.  The
raising images are computed from already known matrices with
``e_j f_i = f_i e_j + delta_ij h_i``; candidates whose image is independent
of the earlier ones become basis vectors, the others are expressed in that
basis, which fills in the columns of ``f_i``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .errors import DimensionCapExceeded, NotDominant, ZeroOperator
from .rootsys import Root, RootSystem, Weight, is_dominant
from .sparse import ONE, SparseOperator, Vector, axpy

log = logging.getLogger(__name__)

DEFAULT_CAP = 5000


@dataclass(frozen=True)
class WeightSpace:
    weight: Weight
    start: int
    dimension: int
    basis_tags: Tuple[Tuple[int, ...], ...]
    depth: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.dimension)


class HWModule:
    """V(lam) with weight-space bases and the matrices of all e_i, f_i.

    Basis vectors carry global indices; the vectors of one weight space are
    contiguous.  Each basis vector is a lowering monomial applied to the
    highest weight vector (index 0); its tag lists the simple-root indices
    in the order they are applied.
    """

    def __init__(self, root_system: RootSystem, highest_weight: Weight,
                 weight_spaces: Dict[Weight, WeightSpace],
                 raising: List[SparseOperator], lowering: List[SparseOperator]):
        self.root_system = root_system
        self.highest_weight = tuple(highest_weight)
        self.weight_spaces = weight_spaces
        self.raising = raising
        self.lowering = lowering
        self.total_dim = sum(ws.dimension for ws in weight_spaces.values())
        self._index_weight: List[Weight] = [None] * self.total_dim
        for ws in weight_spaces.values():
            for k in ws.indices:
                self._index_weight[k] = ws.weight
        self._root_ops: Dict[Root, SparseOperator] = {}

    def __repr__(self):
        return f"HWModule({self.root_system}, {self.highest_weight}, dim={self.total_dim})"

    @property
    def dim(self) -> int:
        return self.total_dim

    def weight_of(self, index: int) -> Weight:
        return self._index_weight[index]

    def weights(self) -> List[Weight]:
        return list(self.weight_spaces)

    def multiplicity(self, weight: Sequence[int]) -> int:
        ws = self.weight_spaces.get(tuple(weight))
        return ws.dimension if ws else 0

    def multiplicities(self) -> Dict[Weight, int]:
        return {w: ws.dimension for w, ws in self.weight_spaces.items()}

    @property
    def lowest_weight(self) -> Weight:
        return self.root_system.w0_image(self.highest_weight)

    def highest_vector(self) -> Vector:
        return {0: ONE}

    def lowest_vector(self) -> Vector:
        ws = self.weight_spaces[self.lowest_weight]
        return {ws.start: ONE}

    def vector_weight(self, vec: Vector) -> Optional[Weight]:
        """Common weight of the support of ``vec`` (None if zero or mixed)."""
        weights = {self._index_weight[k] for k in vec}
        return weights.pop() if len(weights) == 1 else None

    def h_action(self, i: int, vec: Vector) -> Vector:
        """h_i acts on V(lam)_mu by <mu, alpha_i^vee> = mu_i."""
        out = {}
        for k, x in vec.items():
            c = self._index_weight[k][i - 1]
            if c:
                out[k] = c * x
        return out


def _is_weight(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    dom = rs.dominant_conjugate(mu)
    diff = tuple(a - b for a, b in zip(lam, dom))
    return all(c >= 0 for c in rs.weight_to_root(diff))


def construct_module(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_CAP) -> HWModule:
    lam = tuple(int(c) for c in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong length for {rs}")
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    required = rs.weyl_dim(lam)
    if required > cap:
        raise DimensionCapExceeded(cap, required)

    n = rs.rank
    cartan = rs.cartan
    E = [SparseOperator(rs.simple_root(i + 1)) for i in range(n)]
    F = [SparseOperator(tuple(-c for c in rs.simple_root(i + 1))) for i in range(n)]
    tags: List[Tuple[int, ...]] = [()]
    index_weight: List[Weight] = [lam]
    spaces: Dict[Weight, WeightSpace] = {lam: WeightSpace(lam, 0, 1, ((),), 0)}
    level = [lam]
    depth = 0

    while level:
        depth += 1
        candidates: Dict[Weight, List[Tuple[int, int]]] = {}
        for nu in level:
            ws = spaces[nu]
            for b in ws.indices:
                for i in range(n):
                    mu = tuple(x - y for x, y in zip(nu, cartan[i]))
                    candidates.setdefault(mu, []).append((b, i))
        next_level = []
        for mu, cands in candidates.items():
            if not _is_weight(rs, lam, mu):
                continue
            start = len(tags)
            rows: List[Tuple[int, Vector, Vector]] = []
            new_tags = []
            for b, i in cands:
                h = index_weight[b][i]
                parts = []
                raised: Vector = {}
                for j in range(n):
                    v = F[i].apply(E[j].col(b))
                    if j == i and h:
                        axpy(v, mpq(h), {b: ONE})
                    parts.append(v)
                    raised.update(v)  # supports lie in distinct weight spaces
                acc: Vector = {}
                for piv, rvec, rcombo in rows:
                    c = raised.get(piv)
                    if c is not None:
                        axpy(raised, -c, rvec)
                        axpy(acc, c, rcombo)
                if not raised:
                    F[i].set_col(b, acc)
                    continue
                g = start + len(new_tags)
                new_tags.append(tags[b] + (i + 1,))
                F[i].set_col(b, {g: ONE})
                for j in range(n):
                    E[j].set_col(g, parts[j])
                piv = min(raised)
                inv = ONE / raised[piv]
                combo = {g: ONE}
                axpy(combo, -ONE, acc)
                rows.append((piv, {k: x * inv for k, x in raised.items()},
                             {k: x * inv for k, x in combo.items()}))
            if new_tags:
                spaces[mu] = WeightSpace(mu, start, len(new_tags), tuple(new_tags), depth)
                tags.extend(new_tags)
                index_weight.extend([mu] * len(new_tags))
                next_level.append(mu)
        level = next_level

    module = HWModule(rs, lam, spaces, E, F)
    if module.total_dim != required:
        raise AssertionError(f"constructed dim {module.total_dim} != Weyl dim {required}")
    log.debug("constructed %r", module)
    return module


def freudenthal(rs: RootSystem, lam: Sequence[int]) -> Dict[Weight, int]:
    """Weight multiplicities of V(lam) by Freudenthal's recursion."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    n = rs.rank
    rho = rs.rho
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    top = rs.form(lam_rho, lam_rho)
    root_weights = [(alpha, rs.root_to_weight(alpha)) for alpha in rs.positive_roots]
    mult: Dict[Weight, int] = {lam: 1}
    level = [lam]
    while level:
        seen = set()
        nxt = []
        for nu in level:
            for i in range(n):
                mu = tuple(x - y for x, y in zip(nu, rs.cartan[i]))
                if mu in seen or not _is_weight(rs, lam, mu):
                    continue
                seen.add(mu)
                if not is_dominant(mu):
                    m = mult.get(rs.dominant_conjugate(mu), 0)
                else:
                    total = 0
                    for alpha, aw in root_weights:
                        shifted = tuple(a + b for a, b in zip(mu, aw))
                        while shifted in mult:
                            total += mult[shifted] * rs.form_weight_root(shifted, alpha)
                            shifted = tuple(a + b for a, b in zip(shifted, aw))
                    mu_rho = tuple(a + b for a, b in zip(mu, rho))
                    m = 2 * total / (top - rs.form(mu_rho, mu_rho))
                    assert m.denominator == 1, (mu, m)
                    m = int(m)
                if m:
                    mult[mu] = m
                    nxt.append(mu)
        level = nxt
    return mult


def root_operator(module: HWModule, alpha: Sequence[int]) -> SparseOperator:
    """A nonzero multiple of f_alpha as a matrix on the module.

    Non-simple roots use ``[f_i, f_{alpha - alpha_i}]`` with the smallest
    admissible ``i``; the scalar is left unnormalised.
    """
    alpha = tuple(alpha)
    cached = module._root_ops.get(alpha)
    if cached is not None:
        return cached
    rs = module.root_system
    if not rs.is_positive_root(alpha):
        raise ValueError(f"{alpha} is not a positive root of {rs}")
    if sum(alpha) == 1:
        op = module.lowering[alpha.index(1)]
    else:
        for i in range(rs.rank):
            rest = list(alpha)
            rest[i] -= 1
            rest = tuple(rest)
            if rs.is_positive_root(rest):
                break
        op = module.lowering[i].commutator(root_operator(module, rest))
    if op.is_zero() and any(module.highest_weight):
        raise ZeroOperator(f"f_{alpha} vanishes on {module!r}")
    module._root_ops[alpha] = op
    return op


def all_root_operators(module: HWModule) -> Dict[Root, SparseOperator]:
    return {alpha: root_operator(module, alpha) for alpha in module.root_system.positive_roots}


def apply_power(op: SparseOperator, vec: Vector, power: int) -> Vector:
    for _ in range(power):
        if not vec:
            break
        vec = op.apply(vec)
    return vec
