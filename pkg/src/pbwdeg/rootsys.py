"""Root systems of the simple complex Lie algebras.

Node numbering follows Humphreys/Bourbaki throughout.  Weights are integer
tuples in the fundamental-weight basis, roots are integer tuples in the
simple-root basis.  The Cartan matrix is stored row-wise as
``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` is the simple root
``alpha_i`` written in fundamental-weight coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import DisconnectedSubdiagram, InvalidNode, InvalidRank, NotDominant

Weight = Tuple[int, ...]
Root = Tuple[int, ...]

FAMILIES = "ABCDEFG"

# classical |R+| per family, used by tests and sanity checks
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES or len(fam) != 1:
            raise InvalidRank(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not admissible_rank(fam, self.rank):
            raise InvalidRank(f"rank {self.rank} is not admissible for type {fam}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse strings such as ``"E6"`` or ``"b_4"``."""
        text = text.strip().replace("_", "")
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidRank(f"cannot parse Lie type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def expected_positive_roots(self) -> int:
        return _POSITIVE_ROOT_COUNT[self.family](self.rank)


def admissible_rank(family: str, rank: int) -> bool:
    if rank < 1:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]


def cartan_matrix(lie_type: LieType) -> Tuple[Tuple[int, ...], ...]:
    n, fam = lie_type.rank, lie_type.family
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if fam in "ABCD":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            link(n - 2, n - 1, -2, -1)  # alpha_n short
        elif fam == "C":
            link(n - 2, n - 1, -1, -2)  # alpha_n long
        elif fam == "D":
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)  # alpha_1, alpha_2 long
        link(2, 3)
    elif fam == "G":
        link(0, 1, -1, -3)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan) -> Tuple[int, ...]:
    """Half squared lengths of the simple roots, shortest normalised to 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    smallest = min(d)
    return tuple(int(x / smallest) for x in d)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    comarks: Tuple[int, ...]
    lengths: Tuple[int, ...]  # half squared lengths of the simple roots
    _root_index: Dict[Root, int] = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __str__(self):
        return str(self.lie_type)

    # -- coordinates -------------------------------------------------------

    def simple_root(self, i: int) -> Root:
        """Simple root ``alpha_i`` (1-based node) in simple-root coordinates."""
        self._check_node(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        self._check_node(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def zero_weight(self) -> Weight:
        return (0,) * self.rank

    def root_to_weight(self, alpha: Sequence[int]) -> Weight:
        n = self.rank
        return tuple(sum(alpha[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    @cached_property
    def _inverse_cartan(self):
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col])
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [x / p for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return tuple(tuple(row[n:]) for row in m)

    def weight_to_root(self, weight: Sequence[int]) -> Tuple[Fraction, ...]:
        """Express a weight in simple-root coordinates (rational in general)."""
        inv = self._inverse_cartan
        n = self.rank
        return tuple(sum(weight[i] * inv[i][j] for i in range(n)) for j in range(n))

    def weight_to_root_int(self, weight: Sequence[int]) -> Root:
        coords = self.weight_to_root(weight)
        if any(c.denominator != 1 for c in coords):
            raise ValueError(f"{tuple(weight)} is not in the root lattice of {self}")
        return tuple(int(c) for c in coords)

    @staticmethod
    def height(alpha: Sequence[int]) -> int:
        return sum(alpha)

    # -- bilinear form -------------------------------------------------------

    def form_weight_root(self, weight: Sequence[int], alpha: Sequence[int]) -> int:
        """(weight, alpha) with the normalisation (short simple root)^2 = 2."""
        return sum(w * a * d for w, a, d in zip(weight, alpha, self.lengths))

    def root_norm(self, alpha: Sequence[int]) -> int:
        return self.form_weight_root(self.root_to_weight(alpha), alpha)

    def form(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """(lam, mu) for two weights in fundamental coordinates."""
        mu_root = self.weight_to_root(mu)
        return sum((l * d * m for l, d, m in zip(lam, self.lengths, mu_root)), Fraction(0))

    def pairing(self, weight: Sequence[int], alpha: Sequence[int]) -> int:
        """``<weight, alpha^vee>``, an integer for every integral weight."""
        num = 2 * self.form_weight_root(weight, alpha)
        den = self.root_norm(alpha)
        q, r = divmod(num, den)
        assert r == 0, (weight, alpha)
        return q

    # -- roots -----------------------------------------------------------------

    def is_root(self, alpha: Sequence[int]) -> bool:
        alpha = tuple(alpha)
        neg = tuple(-a for a in alpha)
        return alpha in self._root_index or neg in self._root_index

    def root_index(self, alpha: Sequence[int]) -> int:
        return self._root_index[tuple(alpha)]

    def is_positive_root(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self._root_index

    # -- Weyl group --------------------------------------------------------

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i applied to a weight (1-based node)."""
        c = weight[i - 1]
        row = self.cartan[i - 1]
        return tuple(w - c * r for w, r in zip(weight, row))

    def dominant_conjugate(self, weight: Sequence[int]) -> Weight:
        w = tuple(weight)
        while True:
            neg = next((k for k, c in enumerate(w) if c < 0), None)
            if neg is None:
                return w
            w = self.reflect(w, neg + 1)

    def antidominant_conjugate(self, weight: Sequence[int]) -> Weight:
        w = tuple(weight)
        while True:
            pos = next((k for k, c in enumerate(w) if c > 0), None)
            if pos is None:
                return w
            w = self.reflect(w, pos + 1)

    @cached_property
    def _w0_fundamentals(self) -> Tuple[Weight, ...]:
        # w_0 sends each dominant weight to the antidominant point of its orbit
        return tuple(self.antidominant_conjugate(self.fundamental_weight(i))
                     for i in range(1, self.rank + 1))

    def w0_image(self, weight: Sequence[int]) -> Weight:
        out = [0] * self.rank
        for c, img in zip(weight, self._w0_fundamentals):
            if c:
                for k in range(self.rank):
                    out[k] += c * img[k]
        return tuple(out)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def weyl_dim(self, weight: Sequence[int]) -> int:
        if not is_dominant(weight):
            raise NotDominant(f"{tuple(weight)} is not dominant")
        shifted = tuple(w + 1 for w in weight)
        num = den = 1
        for alpha in self.positive_roots:
            num *= self.form_weight_root(shifted, alpha)
            den *= self.form_weight_root(self.rho, alpha)
        q, r = divmod(num, den)
        assert r == 0
        return q

    # -- Dynkin diagram ------------------------------------------------------

    def neighbours(self, i: int) -> List[int]:
        return [j + 1 for j in range(self.rank) if j != i - 1 and self.cartan[i - 1][j]]

    def adjoint_node(self):
        """Node k with theta = c_k omega_k, or None (types A and C)."""
        theta = self.root_to_weight(self.highest_root)
        support = [k + 1 for k, c in enumerate(theta) if c]
        return support[0] if len(support) == 1 else None

    def sub_root_system(self, indices) -> Tuple[LieType, Tuple[int, ...]]:
        """Type of the subsystem spanned by the simple roots at ``indices``.

        Returns the type and a tuple ``mapping`` with ``mapping[k-1]`` the
        ambient node of sub-node ``k``.
        """
        nodes = sorted(set(indices))
        if not nodes:
            raise DisconnectedSubdiagram("empty node set")
        for i in nodes:
            self._check_node(i)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            i = stack.pop()
            for j in self.neighbours(i):
                if j in nodes and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != len(nodes):
            raise DisconnectedSubdiagram(f"nodes {nodes} are not connected in {self}")
        sub = [[self.cartan[i - 1][j - 1] for j in nodes] for i in nodes]
        r = len(nodes)
        for fam in FAMILIES:
            if not admissible_rank(fam, r):
                continue
            target = cartan_matrix(LieType(fam, r))
            perm = _match_cartan(target, sub)
            if perm is not None:
                return LieType(fam, r), tuple(nodes[p] for p in perm)
        raise DisconnectedSubdiagram(f"could not identify subdiagram {nodes} of {self}")

    def subsystem_highest_root(self, indices) -> Root:
        """Highest root of the subsystem on ``indices``, in ambient coordinates."""
        support = {i - 1 for i in indices}
        best = None
        for alpha in self.positive_roots:
            if all(c == 0 or k in support for k, c in enumerate(alpha)):
                if best is None or sum(alpha) > sum(best):
                    best = alpha
        return best

    def root_grading(self, j: int) -> Dict[int, List[Root]]:
        """Partition of R+ by s = <omega_j, alpha^vee>."""
        self._check_node(j)
        omega = self.fundamental_weight(j)
        parts: Dict[int, List[Root]] = {}
        for alpha in self.positive_roots:
            parts.setdefault(self.pairing(omega, alpha), []).append(alpha)
        return dict(sorted(parts.items()))

    def _check_node(self, i):
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise InvalidNode(f"node {i} not in 1..{self.rank} for {self}")


def is_dominant(weight: Sequence[int]) -> bool:
    return all(c >= 0 for c in weight)


def _match_cartan(target, sub):
    """Permutation p with target[a][b] == sub[p[a]][p[b]], found by backtracking."""
    r = len(target)
    assignment: List[int] = []
    used = [False] * r

    def extend(a):
        if a == r:
            return True
        for cand in range(r):
            if used[cand]:
                continue
            if all(target[a][b] == sub[cand][assignment[b]] and target[b][a] == sub[assignment[b]][cand]
                   for b in range(a)):
                used[cand] = True
                assignment.append(cand)
                if extend(a + 1):
                    return True
                assignment.pop()
                used[cand] = False
        return False

    return tuple(assignment) if extend(0) else None


def _positive_roots(cartan) -> List[Root]:
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for alpha in layer:
            for i in range(n):
                # alpha-string through alpha in direction alpha_i: p down, q up
                p = 0
                beta = list(alpha)
                while True:
                    beta[i] -= 1
                    if tuple(beta) in roots:
                        p += 1
                    else:
                        break
                pair = sum(alpha[k] * cartan[k][i] for k in range(n))
                if p - pair > 0:
                    up = list(alpha)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        nxt.add(up)
        roots |= nxt
        layer = list(nxt)
    return sorted(roots, key=lambda a: (sum(a), a))


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    if not isinstance(lie_type, LieType):
        lie_type = LieType(*lie_type)
    cartan = cartan_matrix(lie_type)
    roots = tuple(_positive_roots(cartan))
    top = max(sum(a) for a in roots)
    tops = [a for a in roots if sum(a) == top]
    assert len(tops) == 1
    theta = tops[0]
    lengths = _symmetrizer(cartan)
    rs = RootSystem(
        lie_type=lie_type,
        cartan=cartan,
        positive_roots=roots,
        highest_root=theta,
        comarks=(),
        lengths=lengths,
        _root_index={a: k for k, a in enumerate(roots)},
    )
    comarks = tuple(rs.pairing(rs.fundamental_weight(i), theta) for i in range(1, lie_type.rank + 1))
    object.__setattr__(rs, "comarks", comarks)
    return rs


def root_system(spec) -> RootSystem:
    """Convenience: accept a LieType, a ``(family, rank)`` pair or a string."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, str):
        spec = LieType.parse(spec)
    elif not isinstance(spec, LieType):
        spec = LieType(*spec)
    return build_root_system(spec)


def all_types(max_rank: int, families: str = FAMILIES):
    """Every admissible type with rank <= max_rank, in canonical order."""
    out = []
    for fam in families:
        for n in range(1, max_rank + 1):
            if admissible_rank(fam, n):
                out.append(LieType(fam, n))
    return out


def dominant_weights_up_to_dim(rs: RootSystem, max_dim: int) -> List[Weight]:
    """All dominant weights whose module has dimension <= max_dim."""
    out = []
    n = rs.rank
    # dim grows strictly in each coordinate, so a box search with pruning suffices
    bound = [0] * n
    for k in range(n):
        w = [0] * n
        while True:
            w[k] += 1
            if rs.weyl_dim(w) > max_dim:
                bound[k] = w[k] - 1
                break
    for w in itertools.product(*(range(b + 1) for b in bound)):
        if rs.weyl_dim(w) <= max_dim:
            out.append(tuple(w))
    return sorted(out, key=lambda w: (rs.weyl_dim(w), w))
