"""PBW filtration V(lam)_s = U(n-)_s v_lam and its Hilbert-Poincare polynomials."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import InconsistentFiltration, OracleCapExceeded
from .hwmod import DEFAULT_CAP, HWModule, all_root_operators, construct_module
from .rootsys import Root, RootSystem, Weight
from .sparse import Echelon, SparseOperator, Vector


@dataclass(frozen=True)
class PoincarePolynomial:
    """Integer polynomial stored as a coefficient tuple (index = power of q)."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q):
        return sum(c * q ** k for k, c in enumerate(self.coeffs))

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PoincarePolynomial(tuple(x + y for x, y in zip(a, b)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1 and sum(self.coeffs) == 1

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"


@dataclass
class GradedCharacter:
    per_weight: Dict[Weight, PoincarePolynomial] = field(default_factory=dict)

    def total(self) -> PoincarePolynomial:
        out = PoincarePolynomial(())
        for p in self.per_weight.values():
            out = out + p
        return out

    def __getitem__(self, weight) -> PoincarePolynomial:
        return self.per_weight[tuple(weight)]


def pbw_filtration(module: HWModule,
                   operators: Optional[Mapping[Root, SparseOperator]] = None,
                   ) -> Tuple[PoincarePolynomial, GradedCharacter]:
    """Layer dimensions of the PBW filtration, globally and per weight.

    Each step applies every f_alpha to a set of representatives of the
    newest layer only, since f_alpha V_{s-1} is already inside V_s.
    """
    if operators is None:
        operators = all_root_operators(module)
    ops = [(alpha, operators[alpha]) for alpha in module.root_system.positive_roots]
    rs = module.root_system
    shifts = {alpha: tuple(-c for c in rs.root_to_weight(alpha)) for alpha, _ in ops}

    echelons: Dict[Weight, Echelon] = {
        w: Echelon(capacity=ws.dimension) for w, ws in module.weight_spaces.items()
    }
    lam = module.highest_weight
    echelons[lam].insert(module.highest_vector())
    counts: Dict[Weight, List[int]] = {lam: [1]}
    coeffs = [1]
    layer: List[Tuple[Weight, Vector]] = [(lam, module.highest_vector())]
    filled = 1
    step = 0
    while filled < module.total_dim:
        step += 1
        new_layer = []
        for tau, vec in layer:
            for alpha, op in ops:
                target = tuple(a + b for a, b in zip(tau, shifts[alpha]))
                ech = echelons.get(target)
                if ech is None or ech.full():
                    continue
                image = op.apply(vec)
                if not image:
                    continue
                row = ech.insert(image)
                if row is not None:
                    new_layer.append((target, row))
                    c = counts.setdefault(target, [])
                    c.extend([0] * (step + 1 - len(c)))
                    c[step] += 1
        if not new_layer:
            raise InconsistentFiltration(
                f"filtration stalled at step {step} with {filled} of {module.total_dim} dimensions")
        coeffs.append(len(new_layer))
        filled += len(new_layer)
        layer = new_layer

    gc = GradedCharacter({w: PoincarePolynomial(tuple(counts.get(w, ())))
                          for w in module.weight_spaces})
    return PoincarePolynomial(tuple(coeffs)), gc


def brute_force_filtration(module: HWModule, max_dim: int = 40,
                           operators: Optional[Mapping[Root, SparseOperator]] = None,
                           ) -> PoincarePolynomial:
    """Span every product f_{beta_1} ... f_{beta_k} v_lam with k = 0, 1, 2, ...

    Products run over multisets of positive roots in a fixed order, and one
    global echelon form is used (no weight splitting, no layer shortcut).
    """
    if module.total_dim > max_dim:
        raise OracleCapExceeded(max_dim, module.total_dim)
    if operators is None:
        operators = all_root_operators(module)
    ops = [operators[a] for a in module.root_system.positive_roots]
    ech = Echelon()
    ech.insert(module.highest_vector())
    coeffs = [1]
    # frontier: (index of the last operator applied, vector); next factors use indices <= that
    frontier = [(len(ops) - 1, module.highest_vector())]
    while ech.rank < module.total_dim:
        before = ech.rank
        nxt = []
        for last, vec in frontier:
            for k in range(last + 1):
                image = ops[k].apply(vec)
                if image:
                    nxt.append((k, image))
                    ech.insert(image)
        if not nxt:
            raise InconsistentFiltration("products of root vectors vanish before spanning V(lam)")
        coeffs.append(ech.rank - before)
        frontier = nxt
    return PoincarePolynomial(tuple(coeffs))


def lowest_weight_degree(module: HWModule, gc: GradedCharacter) -> int:
    """Exponent s with p_{lam, w0 lam}(q) = q^s; must equal deg p_lam."""
    p = gc[module.lowest_weight]
    if not p.is_monomial():
        raise InconsistentFiltration(f"lowest weight polynomial {p} is not a power of q")
    s = p.degree
    total = gc.total()
    if s != total.degree:
        raise InconsistentFiltration(f"lowest weight reached in degree {s}, but deg p = {total.degree}")
    return s


@dataclass(frozen=True)
class LinearTermReport:
    linear_coefficient: int
    orbit_reading: int  # dim n- minus dim ker(x -> x.v_lam)
    representation_reading: int  # dim n- minus dim ker(n- -> End V)
    nonzero_pairings: int  # #{alpha > 0 : <lam, alpha^vee> != 0}
    dim_n_minus: int

    @property
    def matches(self) -> List[str]:
        out = []
        if self.linear_coefficient == self.orbit_reading:
            out.append("orbit")
        if self.linear_coefficient == self.representation_reading:
            out.append("representation")
        return out

    def as_dict(self):
        return {
            "linear_coefficient": self.linear_coefficient,
            "orbit_reading": self.orbit_reading,
            "representation_reading": self.representation_reading,
            "nonzero_pairings": self.nonzero_pairings,
            "dim_n_minus": self.dim_n_minus,
            "matches": self.matches,
        }


def linear_coefficient_check(module: HWModule, p: PoincarePolynomial) -> LinearTermReport:
    """Compare the q-coefficient with both readings of the kernel formula."""
    rs = module.root_system
    ops = all_root_operators(module)
    v = module.highest_vector()
    orbit_kernel = sum(1 for a in rs.positive_roots if not ops[a].apply(v))
    # distinct roots give operators of distinct weight shift, so the kernel of
    # n- -> End(V) is spanned by the root vectors that act as zero
    rep_kernel = sum(1 for a in rs.positive_roots if ops[a].is_zero())
    n_minus = len(rs.positive_roots)
    return LinearTermReport(
        linear_coefficient=p.coeffs[1] if len(p.coeffs) > 1 else 0,
        orbit_reading=n_minus - orbit_kernel,
        representation_reading=n_minus - rep_kernel,
        nonzero_pairings=sum(1 for a in rs.positive_roots if rs.pairing(module.highest_weight, a)),
        dim_n_minus=n_minus,
    )


def pbw_degree(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    module = construct_module(rs, lam, cap=cap)
    return pbw_filtration(module)[0].degree


@dataclass(frozen=True)
class AdditivityResult:
    lam: Weight
    mu: Weight
    degree_lam: int
    degree_mu: int
    degree_sum: int

    @property
    def holds(self) -> bool:
        return self.degree_sum == self.degree_lam + self.degree_mu


def additivity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
               cap: int = DEFAULT_CAP) -> AdditivityResult:
    lam, mu = tuple(lam), tuple(mu)
    total = tuple(a + b for a, b in zip(lam, mu))
    # check the largest module first so an over-cap request fails fast
    d_sum = pbw_degree(rs, total, cap)
    return AdditivityResult(lam, mu, pbw_degree(rs, lam, cap), pbw_degree(rs, mu, cap), d_sum)


def additivity_check(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                     cap: int = DEFAULT_CAP) -> bool:
    return additivity(rs, lam, mu, cap).holds
