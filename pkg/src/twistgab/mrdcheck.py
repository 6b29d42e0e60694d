"""MRD criteria, forbidden parameter sets, and guaranteed-MRD constructions.

The subspace criterion quantifies rank(V G^T) = k over one reduced
row-echelon representative per k-dimensional row space of F_q^(k x n): left
multiplication by an invertible matrix scales each maximal minor by a non-zero
factor, so row spaces are the right granularity and the search shrinks from
q^(kn) matrices to the Gaussian binomial count.

Forbidden sets certify the other direction: eta tuples on which some maximal
minor of the generator vanishes, materialized per k-subset of evaluation
points through the g_h^(t) scalars, or per subspace V through determinant
ratios.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

import numpy as np

from . import moore
from .budget import Budgets, check_budget, default_budgets
from .codes import CodeSpec, generator_matrix
from .errors import ConsistencyError, SpecInvariantError
from .fieldtower import Element, FieldTower
from .gcoeff import AnnihilatorCoeffs, g_coefficient


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(n: int, k: int, q: int, budget: Optional[int] = None) -> Iterator[np.ndarray]:
    """All RREF representatives of k-dimensional row spaces of F_q^(k x n).

    Yields k x n uint8 digit matrices, pivot sets in lexicographic order and
    free entries in counting order, so the stream is deterministic.
    """
    if not 0 < k <= n:
        raise ValueError("need 0 < k <= n")
    expected = gaussian_binomial(n, k, q)
    cap = (default_budgets().subspaces if budget is None else budget)
    check_budget("subspace", expected, cap)
    emitted = 0
    for pivots in combinations(range(n), k):
        free_pos = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivots
        ]
        base = np.zeros((k, n), dtype=np.uint8)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for vals in product(range(q), repeat=len(free_pos)):
            V = base.copy()
            for (i, j), v in zip(free_pos, vals):
                V[i, j] = v
            emitted += 1
            yield V
    if emitted != expected:
        raise ConsistencyError(
            f"subspace enumeration produced {emitted} representatives, "
            f"expected the Gaussian binomial {expected}"
        )


def _v_g_transpose(tower: FieldTower, V: np.ndarray, G: np.ndarray) -> np.ndarray:
    """V (digits over F_q) times G^T (elements), exactly."""
    k_v, n = V.shape
    k_g = G.shape[0]
    out = np.zeros((k_v, k_g), dtype=np.int64)
    for a in range(k_v):
        for b in range(k_g):
            acc = 0
            for j in range(n):
                d = int(V[a, j])
                if d:
                    acc = tower.add(acc, tower.mul(tower.lift_fq(d), int(G[b, j])))
            out[a, b] = acc
    return out


def matrix_is_mrd(tower: FieldTower, G: np.ndarray, budget: Optional[int] = None) -> bool:
    """Subspace criterion on an arbitrary full-rank generator matrix."""
    k, n = G.shape
    for V in enumerate_subspaces(n, k, tower.q, budget):
        if moore.rank_fqm(tower, _v_g_transpose(tower, V, G)) != k:
            return False
    return True


def is_mrd_subspace_criterion(spec: CodeSpec, budget: Optional[int] = None) -> bool:
    """True iff rank(V G^T) = k for every subspace representative V."""
    return matrix_is_mrd(spec.tower, generator_matrix(spec), budget)


@dataclass
class ForbiddenSet:
    """Forbidden eta tuples with one witness each.

    entries maps an eta tuple (length = arity) to the witness that produced
    it: a k-subset of evaluation-point indices or an RREF subspace matrix
    (as a nested list).  provenance names the defining set.
    """

    arity: int
    provenance: str
    entries: dict[tuple[Element, ...], object] = field(default_factory=dict)

    def values(self) -> set[tuple[Element, ...]]:
        return set(self.entries)

    def scalars(self) -> set[Element]:
        if self.arity != 1:
            raise ValueError("scalars() is only defined for arity-1 sets")
        return {v[0] for v in self.entries}

    def __contains__(self, eta) -> bool:
        if isinstance(eta, int):
            eta = (eta,)
        return tuple(eta) in self.entries

    def to_json_dict(self, tower: FieldTower) -> dict:
        ordered = sorted(self.entries)
        return {
            "arity": self.arity,
            "provenance": self.provenance,
            "size": len(ordered),
            "entries": [
                {
                    "value": [tower.element_to_json(v) for v in val],
                    "witness": self.entries[val]
                    if isinstance(self.entries[val], (list, tuple))
                    else self.entries[val],
                }
                for val in ordered
            ],
        }


def forbidden_eta_set_one_twist(
    tower: FieldTower,
    alpha: Sequence[Element],
    k: int,
    h: int,
    t: int,
    budget: Optional[int] = None,
) -> ForbiddenSet:
    """All eta for which some maximal minor of the one-twist generator vanishes.

    These are the ratios -|V M_k^(h,k+t)^T| / |V M_k^T| over all subspace
    representatives V; the denominator is a maximal minor of a Gabidulin
    generator and can never vanish (a zero denominator is reported as an
    internal-consistency failure).  The code is MRD iff eta avoids the set.
    """
    n = len(alpha)
    if tower.fq_rank(alpha) != n:
        raise SpecInvariantError("alpha components must be F_q-independent")
    if not 0 <= h <= k - 1 or not 0 <= t <= n - k - 1:
        raise SpecInvariantError("need 0 <= h <= k-1 and 0 <= t <= n-k-1")
    M = moore.moore_matrix(tower, alpha, k)
    Mht = moore.modified_moore_matrix(tower, alpha, k, h, k + t)
    out = ForbiddenSet(arity=1, provenance="one-twist-minor-ratio")
    for V in enumerate_subspaces(n, k, tower.q, budget):
        den = moore.det_fqm(tower, _v_g_transpose(tower, V, M))
        if den == 0:
            raise ConsistencyError(
                "Gabidulin maximal minor |V M_k^T| vanished; this contradicts "
                f"the MRD property, V = {V.tolist()}"
            )
        num = moore.det_fqm(tower, _v_g_transpose(tower, V, Mht))
        eta = tower.neg(tower.div(num, den))
        key = (eta,)
        if key not in out.entries:
            out.entries[key] = V.tolist()
    return out


def omega_one(
    tower: FieldTower,
    alpha: Sequence[Element],
    k: int,
    h: int,
    t: int,
    budget: Optional[int] = None,
) -> ForbiddenSet:
    """The set of -g_h^(t)(I) over all k-subsets I; eta^(-1) inside => not MRD."""
    n = len(alpha)
    if tower.fq_rank(alpha) != n:
        raise SpecInvariantError("alpha components must be F_q-independent")
    cap = default_budgets().subspaces if budget is None else budget
    check_budget("k-subset", _ncr(n, k), cap)
    out = ForbiddenSet(arity=1, provenance="omega1")
    for subset in combinations(range(n), k):
        coeffs = AnnihilatorCoeffs.from_span(tower, [alpha[i] for i in subset])
        val = tower.neg(g_coefficient(coeffs, h, t))
        key = (val,)
        if key not in out.entries:
            out.entries[key] = list(subset)
    return out


def omega_one_prime(
    tower: FieldTower,
    alpha: Sequence[Element],
    k: int,
    h: int,
    budget: Optional[int] = None,
) -> ForbiddenSet:
    """The t = 0 specialization, stored as the annihilator coefficients c_(k-h).

    Elementwise equal to omega_one(..., t=0) because g_h^(0) = -c_(k-h); the
    equality is asserted here as a permanent cross-check.
    """
    n = len(alpha)
    if tower.fq_rank(alpha) != n:
        raise SpecInvariantError("alpha components must be F_q-independent")
    cap = default_budgets().subspaces if budget is None else budget
    check_budget("k-subset", _ncr(n, k), cap)
    out = ForbiddenSet(arity=1, provenance="omega1-prime")
    for subset in combinations(range(n), k):
        coeffs = AnnihilatorCoeffs.from_span(tower, [alpha[i] for i in subset])
        key = (coeffs.at(k - h),)
        if key not in out.entries:
            out.entries[key] = list(subset)
    via_g = omega_one(tower, alpha, k, h, 0, budget)
    if via_g.values() != out.values():
        raise ConsistencyError("omega1(t=0) differs from omega1-prime")
    return out


def _ncr(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _vanishing_value(
    tower: FieldTower,
    alpha: Sequence[Element],
    subset: Sequence[int],
    k: int,
    h: int,
    twists: Sequence[tuple[int, Element]],
) -> Element:
    """1 + sum_j eta_j g_h^(t_j)(I); zero iff the minor at columns I vanishes."""
    coeffs = AnnihilatorCoeffs.from_span(tower, [alpha[i] for i in subset])
    acc = 1
    for tj, ej in twists:
        acc = tower.add(acc, tower.mul(ej, g_coefficient(coeffs, h, tj)))
    return acc


def omega_witness(spec: CodeSpec) -> Optional[tuple[int, ...]]:
    """First k-subset I (lexicographic) with 1 + sum_j eta_j g_h^(t_j)(I) = 0.

    A witness certifies a vanishing maximal minor, hence a non-MRD code; None
    proves nothing by itself (the theorems are one-directional).
    """
    if not spec.twists:
        return None
    t = spec.tower
    for subset in combinations(range(spec.n), spec.k):
        if _vanishing_value(t, spec.alpha, subset, spec.k, spec.h, spec.twists) == 0:
            return subset
    return None


def omega_two_witness(
    tower: FieldTower,
    alpha: Sequence[Element],
    k: int,
    h: int,
    t1: int,
    t2: int,
    eta1: Element,
    eta2: Element,
) -> Optional[tuple[int, ...]]:
    """Membership witness for the two-twist forbidden set."""
    spec = CodeSpec(tower, tuple(alpha), k, h, ((t1, eta1), (t2, eta2)))
    return omega_witness(spec)


def omega_ell_witness(
    tower: FieldTower,
    alpha: Sequence[Element],
    k: int,
    h: int,
    ts: Sequence[int],
    etas: Sequence[Element],
) -> Optional[tuple[int, ...]]:
    """Membership witness for the many-twist forbidden set."""
    spec = CodeSpec(tower, tuple(alpha), k, h, tuple(zip(ts, etas)))
    return omega_witness(spec)


def omega_two_materialize(
    tower: FieldTower,
    alpha: Sequence[Element],
    k: int,
    h: int,
    t1: int,
    t2: int,
    budget: Optional[int] = None,
) -> ForbiddenSet:
    """Exhaustive materialization of the two-twist forbidden set (tiny fields only)."""
    cap = default_budgets().subspaces if budget is None else budget
    check_budget("eta-pair", (tower.order - 1) ** 2, cap)
    out = ForbiddenSet(arity=2, provenance="omega2")
    for e1 in tower.nonzero_elements():
        for e2 in tower.nonzero_elements():
            wit = omega_two_witness(tower, alpha, k, h, t1, t2, e1, e2)
            if wit is not None:
                out.entries[(e1, e2)] = list(wit)
    return out


def mrd_membership_multi(
    spec: CodeSpec, budget: Optional[int] = None
) -> tuple[bool, Optional[list]]:
    """MRD test via |V M_k^T| + sum_j eta_j |V M_k^(h,k+t_j)^T| != 0 over all V.

    Returns (verdict, violating V as a nested list or None).  Agrees with the
    subspace criterion because the sum is the expansion of |V G^T| along the
    twisted row.
    """
    t = spec.tower
    M = moore.moore_matrix(t, spec.alpha, spec.k)
    mods = [
        moore.modified_moore_matrix(t, spec.alpha, spec.k, spec.h, spec.k + tj)
        for tj, _ in spec.twists
    ] if spec.twists else []
    for V in enumerate_subspaces(spec.n, spec.k, t.q, budget):
        acc = moore.det_fqm(t, _v_g_transpose(t, V, M))
        for (tj, ej), Mj in zip(spec.twists, mods):
            acc = t.add(acc, t.mul(ej, moore.det_fqm(t, _v_g_transpose(t, V, Mj))))
        if acc == 0:
            return False, V.tolist()
    return True, None


@dataclass(frozen=True)
class SubfieldChain:
    """Subfield data for the guaranteed-MRD constructions.

    Nested mode: degrees (s_1, ..., s_l) with q < q^(s_1) < ... < q^m a strict
    chain of subfields and eta_i in F_(q^(s_(i+1))) minus F_(q^(s_i)).
    Scalar mode: a single degree s, eta_1 outside F_(q^s), and multipliers
    b_i in F_(q^s)^* defining eta_i = b_i eta_1.
    """

    degrees: tuple[int, ...]
    etas: tuple[Element, ...]
    scalars: tuple[Element, ...] = ()

    @classmethod
    def nested(cls, degrees: Sequence[int], etas: Sequence[Element]) -> "SubfieldChain":
        return cls(tuple(degrees), tuple(etas))

    @classmethod
    def scalar_multiple(
        cls, s: int, eta1: Element, multipliers: Sequence[Element]
    ) -> "SubfieldChain":
        return cls((s,), (eta1,), tuple(multipliers))

    @property
    def mode(self) -> str:
        return "scalar" if self.scalars else "nested"


def construct_chain_mrd(
    tower: FieldTower,
    chain: SubfieldChain,
    alpha: Sequence[Element],
    k: int,
    h: int,
    ts: Sequence[int],
    budgets: Optional[Budgets] = None,
    verify: bool = True,
) -> CodeSpec:
    """Build a CodeSpec that the subfield constructions guarantee to be MRD.

    Checks every membership hypothesis (naming the failing level) and, when
    `verify` and the subspace count fits the budget, re-verifies MRD via
    mrd_membership_multi.
    """
    budgets = budgets or default_budgets()
    ts = tuple(int(x) for x in ts)
    n = len(alpha)
    degrees = chain.degrees
    s1 = degrees[0]
    if n > s1:
        raise SpecInvariantError(f"need n <= s_1, got n={n}, s_1={s1}")
    for lvl, s in enumerate(degrees, start=1):
        if not 1 < s < tower.m or tower.m % s != 0:
            raise SpecInvariantError(
                f"s_{lvl} = {s} is not a proper intermediate subfield degree of m = {tower.m}"
            )
    for i, a in enumerate(alpha):
        if not tower.subfield_membership(a, s1):
            raise SpecInvariantError(f"alpha[{i}] is not in F_(q^{s1})")
    if tower.fq_rank(alpha) != n:
        raise SpecInvariantError("alpha components must be F_q-independent")

    if chain.mode == "scalar":
        s = s1
        eta1 = chain.etas[0]
        if tower.subfield_membership(eta1, s):
            raise SpecInvariantError("eta_1 must lie outside F_(q^s) (level 1)")
        etas = [eta1]
        for i, b in enumerate(chain.scalars, start=2):
            if b == 0 or not tower.subfield_membership(b, s):
                raise SpecInvariantError(
                    f"multiplier b_{i} must be a non-zero element of F_(q^{s}) (level {i})"
                )
            etas.append(tower.mul(b, eta1))
    else:
        if len(chain.etas) != len(degrees):
            raise SpecInvariantError("need one eta per chain level")
        for i in range(len(degrees) - 1):
            if degrees[i + 1] % degrees[i] != 0 or degrees[i + 1] <= degrees[i]:
                raise SpecInvariantError(
                    f"degrees must form a strict divisor chain (level {i + 1})"
                )
        etas = []
        for i, eta in enumerate(chain.etas, start=1):
            s_i = degrees[i - 1]
            s_next = degrees[i] if i < len(degrees) else tower.m
            if not tower.subfield_membership(eta, s_next):
                raise SpecInvariantError(f"eta_{i} is not in F_(q^{s_next}) (level {i})")
            if tower.subfield_membership(eta, s_i):
                raise SpecInvariantError(f"eta_{i} lies in F_(q^{s_i}) (level {i})")
            etas.append(eta)

    if len(ts) != len(etas):
        raise SpecInvariantError("need one twist exponent per eta")
    spec = CodeSpec(tower, tuple(alpha), k, h, tuple(zip(ts, etas)))
    if verify and gaussian_binomial(n, k, tower.q) <= budgets.subspaces:
        ok, vio = mrd_membership_multi(spec, budgets.subspaces)
        if not ok:
            raise ConsistencyError(
                f"construction claimed MRD but V = {vio} violates the criterion"
            )
    return spec


def sum_product_free_test(
    tower: FieldTower,
    etas: Sequence[Element],
    s: int,
    t: int = 1,
    budget: Optional[int] = None,
) -> bool:
    """Exhaustive t-sum-product-freeness of `etas` over the subfield F_(q^s).

    For t = 1 (all the MRD constructions need) this checks that no non-trivial
    F_(q^s)-linear combination of the etas lands in F_(q^s)^*.  General t
    additionally ranges over products of up to t etas; the tuple count
    q^(s * #subsets) is budget-gated.
    """
    if tower.m % s != 0:
        raise ValueError("s must divide m")
    ell = len(etas)
    subsets = [
        ss for size in range(1, t + 1) for ss in combinations(range(ell), size)
    ]
    sub = tower.subfield_elements(s)
    cap = default_budgets().subspaces if budget is None else budget
    check_budget("sum-product tuple", len(sub) ** len(subsets), cap)
    sub_set = frozenset(sub)
    prods = []
    for ss in subsets:
        p = 1
        for i in ss:
            p = tower.mul(p, etas[i])
        prods.append(p)
    for coeff in product(sub, repeat=len(prods)):
        acc = 0
        for a, pr in zip(coeff, prods):
            acc = tower.add(acc, tower.mul(a, pr))
        if acc != 0 and acc in sub_set:
            return False
    return True


def norm_mrd_condition(spec: CodeSpec) -> bool:
    """Norm-based sufficient MRD condition for a single twist at t = 0.

    For h = 0 this is N(eta) != (-1)^(mk).  For h > 0 the condition quantifies
    over all non-zero coefficient pairs (f_0, f_h); since norms surject onto
    F_q^* it is checked over norm-value pairs.  True is sufficient for MRD,
    never necessary.
    """
    if spec.ell != 1 or spec.twists[0][0] != 0:
        raise SpecInvariantError("norm condition applies to a single twist with t = 0")
    t = spec.tower
    eta = spec.twists[0][1]
    sign = t.one if (t.m * spec.k) % 2 == 0 else t.neg(t.one)
    target = t.mul(sign, t.lift_fq(int(t.norm(eta))))
    norm_values = sorted({t.norm(x) for x in t.nonzero_elements()})
    if spec.h == 0:
        pairs = [(a, a) for a in norm_values]
    else:
        pairs = [(a, b) for a in norm_values for b in norm_values]
    for nf0, nfh in pairs:
        if t.lift_fq(int(nf0)) == t.mul(target, t.lift_fq(int(nfh))):
            return False
    return True


@dataclass
class HammingClassification:
    """Theorem-route Hamming verdict with its certificate.

    label is one of "MDS", "NMDS", "AMDS", "none".  vanishing_subset is the
    first k-subset with a vanishing minor (None for MDS); failing_superset is
    the (k+1)-subset all of whose k-subsets vanish (only for "none").
    """

    label: str
    vanishing_subset: Optional[tuple[int, ...]] = None
    failing_superset: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "vanishing_subset": list(self.vanishing_subset)
            if self.vanishing_subset is not None
            else None,
            "failing_superset": list(self.failing_superset)
            if self.failing_superset is not None
            else None,
        }


def hamming_class_via_omega(spec: CodeSpec, budget: Optional[int] = None) -> HammingClassification:
    """MDS/AMDS/NMDS classification through the forbidden-set theorems.

    MDS iff no k-subset minor vanishes.  Inside the forbidden set, AMDS iff
    every (k+1)-subset contains a k-subset with non-vanishing minor, upgraded
    to NMDS when h is 0 or k-1.  "none" means the Hamming distance is below
    n-k.  The verdict must match the column-rank conditions on the generator.
    """
    t = spec.tower
    n, k = spec.n, spec.k
    cap = default_budgets().subspaces if budget is None else budget
    check_budget("k-subset", _ncr(n, k) + _ncr(n, k + 1), cap)
    if not spec.twists:
        return HammingClassification(label="MDS")
    vanishing = {
        subset
        for subset in combinations(range(n), k)
        if _vanishing_value(t, spec.alpha, subset, k, spec.h, spec.twists) == 0
    }
    if not vanishing:
        return HammingClassification(label="MDS")
    first = min(vanishing)
    for sup in combinations(range(n), k + 1):
        if all(sub in vanishing for sub in combinations(sup, k)):
            return HammingClassification(
                label="none", vanishing_subset=first, failing_superset=sup
            )
    label = "NMDS" if spec.h in (0, k - 1) else "AMDS"
    return HammingClassification(label=label, vanishing_subset=first)
