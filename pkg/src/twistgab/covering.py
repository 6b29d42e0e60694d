"""Covering radii and deep holes in the rank metric.

The exhaustive covering radius walks the whole ambient space once, grouped by
syndrome: the distance from a vector to the code is the minimum rank weight in
its coset, so one weight per ambient vector suffices.  The q = 2 path is
vectorized over numpy int arrays (components are bit-packed coordinate rows);
other fields fall back to a scalar loop, which only ever runs on tiny towers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Optional, Sequence

import numpy as np

from . import moore
from .budget import Budgets, check_budget, default_budgets
from .codes import CodeSpec, encode, generator_matrix
from .errors import BudgetExceededError, ConsistencyError, SpecInvariantError
from .fieldtower import Element, FieldTower
from .mrdcheck import matrix_is_mrd


@dataclass
class CoveringReport:
    """Covering radius with per-number provenance and a deep-hole sample."""

    n: int
    k: int
    rho: Optional[int]
    rho_method: Optional[str]  # "exhaustive" or None when only bounds are known
    lower_bound: int
    upper_bound: int
    bounds_method: str  # "theorem-bound"
    deep_holes: list[tuple[Element, ...]] = field(default_factory=list)
    maximal_coset_count: Optional[int] = None
    coset_count: Optional[int] = None

    def __post_init__(self):
        if self.rho is not None:
            if not self.lower_bound <= self.rho <= self.upper_bound:
                raise ConsistencyError(
                    f"exhaustive rho = {self.rho} violates theorem bounds "
                    f"[{self.lower_bound}, {self.upper_bound}]"
                )

    def to_json_dict(self, tower: FieldTower) -> dict:
        def tagged(value, method):
            return {"value": value, "method": method}

        return {
            "n": self.n,
            "k": self.k,
            "rho": tagged(self.rho, self.rho_method) if self.rho is not None else None,
            "lower_bound": tagged(self.lower_bound, self.bounds_method),
            "upper_bound": tagged(self.upper_bound, self.bounds_method),
            "deep_holes": [
                [tower.element_to_json(c) for c in u] for u in self.deep_holes
            ],
            "maximal_coset_count": self.maximal_coset_count,
            "coset_count": self.coset_count,
        }


def _all_codewords(spec: CodeSpec) -> list[tuple[int, ...]]:
    t = spec.tower
    G = generator_matrix(spec)
    rows = [[int(x) for x in G[i]] for i in range(spec.k)]
    words = []
    for msg in iproduct(range(t.order), repeat=spec.k):
        word = [0] * spec.n
        for fi, row in zip(msg, rows):
            if fi:
                word = [t.add(w, t.mul(fi, c)) for w, c in zip(word, row)]
        words.append(tuple(word))
    return words


def contains(spec: CodeSpec, u: Sequence[Element]) -> bool:
    """True iff u lies in the code's row space."""
    t = spec.tower
    G = generator_matrix(spec)
    stacked = np.vstack([G, np.asarray(u, dtype=np.int64)])
    return moore.rank_fqm(t, stacked) == spec.k


def distance_to_code(u: Sequence[Element], spec: CodeSpec, budget: Optional[int] = None) -> int:
    """Exact min over all q^(mk) codewords of the rank weight of u - c."""
    t = spec.tower
    cap = default_budgets().codewords if budget is None else budget
    check_budget("codeword", t.order**spec.k, cap)
    u = [int(x) for x in u]
    best = spec.n
    for c in _all_codewords(spec):
        diff = [t.sub(a, b) for a, b in zip(u, c)]
        w = t.fq_rank(diff)
        if w < best:
            best = w
            if best == 0:
                break
    return best


def covering_bounds(spec: CodeSpec) -> tuple[int, int]:
    """Theorem bounds on the covering radius.

    Contiguous twist exponents (0, 1, ..., l-1) give
    n-k-l+1 <= rho <= n-k (exact n-k for a single twist at 0); anything else
    gets the generic 0 <= rho <= n-k.
    """
    n, k = spec.n, spec.k
    ts = tuple(tj for tj, _ in spec.twists)
    if ts and ts == tuple(range(len(ts))):
        return max(0, n - k - len(ts) + 1), n - k
    return 0, n - k


def _scan_gf2(spec: CodeSpec) -> tuple[dict, np.ndarray, np.ndarray]:
    """Vectorized ambient scan for q = 2: per-vector syndrome and rank weight."""
    t = spec.tower
    n, k = spec.n, spec.k
    N = t.order
    total = N**n
    G = generator_matrix(spec)
    H = moore.nullspace_fqm(t, G)
    r = H.shape[0]
    idx = np.arange(total, dtype=np.int64)
    comps = [(idx // (N**j)) % N for j in range(n)]
    synd = np.zeros(total, dtype=np.int64)
    for i in range(r):
        s_i = np.zeros(total, dtype=np.int64)
        for j in range(n):
            s_i ^= t.mul_many(np.int64(int(H[i, j])), comps[j])
        synd = synd * N + s_i
    m = t.m
    slots = [np.zeros(total, dtype=np.int64) for _ in range(m)]
    rank = np.zeros(total, dtype=np.int64)
    for col in comps:
        v = col.copy()
        for hb in range(m - 1, -1, -1):
            bit = ((v >> hb) & 1).astype(bool)
            if not bit.any():
                continue
            have = bit & (slots[hb] != 0)
            v = np.where(have, v ^ slots[hb], v)
            place = bit & (slots[hb] == 0) & (((v >> hb) & 1).astype(bool))
            slots[hb][place] = v[place]
            rank[place] += 1
            v = np.where(place, 0, v)
    return {}, synd, rank


def _scan_generic(spec: CodeSpec) -> tuple[dict, np.ndarray, np.ndarray]:
    """Scalar ambient scan; used for odd characteristic or q > 2."""
    t = spec.tower
    n = spec.n
    N = t.order
    total = N**n
    G = generator_matrix(spec)
    H = moore.nullspace_fqm(t, G)
    r = H.shape[0]
    hrows = [[int(x) for x in H[i]] for i in range(r)]
    synd = np.zeros(total, dtype=np.int64)
    rank = np.zeros(total, dtype=np.int64)
    for u_idx in range(total):
        x = u_idx
        comps = []
        for _ in range(n):
            comps.append(x % N)
            x //= N
        s = 0
        for row in hrows:
            acc = 0
            for hj, uj in zip(row, comps):
                acc = t.add(acc, t.mul(hj, uj))
            s = s * N + acc
        synd[u_idx] = s
        rank[u_idx] = t.fq_rank(comps)
    return {}, synd, rank


def _unpack_vector(order: int, n: int, u_idx: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(u_idx % order)
        u_idx //= order
    return tuple(out)


def covering_radius_exhaustive(
    spec: CodeSpec,
    budgets: Optional[Budgets] = None,
    max_witnesses: int = 16,
) -> CoveringReport:
    """Exact covering radius by one ambient pass grouped by syndrome.

    Reported deep holes are coset leaders (minimum-weight vectors of maximal
    cosets) in ascending vector order, capped at `max_witnesses`.  If the
    ambient space exceeds the budget the report carries theorem bounds only.
    """
    budgets = budgets or default_budgets()
    t = spec.tower
    n, k = spec.n, spec.k
    lo, hi = covering_bounds(spec)
    total = t.order**n
    if total > budgets.ambient:
        return CoveringReport(
            n=n, k=k, rho=None, rho_method=None,
            lower_bound=lo, upper_bound=hi, bounds_method="theorem-bound",
        )
    scan = _scan_gf2 if t.q == 2 else _scan_generic
    _, synd, rank = scan(spec)
    coset_count = t.order ** (n - k)
    coset_min = np.full(coset_count, n + 1, dtype=np.int64)
    # syndromes from nullspace rows are arbitrary field elements packed N-ary;
    # compress to dense ids for the minimum table
    uniq, dense = np.unique(synd, return_inverse=True)
    if len(uniq) != coset_count:
        raise ConsistencyError("syndrome count disagrees with q^(m(n-k))")
    np.minimum.at(coset_min, dense, rank)
    rho = int(coset_min.max())
    # one representative per maximal coset: the first minimum-weight vector,
    # capped to keep reports small
    is_leader = (rank == coset_min[dense]) & (coset_min[dense] == rho)
    deep_holes = []
    seen = set()
    for i in np.flatnonzero(is_leader):
        s = int(dense[i])
        if s in seen:
            continue
        seen.add(s)
        deep_holes.append(_unpack_vector(t.order, n, int(i)))
        if len(deep_holes) >= max_witnesses:
            break
    return CoveringReport(
        n=n, k=k, rho=rho, rho_method="exhaustive",
        lower_bound=lo, upper_bound=hi, bounds_method="theorem-bound",
        deep_holes=deep_holes,
        maximal_coset_count=int((coset_min == rho).sum()),
        coset_count=coset_count,
    )


def is_deep_hole(
    u: Sequence[Element],
    spec: CodeSpec,
    report: Optional[CoveringReport] = None,
    budgets: Optional[Budgets] = None,
) -> bool:
    """True iff the distance from u to the code equals the covering radius."""
    budgets = budgets or default_budgets()
    if report is None or report.rho is None:
        report = covering_radius_exhaustive(spec, budgets)
    if report.rho is None:
        raise BudgetExceededError(
            "covering radius unknown: ambient space too large for brute force"
        )
    return distance_to_code(u, spec, budgets.codewords) == report.rho


def deep_hole_via_extension(
    u: Sequence[Element], spec: CodeSpec, budget: Optional[int] = None
) -> bool:
    """Deep-hole test for the single-twist t = 0 family via code extension.

    Stacks u under the generator and tests the (k+1)-row matrix for MRD; by
    the extension theorem this is equivalent to u being a deep hole.
    """
    if spec.ell != 1 or spec.twists[0][0] != 0:
        raise SpecInvariantError("extension test applies to a single twist with t = 0")
    t = spec.tower
    if contains(spec, u):
        raise SpecInvariantError("u lies in the code; the extension would be degenerate")
    G = generator_matrix(spec)
    stacked = np.vstack([G, np.asarray(u, dtype=np.int64)])
    return matrix_is_mrd(t, stacked, budget)


def deep_hole_family(
    spec: CodeSpec,
    g: Element,
    flavor: str,
    f_coeffs: Sequence[Element] = (),
) -> np.ndarray:
    """Evaluation vector of g * x^[k] + f(x) (or g * x^[h] + f(x)), f in the twist family.

    Both families are guaranteed deep holes of the single-twist t = 0 code;
    flavor is "x^[k]" or "x^[h]".
    """
    if spec.ell != 1 or spec.twists[0][0] != 0:
        raise SpecInvariantError("deep-hole families are defined for one twist with t = 0")
    if g == 0:
        raise SpecInvariantError("g must be non-zero (g = 0 would land in the code)")
    if flavor not in ("x^[k]", "x^[h]", "k", "h"):
        raise ValueError("flavor must be 'x^[k]' or 'x^[h]'")
    t = spec.tower
    f_coeffs = list(f_coeffs) or [0] * spec.k
    if len(f_coeffs) != spec.k:
        raise ValueError(f"f needs {spec.k} coefficients")
    exponent = spec.k if flavor in ("x^[k]", "k") else spec.h
    a = np.asarray(spec.alpha, dtype=np.int64)
    u = t.mul_many(np.int64(int(g)), t.frob_many(a, exponent))
    return t.add_many(u, encode(spec, f_coeffs))
