"""Exact arithmetic in the finite-field tower F_p <= F_q <= F_(q^m).

An element of F_(q^m) is a plain integer in ``[0, q**m)``: the integer packs
the little-endian base-q digit vector of coordinates with respect to the power
basis ``{1, y, ..., y^(m-1)}`` over F_q, and each F_q digit in ``[0, q)`` packs
the little-endian base-p residue vector with respect to ``{1, x, ..., x^(e-1)}``.
Packing is bijective, so the integer *is* the coordinate vector; use
:meth:`FieldTower.coords` / :meth:`FieldTower.from_coords` for the unpacked view.

Multiplication, inversion, Frobenius and norm run on log/antilog tables built
once per tower; addition is XOR when p == 2 and table-driven otherwise.
Towers are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import FieldConstructionError

Element = int  # index encoding of an element of F_(q^m)

_ODD_P_TABLE_LIMIT = 1 << 12  # odd characteristic needs an addition table


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class _SmallField:
    """Table-driven arithmetic for the middle field F_q = F_p[x]/(base_modulus)."""

    def __init__(self, p: int, e: int, modulus: Optional[tuple[int, ...]]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus  # little-endian over F_p, length e+1, monic; None iff e == 1
        if e == 1:
            add = [[(a + b) % p for b in range(p)] for a in range(p)]
            mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            add = [[self._add_raw(a, b) for b in range(self.q)] for a in range(self.q)]
            mul = [[self._mul_raw(a, b) for b in range(self.q)] for a in range(self.q)]
        self.add_t = add
        self.mul_t = mul
        self.neg_t = [self._neg_raw(a) for a in range(self.q)]
        inv = [0] * self.q
        for a in range(1, self.q):
            for b in range(1, self.q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise FieldConstructionError(
                    f"element {a} has no inverse: base modulus is not irreducible"
                )
        self.inv_t = inv

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _add_raw(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._pack([(x + y) % self.p for x, y in zip(da, db)])

    def _neg_raw(self, a: int) -> int:
        return self._pack([(-x) % self.p for x in self._digits(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = list(self.modulus)
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return self._pack(prod[:e])

    # digit-level API used throughout the package
    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def neg(self, a):
        return self.neg_t[a]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self.inv_t[a]


# ---------------------------------------------------------------------------
# polynomial helpers over F_q (coefficient lists of digits, little-endian)

def _poly_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mul(sf: _SmallField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = sf.add(out[i + j], sf.mul(x, y))
    return _poly_trim(out)


def _poly_divmod(sf: _SmallField, a: Sequence[int], b: Sequence[int]):
    a = list(a)
    _poly_trim(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = sf.inv(b[-1])
    db = len(b) - 1
    quot = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = sf.mul(a[-1], lead_inv)
        s = len(a) - 1 - db
        quot[s] = c
        for j, y in enumerate(b):
            a[s + j] = sf.sub(a[s + j], sf.mul(c, y))
        _poly_trim(a)
    return quot, a


def _poly_powmod(sf: _SmallField, base: Sequence[int], exp: int, mod: Sequence[int]) -> list[int]:
    result = [1]
    cur = list(_poly_divmod(sf, base, mod)[1])
    while exp:
        if exp & 1:
            result = _poly_divmod(sf, _poly_mul(sf, result, cur), mod)[1]
        cur = _poly_divmod(sf, _poly_mul(sf, cur, cur), mod)[1]
        exp >>= 1
    return result


def _find_factor(sf: _SmallField, poly: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Return a nontrivial monic factor of `poly` by trial division, or None."""
    deg = len(poly) - 1
    q = sf.q
    for d in range(1, deg // 2 + 1):
        # all monic candidates of degree d, low coefficients in counting order
        for tail in range(q**d):
            cand = []
            t = tail
            for _ in range(d):
                cand.append(t % q)
                t //= q
            cand.append(1)
            _, rem = _poly_divmod(sf, poly, cand)
            if not rem:
                return tuple(cand)
    return None


def _find_irreducible(sf: _SmallField, deg: int, want_primitive_y: bool = False) -> tuple[int, ...]:
    """Smallest-in-counting-order monic irreducible of given degree over F_q.

    With ``want_primitive_y`` the search continues until the class of y
    generates the multiplicative group (used so big default towers get a fast
    antilog construction); a plain irreducible is returned if none is found.
    """
    q = sf.q
    group = q**deg - 1
    rs = _prime_factors(group)
    first_irreducible = None
    for tail in range(1, q**deg):
        cand = []
        t = tail
        for _ in range(deg):
            cand.append(t % q)
            t //= q
        cand.append(1)
        if cand[0] == 0:
            continue  # divisible by y
        if _find_factor(sf, cand) is not None:
            continue
        if not want_primitive_y:
            return tuple(cand)
        if first_irreducible is None:
            first_irreducible = tuple(cand)
        y = [0, 1]
        if all(_poly_powmod(sf, y, group // r, cand) != [1] for r in rs):
            return tuple(cand)
    if first_irreducible is not None:
        return first_irreducible
    raise FieldConstructionError(f"no irreducible of degree {deg} over F_{q} found")


@dataclass(frozen=True)
class TowerParams:
    """Construction data for the tower F_p <= F_q <= F_(q^m).

    Moduli are little-endian coefficient tuples (constant term first) and
    monic; ``base_modulus`` has degree e over F_p, ``top_modulus`` degree m
    with coefficients given as F_q digits.  Either may be None to pick a
    verified default.
    """

    p: int
    e: int
    m: int
    base_modulus: Optional[tuple[int, ...]] = None
    top_modulus: Optional[tuple[int, ...]] = None


class FieldTower:
    """The tower F_p <= F_q <= F_(q^m) with table-driven exact arithmetic."""

    def __init__(self, params: TowerParams):
        p, e, m = params.p, params.e, params.m
        if not _is_prime(p):
            raise FieldConstructionError(f"p = {p} is not prime")
        if e < 1 or m < 1:
            raise FieldConstructionError("extension degrees must be >= 1")
        self.p, self.e, self.m = p, e, m
        self.q = p**e
        self.order = self.q**m
        if p != 2 and self.order > _ODD_P_TABLE_LIMIT:
            raise FieldConstructionError(
                f"odd-characteristic towers supported up to order {_ODD_P_TABLE_LIMIT}"
            )

        base = params.base_modulus
        if e == 1:
            # F_q = F_p; a degree-1 modulus is cosmetic, so only sanity-check it
            if base is not None:
                b = tuple(int(c) for c in base)
                if len(b) != 2 or b[-1] != 1:
                    raise FieldConstructionError("base_modulus must be monic of degree e")
            base = None
            self._sf = _SmallField(p, 1, None)
        else:
            if base is None:
                base = _find_irreducible(_SmallField(p, 1, None), e)
            base = tuple(int(c) for c in base)
            if len(base) != e + 1 or base[-1] != 1:
                raise FieldConstructionError("base_modulus must be monic of degree e")
            factor = _find_factor(_SmallField(p, 1, None), base)
            if factor is not None:
                raise FieldConstructionError(
                    f"base_modulus {list(base)} is reducible over F_{p}: "
                    f"factor {list(factor)} found"
                )
            self._sf = _SmallField(p, e, base)
        self.base_modulus = base

        top = params.top_modulus
        if top is None:
            top = _find_irreducible(self._sf, m, want_primitive_y=(self.order > 4096))
        top = tuple(int(c) for c in top)
        if len(top) != m + 1 or top[-1] != 1:
            raise FieldConstructionError("top_modulus must be monic of degree m")
        if any(not 0 <= c < self.q for c in top):
            raise FieldConstructionError("top_modulus coefficients must be F_q digits")
        if m > 1:
            factor = _find_factor(self._sf, top)
            if factor is not None:
                raise FieldConstructionError(
                    f"top_modulus {list(top)} is reducible over F_{self.q}: "
                    f"factor {list(factor)} found"
                )
        self.top_modulus = top
        self.params = TowerParams(p, e, m, base, top)

        self.zero: Element = 0
        self.one: Element = 1
        self._build_log_tables()
        self._add_np = None
        if p != 2 and self.order <= 1024:
            self._add_np = np.empty((self.order, self.order), dtype=np.int64)
            for a in range(self.order):
                for b in range(self.order):
                    self._add_np[a, b] = self._add_digitwise(a, b)
        self._exp_np = np.array(self._exp, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        for x in range(1, self.order):
            log[x] = self._log[x]
        self._log_np = log
        self._frob_matrices: dict[int, np.ndarray] = {}
        self._subfield_cache: dict[int, tuple[Element, ...]] = {}

    # -- construction internals ------------------------------------------------

    def _digits_of(self, x: int) -> list[int]:
        q = self.q
        x = int(x)
        out = []
        for _ in range(self.m):
            out.append(x % q)
            x //= q
        return out

    def _pack_digits(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.q + d
        return v

    def _add_digitwise(self, a: int, b: int) -> int:
        sf = self._sf
        da, db = self._digits_of(a), self._digits_of(b)
        return self._pack_digits([sf.add(x, y) for x, y in zip(da, db)])

    def _mul_raw(self, a: int, b: int) -> int:
        """Schoolbook polynomial product mod top_modulus; used for bootstrap only."""
        if a == 0 or b == 0:
            return 0
        sf, m = self._sf, self.m
        da, db = self._digits_of(a), self._digits_of(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = sf.add(prod[i + j], sf.mul(x, y))
        mod = self.top_modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = sf.sub(prod[i - m + j], sf.mul(c, mod[j]))
        return self._pack_digits(prod[:m])

    def _mul_by_y(self, a: int) -> int:
        """Shift-and-reduce: a * y, in the packed representation."""
        sf, m = self._sf, self.m
        ds = self._digits_of(a)
        lead = ds[m - 1]
        ds = [0] + ds[: m - 1]
        if lead:
            for j in range(m):
                ds[j] = sf.sub(ds[j], sf.mul(lead, self.top_modulus[j]))
        return self._pack_digits(ds)

    def _build_log_tables(self) -> None:
        n1 = self.order - 1
        self._group = n1
        if n1 == 1:
            self.generator: Element = 1
            self._exp, self._log = [1], [0, 0]
            return
        rs = _prime_factors(n1)

        def order_is_full(g: int) -> bool:
            for r in rs:
                acc, e2, base = 1, n1 // r, g
                while e2:
                    if e2 & 1:
                        acc = self._mul_raw(acc, base)
                    base = self._mul_raw(base, base)
                    e2 >>= 1
                if acc == 1:
                    return False
            return True

        y = self.q if self.m > 1 else None  # index of the class of y
        if y is not None and order_is_full(y):
            gen, step = y, self._mul_by_y
        else:
            gen = next((c for c in range(2, self.order) if order_is_full(c)), None)
            if gen is None:
                raise FieldConstructionError("no multiplicative generator found")
            step = lambda a, g=gen: self._mul_raw(a, g)
        exp = [1] * n1
        log = [0] * self.order
        val = 1
        for i in range(n1):
            exp[i] = val
            log[val] = i
            val = step(val)
        if val != 1:
            raise FieldConstructionError("generator order check failed")
        self.generator = gen
        self._exp, self._log = exp, log

    # -- scalar field operations -------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        if self.p == 2:
            return a ^ b
        return self._add_digitwise(a, b)

    def neg(self, a: Element) -> Element:
        if self.p == 2:
            return a
        sf = self._sf
        return self._pack_digits([sf.neg(d) for d in self._digits_of(a)])

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        if a == 0 or b == 0:
            return 0
        s = self._log[a] + self._log[b]
        if s >= self._group:
            s -= self._group
        return self._exp[s]

    def inv(self, a: Element) -> Element:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_(q^m)")
        return self._exp[(self._group - self._log[a]) % self._group]

    def inv_euclid(self, a: Element) -> Element:
        """Inverse via extended Euclid on the representing polynomial.

        Independent of the log tables; kept as the cross-check oracle for inv.
        """
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_(q^m)")
        sf = self._sf
        r0, r1 = list(self.top_modulus), self._digits_of(a)
        _poly_trim(r1)
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _poly_divmod(sf, r0, r1)
            qs = _poly_mul(sf, q, s1)
            new_s = [0] * max(len(s0), len(qs))
            for i in range(len(new_s)):
                x = s0[i] if i < len(s0) else 0
                y = qs[i] if i < len(qs) else 0
                new_s[i] = sf.sub(x, y)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_trim(new_s)
        if not r1:
            raise ZeroDivisionError("element not invertible: modulus reducible?")
        c = sf.inv(r1[0])
        out = [sf.mul(c, x) for x in s1]
        out += [0] * (self.m - len(out))
        return self._pack_digits(out[: self.m])

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inv(b))

    def pow_(self, a: Element, n: int) -> Element:
        if a == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise ZeroDivisionError("inverse of zero in F_(q^m)")
        return self._exp[(self._log[a] * n) % self._group]

    def frobenius(self, x: Element, i: int = 1) -> Element:
        """x^(q^i); i is reduced mod m since the Frobenius has order m."""
        if x == 0:
            return 0
        return self._exp[(self._log[x] * pow(self.q, i % self.m, self._group)) % self._group]

    def norm(self, x: Element) -> Element:
        """Field norm onto F_q: x^(1 + q + ... + q^(m-1))."""
        if x == 0:
            return 0
        s = self._group // (self.q - 1)
        out = self._exp[(self._log[x] * s) % self._group]
        assert out < self.q, "norm left the base field"
        return out

    def subfield_membership(self, x: Element, s: int) -> bool:
        """True iff x lies in F_(q^s); requires s | m."""
        if s < 1 or self.m % s != 0:
            raise ValueError(f"F_(q^{s}) is not a subfield of F_(q^{self.m})")
        return self.frobenius(x, s) == x

    def subfield_elements(self, s: int) -> tuple[Element, ...]:
        """All q^s elements of the subfield F_(q^s), ascending."""
        if s not in self._subfield_cache:
            self._subfield_cache[s] = tuple(
                x for x in range(self.order) if self.subfield_membership(x, s)
            )
        return self._subfield_cache[s]

    # -- coordinates and F_q-linear algebra ---------------------------------------

    def coords(self, x: Element) -> tuple[int, ...]:
        """Little-endian F_q coordinate digits of x in the power basis."""
        return tuple(self._digits_of(x))

    def from_coords(self, ds: Iterable[int]) -> Element:
        ds = list(ds)
        if len(ds) != self.m or any(not 0 <= d < self.q for d in ds):
            raise ValueError("expected m little-endian F_q digits")
        return self._pack_digits(ds)

    def coord_residues(self, digit: int) -> tuple[int, ...]:
        """Little-endian F_p residues of one F_q digit."""
        out = []
        for _ in range(self.e):
            out.append(digit % self.p)
            digit //= self.p
        return tuple(out)

    def lift_fq(self, digit: int) -> Element:
        """Embed an F_q digit as a constant of F_(q^m)."""
        if not 0 <= digit < self.q:
            raise ValueError("not an F_q digit")
        return digit

    # F_q digit arithmetic, for callers doing linear algebra over the base field
    def q_add(self, a: int, b: int) -> int:
        return self._sf.add(a, b)

    def q_sub(self, a: int, b: int) -> int:
        return self._sf.sub(a, b)

    def q_neg(self, a: int) -> int:
        return self._sf.neg(a)

    def q_mul(self, a: int, b: int) -> int:
        return self._sf.mul(a, b)

    def q_inv(self, a: int) -> int:
        return self._sf.inv(a)

    def fq_echelon(self, rows: list[list[int]]):
        """Reduced row echelon form of a digit matrix over F_q.

        Returns (pivot column list, rref rows without zero rows); deterministic.
        """
        sf = self._sf
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            s = sf.inv(rows[r][c])
            if s != 1:
                rows[r] = [sf.mul(s, v) for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [sf.sub(a, sf.mul(f, b)) for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return pivots, rows[:r]

    def fq_rank(self, vec: Sequence[Element]) -> int:
        """Rank weight: dimension over F_q of the span of the components."""
        if self.q == 2:
            slots = [0] * self.m
            rank = 0
            for v in vec:
                v = int(v)
                while v:
                    hb = v.bit_length() - 1
                    if slots[hb]:
                        v ^= slots[hb]
                    else:
                        slots[hb] = v
                        rank += 1
                        break
            return rank
        pivots, _ = self.fq_echelon([list(self._digits_of(v)) for v in vec])
        return len(pivots)

    def fq_span(self, gens: Sequence[Element]) -> tuple[Element, ...]:
        """All q^dim elements of the F_q-span of `gens`, deterministic order."""
        _, basis_rows = self.fq_echelon([list(self._digits_of(v)) for v in gens])
        basis = [self._pack_digits(r) for r in basis_rows]
        out = [0]
        for b in basis:
            scaled = [self.mul(self.lift_fq(c), b) for c in range(self.q)]
            out = [self.add(u, s) for s in scaled for u in out]
        return tuple(sorted(out))

    def frobenius_matrix(self, i: int = 1) -> np.ndarray:
        """m x m digit matrix over F_q realizing x -> x^(q^i) on coordinates."""
        i %= self.m
        if i not in self._frob_matrices:
            cols = []
            for j in range(self.m):
                basis_elt = self._pack_digits([1 if t == j else 0 for t in range(self.m)])
                cols.append(self._digits_of(self.frobenius(basis_elt, i)))
            self._frob_matrices[i] = np.array(cols, dtype=np.int64).T
        return self._frob_matrices[i]

    # -- vectorized operations (numpy arrays of element indices) ------------------

    def add_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add_np is None:
            raise NotImplementedError("vectorized addition needs order <= 1024 for odd p")
        return self._add_np[a, b]

    def mul_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(
            np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        )
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        s = (self._log_np[a[nz]] + self._log_np[b[nz]]) % self._group
        out[nz] = self._exp_np[s]
        return out

    def frob_many(self, x: np.ndarray, i: int = 1) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        out = np.zeros_like(x)
        nz = x != 0
        e = (self._log_np[x[nz]] * pow(self.q, i % self.m, self._group)) % self._group
        out[nz] = self._exp_np[e]
        return out

    def norm_many(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        out = np.zeros_like(x)
        nz = x != 0
        s = self._group // (self.q - 1) if self.q > 1 else 1
        out[nz] = self._exp_np[(self._log_np[x[nz]] * s) % self._group]
        return out

    # -- element universe ----------------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def random_element(self, rng: random.Random) -> Element:
        return rng.randrange(self.order)

    def random_nonzero(self, rng: random.Random) -> Element:
        return rng.randrange(1, self.order)

    # -- serialization ---------------------------------------------------------------

    def element_to_json(self, x: Element):
        """Little-endian coordinate array; digits are ints (e = 1) or residue arrays."""
        ds = self._digits_of(x)
        if self.e == 1:
            return ds
        return [list(self.coord_residues(d)) for d in ds]

    def element_from_json(self, obj) -> Element:
        if not isinstance(obj, (list, tuple)) or len(obj) != self.m:
            raise ValueError(f"element must be a length-{self.m} coordinate array")
        ds = []
        for c in obj:
            if isinstance(c, (list, tuple)):
                if len(c) != self.e:
                    raise ValueError(f"each F_q coordinate needs {self.e} residues")
                d = 0
                for r in reversed(c):
                    if not 0 <= int(r) < self.p:
                        raise ValueError("residue out of range")
                    d = d * self.p + int(r)
            else:
                d = int(c)
                if not 0 <= d < self.q:
                    raise ValueError("coordinate out of range")
            ds.append(d)
        return self._pack_digits(ds)

    def __repr__(self):
        return f"FieldTower(p={self.p}, e={self.e}, m={self.m}, order={self.order})"


def tower_build(params: TowerParams) -> FieldTower:
    """Build and verify a tower; moduli are checked, never assumed irreducible."""
    return FieldTower(params)


@functools.lru_cache(maxsize=None)
def default_tower(p: int, e: int, m: int) -> FieldTower:
    """Cached tower with verified default moduli for (p, e, m)."""
    return FieldTower(TowerParams(p, e, m))


def tower_from_json(obj: dict) -> FieldTower:
    """Build a tower from the field-spec JSON object."""
    base = obj.get("base_modulus")
    top = obj.get("top_modulus")
    return tower_build(
        TowerParams(
            p=int(obj["p"]),
            e=int(obj["e"]),
            m=int(obj["m"]),
            base_modulus=tuple(int(c) for c in base) if base else None,
            top_modulus=tuple(int(c) for c in top) if top else None,
        )
    )


def tower_to_json(tower: FieldTower) -> dict:
    out = {"p": tower.p, "e": tower.e, "m": tower.m, "top_modulus": list(tower.top_modulus)}
    if tower.base_modulus is not None:
        out["base_modulus"] = list(tower.base_modulus)
    return out
