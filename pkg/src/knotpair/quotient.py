"""
The quotient ring Z[t, t^-1]/(Delta).

Residues keep an arbitrary Laurent representative; two residues are equal
when Delta divides the difference.  For a primitive Delta the ring embeds in
Q[t]/(Delta), and the rational coordinates in the basis 1, t, ..., t^(d-1)
give a canonical fingerprint used for hashing and for the integer solves
behind inversion and division.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import NamedTuple

from sympy import factorint

from .laurent import LaurentPoly, ONE, ZERO, T
from .linalg import det, int_solve

__all__ = [
    "Modulus", "QElem", "Quotient", "Undetermined", "ModulusMismatch",
    "ZERO_CLASS", "UNIT", "ZERO_DIVISOR", "REGULAR_NONUNIT",
]

ZERO_CLASS = "zero"
UNIT = "unit"
ZERO_DIVISOR = "zero_divisor"
REGULAR_NONUNIT = "regular_nonunit"


class Undetermined(ArithmeticError):
    """An integer solve hit the window cap without a decision."""

    def __init__(self, message, window):
        super().__init__(f"{message} (undetermined at window {window})")
        self.window = window


class ModulusMismatch(ValueError):
    pass


class Quotient(NamedTuple):
    value: "QElem"
    unique: bool


def _poly_rat_gcd_degree(a, b):
    """Degree of gcd(a, b) over Q for ordinary polynomials as coefficient lists."""
    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    a = trim([Fraction(x) for x in a])
    b = trim([Fraction(x) for x in b])
    while b:
        r = a[:]
        while len(r) >= len(b) and r:
            q = r[-1] / b[-1]
            off = len(r) - len(b)
            for i, c in enumerate(b):
                r[off + i] -= q * c
            r = trim(r)
        a, b = b, r
    return len(a) - 1


def _fp_strip(p, prime):
    p = [x % prime for x in p]
    while p and p[-1] == 0:
        p.pop()
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _fp_gcd_degree(a, b, prime):
    """Degree of gcd in F_p[t, t^-1] (t-power factors stripped); -1 if both vanish."""
    a, b = _fp_strip(a, prime), _fp_strip(b, prime)
    while b:
        inv = pow(b[-1], -1, prime)
        r = a[:]
        while len(r) >= len(b):
            q = r[-1] * inv % prime
            off = len(r) - len(b)
            for i, c in enumerate(b):
                r[off + i] = (r[off + i] - q * c) % prime
            while r and r[-1] == 0:
                r.pop()
        a, b = b, _fp_strip(r, prime)
    return len(a) - 1


def resultant(a, b):
    """Sylvester resultant of two integer coefficient lists (ascending)."""
    m, n = len(a) - 1, len(b) - 1
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + a[::-1] + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b[::-1] + [0] * (size - n - 1 - i))
    return det(rows)


def _dense(p):
    """Coefficient list of t^(-min_exp) * p."""
    lo = p.min_exp()
    return [p.coeff(lo + i) for i in range(p.span() + 1)]


@dataclass(frozen=True, eq=False)
class Modulus:
    """
    A normalized Delta.  ``knot=True`` asserts Delta(1) = +-1.  The
    conjugation twist u satisfies u * bar(Delta) = Delta; residues can be
    conjugated only when it exists.
    """

    delta: LaurentPoly
    knot: bool = True
    window_cap_factor: int = 8
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        d = LaurentPoly.coerce(self.delta)
        if d.is_zero():
            raise ValueError("Delta must be nonzero")
        d, _ = d.normalize()
        object.__setattr__(self, "delta", d)
        if d.content() != 1:
            raise ValueError(f"Delta = {d} is not primitive")
        if self.knot and d.evaluate(1) not in (1, -1):
            raise ValueError(f"Delta = {d} has Delta(1) != +-1; pass knot=False for non-knot moduli")
        self._cache["tpow"] = {}

    @classmethod
    def of(cls, delta, knot=True):
        return cls(LaurentPoly.coerce(delta), knot=knot)

    @property
    def degree(self):
        return self.delta.max_exp()

    @property
    def conj_twist(self):
        """u = +-t^d with u * bar(Delta) = Delta, or None."""
        if "twist" not in self._cache:
            d = self.delta
            q = d.divexact(d.bar())
            self._cache["twist"] = q if q is not None and q.is_unit() else None
        return self._cache["twist"]

    @property
    def symmetric(self):
        """
        The associate of Delta fixed by the involution, t^(-d/2) Delta,
        or None when Delta is not palindromic of even degree.
        """
        tw = self.conj_twist
        if tw is None or self.degree % 2 or tw != T ** self.degree:
            return None
        return self.delta.shift(-(self.degree // 2))

    @property
    def is_monic(self):
        """Leading and trailing coefficients are +-1 (Lambda/(Delta) is free of rank d)."""
        d = self.delta
        return abs(d.coeff(0)) == 1 and abs(d.coeff(self.degree)) == 1

    def __eq__(self, other):
        return isinstance(other, Modulus) and self.delta == other.delta

    def __hash__(self):
        return hash(self.delta)

    def __str__(self):
        return str(self.delta)

    def __repr__(self):
        return f"Modulus('{self.delta}')"

    def __call__(self, x):
        """Coerce ``x`` into a residue of this ring."""
        if isinstance(x, QElem):
            if x.modulus != self:
                raise ModulusMismatch(f"{x.modulus} vs {self}")
            return x
        return QElem(LaurentPoly.coerce(x), self)

    def zero(self):
        return QElem(ZERO, self)

    def one(self):
        return QElem(ONE, self)

    def t(self):
        return QElem(T, self)

    # -- rational coordinates -------------------------------------------

    def _tpow(self, k):
        cache = self._cache["tpow"]
        if k in cache:
            return cache[k]
        d = self.degree
        c = [Fraction(self.delta.coeff(i)) for i in range(d + 1)]
        if not cache:
            cache[0] = tuple(Fraction(int(i == 0)) for i in range(d))
        if k > 0:
            j = max(e for e in cache if e <= k)
            v = list(cache[j])
            while j < k:
                top = v[-1]
                v = [Fraction(0)] + v[:-1]
                if top:
                    for i in range(d):
                        v[i] -= top * c[i] / c[d]
                j += 1
                cache[j] = tuple(v)
        else:
            j = min(e for e in cache if e >= k)
            v = list(cache[j])
            while j > k:
                low = v[0]
                v = v[1:] + [Fraction(0)]
                if low:
                    # t^-1 = -(c1 + c2 t + ... + cd t^(d-1)) / c0
                    for i in range(d):
                        v[i] -= low * c[i + 1] / c[0]
                j -= 1
                cache[j] = tuple(v)
        return cache[k]

    def coords(self, p):
        """Coordinates of p mod Delta in Q[t]/(Delta), basis 1, ..., t^(d-1)."""
        d = self.degree
        acc = [Fraction(0)] * d
        for k, v in p.items():
            for i, x in enumerate(self._tpow(k)):
                if x:
                    acc[i] += v * x
        return tuple(acc)

    def from_coords(self, coords, low=0):
        """Integral Laurent polynomial t^low * sum c_i t^i, or None if non-integral."""
        if any(Fraction(c).denominator != 1 for c in coords):
            return None
        return LaurentPoly({low + i: int(c) for i, c in enumerate(coords)})

    def mul_coords(self, a, b):
        d = self.degree
        acc = [Fraction(0)] * d
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    for k, z in enumerate(self._tpow(i + j)):
                        if z:
                            acc[k] += x * y * z
        return tuple(acc)

    def is_zero_divisor(self, p):
        """Nonzero p shares a nonconstant factor with Delta over Q."""
        if p.is_zero() or self.degree == 0:
            return False
        return _poly_rat_gcd_degree(_dense(p), _dense(self.delta)) > 0

    def is_unit_class(self, p):
        """
        Whether p is invertible mod Delta: (Delta, p) is the whole ring iff it
        survives reduction mod every prime dividing the resultant.
        """
        if self.degree == 0:
            return True
        if p.is_zero() or self.is_zero_divisor(p):
            return False
        a, b = _dense(self.delta), _dense(p)
        r = resultant(a, b)
        if r in (1, -1):
            return True
        for prime in factorint(abs(r)):
            if _fp_gcd_degree(a, b, prime) != 0:
                return False
        return True

    # -- windowed integer solves -------------------------------------------

    def windows(self, start=None, cap=None):
        d = max(self.degree, 1)
        w = start if start is not None else 2 * d
        cap = cap if cap is not None else self.window_cap_factor * d
        while True:
            yield min(w, cap)
            if w >= cap:
                return
            w *= 2

    def solve_linear(self, factors, targets, window=None, cap=None):
        """
        Find x in Lambda with factors[k] * x = targets[k] mod Delta for all k.

        Returns ``Quotient(x, unique)`` or None when no solution exists.
        Raises :class:`Undetermined` when rational solutions exist but no
        integral one was found inside the window cap.
        """
        d = self.degree
        factors = [LaurentPoly.coerce(f) for f in factors]
        targets = [LaurentPoly.coerce(g) for g in targets]
        if d == 0:
            return Quotient(QElem(ZERO, self), True)
        fco = [self.coords(f) for f in factors]
        tco = [self.coords(g) for g in targets]
        # rational feasibility and uniqueness with x ranging over Q[t]/(Delta)
        basis_cols = [[x for fc in fco for x in self.mul_coords(fc, self._tpow(e))] for e in range(d)]
        rhs = [x for tc in tco for x in tc]
        rank, consistent = _rat_rank(basis_cols, rhs)
        if not consistent:
            return None
        unique = rank == d
        last = None
        for w in self.windows(window, cap):
            last = w
            cols = []
            for e in range(-w, w + 1):
                te = self._tpow(e)
                cols.append([x for fc in fco for x in self.mul_coords(fc, te)])
            rows = len(rhs)
            mat, vec = [], []
            for r in range(rows):
                den = 1
                for col in cols:
                    den = lcm(den, col[r].denominator)
                den = lcm(den, rhs[r].denominator)
                mat.append([int(col[r] * den) for col in cols])
                vec.append(int(rhs[r] * den))
            x = int_solve(mat, vec)
            if x is not None:
                sol = LaurentPoly({e: c for e, c in zip(range(-w, w + 1), x)})
                return Quotient(QElem(sol, self), unique)
            if self.is_monic and w >= d:
                # Lambda/(Delta) is free on 1..t^(d-1): the window was complete
                return None
        raise Undetermined("no integral solution found", last)

    # -- representatives ----------------------------------------------------

    def compact_reps(self, p, window=None):
        """All integral representatives of p's class with support in some [lo, lo+d-1]."""
        d = self.degree
        if d == 0:
            return [ZERO]
        w = window if window is not None else 2 * d
        c = self.coords(p)
        if not any(c):
            return [ZERO]
        p = LaurentPoly.coerce(p)
        out = []
        for lo in range(min(-w, p.min_exp()), max(w - d + 2, p.max_exp() + 1)):
            shifted = self.mul_coords(c, self._tpow(-lo))
            rep = self.from_coords(shifted, lo)
            if rep is not None:
                out.append(rep)
        return out

    def minimal_rep(self, p, window=None):
        """Shortest-support representative, then smallest coefficients, then most centred."""
        reps = self.compact_reps(p, window)
        if not reps:
            return LaurentPoly.coerce(p)
        return min(reps, key=rep_size_key)


def rep_size_key(p):
    if p.is_zero():
        return (0, 0, 0, 0, ())
    return (p.nterms(), sum(abs(v) for _, v in p.items()), p.span(),
            abs(p.min_exp() + p.max_exp()), tuple(p.items()))


def _rat_rank(cols, rhs):
    """Rank of the column matrix and whether rhs lies in its rational span."""
    rows = len(rhs)
    m = [[Fraction(col[r]) for col in cols] + [Fraction(rhs[r])] for r in range(rows)]
    ncols = len(cols)
    rank = 0
    for c in range(ncols + 1):
        piv = None
        for r in range(rank, rows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        if c == ncols:
            return rank, False
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for r in range(rows):
            if r != rank and m[r][c]:
                f = m[r][c] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank, True


class QElem:
    """A residue class in Z[t, t^-1]/(Delta) with a stored representative."""

    __slots__ = ("rep", "modulus")

    def __init__(self, rep, modulus):
        self.rep = LaurentPoly.coerce(rep)
        self.modulus = modulus

    def _other(self, other):
        if isinstance(other, QElem):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"{other.modulus} vs {self.modulus}")
            return other.rep
        if isinstance(other, (int, LaurentPoly)):
            return LaurentPoly.coerce(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else QElem(self.rep + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else QElem(self.rep - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else QElem(o - self.rep, self.modulus)

    def __neg__(self):
        return QElem(-self.rep, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else QElem(self.rep * o, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError(f"{self} is not a unit")
            return inv ** (-n)
        return QElem(self.rep ** n, self.modulus)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (self.rep - o).divexact(self.modulus.delta) is not None

    def __hash__(self):
        return hash((self.modulus, self.coords()))

    def coords(self):
        return self.modulus.coords(self.rep)

    def is_zero(self):
        return self.rep.divexact(self.modulus.delta) is not None

    def __bool__(self):
        return not self.is_zero()

    def conj(self):
        if self.modulus.conj_twist is None:
            raise ValueError(f"conjugation is not defined modulo {self.modulus}")
        return QElem(self.rep.bar(), self.modulus)

    def inverse(self, window=None, cap=None):
        """The inverse residue, or None when this class is not a unit."""
        if self.is_zero():
            raise ZeroDivisionError("zero residue has no inverse")
        if not self.modulus.is_unit_class(self.rep):
            return None
        res = self.modulus.solve_linear([self.rep], [ONE], window, cap)
        return None if res is None else res.value

    def divide(self, d, window=None, cap=None):
        """
        Some x with d * x = self, as ``Quotient(x, unique)``; None when no
        solution exists.
        """
        o = self._other(d)
        return self.modulus.solve_linear([o], [self.rep], window, cap)

    def classify(self):
        if self.is_zero():
            return ZERO_CLASS
        if self.modulus.is_zero_divisor(self.rep):
            return ZERO_DIVISOR
        return UNIT if self.inverse() is not None else REGULAR_NONUNIT

    def minimal(self, window=None):
        return QElem(self.modulus.minimal_rep(self.rep, window), self.modulus)

    def __str__(self):
        return str(self.modulus.minimal_rep(self.rep))

    def __repr__(self):
        return f"QElem('{self}' mod '{self.modulus.delta}')"

    def to_text(self):
        return f"{self} mod {self.modulus.delta}"

    @classmethod
    def from_text(cls, text, knot=True):
        body, sep, mod = text.partition(" mod ")
        if not sep:
            raise ValueError(f"residue text needs a ' mod <delta>' suffix: {text!r}")
        m = Modulus.of(mod, knot=knot)
        return cls(LaurentPoly.coerce(body), m)


def vector_divide(target, gen, modulus, window=None, cap=None):
    """Some c in Lambda with c * gen = target componentwise, or None."""
    return modulus.solve_linear([g.rep if isinstance(g, QElem) else g for g in gen],
                                [x.rep if isinstance(x, QElem) else x for x in target],
                                window, cap)
