"""
Exact Laurent polynomials in one variable with integer coefficients.

Elements of Z[t, t^-1] are stored sparsely as a map exponent -> coefficient;
zero coefficients are never stored.  Instances are immutable.
"""

from fractions import Fraction
import re

__all__ = ["LaurentPoly", "T", "ONE", "ZERO", "parse_laurent"]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(k): int(v) for k, v in coeffs.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, c):
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff, exp):
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def from_list(cls, coeffs, low=0):
        """Dense coefficient list, ``coeffs[i]`` at exponent ``low + i``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls._raw({0: x} if x else {})
        if isinstance(x, str):
            return parse_laurent(x)
        raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")

    # -- basic data ---------------------------------------------------------

    @property
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self):
        return min(self._c) if self._c else None

    def max_exp(self):
        return max(self._c) if self._c else None

    def span(self):
        """max_exp - min_exp; -1 for the zero polynomial."""
        if not self._c:
            return -1
        return max(self._c) - min(self._c)

    def nterms(self):
        return len(self._c)

    def coeff(self, k):
        return self._c.get(k, 0)

    def content(self):
        from math import gcd
        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    def is_monomial(self):
        return len(self._c) == 1

    def is_unit(self):
        """True for +-t^k, the units of Z[t, t^-1]."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if not isinstance(other, int):
                return NotImplemented
            other = LaurentPoly.coerce(other)
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({k: v * other for k, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c = {}
        for kb, vb in b.items():
            for ka, va in a.items():
                k = ka + kb
                c[k] = c.get(k, 0) + va * vb
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (k, v), = self._c.items()
            return LaurentPoly._raw({k * n: v if n % 2 else 1})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def bar(self):
        """The involution t -> t^-1."""
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- normalisation and division -----------------------------------------

    def normalize(self):
        """
        Return ``(p, u)`` where ``p = self * u`` has lowest exponent 0 and a
        positive lowest coefficient, and ``u = +-t^k``.
        """
        if not self._c:
            raise ValueError("cannot normalize the zero polynomial")
        lo = min(self._c)
        sign = 1 if self._c[lo] > 0 else -1
        unit = LaurentPoly._raw({-lo: sign})
        return self * unit, unit

    def divexact(self, d):
        """
        Return ``q`` with ``self == d * q`` if such a Laurent polynomial
        exists, otherwise None.
        """
        d = LaurentPoly.coerce(d)
        if not d._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return ZERO
        dlo, dhi = min(d._c), max(d._c)
        alo, ahi = min(self._c), max(self._c)
        if ahi - alo < dhi - dlo:
            return None
        # ordinary long division of the shifted polynomials, top down
        dd = [d._c.get(dlo + i, 0) for i in range(dhi - dlo + 1)]
        r = [self._c.get(alo + i, 0) for i in range(ahi - alo + 1)]
        n, m = len(r) - 1, len(dd) - 1
        lead = dd[m]
        q = [0] * (n - m + 1)
        for i in range(n - m, -1, -1):
            c = r[i + m]
            if c:
                qi, rem = divmod(c, lead)
                if rem:
                    return None
                q[i] = qi
                for j in range(m + 1):
                    r[i + j] -= qi * dd[j]
        if any(r):
            return None
        return LaurentPoly.from_list(q, alo - dlo)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Exact value at a nonzero rational (or integer) ``x``."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomials are not evaluated at 0")
        total = Fraction(0)
        for k, v in self._c.items():
            total += v * x ** k
        if total.denominator == 1:
            return int(total)
        return total

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for k, v in sorted(self._c.items()):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if k == 0:
                body = str(a)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if a == 1 else f"{a}*{var}"
            if not out:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    def __format__(self, spec):
        return format(str(self), spec)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
T = LaurentPoly._raw({1: 1})


# -- parser ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^)|([-+*()−{}]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, var, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("t", None))
        elif caret is not None:
            tokens.append(("^", None))
        else:
            tokens.append((op.replace("−", "-"), None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    """
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' exponent]
    atom   := NUM | 't' | '(' expr ')'
    """

    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        tok = self.toks[self.i] if self.i < len(self.toks) else (None, None)
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            while self.peek() in ("+", "-"):
                if self.take()[0] == "-":
                    sign = -sign
            acc = acc + self.term() * sign
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in ("*", "num", "t", "("):
            if self.peek() == "*":
                self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.exponent()
            if e < 0 and not base.is_unit():
                raise ValueError(f"negative power of a non-unit in {self.text!r}")
            base = base ** e
        return base

    def exponent(self):
        braced = self.peek() == "{"
        if braced:
            self.take()
        sign = 1
        while self.peek() in ("-", "+"):
            if self.take()[0] == "-":
                sign = -sign
        e = sign * self.take("num")[1]
        if braced:
            self.take("}")
        return e

    def atom(self):
        kind = self.peek()
        if kind == "num":
            return LaurentPoly.coerce(self.take()[1])
        if kind == "t":
            self.take()
            return T
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise ValueError(f"unexpected token {kind!r} in {self.text!r}")


def parse_laurent(text):
    """
    Parse a Laurent polynomial.  Accepts the canonical printed form
    (``3*t^-1 - 7 + 3*t``) as well as the looser notation used in tables,
    e.g. ``(-3 + 2 t) (-2 + 3 t^{-1})`` or ``2(2t^{-1} - 3 + 2t)``.
    """
    return _Parser(text).parse()
