"""
Closed forms for pretzel knots P(p, q, r) with p, q, r odd and torus knots
T(m, n), used to cross-check the generic pipeline.

Pretzel conventions.  The genus-one Seifert matrix is
V = 1/2 [[p+q, q+1], [q-1, q+r]].  The explicit pair

    x_v = (1+m+n)(t-1),  y_v = t+mt-m,     x_w = mt-1-m,  y_w = (1+l+m)(t-1)

becomes a pair of kernel vectors of t V' - V (the presentation of the
transposed Seifert matrix, i.e. of the reversed knot) via
v = (x_v, -y_v) and w = (-x_w, y_w).  Values in Lambda/(Delta) depend on
the representative of Delta used to clear denominators.  Against the
reference t^-1 (sigma (t-1)^2 + (t+1)^2) / 4, sigma = pq + qr + rp, the
cohomological Blanchfield Gram on v, w is exactly (1 - t^-1) * core.  The
normalized symmetric Delta differs from this reference by
sign(sigma), so that sign appears when the default reference is kept.
"""

from dataclasses import dataclass
from math import gcd

from .laurent import LaurentPoly, ONE, ZERO, T
from .quotient import Modulus, QElem
from .seifert import (seifert_data, cbl_pair, GramForm, HERMITIAN, ANTIHERMITIAN)
from .diagram import (KnotDiagram, ColoringBasis, braid_closure, braid_arc_colors,
                      diagram_from_ports, is_coloring, weight_sum)

__all__ = [
    "PretzelParams", "TorusParams", "pretzel_seifert", "pretzel_delta",
    "pretzel_core", "pretzel_kernel_vectors", "pretzel_grams", "pretzel_cbl_computed",
    "pretzel_sign", "pretzel_reference_unit", "pretzel_diagram", "torus_delta", "torus_q_coefficient",
    "torus_diagram", "torus_family", "torus_coloring_generators", "torus_weight_unit",
    "bezout_pairs", "geometric",
]


# -- pretzel knots ---------------------------------------------------------------

@dataclass(frozen=True)
class PretzelParams:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if any(x % 2 == 0 for x in (self.p, self.q, self.r)):
            raise ValueError(f"pretzel parameters must be odd, got {(self.p, self.q, self.r)}")

    @property
    def l(self):
        return (self.p - 1) // 2

    @property
    def m(self):
        return (self.q - 1) // 2

    @property
    def n(self):
        return (self.r - 1) // 2

    @property
    def sigma(self):
        return self.p * self.q + self.q * self.r + self.r * self.p


def pretzel_seifert(par):
    p, q, r = par.p, par.q, par.r
    # odd parameters make every entry integral
    return [[(p + q) // 2, (q + 1) // 2], [(q - 1) // 2, (q + r) // 2]]


def pretzel_delta(par):
    """(sigma (t-1)^2 + (t+1)^2) / 4, sigma = pq + qr + rp."""
    num = par.sigma * (T - 1) * (T - 1) + (T + 1) * (T + 1)
    d = num.divexact(LaurentPoly(4))
    if d is None:
        raise ArithmeticError("pretzel Alexander polynomial is not integral")
    return d


def pretzel_core(par):
    l, m, n = par.l, par.m, par.n
    return [[(ONE - T) * (1 + m + n), -1 - m + m * T],
            [-m + T + m * T, (ONE - T) * (1 + m + l)]]


def pretzel_sign(par):
    return 1 if par.sigma > 0 else -1


def _transposed(v):
    return [list(col) for col in zip(*v)]


def pretzel_kernel_vectors(par):
    """Lifts of v and w as integral vectors (see the module docstring)."""
    l, m, n = par.l, par.m, par.n
    xv, yv = (1 + m + n) * (T - 1), T + m * T - m
    xw, yw = m * T - 1 - m, (1 + l + m) * (T - 1)
    return [[xv, -yv], [-xw, yw]]


def pretzel_grams(par):
    """
    (SeifertData, cbl Gram, weight Gram) with both Grams in closed form on
    the generators v, w.  The Seifert data is that of the transposed
    Seifert matrix, where v and w are kernel vectors.
    """
    s = seifert_data(_transposed(pretzel_seifert(par)))
    m = s.modulus
    if m.delta != Modulus(pretzel_delta(par), knot=False).delta:
        raise ArithmeticError("closed-form Delta disagrees with det(tV - V')")
    core = pretzel_core(par)
    vecs = [[QElem(x, m) for x in vec] for vec in pretzel_kernel_vectors(par)]
    cbl = [[QElem((ONE - T.bar()) * c, m) for c in row] for row in core]
    q = [[QElem((ONE + T.bar()) * c, m) for c in row] for row in core]
    gc = GramForm(m, ["v", "w"], cbl, vectors=vecs).with_symmetry(HERMITIAN)
    gq = GramForm(m, ["v", "w"], q, vectors=vecs).with_symmetry(ANTIHERMITIAN)
    return s, gc, gq


def pretzel_reference_unit(par, s=None):
    """The unit u = t^-1 Delta_closed / Delta_s; equal to sign(sigma)."""
    s = s or seifert_data(_transposed(pretzel_seifert(par)))
    u = (pretzel_delta(par) * T.bar()).divexact(s.modulus.symmetric)
    if u is None or not u.is_unit():
        raise ArithmeticError("closed-form Delta is not an associate of det(tV - V')")
    return u


def pretzel_cbl_computed(par, reference="closed"):
    """
    The cohomological Blanchfield Gram on v, w computed from the Seifert
    matrix.  ``reference="closed"`` expresses values against the closed-form
    Delta, ``"normalized"`` against the normalized symmetric Delta.
    """
    s = seifert_data(_transposed(pretzel_seifert(par)))
    m = s.modulus
    u = pretzel_reference_unit(par, s) if reference == "closed" else ONE
    lifts = pretzel_kernel_vectors(par)
    vecs = [[QElem(x, m) for x in vec] for vec in lifts]
    entries = [[cbl_pair(s, a, b) * u for b in vecs] for a in lifts]
    return GramForm(m, ["v", "w"], entries, vectors=vecs).with_symmetry(HERMITIAN)


def pretzel_diagram(par, name=None):
    """
    PD diagram of P(p, q, r): three vertical twist columns joined pairwise
    at the top and bottom.  A positive entry twists so that the NW-SE
    strand is over.
    """
    cols = [par.p, par.q, par.r]

    def slot(i, side, lev):
        c = abs(cols[i])
        if lev == 0:
            return ("top", i) if side == "R" else ("top", (i - 1) % 3)
        if lev == c:
            return ("bot", i) if side == "R" else ("bot", (i - 1) % 3)
        return (i, side, lev)

    crossings = []
    for i, c in enumerate(cols):
        for k in range(abs(c)):
            nw, ne = slot(i, "L", k), slot(i, "R", k)
            sw, se = slot(i, "L", k + 1), slot(i, "R", k + 1)
            crossings.append(([nw, sw, se, ne], 0 if c > 0 else 1))
    return diagram_from_ports(crossings, name=name or f"P({par.p},{par.q},{par.r})")


# -- torus knots -------------------------------------------------------------------

def bezout_pairs(n, m, bound=None):
    """All (a, b) with a n + b m = 1 and |a| <= bound, smallest |a| + |b| first."""
    bound = bound if bound is not None else max(m, n)
    out = []
    for a in range(-bound, bound + 1):
        rest = 1 - a * n
        if rest % m == 0:
            out.append((a, rest // m))
    out.sort(key=lambda ab: (abs(ab[0]) + abs(ab[1]), ab))
    return out


@dataclass(frozen=True)
class TorusParams:
    m: int
    n: int
    a: int = None
    b: int = None

    def __post_init__(self):
        if self.m < 2 or self.n < 2 or gcd(self.m, self.n) != 1:
            raise ValueError(f"torus parameters must be coprime and >= 2, got {(self.m, self.n)}")
        if self.a is None or self.b is None:
            a, b = bezout_pairs(self.n, self.m)[0]
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        if self.a * self.n + self.b * self.m != 1:
            raise ValueError(f"a n + b m must be 1, got {self.a * self.n + self.b * self.m}")


def _tp(k):
    return LaurentPoly.monomial(1, k)


def torus_delta(par):
    """(t^{nm} - 1)(t - 1) / ((t^n - 1)(t^m - 1))."""
    m, n = par.m, par.n
    num = (_tp(n * m) - 1) * (T - 1)
    den = (_tp(n) - 1) * (_tp(m) - 1)
    d = num.divexact(den)
    if d is None:
        raise ArithmeticError("torus Alexander polynomial division is inexact")
    return Modulus(d)


def torus_q_coefficient(par):
    """
    The residue c with c (1 - t^{bm})(1 - t^{an}) = nm (1 - t^-1) mod Delta.
    Returns the Quotient (value, unique).
    """
    mod = torus_delta(par)
    rhs = mod((ONE - T.bar()) * (par.n * par.m))
    den = mod((ONE - _tp(par.b * par.m)) * (ONE - _tp(par.a * par.n)))
    res = rhs.divide(den)
    if res is None:
        raise ArithmeticError(f"no coefficient for T({par.m},{par.n})")
    if res.value * den != rhs:
        raise ArithmeticError("division postcondition failed")
    return res


def torus_diagram(par):
    """Closure of (sigma_1 ... sigma_{m-1})^n on m strands."""
    return braid_closure(list(range(1, par.m)) * par.n, par.m, name=f"T({par.m},{par.n})")


def geometric(k, i):
    """1 + t^k + ... + t^{k(i-2)}, i.e. (1 - t^{k(i-1)}) / (1 - t^k); zero for i = 1."""
    return sum((_tp(k * j) for j in range(i - 1)), ZERO)


def torus_family(par, y, delta, diagram=None, mod=None):
    """
    The arc coloring with bottom colors (in reversed strand order)
    delta, y + delta, geometric(an, 3) y + delta, ...; checked to close up.
    """
    mod = mod or torus_delta(par)
    kd = diagram or torus_diagram(par)
    y, delta = mod(y), mod(delta)
    k = par.a * par.n
    bottom = [mod(geometric(k, i)) * y + delta for i in range(1, par.m + 1)][::-1]
    colors = braid_arc_colors(kd, bottom)
    if not is_coloring(kd, colors):
        raise ArithmeticError(f"torus family fails a crossing relation on T({par.m},{par.n})")
    return colors


def torus_coloring_generators(par, diagram=None):
    """The family at (y, delta) = (1, 0) and (0, 1)."""
    mod = torus_delta(par)
    kd = diagram or torus_diagram(par)
    gens = [torus_family(par, ONE, ZERO, kd, mod), torus_family(par, ZERO, ONE, kd, mod)]
    return ColoringBasis(mod, list(kd.arcs), gens, None, None)


def torus_weight_unit(par, ys=None):
    """
    The unit u = +-t^k with weight_sum(C(y1), C(y2)) = u c conj(y1) y2 for all
    pairs from ``ys`` (delta = 0), or None.
    """
    mod = torus_delta(par)
    kd = torus_diagram(par)
    c = torus_q_coefficient(par).value
    ys = [mod(y) for y in (ys or [ONE, T, ONE - T + T * T])]
    fams = [torus_family(par, y, ZERO, kd, mod) for y in ys]
    gram = [[weight_sum(kd, f1, f2) for f2 in fams] for f1 in fams]
    bound = 2 * par.m * par.n
    for k in sorted(range(-bound, bound + 1), key=lambda k: (abs(k), -k)):
        for sgn in (1, -1):
            u = mod(LaurentPoly.monomial(sgn, k))
            if all(gram[i][j] == u * c * ys[i].conj() * ys[j]
                   for i in range(len(ys)) for j in range(len(ys))):
                return LaurentPoly.monomial(sgn, k)
    return None
