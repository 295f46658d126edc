"""
Finite Alexander quandles Z_n with x <| y = t(x - y) + y, quandle
2-cocycles, the cocycle invariant of a knot diagram, and the group
G_X = (X (x) X) / <x (x) y - (t y) (x) x>.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd

from .linalg import smith_normal_form, int_kernel

__all__ = [
    "FiniteAlexanderQuandle", "Cocycle2", "QuandleError", "cocycle_check",
    "phi_from_psi", "product_psi", "colorings_linear", "colorings_brute",
    "cocycle_invariant", "diagonal_weight", "quandle_h2", "quandle_h2_brute",
]


class QuandleError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteAlexanderQuandle:
    n: int
    t: int

    def __post_init__(self):
        if self.n < 1:
            raise QuandleError("n must be positive")
        object.__setattr__(self, "t", self.t % self.n if self.n > 1 else 0)
        if self.n > 1 and gcd(self.t, self.n) != 1:
            raise QuandleError(f"t = {self.t} is not a unit mod {self.n}")
        if self.n <= 64 and not self.axioms_hold():
            raise QuandleError("quandle axioms fail")

    @property
    def t_inv(self):
        return pow(self.t, -1, self.n) if self.n > 1 else 0

    def elements(self):
        return range(self.n)

    def op(self, x, y):
        return (self.t * (x - y) + y) % self.n

    def op_inv(self, x, y):
        return (self.t_inv * (x - y) + y) % self.n

    def conjugate(self):
        """Same set with t replaced by t^-1."""
        return FiniteAlexanderQuandle(self.n, self.t_inv)

    def axioms_hold(self):
        X = self.elements()
        if any(self.op(x, x) != x for x in X):
            return False
        for y in X:
            if len({self.op(x, y) for x in X}) != self.n:
                return False
        return all(self.op(self.op(x, y), z) == self.op(self.op(x, z), self.op(y, z))
                   for x in X for y in X for z in X)


@dataclass
class Cocycle2:
    domain: FiniteAlexanderQuandle
    modulus: int            # target group Z_modulus
    table: dict             # (x, y) -> value

    def __call__(self, x, y):
        return self.table[(x, y)] % self.modulus


def cocycle_check(c):
    """
    (ok, witness) for phi(x,z) - phi(x,y) - phi(x<|y, z) + phi(x<|z, y<|z) = 0
    and phi(x,x) = 0, checked over all of X^3.  The witness is the first
    failing triple (or pair for the diagonal condition).
    """
    q = c.domain
    X = list(q.elements())
    for x in X:
        if c(x, x):
            return False, (x, x)
    for x, y, z in product(X, X, X):
        v = c(x, z) - c(x, y) - c(q.op(x, y), z) + c(q.op(x, z), q.op(y, z))
        if v % c.modulus:
            return False, (x, y, z)
    return True, None


def product_psi(q, scale=1):
    """psi(x, y) = scale * x * y; t-invariant exactly when scale (t^2 - 1) = 0 mod n."""
    return {(x, y): (scale * x * y) % q.n for x in q.elements() for y in q.elements()}


def phi_from_psi(q, psi, modulus=None):
    """
    phi(x, y) = psi(x - y, y - y t^-1).  ``psi`` is a table on X x X that
    must be biadditive and satisfy psi(t x, t y) = psi(x, y).
    """
    n = q.n
    modulus = modulus or n
    X = list(q.elements())
    for x, y in product(X, X):
        if (psi[((q.t * x) % n, (q.t * y) % n)] - psi[(x, y)]) % modulus:
            raise QuandleError("psi is not t-invariant")
        for z in X:
            if (psi[((x + z) % n, y)] - psi[(x, y)] - psi[(z, y)]) % modulus:
                raise QuandleError("psi is not additive in the first slot")
            if (psi[(x, (y + z) % n)] - psi[(x, y)] - psi[(x, z)]) % modulus:
                raise QuandleError("psi is not additive in the second slot")
    table = {(x, y): psi[((x - y) % n, (y - q.t_inv * y) % n)] % modulus for x, y in product(X, X)}
    c = Cocycle2(q, modulus, table)
    ok, wit = cocycle_check(c)
    if not ok:
        raise QuandleError(f"phi_psi fails the cocycle identity at {wit}")
    return c


# -- colorings --------------------------------------------------------------------

def _relations(diagram):
    return [cr.roles() for cr in diagram.crossings]


def colorings_brute(diagram, q, cap=10 ** 7):
    arcs = list(diagram.arcs)
    if q.n ** len(arcs) > cap:
        raise QuandleError("brute force enumeration exceeds the cap")
    rel = _relations(diagram)
    out = []
    for vals in product(range(q.n), repeat=len(arcs)):
        col = dict(zip(arcs, vals))
        if all(q.op(col[a], col[b]) == col[g] for a, b, g in rel):
            out.append(col)
    return out


def colorings_linear(diagram, q):
    """
    All colorings as the solution set of t C(a) + (1 - t) C(b) - C(g) = 0
    over Z_n, from a Smith normal form of the integer relation matrix
    augmented with n * I.
    """
    arcs = list(diagram.arcs)
    idx = {a: i for i, a in enumerate(arcs)}
    k = len(arcs)
    rows = []
    for a, b, g in _relations(diagram):
        row = [0] * k
        row[idx[a]] += q.t
        row[idx[b]] += 1 - q.t
        row[idx[g]] -= 1
        rows.append(row)
    if not rows:
        return [{arcs[0]: x} for x in range(q.n)]
    # x in Z^k with R x = 0 mod n  <=>  (x, y) in ker [R | n I]
    aug = [row + [q.n if i == j else 0 for j in range(len(rows))] for i, row in enumerate(rows)]
    kern = int_kernel(aug)
    gens = [[v % q.n for v in vec[:k]] for vec in kern]
    # the solution set is the subgroup of Z_n^k generated by gens
    seen = {tuple([0] * k)}
    frontier = [tuple([0] * k)]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % q.n for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return [dict(zip(arcs, v)) for v in sorted(seen)]


def cocycle_invariant(diagram, c, method="linear"):
    """Multiset {sum_tau eps_tau phi(C(alpha), C(beta))} over all colorings, as a Counter."""
    q = c.domain
    cols = colorings_linear(diagram, q) if method == "linear" else colorings_brute(diagram, q)
    out = Counter()
    for col in cols:
        v = 0
        for cr in diagram.crossings:
            a, b, _ = cr.roles()
            v += cr.sign * c(col[a], col[b])
        out[v % c.modulus] += 1
    return out


def diagonal_weight(diagram, q, psi, col, modulus=None):
    """
    Q_psi(C, C) = sum eps psi(C(a) - C(b), C(b) (1 - t^-1)), the weight sum
    with both colorings equal to C.
    """
    n = q.n
    modulus = modulus or n
    v = 0
    for cr in diagram.crossings:
        a, b, _ = cr.roles()
        x = (col[a] - col[b]) % n
        y = (col[b] - q.t_inv * col[b]) % n
        v += cr.sign * psi[(x, y)]
    return v % modulus


# -- second homology ----------------------------------------------------------------

def _h2_relations(q):
    n = q.n
    X = list(q.elements())

    def idx(x, y):
        return x * n + y

    # X (x) X for X = Z_n is Z_n, but the relation lattice is written on the
    # free abelian group on symbols x (x) y, with bilinearity and torsion relations
    rels = []
    size = n * n
    for x, y in product(X, X):
        r = [0] * size
        r[idx(x, y)] += 1
        r[idx((q.t * y) % n, x)] -= 1
        rels.append(r)
    for x, y, z in product(X, X, X):
        r = [0] * size
        r[idx((x + y) % n, z)] += 1
        r[idx(x, z)] -= 1
        r[idx(y, z)] -= 1
        rels.append(r)
        r = [0] * size
        r[idx(z, (x + y) % n)] += 1
        r[idx(z, x)] -= 1
        r[idx(z, y)] -= 1
        rels.append(r)
    return rels, size


def quandle_h2(q):
    """Nontrivial invariant factors of G_X (empty list for the trivial group; 0 = Z)."""
    if q.n == 1:
        return []
    # bilinearity makes X (x) X = Z_n generated by 1 (x) 1; x (x) y = xy (1 (x) 1)
    # and the relation x (x) y = (t y) (x) x becomes (xy - t x y) = 0, i.e. (1 - t) xy = 0
    rel = [[q.n]] + [[(x * y - q.t * y * x) % q.n] for x in q.elements() for y in q.elements()]
    diag, _, _ = smith_normal_form(rel)
    return [d for d in diag if d != 1]


def quandle_h2_brute(q):
    """Same group from the full relation lattice on the n^2 symbols x (x) y."""
    if q.n == 1:
        return []
    rels, size = _h2_relations(q)
    diag, _, _ = smith_normal_form(rels)
    free = size - sum(1 for d in diag if d)
    return sorted([d for d in diag if d > 1]) + [0] * free
