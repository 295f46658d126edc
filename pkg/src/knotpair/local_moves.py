"""
Randomized checks of two local weight identities over finite Alexander
quandles: the four-crossing double-delta fragment and the two-strand twist
region.

Finite model.  Evaluate Lambda at t -> tau in Z_n.  The first coloring C
lives in X = (Z_n, tau); since psi_0(x, y) = conj(x) y conjugates the first
slot, the second coloring C' lives in X' = (Z_n, tau^-1) and the pairing is
psi(x, y) = s x y.  On X' the factor (1 - t^-1) acts as (1 - tau).

A crossing is recorded as (sign, under_in, over, under_out).  With
x <| y = t(x - y) + y the relation is under_out = under_in <| over at a
positive crossing and under_in = under_out <| over at a negative one.  The
arc playing alpha follows ROLE_CONVENTION.
"""

import random
from dataclasses import dataclass, field

from .cocycle import FiniteAlexanderQuandle, QuandleError
from .diagram import ROLE_CONVENTION

__all__ = [
    "LocalCrossing", "LocalTangle", "double_delta_fragment", "twist_tangle",
    "twist_progression", "twist_weight_closed", "twist_weight_literal",
    "local_weight", "LocalReport", "local_move_checks",
]


@dataclass(frozen=True)
class LocalCrossing:
    sign: int
    under_in: str
    over: str
    under_out: str

    def alpha(self):
        return self.under_in if ROLE_CONVENTION[self.sign] == "incoming" else self.under_out


@dataclass
class LocalTangle:
    crossings: list
    colors: dict = field(default_factory=dict)

    def check(self, q):
        """Every crossing relation holds in q."""
        c = self.colors
        for cr in self.crossings:
            if cr.sign > 0:
                ok = q.op(c[cr.under_in], c[cr.over]) == c[cr.under_out]
            else:
                ok = q.op(c[cr.under_out], c[cr.over]) == c[cr.under_in]
            if not ok:
                return False
        return True


def _through(q, sign, known, over, known_is_in):
    """Color of the other end of an under-strand."""
    if (sign > 0) == known_is_in:
        return q.op(known, over)
    return q.op_inv(known, over)


def local_weight(t1, t2, q, scale=1):
    """sum eps psi(C(alpha) - C(beta), C'(beta)(1 - t^-1)) in the finite model."""
    n = q.n
    v = 0
    for c1, c2 in zip(t1.crossings, t2.crossings):
        a, b = c1.alpha(), c1.over
        v += c1.sign * (t1.colors[a] - t1.colors[b]) * (1 - q.t) * t2.colors[b]
    return (scale * v) % n


# -- double-delta fragment --------------------------------------------------------

def double_delta_fragment(q, c, d, b, a, horizontal=(-1, 1), vertical=(1, -1)):
    """
    Two horizontal over-strands H1 (upper, color c) and H2 (lower, color d)
    crossed by two vertical under-strands.  Strand V_j starts below both
    at color (b, a)[j] and passes under H2 and then H1.  ``horizontal``
    gives the directions of H1, H2 (+1 = rightwards), ``vertical`` those of
    V0, V1 (+1 = upwards); the crossing sign is their product.  The
    default is the antiparallel configuration of the fragment.
    """
    colors = {"H1": c % q.n, "H2": d % q.n}
    crossings = []
    for j, start in enumerate((b, a)):
        cur = start % q.n
        names = [f"V{j}b", f"V{j}m", f"V{j}t"]
        colors[names[0]] = cur
        for lvl, h in enumerate((1, 0)):
            over = "H1" if h == 0 else "H2"
            sign = horizontal[h] * vertical[j]
            up = vertical[j] > 0
            nxt = _through(q, sign, cur, colors[over], known_is_in=up)
            lo, hi = names[lvl], names[lvl + 1]
            colors[hi] = nxt
            crossings.append(LocalCrossing(sign, lo if up else hi, over, hi if up else lo))
            cur = nxt
    return LocalTangle(crossings, colors)


def double_delta_closed(q, a, b, c2, d2, scale=1):
    """psi((1 - t)(a - b), c' - d')."""
    return (scale * (1 - q.t) * (a - b) * (c2 - d2)) % q.n


# -- twist region -----------------------------------------------------------------

def twist_tangle(q, n_cross, left, right):
    """
    A vertical two-strand twist with ``n_cross`` crossings; at each crossing
    the strand coming from the upper left passes over.  The strand leaving
    the top-left point runs upwards, the other downwards (antiparallel).
    ``left``, ``right`` are the colors of the two top arcs.  Arcs are
    named "L0", "R0", ... by level and side.
    """
    colors = {"L0": left % q.n, "R0": right % q.n}
    crossings = []
    up = {"A": True, "B": False}      # strand A starts at the top left
    pos = ["A", "B"]
    for k in range(n_cross):
        over_strand, under_strand = pos
        over_name = f"L{k}"
        # over runs top-left to bottom-right, under runs top-right to bottom-left
        od = (1, -1) if not up[over_strand] else (-1, 1)
        ud = (-1, -1) if not up[under_strand] else (1, 1)
        sign = 1 if od[0] * ud[1] - od[1] * ud[0] > 0 else -1
        top, bot = f"R{k}", f"L{k + 1}"
        down = not up[under_strand]
        colors[bot] = _through(q, sign, colors[top], colors[over_name], known_is_in=down)
        colors[f"R{k + 1}"] = colors[over_name]
        crossings.append(LocalCrossing(sign, top if down else bot, over_name, bot if down else top))
        pos = [under_strand, over_strand]
    return LocalTangle(crossings, colors)


def twist_progression(q, a, x, y, k, which):
    """a + k (1 - t)(y - x) + x for which = "alpha", + y for "beta"."""
    base = x if which == "alpha" else y
    return (a + k * (1 - q.t) * (y - x) + base) % q.n


def twist_weight_closed(q, n_half, a2, x1, y1, x2, y2, scale=1):
    """
    -((x1 - y1)(a2 + x2) + N (x1 - y1)(x2 - y2))(1 - t^-1) for 2N+1 crossings,
    with top arcs colored (a + x, a + y).  The conjugate slot is x1 - y1.
    """
    n = q.n
    d = x1 - y1
    return (-scale * (1 - q.t) * (d * (a2 + x2) + n_half * d * (x2 - y2))) % n


def twist_weight_literal(q, n_half, a2, x1, y1, x2, y2, scale=1):
    """The same expression with (a2 + y2) in the first term."""
    n = q.n
    d = x1 - y1
    return (-scale * (1 - q.t) * (d * (a2 + y2) + n_half * d * (x2 - y2))) % n


# -- driver -----------------------------------------------------------------------

@dataclass
class LocalReport:
    n: int
    t: int
    trials: int
    seed: int
    double_delta_fail: int = 0
    twist_coloring_fail: int = 0
    twist_fail: int = 0
    twist_literal_fail: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not (self.double_delta_fail or self.twist_coloring_fail or self.twist_fail)

    def to_text(self):
        return "\n".join([
            f"local moves over Z_{self.n}, t = {self.t}: {self.trials} trials, seed {self.seed}",
            f"  double delta fragment failures: {self.double_delta_fail}",
            f"  twist coloring progression failures: {self.twist_coloring_fail}",
            f"  twist weight failures: {self.twist_fail}",
            f"  twist weight with (a2 + y2) term failures: {self.twist_literal_fail}",
            f"  status: {'pass' if self.ok else 'fail'}",
        ])


def _twist_progression_ok(q, tangle, n_cross, a, x, y):
    """Arcs on the strand from the top left follow alpha_k, the others beta_k, k = 0, -1, ..."""
    col = tangle.colors
    # positions swap at every level: the A strand is on the left at even levels
    for lev in range(n_cross + 1):
        left_strand = "A" if lev % 2 == 0 else "B"
        # B passes under first, so its index drops one level ahead of A
        ka, kb = -(lev // 2), -((lev + 1) // 2)
        want_a = twist_progression(q, a, x, y, ka, "alpha")
        want_b = twist_progression(q, a, x, y, kb, "beta")
        got_a = col[f"L{lev}"] if left_strand == "A" else col[f"R{lev}"]
        got_b = col[f"R{lev}"] if left_strand == "A" else col[f"L{lev}"]
        if (got_a, got_b) != (want_a, want_b):
            return False
    return True


def local_move_checks(n, t, trials=1000, seed=0, max_half=5, scale=None):
    """
    Randomized comparison of crossing-by-crossing weight sums with the
    closed forms.  Raises QuandleError when t is not a unit mod n.
    """
    q = FiniteAlexanderQuandle(n, t)
    qc = q.conjugate()
    rng = random.Random(seed)
    rep = LocalReport(n, q.t, trials, seed)
    for trial in range(trials):
        s = scale if scale is not None else rng.randrange(1, n)
        a, b, c, d = (rng.randrange(n) for _ in range(4))
        a2, b2, c2, d2 = (rng.randrange(n) for _ in range(4))
        f1 = double_delta_fragment(q, c, d, b, a)
        f2 = double_delta_fragment(qc, c2, d2, b2, a2)
        if not (f1.check(q) and f2.check(qc)):
            rep.double_delta_fail += 1
        elif local_weight(f1, f2, q, s) != double_delta_closed(q, a, b, c2, d2, s):
            rep.double_delta_fail += 1
            rep.failures.append(("double_delta", trial))

        nh = rng.randrange(max_half + 1)
        nc = 2 * nh + 1
        a1, x1, y1, ab, x2, y2 = (rng.randrange(n) for _ in range(6))
        t1 = twist_tangle(q, nc, a1 + x1, a1 + y1)
        t2 = twist_tangle(qc, nc, ab + x2, ab + y2)
        if not (t1.check(q) and t2.check(qc)
                and _twist_progression_ok(q, t1, nc, a1, x1, y1)
                and _twist_progression_ok(qc, t2, nc, ab, x2, y2)):
            rep.twist_coloring_fail += 1
            rep.failures.append(("twist_coloring", trial))
            continue
        w = local_weight(t1, t2, q, s)
        if w != twist_weight_closed(q, nh, ab, x1, y1, x2, y2, s):
            rep.twist_fail += 1
            rep.failures.append(("twist", trial))
        if w != twist_weight_literal(q, nh, ab, x1, y1, x2, y2, s):
            rep.twist_literal_fail += 1
    return rep
