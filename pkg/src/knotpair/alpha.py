"""
The comparison constant alpha between the weight-sum form and the
Blanchfield form:

    Q(kappa x, kappa y) = alpha * (1 + t)/(1 - t) * Bl(x, y).

On a cyclic module both forms are determined by their value on one
generator, so alpha is a single quotient.  The two generators are matched
only up to a unit w, hence alpha is defined up to the norm w * conj(w).
That orbit (with an optional sign) is searched to compare against
expected values.
"""

from dataclasses import dataclass, field
from itertools import product

from .laurent import LaurentPoly, ONE, ZERO, T
from .quotient import (QElem, Undetermined, vector_divide, rep_size_key,
                       ZERO_CLASS, UNIT, ZERO_DIVISOR, REGULAR_NONUNIT)

__all__ = [
    "AlphaResult", "Verdict", "OrbitWitness", "find_cyclic_generator",
    "alpha_extract", "alpha_classify", "norm_generators", "canonicalize",
    "orbit_witness", "match_expected", "gram_value",
    "CYCLIC", "ZERO_FORM", "UNDETERMINED",
]

CYCLIC = "cyclic"
ZERO_FORM = "zero"
UNDETERMINED = "undetermined"


@dataclass
class AlphaResult:
    modulus: object
    alpha: QElem                 # representative (canonicalized when possible)
    raw: QElem                   # value straight out of the division
    ambiguity: str
    classification: str
    self_conjugate: bool
    status: str = CYCLIC
    consistent: bool = True
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "modulus": str(self.modulus.delta),
            "status": self.status,
            "alpha": None if self.alpha is None else str(self.alpha),
            "raw": None if self.raw is None else str(self.raw),
            "ambiguity": self.ambiguity,
            "classification": self.classification,
            "self_conjugate": self.self_conjugate,
            "consistent": self.consistent,
            "notes": list(self.notes),
        }

    def to_text(self):
        d = self.to_dict()
        return "\n".join(["alpha"] + [f"  {k}: {v}" for k, v in d.items() if k != "notes"]
                         + [f"  note: {n}" for n in self.notes])


@dataclass
class Verdict:
    recoverable: bool
    reason: str
    alpha_class: str
    delta_minus_one: int
    delta_minus_one_class: str

    @property
    def label(self):
        return "recoverable" if self.recoverable else "not recoverable"


@dataclass
class OrbitWitness:
    """alpha == sign * target * product of factors; ``factors`` are texts like N(1 - t)^-1."""
    sign: int
    factors: list
    multiplier: QElem

    def to_text(self):
        body = " * ".join(self.factors) if self.factors else "1"
        return f"{'-' if self.sign < 0 else ''}{body}"


# -- generators -----------------------------------------------------------------

def _combine(vectors, coeffs, m):
    n = len(vectors[0])
    out = []
    for k in range(n):
        acc = ZERO
        for c, v in zip(coeffs, vectors):
            if c:
                acc = acc + c * v[k].rep
        out.append(QElem(acc, m))
    return out


def _generates(cand, vectors, m):
    """Multipliers lam with vectors[k] == lam[k] * cand, or None."""
    lams = []
    for v in vectors:
        if all(x.is_zero() for x in v):
            lams.append(m.zero())
            continue
        try:
            res = vector_divide(v, cand, m)
        except Undetermined:
            return None
        if res is None:
            return None
        lams.append(res.value)
    return lams


def find_cyclic_generator(vectors, m):
    """
    Search a single generator of the span of ``vectors``: first the vectors
    themselves, then v_i + u v_j for u in {+-1, +-t, +-t^-1}.  Returns
    ``(coeffs, lams)`` with cand = sum coeffs_i v_i and v_k = lams_k cand,
    or None.
    """
    n = len(vectors)
    if n == 0:
        return None
    basis = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for i in range(n):
        if all(x.is_zero() for x in vectors[i]):
            continue
        lams = _generates(vectors[i], vectors, m)
        if lams is not None:
            return basis[i], lams
    units = [ONE, -ONE, T, -T, T.bar(), -T.bar()]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for u in units:
                coeffs = [ZERO] * n
                coeffs[i], coeffs[j] = ONE, u
                cand = _combine(vectors, coeffs, m)
                if all(x.is_zero() for x in cand):
                    continue
                lams = _generates(cand, vectors, m)
                if lams is not None:
                    return coeffs, lams
    return None


def gram_value(g, a, b):
    """Form value on sum a_i g_i and sum b_j g_j (conjugate-linear in a)."""
    m = g.modulus
    acc = m.zero()
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                acc = acc + g.entries[i][j] * (LaurentPoly.coerce(ai).bar() * bj)
    return acc


def _reproduces(g, lams, value):
    n = len(g)
    return all(g.entries[k][l] == lams[k].conj() * lams[l] * value
               for k in range(n) for l in range(n))


# -- extraction ---------------------------------------------------------------------

def alpha_extract(qg, bg, canonical=True, strict_sign=False):
    """
    alpha from the weight Gram ``qg`` and the Blanchfield Gram ``bg``.
    Both must carry generator vectors.  Cyclic modules give alpha up to the
    norm orbit; a vanishing weight Gram gives alpha = 0; anything else is
    reported as undetermined.
    """
    m = qg.modulus
    if bg.modulus != m:
        raise ValueError("weight and Blanchfield Grams live over different moduli")
    notes = []
    if qg.is_zero():
        zero = m.zero()
        return AlphaResult(m, zero, zero, "exact (the weight form vanishes)", ZERO_CLASS,
                           True, ZERO_FORM, True, notes)
    gq = find_cyclic_generator(qg.vectors, m)
    gb = find_cyclic_generator(bg.vectors, m)
    if gq is None or gb is None:
        side = "weight" if gq is None else "Blanchfield"
        notes.append(f"no single generator found on the {side} side")
        return AlphaResult(m, None, None, "none", "unknown", False, UNDETERMINED, False, notes)
    cq, lq = gq
    cb, lb = gb
    q = gram_value(qg, cq, cq)
    b = gram_value(bg, cb, cb)
    inv = m(ONE - T).inverse()
    den = m(ONE + T) * inv * b
    try:
        res = q.divide(den)
    except Undetermined as exc:
        notes.append(str(exc))
        res = None
    if res is None:
        notes.append("the division by (1+t)(1-t)^-1 Bl(g,g) has no solution")
        return AlphaResult(m, None, None, "none", "unknown", False, UNDETERMINED, False, notes)
    raw = res.value
    consistent = (_reproduces(qg, lq, q) and _reproduces(bg, lb, b) and raw * den == q)
    if not res.unique:
        notes.append("alpha is determined only modulo the annihilator of (1+t)(1-t)^-1 Bl(g,g)")
    alpha = canonicalize(raw, strict_sign=strict_sign)[0] if canonical else raw
    amb = "norms w*conj(w) of units w" + ("" if strict_sign else ", and sign")
    return AlphaResult(m, alpha, raw, amb, alpha.classify(), alpha == alpha.conj(),
                       CYCLIC, consistent, notes)


def alpha_classify(res):
    """Recoverable iff alpha and Delta(-1) are both non-zero-divisors mod Delta."""
    m = res.modulus
    dm1 = m.delta.evaluate(-1)
    dclass = QElem(LaurentPoly(dm1), m).classify()
    if res.alpha is None:
        return Verdict(False, "alpha undetermined", "unknown", dm1, dclass)
    acls = res.alpha.classify()
    good = (UNIT, REGULAR_NONUNIT)
    if acls not in good:
        return Verdict(False, f"alpha is {acls.replace('_', ' ')}", acls, dm1, dclass)
    if dclass not in good:
        return Verdict(False, f"Delta(-1) = {dm1} is {dclass.replace('_', ' ')}", acls, dm1, dclass)
    return Verdict(True, "alpha and Delta(-1) are non-zero-divisors", acls, dm1, dclass)


# -- the norm orbit -------------------------------------------------------------------

def _score(x):
    if x.is_zero():
        return (0,)
    reps = x.modulus.compact_reps(x.rep)
    if not reps:
        return (99, 10 ** 9)
    return rep_size_key(min(reps, key=rep_size_key))[:2]


def norm_generators(m):
    """
    Norms N(w) = w conj(w) of small units w, with inverses, skipping +-1.
    Returns a list of (text, N(w), N(w)^-1).
    """
    cands = []
    for k in range(1, m.degree + 1):
        tk = T ** k
        cands += [ONE - tk, ONE + tk, ONE - tk + tk * tk, ONE + tk + tk * tk]
    cands += [LaurentPoly(2), LaurentPoly(3)]
    out, seen = [], set()
    one = m.one()
    for w in cands:
        if not m.is_unit_class(w):
            continue
        nw = QElem(w * w.bar(), m)
        if nw == one or nw == -one:
            continue
        key = nw.coords()
        if key in seen:
            continue
        seen.add(key)
        try:
            inv = nw.inverse()
        except Undetermined:
            continue
        if inv is not None:
            out.append((str(w), nw, inv))
    return out


def _steps(gens, strict_sign):
    for text, nw, inv in gens:
        yield f"N({text})", nw
        yield f"N({text})^-1", inv
        if not strict_sign:
            yield f"-N({text})", -nw
            yield f"-N({text})^-1", -inv


def canonicalize(alpha, strict_sign=False, width=6, depth=8):
    """
    Deterministic beam search for the print-smallest element of the orbit
    of ``alpha`` under multiplication by norms (and sign unless strict).
    Returns (representative, list of generator texts used).
    """
    m = alpha.modulus
    if alpha.is_zero():
        return alpha, []
    gens = norm_generators(m)
    start = alpha
    if not strict_sign and _score(-alpha) < _score(alpha):
        start = -alpha
    best = (_score(start), start)
    beam = [best]
    seen = {start.coords()}
    for _ in range(depth):
        nxt = []
        for _, x in beam:
            for _, f in _steps(gens, strict_sign):
                y = x * f
                k = y.coords()
                if k in seen:
                    continue
                seen.add(k)
                nxt.append((_score(y), y))
        if not nxt:
            break
        nxt.sort(key=lambda z: z[0])
        beam = nxt[:width]
        if beam[0][0] < best[0]:
            best = beam[0]
    return best[1], [text for text, _, _ in gens]


def _small_polys(m, budget=4000):
    """Polynomials supported on 0..d-1 with coefficients in [-B, B], B as large as the budget allows."""
    d = max(m.degree, 1)
    b = 1
    while (2 * (b + 1) + 1) ** d <= budget:
        b += 1
    rng = range(-b, b + 1)
    for coeffs in product(rng, repeat=d):
        if any(coeffs):
            yield LaurentPoly.from_list(list(coeffs))


def orbit_witness(alpha, target, strict_sign=False, budget=4000, width=30, depth=8):
    """
    An explicit witness that ``alpha`` lies in the orbit of ``target``:
    alpha = sign * target * N(w)^e for a unit w, searched first over small
    w directly and then by a beam search over products of norm generators.
    Returns an OrbitWitness (verified by multiplication) or None.
    """
    m = alpha.modulus
    signs = (1,) if strict_sign else (1, -1)
    if alpha.is_zero() or target.is_zero():
        if alpha.is_zero() and target.is_zero():
            return OrbitWitness(1, [], m.one())
        return None
    for s in signs:
        if alpha == target * s:
            return OrbitWitness(s, [], m.one())
    # direct: alpha == s * target * N(w) or target == s * alpha * N(w)
    for w in _small_polys(m, budget):
        nw = QElem(w * w.bar(), m)
        for s in signs:
            for inverse in (False, True):
                lhs, rhs = (target, alpha) if inverse else (alpha, target)
                if lhs == rhs * nw * s and m.is_unit_class(w):
                    mult = nw if not inverse else nw.inverse()
                    if mult is None or alpha != target * mult * s:
                        continue
                    return OrbitWitness(s, [f"N({w})" + ("^-1" if inverse else "")], mult)
    # beam over products of norm generators, steering by distance to the target
    gens = norm_generators(m)
    goal = {target.coords(): 1}
    if not strict_sign:
        goal[(-target).coords()] = -1
    beam = [(_score(alpha), alpha, [], m.one())]
    seen = {alpha.coords()}
    for _ in range(depth):
        nxt = []
        for _, x, path, mult in beam:
            for text, f in _steps(gens, True):
                y = x * f
                k = y.coords()
                if k in goal:
                    # y = alpha * mult * f = goal_sign * target
                    total = (mult * f).inverse()
                    s = goal[k]
                    if total is not None and alpha == target * total * s:
                        return OrbitWitness(s, _invert_path(path + [text]), total)
                if k in seen:
                    continue
                seen.add(k)
                nxt.append((_score(y), y, path + [text], mult * f))
        if not nxt:
            break
        nxt.sort(key=lambda z: z[0])
        beam = nxt[:width]
    return None


def _invert_path(path):
    out = []
    for p in reversed(path):
        out.append(p[:-3] if p.endswith("^-1") else p + "^-1")
    return out


def match_expected(alpha, expected, strict_sign=False, **kw):
    """Orbit witness for an expected value (a QElem), or None."""
    if alpha is None:
        return None
    return orbit_witness(alpha, expected, strict_sign=strict_sign, **kw)
