"""
Pairings computed from a Seifert matrix V.

With A = tV - V' and D = det A, the Alexander module is Lambda^{2g} / A.
Values of the Blanchfield form are carried in Lambda/(Delta) through the
symmetric associate Delta_s = t^{-d/2} Delta: the value f/D of the linking
form is stored as the residue of f * Delta_s / D.  Using Delta_s (rather
than Delta itself) as the reference denominator makes both forms below
honestly hermitian, i.e. twisted by u = 1.
"""

from dataclasses import dataclass, field

from .laurent import LaurentPoly, ONE, ZERO, T
from .linalg import det, adjugate, matmul, transpose
from .quotient import Modulus, QElem

__all__ = [
    "SeifertData", "GramForm", "SeifertError", "alexander_from_seifert",
    "seifert_data", "blanchfield_gram", "cbl_gram", "cbl_pair", "kappa_apply",
    "kappa_vectors", "symmetry_units", "congruent", "HERMITIAN", "ANTIHERMITIAN", "NO_SYMMETRY",
]

HERMITIAN = "hermitian_twisted"
ANTIHERMITIAN = "antihermitian_twisted"
NO_SYMMETRY = "none"


class SeifertError(ValueError):
    pass


def _presentation(v):
    n = len(v)
    return [[T * v[i][j] - v[j][i] for j in range(n)] for i in range(n)]


def alexander_from_seifert(v):
    """Normalized det(tV - V') as a Modulus."""
    return seifert_data(v).modulus


@dataclass
class SeifertData:
    v: list
    genus: int
    presentation: list
    modulus: Modulus
    det: LaurentPoly
    unit: LaurentPoly          # det = unit * modulus.delta
    ref_unit: LaurentPoly      # Delta_s / det, a unit +-t^k
    _adj: list = field(default=None, repr=False)

    @property
    def size(self):
        return len(self.v)

    @property
    def adj(self):
        if self._adj is None:
            self._adj = adjugate(self.presentation) if self.v else []
        return self._adj


def seifert_data(v):
    v = [[int(x) for x in row] for row in v]
    n = len(v)
    if any(len(row) != n for row in v):
        raise SeifertError("Seifert matrix must be square")
    if n % 2:
        raise SeifertError(f"Seifert matrix must have even size, got {n}")
    pres = _presentation(v)
    d = det(pres) if n else ONE
    if d.is_zero():
        raise SeifertError("det(tV - V') vanishes")
    m = Modulus(d)
    unit = d.divexact(m.delta)
    sym = m.symmetric
    if sym is None:
        raise SeifertError(f"Delta = {m.delta} is not symmetric; not a Seifert matrix of a knot")
    ref = sym.divexact(d)
    return SeifertData(v, n // 2, pres, m, d, unit, ref)


# -- Gram forms -----------------------------------------------------------------

def symmetry_units(bound):
    """Candidate twists +-t^k ordered by |k|, positive sign first."""
    out = []
    for k in sorted(range(-bound, bound + 1), key=lambda k: (abs(k), -k)):
        out.append(LaurentPoly.monomial(1, k))
        out.append(LaurentPoly.monomial(-1, k))
    return out


@dataclass
class GramForm:
    """
    A sesquilinear Gram matrix over Lambda/(Delta), conjugate-linear in the
    first slot.  ``vectors`` optionally records the generators as vectors
    of residues so that module relations between them can be tested.
    """

    modulus: Modulus
    generators: list
    entries: list
    symmetry: str = NO_SYMMETRY
    unit: LaurentPoly = None
    vectors: list = None

    def __post_init__(self):
        n = len(self.generators)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("Gram matrix must be square of generator count")
        if self.symmetry != NO_SYMMETRY and not self.holds(self.symmetry, self.unit):
            raise ValueError(f"declared symmetry {self.symmetry}({self.unit}) fails")

    def __len__(self):
        return len(self.generators)

    def holds(self, kind, u):
        """entries[j][i] == s * u * conj(entries[i][j]) with s = +1 or -1."""
        s = 1 if kind == HERMITIAN else -1
        u = LaurentPoly.coerce(u) * s
        e = self.entries
        n = len(e)
        return all(e[j][i] == e[i][j].conj() * u for i in range(n) for j in range(i, n))

    def find_symmetry(self, kind, bound=None):
        """Smallest twist u = +-t^k for which ``kind`` holds, or None."""
        if bound is None:
            bound = max(2, 2 * self.modulus.degree)
        for u in symmetry_units(bound):
            if self.holds(kind, u):
                return u
        return None

    def with_symmetry(self, kind=None, bound=None):
        """Attach symmetry metadata; ``kind=None`` tries hermitian then anti-hermitian."""
        kinds = [kind] if kind else [HERMITIAN, ANTIHERMITIAN]
        for k in kinds:
            u = self.find_symmetry(k, bound)
            if u is not None:
                self.symmetry, self.unit = k, u
                return self
        self.symmetry, self.unit = NO_SYMMETRY, None
        return self

    def is_zero(self):
        return all(x.is_zero() for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, GramForm):
            return NotImplemented
        return (self.modulus == other.modulus and len(self) == len(other)
                and all(a == b for ra, rb in zip(self.entries, other.entries)
                        for a, b in zip(ra, rb)))

    def symmetry_text(self):
        if self.symmetry == NO_SYMMETRY:
            return NO_SYMMETRY
        return f"{self.symmetry}({self.unit})"

    def to_text(self, title="gram"):
        lines = [f"{title}", f"  modulus: {self.modulus.delta}",
                 f"  generators: {', '.join(self.generators)}",
                 f"  symmetry: {self.symmetry_text()}"]
        for g, row in zip(self.generators, self.entries):
            lines.append(f"  row {g}: " + " | ".join(str(x) for x in row))
        return "\n".join(lines)

    def to_dict(self):
        return {
            "modulus": str(self.modulus.delta),
            "generators": list(self.generators),
            "symmetry": self.symmetry_text(),
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_text(cls, text):
        lines = [ln.strip() for ln in text.strip().splitlines()]
        fields = {}
        rows = []
        for ln in lines[1:]:
            key, _, val = ln.partition(":")
            if key.startswith("row "):
                rows.append(val.strip())
            else:
                fields[key.strip()] = val.strip()
        m = Modulus.of(fields["modulus"], knot=False)
        gens = [g.strip() for g in fields["generators"].split(",")] if fields["generators"] else []
        entries = [[QElem(LaurentPoly.coerce(x.strip()), m) for x in r.split("|")] for r in rows]
        sym = fields.get("symmetry", NO_SYMMETRY)
        if sym == NO_SYMMETRY:
            return cls(m, gens, entries)
        kind, _, u = sym.partition("(")
        return cls(m, gens, entries, kind, LaurentPoly.coerce(u.rstrip(")")))


# -- the two Blanchfield formulas -------------------------------------------------

def _labels(n):
    return [f"e{i + 1}" for i in range(n)]


def kappa_vectors(s):
    """Columns of adj(tV - V') as residue vectors: kappa(e_1), ..., kappa(e_2g)."""
    m = s.modulus
    n = s.size
    return [[QElem(s.adj[i][j], m) for i in range(n)] for j in range(n)]


def blanchfield_gram(s):
    """
    Bl(e_i, e_j) = (1 - t) (A^{-1})_{ij}, stored as (1 - t) adj(A)_{ij} * Delta_s / D.
    """
    m = s.modulus
    n = s.size
    f = (ONE - T) * s.ref_unit
    entries = [[QElem(f * s.adj[i][j], m) for j in range(n)] for i in range(n)]
    g = GramForm(m, _labels(n), entries, vectors=kappa_vectors(s))
    return g.with_symmetry(HERMITIAN)


def cbl_pair(s, lift, w):
    """
    (1 - t) * sum_k conj(y_k) w_k where A * lift = Delta_s * y exactly.
    ``lift`` is an integral lift of a kernel element, ``w`` a residue vector.
    """
    m = s.modulus
    ds = m.symmetric
    n = s.size
    lift = [LaurentPoly.coerce(x) for x in lift]
    acc = ZERO
    for k in range(n):
        row = s.presentation[k]
        ak = ZERO
        for j in range(n):
            if lift[j]:
                ak = ak + row[j] * lift[j]
        y = ak.divexact(ds)
        if y is None:
            raise ArithmeticError("section is not a kernel element: A*s(v) is not divisible by Delta")
        wk = w[k].rep if isinstance(w[k], QElem) else LaurentPoly.coerce(w[k])
        acc = acc + y.bar() * wk
    return QElem((ONE - T) * acc, m)


def cbl_gram(s, sections=None):
    """
    Gram matrix of the cohomological form on kappa(e_1), ..., kappa(e_2g).
    ``sections[j]`` overrides the integral lift of kappa(e_j); by default
    the adjugate column itself is used.
    """
    m = s.modulus
    n = s.size
    cols = [[s.adj[i][j] for i in range(n)] for j in range(n)]
    lifts = cols if sections is None else [list(x) for x in sections]
    for lift, col in zip(lifts, cols):
        if any(not QElem(a - b, m).is_zero() for a, b in zip(lift, col)):
            raise ValueError("a section must lift the same residue vector")
    vecs = kappa_vectors(s)
    entries = [[cbl_pair(s, lifts[i], vecs[j]) for j in range(n)] for i in range(n)]
    g = GramForm(m, [f"k{i + 1}" for i in range(n)], entries, vectors=vecs)
    return g.with_symmetry(HERMITIAN)


def kappa_apply(s, v):
    """adj(tV - V') v over Lambda/(Delta); the image is checked to lie in the kernel."""
    n = s.size
    if len(v) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(v)}")
    m = s.modulus
    reps = [x.rep if isinstance(x, QElem) else LaurentPoly.coerce(x) for x in v]
    out = []
    for i in range(n):
        acc = ZERO
        for j in range(n):
            if reps[j]:
                acc = acc + s.adj[i][j] * reps[j]
        out.append(acc)
    for k in range(n):
        r = ZERO
        for j in range(n):
            r = r + s.presentation[k][j] * out[j]
        if not QElem(r, m).is_zero():
            raise ArithmeticError("kappa image is not in the kernel of tV - V'")
    return [QElem(x, m) for x in out]


def congruent(v, p):
    """P' V P for an integer matrix P."""
    return matmul(matmul(transpose(p), v), p)
