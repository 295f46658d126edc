"""
Oriented knot diagrams in PD notation, Alexander-quandle colorings over
Lambda/(Delta), and the crossing weight sum pairing.

PD convention: edges are labelled 1..2n consecutively along the orientation.
A crossing ``X(a,b,c,d,s)`` lists its four edges counterclockwise starting
from the incoming under-edge ``a``; the under-strand continues as ``c``.
The over-strand runs d -> b for a positive crossing and b -> d for a
negative one, and ``s`` must agree with that.
"""

from dataclasses import dataclass
import re

from .laurent import LaurentPoly, ONE, ZERO, T
from .linalg import det, adjugate
from .quotient import QElem

__all__ = [
    "Crossing", "KnotDiagram", "parse_pd", "DiagramError",
    "ColoringBasis", "coloring_matrix", "reduced_coloring_matrix",
    "diagram_alexander", "coloring_generators", "weight_sum", "weight_gram",
    "is_coloring", "ROLE_CONVENTION", "braid_closure", "braid_arc_colors", "diagram_from_ports",
]


class DiagramError(ValueError):
    pass


# Which under-arc plays alpha (the arc acted on) at each crossing sign.
# Fixed once by reproducing alpha = 1 on 3_1 and 4_1.
ROLE_CONVENTION = {+1: "incoming", -1: "outgoing"}


@dataclass(frozen=True)
class Crossing:
    edges: tuple          # (a, b, c, d) counterclockwise from incoming under
    sign: int
    over: int             # arc labels
    under_in: int
    under_out: int

    def roles(self, convention=None):
        """(alpha, beta, gamma) arc labels: alpha acted on by the over-arc beta."""
        conv = ROLE_CONVENTION if convention is None else convention
        if conv[self.sign] == "incoming":
            return self.under_in, self.over, self.under_out
        return self.under_out, self.over, self.under_in


class KnotDiagram:
    """
    Validated PD diagram.  Arcs are labelled by the smallest edge they
    contain; ``arcs`` is the sorted list of labels.
    """

    def __init__(self, tuples, signs=None, name=None):
        self.name = name
        self.tuples = [tuple(int(x) for x in tup) for tup in tuples]
        n = len(self.tuples)
        self.nedges = 2 * n
        if n == 0:
            self.arcs = [1]
            self.crossings = []
            self.edge_arc = {}
            return
        for tup in self.tuples:
            if len(tup) != 4:
                raise DiagramError(f"crossing {tup} must have four edges")
        labels = [x for tup in self.tuples for x in tup]
        for e in range(1, self.nedges + 1):
            if labels.count(e) != 2:
                raise DiagramError(f"edge {e} occurs {labels.count(e)} times; expected 2")
        if any(x < 1 or x > self.nedges for x in labels):
            raise DiagramError(f"edge labels must lie in 1..{self.nedges}")

        def nxt(e):
            return e % self.nedges + 1

        derived = []
        for a, b, c, d in self.tuples:
            if c != nxt(a):
                raise DiagramError(f"X({a},{b},{c},{d}): under-strand must run a -> a+1")
            if b == nxt(d):
                derived.append(+1)
            elif d == nxt(b):
                derived.append(-1)
            else:
                raise DiagramError(f"X({a},{b},{c},{d}): over-strand edges are not consecutive")
        if signs is not None:
            signs = [int(s) for s in signs]
            if len(signs) != n:
                raise DiagramError("one sign per crossing required")
            for tup, s, ds in zip(self.tuples, signs, derived):
                if s != ds:
                    raise DiagramError(f"X{tup}: declared sign {s:+d} disagrees with orientation")
        # union edges across each over-crossing
        parent = list(range(self.nedges + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c, d in self.tuples:
            rb, rd = find(b), find(d)
            if rb != rd:
                parent[max(rb, rd)] = min(rb, rd)
        classes = {}
        for e in range(1, self.nedges + 1):
            classes.setdefault(find(e), []).append(e)
        self.edge_arc = {e: min(members) for members in classes.values() for e in members}
        self.arcs = sorted(set(self.edge_arc.values()))
        if len(self.arcs) != n:
            raise DiagramError(f"{len(self.arcs)} arcs for {n} crossings; not a knot diagram")
        self.crossings = [
            Crossing((a, b, c, d), s, self.edge_arc[b], self.edge_arc[a], self.edge_arc[c])
            for (a, b, c, d), s in zip(self.tuples, derived)
        ]
        outgoing = sorted(cr.under_out for cr in self.crossings)
        if outgoing != self.arcs:
            raise DiagramError("every arc must begin at exactly one crossing")

    def __len__(self):
        return len(self.crossings)

    @property
    def signs(self):
        return [c.sign for c in self.crossings]

    def writhe(self):
        return sum(self.signs)

    def to_text(self):
        body = " ".join(f"X({a},{b},{c},{d},{'+' if cr.sign > 0 else '-'})"
                        for (a, b, c, d), cr in zip(self.tuples, self.crossings))
        return f"PD[{self.nedges}]" + (": " + body if body else ":")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"KnotDiagram({self.to_text()!r})"

    def mirror(self):
        """Mirror image: every crossing flips, orientation kept."""
        flipped = [(a, d, c, b) for a, b, c, d in self.tuples]
        return KnotDiagram(flipped, name=None if self.name is None else self.name + "*")

    def reverse(self):
        """Same diagram with the orientation reversed."""
        N = self.nedges

        def rl(e):
            return (N - e) % N + 1 if N else e

        # reversed edge k lies between the old edges; relabel so that new
        # labels increase along the new orientation
        out = []
        for a, b, c, d in self.tuples:
            # new incoming under-edge is the old outgoing one
            out.append((rl(c), rl(d), rl(a), rl(b)))
        return KnotDiagram(out)


def braid_closure(word, strands, name=None):
    """
    Closure of a braid word.  ``word`` lists nonzero integers: ``i`` is the
    positive generator sigma_i (strand from position i passes over to i+1),
    ``-i`` its inverse.  Strands run upward; the closure must be a knot.
    """
    if not word:
        raise DiagramError("empty braid word")
    for g in word:
        if not 1 <= abs(g) < strands:
            raise DiagramError(f"generator {g} out of range for {strands} strands")
    pos = list(range(strands))      # current edge id at each position
    nxt_id = strands
    raw = []
    for g in word:
        i = abs(g) - 1
        ei, ej = pos[i], pos[i + 1]
        fi, fj = nxt_id, nxt_id + 1
        nxt_id += 2
        if g > 0:
            # under: i+1 -> i, over: i -> i+1
            raw.append(((ej, fj, fi, ei), (ej, fi), (ei, fj)))
        else:
            # under: i -> i+1, over: i+1 -> i
            raw.append(((ei, ej, fj, fi), (ei, fj), (ej, fi)))
        pos[i], pos[i + 1] = fi, fj
    # closing arcs identify the top edge at each position with the bottom one
    alias = {pos[p]: p for p in range(strands)}

    def canon(e):
        return alias.get(e, e)

    succ = {}
    for _, under, over in raw:
        for a, b in (under, over):
            succ[canon(a)] = canon(b)
    order = [canon(raw[0][1][0])]
    while True:
        e = succ[order[-1]]
        if e == order[0]:
            break
        order.append(e)
    if len(order) != 2 * len(word):
        raise DiagramError("braid closure has more than one component")
    label = {e: k + 1 for k, e in enumerate(order)}
    tuples = [tuple(label[canon(e)] for e in tup) for tup, _, _ in raw]
    kd = KnotDiagram(tuples, name=name)
    kd.braid = (list(word), strands)
    kd.braid_bottom = [label[p] for p in range(strands)]
    return kd



def braid_arc_colors(diagram, bottom):
    """
    Push colors of the bottom strands of a braid closure up through the
    braid and return the induced arc coloring (arc label -> color).  Under
    a positive crossing the outgoing under-color is t*(in - over) + over;
    under a negative one t^-1 replaces t.  The caller checks closure.
    """
    word, strands = diagram.braid
    if len(bottom) != strands:
        raise ValueError(f"expected {strands} bottom colors")
    col = list(bottom)
    edge = {diagram.braid_bottom[p]: col[p] for p in range(strands)}
    tinv = T.bar()
    for g, tup in zip(word, diagram.tuples):
        i = abs(g) - 1
        if g > 0:
            over, under = col[i], col[i + 1]
            col[i], col[i + 1] = (under - over) * T + over, over
            edge[tup[2]], edge[tup[1]] = col[i], col[i + 1]
        else:
            over, under = col[i + 1], col[i]
            col[i + 1], col[i] = (under - over) * tinv + over, over
            edge[tup[2]], edge[tup[3]] = col[i + 1], col[i]
    return {diagram.edge_arc[e]: v for e, v in edge.items()}


def diagram_from_ports(crossings, name=None):
    """
    Build a knot diagram from an abstract planar gluing.  Each crossing is
    ``(slots, over)``: four slot ids listed counterclockwise, with ports
    0/2 and 1/3 joined through the crossing, and ``over`` naming the pair
    (0 for ports 0,2; 1 for ports 1,3) that passes over.  Every slot id
    must occur exactly twice overall.  Orientation follows the walk that
    leaves crossing 0 through port 2.
    """
    occ = {}
    for ci, (slots, _) in enumerate(crossings):
        for p, s in enumerate(slots):
            occ.setdefault(s, []).append((ci, p))
    if any(len(v) != 2 for v in occ.values()):
        raise DiagramError("every slot must join exactly two ports")
    n = len(crossings)
    label = {}
    ci, p = 0, 0
    while True:
        q = (p + 2) % 4
        s = crossings[ci][0][q]
        if s in label:
            break
        label[s] = len(label) + 1
        a, b = occ[s]
        ci, p = b if a == (ci, q) else a
    if len(label) != 2 * n:
        raise DiagramError("the gluing has more than one component")
    tuples = []
    for slots, over in crossings:
        u0, u1 = (1, 3) if over == 0 else (0, 2)
        e0, e1 = label[slots[u0]], label[slots[u1]]
        start = u0 if e1 == e0 % (2 * n) + 1 else u1
        tuples.append(tuple(label[slots[(start + k) % 4]] for k in range(4)))
    return KnotDiagram(tuples, name=name)

_PD_HEAD = re.compile(r"^\s*PD\[(\d+)\]\s*:\s*(.*)$", re.S)
_PD_TUPLE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*([+-])\s*\)")


def parse_pd(text, name=None):
    """
    Parse ``PD[2n]: X(a,b,c,d,+) X(...) ...``.  A bare KnotInfo-style list
    ``[[a,b,c,d], ...]`` is accepted too, with signs derived from the labels.
    """
    text = text.strip()
    if text.startswith("["):
        import json
        try:
            tuples = json.loads(text)
        except ValueError as exc:
            raise DiagramError(f"malformed PD list: {exc}") from None
        return KnotDiagram(tuples, name=name)
    m = _PD_HEAD.match(text)
    if not m:
        raise DiagramError(f"PD text must start with 'PD[<edges>]:': {text[:40]!r}")
    declared = int(m.group(1))
    body = m.group(2).strip()
    tuples, signs = [], []
    pos = 0
    for tm in _PD_TUPLE.finditer(body):
        if body[pos:tm.start()].strip():
            raise DiagramError(f"malformed crossing tuple near {body[pos:tm.start()]!r}")
        pos = tm.end()
        a, b, c, d, s = tm.groups()
        tuples.append((int(a), int(b), int(c), int(d)))
        signs.append(+1 if s == "+" else -1)
    if body[pos:].strip():
        raise DiagramError(f"malformed crossing tuple near {body[pos:]!r}")
    if declared != 2 * len(tuples):
        raise DiagramError(f"declared {declared} edges but found {len(tuples)} crossings")
    return KnotDiagram(tuples, signs, name=name)


# -- colorings ----------------------------------------------------------------

def coloring_matrix(diagram, convention=None):
    """
    Rows are crossings, columns arcs; row tau encodes
    t*C(alpha) + (1-t)*C(beta) - C(gamma) = 0.
    """
    idx = {a: i for i, a in enumerate(diagram.arcs)}
    rows = []
    for cr in diagram.crossings:
        alpha, beta, gamma = cr.roles(convention)
        row = [ZERO] * len(diagram.arcs)
        row[idx[alpha]] = row[idx[alpha]] + T
        row[idx[beta]] = row[idx[beta]] + (ONE - T)
        row[idx[gamma]] = row[idx[gamma]] - ONE
        rows.append(row)
    return rows


def reduced_coloring_matrix(diagram, pinned=None, dropped=None, convention=None):
    """Square matrix after pinning one arc to zero and dropping one crossing relation."""
    m = coloring_matrix(diagram, convention)
    if not diagram.crossings:
        return [], diagram.arcs[0], None
    pinned = diagram.arcs[0] if pinned is None else pinned
    dropped = 0 if dropped is None else dropped
    j = diagram.arcs.index(pinned)
    red = [row[:j] + row[j + 1:] for i, row in enumerate(m) if i != dropped]
    return red, pinned, dropped


def diagram_alexander(diagram, convention=None):
    """det of the reduced coloring matrix: the Alexander polynomial up to +-t^k."""
    red, _, _ = reduced_coloring_matrix(diagram, convention=convention)
    return det(red)


def is_coloring(diagram, colors, convention=None):
    """``colors`` maps arc label -> QElem (or anything supporting ring ops)."""
    for cr in diagram.crossings:
        alpha, beta, gamma = cr.roles(convention)
        a, b, g = colors[alpha], colors[beta], colors[gamma]
        if (a - b) * T + b != g:
            return False
    return True


@dataclass
class ColoringBasis:
    modulus: object
    arcs: list
    generators: list      # each a dict arc -> QElem
    pinned: int
    dropped: int

    def vectors(self):
        return [[g[a] for a in self.arcs] for g in self.generators]

    def __len__(self):
        return len(self.generators)


def coloring_generators(diagram, modulus, pinned=None, dropped=None, convention=None):
    """
    Generators of the reduced coloring module over Lambda/(Delta): the
    adjugate columns of the reduced coloring matrix, with the pinned arc 0.
    """
    if not diagram.crossings:
        return ColoringBasis(modulus, diagram.arcs, [], diagram.arcs[0], None)
    red, pinned, dropped = reduced_coloring_matrix(diagram, pinned, dropped, convention)
    d = det(red)
    if d.is_zero() or d.divexact(modulus.delta) is None or not d.divexact(modulus.delta).is_unit():
        raise DiagramError(f"reduced coloring determinant {d} is not an associate of {modulus.delta}")
    adj = adjugate(red)
    free = [a for a in diagram.arcs if a != pinned]
    gens = []
    for j in range(len(free)):
        colors = {pinned: modulus.zero()}
        for i, arc in enumerate(free):
            colors[arc] = QElem(adj[i][j], modulus)
        if not is_coloring(diagram, colors, convention):
            raise ArithmeticError(f"adjugate column {j} fails a crossing relation")
        gens.append(colors)
    return ColoringBasis(modulus, list(diagram.arcs), gens, pinned, dropped)


def weight_sum(diagram, c1, c2, convention=None):
    """
    sum over crossings of sign * conj(C1(alpha) - C1(beta)) * C2(beta) * (1 - t^-1).
    """
    total = None
    factor = ONE - T.bar()
    for cr in diagram.crossings:
        alpha, beta, _ = cr.roles(convention)
        term = (c1[alpha] - c1[beta]).conj() * c2[beta] * factor
        term = term if cr.sign > 0 else -term
        total = term if total is None else total + term
    return total


def weight_gram(diagram, basis, convention=None):
    """Gram matrix of the weight sum on the basis generators, as a GramForm."""
    from .seifert import GramForm, ANTIHERMITIAN
    gens = basis.generators
    m = basis.modulus
    entries = [[weight_sum(diagram, a, b, convention) if diagram.crossings else m.zero()
                for b in gens] for a in gens]
    labels = [f"c{i + 1}" for i in range(len(gens))]
    g = GramForm(m, labels, entries, vectors=basis.vectors())
    return g.with_symmetry(ANTIHERMITIAN)
