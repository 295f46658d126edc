"""
The knot database: JSON records with PD codes, Seifert matrices and
expected values, plus a converter for KnotInfo CSV exports.

Schema (version 1)::

    {"schema_version": 1,
     "knots": [{"name": "3_1", "pd": "PD[6]: X(...) ...", "alt_pd": null,
                "seifert": [[-1, 0], [-1, -1]], "expected_delta": "t^2-t+1",
                "expected_alpha": "1", "source": "...", "optional": false}, ...]}

``alt_pd`` may be null, a PD string, or a list of PD strings.
"""

import csv
import json
import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources

from .laurent import parse_laurent
from .quotient import Modulus
from .diagram import parse_pd, diagram_alexander, DiagramError
from .seifert import seifert_data

__all__ = [
    "SCHEMA_VERSION", "KnotRecord", "KnotDB", "DatabaseError", "db_import",
    "db_loads", "db_dumps", "bundled_path", "default_db", "knotinfo_records",
]

SCHEMA_VERSION = 1
_FIELDS = {"name", "pd", "alt_pd", "seifert", "expected_delta", "expected_alpha",
           "source", "optional"}
_REQUIRED = {"name", "pd", "seifert"}


class DatabaseError(ValueError):
    pass


@dataclass
class KnotRecord:
    name: str
    pd: str
    seifert: list
    alt_pd: list = field(default_factory=list)
    expected_delta: str = None
    expected_alpha: str = None
    source: str = ""
    optional: bool = False

    @cached_property
    def diagram(self):
        return parse_pd(self.pd, name=self.name)

    @cached_property
    def alt_diagrams(self):
        return [parse_pd(p, name=f"{self.name} (alt {i + 1})") for i, p in enumerate(self.alt_pd)]

    @cached_property
    def seifert_data(self):
        return seifert_data(self.seifert)

    @property
    def modulus(self):
        return self.seifert_data.modulus

    def expected_delta_modulus(self):
        if self.expected_delta is None:
            return None
        return Modulus(parse_laurent(self.expected_delta))

    def expected_alpha_value(self):
        """Expected alpha as an element of Lambda/(Delta), or None."""
        if self.expected_alpha is None:
            return None
        return self.modulus(parse_laurent(self.expected_alpha))

    def validate(self):
        """
        Check the record invariants; raises DatabaseError naming the one that fails:
        ``seifert_delta`` (Seifert route vs expected_delta), ``diagram_delta``
        (diagram route vs Seifert route), ``alt_diagram_delta``, ``delta_at_one``
        and ``pd_valid``.
        """
        try:
            self.diagram, self.alt_diagrams
        except DiagramError as exc:
            raise DatabaseError(f"{self.name}: invariant pd_valid fails: {exc}") from None
        m = self.modulus
        exp = self.expected_delta_modulus()
        if exp is not None and exp.delta != m.delta:
            raise DatabaseError(f"{self.name}: invariant seifert_delta fails: "
                                f"det(tV - V') ~ {m.delta}, expected {exp.delta}")
        if abs(m.delta.evaluate(1)) != 1:
            raise DatabaseError(f"{self.name}: invariant delta_at_one fails: Delta(1) = {m.delta.evaluate(1)}")
        dd = Modulus(diagram_alexander(self.diagram), knot=False)
        if dd.delta != m.delta:
            raise DatabaseError(f"{self.name}: invariant diagram_delta fails: "
                                f"diagram gives {dd.delta}, Seifert matrix gives {m.delta}")
        for kd in self.alt_diagrams:
            da = Modulus(diagram_alexander(kd), knot=False)
            if da.delta != m.delta:
                raise DatabaseError(f"{self.name}: invariant alt_diagram_delta fails: {da.delta}")
        return True

    def to_dict(self):
        alt = None if not self.alt_pd else (self.alt_pd[0] if len(self.alt_pd) == 1 else list(self.alt_pd))
        return {"name": self.name, "pd": self.pd, "alt_pd": alt, "seifert": self.seifert,
                "expected_delta": self.expected_delta, "expected_alpha": self.expected_alpha,
                "source": self.source, "optional": self.optional}


def _short(name):
    """11n_73 -> 11_73."""
    return re.sub(r"^(\d+)[an]_?0*(\d+)$", r"\1_\2", name)


class KnotDB:
    def __init__(self, records=(), path=None):
        self.path = path
        self.records = {}
        for r in records:
            if r.name in self.records:
                raise DatabaseError(f"duplicate knot name {r.name!r}")
            self.records[r.name] = r
        self._validated = set()

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records[k] for k in self.names())

    def __contains__(self, name):
        return self.resolve(name) is not None

    def names(self):
        return sorted(self.records, key=_sort_key)

    def resolve(self, name):
        """Exact name, or the unique record whose short name (no a/n tag) matches."""
        if name in self.records:
            return name
        hits = [k for k in self.records if _short(k) == name]
        return hits[0] if len(hits) == 1 else None

    def get(self, name, validate=True):
        key = self.resolve(name)
        if key is None:
            raise KeyError(f"unknown knot {name!r}")
        rec = self.records[key]
        if validate and key not in self._validated:
            rec.validate()
            self._validated.add(key)
        return rec


def _sort_key(name):
    m = re.match(r"^(\d+)([an]?)_?(\d+)$", name)
    if not m:
        return (10 ** 6, name)
    return (int(m.group(1)), m.group(2), int(m.group(3)))


def _record_from(obj, where):
    if not isinstance(obj, dict):
        raise DatabaseError(f"{where}: record must be an object")
    extra = set(obj) - _FIELDS
    if extra:
        raise DatabaseError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = _REQUIRED - set(obj)
    if missing:
        raise DatabaseError(f"{where}: missing field(s) {sorted(missing)}")
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise DatabaseError(f"{where}: field 'name' must be a nonempty string")
    where = f"{where} ({name})"
    if not isinstance(obj["pd"], str):
        raise DatabaseError(f"{where}: field 'pd' must be a string")
    sv = obj["seifert"]
    if (not isinstance(sv, list) or any(not isinstance(row, list) for row in sv)
            or any(not isinstance(x, int) or isinstance(x, bool) for row in sv for x in row)):
        raise DatabaseError(f"{where}: field 'seifert' must be an integer matrix")
    alt = obj.get("alt_pd")
    if alt is None:
        alt = []
    elif isinstance(alt, str):
        alt = [alt]
    elif not (isinstance(alt, list) and all(isinstance(a, str) for a in alt)):
        raise DatabaseError(f"{where}: field 'alt_pd' must be null, a string or a list of strings")
    for key in ("expected_delta", "expected_alpha"):
        val = obj.get(key)
        if val is not None:
            if not isinstance(val, str):
                raise DatabaseError(f"{where}: field {key!r} must be a string")
            try:
                parse_laurent(val)
            except ValueError as exc:
                raise DatabaseError(f"{where}: field {key!r} does not parse: {exc}") from None
    return KnotRecord(name, obj["pd"], sv, alt, obj.get("expected_delta"),
                      obj.get("expected_alpha"), obj.get("source") or "",
                      bool(obj.get("optional", False)))


def db_loads(text, path=None):
    """Parse database JSON text.  Empty text gives an empty database."""
    if not text.strip():
        return KnotDB([], path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatabaseError(f"{path or '<text>'}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise DatabaseError("top level must be an object")
    ver = data.get("schema_version")
    if ver != SCHEMA_VERSION:
        raise DatabaseError(f"unsupported schema_version {ver!r}; expected {SCHEMA_VERSION}")
    knots = data.get("knots", [])
    if not isinstance(knots, list):
        raise DatabaseError("field 'knots' must be a list")
    recs = [_record_from(obj, f"knots[{i}]") for i, obj in enumerate(knots)]
    return KnotDB(recs, path)


def db_import(path):
    with open(path, encoding="utf-8") as fh:
        return db_loads(fh.read(), str(path))


def db_dumps(db):
    """JSON text with one line per field and one line per Seifert row."""
    recs = []
    for r in db:
        d = r.to_dict()
        lines = []
        for k, v in d.items():
            if k == "seifert":
                rows = ",\n".join("    " + json.dumps(row) for row in v)
                lines.append(f'   "seifert": [\n{rows}\n   ]' if v else '   "seifert": []')
            else:
                lines.append(f"   {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}")
        recs.append("  {\n" + ",\n".join(lines) + "\n  }")
    body = ",\n".join(recs)
    return (f'{{\n "schema_version": {SCHEMA_VERSION},\n "knots": [\n'
            + body + ("\n" if recs else "") + " ]\n}\n")


def bundled_path():
    return str(resources.files("knotpair") / "data" / "knots.json")


def default_db(path=None):
    """``path``, else $KNOTPAIR_DB, else the bundled database."""
    path = path or os.environ.get("KNOTPAIR_DB") or bundled_path()
    return db_import(path)


# -- KnotInfo import ------------------------------------------------------------------

def knotinfo_records(csv_path, names, expected=None, alt=None):
    """
    Records from a KnotInfo CSV export ('|' or ',' delimited) with columns
    name, pd_notation, seifert_matrix and alexander_polynomial.  ``expected``
    maps names to expected alpha strings, ``alt`` to alternative PD strings.
    """
    expected = expected or {}
    alt = alt or {}
    csv.field_size_limit(1 << 30)
    with open(csv_path, newline="", encoding="utf-8") as fh:
        head = fh.readline()
        fh.seek(0)
        delim = "|" if head.count("|") > head.count(",") else ","
        rows = {row["name"]: row for row in csv.DictReader(fh, delimiter=delim) if row["name"] in names}
    out = []
    for name in names:
        if name not in rows:
            raise DatabaseError(f"{name} not found in {csv_path}")
        row = rows[name]
        kd = parse_pd(row["pd_notation"], name=name)
        delta = parse_laurent(row["alexander_polynomial"].replace("*", ""))
        out.append(KnotRecord(
            name=name, pd=kd.to_text(), seifert=json.loads(row["seifert_matrix"]),
            alt_pd=list(alt.get(name, [])), expected_delta=str(Modulus(delta).delta),
            expected_alpha=expected.get(name),
            source="KnotInfo: pd_notation, seifert_matrix, alexander_polynomial",
            optional=name.startswith("12")))
    return out
