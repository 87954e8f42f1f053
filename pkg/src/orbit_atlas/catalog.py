"""Orbit catalogs: representatives, defining equations, dimensions, witnesses.

One JSON file per rank ships with the package (``data/a<n>.json``); the
``ORBIT_ATLAS_DATA`` environment variable points loads at an alternative
directory.  Every record carries two layers: the normalized, machine-checked
data, and an ``as_printed`` provenance layer transcribing the upstream source
tables verbatim, with every normalization recorded in ``notes``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

from .arith import LaurentFraction, LaurentPoly, parse_poly
from .errors import CatalogError
from .lie import (NilElement, coordinate_letters, nil_dim, parse_root_token,
                  pos_roots, root_token)

SCHEMA_VERSION = 1

ORBIT_COUNTS = {1: 2, 2: 5, 3: 16, 4: 61}


def x_vars(n: int) -> list[str]:
    """Coordinate-function names in canonical root order: X11, X22, ..."""
    return [f"X{i}{j}" for (i, j) in pos_roots(n)]


def letter_of_var(n: int) -> dict[str, str]:
    return dict(zip(x_vars(n), coordinate_letters(n)))


def var_of_letter(n: int) -> dict[str, str]:
    return dict(zip(coordinate_letters(n), x_vars(n)))


@dataclass(frozen=True)
class WitnessConstraint:
    """Equality constraint on the coordinates of a general member, written in
    coordinate letters, together with the designated solve letter."""

    poly: str
    solve: str


@dataclass(frozen=True)
class WitnessRadical:
    """Adjoined root: name^order = radicand (radicand in coordinate letters)."""

    name: str
    order: int
    radicand: str


@dataclass(frozen=True)
class WitnessTemplate:
    constraints: tuple[WitnessConstraint, ...]
    radicals: tuple[WitnessRadical, ...]
    torus: tuple[str, ...]
    factors: tuple[tuple[tuple[int, int], str], ...]


@dataclass(frozen=True)
class OrbitRecord:
    id: str
    rank: int
    representative: NilElement
    zero_set: tuple[LaurentPoly, ...]
    nonzero_set: tuple[LaurentPoly, ...]
    zero_strs: tuple[str, ...]
    nonzero_strs: tuple[str, ...]
    dim: int
    witness: WitnessTemplate
    as_printed: dict = field(default_factory=dict)
    notes: tuple[dict, ...] = ()

    def witness_repairs(self) -> list[str]:
        return [n["note"] for n in self.notes if n.get("field") == "witness"]

    def set_repairs(self) -> list[str]:
        return [n["note"] for n in self.notes if n.get("field") == "sets"]

    def linear_zero_vars(self) -> list[str]:
        out = []
        for p, s in zip(self.zero_set, self.zero_strs):
            if p.is_monomial() and len(p.used_vars()) == 1 and p.total_degrees() == {1}:
                out.append(next(iter(p.used_vars())))
        return out

    def nonlinear_zero(self) -> list[LaurentPoly]:
        linear = set(self.linear_zero_vars())
        return [p for p in self.zero_set
                if not (p.is_monomial() and p.used_vars() <= linear
                        and p.total_degrees() == {1})]


@dataclass(frozen=True)
class Catalog:
    rank: int
    schema_version: int
    orbits: tuple[OrbitRecord, ...]

    def by_id(self, orbit_id: str) -> OrbitRecord:
        for rec in self.orbits:
            if rec.id == orbit_id:
                return rec
        raise CatalogError(f"no orbit {orbit_id!r} in rank {self.rank}")

    def ordered_by_dim(self) -> list[OrbitRecord]:
        return sorted(self.orbits, key=lambda r: (r.dim, r.id))


# ---------------------------------------------------------------------------
# load / serialize


def _data_path(n: int):
    override = os.environ.get("ORBIT_ATLAS_DATA")
    if override:
        return os.path.join(override, f"a{n}.json")
    return resources.files("orbit_atlas").joinpath("data").joinpath(f"a{n}.json")


def _read_text(path) -> str:
    if isinstance(path, str):
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    return path.read_text(encoding="utf-8")


def rep_from_tokens(n: int, tokens: Iterable[str]) -> NilElement:
    coords = {}
    for tok in tokens:
        root = parse_root_token(tok, n)
        if root in coords:
            raise CatalogError(f"repeated root {tok} in representative")
        coords[root] = 1
    return NilElement(n, coords)


def orbit_id_for(rep: NilElement) -> str:
    toks = [root_token(r) for r in pos_roots(rep.rank) if rep.coord(r) == 1]
    return "+".join(toks) if toks else "0"


def load_catalog(n: int, path=None) -> Catalog:
    """Load and structurally validate the rank-n catalog."""
    src = path if path is not None else _data_path(n)
    try:
        raw = json.loads(_read_text(src))
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog for rank {n}: {exc}") from exc
    if raw.get("type") != f"A{n}":
        raise CatalogError(f"catalog file type {raw.get('type')!r} != A{n}")
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogError(f"schema_version {version!r} unsupported")
    allowed = set(x_vars(n))
    letters = set(coordinate_letters(n))
    records = []
    seen = set()
    for row in raw.get("orbits", ()):
        rid = row.get("id", "<missing id>")
        try:
            rec = _record_from_json(n, row, allowed, letters)
        except Exception as exc:
            raise CatalogError(f"rank {n} row {rid!r}: {exc}") from exc
        if rec.id in seen:
            raise CatalogError(f"rank {n}: duplicate id {rec.id!r}")
        seen.add(rec.id)
        records.append(rec)
    if len(records) != ORBIT_COUNTS[n]:
        raise CatalogError(
            f"rank {n}: {len(records)} records, expected {ORBIT_COUNTS[n]}")
    empty_zero = [r.id for r in records if not r.zero_set]
    empty_nonzero = [r.id for r in records if not r.nonzero_set]
    if len(empty_zero) != 1 or len(empty_nonzero) != 1:
        raise CatalogError(
            f"rank {n}: regular/zero orbit uniqueness violated "
            f"(empty zero_set: {empty_zero}, empty nonzero_set: {empty_nonzero})")
    return Catalog(n, version, tuple(records))


def _record_from_json(n, row, allowed, letters) -> OrbitRecord:
    rep = rep_from_tokens(n, row["rep"])
    rid = row["id"]
    if orbit_id_for(rep) != rid:
        raise CatalogError(f"id {rid!r} does not match representative")
    zero_strs = tuple(row["zero_set"])
    nonzero_strs = tuple(row["nonzero_set"])
    zero = tuple(parse_poly(s, allowed) for s in zero_strs)
    nonzero = tuple(parse_poly(s, allowed) for s in nonzero_strs)
    dim = int(row["dim"])
    if dim != nil_dim(n) - len(zero):
        raise CatalogError(
            f"dim {dim} != {nil_dim(n)} - {len(zero)} zero-set generators")
    w = row["witness"]
    constraints = tuple(
        WitnessConstraint(c["poly"], c["solve"]) for c in w.get("constraints", ()))
    for c in constraints:
        parse_poly(c.poly, letters)
        if c.solve not in letters:
            raise CatalogError(f"solve letter {c.solve!r} unknown")
    radicals = tuple(
        WitnessRadical(r["name"], int(r["order"]), r["radicand"])
        for r in w.get("radicals", ()))
    for r in radicals:
        parse_poly(r.radicand, letters | {x.name for x in radicals})
    torus = tuple(w.get("torus", ()))
    if torus and len(torus) != n:
        raise CatalogError(f"torus needs {n} entries, got {len(torus)}")
    factors = tuple(
        ((int(f["root"][0]), int(f["root"][1])), f["param"])
        for f in w.get("factors", ()))
    for (i, j), _ in factors:
        if not 1 <= i <= j <= n:
            raise CatalogError(f"factor root ({i},{j}) outside rank {n}")
    notes = tuple(dict(x) for x in row.get("notes", ()))
    return OrbitRecord(
        id=rid, rank=n, representative=rep,
        zero_set=zero, nonzero_set=nonzero,
        zero_strs=zero_strs, nonzero_strs=nonzero_strs,
        dim=dim,
        witness=WitnessTemplate(constraints, radicals, torus, factors),
        as_printed=dict(row.get("as_printed", {})),
        notes=notes)


def record_to_json(rec: OrbitRecord) -> dict:
    w = rec.witness
    return {
        "id": rec.id,
        "rep": [root_token(r) for r in pos_roots(rec.rank)
                if rec.representative.coord(r) == 1],
        "zero_set": list(rec.zero_strs),
        "nonzero_set": list(rec.nonzero_strs),
        "dim": rec.dim,
        "witness": {
            "constraints": [{"poly": c.poly, "solve": c.solve}
                            for c in w.constraints],
            "radicals": [{"name": r.name, "order": r.order,
                          "radicand": r.radicand} for r in w.radicals],
            "torus": list(w.torus),
            "factors": [{"root": list(root), "param": param}
                        for root, param in w.factors],
        },
        "as_printed": dict(rec.as_printed),
        "notes": [dict(x) for x in rec.notes],
    }


def serialize_catalog(cat: Catalog) -> str:
    doc = {
        "type": f"A{cat.rank}",
        "schema_version": cat.schema_version,
        "orbits": [record_to_json(r) for r in cat.orbits],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# the as_printed provenance grammar


class WitnessParseError(CatalogError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


_PRINTED_FACTOR = re.compile(r"\s*U_?(\d{1,2})\s*")


def _scan_parens(text: str, pos: int):
    if pos >= len(text) or text[pos] != "(":
        raise WitnessParseError(text, pos, "expected '('")
    depth = 0
    for i in range(pos, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return text[pos + 1:i], i + 1
    raise WitnessParseError(text, pos, "unbalanced parentheses")


def parse_printed_word(text: str, rank: int):
    """Parse a transcribed source word 'T(...) U_1(...) U_23(...) ...'.

    Single-digit factor subscripts name simple roots; corrupted token streams
    raise WitnessParseError (the detector for rows unusable as printed)."""
    s = text.strip()
    pos = 0
    torus = None
    if s.startswith("T"):
        body, pos = _scan_parens(s, 1)
        parts, depth, cur = [], 0, ""
        for ch in body:
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
                continue
            depth += ch == "("
            depth -= ch == ")"
            cur += ch
        parts.append(cur)
        if len(parts) != rank:
            raise WitnessParseError(text, 0, f"torus needs {rank} entries")
        torus = tuple(p.strip() for p in parts)
    factors = []
    while pos < len(s):
        m = _PRINTED_FACTOR.match(s, pos)
        if not m:
            if s[pos:].strip() == "":
                break
            raise WitnessParseError(text, pos, "expected a root-group factor")
        digits = m.group(1)
        if len(digits) == 1:
            root = (int(digits), int(digits))
        else:
            root = (int(digits[0]), int(digits[1]))
        if not 1 <= root[0] <= root[1] <= rank:
            raise WitnessParseError(text, m.start(1), f"root {digits} out of range")
        body, pos = _scan_parens(s, m.end())
        factors.append((root, body.strip()))
    return torus, factors


# ---------------------------------------------------------------------------
# validation report


# Source-style variable aliases used by the as_printed layer: single-index
# names denote the simple-root coordinates.
_PRINTED_ALIASES = {"X1": "X11", "X2": "X22", "X3": "X33", "X4": "X44"}


def _parse_printed_set(text: str, n: int):
    """Parse an as_printed defining-equation string 'Z(...) & V(...)'."""
    text = text.strip()
    zero_part, nonzero_part = [], []
    for chunk in text.split("&"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.startswith("Z(") and chunk.endswith(")"):
            body, target = chunk[2:-1], zero_part
        elif chunk.startswith("V(") and chunk.endswith(")"):
            body, target = chunk[2:-1], nonzero_part
        else:
            raise CatalogError(f"bad set chunk {chunk!r}")
        depth = 0
        cur = ""
        for ch in body:
            if ch == "," and depth == 0:
                target.append(cur)
                cur = ""
                continue
            depth += ch == "("
            depth -= ch == ")"
            cur += ch
        if cur.strip():
            target.append(cur)
    allowed = set(x_vars(n)) | set(_PRINTED_ALIASES)
    alias_env = dict(_PRINTED_ALIASES)

    def norm(s: str) -> LaurentPoly:
        poly = parse_poly(s, allowed)
        sub = {a: LaurentFraction(LaurentPoly.var(v))
               for a, v in alias_env.items()}
        return poly.subs(sub).num

    return [norm(s) for s in zero_part], [norm(s) for s in nonzero_part]


@dataclass
class RecordReport:
    orbit_id: str
    representative_member: bool
    homogeneous: bool
    zv_sane: bool
    printed_set_status: str    # "match" | "diff" | "unparseable" | "absent"
    printed_word_status: str   # "parseable" | "unparseable" | "absent"
    notes: list[str]

    @property
    def ok(self) -> bool:
        return self.representative_member and self.homogeneous and self.zv_sane


@dataclass
class CatalogReport:
    rank: int
    records: list[RecordReport]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def diffs(self) -> list[RecordReport]:
        return [r for r in self.records
                if r.printed_set_status not in ("match", "absent") or r.notes]


def _rep_member(rec: OrbitRecord) -> bool:
    point = {}
    for (i, j) in pos_roots(rec.rank):
        point[f"X{i}{j}"] = rec.representative.coord((i, j))
    for p in rec.zero_set:
        if p.eval(point) != 0:
            return False
    for p in rec.nonzero_set:
        if p.eval(point) == 0:
            return False
    return True


def validate_catalog(cat: Catalog) -> CatalogReport:
    """Self-check layer: representative membership, homogeneity, Z/V variable
    sanity, and as_printed-vs-normalized diffs.  Failures are carried in the
    report, not raised."""
    reports = []
    for rec in cat.orbits:
        notes = [n["note"] for n in rec.notes]
        homogeneous = all(p.is_homogeneous()
                          for p in rec.zero_set + rec.nonzero_set)
        zero_lin = {next(iter(p.used_vars())) for p in rec.zero_set
                    if p.is_monomial() and p.total_degrees() == {1}}
        nonzero_lin = {next(iter(p.used_vars())) for p in rec.nonzero_set
                       if p.is_monomial() and p.total_degrees() == {1}}
        zv_sane = not (zero_lin & nonzero_lin)
        printed = rec.as_printed.get("set")
        if not printed:
            status = "absent"
        else:
            try:
                pz, pnz = _parse_printed_set(printed, cat.rank)
            except Exception:
                status = "unparseable"
            else:
                def signset(polys):
                    out = set()
                    for p in polys:
                        out.add(min(tuple(p.items()), tuple((-p).items())))
                    return out
                same = (signset(pz) == signset(rec.zero_set)
                        and signset(pnz) == signset(rec.nonzero_set))
                status = "match" if same else "diff"
        word = rec.as_printed.get("word")
        if not word:
            word_status = "absent"
        else:
            try:
                parse_printed_word(word, cat.rank)
                word_status = "parseable"
            except WitnessParseError:
                word_status = "unparseable"
        reports.append(RecordReport(
            orbit_id=rec.id,
            representative_member=_rep_member(rec),
            homogeneous=homogeneous,
            zv_sane=zv_sane,
            printed_set_status=status,
            printed_word_status=word_status,
            notes=notes))
    return CatalogReport(cat.rank, reports)
