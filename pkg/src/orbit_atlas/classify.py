"""Membership tests and total classification of nilradical points.

``member`` and ``classify`` are exact, single-point operations over any
field (rationals or F_q).  ``partition_census`` enumerates the whole of
n(F_q) with vectorized evaluation and certifies the exhaustion and
disjointness of the catalog's defining sets while counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import Fp, is_prime
from .catalog import Catalog, OrbitRecord, load_catalog, x_vars
from .errors import (BudgetExceededError, DisjointnessError, ExhaustionError,
                     SchemaError, ShapeError)
from .lie import NilElement, nil_dim, pos_roots

CENSUS_BUDGET = 10_000_000


@dataclass(frozen=True)
class ClassificationResult:
    orbit_id: str
    zero_checked: int
    nonzero_checked: int


def _point_env(m: NilElement) -> dict:
    env = {}
    for root, var in zip(pos_roots(m.rank), x_vars(m.rank)):
        env[var] = m.coord(root)
    return env


def _value_is_zero(v) -> bool:
    if isinstance(v, Fp):
        return v.is_zero()
    return v == 0


def member(rec: OrbitRecord, m: NilElement) -> bool:
    """Exact membership in Z(zero_set) intersected with V(nonzero_set)."""
    if rec.rank != m.rank:
        raise ShapeError(f"record rank {rec.rank} != element rank {m.rank}")
    env = _point_env(m)
    ps = {k: (v if isinstance(v, (int, Fraction, Fp)) else v) for k, v in env.items()}
    for v in ps.values():
        if not isinstance(v, (int, Fraction, Fp)):
            raise SchemaError("membership requires field scalars, not symbols")
    modp = next((v.p for v in ps.values() if isinstance(v, Fp)), None)
    for poly in rec.zero_set:
        val = (poly.eval_mod_p(ps, modp) if modp else poly.eval(ps))
        if not _value_is_zero(val):
            return False
    for poly in rec.nonzero_set:
        val = (poly.eval_mod_p(ps, modp) if modp else poly.eval(ps))
        if _value_is_zero(val):
            return False
    return True


def classify(n: int, m: NilElement, catalog: Catalog | None = None,
             strict: bool = True) -> ClassificationResult:
    """Locate the unique catalog record whose defining set contains m.

    ``strict`` scans every record and certifies uniqueness; with it off the
    scan stops at the first match (legitimate only once the partition
    invariant has been certified for this rank and field).
    """
    cat = catalog if catalog is not None else load_catalog(n)
    matches = []
    zero_checked = nonzero_checked = 0
    for rec in cat.ordered_by_dim():
        if member(rec, m):
            matches.append(rec)
            zero_checked += len(rec.zero_set)
            nonzero_checked += len(rec.nonzero_set)
            if not strict:
                break
    if not matches:
        raise ExhaustionError(f"point {m.as_vector()} matched no record")
    if len(matches) > 1:
        raise DisjointnessError(
            f"point {m.as_vector()} matched {[r.id for r in matches]}")
    return ClassificationResult(matches[0].id, zero_checked, nonzero_checked)


# ---------------------------------------------------------------------------
# vectorized full-space evaluation


def decode_points(codes: np.ndarray, d: int, q: int) -> np.ndarray:
    """Mixed-radix decode; digit 0 (first root coordinate) is most significant,
    so numeric code order is lexicographic coordinate order."""
    out = np.empty((codes.shape[0], d), dtype=np.int64)
    rest = codes.astype(np.int64)
    for i in range(d - 1, -1, -1):
        out[:, i] = rest % q
        rest = rest // q
    return out


def encode_points(digits: np.ndarray, q: int) -> np.ndarray:
    codes = np.zeros(digits.shape[0], dtype=np.int64)
    for i in range(digits.shape[1]):
        codes = codes * q + digits[:, i]
    return codes


def eval_poly_on_columns(poly, cols: dict, q: int) -> np.ndarray:
    """Evaluate a catalog polynomial on per-variable value arrays mod q."""
    n_points = next(iter(cols.values())).shape[0]
    acc = np.zeros(n_points, dtype=np.int64)
    for exps, coeff in poly.terms.items():
        c = int(coeff) % q
        term = np.full(n_points, c, dtype=np.int64)
        for var, e in zip(poly.vars, exps):
            if e == 0:
                continue
            if e < 0:
                raise SchemaError("catalog polynomials are exponent-positive")
            col = cols[var]
            for _ in range(e):
                term = (term * col) % q
        acc = (acc + term) % q
    return acc


def record_mask(rec: OrbitRecord, cols: dict, q: int,
                cache: dict | None = None) -> np.ndarray:
    """Boolean mask of points satisfying the record's defining conditions."""

    def values(poly):
        if cache is None:
            return eval_poly_on_columns(poly, cols, q)
        key = poly
        if key not in cache:
            cache[key] = eval_poly_on_columns(poly, cols, q)
        return cache[key]

    n_points = next(iter(cols.values())).shape[0]
    mask = np.ones(n_points, dtype=bool)
    for poly in rec.zero_set:
        mask &= values(poly) == 0
        if not mask.any():
            return mask
    for poly in rec.nonzero_set:
        mask &= values(poly) != 0
        if not mask.any():
            return mask
    return mask


def match_table(cat: Catalog, digits: np.ndarray, q: int) -> np.ndarray:
    """Index of the unique matching record for every point (rows of digits);
    raises on unmatched or doubly matched points."""
    cols = {var: digits[:, i].astype(np.int64)
            for i, var in enumerate(x_vars(cat.rank))}
    cache: dict = {}
    n_points = digits.shape[0]
    matched = np.full(n_points, -1, dtype=np.int32)
    count = np.zeros(n_points, dtype=np.int8)
    for idx, rec in enumerate(cat.orbits):
        mask = record_mask(rec, cols, q, cache)
        count += mask
        matched[mask] = idx
    if (count == 0).any():
        code = int(np.argmax(count == 0))
        raise ExhaustionError(
            f"point {digits[code].tolist()} over F_{q} matched no record")
    if (count > 1).any():
        code = int(np.argmax(count > 1))
        raise DisjointnessError(
            f"point {digits[code].tolist()} over F_{q} matched several records")
    return matched


def partition_census(n: int, q: int, budget: int = CENSUS_BUDGET,
                     catalog: Catalog | None = None,
                     chunk: int = 1 << 19) -> dict:
    """Counts of every catalog set over F_q, with exhaustion and disjointness
    certified point by point.  Zero counts are reported, not dropped."""
    if not is_prime(q):
        raise SchemaError(f"q = {q} is not prime")
    cat = catalog if catalog is not None else load_catalog(n)
    d = nil_dim(n)
    total = q**d
    if total > budget:
        raise BudgetExceededError(total, budget)
    counts = {rec.id: 0 for rec in cat.orbits}
    ids = [rec.id for rec in cat.orbits]
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = decode_points(codes, d, q)
        matched = match_table(cat, digits, q)
        for idx, cnt in zip(*np.unique(matched, return_counts=True)):
            counts[ids[int(idx)]] += int(cnt)
    assert sum(counts.values()) == total
    return counts
