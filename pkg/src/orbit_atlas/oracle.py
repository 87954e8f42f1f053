"""Brute-force ground truth over finite fields.

``enumerate_borel_orbits`` computes the actual B(F_q)-orbit partition of the
nilradical by breadth-first closure under a small generator set, then
certifies that generator set by checking every class is stable under every
one-parameter subgroup element and the full torus.  ``refine_check``
confronts the partition with the catalog's defining sets.  Dimensions are
audited independently through Jacobian ranks in ``jacobian_rank_dim``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import Fp, is_prime, primitive_root
from .catalog import Catalog, OrbitRecord, load_catalog, x_vars
from .classify import decode_points, encode_points, match_table
from .errors import (BudgetExceededError, InternalInconsistencyError,
                     SchemaError)
from .lie import (NilElement, mat_identity, mat_mul, nil_dim, pos_roots,
                  unipotent_inverse)

BFS_BUDGET = 2_000_000
JACOBIAN_PRIME = 101


# ---------------------------------------------------------------------------
# linear maps of group elements on nilradical coordinates


def _conj_matrix_modq(g: list[list], g_inv: list[list], n: int, q: int) -> np.ndarray:
    """Matrix (over F_q) of x -> g x g^{-1} in the coordinate basis."""
    d = nil_dim(n)
    roots = pos_roots(n)
    out = np.zeros((d, d), dtype=np.int64)
    for col, beta in enumerate(roots):
        basis = NilElement(n, {beta: 1})
        m = mat_mul(mat_mul(g, basis.to_matrix()), g_inv)
        for row, (i, j) in enumerate(roots):
            out[row, col] = m[i - 1][j] % q
    return out


def _torus_matrices(n: int, diag: list[int], q: int):
    size = n + 1
    inv_prod = 1
    for t in diag:
        inv_prod = (inv_prod * t) % q
    last = pow(inv_prod, -1, q)
    full = list(diag) + [last]
    g = [[full[i] if i == j else 0 for j in range(size)] for i in range(size)]
    gi = [[pow(full[i], -1, q) if i == j else 0 for j in range(size)]
          for i in range(size)]
    return g, gi


def _root_group_matrices(n: int, root, c: int, q: int):
    size = n + 1
    g = mat_identity(size)
    gi = mat_identity(size)
    g[root[0] - 1][root[1]] = c % q
    gi[root[0] - 1][root[1]] = (-c) % q
    return g, gi


def borel_generator_maps(n: int, q: int) -> list[np.ndarray]:
    """Generator set: one primitive-root torus per simple slot, plus U_root(1)
    and U_root(g) for every positive root."""
    g0 = primitive_root(q)
    maps = []
    for slot in range(n):
        diag = [1] * n
        diag[slot] = g0
        maps.append(_conj_matrix_modq(*_torus_matrices(n, diag, q), n, q))
    for root in pos_roots(n):
        for c in {1, g0}:
            maps.append(_conj_matrix_modq(*_root_group_matrices(n, root, c, q), n, q))
    return maps


def random_borel_maps(n: int, q: int, count: int, seed: int = 0) -> list[np.ndarray]:
    rng = random.Random(repr((seed, n, q)))
    size = n + 1
    maps = []
    for _ in range(count):
        diag = [rng.randrange(1, q) for _ in range(n)]
        tg, tgi = _torus_matrices(n, diag, q)
        u = mat_identity(size)
        for i in range(size):
            for j in range(i + 1, size):
                u[i][j] = rng.randrange(q)
        ui = [[x % q for x in row] for row in unipotent_inverse(u, size)]
        g = mat_mul(tg, u)
        gi = mat_mul(ui, tgi)
        g = [[x % q for x in row] for row in g]
        gi = [[x % q for x in row] for row in gi]
        maps.append(_conj_matrix_modq(g, gi, n, q))
    return maps


# ---------------------------------------------------------------------------
# orbit enumeration


@dataclass
class OrbitPartition:
    rank: int
    q: int
    class_of: np.ndarray           # point code -> class index
    reps: list                     # class index -> least point code
    sizes: list
    generators: str = ""

    @property
    def class_count(self) -> int:
        return len(self.reps)

    def rep_element(self, class_idx: int) -> NilElement:
        digits = decode_points(np.array([self.reps[class_idx]]),
                               nil_dim(self.rank), self.q)[0]
        return NilElement.from_vector(
            self.rank, [Fp(int(v), self.q) for v in digits])


def enumerate_borel_orbits(n: int, q: int, budget: int = BFS_BUDGET) -> OrbitPartition:
    """BFS closure of every point under the generator maps; classes are
    labeled by their lexicographically least point, so the partition is
    canonical regardless of traversal order."""
    if not is_prime(q):
        raise SchemaError(f"q = {q} is not prime")
    d = nil_dim(n)
    total = q**d
    if total > budget:
        raise BudgetExceededError(total, budget)
    maps = borel_generator_maps(n, q)
    class_of = np.full(total, -1, dtype=np.int32)
    reps: list[int] = []
    sizes: list[int] = []
    cursor = 0
    while True:
        while cursor < total and class_of[cursor] >= 0:
            cursor += 1
        if cursor >= total:
            break
        cls = len(reps)
        reps.append(cursor)
        class_of[cursor] = cls
        frontier = np.array([cursor], dtype=np.int64)
        size = 1
        while frontier.size:
            digits = decode_points(frontier, d, q)
            nxt = []
            for g in maps:
                codes = encode_points((digits @ g.T) % q, q)
                fresh = codes[class_of[codes] < 0]
                if fresh.size:
                    fresh = np.unique(fresh)
                    fresh = fresh[class_of[fresh] < 0]
                    class_of[fresh] = cls
                    size += fresh.size
                    nxt.append(fresh)
            frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
        sizes.append(size)
    return OrbitPartition(n, q, class_of, reps, sizes,
                          generators="slot-torus(g), U_root(1), U_root(g)")


def stability_check(part: OrbitPartition, full_torus_cap: int = 4096) -> dict:
    """Certify the partition: every class stable under U_root(c) for every
    root and c, under every single-slot torus, and (when small enough) under
    every full torus element.  Raises on any violation."""
    n, q = part.rank, part.q
    d = nil_dim(n)
    total = q**d
    digits = decode_points(np.arange(total, dtype=np.int64), d, q)
    maps = []
    for root in pos_roots(n):
        for c in range(q):
            maps.append(_conj_matrix_modq(*_root_group_matrices(n, root, c, q), n, q))
    for slot in range(n):
        for c in range(1, q):
            diag = [1] * n
            diag[slot] = c
            maps.append(_conj_matrix_modq(*_torus_matrices(n, diag, q), n, q))
    full_torus = (q - 1) ** n
    if full_torus <= full_torus_cap:
        from itertools import product
        for diag in product(range(1, q), repeat=n):
            maps.append(_conj_matrix_modq(*_torus_matrices(n, list(diag), q), n, q))
    checked = 0
    for g in maps:
        codes = encode_points((digits @ g.T) % q, q)
        if not (part.class_of[codes] == part.class_of).all():
            bad = int(np.argmax(part.class_of[codes] != part.class_of))
            raise InternalInconsistencyError(
                f"class not stable at point code {bad} over F_{q}")
        checked += 1
    return {"maps_checked": checked, "full_torus_included": full_torus <= full_torus_cap}


def generator_sufficiency_check(part: OrbitPartition, extra: int = 100,
                                seed: int = 0) -> bool:
    """Adding random Borel elements must never merge classes."""
    n, q = part.rank, part.q
    d = nil_dim(n)
    digits = decode_points(np.arange(q**d, dtype=np.int64), d, q)
    for g in random_borel_maps(n, q, extra, seed):
        codes = encode_points((digits @ g.T) % q, q)
        if not (part.class_of[codes] == part.class_of).all():
            return False
    return True


# ---------------------------------------------------------------------------
# refinement against the catalog


@dataclass
class RefineReport:
    rank: int
    q: int
    class_count: int
    classes_per_record: dict        # orbit id -> list of class indices
    empty_records: list
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def nonempty_record_count(self) -> int:
        return sum(1 for v in self.classes_per_record.values() if v)


def refine_check(n: int, q: int, catalog: Catalog | None = None,
                 budget: int = BFS_BUDGET,
                 partition: OrbitPartition | None = None) -> RefineReport:
    """Certify that rational orbits refine the catalog partition: every BFS
    class sits inside exactly one defining set, every defining set is a union
    of whole classes, and empties are reported rather than failed."""
    cat = catalog if catalog is not None else load_catalog(n)
    part = partition if partition is not None else enumerate_borel_orbits(n, q, budget)
    d = nil_dim(n)
    total = q**d
    digits = decode_points(np.arange(total, dtype=np.int64), d, q)
    matched = match_table(cat, digits, q)       # certifies exhaustion too
    violations = []
    classes_per_record: dict = {rec.id: [] for rec in cat.orbits}
    order = np.argsort(part.class_of, kind="stable")
    sorted_classes = part.class_of[order]
    sorted_matches = matched[order]
    boundaries = np.searchsorted(sorted_classes, np.arange(part.class_count + 1))
    for cls in range(part.class_count):
        lo, hi = boundaries[cls], boundaries[cls + 1]
        recs = np.unique(sorted_matches[lo:hi])
        if recs.size != 1:
            pt = decode_points(np.array([order[lo]]), d, q)[0].tolist()
            violations.append(
                f"class {cls} (rep point {pt}) meets records "
                f"{[cat.orbits[int(r)].id for r in recs]}")
            continue
        classes_per_record[cat.orbits[int(recs[0])].id].append(cls)
    empty = [rid for rid, v in classes_per_record.items() if not v]
    return RefineReport(n, q, part.class_count, classes_per_record, empty,
                        violations)


# ---------------------------------------------------------------------------
# dimension audit


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    a = [[x % p for x in row] for row in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, m) if a[i][col] % p), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _rank_exact(rows: list[list[Fraction]]) -> int:
    a = [list(map(Fraction, row)) for row in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = Fraction(1) / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def orbit_sample_points(rec: OrbitRecord, count: int, p: int,
                        seed: int = 0) -> list[dict]:
    """Points of the orbit over F_p, as images of the representative under
    random Borel elements (hence inside the defining set by containment)."""
    n = rec.rank
    rng = random.Random(repr((seed, rec.id, p)))
    size = n + 1
    points = []
    rep_m = rec.representative.to_matrix()
    for _ in range(count):
        diag = [rng.randrange(1, p) for _ in range(n)]
        tg, tgi = _torus_matrices(n, diag, p)
        u = mat_identity(size)
        for i in range(size):
            for j in range(i + 1, size):
                u[i][j] = rng.randrange(p)
        ui = [[x % p for x in row] for row in unipotent_inverse(u, size)]
        g = [[x % p for x in row] for row in mat_mul(tg, u)]
        gi = [[x % p for x in row] for row in mat_mul(ui, tgi)]
        m = mat_mul(mat_mul(g, rep_m), gi)
        env = {}
        for (i, j), var in zip(pos_roots(n), x_vars(n)):
            env[var] = m[i - 1][j] % p
        points.append(env)
    return points


def jacobian_rank_dim(rec: OrbitRecord, samples: int = 20,
                      p: int = JACOBIAN_PRIME, seed: int = 0) -> int:
    """Dimension as (nilradical dimension) - (Jacobian rank of the zero set),
    the rank maximized over the representative and random orbit points, with
    the representative cross-checked over the rationals."""
    n = rec.rank
    d = nil_dim(n)
    if not rec.zero_set:
        return d
    vars_ = x_vars(n)
    jac = [[poly.derivative(v) for v in vars_] for poly in rec.zero_set]
    rep_env = {var: rec.representative.coord(root)
               for root, var in zip(pos_roots(n), vars_)}
    if len(rec.zero_set) > d:
        raise InternalInconsistencyError(
            f"{rec.id}: more zero-set generators than coordinates")

    def eval_rows_mod(env):
        return [[int(cell.eval_mod_p(env, p).v) for cell in row] for row in jac]

    rep_rows_exact = [[Fraction(cell.eval(rep_env)) for cell in row] for row in jac]
    rank_rep_exact = _rank_exact(rep_rows_exact)
    rank_rep_mod = _rank_mod_p(eval_rows_mod(rep_env), p)
    if rank_rep_exact != rank_rep_mod:
        raise InternalInconsistencyError(
            f"{rec.id}: rational and mod-{p} Jacobian ranks differ at the "
            f"representative")
    best = rank_rep_mod
    for env in orbit_sample_points(rec, samples, p, seed):
        best = max(best, _rank_mod_p(eval_rows_mod(env), p))
        if best == len(rec.zero_set):
            break
    return d - best
