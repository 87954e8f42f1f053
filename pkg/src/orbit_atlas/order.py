"""Closure order on orbits and Hasse diagram emission.

i <= j means the i-th orbit lies in the Zariski closure of the j-th.  The
symbolic test works with a certified generating set for the functions
vanishing on each orbit closure: the record's own zero set, augmented by
every catalog polynomial of the rank whose pullback along the fully generic
orbit parametrization is identically zero.  (Augmentation matters: a zero
set describes the closure only up to extra components, and for a handful of
records a dependent quadratic that vanishes on the orbit separates those
components.)  A generator vanishes on S_i exactly when its normal form is
zero after substituting S_i's dense parametrization, so the symbolic layer
is decisive; the finite-field layer certifies every answer, producing an
explicit counterexample point for every non-relation and re-checking every
asserted relation on all rational points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import LaurentFraction, LaurentPoly
from .catalog import Catalog, OrbitRecord, letter_of_var, load_catalog, x_vars
from .classify import decode_points, record_mask, eval_poly_on_columns
from .errors import CatalogError, InternalInconsistencyError, SchemaError
from .lie import conjugate_nil, generic_borel_matrices, nil_dim, pos_roots

CERT_FIELDS = {1: (3, 5, 7), 2: (3, 5, 7), 3: (3, 5, 7), 4: (2, 3)}


def closure_generators(cat: Catalog) -> dict:
    """Certified vanishing polynomials per record: the record's zero set plus
    every catalog polynomial of this rank that vanishes identically on the
    fully generic orbit (an exact pullback computation)."""
    pool = []
    seen = set()
    for rec in cat.orbits:
        for poly, s in zip(rec.zero_set + rec.nonzero_set,
                           rec.zero_strs + rec.nonzero_strs):
            if poly not in seen:
                seen.add(poly)
                pool.append((poly, s))
    out = {}
    g, g_inv, _, _ = generic_borel_matrices(cat.rank)
    for rec in cat.orbits:
        moved = conjugate_nil(g, g_inv, rec.representative)
        coords = {}
        for root, var in zip(pos_roots(cat.rank), x_vars(cat.rank)):
            c = moved.coord(root)
            coords[var] = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
        gens = list(zip(rec.zero_set, rec.zero_strs))
        have = set(rec.zero_set)
        for poly, s in pool:
            if poly in have:
                continue
            value = poly.eval(coords)
            if isinstance(value, Fraction):
                value = LaurentPoly.const(value)
            if value.is_zero():
                gens.append((poly, s))
                have.add(poly)
        out[rec.id] = gens
    return out


def _closure_subs(rec: OrbitRecord) -> dict:
    """X-variable substitutions parametrizing a dense subset of S_rec: linear
    zero variables go to 0, each nonlinear generator's solve variable to its
    solution in the remaining coordinates."""
    subs: dict[str, LaurentFraction] = {}
    for v in rec.linear_zero_vars():
        subs[v] = LaurentFraction(0)
    l_of_v = letter_of_var(rec.rank)
    v_of_l = {l: v for v, l in l_of_v.items()}
    for c, poly in zip(rec.witness.constraints, rec.nonlinear_zero()):
        solve_var = v_of_l[c.solve]
        lin = poly.derivative(solve_var)
        if solve_var in lin.used_vars():
            raise SchemaError(f"{rec.id}: generator not linear in {solve_var}")
        rest = poly.subs({solve_var: LaurentFraction(0)}).num
        coeff = lin.subs(subs)
        if coeff.is_zero():
            raise SchemaError(f"{rec.id}: solve coefficient vanishes")
        subs[solve_var] = -(rest.subs(subs)) / coeff
    return subs


def closure_leq(rec_i: OrbitRecord, rec_j: OrbitRecord,
                j_generators=None) -> bool:
    """True when every certified vanishing polynomial of j's orbit closure
    vanishes identically on S_i.  Without an explicit generator list the
    record's own zero set is used (sufficient wherever that set cuts out the
    closure exactly; hasse() always passes the augmented list)."""
    if rec_i.rank != rec_j.rank:
        raise SchemaError("rank mismatch")
    if rec_i.id == rec_j.id:
        return True
    gens = ([g for g, _ in j_generators] if j_generators is not None
            else rec_j.zero_set)
    subs = _closure_subs(rec_i)
    for g in gens:
        if not g.subs(subs).is_zero():
            return False
    return True


@dataclass
class HassePoset:
    rank: int
    nodes: list                    # orbit ids sorted by (dim, id)
    dims: dict
    leq: dict                      # (a, b) -> bool, full order
    covers: list                   # transitive reduction edges (a, b), a < b
    counterexamples: dict = field(default_factory=dict)
    # (a, b) -> (q, point digits, violated generator string)

    def less(self, a: str, b: str) -> bool:
        return a != b and self.leq[(a, b)]

    def minimum(self) -> str:
        mins = [a for a in self.nodes
                if all(self.leq[(a, b)] for b in self.nodes)]
        return mins[0] if len(mins) == 1 else ""

    def maximum(self) -> str:
        maxs = [b for b in self.nodes
                if all(self.leq[(a, b)] for a in self.nodes)]
        return maxs[0] if len(maxs) == 1 else ""


def _certify(cat: Catalog, leq: dict, generators: dict, qs) -> dict:
    """Finite-field certification of the relation matrix.

    For every asserted relation a <= b, no rational point of S_a may violate
    a certified vanishing polynomial of b; every non-relation must exhibit a
    violating point in some tested field.  Additionally every rational point
    of Z(b's certified generators) must belong to some S_a with a <= b, which
    guards against an insufficiently augmented generating set."""
    counterexamples: dict = {}
    ids = [rec.id for rec in cat.orbits]
    idx_of = {rid: k for k, rid in enumerate(ids)}
    d = nil_dim(cat.rank)
    want = {(a, b) for a in ids for b in ids if a != b and not leq[(a, b)]}
    for q in qs:
        total = q**d
        digits = decode_points(np.arange(total, dtype=np.int64), d, q)
        cols = {var: digits[:, k].astype(np.int64)
                for k, var in enumerate(x_vars(cat.rank))}
        cache: dict = {}
        masks = {rec.id: record_mask(rec, cols, q, cache) for rec in cat.orbits}
        zero_vals = {}
        zset_mask = {}
        for rec in cat.orbits:
            zs = []
            zmask = np.ones(total, dtype=bool)
            for poly, s in generators[rec.id]:
                if poly not in cache:
                    cache[poly] = eval_poly_on_columns(poly, cols, q)
                zs.append((cache[poly], s))
                zmask &= cache[poly] == 0
            zero_vals[rec.id] = zs
            zset_mask[rec.id] = zmask
        for a in ids:
            mask_a = masks[a]
            if not mask_a.any():
                continue
            for b in ids:
                if a == b:
                    continue
                if leq[(a, b)]:
                    for vals, s in zero_vals[b]:
                        if (vals[mask_a] != 0).any():
                            raise InternalInconsistencyError(
                                f"{a} <= {b} symbolically but generator {s} "
                                f"is nonzero on S_{a}(F_{q})")
                elif (a, b) in want:
                    for vals, s in zero_vals[b]:
                        viol = mask_a & (vals != 0)
                        if viol.any():
                            pt = digits[int(np.argmax(viol))].tolist()
                            counterexamples[(a, b)] = (q, pt, s)
                            want.discard((a, b))
                            break
        # sufficiency guard: Z(certified generators of b) splits into exactly
        # the defining sets of the records below b
        for b in ids:
            allowed = np.zeros(total, dtype=bool)
            for a in ids:
                if leq[(a, b)]:
                    allowed |= masks[a]
            stray = zset_mask[b] & ~allowed
            if stray.any():
                pt = digits[int(np.argmax(stray))].tolist()
                raise InternalInconsistencyError(
                    f"point {pt} of F_{q} lies in the certified zero set of "
                    f"{b} but in no orbit below it; the closure generating "
                    f"set for {b} is incomplete")
    if want:
        raise InternalInconsistencyError(
            f"no finite-field counterexample found for non-relations: "
            f"{sorted(want)[:5]}")
    return counterexamples


def hasse(n: int, catalog: Catalog | None = None, qs=None,
          certify: bool = True) -> HassePoset:
    """Full closure order from pairwise symbolic tests, certified over the
    configured finite fields, reduced to cover edges."""
    cat = catalog if catalog is not None else load_catalog(n)
    qs = qs if qs is not None else CERT_FIELDS[n]
    recs = sorted(cat.orbits, key=lambda r: (r.dim, r.id))
    ids = [r.id for r in recs]
    dims = {r.id: r.dim for r in recs}
    by_id = {r.id: r for r in recs}
    generators = closure_generators(cat)
    leq = {}
    for a in ids:
        for b in ids:
            leq[(a, b)] = (closure_leq(by_id[a], by_id[b], generators[b])
                           if a != b else True)
    # order sanity: antisymmetry, transitivity, dimension monotonicity
    for a in ids:
        for b in ids:
            if a != b and leq[(a, b)]:
                if leq[(b, a)]:
                    raise CatalogError(f"closure order cycle between {a} and {b}")
                if dims[a] >= dims[b]:
                    raise CatalogError(
                        f"{a} < {b} but dim {dims[a]} >= {dims[b]}")
    for a in ids:
        for b in ids:
            if not (a != b and leq[(a, b)]):
                continue
            for c in ids:
                if c != a and c != b and leq[(b, c)] and not leq[(a, c)]:
                    raise CatalogError(
                        f"closure order not transitive at {a} < {b} < {c}")
    counterexamples = _certify(cat, leq, generators, qs) if certify else {}
    covers = []
    for a in ids:
        for b in ids:
            if a == b or not leq[(a, b)]:
                continue
            if any(c != a and c != b and leq[(a, c)] and leq[(c, b)]
                   for c in ids):
                continue
            covers.append((a, b))
    covers.sort(key=lambda e: (dims[e[0]], e[0], dims[e[1]], e[1]))
    poset = HassePoset(n, ids, dims, leq, covers, counterexamples)
    if poset.minimum() == "" or poset.maximum() == "":
        raise CatalogError("closure order lacks a unique minimum or maximum")
    return poset


def emit_dot(poset: HassePoset) -> str:
    """Deterministic DOT text: nodes grouped by dimension, fixed orderings,
    LF line endings."""
    lines = [
        "digraph closure_order {",
        "  rankdir=BT;",
        "  node [shape=box, fontname=\"Helvetica\"];",
    ]
    by_dim: dict[int, list[str]] = {}
    for node in poset.nodes:
        by_dim.setdefault(poset.dims[node], []).append(node)
    for dim in sorted(by_dim):
        group = " ".join(f"\"{v}\";" for v in sorted(by_dim[dim]))
        lines.append(f"  {{ rank=same; {group} }}")
    for node in poset.nodes:
        lines.append(f"  \"{node}\" [label=\"{node}\\ndim {poset.dims[node]}\"];")
    for a, b in poset.covers:
        lines.append(f"  \"{a}\" -> \"{b}\";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(poset: HassePoset) -> dict:
    return {
        "rank": poset.rank,
        "nodes": [{"id": v, "dim": poset.dims[v]} for v in poset.nodes],
        "covers": [[a, b] for a, b in poset.covers],
    }
