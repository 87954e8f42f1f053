#!/usr/bin/env python3
"""Regenerate the catalog data files (src/orbit_atlas/data/a*.json).

The record definitions below are the curated transcription of the upstream
classification tables: defining equations, dimensions, and witness words,
with an as_printed provenance layer and explicit notes for every
normalization applied to the printed rows.  Run from the repository root:

    python tools/build_catalog.py [--check]

--check verifies the emitted text matches the committed files byte for byte.
"""

import argparse
import json
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from orbit_atlas.catalog import SCHEMA_VERSION, load_catalog  # noqa: E402

_FACTOR_RX = re.compile(r"U(\d)(\d)\(")


def _split_factors(text):
    """Parse 'U33(-v/r) U11(r*u/w)' into [((3,3),'-v/r'), ((1,1),'r*u/w')]."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _FACTOR_RX.match(text, pos)
        if not m:
            raise ValueError(f"bad factor syntax at {text[pos:]!r}")
        root = (int(m.group(1)), int(m.group(2)))
        depth = 1
        i = m.end()
        while depth:
            if text[i] == "(":
                depth += 1
            elif text[i] == ")":
                depth -= 1
            i += 1
        out.append((root, text[m.end():i - 1].strip()))
        pos = i
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def rec(rid, zero, nonzero, dim, torus=None, factors="", cons=(), rads=(),
        pset="", pm="", pword="", notes=()):
    zero_list = zero.split() if zero else []
    nonzero_list = nonzero.split() if nonzero else []
    return {
        "id": rid,
        "rep": rid.split("+") if rid != "0" else [],
        "zero_set": [s.replace("*", " * ").replace("-", " - ").replace("+", " + ")
                     .replace("  ", " ").strip().replace(" * ", "*")
                     for s in zero_list],
        "nonzero_set": [s.replace("*", " * ").replace("-", " - ").replace("+", " + ")
                        .replace("  ", " ").strip().replace(" * ", "*")
                        for s in nonzero_list],
        "dim": dim,
        "witness": {
            "constraints": [{"poly": p, "solve": s} for p, s in cons],
            "radicals": [{"name": a, "order": k, "radicand": r}
                         for a, k, r in rads],
            "torus": list(torus) if torus else [],
            "factors": [{"root": list(root), "param": param}
                        for root, param in _split_factors(factors)],
        },
        "as_printed": {k: v for k, v in
                       (("set", pset), ("m", pm), ("word", pword)) if v},
        "notes": [{"field": f, "note": t} for f, t in notes],
    }


# ---------------------------------------------------------------------------
# rank 1  (coordinates: z)

A1 = [
    rec("0", "X11", "", 0,
        pset="Z(X1)", pm="m = 0", pword=""),
    rec("x11", "", "X11", 1,
        torus=["z^(1/2)"],
        pset="V(X1)", pm="m = z, z != 0",
        pword="T(sqrt(z))"),
]

# ---------------------------------------------------------------------------
# rank 2  (coordinates: x, y, z)

A2 = [
    rec("0", "X11 X22 X12", "", 0,
        pset="Z(X1,X2,X12)", pm="m = (0,0,0)", pword=""),
    rec("x12", "X11 X22", "X12", 1,
        torus=["z^(1/3)", "z^(1/3)"],
        pset="Z(X1,X2) & V(X12)", pm="m = (0,0,z), z != 0",
        pword="T(z^(1/3), z^(1/3))"),
    rec("x11", "X22", "X11", 2,
        torus=["x", "1"], factors="U22(-z/x^2)",
        pset="Z(X2) & V(X1)", pm="m = (x,0,z), x != 0",
        pword="T(x, 1) U_2(-z*x^(-2))"),
    rec("x22", "X11", "X22", 2,
        torus=["y", "1"], factors="U11(z/y^2)",
        pset="Z(X1) & V(X2)", pm="m = (0,y,z), y != 0",
        pword="",
        notes=[("provenance",
                "no explicit word in the source (stated by symmetry with the "
                "first simple-root orbit); the symmetric word is recorded and "
                "verified")]),
    rec("x11+x22", "", "X11 X22", 3,
        torus=["x^(2/3)*y^(1/3)", "x^(-1/3)*y^(1/3)"],
        factors="U11(z/(x*y))",
        pset="V(X1,X2)", pm="m = (x,y,z), x,y != 0",
        pword="T(x^(2/3)*y^(1/3), x^(-1/3)*y^(1/3)) U_1(z/(x*y))",
        notes=[("provenance",
                "source displays the witness as a single matrix; transcribed "
                "as torus times U_1 with the same entries")]),
]

# ---------------------------------------------------------------------------
# rank 3  (coordinates: u, v, w, x, y, z)

A3 = [
    rec("0", "X11 X22 X33 X12 X23 X13", "", 0,
        pset="Z(X1,X2,X3,X12,X23,X13)", pm="m = (0,0,0,0,0,0)", pword=""),
    rec("x13", "X11 X22 X33 X12 X23", "X13", 1,
        torus=["1", "1", "z"],
        pset="Z(X1,X2,X3,X12,X23) & V(X13)", pm="m = (0,0,0,0,0,z), z != 0",
        pword="T(1, 1, z)"),
    rec("x12", "X11 X22 X33 X23", "X12", 2,
        torus=["x", "1", "1"], factors="U33(-z/x^2)",
        pset="Z(X1,X2,X3,X23) & V(X12)", pm="m = (0,0,0,x,0,z), x != 0",
        pword="T(x, 1, 1) U_3(-z*x^(-2))"),
    rec("x23", "X11 X22 X33 X12", "X23", 2,
        torus=["y", "1", "1"], factors="U11(z/y^2)",
        pset="Z(X1,X2,X3,X12) & V(X23)", pm="m = (0,0,0,0,y,z), y != 0",
        pword="T(y, 1, 1) U_1(z*y^(-2))"),
    rec("x11", "X22 X33 X23", "X11", 3,
        torus=["u", "1", "1"], factors="U23(-z/u^2) U22(-x/u)",
        pset="Z(X2,X3,X23) & V(X1)", pm="m = (u,0,0,x,0,z), u != 0",
        pword="T(u, 1, 1) U_23(-z*u^(-2)) U_2(-x*u^(-1))"),
    rec("x22", "X11 X33 X22*X13-X12*X23", "X22", 3,
        cons=[("v*z - x*y", "z")],
        torus=["1", "v", "1"], factors="U11(x) U33(-y/v^2)",
        pset="Z(X1,X3,X2*X13-X12*X23) & V(X2)",
        pm="m = (0,v,0,x,y,z), v != 0, v*z - x*y = 0",
        pword="T(1, w, 1) U_1(x) U_3(-y*w^(-2))",
        notes=[("witness",
                "torus parameter letter normalized from w to the member "
                "coordinate v (the derivation in the text sets s = v)")]),
    rec("x33", "X11 X22 X12", "X33", 3,
        torus=["w", "1", "1"], factors="U12(z/w^2) U22(y/w)",
        pset="Z(X1,X2,X12) & V(X3)", pm="m = (0,0,w,0,y,z), w != 0",
        pword="T(w, 1, 1) U_12(z*w^(-2)) U_2(y*w^(-1))"),
    rec("x12+x23", "X11 X22 X33", "X12 X23", 3,
        torus=["x", "(y/x)^(1/2)", "1"], factors="U11(y*z*(x*y)^(-3/2))",
        pset="Z(X1,X2,X3) & V(X12,X23)", pm="m = (0,0,0,x,y,z), x,y != 0",
        pword="T(x, sqrt(y*x^(-1)), 1) U_1(y*z*(x*y)^(-3/2))"),
    rec("x22+x13", "X11 X33", "X22 X22*X13-X12*X23", 4,
        rads=[("R", 2, "v*z - x*y")],
        torus=["(v*z-x*y)^(1/2)/v", "v", "1"],
        factors="U33(-y/(v*(v*z-x*y)^(1/2))) U11(v*x/(v*z-x*y)^(1/2))",
        pset="Z(X1,X3) & V(X2,X2*X13-X12*X23)",
        pm="m = (0,v,0,x,y,z), v != 0, v*z - x*y != 0",
        pword="T(v^(-1)*sqrt(v*z-x*y), v, 1) "
              "U_3(-y*w^(-1)*(w*z-x*y)^(-1/2)) U_1(w*x*(w*z-x*y)^(-1/2))",
        notes=[("witness",
                "unipotent parameter letter normalized from w to the member "
                "coordinate v, matching the torus entry")]),
    rec("x33+x12", "X11 X22", "X12*X33+X11*X23", 4,
        torus=["x", "w/x", "1"], factors="U12(z/(x*w)) U22(x*y/w^2)",
        pset="Z(X1,X2) & V(X12*X3+X1*X23)",
        pm="m = (0,0,w,x,y,z), w,x != 0",
        pword="T(x, w*x^(-1), 1) U_12(z*(x*w)^(-1)) U_2(x*y*w^(-2))"),
    rec("x11+x23", "X22 X33", "X12*X33+X11*X23", 4,
        torus=["u", "1", "y/u"], factors="U11(z/(u*y)) U22(-x*y/u^2)",
        pset="Z(X2,X3) & V(X12*X3+X1*X23)",
        pm="m = (u,0,0,x,y,z), u,y != 0",
        pword="T(u, 1, y*u^(-1)) U_1(z*(u*y)^(-1)) U_2(-x*y*u^(-2))"),
    rec("x11+x33", "X22 X12*X33+X11*X23", "X11 X33", 4,
        cons=[("x*w + u*y", "x")],
        torus=["u", "1", "(w/u)^(1/2)"],
        factors="U12(z*u^(-2)*(u/w)^(1/2)) U22(y*u^(-1)*(u/w)^(1/2))",
        pset="Z(X2,X12*X3+X1*X23) & V(X1,X3)",
        pm="m = (u,0,w,x,y,z), u,w != 0, w*x + u*y = 0",
        pword="T(u, 1, sqrt(w*u^(-1))) U_12(z*u^(-2)*sqrt(u*w^(-1))) "
              "U_2(y*u^(-1)*sqrt(u*w^(-1)))"),
    rec("x11+x22", "X33", "X11 X22", 5,
        torus=["u*v", "v", "1"],
        factors="U23((x*y-v*z)/(v^4*u^2)) U33(-y/(u*v^3)) U11(x/(v*u))",
        pset="Z(X3) & V(X1,X2)", pm="m = (u,v,0,x,y,z), u,v != 0",
        pword="T(u*v, v, 1) U_23((x*y-v*z)*v^(-4)*u^(-2)) "
              "U_3(-y*u^(-1)*v^(-3)) U_1(x*v^(-1)*u^(-1))"),
    rec("x22+x33", "X11", "X22 X33", 5,
        torus=["v^2*w", "1", "1/v"],
        factors="U12((v*z-x*y)/(v^4*w^2)) U33(-y/(v*w)) U11(x/(v^3*w))",
        pset="Z(X1) & V(X2,X3)", pm="m = (0,v,w,x,y,z), v,w != 0",
        pword="T(v^2*w, 1, v^(-1)) U_12((v*z-x*y)*v^(-4)*w^(-2)) "
              "U_3(-y*v^(-1)*w^(-1)) U_1(x*v^(-3)*w^(-1))"),
    rec("x11+x33+x23", "X22", "X11 X33 X12*X33+X11*X23", 5,
        rads=[("R", 2, "y*u + w*x")],
        torus=["(u*(y*u+w*x)^2/w)^(1/4)",
               "((y*u+w*x)^2/(u^3*w))^(1/4)",
               "(u*w^3/(y*u+w*x)^2)^(1/4)"],
        factors="U12(w*x*z/(y*u+w*x)^2) U11(z/(y*u+w*x)) U22(-w*x/(y*u+w*x))",
        pset="Z(X2) & V(X1,X3,X12*X3+X1*X23)",
        pm="m = (u,0,w,x,y,z), u,w != 0, w*x + u*y != 0",
        pword="T((u*(y*u*v)^2/v)^(1/4), ((y*u+v*x)^2/(u^3*v))^(1/4), "
              "(u*v^3/(y*u+v*x)^2)^(1/4)) "
              "U_12(v*x*z/(y*u+v*x)^2) U_1(z/(y*u+v*x)) U_2(-v*x/(y*u+v*x))",
        notes=[("witness",
                "parameter letter normalized from v to the member coordinate "
                "w throughout; the first torus radicand token (yuv)^2 read as "
                "(y*u+w*x)^2, which the verified solution requires")]),
    rec("x11+x22+x33", "", "X11 X22 X33", 6,
        torus=["u^(3/4)*v^(2/4)*w^(1/4)", "u^(-1/4)*v^(2/4)*w^(1/4)",
               "u^(-1/4)*v^(-2/4)*w^(1/4)"],
        factors="U12((v*w*z-y^2*u-w*x*y)/(u*v^2*w^2)) "
                "U11((x*w+y*u)/(u*v*w)) U22(y/(v*w))",
        pset="V(X1,X2,X3)", pm="m = (u,v,w,x,y,z), u,v,w != 0",
        pword="T(u^(3/4)*v^(2/4)*w^(1/4), u^(-1/4)*v^(2/4)*w^(1/4), "
              "u^(-1/4)*v^(-2/4)*w^(1/4)) "
              "U_12((v*w*z-y^2*u-w*x*y)*u^(-1)*v^(-2)*w^(-2)) "
              "U_1((x*w+y*u)*(u*v*w)^(-1)) U_2(y*(v*w)^(-1))"),
]

# ---------------------------------------------------------------------------
# rank 4  (coordinates: q, r, s, t, u, v, w, x, y, z)

A4 = [
    # dimension 0
    rec("0", "X11 X22 X33 X44 X12 X23 X34 X13 X24 X14", "", 0,
        pset="Z(X1,X2,X3,X4,X12,X23,X34,X13,X24,X14)",
        pm="m = (0,0,0,0,0,0,0,0,0,0)", pword=""),
    # dimension 1
    rec("x14", "X11 X22 X33 X44 X12 X23 X34 X13 X24", "X14", 1,
        torus=["1", "1", "1", "z"],
        pset="Z(X1,X2,X3,X4,X12,X23,X34,X13,X24) & V(X14)",
        pm="m = (0,0,0,0,0,0,0,0,0,z), z != 0",
        pword="T(1, 1, 1, z)"),
    # dimension 2
    rec("x13", "X11 X22 X33 X44 X12 X23 X34 X24", "X13", 2,
        torus=["x", "1", "1", "1"], factors="U44(-z/x^2)",
        pset="Z(X1,X2,X3,X4,X12,X23,X34,X24) & V(X13)",
        pm="m = (0,0,0,0,0,0,0,x,0,z), x != 0",
        pword="T(x, 1, 1, 1) U_4(z/x^2)",
        notes=[("witness",
                "sign of the U_4 parameter corrected to -z/x^2; the printed "
                "positive sign sends the member coordinate z to -z")]),
    rec("x24", "X11 X22 X33 X44 X12 X23 X34 X13", "X24", 2,
        torus=["y", "1", "1", "1"], factors="U11(z/y^2)",
        pset="Z(X1,X2,X3,X4,X12,X23,X34,X13) & V(X24)",
        pm="m = (0,0,0,0,0,0,0,0,y,z), y != 0",
        pword="T(y, 1, 1, z) U_1(z/y^2)",
        notes=[("witness",
                "fourth torus entry normalized from z to 1; as printed the "
                "word scales the member coordinate y by z")]),
    # dimension 3
    rec("x13+x24", "X11 X22 X33 X44 X12 X23 X34", "X13 X24", 3,
        torus=["x", "1", "y/x", "1"], factors="U11(z/(x*y))",
        pset="Z(X1,X2,X3,X4,X12,X23,X34) & V(X13,X24)",
        pm="m = (0,0,0,0,0,0,0,x,y,z), x,y != 0",
        pword="T(x, 1, y/x, 1) U_1(z/(x*y))"),
    rec("x12", "X11 X22 X33 X44 X23 X34 X24", "X12", 3,
        torus=["u", "1", "1", "-1"], factors="U33(x/u) U34(z/u^2)",
        pset="Z(X1,X2,X3,X4,X23,X34,X24) & V(X12)",
        pm="m = (0,0,0,0,u,0,0,x,0,z), u != 0",
        pword="T(u, 1, 1, -1) U_3(x/u) U_34(z/u^2)"),
    rec("x23", "X11 X22 X33 X44 X12 X34 X13*X24-X23*X14", "X23", 3,
        cons=[("x*y - v*z", "z")],
        torus=["1", "v", "-1", "1"], factors="U11(x) U44(y/v^2)",
        pset="Z(X1,X2,X3,X4,X12,X34,X13*X24-X23*X14) & V(X23)",
        pm="m = (0,0,0,0,0,v,0,x,y,z), v != 0, x*y - v*z = 0",
        pword="T(1, v, -1, 1) U_1(x) U_4(y/v^2)"),
    rec("x34", "X11 X22 X33 X44 X12 X23 X13", "X34", 3,
        torus=["w", "1", "1", "1"], factors="U22(y/w) U12(z/w^2)",
        pset="Z(X1,X2,X3,X4,X12,X23,X13) & V(X34)",
        pm="m = (0,0,0,0,0,0,w,0,y,z), w != 0",
        pword="T(w, 1, 1, 1) U_2(y/w) U_23(z/w^2)",
        notes=[("witness",
                "second factor root normalized from U_23 to U_12: the (2,3) "
                "root group fixes the representative and cannot reach the "
                "member coordinate z, while U_12 does")]),
    # dimension 4
    rec("x12+x24", "X11 X22 X33 X44 X23 X34", "X12 X24", 4,
        torus=["u", "(y/u)^(1/2)", "1", "1"],
        factors="U11(z/(u^3*y)^(1/2)) U33(-x/u)",
        pset="Z(X1,X2,X3,X4,X23,X34) & V(X12,X24)",
        pm="m = (0,0,0,0,u,0,0,x,y,z), u,y != 0",
        pword="T(u, sqrt(y/u), 1, 1) U_1(z/sqrt(u^3*y)) U_3(-x/u)"),
    rec("x23+x14", "X11 X22 X33 X44 X12 X34", "X23 X13*X24-X23*X14", 4,
        torus=["1", "v", "(v*z-x*y)/v^2", "1"],
        factors="U11(x) U44(y/(x*y-v*z))",
        pset="Z(X1,X2,X3,X4,X12,X34) & V(X23,X13*X24-X23*X14)",
        pm="m = (0,0,0,0,0,v,0,x,y,z), v != 0, x*y - v*z != 0",
        pword="T(1, v, (v*z-x*y)/v^2, 1) U_1(x) U_4(y/(x*y-v*z))"),
    rec("x34+x13", "X11 X22 X33 X44 X12 X23", "X34 X13", 4,
        torus=["(w*x)^(1/2)", "1", "1", "(w/x)^(1/2)"],
        factors="U44(-z/(w^3*x)^(1/2)) U22(y/w)",
        pset="Z(X1,X2,X3,X4,X12,X23) & V(X34,X13)",
        pm="m = (0,0,0,0,0,0,w,x,y,z), w,x != 0",
        pword="T(sqrt(w*x), 1, 1, sqrt(w/x)) U_4(-z/sqrt(w^3*x)) U_2(y/w)"),
    rec("x11", "X22 X33 X44 X23 X34 X24", "X11", 4,
        torus=["q", "1", "1", "1"],
        factors="U22(-u/q) U23(-x/q) U24(-z/q^2)",
        pset="Z(X2,X3,X4,X23,X34,X24) & V(X1)",
        pm="m = (q,0,0,0,u,0,0,x,0,z), q != 0",
        pword="T(q, 1, 1, 1) U_2(-u/q) U_23(-x/q) U_24(-z/q^2)",
        notes=[("provenance",
                "this witness row is printed twice in the source; the "
                "duplicate was dropped")]),
    rec("x22", "X11 X33 X44 X34 X22*X13-X12*X23 X22*X14-X12*X24", "X22", 4,
        cons=[("r*x - u*v", "x"), ("r*z - u*y", "z")],
        torus=["1", "r", "1", "1"],
        factors="U11(u) U33(-v/r) U34(-y/r^2)",
        pset="Z(X1,X3,X4,X34,X2*X13-X12*X23,X2*X14-X12*X24) & V(X2)",
        pm="m = (0,r,0,0,u,v,0,x,y,z), r != 0, r*x - u*v = 0, r*z - y*u = 0",
        pword="T(1, r, 1, 1) U_1(u) U_3(-v/r) U_34(-y/r^2)"),
    rec("x33", "X11 X22 X44 X12 X33*X24-X23*X34 X33*X14-X13*X34", "X33", 4,
        cons=[("s*y - v*w", "y"), ("s*z - w*x", "z")],
        torus=["s", "1", "1", "1/s"],
        factors="U44(-w) U22(v/s) U12(x/s^2)",
        pset="Z(X1,X2,X4,X12,X3*X24-X23*X34,X3*X14-X13*X34) & V(X2)",
        pm="m = (0,0,s,0,0,v,w,x,y,z), s != 0, s*y - v*w = 0, s*z - w*x = 0",
        pword="T(s, 1, 1, 1/s) U_4(-w) U_2(v/s) U_12(x/s^2)",
        notes=[("sets",
                "printed open condition V(X2) normalized to V(X3): the "
                "representative has X2 = 0 and X3 = 1, and the witness-table "
                "row carries V(X3)")]),
    rec("x44", "X11 X22 X33 X12 X23 X13", "X44", 4,
        torus=["t", "1", "1", "1"],
        factors="U33(w/t) U23(y/t) U13(z/t^2)",
        pset="Z(X1,X2,X3,X12,X23,X13) & V(X4)",
        pm="m = (0,0,0,t,0,0,w,0,y,z), t != 0",
        pword="T(t, 1, 1, 1) U_3(w/t) U_23(y/t) U_13(z/t^2)"),
    # dimension 5
    rec("x12+x23", "X11 X22 X33 X44 X34", "X12 X23", 5,
        torus=["u", "v", "1", "1"],
        factors="U11(x/u) U44(-y/(u*v^2)) U34((x*y-z*v)/(u^2*v^2))",
        pset="Z(X1,X2,X3,X4,X34) & V(X12,X23)",
        pm="m = (0,0,0,0,u,v,0,x,y,z), u,v != 0",
        pword="T(u, v, 1, 1) U_1(x/u) U_4(-y/(u*v^2)) U_34((x*y-z*v)/(u^2*v^2))"),
    rec("x12+x34", "X11 X22 X33 X44 X23", "X12 X34", 5,
        torus=["u", "w/u", "1", "1"],
        factors="U33(-x/u) U22(y*u/w^2) U12(z/(u*w))",
        pset="Z(X1,X2,X3,X4,X23) & V(X12,X34)",
        pm="m = (0,0,0,0,u,0,w,x,y,z), u,w != 0",
        pword="T(u, u/w, 1, 1) U_3(-x/u) U_2(y*u/w^2) U_12(z/(u*w))",
        notes=[("witness",
                "second torus entry normalized from u/w to w/u; the printed "
                "entry contradicts the printed unipotent parameters, which "
                "solve the member equations only with determinant weight w")]),
    rec("x23+x34", "X11 X22 X33 X44 X12", "X23 X34", 5,
        torus=["v*w", "1", "1", "1/v"],
        factors="U44(-y/w) U11(x/(v^2*w)) U12((z*v-x*y)/(v^2*w^2))",
        pset="Z(X1,X2,X3,X4,X12) & V(X23,X34)",
        pm="m = (0,0,0,0,u,0,w,x,y,z), v,w != 0",
        pword="T(v*w, 1, 1, 1/v) U_4(-y/w) U_1(x/(v^2*w)) "
              "U_12((z*v-x*y)/(v^2*w^2))",
        notes=[("m_row",
                "the printed member tuple carries the letter u in the (1,2) "
                "slot; the conditions and the word use v for the (2,3) "
                "coordinate, so the tuple is read as (0,0,0,0,0,v,w,x,y,z)")]),
    rec("x11+x24", "X22 X33 X44 X23 X34", "X11 X24", 5,
        torus=["q^(2/3)*y^(1/3)", "y^(1/3)*q^(-1/3)", "1", "1"],
        factors="U22(-u/(q^(2/3)*y^(1/3))) U23(-x/(q^(2/3)*y^(1/3))) "
                "U24(-z/(q*y))",
        pset="Z(X2,X3,X4,X23,X34) & V(X1,X24)",
        pm="m = (q,0,0,0,u,0,0,x,y,z), q,y != 0",
        pword="T(q^(2/3)*y^(1/3), y^(1/3)*q^(-1/3), 1, 1) "
              "U_2(-u/(q^(2/3)*y^(1/3))) U_23(-x/(q^(2/3)*y^(1/3))) "
              "U_24(-z/(q*y))"),
    rec("x11+x34", "X22 X33 X44 X23 X12*X34+X11*X24", "X11 X34", 5,
        cons=[("u*w + q*y", "y")],
        torus=["(q*w)^(1/2)", "(w/q)^(1/2)", "1", "1"],
        factors="U22(-u/(q*w)^(1/2)) U23(-x/(q*w)^(1/2)) U24(-z/(q*w^3)^(1/2))",
        pset="Z(X2,X3,X4,X23,X12*X34+X1*X24) & V(X1,X34)",
        pm="m = (q,0,0,0,u,0,w,x,y,z), q,w != 0, u*w + q*y = 0",
        pword="T(sqrt(q*w), sqrt(w/q), 1, 1) U_2(-u/sqrt(q*w)) "
              "U_23(-x/sqrt(q*w)) U_24(-z/sqrt(q*w^3))"),
    rec("x22+x14", "X11 X33 X44 X34 X12*X23-X22*X13",
        "X22 X12*X24-X22*X14", 5,
        cons=[("u*v - r*x", "x")],
        rads=[("R", 2, "r*z - y*u")],
        torus=["(r*z-y*u)^(1/2)/r", "r", "1", "1"],
        factors="U11(u*r/(r*z-y*u)^(1/2)) U33(-v/r) "
                "U34(-y/(r*(r*z-y*u)^(1/2)))",
        pset="Z(X1,X3,X4,X34,X12*X23-X2*X13) & V(X2,X12*X24-X2*X14)",
        pm="m = (0,r,0,0,u,v,0,x,y,z), u*v - r*x = 0, r != 0, y*u - r*z != 0",
        pword="T(sqrt(r*z-y*u)/r, r, 1, 1) U_1(u*r/sqrt(r*z-y*u)) U_3(-v/r) "
              "U_34(-y/(r*sqrt(r*z-y*u)))"),
    rec("x33+x14", "X11 X22 X44 X12 X23*X34-X33*X24",
        "X33 X13*X34-X33*X14", 5,
        cons=[("v*w - s*y", "y")],
        rads=[("R", 2, "s*z - w*x")],
        torus=["(s*z-w*x)^(1/2)", "1", "1", "1/s"],
        factors="U44(-w*s/(s*z-w*x)^(1/2)) U22(v/s) "
                "U12(x/(s*(s*z-w*x)^(1/2)))",
        pset="Z(X1,X2,X4,X12,X23*X34-X3*X24) & V(X3,X34*X13-X3*X14)",
        pm="m = (0,0,s,0,0,v,w,x,y,z), v*w - s*y = 0, s != 0, w*x - s*z != 0",
        pword="T(sqrt(s*z-w*x), 1, 1, 1/s) U_4(-w*s/sqrt(s*z-w*x)) U_2(v/s) "
              "U_12(x/(s*sqrt(s*z-w*x)))"),
    rec("x44+x12", "X11 X22 X33 X23 X12*X34+X44*X13", "X44 X12", 5,
        cons=[("u*w + t*x", "x")],
        torus=["u", "1", "1", "(t/u)^(1/2)"],
        factors="U33(w/(t*u)^(1/2)) U23(y/(t*u)^(1/2)) U13(z/(t*u^3)^(1/2))",
        pset="Z(X1,X2,X3,X23,X12*X34+X4*X13) & V(X12,X4)",
        pm="m = (0,0,0,t,u,0,w,x,y,z), u*w + t*x = 0, t,u != 0",
        pword="T(u, 1, 1, sqrt(t/u)) U_3(w/sqrt(t*u)) U_23(y/sqrt(t*u)) "
              "U_13(z/sqrt(t*u^3))"),
    rec("x44+x13", "X11 X22 X33 X12 X23", "X44 X13", 5,
        torus=["t^(1/3)*x^(2/3)", "1", "1", "t^(1/3)*x^(-1/3)"],
        factors="U33(w/(t^(2/3)*x^(1/3))) U23(y/(t^(2/3)*x^(1/3))) "
                "U13(z/(t*x))",
        pset="Z(X1,X2,X3,X34,X12,X23) & V(X13,X4)",
        pm="m = (0,0,0,t,0,0,w,x,y,z), t,x != 0",
        pword="T(t^(1/3)*x^(2/3), 1, 1, t^(1/3)*x^(-1/3)) "
              "U_3(w/(t^(2/3)*x^(1/3))) U_23(y/(t^(2/3)*x^(1/3))) U_13(z/(t*x))",
        notes=[("sets",
                "the dimension-table row lists X34 among the closed "
                "conditions, which contradicts both the stated dimension 5 "
                "and the witness row's free w coordinate; X34 dropped per "
                "the witness-table row")]),
    # dimension 6
    rec("x12+x23+x34", "X11 X22 X33 X44", "X12 X23 X34", 6,
        torus=["u", "(v*w/u)^(1/2)", "1", "(w/(u*v))^(1/2)"],
        factors="U11(x*w^(1/2)/(u^3*v)^(1/2)) U22(y*u^(1/2)/(v*w^3)^(1/2)) "
                "U12((v*z-x*y)/(u*v*w))",
        pset="Z(X1,X2,X3,X4) & V(X12,X23,X34)",
        pm="m = (0,0,0,0,u,v,w,x,y,z), u,v,w != 0",
        pword="T(u, sqrt(v*w/u), 1, sqrt(w/(u*v))) U_1(x*sqrt(w)/sqrt(u^3*v)) "
              "U_2(y*sqrt(u)/sqrt(v*w^3)) U_12((v*z-x*y)/(u*v*w))",
        notes=[("sets",
                "the witness-table set row prints V(X2, X23, X34); the open "
                "conditions are V(X12, X23, X34) as in the dimension table "
                "and the member row")]),
    rec("x11+x23", "X22 X33 X44 X34", "X11 X23", 6,
        torus=["q*v", "v", "1", "1"],
        factors="U11(x/(q*v)) U22(-u/(q*v)) U44(-y/(q*v^3)) "
                "U24((x*y-v*z)/(q^2*v^4))",
        pset="Z(X2,X3,X4,X34) & V(X1,X23)",
        pm="m = (q,0,0,0,u,v,0,x,y,z), q,v != 0",
        pword="T(q*v, v, 1, 1) U_1(x/(q*v)) U_2(-u/(q*v)) U_4(-y/(q*v^3)) "
              "U_24((x*y-v*z)/(q^2*v^4))",
        notes=[("tokenization",
                "stray parentheses and a stray dot around the last two "
                "factors in the printed row were dropped")]),
    rec("x11+x34+x24", "X22 X33 X44 X23", "X11 X34 X11*X24+X12*X34", 6,
        torus=["q", "1", "q*w/(q*y+u*w)", "(q*y+u*w)^2/(q^3*w)"],
        factors="U22(-u*w/(q*y+u*w)) U23(-x*(q*y+u*w)^2/(q^4*w)) "
                "U24(-z/(q*y+u*w))",
        pset="Z(X2,X3,X4,X23) & V(X1,X34,X1*X24+X12*X34)",
        pm="m = (q,0,0,0,u,0,w,x,y,z), q,w != 0, q*y + u*w != 0",
        pword="T(q, 1, q*w/(q*y+u*w), (q*y+u*w)^2/(q^3*w)) "
              "U_2(-u*w/(q*y+u*w)) U_23(-x*(q*y+u*w)^2/(q^4*w)) "
              "U_24(-z/(q*y+u*w))"),
    rec("x22+x13", "X11 X33 X44 X34", "X22 X22*X13-X12*X23", 6,
        torus=["(r*x-u*v)/r", "r", "1", "1"],
        factors="U11(u*r/(r*x-u*v)) U33(-v/r) U34(y/(r*(u*v-r*x))) "
                "U44((y*u-r*z)/(r*x-u*v)^2)",
        pset="Z(X1,X3,X4,X34) & V(X2,X12*X23-X123*X2)",
        pm="m = (0,r,0,0,u,v,0,x,y,z), r != 0, u*v - r*x != 0",
        pword="T((r*x-u*v)/r, r, 1, 1) U_1(u*r/(r*x-u*v)) U_3(-v/r) "
              "U_34(y/(r*(u*v-r*x))) U_4((y*u-r*z)/(r*x-u*v)^2)",
        notes=[("sets",
                "the dimension-table open condition prints the token X123; "
                "the witness-table row carries V(X2, X12*X23 - X2*X13), "
                "transcribed with the standard orientation X2*X13 - X12*X23; "
                "the witness-table closed conditions also print an extra "
                "X23, contradicting the free v coordinate of the member row")]),
    rec("x22+x34", "X11 X33 X44 X22*X13-X12*X23", "X22 X34", 6,
        cons=[("r*x - u*v", "x")],
        torus=["w/r", "r", "1", "1"],
        factors="U33(-v/r) U11(r*u/w) U22(y/(r*w)) U12((r*z-y*u)/w^2)",
        pset="Z(X1,X3,X4,X2*X13-X12*X23) & V(X2,X34)",
        pm="m = (0,r,0,0,u,v,w,x,y,z), r*x - u*v = 0, r,w != 0",
        pword="T(w/r, r, 1, 1) U_3(-v/r) U_1(r*u/w) U_2(y/(r*w)) "
              "U_12((r*z-y*u)/w^2)"),
    rec("x33+x12", "X11 X22 X44 X33*X24-X23*X34", "X33 X12", 6,
        cons=[("s*y - v*w", "y")],
        torus=["u", "1", "1", "1/s"],
        factors="U22(v/s) U44(-s*w/u) U33(-x/(s*u)) U34((w*x-s*z)/u^2)",
        pset="Z(X1,X2,X4,X3*X24-X23*X34) & V(X3,X12)",
        pm="m = (0,0,s,0,u,v,w,x,y,z), s*y - v*w = 0, s,u != 0",
        pword="T(u, 1, 1, 1/s) U_2(v/s) U_4(-s*w/u) U_3(-x/(s*u)) "
              "U_34((w*x-s*z)/u^2)"),
    rec("x33+x24", "X11 X22 X44 X12", "X33 X23*X34-X33*X24", 6,
        torus=["s*y-v*w", "1", "1", "1/s"],
        factors="U44(w*s/(v*w-s*y)) U22(v/s) U12(x/(s*(s*y-v*w))) "
                "U11((s*z-x*w)/(s*y-v*w)^2)",
        pset="Z(X1,X2,X4,X12) & V(X3,X23*X34-X3*X234)",
        pm="m = (0,0,s,0,0,v,w,x,y,z), s != 0, v*w - s*y != 0",
        pword="T(s*y-v*w, 1, 1, 1/s) U_4(w*s/(v*w-s*y)) U_2(v/s) "
              "U_12(x/(s*(s*y-v*w))) U_1((s*z-x*w)/(s*y-v*w)^2)",
        notes=[("sets",
                "the dimension-table open condition prints the token X234; "
                "normalized to X24 per the witness-table row "
                "V(X3, X23*X34 - X3*X24)")]),
    rec("x44+x12+x13", "X11 X22 X33 X23", "X44 X12 X44*X13+X12*X34", 6,
        torus=["u", "(t*x+u*w)^2/(t*u^3)", "1", "t*u/(t*x+u*w)"],
        factors="U33(u*w/(t*x+u*w)) U23(y*t*u^4/(t*x+u*w)^3) "
                "U13(z/(t*x+u*w))",
        pset="Z(X2,X3,X4,X23) & V(X4,X12,X4*X13+X12*X34)",
        pm="m = (0,0,0,t,u,0,w,x,y,z), t,u != 0, t*x + u*w != 0",
        pword="T(u, (t*x+u*w)^2/(t*u^3), 1, t*u/(t*x+u*w)) "
              "U_3(u*w/(t*x+u*w)) U_23(y*t*u^4/(t*x+u*w)^3) U_13(z/(t*x+u*w))",
        notes=[("sets",
                "as printed, X4 appears among both the closed and the open "
                "conditions; the closed conditions are taken from the "
                "witness-table row Z(X1,X2,X3,X23)")]),
    rec("x44+x23", "X11 X22 X33 X12", "X44 X23", 6,
        torus=["t/v", "v", "1", "1"],
        factors="U33(w/t) U11(x*v/t) U44(-y/(v*t)) U13((z*v-x*y)/t^2)",
        pset="Z(X1,X2,X3,X12) & V(X4,X23)",
        pm="m = (0,0,0,t,0,v,w,x,y,z), t,v != 0",
        pword="",
        notes=[("witness",
                "no witness row for this orbit appears in the source tables; "
                "the recorded word was produced by the triangular solver and "
                "verified symbolically")]),
    rec("x11+x33", "X22 X44 X11*X23+X33*X12 X33*X24-X23*X34", "X11 X33", 6,
        cons=[("q*v + s*u", "u"), ("s*y - v*w", "y")],
        torus=["q", "1", "s", "1"],
        factors="U44(-w/(q*s^2)) U22(v) U23(-x/q) U24((w*x-s*z)/(q*s)^2)",
        pset="Z(X2,X4,X1*X23+X3*X12,X3*X24-X23*X34) & V(X1,X3)",
        pm="m = (q,0,s,0,u,v,w,x,y,z), q*v + s*u = 0, s*y - v*w = 0, q,s != 0",
        pword="T(q, 1, s, 1) U_4(-w/(q*s^2)) U_2(v) U_23(-x/q) "
              "U_24((w*x-s*z)/(q*s)^2)"),
    rec("x11+x44", "X22 X33 X23 X11*X24+X12*X34+X44*X13", "X11 X44", 6,
        cons=[("q*y + u*w + t*x", "y")],
        torus=["q", "1", "t/q", "1"],
        factors="U22(-t*u/q^2) U33(q*w/t^2) U23(-x/q) U24(-z/(q*t))",
        pset="Z(X2,X3,X23,X1*X24+X12*X34+X4*X123) & V(X1,X4)",
        pm="m = (q,0,0,t,u,0,w,x,y,z), q*y + u*w + t*x = 0, q,t != 0",
        pword="T(q, 1, t/q, 1) U_2(-t*u/q^2) U_3(q*w/t^2) U_23(-x/q) "
              "U_24(-z/(q*t))",
        notes=[("sets",
                "the dimension-table closed condition prints the token "
                "X4*X123; normalized to X4*X13 per the witness-table row")]),
    rec("x22+x44", "X11 X33 X44*X23+X22*X34 X22*X13-X12*X23", "X22 X44", 6,
        cons=[("t*v + r*w", "w"), ("r*x - u*v", "x")],
        torus=["r*t", "1", "1/r", "1"],
        factors="U11(u/(t*r^2)) U33(-v) U23(y/t) U13((r*z-u*y)/(t*r)^2)",
        pset="Z(X1,X3,X4*X23+X2*X34,X2*X13-X12*X23) & V(X2,X4)",
        pm="m = (0,r,0,t,u,v,w,x,y,z), t*v + r*w = 0, r*x - u*v = 0, r,t != 0",
        pword="T(r*t, 1, 1/r, 1) U_1(u/(t*r^2)) U_3(-v) "
              "U_23genfrac{(}{)}{}{}{y}{t} U_13((r*z-u*y)/(t*r)^2)",
        notes=[("witness",
                "the printed U_23 parameter is an unreadable token stream "
                "(a fraction macro lost its escape); repaired to y/t by "
                "solving the member equations, then verified")]),
    # dimension 7
    rec("x11+x23+x34", "X22 X33 X44", "X11 X23 X34", 7,
        torus=["q", "1", "(v*w/q)^(1/2)", "1/v"],
        factors="U44(-v^(1/2)*(q*y+u*w)/(q^3*w)^(1/2)) "
                "U22(-u*(v*w)^(1/2)/q^(3/2)) U23(-x/(q*v)) "
                "U24((q*x*y-q*v*z+u*w*x)/(q^5*v*w)^(1/2))",
        pset="Z(X2,X3,X4) & V(X1,X23,X34)",
        pm="m = (q,0,0,0,u,v,w,x,y,z), q,v,w != 0",
        pword="T(q, 1, sqrt(v*w/q), 1/v) U_4(-sqrt(v)*(q*y+u*w)/sqrt(q^3*w)) "
              "U_2(-u*sqrt(v*w)/sqrt(q^3)) U_23genfrac{(}{)}{}{}{-x}{q*v} "
              "U_24((q*x*y-q*v*z+u*w*x)/sqrt(q^5*v*w))",
        notes=[("witness",
                "the printed U_23 parameter is an unreadable token stream "
                "(same lost fraction macro); repaired to -x/(q*v) and "
                "verified")]),
    rec("x22+x34+x13", "X11 X33 X44", "X22 X34 X22*X13-X12*X23", 7,
        rads=[("R", 2, "r*x - u*v")],
        torus=["(w*(r*x-u*v))^(1/2)/r", "r", "1", "(w/(r*x-u*v))^(1/2)"],
        factors="U11(r*u/(w*(r*x-u*v))^(1/2)) U22(y/(r*w)) "
                "U12((r*z-y*u)/(w^3*(r*x-u*v))^(1/2)) "
                "U33(-v*w^(1/2)/(r*(r*x-u*v)^(1/2)))",
        pset="Z(X1,X3,X4) & V(X2,X34,X2*X13-X12*X23)",
        pm="m = (0,r,0,0,u,v,w,x,y,z), r,w != 0, r*x - u*v != 0",
        pword="T(sqrt(w*(r*x-u*v))/r, r, 1, sqrt(w/(r*x-u*v))) "
              "U_1(r*u/sqrt(w*(r*x-u*v))) U_2(y/(r*w)) "
              "U_12((r*z-y*u)/sqrt(w^3*(r*x-u*v))) "
              "U_3(-v*sqrt(w)/(r*sqrt(r*x-u*v)))"),
    rec("x33+x12+x24", "X11 X22 X44", "X33 X12 X33*X24-X23*X34", 7,
        rads=[("R", 2, "s*y - v*w")],
        torus=["u", "((s*y-v*w)/u)^(1/2)", "1", "1/s"],
        factors="U44(-w*s/(u*(s*y-v*w))^(1/2)) U33(-x/(s*u)) "
                "U34((w*x-s*z)/(u^3*(s*y-v*w))^(1/2)) "
                "U22(v*u^(1/2)/(s*(s*y-v*w)^(1/2)))",
        pset="Z(X1,X2,X4) & V(X3,X12,X3*X24-X23*X34)",
        pm="m = (0,0,s,0,u,v,w,x,y,z), s,u != 0, s*y - v*w != 0",
        pword="T(u, sqrt((s*y-v*w)/u), 1, 1/s) U_4(-w*s/sqrt(u*(s*y-v*w))) "
              "U_3(-x/(s*u)) U_34((w*x-s*z)/sqrt(u^3*(s*y-v*w))) "
              "U_2(v*sqrt(u)/(s*sqrt(s*y-v*w)))"),
    rec("x44+x12+x23", "X11 X22 X33", "X44 X12 X23", 7,
        torus=["(t*u/v)^(1/2)", "v", "(t/(u*v))^(1/2)", "1"],
        factors="U11((t*x+u*w)*v^(1/2)/(t^3*u)^(1/2)) "
                "U33(w*(u*v)^(1/2)/t^(3/2)) U23(y/(t*v)) "
                "U13((t*v*z-t*x*y-u*w*y)/(t^5*u*v)^(1/2))",
        pset="Z(X1,X2,X3) & V(X4,X12,X23)",
        pm="m = (0,0,0,t,u,v,w,x,y,z), t,v,u != 0",
        pword="T(sqrt(t*u/v), v, sqrt(t/(u*v)), 1) "
              "U_1((t*x+u*w)*sqrt(v)/sqrt(t^3*u)) U_3(w*sqrt(u*v)/sqrt(t^3)) "
              "U_23(y/(t*v)) U_13((t*v*z-t*x*y-u*w*y)/sqrt(t^5*u*v))"),
    rec("x11+x22", "X33 X44 X34", "X11 X22", 7,
        torus=["q^(2/3)*r^(1/3)", "r^(1/3)*q^(-1/3)", "r^(-2/3)*q^(-1/3)", "1"],
        factors="U11(u/(q*r)) U33(-v*q^(1/3)/r^(1/3)) "
                "U23((u*v-r*x)/(q^(2/3)*r^(4/3))) U34(-y*q^(1/3)/r^(1/3)) "
                "U24((y*u-r*z)/(q^(2/3)*r^(4/3)))",
        pset="Z(X3,X4,X34) & V(X1,X2)",
        pm="m = (q,r,0,0,u,v,0,x,y,z), q,r != 0",
        pword="T(q^(2/3)*r^(1/3), r^(1/3)*q^(-1/3), r^(-2/3)*q^(-1/3), 1) "
              "U_1(u/(q*r)) U_3(-v*q^(1/3)/r^(1/3)) "
              "U_23((u*v-r*x)/(q^(2/3)*r^(4/3))) U_34(-y*q^(1/3)/r^(1/3)) "
              "U_24((y*u-r*z)/(q^(2/3)*r^(4/3)))"),
    rec("x11+x33+x12", "X22 X44 X33*X24-X23*X34",
        "X11 X33 X11*X23+X33*X12", 7,
        cons=[("s*y - v*w", "y")],
        torus=["q", "1", "q*s/(q*v+u*s)", "q/(q*v+u*s)"],
        factors="U22(q*v/(q*v+u*s)) U44(-w*(q*v+u*s)^3/(q^4*s^2)) "
                "U12(x/(q*v+u*s)) U24((q*v+u*s)^2*(w*x-s*z)/(q^4*s^2))",
        pset="Z(X2,X4,X3*X24-X23*X34) & V(X1,X3,X1*X23+X3*X12)",
        pm="m = (q,0,s,0,u,v,w,x,y,z), s*y - v*w = 0, q,s != 0, "
           "q*v + u*s != 0",
        pword="T(q, 1, q*s/(q*v+u*s), q/(q*v+u*s)) U_2(q*v/(q*v+u*s)) "
              "U_4(-w*(q*v+u*s)^3/(q^4*s^2)) U_12(x/(q*v+u*s)) "
              "U_24((q*v+u*s)^2*(w*x-s*z)/(q^4*s^2))",
        notes=[("sets",
                "the witness-table set row prints Z(..., X3*X23 - X23*X34) "
                "and omits a comma; the closed conditions follow the "
                "dimension-table row Z(X2, X4, X3*X24 - X23*X34)")]),
    rec("x11+x33+x24", "X22 X44 X11*X23+X33*X12",
        "X11 X33 X33*X24-X23*X34", 7,
        cons=[("q*v + s*u", "u")],
        rads=[("R", 3, "s*y - v*w")],
        torus=["q^(2/3)*(s*y-v*w)^(1/3)/s^(2/3)",
               "(s*y-v*w)^(1/3)/(q^(1/3)*s^(2/3))", "s", "1"],
        factors="U11((z*s-w*x)/(q*(s*y-v*w))) "
                "U22(v*q^(1/3)*s^(2/3)/(s*y-v*w)^(1/3)) "
                "U44(-w/(q^(1/3)*s^(2/3)*(s*y-v*w)^(2/3))) "
                "U23((v*z-x*y)*s^(5/3)/(q^(2/3)*(s*y-v*w)^(4/3)))",
        pset="Z(X2,X4,X1*X23+X3*X12) & V(X1,X3,X3*X24-X23*X34)",
        pm="m = (q,0,s,0,u,v,w,x,y,z), q*v + s*u = 0, q,s != 0, "
           "s*y - v*w != 0",
        pword="T(q^(2/3)*(s*y-v*w)^(1/3)/s^(2/3), "
              "(s*y-v*w)^(1/3)/(q^(1/3)*s^(2/3)), s, 1) "
              "U_1((z*s-w*x)/(q*(s*y-v*w))) "
              "U_2(v*q^(1/3)*s^(2/3)/(s*y-v*w)^(1/3)) "
              "U_4(-w/(q^(1/3)*s^(2/3)*(s*y-v*w)^(2/3))) "
              "U_23((v*z-x*y)*s^(5/3)/(q^(2/3)*(s*y-v*w)^(4/3)))",
        notes=[("tokenization",
                "the first torus entry prints q\\frac{2}{3}, read as the "
                "exponent q^(2/3); a stray period in the member conditions "
                "read as a comma")]),
    rec("x22+x33", "X11 X44 "
        "X33*X12*X24+X22*X34*X13-X12*X23*X34-X22*X33*X14", "X22 X33", 7,
        cons=[("s*y*u + r*w*x - u*v*w - r*s*z", "z")],
        torus=["s/r", "r", "1", "1/s"],
        factors="U11(u*r/s) U22(v/(r*s)) U12((r*x-u*v)/s^2) U44(-w) "
                "U34((v*w-s*y)/(r*s))",
        pset="Z(X1,X4,X3*X12*X24+X2*X34*X13-X12*X23*X34-X2*X3*X14) & V(X2,X3)",
        pm="m = (0,r,s,0,u,v,w,x,y,z), s*y*u + r*w*x - u*v*w - r*s*z = 0, "
           "r,s != 0",
        pword="T(s/r, r, 1, 1/s) U_1(u*r/s) U_2(v/(r*s)) U_12((r*x-u*v)/s^2) "
              "U_4(-w) U_34((v*w-s*y)/(r*s))"),
    rec("x11+x44+x24", "X22 X33 X23", "X11 X44 X11*X24+X12*X34+X44*X13", 7,
        torus=["q", "1", "(q*y+u*w+t*x)^2/(q^3*t)", "q*t/(q*y+u*w+t*x)"],
        factors="U22(-u*(q*y+u*w+t*x)^2/(q^4*t)) "
                "U33(q^4*t*w/(q*y+u*w+t*x)^3) U23(-t*x/(q*y+u*w+t*x)) "
                "U24(-z/(q*y+u*w+t*x))",
        pset="Z(X2,X3,X23) & V(X1,X4,X1*X24+X12*X44+X4*X13)",
        pm="m = (q,0,0,t,u,0,w,x,y,z), q,t != 0, q*y + u*w + t*x != 0",
        pword="T(q, 1, (q*y+u*w+t*x)^2/(q^3*t), q*t/(q*y+u*w+t*x)) "
              "U_2(-u*(q*y+u*w+t*x)^2/(q^4*t)) U_3(q^4*t*w/(q*y+u*w+t*x)^3) "
              "U_23(-t*x/(q*y+u*w+t*x)) U_24(-z/(q*y+u*w+t*x))",
        notes=[("sets",
                "the witness-table open condition prints X12*X44; normalized "
                "to X12*X34 per the dimension-table row")]),
    rec("x22+x44+x13", "X11 X33 X44*X23+X22*X34",
        "X22 X44 X22*X13-X12*X23", 7,
        cons=[("t*v + r*w", "w")],
        rads=[("R", 3, "r*x - u*v")],
        torus=["t^(1/3)*(r*x-u*v)^(2/3)/r^(1/3)", "1", "1/r",
               "r^(2/3)*t^(1/3)/(r*x-u*v)^(1/3)"],
        factors="U44((y*u-r*z)/(t*(r*x-u*v))) "
                "U33(-v*t^(1/3)*r^(2/3)/(r*x-u*v)^(1/3)) "
                "U11(u/(r^(2/3)*t^(1/3)*(r*x-u*v)^(2/3))) "
                "U23((x*y-v*z)*r^(5/3)/(t^(2/3)*(r*x-u*v)^(4/3)))",
        pset="Z(X1,X3,X4*X23+X2*X34) & V(X2,X4,X2*X13-X12*X23)",
        pm="m = (0,r,0,t,u,v,w,x,y,z), t*v + r*w = 0, r,t != 0, "
           "r*x - u*v != 0",
        pword="T(t^(1/3)*(r*x-u*v)^(2/3)/r^(1/3), 1, 1/r, "
              "r^(2/3)*t^(1/3)/(r*x-u*v)^(1/3)) "
              "U_4((y*u-r*z)/(t*(r*x-u*v))) "
              "U_3(-v*t^(1/3)*r^(2/3)/(r*x-u*v)^(1/3)) "
              "U_1(u/(s^(2/3)*t^(1/3)*(r*x-u*v)^(2/3))) "
              "U_23((x*y-v*z)*r^(5/3)/(t^(2/3)*(r*x-u*v)^(4/3)))",
        notes=[("witness",
                "the U_1 denominator prints the letter s, which is pinned to "
                "zero on this set; normalized to r, matching the mirrored "
                "row and verified")]),
    rec("x22+x44+x34", "X11 X33 X22*X13-X12*X23",
        "X22 X44 X22*X34+X44*X23", 7,
        cons=[("r*x - u*v", "x")],
        torus=["r*t^3/(r*w+t*v)^2", "(r*w+t*v)/t", "(r*w+t*v)/(r*t)", "1"],
        factors="U33(-t*v/(r*w+t*v)) U11(u*(r*w+t*v)^3/(r^2*t^4)) "
                "U34(-y/(r*w+t*v)) U13((r*w+t*v)^2*(r*z-y*u)/(r^2*t^4))",
        pset="Z(X1,X3,X2*X13-X12*X23) & V(X2,X4,X2*X34+X4*X23)",
        pm="m = (0,r,0,t,u,v,w,x,y,z), r*x - u*v = 0, r,t != 0, "
           "r*w + t*v != 0",
        pword="T(r*t^3/(r*w+t*v)^2, (r*w+t*v)/t, (r*w+t*v)/(r*t), 1) "
              "U_3(-t*v/(r*w+t*v)) U_1(u*(r*w+t*v)^3/(r^2*t^4)) "
              "U_34(-y/(r*w+t*v)) U_13((r*w+t*v)^2*(r*z-y*u)/(r^2*t^4))"),
    rec("x33+x44", "X11 X22 X12", "X33 X44", 7,
        torus=["1", "1", "s^(2/3)*t^(1/3)", "t^(1/3)*s^(-1/3)"],
        factors="U44(-w/(s*t)) U22(t^(1/3)*v/s^(1/3)) "
                "U23((s*y-v*w)/(s^(4/3)*t^(2/3))) U12(t^(1/3)*x/s^(1/3)) "
                "U13((s*z-w*x)/(s^(4/3)*t^(2/3)))",
        pset="Z(X1,X2,X12) & V(X3,X4)",
        pm="m = (0,0,s,t,0,v,w,x,y,z), s,t != 0",
        pword="T(1, 1, s^(2/3)*t^(1/3), t^(1/3)*s^(-1/3)) U_4(-w/(s*t)) "
              "U_2(t^(1/3)*v/s^(1/3)) U_23((s*y-v*w)/(s^(4/3)*t^(2/3))) "
              "U_12(t^(1/3)*x/s^(1/3)) U_13((s*z-w*x)/(s^(4/3)*t^(2/3)))"),
    # dimension 8
    rec("x11+x22+x34", "X33 X44", "X11 X22 X34", 8,
        torus=["q", "1", "1/r", "w*r^2/q"],
        factors="U11(u/(q*r)) U33(-v*w*r^2/q) U23(r*w*(u*v-r*x)/q^2) "
                "U34(-y/(r*w)) U24((y*u-r*z)/(q*r^2*w))",
        pset="Z(X3,X4) & V(X1,X2,X34)",
        pm="m = (q,r,0,0,u,v,w,x,y,z), q,r,w != 0",
        pword="T(q, 1, 1/r, w*r^2/q) U_1(u/(q*r)) U_3(-v*w*r^2/q) "
              "U_23(r*w*(u*v-r*x)/q^2) U_34(-y/(r*w)) U_24((y*u-r*z)/(q*r^2*w))"),
    rec("x11+x33+x12+x24", "X22 X44",
        "X11 X33 X11*X23+X33*X12 X33*X24-X23*X34", 8,
        rads=[("A", 5, "s*y - v*w"), ("B", 5, "q*v + s*u")],
        torus=["q^(2/5)*(s*y-v*w)^(1/5)*(q*v+s*u)^(2/5)/s^(2/5)",
               "(s*y-v*w)^(1/5)*(q*v+s*u)^(2/5)/(q^(3/5)*s^(2/5))",
               "q^(2/5)*s^(3/5)*(s*y-v*w)^(1/5)/(q*v+s*u)^(3/5)",
               "q^(2/5)*(s*y-v*w)^(1/5)/(s^(2/5)*(q*v+s*u)^(3/5))"],
        factors="U44(w*(q*v+s*u)/(q*(v*w-s*y))) U22(q*v/(q*v+s*u)) "
                "U23(-x/(q*v+s*u)) U24((w*x-s*z)/(q*(s*y-v*w)))",
        pset="Z(X2,X4) & V(X1,X3,X1*X23+X3*X12,X3*X24-X23*X34)",
        pm="m = (q,0,s,0,u,v,w,x,y,z), q,s != 0, q*v + s*u != 0, "
           "s*y - v*w != 0",
        pword="T(q^(2/5)*(s*y-v*w)^(1/5)*(q*v+s*u)^(2/5)/s^(2/5), "
              "(s*y-v*w)^(1/5)*(q*v+s*u)^(2/5)/(q^(3/5)*s^(2/5)), "
              "q^(2/5)*s^(3/5)*(s*y-v*w)^(1/5)/(q*v+s*u)^(3/5), "
              "q^(2/5)*(s*y-v*w)^(1/5)/(s^(2/5)*(q*v+s*u)^(3/5))) "
              "U_4(w*(q*v+s*u)/(q*(v*w-s*y))) U_2(q*v/(q*v+s*u)) "
              "U_23(-x/(q*v+s*u)) U_24((w*x-s*z)/(q*(s*y-v*w)))"),
    rec("x22+x33+x14", "X11 X44",
        "X22 X33 X33*X12*X24+X22*X34*X13-X12*X23*X34-X22*X33*X14", 8,
        rads=[("R", 2, "r*s*z + u*v*w - r*w*x - s*y*u")],
        torus=["(r*s*z+u*v*w-r*w*x-s*y*u)^(1/2)/r", "r", "1", "1/s"],
        factors="U11(r*u/(r*s*z+u*v*w-r*w*x-s*y*u)^(1/2)) U22(v/(r*s)) "
                "U44(-s*w/(r*s*z+u*v*w-r*w*x-s*y*u)^(1/2)) "
                "U12((r*x-u*v)/(s*(r*s*z+u*v*w-r*w*x-s*y*u)^(1/2))) "
                "U34((v*w-s*y)/(r*(r*s*z+u*v*w-r*w*x-s*y*u)^(1/2)))",
        pset="Z(X1,X4) & "
             "V(X2,X3,X3*X12*X24+X2*X34*X13-X12*X23*X34-X2*X3*X14)",
        pm="m = (0,r,s,0,u,v,w,x,y,z), r,s != 0, "
           "s*y*u + r*w*x - u*v*w - r*s*z != 0",
        pword="T(sqrt(r*s*z+u*v*w-r*w*x-s*y*u)/r, r, 1, 1/s) "
              "U_1(r*u/sqrt(r*s*z+u*v*w-r*w*x-s*y*u)) U_2(v/(r*s)) "
              "U_4(-s*w/sqrt(r*s*z+u*v*w-r*w*x-s*y*u)) "
              "U_12((r*x-u*v)/(s*sqrt(r*s*z+u*v*w-r*w*x-s*y*u))) "
              "U_34((v*w-s*y)/(r*sqrt(r*s*z+u*v*w-r*w*x-s*y*u)))"),
    rec("x11+x44+x23", "X22 X33", "X11 X44 X23", 8,
        torus=["q*v", "v", "t/(q*v^2)", "1"],
        factors="U22(-t*u/(q^2*v^3)) U33(w*q*v^2/t^2) "
                "U44((-u*w-t*x-q*y)/(q*t*v)) U23(-x/(q*v)) "
                "U24((t*x^2-q*v*z+q*x*y+u*w*x)/(q^2*t*v^2))",
        pset="Z(X2,X3) & V(X1,X4,X23)",
        pm="m = (q,0,0,t,u,v,w,x,y,z), q,t,v != 0",
        pword="T(q*v, v, t/(q*v^2), 1) U_2(-t*u/(q^2*v^3)) U_3(w*q*v^2/t^2) "
              "U_4((-u*w-t*x-q*y)/(q*t*v)) U_23(-x/(q*v)) "
              "U_24((t*x^2-q*v*z+q*x*y+u*w*x)/(q^2*t*v^2))"),
    rec("x22+x44+x34+x13", "X11 X33",
        "X22 X44 X44*X23+X22*X34 X22*X13-X12*X23", 8,
        rads=[("A", 5, "r*x - u*v"), ("B", 5, "r*w + t*v")],
        torus=["t^(3/5)*(r*x-u*v)^(4/5)/(r^(3/5)*(r*w+t*v)^(2/5))",
               "r^(2/5)*(r*w+t*v)^(3/5)/(t^(2/5)*(r*x-u*v)^(1/5))",
               "(r*w+t*v)^(3/5)/(r^(3/5)*t^(2/5)*(r*x-u*v)^(1/5))",
               "r^(2/5)*t^(3/5)/((r*w+t*v)^(2/5)*(r*x-u*v)^(1/5))"],
        factors="U11(u*(r*w+t*v)/(t*(r*x-u*v))) U33(-t*v/(r*w+t*v)) "
                "U23(y/(r*w+t*v)) U13((r*z-y*u)/(t*(r*x-u*v)))",
        pset="Z(X1,X3) & V(X2,X4,X4*X23+X2*X34,X2*X13-X12*X23)",
        pm="m = (0,r,0,t,u,v,w,x,y,z), r,t != 0, r*w + t*v != 0, "
           "r*x - u*v != 0",
        pword="T(t^(3/5)*(r*x-u*v)^(4/5)/(r^(3/5)*(r*w+t*v)^(2/5)), "
              "r^(2/5)*(r*w+t*v)^(3/5)/(t^(2/5)*(r*x-u*v)^(1/5)), "
              "(r*w+t*v)^(3/5)/(r^(3/5)*t^(2/5)*(r*x-u*v)^(1/5)), "
              "r^(2/5)*t^(3/5)/((r*w+t*v)^(2/5)*(r*x-u*v)^(1/5))) "
              "U_1(u*(r*w+t*v)/(t*(r*x-u*v))) U_3(-t*v/(r*w+t*v)) "
              "U_23(y/(r*w+t*v)) U_13((r*z-y*u)/(t*(r*x-u*v)))"),
    rec("x33+x44+x12", "X11 X22", "X33 X44 X12", 8,
        torus=["s*u", "t/(s^2*u)", "s", "1"],
        factors="U44(-w/(s*t)) U22(s^2*u*v/t) U23(s*u*(s*y-v*w)/t^2) "
                "U12(x/(s*u)) U13((s*z-w*x)/(s^2*t*u))",
        pset="Z(X1,X2) & V(X3,X4,X12)",
        pm="m = (0,0,s,t,u,v,w,x,y,z), s,t,u != 0",
        pword="T(s*u, t/(s^2*u), s, 1) U_4(-w/(s*t)) U_2(s^2*u*v/t) "
              "U_23(s*u*(s*y-v*w)/t^2) U_12(x/(s*u)) U_13((s*z-w*x)/(s^2*t*u))"),
    rec("x11+x22+x44", "X33 X22*X34+X44*X23", "X11 X22 X44", 8,
        cons=[("r*w + t*v", "w")],
        torus=["q", "1", "1/r", "(r*t/q)^(1/2)"],
        factors="U22(-u/(q*r)) U33(-v*(r*t)^(1/2)/q^(1/2)) "
                "U23(-x*(r*t)^(1/2)/q^(3/2)) "
                "U34((u*v*t-r*x*t-q*r*y)/(q^3*r*t)^(1/2)) "
                "U24(-z*r^(1/2)/(q^3*t)^(1/2))",
        pset="Z(X3,X2*X34+X4*X23) & V(X1,X2,X4)",
        pm="m = (q,r,0,t,u,v,w,x,y,z), r*w + t*v = 0, q,r,t != 0",
        pword="T(q, 1, 1/r, sqrt(r*t/q)) U_2(-u/(q*r)) "
              "U_3(-v*sqrt(r*t)/sqrt(q)) U_23(-x*sqrt(r*t)/sqrt(q^3)) "
              "U_34((u*v*t-r*x*t-q*r*y)/sqrt(q^3*r*t)) "
              "U_24(-z*sqrt(r)/sqrt(q^3*t))",
        notes=[("tokenization",
                "the printed U_34 denominator carries a stray superscript "
                "mark before the root sign; read as sqrt(q^3*r*t)")]),
    rec("x11+x33+x44", "X22 X33*X12+X11*X23", "X11 X33 X44", 8,
        cons=[("s*u + q*v", "v")],
        torus=["(q*t/s)^(1/2)", "(t/(q*s))^(1/2)", "s", "1"],
        factors="U33(w/(s*t)) U22(v*(q*s)^(1/2)/t^(1/2)) "
                "U23(y*(q*s)^(1/2)/t^(3/2)) "
                "U12((s*q*y+s*t*x-q*v*w)/(q*s*t^3)^(1/2)) "
                "U13(z*s^(1/2)/(q*t^3)^(1/2))",
        pset="Z(X2,X3*X12+X1*X23) & V(X1,X3,X4)",
        pm="m = (q,0,s,t,u,v,w,x,y,z), s*u + q*v = 0, q,s,t != 0",
        pword="T(sqrt(q*t/s), sqrt(t/(q*s)), s, 1) U_3(w/(s*t)) "
              "U_2(v*sqrt(q*s)/sqrt(t)) U_23(y*sqrt(q*s)/sqrt(t^3)) "
              "U_12((s*q*y+s*t*x-q*v*w)/sqrt(q*s*t^3)) "
              "U_13(z*sqrt(s)/sqrt(q*t^3))"),
    # dimension 9
    rec("x11+x22+x33", "X44", "X11 X22 X33", 9,
        torus=["q*r*s", "r*s", "s", "1"],
        factors="U11(u/(q*r)) U33(-v/(r*s)) U44(-w/(q*r^2*s^4)) "
                "U23((u*v-r*x)/(q*r^2*s)) U34(-y/(q*r^3*s^4)) "
                "U24((r*w*x-r*s*z+s*y*u-u*v*w)/(q^2*r^4*s^5))",
        pset="Z(X4) & V(X1,X2,X3)",
        pm="m = (q,r,s,0,u,v,w,x,y,z), q,r,s != 0",
        pword="T(q*r*s, r*s, s, 1) U_1(u/(q*r)) U_3(-v/(r*s)) "
              "U_4(-w/(q*r^2*s^4)) U_23((u*v-r*x)/(q*r^2*s)) "
              "U_34(-y/(q*r^3*s^4)) "
              "U_24((r*w*x-r*s*z+s*y*u-u*v*w)/(q^2*r^4*s^5))"),
    rec("x11+x22+x44+x34", "X33", "X11 X22 X44 X22*X34+X44*X23", 9,
        rads=[("R", 5, "r*w + t*v")],
        torus=["q^(4/5)*r^(1/5)*(r*w+t*v)^(2/5)/t^(1/5)",
               "r^(1/5)*(r*w+t*v)^(2/5)/(q^(1/5)*t^(1/5))",
               "(r*w+t*v)^(2/5)/(q^(1/5)*r^(4/5)*t^(1/5))",
               "r^(1/5)*t^(4/5)/(q^(1/5)*(r*w+t*v)^(3/5))"],
        factors="U22(-u/(q*r)) U33(-t*v/(r*w+t*v)) U23(-t*x/(q*(r*w+t*v))) "
                "U34((-q*y-t*x-u*w)/(q*(r*w+t*v))) U24(-z/(q*(r*w+t*v)))",
        pset="Z(X3) & V(X1,X2,X4,X2*X34+X4*X23)",
        pm="m = (q,r,0,t,u,v,w,x,y,z), q,r,t != 0, r*w + t*v != 0",
        pword="T(q^(4/5)*r^(1/5)*(r*w+t*v)^(2/5)/t^(1/5), "
              "r^(1/5)*(r*w+t*v)^(2/5)/(q^(1/5)*t^(1/5)), "
              "(r*w+t*v)^(2/5)/(q^(1/5)*r^(4/5)*t^(1/5)), "
              "r^(1/5)*t^(4/5)/(q^(1/5)*(r*w+t*v)^(3/5))) "
              "U_2(-u/(q*r)) U_3(-t*v/(r*w+t*v)) U_23(-t*x/(q*(r*w+t*v))) "
              "U_34((-q*y-t*x-u*w)/(q*(r*w+t*v))) U_24(-z/(q*(r*w+t*v)))",
        notes=[("tokenization",
                "the final printed denominator is missing its closing "
                "parenthesis; read as q*(r*w+t*v)")]),
    rec("x11+x33+x44+x12", "X22", "X11 X33 X44 X11*X23+X33*X12", 9,
        rads=[("R", 5, "q*v + s*u")],
        torus=["q^(1/5)*t^(1/5)*(q*v+s*u)^(3/5)/s^(1/5)",
               "t^(1/5)*(q*v+s*u)^(3/5)/(q^(4/5)*s^(1/5))",
               "q^(1/5)*s^(4/5)*t^(1/5)/(q*v+s*u)^(2/5)",
               "q^(1/5)*t^(1/5)/(s^(1/5)*(q*v+s*u)^(2/5))"],
        factors="U33(w/(s*t)) U22(q*v/(q*v+s*u)) U23(q*y/(t*(q*v+s*u))) "
                "U12((q*y+t*x+u*w)/(t*(q*v+s*u))) U13(z/(t*(q*v+s*u)))",
        pset="Z(X2) & V(X1,X3,X4,X1*X23+X3*X12)",
        pm="m = (q,0,s,t,u,v,w,x,y,z), q,s,t != 0, q*v + s*u != 0",
        pword="T(q^(1/5)*t^(1/5)*(q*v+s*u)^(3/5)/s^(1/5), "
              "t^(1/5)*(q*v+s*u)^(3/5)/(q^(4/5)*s^(1/5)), "
              "q^(1/5)*s^(4/5)*t^(1/5)/(q*v+s*u)^(2/5), "
              "q^(1/5)*t^(1/5)/(s^(1/5)*(q*v+s*u)^(2/5))) "
              "U_3(w/(s*t)) U_2(q*v/(q*v+s*u)) U_23(q*y/(t*(q*v+s*u))) "
              "U_12((q*y+t*x+u*w)/(t*(q*v+s*u))) U_13(z/(t*(q*v+s*u)))"),
    rec("x22+x33+x44", "X11", "X22 X33 X44", 9,
        torus=["r^3*s^2*t", "1", "1/r", "1/(r*s)"],
        factors="U44(-w/(s*t)) U22(v/(r*s)) U11(u/(r^4*s^2*t)) "
                "U23((s*y-v*w)/(r*s^2*t)) U12(x/(r^4*s^3*t)) "
                "U13((r*s*z-r*w*x-s*y*u+u*v*w)/(r^5*s^4*t^2))",
        pset="Z(X1) & V(X2,X3,X4)",
        pm="m = (0,r,s,t,u,v,w,x,y,z), r,s,t != 0",
        pword="T(r^3*s^2*t, 1, 1/r, 1/(r*s)) U_4(-w/(s*t)) U_2(v/(r*s)) "
              "U_1(u/(r^4*s^2*t)) U_23((s*y-v*w)/(r*s^2*t)) "
              "U_12(x/(r^4*s^3*t)) "
              "U_13((r*s*z-r*w*x-s*y*u+u*v*w)/(r^5*s^4*t^2))"),
    # dimension 10
    rec("x11+x22+x33+x44", "", "X11 X22 X33 X44", 10,
        torus=["q^(4/5)*r^(3/5)*s^(2/5)*t^(1/5)",
               "r^(3/5)*s^(2/5)*t^(1/5)/q^(1/5)",
               "s^(2/5)*t^(1/5)/(q^(1/5)*r^(2/5))",
               "t^(1/5)/(q^(1/5)*r^(2/5)*s^(3/5))"],
        factors="U22(-u/(q*r)) U33((-q*v-s*u)/(q*r*s)) "
                "U44((-q*r*w-q*t*v-s*t*u)/(q*r*s*t)) U12(x/(q*r*s)) "
                "U34((-q*y-u*w)/(q*r*s*t)) "
                "U24((q*r*w*x-q*r*s*z+q*t*v*x+s*t*u*x)/(q^2*r^2*s^2*t))",
        pset="V(X1,X2,X3,X4)",
        pm="m = (q,r,s,t,u,v,w,x,y,z), q,r,s,t != 0",
        pword="T(q^(4/5)*r^(3/5)*s^(2/5)*t^(1/5), "
              "r^(3/5)*s^(2/5)*t^(1/5)/q^(1/5), "
              "s^(2/5)*t^(1/5)/(q^(1/5)*r^(2/5)), "
              "t^(1/5)/(q^(1/5)*r^(2/5)*s^(3/5))) "
              "U_2(-u/(q*r)) U_3((-q*v-s*u)/(q*r*s)) "
              "U_4((-q*r*w-q*t*v-s*t*u)/(q*r*s*t)) U_12(x/(q*r*s)) "
              "U_34((-q*y-u*w)/(q*r*s*t)) "
              "U_24((q*r*w*x-q*r*s*z+q*t*v*x+s*t*u*x)/(q^2*r^2*s^2*t))"),
]


def build():
    out = {}
    for n, rows in ((1, A1), (2, A2), (3, A3), (4, A4)):
        doc = {"type": f"A{n}", "schema_version": SCHEMA_VERSION, "orbits": rows}
        out[n] = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true",
                    help="verify the committed files match the generated text")
    args = ap.parse_args()
    data_dir = ROOT / "src" / "orbit_atlas" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    texts = build()
    ok = True
    for n, text in texts.items():
        path = data_dir / f"a{n}.json"
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                print(f"MISMATCH {path}")
                ok = False
            else:
                print(f"ok {path}")
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    if not args.check:
        for n in (1, 2, 3, 4):
            cat = load_catalog(n)
            print(f"rank {n}: {len(cat.orbits)} records loaded")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
