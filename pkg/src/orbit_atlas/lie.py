"""Type A structural data (ranks 1..4) and the exact adjoint action.

Elements of the nilradical are strictly upper-triangular (n+1)x(n+1)
matrices; the coordinate of the positive root (i, j) sits at matrix entry
(i, j+1).  Borel elements act by literal matrix conjugation, one code path
for every coefficient ring (prime fields, rationals, Laurent polynomials
and fractions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import LaurentPoly, inv_elem, is_zero_elem
from .errors import ShapeError, UnsupportedRankError

MAX_RANK = 4

#: Coordinate letters in canonical root order, one alphabet per rank.
#: Rank n uses the last n(n+1)/2 letters of "qrstuvwxyz".
_LETTERS = "qrstuvwxyz"


def nil_dim(n: int) -> int:
    return n * (n + 1) // 2


def coordinate_letters(n: int) -> list[str]:
    check_rank(n)
    return list(_LETTERS[len(_LETTERS) - nil_dim(n):])


def check_rank(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_RANK:
        raise UnsupportedRankError(f"rank {n} outside 1..{MAX_RANK}")


def pos_roots(n: int) -> list[tuple[int, int]]:
    """Positive roots (i, j), 1 <= i <= j <= n, listed by height then start:
    simple roots first, then height 2, and so on."""
    check_rank(n)
    out = []
    for h in range(1, n + 1):
        for i in range(1, n - h + 2):
            out.append((i, i + h - 1))
    return out


def root_height(root: tuple[int, int]) -> int:
    i, j = root
    return j - i + 1


def root_token(root: tuple[int, int]) -> str:
    return f"x{root[0]}{root[1]}"


def parse_root_token(tok: str, n: int) -> tuple[int, int]:
    if len(tok) == 3 and tok[0] == "x" and tok[1:].isdigit():
        i, j = int(tok[1]), int(tok[2])
        if 1 <= i <= j <= n:
            return (i, j)
    raise ShapeError(f"bad root token {tok!r} for rank {n}")


# ---------------------------------------------------------------------------
# matrices over an arbitrary commutative ring (entries are duck-typed)


def mat_identity(size: int) -> list[list]:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    size = len(a)
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        ai = a[i]
        for k in range(size):
            x = ai[k]
            if is_zero_elem(x) if not isinstance(x, int) else x == 0:
                continue
            bk = b[k]
            row = out[i]
            for j in range(size):
                y = bk[j]
                if isinstance(y, int) and y == 0:
                    continue
                row[j] = row[j] + x * y
    return out


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class NilElement:
    """Nilradical element: sparse map from positive roots to ring elements."""

    rank: int
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        check_rank(self.rank)
        roots = set(pos_roots(self.rank))
        bad = set(self.coords) - roots
        if bad:
            raise ShapeError(f"coordinates {sorted(bad)} are not rank-{self.rank} roots")

    def coord(self, root: tuple[int, int]):
        return self.coords.get(root, 0)

    def to_matrix(self) -> list[list]:
        size = self.rank + 1
        m = [[0] * size for _ in range(size)]
        for (i, j), c in self.coords.items():
            m[i - 1][j] = c
        return m

    @staticmethod
    def from_matrix(rank: int, m: list[list]) -> "NilElement":
        size = rank + 1
        coords = {}
        for i in range(size):
            for j in range(size):
                v = m[i][j]
                zero = (v == 0) if isinstance(v, (int, Fraction)) else is_zero_elem(v)
                if j <= i:
                    if not zero:
                        raise ShapeError("matrix is not strictly upper-triangular")
                elif not zero:
                    coords[(i + 1, j)] = v
        return NilElement(rank, coords)

    def as_vector(self) -> list:
        return [self.coord(r) for r in pos_roots(self.rank)]

    @staticmethod
    def from_vector(rank: int, values) -> "NilElement":
        roots = pos_roots(rank)
        values = list(values)
        if len(values) != len(roots):
            raise ShapeError(f"expected {len(roots)} coordinates, got {len(values)}")
        coords = {}
        for r, v in zip(roots, values):
            try:
                if is_zero_elem(v):
                    continue
            except Exception:
                pass
            coords[r] = v
        return NilElement(rank, coords)

    def support(self) -> list[tuple[int, int]]:
        return [r for r in pos_roots(self.rank)
                if not is_zero_elem(self.coord(r))]


@dataclass(frozen=True)
class TorusElement:
    """diag(t_1, ..., t_n, (t_1 ... t_n)^-1); determinant 1 by construction."""

    rank: int
    diag: tuple

    def __post_init__(self):
        check_rank(self.rank)
        if len(self.diag) != self.rank:
            raise ShapeError(f"torus for rank {self.rank} needs {self.rank} entries")

    def full_diag(self) -> list:
        prod = self.diag[0]
        for t in self.diag[1:]:
            prod = prod * t
        return list(self.diag) + [inv_elem(prod)]

    def to_matrix(self) -> list[list]:
        size = self.rank + 1
        full = self.full_diag()
        return [[full[i] if i == j else 0 for j in range(size)] for i in range(size)]

    def inverse_matrix(self) -> list[list]:
        size = self.rank + 1
        full = [inv_elem(t) for t in self.full_diag()]
        return [[full[i] if i == j else 0 for j in range(size)] for i in range(size)]


@dataclass(frozen=True)
class RootGroupFactor:
    """U_root(param) = I + param * x_root."""

    root: tuple[int, int]
    param: object

    def to_matrix(self, rank: int) -> list[list]:
        m = mat_identity(rank + 1)
        i, j = self.root
        m[i - 1][j] = self.param
        return m

    def inverse_matrix(self, rank: int) -> list[list]:
        m = mat_identity(rank + 1)
        i, j = self.root
        m[i - 1][j] = -self.param
        return m


@dataclass(frozen=True)
class BorelWord:
    """Optional torus followed by root-group factors.

    The word denotes the single group element g = T * F_1 * ... * F_k
    (torus leftmost, factors in listed order); it acts by one conjugation
    x -> g x g^{-1}.
    """

    rank: int
    torus: TorusElement | None = None
    factors: tuple = ()

    def __post_init__(self):
        check_rank(self.rank)
        if self.torus is not None and self.torus.rank != self.rank:
            raise ShapeError("torus rank mismatch")
        for f in self.factors:
            i, j = f.root
            if not 1 <= i <= j <= self.rank:
                raise ShapeError(f"root {f.root} outside rank {self.rank}")

    def to_matrix(self) -> list[list]:
        g = self.torus.to_matrix() if self.torus else mat_identity(self.rank + 1)
        for f in self.factors:
            g = mat_mul(g, f.to_matrix(self.rank))
        return g

    def inverse_matrix(self) -> list[list]:
        size = self.rank + 1
        g = mat_identity(size)
        for f in reversed(self.factors):
            g = mat_mul(g, f.inverse_matrix(self.rank))
        if self.torus:
            g = mat_mul(g, self.torus.inverse_matrix())
        return g


# ---------------------------------------------------------------------------
# operations


def torus_weight(t: TorusElement, root: tuple[int, int]):
    """Scaling factor of the root coordinate under conjugation by t."""
    i, j = root
    full = t.full_diag()
    return full[i - 1] * inv_elem(full[j])


def conjugate_nil(g: list[list], g_inv: list[list], x: NilElement) -> NilElement:
    m = mat_mul(mat_mul(g, x.to_matrix()), g_inv)
    return NilElement.from_matrix(x.rank, m)


def adjoint(b: BorelWord, x: NilElement) -> NilElement:
    """Exact adjoint action: g x g^{-1} read back as a NilElement."""
    if b.rank != x.rank:
        raise ShapeError(f"word rank {b.rank} != element rank {x.rank}")
    return conjugate_nil(b.to_matrix(), b.inverse_matrix(), x)


def commutator_nil(rank: int, root: tuple[int, int], x: NilElement) -> NilElement:
    """[x_root, x] as a NilElement (structure transport for root-group moves)."""
    size = rank + 1
    e = [[0] * size for _ in range(size)]
    e[root[0] - 1][root[1]] = 1
    xm = x.to_matrix()
    lhs = mat_mul(e, xm)
    rhs = mat_mul(xm, e)
    m = [[lhs[i][j] - rhs[i][j] for j in range(size)] for i in range(size)]
    return NilElement.from_matrix(rank, m)


def fixing_root_groups(x: NilElement) -> set[tuple[int, int]]:
    """Roots whose one-parameter group fixes x identically in the parameter.

    U_root(c) x U_root(-c) = x + c [x_root, x] - c^2 x_root x x_root, and the
    quadratic term vanishes identically on strictly upper-triangular x, so the
    condition is exactly [x_root, x] = 0 -- a polynomial identity, decided
    coefficient by coefficient in any ring.
    """
    out = set()
    for root in pos_roots(x.rank):
        if all(is_zero_elem(c) for c in commutator_nil(x.rank, root, x).coords.values()):
            out.add(root)
    return out


def generic_unipotent(n: int, prefix: str = "f") -> tuple[list[list], list[str]]:
    """Upper unitriangular matrix with fresh polynomial entries.

    Entries are numbered along superdiagonals: f1..fn on the first, then the
    second, and so on (for n = 4: rows read f1 f5 f8 f10 / f2 f6 f9 / f3 f7 / f4).
    Returns the matrix and the variable names in index order.
    """
    check_rank(n)
    size = n + 1
    m = mat_identity(size)
    names = []
    k = 0
    for diag in range(1, size):
        for i in range(size - diag):
            k += 1
            name = f"{prefix}{k}"
            names.append(name)
            m[i][i + diag] = LaurentPoly.var(name)
    return m, names


def unipotent_inverse(m: list[list], size: int) -> list[list]:
    """(I + N)^{-1} = I - N + N^2 - ... for strictly upper N; exact, no division."""
    n_part = [[m[i][j] if j > i else 0 for j in range(size)] for i in range(size)]
    out = mat_identity(size)
    power = mat_identity(size)
    sign = 1
    for _ in range(size - 1):
        power = mat_mul(power, n_part)
        sign = -sign
        out = [[out[i][j] + sign * power[i][j] for j in range(size)]
               for i in range(size)]
    return out


def generic_borel_matrices(n: int, torus_prefix: str = "t",
                           unip_prefix: str = "f"):
    """Fully generic Borel element T(t1..tn) * U_arb over Laurent polynomials.

    Returns (g, g_inv, torus_vars, unipotent_vars); the determinant-completing
    torus entry is the Laurent monomial (t1...tn)^{-1}.
    """
    check_rank(n)
    size = n + 1
    tvars = [f"{torus_prefix}{i}" for i in range(1, n + 1)]
    diag = [LaurentPoly.var(v) for v in tvars]
    torus = TorusElement(n, tuple(diag))
    u, fvars = generic_unipotent(n, unip_prefix)
    g = mat_mul(torus.to_matrix(), u)
    g_inv = mat_mul(unipotent_inverse(u, size), torus.inverse_matrix())
    return g, g_inv, tvars, fvars
