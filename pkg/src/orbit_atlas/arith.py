"""Exact coefficient rings.

Three layers, all exact:

* ``Fp`` -- prime-field scalars with canonical representatives in [0, p).
* ``LaurentPoly`` -- sparse multivariate Laurent polynomials over Q
  (exponents may be negative), canonical form enforced after every
  operation.
* ``LaurentFraction`` -- quotients of Laurent polynomials, compared by
  cross-multiplication, never by floating point.

Formal radicals are adjoined through ``RadicalRelation`` towers: a fresh
variable R with a rewrite rule R^k -> radicand.  ``normalize`` reduces every
radical variable's exponent into [0, k) by applying the rules to a fixed
point, which makes normal forms independent of the rewrite order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DomainError, EvaluationError, SchemaError

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# prime fields


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


class Fp:
    """Element of F_p, stored as the canonical representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise DomainError(f"mixed characteristics {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inv(self) -> "Fp":
        if self.v == 0:
            raise DomainError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"

    def is_zero(self) -> bool:
        return self.v == 0


def primitive_root(p: int) -> int:
    """Smallest generator of F_p^*; returns 1 for p = 2."""
    if p == 2:
        return 1
    factors = set()
    m = p - 1
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


def kth_roots(a: Fp, k: int) -> list[Fp]:
    """All k-th roots of a in F_p, by exhaustive search (intended for small p)."""
    return [Fp(r, a.p) for r in range(a.p) if pow(r, k, a.p) == a.v]


# ---------------------------------------------------------------------------
# Laurent polynomials


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise SchemaError(f"coefficient {c!r} is not rational")


class LaurentPoly:
    """Sparse Laurent polynomial: map from exponent vector to nonzero Fraction.

    ``vars`` fixes the variable order (registration order); exponent vectors
    align with it.  Values are immutable by convention: no method mutates an
    existing instance.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...] = (), terms: dict | None = None):
        self.vars = tuple(vars)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors

    @staticmethod
    def const(c: Rational) -> "LaurentPoly":
        c = _as_fraction(c)
        if c == 0:
            return LaurentPoly()
        return LaurentPoly((), {(): c})

    @staticmethod
    def var(name: str, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly((name,), {(exp,): Fraction(1)})

    zero = None  # assigned after class body
    one = None

    # -- canonical, registry-independent view

    def items(self) -> list[tuple[tuple[tuple[str, int], ...], Fraction]]:
        """Terms keyed by sorted (var, exp!=0) pairs; independent of registry."""
        out = []
        for exps, c in self.terms.items():
            key = tuple(sorted((v, e) for v, e in zip(self.vars, exps) if e != 0))
            out.append((key, c))
        out.sort()
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.items() == other.items()

    def __hash__(self):
        return hash(tuple(self.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_const(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_const():
            raise SchemaError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def used_vars(self) -> set[str]:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.vars, exps):
                if e != 0:
                    used.add(v)
        return used

    # -- registry alignment

    def _aligned(self, other: "LaurentPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = list(self.vars) + [v for v in other.vars if v not in self.vars]
        merged_t = tuple(merged)

        def remap(poly: LaurentPoly):
            idx = [merged.index(v) for v in poly.vars]
            out = {}
            for exps, c in poly.terms.items():
                vec = [0] * len(merged)
                for i, e in zip(idx, exps):
                    vec[i] = e
                out[tuple(vec)] = c
            return out

        return merged_t, remap(self), remap(other)

    def in_vars(self, vars: Sequence[str]) -> "LaurentPoly":
        """Re-express over the given registry (must cover all used variables)."""
        vars = tuple(vars)
        missing = self.used_vars() - set(vars)
        if missing:
            raise SchemaError(f"variables {sorted(missing)} missing from registry")
        pos = {v: i for i, v in enumerate(vars)}
        out = {}
        for exps, c in self.terms.items():
            vec = [0] * len(vars)
            for v, e in zip(self.vars, exps):
                if e != 0:
                    vec[pos[v]] = e
            key = tuple(vec)
            out[key] = out.get(key, Fraction(0)) + c
        return LaurentPoly(vars, out)

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        vars, a, b = self._aligned(o)
        out = dict(a)
        for exps, c in b.items():
            s = out.get(exps, Fraction(0)) + c
            if s == 0:
                out.pop(exps, None)
            else:
                out[exps] = s
        return LaurentPoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        vars, a, b = self._aligned(o)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(key, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return LaurentPoly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.monomial_inverse() ** (-e)
        result = LaurentPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise DomainError("only monomials are invertible as Laurent polynomials")
        (exps, c), = self.terms.items()
        return LaurentPoly(self.vars, {tuple(-e for e in exps): Fraction(1) / c})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, LaurentFraction):
                return LaurentFraction(self) / other
            return NotImplemented
        if o.is_monomial():
            return self * o.monomial_inverse()
        return LaurentFraction(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    # -- calculus / structure

    def derivative(self, var: str) -> "LaurentPoly":
        if var not in self.vars:
            return LaurentPoly()
        i = self.vars.index(var)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1:]
            out[key] = out.get(key, Fraction(0)) + c * e
        return LaurentPoly(self.vars, out)

    def total_degrees(self) -> set[int]:
        return {sum(exps) for exps in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    # -- evaluation and substitution

    def eval(self, env: Mapping[str, object]):
        """Evaluate with ring-valued bindings; unbound variables are an error."""
        missing = self.used_vars() - set(env)
        if missing:
            raise SchemaError(f"unbound variables {sorted(missing)}")
        total = None
        for exps, c in self.terms.items():
            prod = None
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                val = env[v]
                factor = val ** e if e > 0 else inv_elem(val) ** (-e)
                prod = factor if prod is None else prod * factor
            term = c if prod is None else prod * c
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def eval_mod_p(self, point: Mapping[str, object], p: int) -> Fp:
        """Exact F_p evaluation; negative exponent at zero raises EvaluationError."""
        missing = self.used_vars() - set(point)
        if missing:
            raise SchemaError(f"unbound variables {sorted(missing)}")
        vals = {}
        for v in self.used_vars():
            x = point[v]
            vals[v] = x.v if isinstance(x, Fp) else int(x) % p
        acc = 0
        for exps, c in self.terms.items():
            t = 1
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                x = vals[v]
                if e < 0:
                    if x == 0:
                        raise EvaluationError(f"negative exponent of {v} at 0")
                    x = pow(x, -1, p)
                    e = -e
                t = (t * pow(x, e, p)) % p
            cm = (c.numerator * pow(c.denominator, -1, p)) % p
            acc = (acc + t * cm) % p
        return Fp(acc, p)

    def subs(self, bindings: Mapping[str, "LaurentFraction"]) -> "LaurentFraction":
        """Substitute fractions for variables (unbound variables substitute as
        themselves); result in canonical fraction form."""
        env = {}
        for v in self.used_vars():
            if v in bindings:
                b = bindings[v]
                if isinstance(b, LaurentPoly):
                    b = LaurentFraction(b)
                if b.den.is_zero():
                    raise DomainError("binding has zero denominator")
                env[v] = b
            else:
                env[v] = LaurentFraction(LaurentPoly.var(v))
        result = self.eval(env)
        if isinstance(result, Fraction):
            return LaurentFraction(LaurentPoly.const(result))
        if isinstance(result, LaurentPoly):
            return LaurentFraction(result)
        return result

    # -- display

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __repr__(self):
        return f"<{poly_to_str(self)}>"


LaurentPoly.zero = LaurentPoly()
LaurentPoly.one = LaurentPoly.const(1)


def poly_to_str(p: LaurentPoly) -> str:
    """Canonical text form under the catalog grammar (see parse_poly)."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        factors = []
        for v, e in zip(p.vars, exps):
            if e == 0:
                continue
            factors.append(v if e == 1 else f"{v}^{e}")
        coeff = c
        body = "*".join(factors)
        if not body:
            text = str(abs(coeff))
        elif abs(coeff) == 1:
            text = body
        else:
            text = f"{abs(coeff)}*{body}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, text))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# radical towers


@dataclass(frozen=True)
class RadicalRelation:
    """Adjoined radical: new_var^order = radicand (radicand over earlier vars)."""

    new_var: str
    order: int
    radicand: LaurentPoly

    def __post_init__(self):
        if self.order not in (2, 3, 4, 5):
            raise SchemaError(f"radical order {self.order} outside 2..5")


def validate_tower(tower: Sequence[RadicalRelation]) -> None:
    """The tower must be triangular: each radicand mentions only earlier variables."""
    seen: set[str] = set()
    for rel in tower:
        if rel.new_var in seen:
            raise SchemaError(f"radical variable {rel.new_var} defined twice")
        bad = rel.radicand.used_vars() & {r.new_var for r in tower} - seen
        if bad:
            raise SchemaError(
                f"radicand of {rel.new_var} mentions later radical vars {sorted(bad)}")
        seen.add(rel.new_var)


def normalize(p: LaurentPoly, tower: Sequence[RadicalRelation]) -> LaurentPoly:
    """Reduce every radical variable's exponent into [0, order).

    Rewrites R^e with e >= order as R^(e mod order) * radicand^(e // order),
    repeating to a fixed point; the result is order-independent.  Negative
    exponents of radical variables are not representable and raise.
    """
    validate_tower(tower)
    rules = {rel.new_var: rel for rel in tower}
    while True:
        hot = None
        for exps in p.terms:
            for v, e in zip(p.vars, exps):
                if v in rules:
                    if e < 0:
                        raise DomainError(
                            f"negative exponent of radical variable {v}")
                    if e >= rules[v].order:
                        hot = v
                        break
            if hot:
                break
        if hot is None:
            return p
        rel = rules[hot]
        i = p.vars.index(hot)
        acc = LaurentPoly()
        for exps, c in p.terms.items():
            term = LaurentPoly(p.vars, {exps: c})
            e = exps[i]
            if e >= rel.order:
                q, r = divmod(e, rel.order)
                base = exps[:i] + (r,) + exps[i + 1:]
                term = LaurentPoly(p.vars, {base: c}) * rel.radicand ** q
            acc = acc + term
        p = acc


# ---------------------------------------------------------------------------
# fractions


_DIV_TERM_CAP = 512


def _exact_divide(num: LaurentPoly, den: LaurentPoly):
    """num / den when the division is exact, else None.  Lead-term division in
    lexicographic order; iteration-capped so pathological inputs fall back to
    fraction form instead of diverging."""
    if den.is_zero():
        return None
    if den.is_monomial():
        return num * den.monomial_inverse()
    if len(num.terms) > _DIV_TERM_CAP:
        return None
    vars, a, b = num._aligned(den)
    num = LaurentPoly(vars, a)
    den = LaurentPoly(vars, b)
    lead_den = max(den.terms)
    cd = den.terms[lead_den]
    quo: dict[tuple[int, ...], Fraction] = {}
    rem = num
    steps = len(num.terms) * len(den.terms) + 64
    while not rem.is_zero() and steps > 0:
        steps -= 1
        lead = max(rem.terms)
        t_exp = tuple(x - y for x, y in zip(lead, lead_den))
        t_c = rem.terms[lead] / cd
        quo[t_exp] = quo.get(t_exp, Fraction(0)) + t_c
        rem = rem - LaurentPoly(vars, {t_exp: t_c}) * den
    if rem.is_zero():
        return LaurentPoly(vars, quo)
    return None


class LaurentFraction:
    """Quotient of Laurent polynomials in canonical form.

    Canonicalization: zero numerator forces denominator 1; common monomial
    content is moved into the numerator; an exact-division attempt clears
    removable denominators; the denominator's leading coefficient is scaled
    to 1.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise DomainError("zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentPoly.zero, LaurentPoly.one
            return
        # strip common monomial content (always legal for Laurent polynomials)
        num = num.in_vars(tuple(num.vars))
        vars, a, b = num._aligned(den)
        nv = len(vars)
        content = []
        for i in range(nv):
            m = min(min(e[i] for e in a), min(e[i] for e in b))
            content.append(m)
        if any(content):
            shift = tuple(-c for c in content)
            a = {tuple(x + s for x, s in zip(e, shift)): c for e, c in a.items()}
            b = {tuple(x + s for x, s in zip(e, shift)): c for e, c in b.items()}
        num = LaurentPoly(vars, a)
        den = LaurentPoly(vars, b)
        if not den.is_const():
            q = _exact_divide(num, den)
            if q is not None:
                num, den = q, LaurentPoly.one
        if den.is_const():
            num = num * (Fraction(1) / den.const_value())
            den = LaurentPoly.one
        else:
            lead = max(den.terms)
            c = den.terms[lead]
            if c != 1:
                inv = Fraction(1) / c
                num = num * inv
                den = den * inv
        self.num, self.den = num, den

    # -- coercion helpers

    @staticmethod
    def _lift(x):
        if isinstance(x, LaurentFraction):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentFraction(LaurentPoly.const(x))
        if isinstance(x, LaurentPoly):
            return LaurentFraction(x)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == LaurentPoly.one

    # -- arithmetic

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return LaurentFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        f = LaurentFraction.__new__(LaurentFraction)
        f.num, f.den = -self.num, self.den
        return f

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return LaurentFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DomainError("division by zero fraction")
        return LaurentFraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.num.is_zero():
                raise DomainError("zero fraction has no inverse")
            return LaurentFraction(self.den, self.num) ** (-e)
        out = LaurentFraction(LaurentPoly.one)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inv(self) -> "LaurentFraction":
        return self ** -1

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    # -- radical handling

    def reduce_radicals(self, tower: Sequence[RadicalRelation]) -> "LaurentFraction":
        """Clear negative radical exponents (scaling num and den together) and
        reduce all radical exponents below their orders."""
        if not tower:
            return self
        num, den = self.num, self.den
        for rel in tower:
            r = rel.new_var
            lows = []
            for poly in (num, den):
                if r in poly.vars:
                    i = poly.vars.index(r)
                    lows.extend(e[i] for e in poly.terms)
            low = min(lows, default=0)
            if low < 0:
                shift = LaurentPoly.var(r, -low)
                num = num * shift
                den = den * shift
        num = normalize(num, tower)
        den = normalize(den, tower)
        return LaurentFraction(num, den)

    def eq_mod_tower(self, other, tower: Sequence[RadicalRelation]) -> bool:
        o = self._lift(other)
        diff = (self - o).reduce_radicals(tower)
        return normalize(diff.num, tower).is_zero()

    def eval_mod_p(self, point: Mapping[str, object], p: int) -> Fp:
        den = self.den.eval_mod_p(point, p)
        if den.is_zero():
            raise EvaluationError("denominator vanishes at the point")
        return self.num.eval_mod_p(point, p) / den

    def __repr__(self):
        if self.is_poly():
            return f"<{poly_to_str(self.num)}>"
        return f"<({poly_to_str(self.num)}) / ({poly_to_str(self.den)})>"


# ---------------------------------------------------------------------------
# generic ring helpers (duck-typed scalars: int, Fraction, Fp, polys, fractions)


def inv_elem(x):
    if isinstance(x, int):
        if x == 0:
            raise DomainError("inverse of integer 0")
        return Fraction(1, x)
    if isinstance(x, Fraction):
        if x == 0:
            raise DomainError("inverse of rational 0")
        return Fraction(1) / x
    if isinstance(x, Fp):
        return x.inv()
    if isinstance(x, LaurentPoly):
        return x.monomial_inverse()
    if isinstance(x, LaurentFraction):
        return x.inv()
    raise SchemaError(f"no inverse for {type(x).__name__}")


def is_zero_elem(x) -> bool:
    if isinstance(x, int):
        return x == 0
    if isinstance(x, Fraction):
        return x == 0
    if isinstance(x, (Fp, LaurentPoly, LaurentFraction)):
        return x.is_zero()
    raise SchemaError(f"no zero test for {type(x).__name__}")


# ---------------------------------------------------------------------------
# expression grammar
#
# Catalog polynomial grammar (parse_poly): variables, integer literals,
# + - * ^ and parentheses.  Witness expression grammar (parse_expr) adds /,
# fractional exponents ^(a/b), and sqrt(...).


class _Tok:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind, self.text, self.pos = kind, text, pos


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise SchemaError(f"unexpected character {ch!r} at position {i}")
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, allow_div: bool, allow_frac_pow: bool):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_div = allow_div
        self.allow_frac_pow = allow_frac_pow

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind and t.kind != kind:
            raise SchemaError(
                f"expected {kind} at position {t.pos} in {self.text!r}, got {t.text!r}")
        self.i += 1
        return t

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise SchemaError(f"trailing input at position {t.pos} in {self.text!r}")
        return node

    def expr(self):
        sign = 1
        t = self.peek()
        if t.kind in "+-":
            self.take()
            sign = -1 if t.kind == "-" else 1
        node = self.term()
        if sign < 0:
            node = ("neg", node)
        while self.peek().kind in "+-":
            op = self.take().kind
            rhs = self.term()
            node = ("add", node, rhs) if op == "+" else ("sub", node, rhs)
        return node

    def term(self):
        node = self.power()
        while self.peek().kind in "*/":
            op = self.take().kind
            if op == "/" and not self.allow_div:
                raise SchemaError("division is not allowed in this grammar")
            rhs = self.power()
            node = ("mul", node, rhs) if op == "*" else ("div", node, rhs)
        return node

    def power(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            e = self.exponent()
            return ("pow", base, e)
        return base

    def exponent(self) -> Fraction:
        t = self.peek()
        neg = False
        if t.kind == "(":
            self.take()
            neg = self.peek().kind == "-"
            if neg:
                self.take()
            a = int(self.take("num").text)
            if self.peek().kind == "/":
                if not self.allow_frac_pow:
                    raise SchemaError("fractional exponents not allowed here")
                self.take()
                b = int(self.take("num").text)
            else:
                b = 1
            self.take(")")
            e = Fraction(a, b)
        else:
            if t.kind == "-":
                self.take()
                neg = True
            e = Fraction(int(self.take("num").text))
        return -e if neg else e

    def atom(self):
        t = self.peek()
        if t.kind == "num":
            self.take()
            return ("num", Fraction(int(t.text)))
        if t.kind == "ident":
            self.take()
            if t.text == "sqrt" and self.peek().kind == "(":
                if not self.allow_frac_pow:
                    raise SchemaError("sqrt is not allowed in this grammar")
                self.take("(")
                inner = self.expr()
                self.take(")")
                return ("pow", inner, Fraction(1, 2))
            return ("var", t.text)
        if t.kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if t.kind == "-":
            self.take()
            return ("neg", self.atom())
        raise SchemaError(f"unexpected token {t.text!r} at position {t.pos}")


def _frac_pow(base: LaurentFraction, e: Fraction) -> LaurentFraction:
    """base^e for fractional e; base must be a monomial fraction whose
    exponents (and rational coefficient) admit the root exactly."""

    def mono_root(p: LaurentPoly, e: Fraction) -> LaurentPoly:
        if not p.is_monomial():
            raise SchemaError(
                "fractional power of a non-monomial; adjoin a radical variable")
        (exps, c), = p.terms.items()
        new = []
        for x in exps:
            v = Fraction(x) * e
            if v.denominator != 1:
                raise SchemaError("fractional power does not clear; exponent "
                                  f"{x}*{e} is not integral")
            new.append(int(v))
        if c != 1:
            c = _rational_root(c, e)
        return LaurentPoly(p.vars, {tuple(new): c})

    return LaurentFraction(mono_root(base.num, e), mono_root(base.den, e))


def _rational_root(c: Fraction, e: Fraction) -> Fraction:
    """c^e for rational c, exact or SchemaError."""
    if e.denominator == 1:
        return c ** e.numerator if e >= 0 else Fraction(1) / (c ** (-e.numerator))
    k = e.denominator

    def int_root(n: int) -> int:
        if n < 0:
            if k % 2 == 0:
                raise SchemaError(f"even root of negative constant {n}")
            return -int_root(-n)
        r = round(n ** (1.0 / k))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**k == n:
                return cand
        raise SchemaError(f"constant {n} has no exact {k}-th root")

    root = Fraction(int_root(c.numerator), int_root(c.denominator))
    return _rational_root(root, Fraction(e.numerator))


def eval_expr(node, env: Mapping[str, LaurentFraction],
              frac_pow=None) -> LaurentFraction:
    """Evaluate a parsed expression tree to a LaurentFraction.

    ``frac_pow(base, exponent)`` handles fractional powers; the default only
    accepts monomial bases (callers with radical towers pass a richer hook).
    """
    if frac_pow is None:
        frac_pow = _frac_pow
    kind = node[0]
    if kind == "num":
        return LaurentFraction(LaurentPoly.const(node[1]))
    if kind == "var":
        name = node[1]
        if name not in env:
            raise SchemaError(f"unregistered variable {name!r}")
        return env[name]
    if kind == "neg":
        return -eval_expr(node[1], env, frac_pow)
    if kind == "add":
        return eval_expr(node[1], env, frac_pow) + eval_expr(node[2], env, frac_pow)
    if kind == "sub":
        return eval_expr(node[1], env, frac_pow) - eval_expr(node[2], env, frac_pow)
    if kind == "mul":
        return eval_expr(node[1], env, frac_pow) * eval_expr(node[2], env, frac_pow)
    if kind == "div":
        return eval_expr(node[1], env, frac_pow) / eval_expr(node[2], env, frac_pow)
    if kind == "pow":
        base = eval_expr(node[1], env, frac_pow)
        e = node[2]
        if e.denominator == 1:
            return base ** e.numerator
        return frac_pow(base, e)
    raise SchemaError(f"bad expression node {kind!r}")


def expr_vars(node) -> set[str]:
    kind = node[0]
    if kind == "var":
        return {node[1]}
    if kind == "num":
        return set()
    if kind in ("neg",):
        return expr_vars(node[1])
    if kind == "pow":
        return expr_vars(node[1])
    return expr_vars(node[1]) | expr_vars(node[2])


def parse_expr(text: str):
    """Parse a witness-template expression (division, fractional powers, sqrt)."""
    return _Parser(text, allow_div=True, allow_frac_pow=True).parse()


def parse_poly(text: str, allowed_vars: Iterable[str] | None = None) -> LaurentPoly:
    """Parse a polynomial under the catalog grammar: idents, integers,
    + - * ^ with integer exponents, parentheses."""
    node = _Parser(text, allow_div=False, allow_frac_pow=False).parse()
    if allowed_vars is not None:
        allowed = set(allowed_vars)
        bad = expr_vars(node) - allowed
        if bad:
            raise SchemaError(f"variables {sorted(bad)} not in the allowed set")
    env = {v: LaurentFraction(LaurentPoly.var(v)) for v in expr_vars(node)}
    out = eval_expr(node, env)
    if not out.is_poly():
        raise SchemaError(f"{text!r} is not polynomial")
    return out.num
