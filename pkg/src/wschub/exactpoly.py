"""Sparse multivariate polynomials over an exact coefficient field.

Coefficients are ``int``/``Fraction`` in concrete mode, or elements of a
sympy rational function field when the central character is kept symbolic.
Nothing in this module cares which; it only needs ``+ - * /`` and ``== 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Poly",
    "NotDivisible",
    "qdiv",
    "dot",
    "vadd",
    "vsub",
    "vscale",
    "exact_divide_linear",
    "substitute_linear",
    "divided_difference",
    "rref",
    "solve_linear",
    "coeff_to_str",
    "coeff_from_str",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def qdiv(a, b):
    """Exact quotient; int/int becomes a Fraction instead of a float."""
    if isinstance(a, int) and isinstance(b, int):
        q = Fraction(a, b)
        return q.numerator if q.denominator == 1 else q
    return a / b


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def dot(u: Sequence, v: Sequence):
    s = 0
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            s = s + a * b
    return s


def vadd(u, v):
    return tuple(_norm(a + b) for a, b in zip(u, v))


def vsub(u, v):
    return tuple(_norm(a - b) for a, b in zip(u, v))


def vscale(c, v):
    return tuple(_norm(c * a) for a in v)


def coeff_to_str(c) -> str:
    if isinstance(c, (int, Fraction)):
        return str(c)
    return str(c.as_expr()) if hasattr(c, "as_expr") else str(c)


def coeff_from_str(s: str):
    q = Fraction(s)
    return q.numerator if q.denominator == 1 else q


Monomial = tuple  # exponent vector


@dataclass(frozen=True, eq=False)
class Poly:
    """Polynomial in ``nvars`` variables, stored as {exponents: coefficient}.

    Zero coefficients are never stored, so ``p.terms == {}`` iff ``p == 0``.
    """

    nvars: int
    terms: Mapping[Monomial, object]

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self.nvars} variables")
            if c != 0:
                clean[tuple(e)] = _norm(c)
        object.__setattr__(self, "terms", clean)

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, {})

    @classmethod
    def const(cls, n: int, c) -> "Poly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> "Poly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def linear(cls, vec: Sequence) -> "Poly":
        n = len(vec)
        t = {}
        for i, c in enumerate(vec):
            if c != 0:
                e = [0] * n
                e[i] = 1
                t[tuple(e)] = c
        return cls(n, t)

    @classmethod
    def product_of_linear(cls, vecs: Iterable[Sequence], n: int, c=1) -> "Poly":
        p = cls.const(n, c)
        for v in vecs:
            p = p * cls.linear(v)
        return p

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Poly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly.zero(self.nvars)
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Poly(self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = Poly.const(self.nvars, 1)
        for _ in range(k):
            r = r * self
        return r

    def scale_div(self, c) -> "Poly":
        """Divide every coefficient by the scalar ``c``."""
        return Poly(self.nvars, {e: qdiv(v, c) for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars or len(self.terms) != len(other.terms):
                return False
            return all(e in other.terms and other.terms[e] == c for e, c in self.terms.items())
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms)))

    def __bool__(self):
        return bool(self.terms)

    # queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def linear_part(self) -> tuple:
        """Coefficient vector of a homogeneous linear polynomial."""
        v = [0] * self.nvars
        for e, c in self.terms.items():
            if sum(e) != 1:
                raise ValueError("not a linear form")
            v[e.index(1)] = c
        return tuple(v)

    def map_coeffs(self, f) -> "Poly":
        return Poly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            cs = coeff_to_str(c)
            if not mono:
                piece = cs
            elif cs == "1":
                piece = mono
            elif cs == "-1":
                piece = "-" + mono
            else:
                if not isinstance(c, (int, Fraction)) and any(ch in cs for ch in "+- "):
                    cs = f"({cs})"
                piece = f"{cs}*{mono}"
            out.append(piece)
        s = " + ".join(out)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.to_str()})"

    def to_json(self) -> list:
        return [
            {"coeff": coeff_to_str(c), "exponents": list(e)} for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None) -> "Poly":
        if not data:
            if nvars is None:
                raise ValueError("empty polynomial needs an explicit variable count")
            return cls.zero(nvars)
        n = len(data[0]["exponents"])
        if nvars is not None and n != nvars:
            raise ValueError("variable count mismatch")
        t = {}
        for d in data:
            e = tuple(int(k) for k in d["exponents"])
            t[e] = t.get(e, 0) + coeff_from_str(d["coeff"])
        return cls(n, t)


def exact_divide_linear(p: Poly, lin: Sequence) -> Poly:
    """Return q with p == lin * q, or raise NotDivisible."""
    n = p.nvars
    k = max((i for i, c in enumerate(lin) if c != 0), default=None)
    if k is None:
        raise ZeroDivisionError("division by the zero linear form")
    lk = lin[k]
    rest = [(i, c) for i, c in enumerate(lin) if c != 0 and i != k]
    r = dict(p.terms)
    q: dict = {}
    while True:
        cand = [e for e in r if e[k] > 0]
        if not cand:
            break
        e = max(cand, key=lambda m: m[k])
        c = qdiv(r.pop(e), lk)
        m = list(e)
        m[k] -= 1
        m = tuple(m)
        q[m] = q.get(m, 0) + c
        for i, li in rest:
            f = list(m)
            f[i] += 1
            f = tuple(f)
            v = r.get(f, 0) - c * li
            if v == 0:
                r.pop(f, None)
            else:
                r[f] = v
    if any(v != 0 for v in r.values()):
        raise NotDivisible(f"{p} is not divisible by {Poly.linear(lin)}")
    return Poly(n, q)


def substitute_linear(p: Poly, sigma: Sequence[Sequence]) -> Poly:
    """Ring map x_i -> sigma[i], each sigma[i] a linear form in the target."""
    if len(sigma) != p.nvars:
        raise ValueError("substitution has wrong length")
    m = len(sigma[0]) if sigma else 0
    lin = [Poly.linear(s) for s in sigma]
    powers: dict = {}

    def pw(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = Poly.const(m, 1) if k == 0 else pw(i, k - 1) * lin[i]
        return powers[key]

    out = Poly.zero(m)
    for e, c in p.terms.items():
        term = Poly.const(m, c)
        for i, k in enumerate(e):
            if k:
                term = term * pw(i, k)
        out = out + term
    return out


def divided_difference(p: Poly, root: Sequence, coroot: Sequence) -> Poly:
    """(r_alpha p - p) / alpha, with r_alpha(mu) = mu - <mu, coroot> alpha."""
    n = p.nvars
    sigma = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        sigma.append(tuple(ei - coroot[i] * a for ei, a in zip(e, root)))
    return exact_divide_linear(substitute_linear(p, sigma) - p, root)


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the coefficient field; returns (rows, pivots)."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    piv = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][col]
        a[r] = [_norm(qdiv(x, inv)) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [_norm(x - f * y) for x, y in zip(a[i], a[r])]
        piv.append(col)
        r += 1
        if r == len(a):
            break
    return a, piv


def solve_linear(A: list[list], b: Sequence):
    """One solution x of A x = b (free variables set to 0), or None."""
    if not A:
        return None if any(v != 0 for v in b) else []
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [0] * ncols
    for i, c in enumerate(piv):
        x[c] = red[i][ncols]
    return x
