"""Weighted configurations (lambda, chi, P) and their gcd arithmetic.

A configuration fixes a dominant weight ``lam`` and an antidominant
cocharacter ``chi``. Everything here is elementary arithmetic in the
numbers ``a_mu = (mu . chi) / gcd(chi)``:

* ``bar(mu, w)`` is the canonical lift of ``mu mod w.lam`` to the
  subspace T* = {mu : mu . chi = 0};
* ``weighted_root(beta, w)`` is the primitive integral multiple of it;
* ``q(w)`` records the generic stabilizer orders of the Schubert cells.

With ``chi=None`` the coordinates of chi become generators of a rational
function field, so closed forms can be checked with unknown weights. The
gcd-based quantities then have no meaning and raise ``SymbolicChiError``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Sequence

from .exactpoly import dot, qdiv, rref, vscale, vsub
from .rootdata import (
    DEFAULT_WEYL_LIMIT,
    ParabolicCosets,
    RootDatum,
    WeylElement,
    WeylGroup,
    build_root_datum,
)

__all__ = [
    "SymbolicChiError",
    "ConfigError",
    "ValidationReport",
    "WeightedConfig",
    "nonweighted_chi",
    "symbolic_field",
]


class SymbolicChiError(TypeError):
    """An integrality-dependent quantity was requested for a symbolic chi."""


class ConfigError(ValueError):
    pass


def symbolic_field(k: int):
    """Rational function field Q(a0, ..., a_{k-1}) and its generators."""
    from sympy import ZZ
    from sympy.polys.fields import field as _field

    K, *gens = _field(",".join(f"a{i}" for i in range(k)), ZZ)
    return K, tuple(gens)


def _igcd(*xs) -> int:
    return reduce(gcd, (abs(int(x)) for x in xs), 0)


def _as_int(x) -> int:
    if isinstance(x, int):
        return x
    if getattr(x, "denominator", None) == 1:
        return int(x.numerator)
    raise ConfigError(f"expected an integer, got {x}")


def nonweighted_chi(datum: RootDatum, lam: Sequence[int]) -> tuple[int, ...]:
    """A W-invariant chi with every a_w equal, giving the ordinary flag variety.

    Prefers a standard basis vector orthogonal to all roots on which lam is
    positive (the C^* factor of the presets); otherwise the primitive
    projection of lam onto the orthogonal complement of the root span.
    """
    r = datum.rank
    for i in range(r):
        if lam[i] > 0 and all(a[i] == 0 for a in datum.simple_roots):
            return tuple(int(k == i) for k in range(r))
    # orthogonal complement of the root span = null space of the root matrix
    red, piv = rref([list(a) for a in datum.simple_roots]) if datum.n else ([], [])
    free = [j for j in range(r) if j not in piv]
    basis = []
    for f in free:
        v = [0] * r
        v[f] = 1
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    # project lam: solve Gram system
    G = [[dot(u, v) for v in basis] for u in basis]
    rhs = [dot(u, lam) for u in basis]
    red_g, _ = rref([g + [b] for g, b in zip(G, rhs)])
    coef = [row[-1] for row in red_g]
    proj = [sum(c * u[k] for c, u in zip(coef, basis)) for k in range(r)]
    if all(x == 0 for x in proj):
        raise ConfigError("lambda lies in the root span; no non-weighted chi exists")
    from math import lcm

    den = reduce(lcm, (getattr(x, "denominator", 1) for x in proj), 1)
    ints = [int(x * den) for x in proj]
    g = _igcd(*ints)
    return tuple(x // g for x in ints)


@dataclass
class ValidationReport:
    dominant: bool
    antidominant: bool | None
    all_a_positive: bool | None
    lambda_off_root_span: bool
    parabolic_ok: bool
    bar_basis_independent: bool
    messages: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return (self.dominant and self.antidominant is not False
                and self.all_a_positive is not False and self.parabolic_ok
                and self.bar_basis_independent)


class WeightedConfig:
    """A root datum together with (lam, chi, J)."""

    def __init__(self, datum, lam: Sequence[int], chi=None, parabolic=None,
                 limit: int = DEFAULT_WEYL_LIMIT):
        self.datum = build_root_datum(datum)
        self.lam = tuple(int(x) for x in lam)
        if len(self.lam) != self.datum.rank:
            raise ConfigError(f"lambda must have length {self.datum.rank}")
        self.group = WeylGroup(self.datum, limit)
        if parabolic is None:
            parabolic = [i for i, c in enumerate(self.datum.simple_coroots)
                         if dot(self.lam, c) == 0]
        self.cosets = ParabolicCosets(self.group, parabolic)
        self.symbolic = chi is None or chi == "symbolic"
        if self.symbolic:
            self.field, self.chi = symbolic_field(self.datum.rank)
            self.gchi = 1
        else:
            self.field = None
            self.chi = tuple(int(x) for x in chi)
            if len(self.chi) != self.datum.rank:
                raise ConfigError(f"chi must have length {self.datum.rank}")
            self.gchi = _igcd(*self.chi)
            if self.gchi == 0:
                raise ConfigError("chi must be nonzero")
        self._a = {w: self.a_of(w.act(self.lam)) for w in self.group}
        self._q: dict = {}

    # basic quantities ---------------------------------------------------
    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def reps(self) -> list[WeylElement]:
        return self.cosets.reps

    def a_of(self, mu: Sequence):
        s = dot(mu, self.chi)
        if self.symbolic:
            return s if s != 0 else 0
        return qdiv(s, self.gchi)

    def a(self, w: WeylElement):
        return self._a[w]

    def wlam(self, w: WeylElement) -> tuple:
        return w.act(self.lam)

    def bar(self, mu: Sequence, w: WeylElement) -> tuple:
        """mu - (a_mu / a_w) w.lam."""
        amu = self.a_of(mu)
        if amu == 0:
            return tuple(mu)
        return vsub(mu, vscale(qdiv(amu, self._a[w]), w.act(self.lam)))

    def bar_substitution(self, w: WeylElement) -> list[tuple]:
        """Images of the coordinate functions x_i under mu -> bar(mu, w)."""
        r = self.rank
        return [self.bar(tuple(int(k == i) for k in range(r)), w) for i in range(r)]

    def _need_concrete(self, what: str):
        if self.symbolic:
            raise SymbolicChiError(f"{what} needs a concrete integer chi")

    def weighted_root(self, beta: Sequence, w: WeylElement) -> tuple:
        """(a_w beta - a_beta w.lam) / gcd(a_w, a_beta)."""
        self._need_concrete("weighted_root")
        aw = _as_int(self._a[w])
        ab = _as_int(self.a_of(beta))
        g = _igcd(aw, ab)
        v = vsub(vscale(aw, beta), vscale(ab, w.act(self.lam)))
        return tuple(_as_int(qdiv(x, g)) for x in v)

    def weighted_root_scale(self, beta: Sequence, w: WeylElement):
        """The factor s with weighted_root(beta, w) == s * bar(beta, w)."""
        self._need_concrete("weighted_root_scale")
        aw = _as_int(self._a[w])
        return qdiv(aw, _igcd(aw, _as_int(self.a_of(beta))))

    def quotient_weight(self, alpha: Sequence, beta: Sequence) -> tuple:
        self._need_concrete("quotient_weight")
        aa = _as_int(self.a_of(alpha))
        ab = _as_int(self.a_of(beta))
        if aa == 0 or ab == 0:
            raise ConfigError("quotient_weight needs nonzero pairings with chi")
        g = _igcd(aa, ab)
        v = vsub(vscale(ab, alpha), vscale(aa, beta))
        v = tuple(_as_int(qdiv(x, g)) for x in v)
        return v if ab > 0 else tuple(-x for x in v)

    def stabilizer_order(self, w: WeylElement) -> int:
        self._need_concrete("stabilizer_order")
        vals = [self._a[w]] + [self.a_of(b) for b in self.cosets.inversion_set(w)]
        return _igcd(*(_as_int(v) for v in vals))

    def q(self, w: WeylElement) -> int:
        if self.symbolic:
            raise SymbolicChiError("q needs a concrete integer chi")
        if w in self._q:
            return self._q[w]
        num = self.stabilizer_order(w)
        den = self.stabilizer_order(self.cosets.top)
        if num % den:
            raise ConfigError(f"stabilizer order at {w} is not divisible by the one at w0")
        self._q[w] = num // den
        return self._q[w]

    def stab_divisibility(self, w: WeylElement) -> tuple[int, int, bool]:
        lhs = self.stabilizer_order(w)
        rhs = _igcd(*(_as_int(self._a[x]) for x in self.reps if self.cosets.leq(x, w)))
        if rhs % lhs:
            raise ConfigError(f"gcd at {w} does not divide gcd over its interval")
        return lhs, rhs, lhs == rhs

    def is_minuscule(self) -> bool:
        return all(abs(dot(self.lam, c)) <= 1 for _, c in self.datum.positive_roots)

    def rebase(self, beta: Sequence, v: WeylElement, w: WeylElement) -> tuple:
        """Coefficients c with bar(beta, v) = sum c_i bar(beta_i, w), beta_i = -alpha_i."""
        f = self.datum.root_coeffs(beta)
        e = self.datum.root_coeffs(vsub(w.act(self.lam), v.act(self.lam)))
        if f is None or e is None:
            raise ConfigError("rebase needs beta and w.lam - v.lam in the root span")
        s = qdiv(self.a_of(beta), self._a[v])
        return tuple(fi + s * ei for fi, ei in zip(f, e))

    @cached_property
    def chi_is_nonweighted(self) -> bool:
        if self.symbolic:
            return False
        return all(self.a_of(a) == 0 for a in self.datum.simple_roots)

    # validation ---------------------------------------------------------
    def validate(self) -> ValidationReport:
        msgs = []
        d = self.datum
        dominant = all(dot(self.lam, c) >= 0 for c in d.simple_coroots)
        if not dominant:
            msgs.append("lambda is not dominant")
        parabolic_ok = all(dot(self.lam, d.simple_coroots[j]) == 0 for j in self.cosets.J)
        if not parabolic_ok:
            msgs.append("lambda is not orthogonal to the coroots of the parabolic subset")
        off_span = d.root_coeffs(self.lam) is None
        if not off_span:
            msgs.append("lambda lies in the span of the roots, so some a_w must be <= 0")
        if self.symbolic:
            anti = None
            pos = None
            msgs.append("chi is symbolic: antidominance and a_w > 0 are assumed")
        else:
            anti = all(dot(a, self.chi) <= 0 for a, _ in d.positive_roots)
            if not anti:
                msgs.append("chi is not antidominant")
            bad = [w for w in self.group if self._a[w] <= 0]
            pos = not bad
            if bad:
                msgs.append(f"a_w <= 0 for {len(bad)} elements, e.g. a_{bad[0].word_str()} = {self._a[bad[0]]}")
        indep = True
        if pos is not False:
            B = [list(self.bar(b, self.cosets.top)) for b in d.negative_simple_roots]
            indep = len(rref(B)[1]) == d.n if B else True
            if not indep:
                msgs.append("the lifted negative simple roots at w0 are linearly dependent")
        return ValidationReport(dominant, anti, pos, off_span, parabolic_ok, indep, msgs)

    def describe(self) -> dict:
        out = {
            "datum": self.datum.name,
            "lambda": list(self.lam),
            "chi": "symbolic" if self.symbolic else list(self.chi),
            "parabolic": sorted(j + 1 for j in self.cosets.J),
            "weyl_order": len(self.group),
            "reps": [],
        }
        for w in self.reps:
            item = {"word": w.word_str(), "length": w.length,
                    "w_lambda": [str(x) for x in self.wlam(w)],
                    "a_w": str(self._a[w])}
            if not self.symbolic:
                item["q_w"] = self.q(w)
            out["reps"].append(item)
        return out
