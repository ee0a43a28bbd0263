"""Equivariant Schubert calculus by localization.

A class is stored as its tuple of restrictions to the fixed points
``x in W^P``, each written as the canonical lift to S(T*) obtained by
substituting ``mu -> bar(mu, x)`` into every linear factor. In these
coordinates a product is pointwise and an expansion in the Schubert basis
is a triangular sweep that only ever divides by linear forms.

Two bases are supported: ``plain`` (the classes pulled back from the
ordinary flag variety) and ``weighted`` (``q_w`` times the plain class).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Mapping, Sequence

from .exactpoly import (
    NotDivisible,
    Poly,
    dot,
    exact_divide_linear,
    qdiv,
    rref,
    solve_linear,
    substitute_linear,
    vscale,
    vsub,
)
from .rootdata import WeylElement
from .weighted import ConfigError, WeightedConfig

__all__ = [
    "ChevalleyMismatch",
    "GKMClass",
    "SchubertExpansion",
    "Schubert",
    "BASES",
]

BASES = ("plain", "weighted")


class ChevalleyMismatch(AssertionError):
    """A closed-form product disagreed with the localization computation."""


@dataclass
class GKMClass:
    values: dict  # WeylElement -> Poly

    def __getitem__(self, x):
        return self.values[x]

    def __add__(self, other):
        return GKMClass({x: p + other.values[x] for x, p in self.values.items()})

    def __sub__(self, other):
        return GKMClass({x: p - other.values[x] for x, p in self.values.items()})

    def scale(self, c):
        """Multiply by an element of S(T*) (a Poly) or a field scalar."""
        return GKMClass({x: p * c for x, p in self.values.items()})

    def __eq__(self, other):
        return isinstance(other, GKMClass) and self.values.keys() == other.values.keys() and all(
            p == other.values[x] for x, p in self.values.items())

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.values.values())

    def degree(self) -> int:
        return max((p.degree() for p in self.values.values()), default=-1)


@dataclass
class SchubertExpansion:
    coeffs: dict  # WeylElement -> Poly, zeros omitted
    basis: str

    def __post_init__(self):
        self.coeffs = {w: p for w, p in self.coeffs.items() if not p.is_zero()}

    def get(self, w, nvars: int) -> Poly:
        return self.coeffs.get(w, Poly.zero(nvars))

    def __eq__(self, other):
        if not isinstance(other, SchubertExpansion) or self.basis != other.basis:
            return False
        return self.coeffs.keys() == other.coeffs.keys() and all(
            p == other.coeffs[w] for w, p in self.coeffs.items())

    def support(self) -> list:
        return list(self.coeffs)

    def to_json(self, order: Sequence[WeylElement] | None = None) -> dict:
        keys = [w for w in order if w in self.coeffs] if order else list(self.coeffs)
        return {
            "basis": self.basis,
            "terms": [{"class": w.word_str(), "coeff": self.coeffs[w].to_json()} for w in keys],
        }


class Schubert:
    """Localization engine for one weighted configuration."""

    def __init__(self, cfg: WeightedConfig):
        self.cfg = cfg
        self.G = cfg.group
        self.P = cfg.cosets
        self.nv = cfg.rank
        self._nw: dict = {}
        self._wr: dict = {}
        self._sub = {x: cfg.bar_substitution(x) for x in self.P.reps}
        self._euler: dict = {}

    # ------------------------------------------------------------------
    @property
    def reps(self) -> list[WeylElement]:
        return self.P.reps

    def _basis(self, basis):
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, not {basis!r}")
        if basis == "weighted" and self.cfg.symbolic:
            raise ConfigError("the weighted basis needs a concrete chi; use basis='plain'")
        return basis

    def _qfac(self, w, basis):
        return self.cfg.q(w) if basis == "weighted" else 1

    def canon(self, p: Poly, x: WeylElement) -> Poly:
        """Canonical S(T*)-lift of p modulo x.lam."""
        return substitute_linear(p, self._sub[x])

    # restrictions -----------------------------------------------------
    def restrict_nonweighted(self, w: WeylElement, x: WeylElement) -> Poly:
        """Restriction of the ordinary Schubert class of Y_w = closure(B wP/P) to xP.

        Uses the subword formula on the canonical word of w0 x for the
        opposite class indexed by w0 w, then transports back by w0.
        """
        key = (w, x)
        if key in self._nw:
            return self._nw[key]
        G, d = self.G, self.cfg.datum
        if not self.P.leq(x, w):
            val = Poly.zero(self.nv)
        else:
            w0 = G.longest
            u = G.mul(w0, w)
            v = G.mul(w0, x)
            states = {G.identity: Poly.const(self.nv, 1)}
            prefix = G.identity
            for a in v.word:
                root = w0.act(prefix.act(d.simple_roots[a]))
                lin = Poly.linear(root)
                new = dict(states)
                for elt, p in states.items():
                    e2 = G.mul(elt, G.s(a))
                    if e2.length == elt.length + 1 and G.bruhat_leq(e2, u):
                        new[e2] = new[e2] + p * lin if e2 in new else p * lin
                states = new
                prefix = G.mul(prefix, G.s(a))
            val = states.get(u, Poly.zero(self.nv))
        self._nw[key] = val
        return val

    def euler_factors(self, w: WeylElement) -> tuple[list[tuple], object]:
        """Primitive linear factors and constant with restrict_nonweighted(w, w) = c * prod."""
        if w in self._euler:
            return self._euler[w]
        G, d = self.G, self.cfg.datum
        w0 = G.longest
        v = G.mul(w0, w)
        prefix = G.identity
        factors = []
        const = 1
        for a in v.word:
            root = w0.act(prefix.act(d.simple_roots[a]))
            prefix = G.mul(prefix, G.s(a))
            g = reduce(gcd, (abs(int(c)) for c in root), 0)
            lead = next(c for c in root if c != 0)
            s = g if lead > 0 else -g
            factors.append(tuple(c // s for c in root))
            const *= s
        self._euler[w] = (factors, const)
        return factors, const

    def weighted_restrict(self, w: WeylElement, x: WeylElement, basis: str = "plain") -> Poly:
        self._basis(basis)
        key = (w, x)
        if key not in self._wr:
            self._wr[key] = self.canon(self.restrict_nonweighted(w, x), x)
        p = self._wr[key]
        return p * self.cfg.q(w) if basis == "weighted" else p

    def diagonal(self, x: WeylElement, basis: str = "plain"):
        """(constant, linear factors in S(T*)) of the class of x at x."""
        factors, const = self.euler_factors(x)
        bars = [self.cfg.bar(f, x) for f in factors]
        return const * self._qfac(x, basis), bars

    # classes ----------------------------------------------------------
    def gkm_class(self, w: WeylElement, basis: str = "plain") -> GKMClass:
        return GKMClass({x: self.weighted_restrict(w, x, basis) for x in self.reps})

    def one(self) -> GKMClass:
        return GKMClass({x: Poly.const(self.nv, 1) for x in self.reps})

    def scalar(self, p) -> GKMClass:
        """Class of p in S(h*) acting through H-equivariant cohomology."""
        if not isinstance(p, Poly):
            p = Poly.linear(p)
        return GKMClass({x: self.canon(p, x) for x in self.reps})

    def line_bundle_class(self, mu: Sequence) -> GKMClass:
        """Equivariant first Chern class of the line bundle attached to mu."""
        d = self.cfg.datum
        for j in self.P.J:
            if dot(mu, d.simple_coroots[j]) != 0:
                raise ConfigError(f"{tuple(mu)} is not invariant under the parabolic subgroup")
        return GKMClass({x: Poly.linear(self.cfg.bar(x.act(mu), x)) for x in self.reps})

    def borel_restrict(self, f: Poly, g: Poly, x: WeylElement) -> Poly:
        """Restriction of f (x) g at x: f times x applied to the lift y_i -> x_i of g."""
        sigma = [x.act(tuple(int(k == i) for k in range(self.nv))) for i in range(self.nv)]
        return self.canon(f * substitute_linear(g, sigma), x)

    def borel_restrict_mixed(self, p: Poly, x: WeylElement, lift: bool = True) -> Poly:
        """Same as borel_restrict for a sum of tensors written in variables
        x_0..x_m, y_0..y_m (the y's being the second tensor factor).

        With ``lift=False`` the value is returned in S(h*) before reduction
        modulo x.lam.
        """
        r = self.nv
        if p.nvars != 2 * r:
            raise ValueError(f"expected {2 * r} variables")
        ident = [tuple(int(k == i) for k in range(r)) for i in range(r)]
        sigma = ident + [x.act(e) for e in ident]
        raw = substitute_linear(p, sigma)
        return self.canon(raw, x) if lift else raw

    def congruent(self, p: Poly, q: Poly, x: WeylElement) -> bool:
        """p == q modulo x.lam, i.e. canon(p, x) == canon(q, x), decided by
        exact division so no chi arithmetic is involved."""
        d = p - q
        if d.is_zero():
            return True
        try:
            exact_divide_linear(d, x.act(self.cfg.lam))
        except NotDivisible:
            return False
        return True

    def multiply(self, a: GKMClass, b: GKMClass) -> GKMClass:
        # values are already lifts in S(T*), which is closed under products,
        # so the pointwise product needs no re-canonicalization
        return GKMClass({x: a.values[x] * b.values[x] for x in self.reps})

    def combine(self, coeffs: Mapping, basis: str = "plain") -> GKMClass:
        out = GKMClass({x: Poly.zero(self.nv) for x in self.reps})
        for w, c in coeffs.items():
            out = out + self.gkm_class(w, basis).scale(c)
        return out

    def gkm_check(self, c: GKMClass):
        """(True, None) or (False, (w, z, alpha)) for the first failing edge."""
        for w in self.reps:
            for alpha in self.P.tangent_weights(w):
                z = self.P.rep(self.G.mul(self.G.reflection(alpha), w))
                if z == w:
                    continue
                diff = c.values[w] - c.values[z]
                if diff.is_zero():
                    continue
                try:
                    exact_divide_linear(diff, self.cfg.bar(alpha, w))
                except NotDivisible:
                    return False, (w, z, alpha)
        return True, None

    # expansion --------------------------------------------------------
    def expand(self, c: GKMClass, basis: str = "plain") -> SchubertExpansion:
        self._basis(basis)
        resid = dict(c.values)
        coeffs = {}
        for x in self.reps:
            r = resid[x]
            if r.is_zero():
                continue
            const, bars = self.diagonal(x, basis)
            q = r.scale_div(const)
            try:
                for b in bars:
                    q = exact_divide_linear(q, b)
            except NotDivisible as exc:
                raise NotDivisible(f"value at {x} is not a multiple of the diagonal class") from exc
            coeffs[x] = q
            for y in self.reps:
                if self.P.leq(y, x):
                    resid[y] = resid[y] - q * self.weighted_restrict(x, y, basis)
        return SchubertExpansion(coeffs, basis)

    def structure_constants(self, u, v, basis: str = "plain") -> SchubertExpansion:
        return self.expand(self.multiply(self.gkm_class(u, basis), self.gkm_class(v, basis)), basis)

    # Chevalley formulas -----------------------------------------------
    def _lin(self, vec) -> Poly:
        return Poly.linear(vec)

    def _const(self, c) -> Poly:
        return Poly.const(self.nv, c)

    def _check(self, closed: SchubertExpansion, oracle: SchubertExpansion, what: str):
        if closed != oracle:
            raise ChevalleyMismatch(f"{what}: closed form {closed.coeffs} != localization {oracle.coeffs}")
        return closed

    def lambda_multiply(self, v: WeylElement) -> SchubertExpansion:
        """(v.lam) times the plain class of v, from the P-covers below v."""
        lam = self.cfg.lam
        closed = SchubertExpansion(
            {w: self._const(dot(lam, self.cfg.datum.coroot(g))) for w, g in self.P.covers[v]},
            "plain")
        oracle = self.expand(self.multiply(self.scalar(v.act(lam)), self.gkm_class(v)), "plain")
        return self._check(closed, oracle, f"lambda_multiply at {v}")

    def chevalley_mu(self, mu: Sequence, v: WeylElement, basis: str = "plain") -> SchubertExpansion:
        self._basis(basis)
        cfg = self.cfg
        coeffs = {v: self._lin(cfg.bar(mu, v))}
        s = qdiv(cfg.a_of(mu), cfg.a(v))
        for w, g in self.P.covers[v]:
            c = s * dot(cfg.lam, cfg.datum.coroot(g))
            if basis == "weighted":
                c = c * qdiv(cfg.q(v), cfg.q(w))
            coeffs[w] = self._const(c)
        closed = SchubertExpansion(coeffs, basis)
        oracle = self.expand(self.multiply(self.scalar(mu), self.gkm_class(v, basis)), basis)
        return self._check(closed, oracle, f"chevalley_mu({mu}) at {v}")

    def chevalley_line(self, mu: Sequence, v: WeylElement, basis: str = "plain") -> SchubertExpansion:
        self._basis(basis)
        cfg = self.cfg
        vmu = v.act(mu)
        coeffs = {v: self._lin(cfg.bar(vmu, v))}
        s = qdiv(cfg.a_of(vmu), cfg.a(v))
        for w, g in self.P.covers[v]:
            gv = cfg.datum.coroot(g)
            c = s * dot(cfg.lam, gv) - dot(mu, gv)
            if basis == "weighted":
                c = c * qdiv(cfg.q(v), cfg.q(w))
            coeffs[w] = self._const(c)
        closed = SchubertExpansion(coeffs, basis)
        oracle = self.expand(self.multiply(self.line_bundle_class(mu), self.gkm_class(v, basis)), basis)
        return self._check(closed, oracle, f"chevalley_line({mu}) at {v}")

    def classical_chevalley(self, mu: Sequence, v: WeylElement) -> GKMClass:
        """Right side of the ordinary equivariant Chevalley formula as a class:
        (v mu) delta_v - sum (mu . gamma^v) delta_w."""
        out = self.multiply(self.scalar(v.act(mu)), self.gkm_class(v))
        for w, g in self.P.covers[v]:
            out = out - self.gkm_class(w).scale(dot(mu, self.cfg.datum.coroot(g)))
        return out

    def omega(self, i: int) -> tuple:
        """A weight with omega . alpha_j^v = delta_ij (free coordinates set to 0)."""
        d = self.cfg.datum
        A = [list(c) for c in d.simple_coroots]
        b = [int(j == i) for j in range(d.n)]
        x = solve_linear(A, b)
        if x is None:
            raise ConfigError(f"no weight dual to simple coroot {i}")
        return tuple(x)

    def divisor(self, i: int) -> WeylElement:
        if i in self.P.J:
            raise ConfigError(f"simple root {i + 1} lies in the parabolic subset")
        u = self.G.mul(self.G.longest, self.G.s(i))
        if u not in self.P:
            raise ConfigError(f"w0 r_{i + 1} is not a maximal coset representative")
        return u

    def divisor_class_values(self, i: int, omega=None) -> GKMClass:
        """Plain class of the divisor u_alpha as bar(w0 omega - x omega, x)."""
        om = omega if omega is not None else self.omega(i)
        w0 = self.G.longest
        return GKMClass({x: self._lin(self.cfg.bar(vsub(w0.act(om), x.act(om)), x))
                         for x in self.reps})

    def chevalley_divisor(self, i: int, v: WeylElement, basis: str = "plain",
                          omega=None, forms: bool = False):
        """Product of the divisor class for simple root i with the class of v.

        With ``forms=True`` returns a dict of every closed form that applies;
        all of them are checked against the localization product.
        """
        self._basis(basis)
        cfg, d = self.cfg, self.cfg.datum
        u = self.divisor(i)
        om = tuple(omega) if omega is not None else self.omega(i)
        if any(dot(om, c) != int(j == i) for j, c in enumerate(d.simple_coroots)):
            raise ConfigError("omega is not dual to the simple coroots")
        w0 = self.G.longest
        qu = self._qfac(u, basis)
        qv = self._qfac(v, basis)
        diff = vsub(w0.act(om), v.act(om))
        s = qdiv(cfg.a_of(diff), cfg.a(v))
        coeffs = {v: self._lin(vscale(qu, cfg.bar(diff, v)))}
        for w, g in self.P.covers[v]:
            gv = d.coroot(g)
            c = (s * dot(cfg.lam, gv) + dot(om, gv)) * qdiv(qu * qv, self._qfac(w, basis))
            coeffs[w] = self._const(c)
        out = {"formula": SchubertExpansion(coeffs, basis)}
        if all(dot(cfg.lam, c) == int(j == i) for j, c in enumerate(d.simple_coroots)):
            r = qdiv(cfg.a(w0), cfg.a(v))
            co = {v: self._lin(vscale(qu, cfg.bar(w0.act(cfg.lam), v)))}
            for w, g in self.P.covers[v]:
                co[w] = self._const(qdiv(qu * qv, self._qfac(w, basis)) * r * dot(om, d.coroot(g)))
            out["cominuscule"] = SchubertExpansion(co, basis)
            e = d.root_coeffs(vsub(w0.act(cfg.lam), v.act(cfg.lam)))
            diag = [0] * self.nv
            for ei, b in zip(e, d.negative_simple_roots):
                diag = [x + ei * y for x, y in zip(diag, cfg.bar(b, w0))]
            w0f = {v: self._lin(vscale(qu * r, diag))}
            for w, g in self.P.covers[v]:
                w0f[w] = self._const(qu * r * qdiv(qv, self._qfac(w, basis)) * dot(om, d.coroot(g)))
            out["w0"] = SchubertExpansion(w0f, basis)
        oracle = self.structure_constants(u, v, basis)
        for name, exp in out.items():
            self._check(exp, oracle, f"chevalley_divisor[{name}] alpha_{i + 1} at {v}")
        return out if forms else out["formula"]
