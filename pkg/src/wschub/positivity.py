"""Positivity certificates for weighted structure constants.

The pipeline is:

1. compute the ordinary structure constants (the same engine run with the
   non-weighted cocharacter) and write each as a nonnegative combination of
   square-free products of negative roots, found by an exact LP;
2. push every root product through the weighted Chevalley rule
   ``beta * delta_z = bar(beta, z) delta_z + (a_beta / a_z) sum (lam.gamma^v) delta_y``,
   one root at a time, remembering where each factor was peeled;
3. rescale bar factors to weighted roots and check the result exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .exactpoly import Poly, coeff_to_str, dot, qdiv, rref, substitute_linear
from .rootdata import WeylElement
from .schubert import Schubert, SchubertExpansion
from .simplex import solve_nonneg_linear
from .weighted import ConfigError, WeightedConfig, nonweighted_chi

__all__ = [
    "RootExpansion",
    "SquarefreeDecomposition",
    "Certificate",
    "NotNonnegative",
    "negroot_expand_at",
    "squarefree_decompose",
    "reexpand_weighted",
    "verify_certificate",
    "certify_structure_constants",
    "nonweighted_engine",
    "DEFAULT_COLUMN_LIMIT",
]

DEFAULT_COLUMN_LIMIT = 200


class NotNonnegative(ArithmeticError):
    """No square-free nonnegative decomposition exists (carries a Farkas witness)."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


# --------------------------------------------------------------------------
@dataclass
class RootExpansion:
    """A polynomial written in the coordinates t_i = bar(beta_i, y)."""

    coords: Poly | None   # Poly in n variables, or None when outside the span
    in_span: bool
    nonnegative: bool | None

    def coefficient(self, exps: Sequence[int]):
        return self.coords.terms.get(tuple(exps), 0)


def negroot_expand_at(S: Schubert, c: Poly, y: WeylElement) -> RootExpansion:
    cfg = S.cfg
    d = cfg.datum
    r, n = cfg.rank, d.n
    forms = [list(cfg.bar(b, y)) for b in d.negative_simple_roots]
    if len(rref(forms)[1]) != n:
        raise ConfigError(f"lifted negative simple roots at {y} are dependent")
    rows = [list(f) for f in forms]
    for k in range(r):
        e = [int(j == k) for j in range(r)]
        if len(rref(rows + [e])[1]) > len(rows):
            rows.append(e)
    # x = M^{-1} t
    aug = [row + [int(i == j) for j in range(r)] for i, row in enumerate(rows)]
    red, _ = rref(aug)
    inv = [row[r:] for row in red]
    expanded = substitute_linear(c, [tuple(inv[k]) for k in range(r)])
    if any(any(e[j] for j in range(n, r)) for e in expanded.terms):
        return RootExpansion(None, False, False)
    coords = Poly(n, {e[:n]: v for e, v in expanded.terms.items()})
    if cfg.symbolic:
        nonneg = None
    else:
        nonneg = all(v >= 0 for v in coords.terms.values())
    return RootExpansion(coords, True, nonneg)


# --------------------------------------------------------------------------
@dataclass
class SquarefreeDecomposition:
    terms: list   # (coefficient, tuple of root vectors)
    target: Poly

    def evaluate(self) -> Poly:
        out = Poly.zero(self.target.nvars)
        for c, roots in self.terms:
            out = out + Poly.product_of_linear(roots, self.target.nvars, c)
        return out


def squarefree_decompose(target: Poly, roots: Sequence[Sequence],
                         limit: int = DEFAULT_COLUMN_LIMIT) -> SquarefreeDecomposition:
    """Nonnegative combination of products of distinct roots equal to ``target``."""
    roots = [tuple(r) for r in roots]
    if target.is_zero():
        return SquarefreeDecomposition([], target)
    if not target.is_homogeneous():
        raise ValueError("target must be homogeneous")
    deg = target.degree()
    if deg > len(roots):
        raise NotNonnegative(f"degree {deg} exceeds the number of roots")
    ncols = comb(len(roots), deg)
    if ncols > limit:
        raise ValueError(f"{ncols} root subsets exceed the column limit {limit}")
    subsets = list(combinations(range(len(roots)), deg))
    prods = [Poly.product_of_linear([roots[i] for i in s], target.nvars) for s in subsets]
    monos = sorted(set(target.terms).union(*(p.terms for p in prods)))
    A = [[p.terms.get(m, 0) for p in prods] for m in monos]
    b = [target.terms.get(m, 0) for m in monos]
    res = solve_nonneg_linear(A, b)
    if not res.feasible:
        raise NotNonnegative("target is not a nonnegative square-free root combination",
                             res.witness)
    terms = [(_int_if(x), tuple(roots[i] for i in s)) for x, s in zip(res.x, subsets) if x != 0]
    out = SquarefreeDecomposition(terms, target)
    if out.evaluate() != target:
        raise RuntimeError("decomposition does not reproduce its target")
    return out


def _int_if(x):
    return x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x


# --------------------------------------------------------------------------
@dataclass
class Certificate:
    """sum coeff * prod weighted_root(root, basepoint)."""

    terms: list            # (coeff, tuple of (root, basepoint))
    mode: str              # "negative" or "positive"
    target: WeylElement
    allowed: list | None = None

    def evaluate(self, cfg: WeightedConfig) -> Poly:
        out = Poly.zero(cfg.rank)
        for c, facs in self.terms:
            out = out + Poly.product_of_linear(
                [cfg.weighted_root(r, x) for r, x in facs], cfg.rank, c)
        return out

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "class": self.target.word_str(),
            "terms": [
                {"coeff": coeff_to_str(c),
                 "factors": [{"root": list(r), "basepoint": x.word_str()} for r, x in facs]}
                for c, facs in self.terms
            ],
        }


def _check_mode(cfg: WeightedConfig, mode: str):
    if mode not in ("negative", "positive"):
        raise ValueError("mode must be 'negative' or 'positive'")
    pos = [a for a, _ in cfg.datum.positive_roots]
    if mode == "negative" and any(dot(a, cfg.chi) > 0 for a in pos):
        raise ConfigError("negative mode needs an antidominant chi")
    if mode == "positive" and any(dot(a, cfg.chi) < 0 for a in pos):
        raise ConfigError("positive mode needs a dominant chi")


def reexpand_weighted(S: Schubert, decomps: dict, mode: str = "negative") -> dict:
    """Turn {w: decomposition of the coefficient of delta_w} into per-class
    certificates for the plain basis of the weighted configuration.

    Every factor is returned as a weighted root together with the fixed point
    at which it was peeled off.
    """
    cfg = S.cfg
    _check_mode(cfg, mode)
    P = S.P
    above = {y: [(z, g) for z in P.reps for (x, g) in P.covers[z] if x == y] for y in P.reps}
    acc: dict = {}  # y -> {factors: coeff}
    for w, dec in decomps.items():
        for coeff, roots in dec.terms:
            for r in roots:
                neg = not cfg.datum.is_positive(r)
                if neg != (mode == "negative"):
                    raise ConfigError(f"root {r} has the wrong sign for {mode} mode")
            # f maps y -> {tuple of (root, basepoint): coeff}, in bar factors
            f = {w: {(): Fraction(1)}}
            for beta in roots:
                ab = cfg.a_of(beta)
                nf: dict = {}
                for y in sorted(set(f) | {y for z in f for y, _ in P.covers[z]},
                                key=P.position):
                    terms = {}
                    for facs, c in f.get(y, {}).items():
                        k = facs + ((beta, y),)
                        terms[k] = terms.get(k, 0) + c
                    if ab != 0:
                        for z, g in above[y]:
                            if z not in f:
                                continue
                            s = qdiv(ab, cfg.a(z)) * dot(cfg.lam, cfg.datum.coroot(g))
                            for facs, c in f[z].items():
                                terms[facs] = terms.get(facs, 0) + c * s
                    terms = {k: v for k, v in terms.items() if v != 0}
                    if terms:
                        nf[y] = terms
                f = nf
            for y, terms in f.items():
                bucket = acc.setdefault(y, {})
                for facs, c in terms.items():
                    scale = 1
                    for r, x in facs:
                        scale = scale * cfg.weighted_root_scale(r, x)
                    key = tuple(sorted(facs, key=lambda t: (P.position(t[1]), t[0])))
                    bucket[key] = bucket.get(key, 0) + _int_if(Fraction(coeff) * c / scale)
    out = {}
    for y in P.reps:
        if y in acc:
            terms = [(c, k) for k, c in acc[y].items() if c != 0]
            out[y] = Certificate(terms, mode, y)
    return out


def verify_certificate(S: Schubert, cert: Certificate, claimed: Poly, u, v, w):
    """(ok, violations) for the four checks: identity, signs, distinctness, basepoints."""
    cfg = S.cfg
    bad = []
    if cert.evaluate(cfg) != claimed:
        bad.append("(i) certificate does not evaluate to the claimed polynomial")
    allowed = set(S.P.interval_intersection(u, v, w))
    for c, facs in cert.terms:
        if not c > 0:
            bad.append(f"(ii) coefficient {c} is not positive")
        roots = [r for r, _ in facs]
        if len(set(roots)) != len(roots):
            bad.append(f"(iii) repeated root in term {[list(r) for r in roots]}")
        for r, x in facs:
            if x not in allowed:
                bad.append(f"(iv) basepoint {x.word_str()} is outside S(u,v;w)")
            if cfg.datum.is_positive(r) != (cert.mode == "positive"):
                bad.append(f"root {list(r)} has the wrong sign")
    return not bad, bad


# --------------------------------------------------------------------------
def nonweighted_engine(cfg: WeightedConfig) -> Schubert:
    chi0 = nonweighted_chi(cfg.datum, cfg.lam)
    return Schubert(WeightedConfig(cfg.datum, cfg.lam, chi0, sorted(cfg.cosets.J)))


@dataclass
class CertifyResult:
    u: WeylElement
    v: WeylElement
    constants: SchubertExpansion
    certificates: dict
    verdicts: dict = field(default_factory=dict)  # w -> (ok, violations)

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.verdicts.values())


def certify_structure_constants(S: Schubert, u, v, basis: str = "weighted",
                                S0: Schubert | None = None,
                                limit: int = DEFAULT_COLUMN_LIMIT) -> CertifyResult:
    """Certificates for every c_{uv}^w (negative mode, antidominant chi)."""
    S0 = S0 or nonweighted_engine(S.cfg)
    b = S0.structure_constants(u, v, "plain")
    neg = [tuple(-x for x in a) for a, _ in S.cfg.datum.positive_roots]
    decomps = {w: squarefree_decompose(p, neg, limit) for w, p in b.coeffs.items()}
    certs = reexpand_weighted(S, decomps, "negative")
    consts = S.structure_constants(u, v, basis)
    if basis == "weighted":
        for y, cert in certs.items():
            f = qdiv(S.cfg.q(u) * S.cfg.q(v), S.cfg.q(y))
            cert.terms = [(_int_if(Fraction(c) * f), k) for c, k in cert.terms]
    res = CertifyResult(u, v, consts, certs)
    for y in S.reps:
        claimed = consts.get(y, S.nv)
        cert = certs.get(y, Certificate([], "negative", y))
        certs[y] = cert
        cert.allowed = S.P.interval_intersection(u, v, y)
        if claimed.is_zero() and not cert.terms:
            continue
        res.verdicts[y] = verify_certificate(S, cert, claimed, u, v, y)
    return res
