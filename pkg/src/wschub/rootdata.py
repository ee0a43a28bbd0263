"""Root data, Weyl groups, Bruhat order and parabolic coset representatives.

Weights live in Q^{m+1} with the standard dot product as the pairing
against coweights. Weyl group elements are integer matrices acting on
weights (column vectors); reflections are ``mu -> mu - <mu, a^v> a``.

>>> d = build_root_datum("cstar_sp4")
>>> W = WeylGroup(d)
>>> len(W), W.longest.length
(8, 4)
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exactpoly import dot, qdiv, rref, vsub

__all__ = [
    "RootDatumError",
    "WeylGroupTooLarge",
    "RootDatum",
    "WeylElement",
    "WeylGroup",
    "ParabolicCosets",
    "build_root_datum",
    "DEFAULT_WEYL_LIMIT",
]

DEFAULT_WEYL_LIMIT = 10_000

Vector = tuple


class RootDatumError(ValueError):
    pass


class WeylGroupTooLarge(RootDatumError):
    pass


def _reflect(mu: Sequence, root: Sequence, coroot: Sequence) -> tuple:
    c = dot(mu, coroot)
    if c == 0:
        return tuple(mu)
    return tuple(m - c * a for m, a in zip(mu, root))


@dataclass(frozen=True)
class RootDatum:
    rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    name: str = "explicit"

    def __post_init__(self):
        n = len(self.simple_roots)
        if len(self.simple_coroots) != n:
            raise RootDatumError("need one coroot per simple root")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank:
                raise RootDatumError(f"vector {v} does not have length {self.rank}")
        C = self.cartan_matrix
        for i in range(n):
            if C[i][i] != 2:
                raise RootDatumError(f"Cartan entry ({i},{i}) is {C[i][i]}, not 2")
            for j in range(n):
                if i != j and (C[i][j] > 0 or (C[i][j] == 0) != (C[j][i] == 0)):
                    raise RootDatumError(f"invalid Cartan entries at ({i},{j})")
        if n and len(rref([list(a) for a in self.simple_roots])[1]) != n:
            raise RootDatumError("simple roots are linearly dependent")

    @property
    def n(self) -> int:
        return len(self.simple_roots)

    @property
    def cartan_matrix(self) -> list[list[int]]:
        return [[dot(a, c) for c in self.simple_coroots] for a in self.simple_roots]

    @cached_property
    def _coord_solver(self):
        # rows of the rref of [simple roots as columns | I] give a left inverse
        n, r = self.n, self.rank
        M = [[self.simple_roots[j][i] for j in range(n)] + [int(i == k) for k in range(r)]
             for i in range(r)]
        red, piv = rref(M)
        return red[:n], piv

    def simple_coords(self, mu: Sequence):
        """Coefficients c with mu = sum c_i alpha_i, or None outside the root span."""
        rows, _ = self._coord_solver
        n = self.n
        c = tuple(sum(row[n + k] * mu[k] for k in range(self.rank)) for row in rows)
        c = tuple(qdiv(x, 1) if isinstance(x, int) else x for x in c)
        back = [0] * self.rank
        for ci, a in zip(c, self.simple_roots):
            for k in range(self.rank):
                back[k] += ci * a[k]
        if any(b != m for b, m in zip(back, mu)):
            return None
        return c

    def root_coeffs(self, mu: Sequence):
        """Coefficients over the negative simple roots beta_i = -alpha_i, or None."""
        c = self.simple_coords(mu)
        return None if c is None else tuple(-x for x in c)

    @cached_property
    def positive_roots(self) -> tuple[tuple[Vector, Vector], ...]:
        """(root, coroot) pairs, sorted by height then simple coordinates."""
        seen = {}
        queue = deque(zip(self.simple_roots, self.simple_coroots))
        for a, c in queue:
            seen[a] = c
        while queue:
            a, c = queue.popleft()
            for sa, sc in zip(self.simple_roots, self.simple_coroots):
                b = _reflect(a, sa, sc)
                bc = _reflect(c, sc, sa)
                if b in seen or b == tuple(-x for x in a):
                    continue
                coords = self.simple_coords(b)
                if all(x >= 0 for x in coords):
                    seen[b] = bc
                    queue.append((b, bc))
                    if len(seen) > 10 * DEFAULT_WEYL_LIMIT:
                        raise WeylGroupTooLarge("root system is not finite")

        def key(item):
            c = self.simple_coords(item[0])
            return (sum(c), tuple(-x for x in c))

        return tuple(sorted(seen.items(), key=key))

    @cached_property
    def _coroot_of(self) -> dict:
        d = {}
        for a, c in self.positive_roots:
            d[a] = c
            d[tuple(-x for x in a)] = tuple(-x for x in c)
        return d

    def coroot(self, root: Sequence) -> Vector:
        try:
            return self._coroot_of[tuple(root)]
        except KeyError:
            raise RootDatumError(f"{tuple(root)} is not a root") from None

    @cached_property
    def roots(self) -> tuple[Vector, ...]:
        pos = [a for a, _ in self.positive_roots]
        return tuple(pos + [tuple(-x for x in a) for a in pos])

    def is_positive(self, root: Sequence) -> bool:
        c = self.simple_coords(root)
        if c is None:
            raise RootDatumError(f"{tuple(root)} is not in the root span")
        return all(x >= 0 for x in c) and any(x != 0 for x in c)

    @property
    def negative_simple_roots(self) -> tuple[Vector, ...]:
        return tuple(tuple(-x for x in a) for a in self.simple_roots)


def build_root_datum(spec) -> RootDatum:
    """Preset name (``gl(k)``, ``cstar_gl(k)``, ``cstar_sp4``) or a dict with
    ``simple_roots`` and ``simple_coroots``.

    >>> build_root_datum("gl(2)").simple_roots
    ((1, -1),)
    """
    if isinstance(spec, RootDatum):
        return spec
    if isinstance(spec, dict):
        roots = tuple(tuple(int(x) for x in v) for v in spec["simple_roots"])
        coroots = tuple(tuple(int(x) for x in v) for v in spec["simple_coroots"])
        if not roots:
            rank = int(spec["rank"])
        else:
            rank = len(roots[0])
        return RootDatum(rank, roots, coroots, spec.get("name", "explicit"))
    s = str(spec).replace(" ", "").lower()
    m = re.fullmatch(r"gl\((\d+)\)", s)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise RootDatumError("gl(k) needs k >= 1")
        roots = []
        for i in range(k - 1):
            v = [0] * k
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        return RootDatum(k, tuple(roots), tuple(roots), f"gl({k})")
    m = re.fullmatch(r"cstar_gl\((\d+)\)", s)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise RootDatumError("cstar_gl(k) needs k >= 1")
        roots = []
        for i in range(1, k):
            v = [0] * (k + 1)
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        return RootDatum(k + 1, tuple(roots), tuple(roots), f"cstar_gl({k})")
    if s == "cstar_sp4":
        return RootDatum(3, ((0, 1, -1), (0, 0, 2)), ((0, 1, -1), (0, 0, 1)), "cstar_sp4")
    raise RootDatumError(f"unknown root datum preset {spec!r}")


@dataclass(frozen=True)
class WeylElement:
    """An element of W; equality and hashing use the matrix only."""

    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] = field(compare=False)
    index: int = field(default=-1, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, mu: Sequence) -> tuple:
        if len(mu) != len(self.matrix):
            raise ValueError(f"weight of length {len(mu)} for a rank {len(self.matrix)} group")
        return tuple(dot(row, mu) for row in self.matrix)

    def word_str(self) -> str:
        return ".".join(f"s{i + 1}" for i in self.word) if self.word else "e"

    def __repr__(self):
        return f"WeylElement({self.word_str()})"


def _matmul(A, B):
    n = len(A)
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(n) if A[i][k]) for j in range(n))
        for i in range(n)
    )


class WeylGroup:
    """All elements of W, generated breadth-first by right multiplication.

    Elements are ordered by length and then by their canonical word, which is
    the lexicographically least reduced word.
    """

    def __init__(self, datum: RootDatum, limit: int = DEFAULT_WEYL_LIMIT):
        self.datum = datum
        r = datum.rank
        self.gens = []
        for a, c in zip(datum.simple_roots, datum.simple_coroots):
            self.gens.append(
                tuple(tuple(int(i == j) - a[i] * c[j] for j in range(r)) for i in range(r))
            )
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        words = {ident: ()}
        level = [ident]
        while level:
            nxt = {}
            for M in level:
                w = words[M]
                for i, g in enumerate(self.gens):
                    P = _matmul(M, g)
                    if P in words or P in nxt:
                        continue
                    nxt[P] = w + (i,)
                    if len(words) + len(nxt) > limit:
                        raise WeylGroupTooLarge(f"Weyl group exceeds {limit} elements")
            words.update(nxt)
            level = sorted(nxt, key=lambda P: nxt[P])
        ordered = sorted(words.items(), key=lambda kv: (len(kv[1]), kv[1]))
        self.elements = [WeylElement(M, w, k) for k, (M, w) in enumerate(ordered)]
        self._by_matrix = {e.matrix: e for e in self.elements}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def lookup(self, matrix) -> WeylElement:
        return self._by_matrix[tuple(tuple(r) for r in matrix)]

    def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self._by_matrix[_matmul(u.matrix, v.matrix)]

    def s(self, i: int) -> WeylElement:
        return self._by_matrix[self.gens[i]]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            if not 0 <= i < len(self.gens):
                raise ValueError(f"no simple reflection with index {i}")
            w = self.mul(w, self.s(i))
        return w

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(reversed(w.word))

    def reflection(self, root: Sequence) -> WeylElement:
        root = tuple(root)
        c = self.datum.coroot(root)
        r = self.datum.rank
        return self._by_matrix[
            tuple(tuple(int(i == j) - root[i] * c[j] for j in range(r)) for i in range(r))
        ]

    def inversions(self, w: WeylElement) -> list:
        """Positive roots alpha with w^{-1} alpha < 0."""
        winv = self.inverse(w)
        return [a for a, _ in self.datum.positive_roots if not self.datum.is_positive(winv.act(a))]

    @cached_property
    def _below(self) -> list[int]:
        below = [0] * len(self)
        for u in self.elements:
            below[u.index] |= 1 << u.index
        for v in self.elements:  # sorted by length, so lower elements are done
            for a, _ in self.datum.positive_roots:
                u = self.mul(v, self.reflection(a))
                if u.length == v.length - 1:
                    below[v.index] |= below[u.index]
        return below

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        return bool(self._below[v.index] >> u.index & 1)


class ParabolicCosets:
    """Maximal-length representatives W^P for the parabolic subset ``J``.

    ``reps`` is sorted by length descending, then by canonical word.
    ``covers[v]`` lists pairs ``(w, gamma)`` with ``w = v r_gamma`` a P-cover
    below ``v``.
    """

    def __init__(self, group: WeylGroup, J: Iterable[int]):
        self.group = group
        self.datum = group.datum
        self.J = frozenset(J)
        if any(not 0 <= j < self.datum.n for j in self.J):
            raise RootDatumError(f"parabolic subset {sorted(self.J)} out of range")
        self.reps = sorted(
            (w for w in group if self._is_max(w)), key=lambda w: (-w.length, w.word)
        )
        self._pos = {w: k for k, w in enumerate(self.reps)}
        self.covers: dict[WeylElement, list[tuple[WeylElement, tuple]]] = {}
        for v in self.reps:
            lst = []
            for a, _ in self.datum.positive_roots:
                w = group.mul(v, group.reflection(a))
                if w in self._pos and w.length == v.length - 1:
                    lst.append((w, a))
            self.covers[v] = lst

    def _is_max(self, w: WeylElement) -> bool:
        return all(not self.datum.is_positive(w.act(self.datum.simple_roots[j])) for j in self.J)

    def __len__(self):
        return len(self.reps)

    def __contains__(self, w):
        return w in self._pos

    def position(self, w: WeylElement) -> int:
        return self._pos[w]

    @property
    def top(self) -> WeylElement:
        return self.reps[0]

    @property
    def bottom(self) -> WeylElement:
        return self.reps[-1]

    def rep(self, w: WeylElement) -> WeylElement:
        """The maximal-length element of the coset w W_P."""
        changed = True
        while changed:
            changed = False
            for j in sorted(self.J):
                if self.datum.is_positive(w.act(self.datum.simple_roots[j])):
                    w = self.group.mul(w, self.group.s(j))
                    changed = True
        return w

    def leq(self, u: WeylElement, v: WeylElement) -> bool:
        return self.group.bruhat_leq(u, v)

    def covered_by(self, w: WeylElement) -> list[tuple[WeylElement, tuple]]:
        """Pairs (z, gamma) with w covered by z in W^P."""
        return [(z, g) for z in self.reps for (x, g) in self.covers[z] if x == w]

    def in_levi(self, root: Sequence) -> bool:
        c = self.datum.simple_coords(root)
        return all(c[i] == 0 for i in range(len(c)) if i not in self.J)

    @cached_property
    def u_minus(self) -> tuple:
        """Negative roots outside the Levi subsystem."""
        return tuple(
            tuple(-x for x in a) for a, _ in self.datum.positive_roots if not self.in_levi(a)
        )

    def inversion_set(self, w: WeylElement) -> list:
        """Phi_w^P: positive roots alpha with w^{-1} alpha in Phi(u^-)."""
        if w not in self._pos:
            raise RootDatumError(f"{w} is not a maximal coset representative")
        um = set(self.u_minus)
        winv = self.group.inverse(w)
        return [a for a, _ in self.datum.positive_roots if winv.act(a) in um]

    def tangent_weights(self, w: WeylElement) -> list:
        """w Phi(u^-), the torus weights on the tangent space at wP."""
        return [w.act(b) for b in self.u_minus]

    def interval_intersection(self, u, v, w) -> list[WeylElement]:
        return [x for x in self.reps
                if self.leq(w, x) and self.leq(x, u) and self.leq(x, v)]
