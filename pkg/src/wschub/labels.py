"""Parsing and printing of W^P elements.

Accepted tokens:

* ``e`` or a reduced word ``s1.s3.s2`` (1-based simple reflections); the
  element is replaced by the maximal representative of its coset;
* ``#k``: the k-th representative in canonical order (0 = top);
* ``wl:1,-1,1``: the representative with that value of w.lam;
* preset aliases: ``v<k>`` (w.lam = x_k) for gl(m+1) with lam = x_0,
  ``{i,j,...}`` (support of w.lam among x_1..x_m) for 0/1 weights on
  cstar_gl(m), and ``w<k>`` for the Lagrangian preset (codimension k).
"""
from __future__ import annotations

import re

from .rootdata import WeylElement
from .weighted import WeightedConfig

__all__ = ["resolve", "label", "LabelError"]

_LG_WEIGHTS = {(1, -1, -1): 0, (1, -1, 1): 1, (1, 1, -1): 2, (1, 1, 1): 3}


class LabelError(ValueError):
    pass


def _by_weight(cfg: WeightedConfig, vec) -> WeylElement:
    vec = tuple(vec)
    for w in cfg.reps:
        if cfg.wlam(w) == vec:
            return w
    raise LabelError(f"no fixed point with w.lam = {vec}")


def _is_wps(cfg):
    return cfg.datum.name.startswith("gl(") and cfg.lam == (1,) + (0,) * (cfg.rank - 1)


def _is_grass(cfg):
    return (cfg.datum.name.startswith("cstar_gl(") and cfg.lam[0] == 1
            and all(x in (0, 1) for x in cfg.lam))


def _is_lg(cfg):
    return cfg.datum.name == "cstar_sp4" and cfg.lam == (1, 1, 1)


def resolve(cfg: WeightedConfig, token: str) -> WeylElement:
    t = token.strip()
    if t == "e":
        return cfg.cosets.rep(cfg.group.identity)
    if re.fullmatch(r"s\d+(\.s\d+)*", t):
        word = [int(p[1:]) - 1 for p in t.split(".")]
        return cfg.cosets.rep(cfg.group.from_word(word))
    m = re.fullmatch(r"#(\d+)", t)
    if m:
        k = int(m.group(1))
        if k >= len(cfg.reps):
            raise LabelError(f"only {len(cfg.reps)} representatives")
        return cfg.reps[k]
    if t.startswith("wl:"):
        return _by_weight(cfg, (int(x) for x in t[3:].split(",")))
    m = re.fullmatch(r"v(\d+)", t)
    if m and _is_wps(cfg):
        k = int(m.group(1))
        return _by_weight(cfg, tuple(int(i == k) for i in range(cfg.rank)))
    m = re.fullmatch(r"\{([\d, ]+)\}", t)
    if m and _is_grass(cfg):
        s = {int(x) for x in m.group(1).split(",")}
        return _by_weight(cfg, (1,) + tuple(int(i in s) for i in range(1, cfg.rank)))
    m = re.fullmatch(r"w(\d)", t)
    if m and _is_lg(cfg):
        k = int(m.group(1))
        for vec, j in _LG_WEIGHTS.items():
            if j == k:
                return _by_weight(cfg, vec)
    raise LabelError(f"cannot resolve element {token!r}")


def label(cfg: WeightedConfig, w: WeylElement) -> str:
    """Preset alias when one exists, otherwise the reduced word."""
    wl = cfg.wlam(w)
    if _is_wps(cfg):
        return f"v{wl.index(1)}"
    if _is_grass(cfg):
        return "{" + ",".join(str(i) for i in range(1, cfg.rank) if wl[i]) + "}"
    if _is_lg(cfg) and wl in _LG_WEIGHTS:
        return f"w{_LG_WEIGHTS[wl]}"
    return w.word_str()
