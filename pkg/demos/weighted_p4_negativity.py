"""Where positivity stops: the square of delta_Z2 in weighted P^4.

Structure constants are nonnegative when expanded in weighted negative roots
at any point above S(u, v; w). Below that range nothing is promised, and the
square of the class of Z_2 shows it happening.

Run with ``python3 demos/weighted_p4_negativity.py``.
"""
from fractions import Fraction

from wschub import Schubert, WeightedConfig
from wschub.labels import resolve
from wschub.positivity import negroot_expand_at


def square(chi):
    S = Schubert(WeightedConfig("gl(5)", (1, 0, 0, 0, 0), chi))
    v = [resolve(S.cfg, f"v{k}") for k in range(5)]
    return S, v, S.structure_constants(v[2], v[2])


names = ["t0", "t1", "t2", "t3"]  # t_i = bar(beta_i, y)

chi = (1, 2, 3, 4, 5)
S, v, sq = square(chi)
print(f"chi = {chi}")
for w, c in sq.coeffs.items():
    k = v.index(w)
    print(f"\ncoefficient of delta_Z{k}")
    for y in range(max(k - 1, 0), 5):
        e = negroot_expand_at(S, c, v[y])
        flag = "" if e.nonnegative else "   <- negative"
        print(f"  at v{y}: {e.coords.to_str(names)}{flag}")

# The delta_Z1 coefficient at v1 is nonnegative exactly when
# 1/a2 - 1/a3 <= 1/a4; sweep a few chi to watch the sign flip.
print("\nsweep of the delta_Z1 coefficient at v1")
for chi in [(1, 2, 2, 4, 4), (1, 2, 2, 5, 5), (1, 2, 3, 4, 5), (1, 1, 2, 100, 100)]:
    S, v, sq = square(chi)
    a = chi
    cond = Fraction(1, a[2]) - Fraction(1, a[3]) <= Fraction(1, a[4])
    got = negroot_expand_at(S, sq.coeffs[v[1]], v[1]).nonnegative
    print(f"  chi = {chi}: condition {cond}, nonnegative {got}")
