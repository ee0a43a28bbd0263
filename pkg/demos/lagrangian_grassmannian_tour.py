"""A tour of the weighted Lagrangian Grassmannian LG(2,4).

The group is C^* x Sp(4) with coordinates (x0, x1, x2); lambda = (1, 1, 1)
and the parabolic is generated by the first simple root, so W^P is a chain
w0 > w1 > w2 > w3 of four fixed points.

Run with ``python3 demos/lagrangian_grassmannian_tour.py``.
"""
from wschub import Schubert, WeightedConfig
from wschub.labels import label

# Symbolic chi: coefficients live in Q(a0, a1, a2)
S = Schubert(WeightedConfig("cstar_sp4", (1, 1, 1)))
cfg = S.cfg
names = [label(cfg, w) for w in S.reps]
print("fixed points:", names)
for w in S.reps:
    print(f"  {label(cfg, w)}: w.lam = {cfg.wlam(w)}, a_w = {cfg.a(w)}")

# Plain class restrictions at a concrete chi; each row is one Schubert class
C = Schubert(WeightedConfig("cstar_sp4", (1, 1, 1), (8, -1, -1)))
print("\nrestrictions of delta_Z at chi = (8, -1, -1)")
for w in C.reps:
    row = [C.weighted_restrict(w, x).to_str() for x in C.reps]
    print(f"  {label(cfg, w)}: {row}")

# The point class at its own point is the Euler class of the tangent space
factors, c = S.euler_factors(S.reps[-1])
print("\nEuler factors at w3:", factors, "constant", c)

# Products, symbolic in the weights
print("\nproducts in the plain basis")
for i, j in [(1, 1), (1, 3)]:
    e = S.structure_constants(S.reps[i], S.reps[j])
    terms = {label(cfg, w): p.to_str() for w, p in e.coeffs.items()}
    print(f"  {names[i]} * {names[j]} = {terms}")

# Orbifold stabilisers change with chi; q_w measures that in each class
print("\nq_w for three concrete chi")
for chi in [(8, -1, -1), (3, -1, 0), (11, -4, -3)]:
    c = WeightedConfig("cstar_sp4", (1, 1, 1), chi)
    print(f"  chi = {chi}: q = {[c.q(w) for w in c.reps]}")

# Not every chi defines a projective quotient
rep = WeightedConfig("cstar_sp4", (1, 1, 1), (11, -4, 3)).validate()
print("\nchi = (11, -4, 3) valid?", rep.valid, rep.messages)
