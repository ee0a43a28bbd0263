"""Positivity certificates on the full flag variety of GL(3).

Each structure constant c_uv^w is written as a positive combination of
products of distinct weighted negative roots, each taken at a point of
S(u, v; w). The certificate starts from the non-weighted constants, which a
small exact LP splits into square-free products of negative roots, and is
then pushed to the weighted setting one root at a time.

Run with ``python3 demos/positivity_certificates.py``.
"""
from wschub import Schubert, WeightedConfig
from wschub.positivity import certify_structure_constants

S = Schubert(WeightedConfig("gl(3)", (2, 1, 0), (1, 2, 4)))
cfg = S.cfg
print("a_w:", {w.word_str(): cfg.a(w) for w in S.reps})
print("q_w:", {w.word_str(): cfg.q(w) for w in S.reps})

u = v = next(w for w in S.reps if w.length == 2)
res = certify_structure_constants(S, u, v, "weighted")
print(f"\nproduct of delta_X{u.word_str()} with itself")
for w, c in res.constants.coeffs.items():
    cert = res.certificates[w]
    ok, bad = res.verdicts[w]
    print(f"\n  c^{w.word_str()} = {c.to_str()}")
    print(f"  allowed basepoints: {[x.word_str() for x in cert.allowed]}")
    for coeff, facs in cert.terms:
        roots = " * ".join(f"{r}({x.word_str()})" for r, x in facs) or "1"
        print(f"    {coeff} * {roots}")
    print("  verified" if ok else f"  violations: {bad}")

# All pairs at once
total = sum(len(certify_structure_constants(S, a, b).verdicts) for a in S.reps for b in S.reps)
print(f"\nall {len(S.reps) ** 2} products certified, {total} constants")
