"""Weight sequences and the two admission gates.

Every construction in this package starts from a sequence of weights in
[0, 1].  Two exact tests decide what is reachable: majorization between
finite lists, and the integrality condition for diagonals of projections.
"""

from admseq import WeightSeq, kadison_check, majorizes, split_mu_lambda

# finite lists first: (0.5, 0.5, 0.5, 0.5) is flatter than (1, 1)
v = majorizes([0.5, 0.5, 0.5, 0.5], [1.0, 1.0])
print("half weights under two full ones:", v.holds)

# the comparison is order free and zero-padded; a failure names the
# first partial sum that crosses
v = majorizes([0.9, 0.1], [0.5, 0.5])
print("concentrated under flat:", v.holds, "- crosses at", v.failing_index)

# infinite sequences carry closed-form tails instead of arrays
geo = WeightSeq.geometric([], 0.25, 0.5)  # 1/4, 1/8, 1/16, ... summing to 1/2
print("geometric total:", geo.total(), " tail from index 3:", geo.tail_sum(3))

per = WeightSeq.periodic([0.3], [0.4, 0.9])
print("periodic head:", per.head(5), " total:", per.total())

# the projection-diagonal gate: a = mass at or below 1/2, b = defect above;
# admissible iff a + b diverges or a - b is an integer
ok = WeightSeq.interleave(geo, WeightSeq.one_minus(geo))
rep = kadison_check(ok)
print("interleaved geometric: a =", rep.a, " b =", rep.b, " ->", rep.satisfied)

bad = WeightSeq.finite([0.5, 0.5, 0.25])
rep = kadison_check(bad)
print("finite with stray quarter: a - b =", rep.a - rep.b, " ->", rep.satisfied)

# splitting a sequence into its small part mu and its defect part lam
sp = split_mu_lambda(WeightSeq.periodic([], [0.4, 0.9]))
print("split of 0.4, 0.9, 0.4, 0.9, ...")
print("  mu head: ", sp.mu.head(3))
print("  lam head:", sp.lam.head(3), " (defects 1 - 0.9)")
print("  M =", sp.M, " N =", sp.N)
