# How the inclusion test's error bound grows with n, and how it behaves in practice.
from algequiv import M31, M127, P63, a_values, build_extremal_pair, error_bound_generic, render_decimal, extremal_timing_experiment

# the worst-case bound over all pairs on n nodes
for n, m in [(5, M31), (25, M31), (25, P63), (25, M127)]:
    b = error_bound_generic(n, m)
    print(f"n={n:>2} p={m}: {render_decimal(b)}")

# graphs attaining it: per-node degree counts double (plus one) along the order
g, (s, t) = build_extremal_pair(8, 2)
print("a_v:", a_values(g).values, "nonadjacent pair:", (g.names[s], g.names[t]))

# every cross pair of the family is a known non-inclusion; count how many slip through
r = extremal_timing_experiment(10, M31, 200, 1)
print(f"n=10: {r.instances} trials, {r.false_positive_count} false positives, "
      f"{r.mean_time_ms:.2f} ms each, bound {render_decimal(r.theoretical_bound)}")
