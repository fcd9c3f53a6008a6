# Covariance matrices of a linear SEM, computed exactly over a prime field.
from pathlib import Path

from algequiv import M31, PrimeModulus, parse_graph, phi, sample_params, sigma_via_trek_rule
from algequiv.field import make_stream

GRAPHS = Path(__file__).parent / "graphs"

# field arithmetic: every value is a residue mod p
F = PrimeModulus(101)
x, y = F(7), F(30)
print("7 + 30 =", int(x + y), " 7 * 30 =", int(x * y), " 7 / 30 =", int(x / y))
print("presets:", M31.p, "(m31)")

# a chain a -> b -> c -> d with two bidirected edges; e is isolated
g = parse_graph((GRAPHS / "confounded_chain.graph").read_text())
print(g)

# draw Lambda and Omega uniformly over GF(p); the seed fixes the draw
theta = sample_params(g, M31, make_stream(42))
sigma = phi(theta)  # (I - Lambda)^-T Omega (I - Lambda)^-1
for row in sigma.tolist():
    print(" ".join(f"{v:>10}" for v in row))

# the same entries as sums over treks
for v, w in [(0, 3), (1, 2), (0, 4)]:
    print(g.names[v], g.names[w], sigma_via_trek_rule(g, theta, v, w) == sigma[v, w])

# e has no treks to anything else, so its off-diagonal covariances are zero
print("sigma_ae =", sigma.value(0, 4))
