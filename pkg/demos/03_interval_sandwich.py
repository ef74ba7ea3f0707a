"""Solving the interval sandwich question on generated instances.

``gen_yes_instance`` hides a solution: it draws intervals of bounded depth,
colors them, and throws away some overlap edges.  ``solve_icg`` has to find
some completion back to a properly colored interval graph; it need not be the
hidden one.
"""
from glis import gen_random, gen_yes_instance, serialize_graph, serialize_model, solve_icg, verify_certificate

g = gen_yes_instance(n=10, k=3, keep_prob=0.6, seed=2024)
print(serialize_graph(g))

cert = solve_icg(g)
print("added edges:", sorted(cert.added_edges))
print(serialize_model(cert.model))

report = verify_certificate(g, cert)
print("\n".join(report.lines()))

# Random colorings are mostly hopeless; count how often a sandwich exists.
yes = sum(solve_icg(gen_random(8, 3, 0.3, seed)) is not None for seed in range(200))
print(f"{yes} of 200 random 3-colored graphs on 8 vertices have a certificate")
