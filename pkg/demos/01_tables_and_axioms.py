"""Operation tables, term evaluation, and axiom reports.

Three small algebras on a 3-element chain 0 < h < 1 tell the whole story:
the Lukasiewicz chain satisfies the interchange axiom, the idempotent-middle
chain does not, and exhaustive evaluation finds the witness.
"""

from nearsemiring import (boolean2, check_axioms, eval_term, find_isomorphism,
                          godel3, luk_chain, product)
from nearsemiring.terms import JOIN_FROM_TIMES, LUK_LHS, LUK_RHS, x, y

l3 = luk_chain(3)
g3 = godel3()

print("the 3-element Lukasiewicz chain")
print("  plus  =", l3.plus)
print("  times =", l3.times)
print("  alpha =", l3.alpha)

# terms are built with +, * and .a (involution)
print("\nterm evaluation on the chain:")
print("  x * x^a at x=h          ->", l3.label(eval_term(l3, x * x.a, {"x": 1})))
print("  join recovered from *:  h + 1 =",
      l3.label(eval_term(l3, JOIN_FROM_TIMES, {"x": 1, "y": 2})))

print("\naxiom check, class luk-nrs:")
for alg, name in ((l3, "Lukasiewicz chain"), (g3, "idempotent middle")):
    report = check_axioms(alg, "luk-nrs")
    verdict = "passes" if report.ok else "fails"
    print(f"  {name}: {verdict}")
    for c in report.failures():
        print(f"    {c.name} falsified at {c.witness.render(alg)}")

print("\nboth sides of the interchange axiom on the failing algebra:")
for ex, ey in ((2, 1), (1, 2)):
    env = {"x": ex, "y": ey}
    print(f"  x={g3.label(ex)}, y={g3.label(ey)}:"
          f" lhs={g3.label(eval_term(g3, LUK_LHS, env))}"
          f" rhs={g3.label(eval_term(g3, LUK_RHS, env))}")

print("\nproducts and isomorphism search:")
p = product(boolean2(), l3)
q = product(l3, boolean2())
iso = find_isomorphism(p, q)
print(f"  B2 x L3 has size {p.size}; the swap to L3 x B2 is {list(iso.mapping)}")
print("  B2 x L3 passes luk-rs:", check_axioms(p, "luk-rs").ok)
