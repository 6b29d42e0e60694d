"""The skew polynomial ring F_(q^m)[x; sigma] of linearized polynomials.

A linearized polynomial only has q-power monomials x^[i] = x^(q^i); as a map
on F_(q^m) it is F_q-linear, and ring multiplication is composition.
"""

from twistgab import LinearizedPoly, annihilator, annihilator_product, default_tower

t = default_tower(2, 1, 4)
w = 2

# f(x) = w x + x^2  (coefficients indexed by q-power: [w, 1])
f = LinearizedPoly(t, (w, 1))
print("f =", f, " deg_q =", f.deg_q)
print("f(w) =", f(w), "(w^2 + w*w cancels)")

# multiplication is composition, and it is NOT commutative
g = LinearizedPoly.monomial(t, w, 1)   # w x^[1]
h = LinearizedPoly.monomial(t, 5, 0)   # 5 x^[0]
print("\ng o h =", (g * h).coeffs, "  h o g =", (h * g).coeffs)

# the evaluation homomorphism: (f o g)(x) = f(g(x)) for every x
fg = f * g
print("evaluation homomorphism holds:", all(fg(x) == f(g(x)) for x in t.elements()))

# kernels are F_q-subspaces; x^q - x cuts out exactly F_q
frob_minus_id = LinearizedPoly(t, (1, 1))  # x + x^2 in characteristic 2
print("\nkernel basis of x^q - x:", frob_minus_id.kernel_basis())

# the annihilator of a subspace: the monic product over all its elements
gens = [1, w]
ann = annihilator(t, gens)
print("annihilator of <1, w>:", ann)
print("vanishes exactly on the span:",
      sorted(x for x in t.elements() if ann(x) == 0) == sorted(t.fq_span(gens)))

# two routes to the same polynomial: composition chain vs literal expansion
print("composition route == literal product route:", ann == annihilator_product(t, gens))

# right division: f = quotient o d + remainder, exact
big = LinearizedPoly(t, (3, 7, 0, 1))
q, r = big.right_divmod(ann)
print("\ndivision check:", (q * ann + r) == big, " remainder degree:", r.deg_q)

# a polynomial vanishing on the span is a left multiple of the annihilator
multiple = LinearizedPoly(t, (9, 1)) * ann
print("vanishing polynomial has zero remainder:", multiple.right_divmod(ann)[1].is_zero)
