"""Reduced binary quadratic forms of discriminant -840.

Walks the classical reduction theory: a form is reduced when |b| <= a <= c
with the boundary tie rules, every positive definite form is properly
equivalent to exactly one reduced form, and scanning a <= sqrt(|D|/3) finds
them all.  The eight diagonal forms of discriminant -840 are the backbone of
everything else in this package.
"""

from singmod import qforms
from singmod.qforms import GLMatrix, QuadForm

print("All reduced forms of discriminant -840:")
forms = qforms.reduced_forms(-840)
for i, F in enumerate(forms, 1):
    print(f"  {i}. {F}")
print(f"class number h(-840) = {qforms.class_number(-840)}")

print()
print("Reduction with a unimodular witness:")
G = QuadForm(5266, -8424, 3369)
red, g = qforms.reduce_form(G)
print(f"  {G}")
print(f"  reduces to {red} via (r,s;t,u) = ({g.r},{g.s};{g.t},{g.u}), det {g.det}")
print(f"  check: applying the witness gives {qforms.apply(g, G)}")

print()
print("The same matrix sends the principal form the other way:")
F = QuadForm(1, 0, 210)
h = GLMatrix(4, -5, -3, 4)
print(f"  {F} -> {qforms.apply(h, F)}")

print()
print("Representation counts: 6X^2 + 35Y^2 = 1769")
count = qforms.representation_count(QuadForm(6, 0, 35), 1769)
dirichlet = qforms.total_representations(210, 1769)
print(f"  brute force finds {count} integer solutions")
print(f"  2 * sum of (-210/d) over divisors of 1769 gives {dirichlet}")

print()
print("Every class pairs with its homologue AX^2 + 2CY^2 <-> 2AX^2 + CY^2:")
for Q, Qp in qforms.homologue_pairs(forms):
    print(f"  {Q}   <->   {Qp}")
