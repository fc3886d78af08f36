"""
Exact bivariate polynomial arithmetic
=====================================

"""

from fractions import Fraction

from bivorder import BiPoly, X, Y, binom_poly

# polynomials are built from the generators with ordinary operators
p = Fraction(1, 2) * (X**2 - X - Y**2 + Y)
print("p        =", p.text())
print("p(3, 1)  =", p.evaluate(3, 1))
print("p(-3,-1) =", p.evaluate(-3, -1))

# all coefficients stay exact rationals, no floats anywhere
q = p * (X + Y) - p
print("q        =", q.text())
print("degrees  =", q.deg_x, q.deg_y)

# negating both arguments and shifting y are the two moves used by
# the reciprocity checks
print("p(-x,-y) =", p.negate_args().text())
print("p(x,y+1) =", p.shift_y(1).text())

# generalized binomial coefficient, polynomial in its affine argument
b = binom_poly(X - Y + 1, 2)
print("binom    =", b.text())
print("at (5,2) =", b.evaluate(5, 2))  # C(4, 2) = 6

# serialization keeps exact numerators and denominators as strings
blob = p.to_json()
print("json     =", blob)
assert BiPoly.from_json(blob) == p
