"""High-precision refinement of the frozen minima (mpmath, 40 digits)."""
from mpmath import mp, mpf, cos, sin, exp, sqrt, findroot, quad

mp.dps = 40

# ackley3 restricted to the symmetry axis x1 = 0, y < 0:
#   U(y) = -200 exp(0.2 y) + 5 exp(1 + sin 3y)
dU = lambda y: -40 * exp(mpf("0.2") * y) + 15 * cos(3 * y) * exp(1 + sin(3 * y))
y = findroot(dU, mpf("-0.00677"))
Uy = -200 * exp(mpf("0.2") * y) + 5 * exp(1 + sin(3 * y))
print("ackley3 argmin y =", mp.nstr(y, 25))
print("ackley3 min     =", mp.nstr(Uy, 25))

# u0(x) = cos 2x + sin(x)/2 + sin(10x)/3 near 4.8509
du = lambda x: -2 * sin(2 * x) + cos(x) / 2 + mpf(10) / 3 * cos(10 * x)
x = findroot(du, mpf("4.85088"))
ux = cos(2 * x) + sin(x) / 2 + sin(10 * x) / 3
print("u0 argmin x =", mp.nstr(x, 25))
print("u0 min      =", mp.nstr(ux, 25))

# mollifier normalizer
Z = quad(lambda t: exp(1 / (t * t - 1)), [-1, 1])
print("Z =", mp.nstr(Z, 25))
