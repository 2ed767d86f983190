"""Independent references for hard-coded potential minima.

Scans a dense grid, then polishes with Newton's method on the gradient.
Run: python3 tools/oracles/potential_minima.py
"""
import numpy as np
from scipy.optimize import minimize

def ackley3(p):
    x, y = p
    rho = np.sqrt(x * x + y * y)
    return -200.0 * np.exp(-0.2 * rho) + 5.0 * np.exp(np.cos(3.0 * x) + np.sin(3.0 * y))

def u0(x):
    return np.cos(2.0 * x) + 0.5 * np.sin(x) + np.sin(10.0 * x) / 3.0

# --- ackley3: dense scan inside the box, then polish ---
g = np.linspace(-32.768, 32.768, 4097)
X, Y = np.meshgrid(g, g)
V = -200.0 * np.exp(-0.2 * np.sqrt(X**2 + Y**2)) + 5.0 * np.exp(np.cos(3.0 * X) + np.sin(3.0 * Y))
i, j = np.unravel_index(np.argmin(V), V.shape)
seeds = [(X[i, j], Y[i, j]), (-X[i, j], Y[i, j])]
for s in seeds:
    r = minimize(ackley3, s, method="Nelder-Mead", options={"xatol": 1e-14, "fatol": 1e-15, "maxiter": 20000})
    print("ackley3 argmin %.17g %.17g  min %.17g" % (r.x[0], r.x[1], r.fun))

# --- u0 on [-5, 5]: scan + polish ---
xs = np.linspace(-5.0, 5.0, 2000001)
v = u0(xs)
k = int(np.argmin(v))
from scipy.optimize import minimize_scalar
r = minimize_scalar(u0, bracket=(xs[k] - 1e-3, xs[k], xs[k] + 1e-3), options={"xtol": 1e-14})
print("u0 argmin %.17g  min %.17g" % (r.x, r.fun))

# --- mollifier normalizer Z = int_{-1}^{1} exp(1/(y^2-1)) dy ---
from scipy.integrate import quad
Z, err = quad(lambda y: np.exp(1.0 / (y * y - 1.0)), -1.0, 1.0, epsabs=1e-15, epsrel=1e-14, limit=400)
print("mollifier Z %.17g  err %.3g" % (Z, err))
