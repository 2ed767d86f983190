"""References for the modified potential H and the Gibbs tail masses.

H(x) = int_{u_min}^{U(x)} du/(f((u-c)+)+eps) + ln(f((U(x)-c)+)+eps), f = arctan.
Tail masses drive the concentration-slope check: ln(tail) vs 1/eps.
"""
import numpy as np
from scipy.integrate import quad

U_MIN = -1.7846887640636606

def u0(x):
    return np.cos(2.0 * x) + 0.5 * np.sin(x) + np.sin(10.0 * x) / 3.0

def f_arctan(u):
    return np.arctan(u) if u > 0 else 0.0

def h_eval(x, c, eps):
    ux = u0(x)
    g = lambda u: 1.0 / (f_arctan(max(u - c, 0.0)) + eps)
    lo, hi = U_MIN, ux
    val, _ = quad(g, lo, hi, epsabs=1e-13, limit=500, points=[c] if lo < c < hi else None)
    return val + np.log(f_arctan(max(ux - c, 0.0)) + eps)

# frozen example: U0, arctan scale 1, c=-1.5, eps=0.5, x=-3
print("h(-3; c=-1.5, eps=0.5) = %.15g" % h_eval(-3.0, -1.5, 0.5))
print("u0(-3) = %.17g" % u0(-3.0))

# tail masses over [-5,5]: P(U > U_min + 0.3) under mu ∝ e^{-H}
for eps in (0.5, 0.25, 0.125):
    thr = U_MIN + 0.3
    dens = lambda x: np.exp(-(h_eval(x, -1.5, eps) - h_eval(4.850883394256309, -1.5, eps)))
    Ztot, _ = quad(dens, -5, 5, epsabs=1e-12, limit=2000)
    tail, _ = quad(lambda x: dens(x) * (u0(x) > thr), -5, 5, epsabs=1e-12, limit=2000)
    t = tail / Ztot
    print("eps=%5.3f  tail=%.10g  ln tail=%.6g" % (eps, t, np.log(t)))
