"""Independent reference values for the unit tests (mpmath, 30 digits).

Run: python3 tests/oracles/compute_oracles.py
Every number frozen into tests/*.cpp with an "oracle:" comment comes from here.
"""
import mpmath as mp

mp.mp.dps = 30


def hermite(xi, n_modes):
    h = [mp.mpf(1)]
    if n_modes > 1:
        h.append(mp.mpf(xi))
    for n in range(2, n_modes):
        h.append((xi * h[n - 1] - mp.sqrt(n - 1) * h[n - 2]) / mp.sqrt(n))
    return h[:n_modes]


def psi(alpha, v, n_modes):
    xi = alpha * v
    g = alpha * mp.exp(-xi * xi / 2) / mp.sqrt(2 * mp.pi)
    return [g * h for h in hermite(xi, n_modes)]


print("H_3(2) =", hermite(mp.mpf(2), 4)[3])
print("Psi_1(alpha=1, v=1) =", psi(1, mp.mpf(1), 2)[1])
print("Psi_0(1,1) =", psi(1, mp.mpf(1), 1)[0])
print("weight(1,1) =", mp.sqrt(2 * mp.pi) * mp.exp(mp.mpf(1) / 2))

# shifted Gaussian Hermite moments by brute-force quadrature over R
a = mp.mpf(1)
for n in range(6):
    val = mp.quad(lambda v: mp.exp(-(v - a) ** 2 / 2) / mp.sqrt(2 * mp.pi) * hermite(v, n + 1)[n], [-mp.inf, a, mp.inf])
    print("shifted gaussian g_%d = %s   a^n/sqrt(n!) = %s" % (n, mp.nstr(val, 20), mp.nstr(a ** n / mp.sqrt(mp.factorial(n)), 20)))

# exact alpha(t) for alpha' = -alpha^3/2, alpha0 = 1
print("alpha(0.1) exact =", (1 + mp.mpf("0.1")) ** mp.mpf(-0.5))
# one Shu-Osher RK3 step with dt = 0.1
f = lambda y: -y ** 3 / 2
dt = mp.mpf("0.1")
y0 = mp.mpf(1)
y1 = y0 + dt * f(y0)
y2 = mp.mpf(3) / 4 * y0 + mp.mpf(1) / 4 * (y1 + dt * f(y1))
y3 = mp.mpf(1) / 3 * y0 + mp.mpf(2) / 3 * (y2 + dt * f(y2))
print("alpha after one RK3 step =", y3, " error =", y3 - (1 + dt) ** mp.mpf(-0.5))
print("alpha0=1,gamma=1,t=3 ->", (1 + 3) ** mp.mpf(-0.5))

print("exp(-36) =", mp.exp(-36))
print("order 5.12e-4/1.05e-4 =", mp.log(mp.mpf("5.12e-4") / mp.mpf("1.05e-4"), 2))
print("order 1.68e-6/2.05e-7 =", mp.log(mp.mpf("1.68e-6") / mp.mpf("2.05e-7"), 2))

# Landau initial weighted norm with alpha0 = 0.5: int int f0^2 omega dx dv
L = 4 * mp.pi
delta = mp.mpf("0.01")
kx = mp.mpf("0.5")
alpha0 = mp.mpf("0.5")
ix = mp.quad(lambda x: (1 + delta * mp.cos(kx * x)) ** 2, [0, L])
iv = mp.quad(lambda v: (mp.exp(-v * v / 2) / mp.sqrt(2 * mp.pi)) ** 2 * mp.sqrt(2 * mp.pi) * mp.exp(alpha0 ** 2 * v * v / 2), [-mp.inf, mp.inf])
print("Landau alpha0=0.5 weighted norm^2 =", ix * iv)

# bump-on-tail first moment / mass
n_p, n_b, v_d = mp.mpf("0.9"), mp.mpf("0.1"), mp.mpf("4.5")
v_p, v_b = mp.sqrt(2), mp.sqrt(2) / 2
fb = lambda v: n_p / (mp.sqrt(mp.pi) * v_p) * mp.exp(-v * v / v_p ** 2) + n_b / (mp.sqrt(mp.pi) * v_b) * mp.exp(-(v - v_d) ** 2 / v_b ** 2)
m0 = mp.quad(fb, [-8, 0, 4.5, 8])
m1 = mp.quad(lambda v: v * fb(v), [-8, 0, 4.5, 8])
print("bump mass density on [-8,8] =", m0, " momentum/mass =", m1 / m0)

# Poisson: C0 = 1 + 0.5 cos(2 pi x/L) + 0.25 sin(4 pi x/L) on L = 3, zero-mean E
Lp = mp.mpf(3)
E = lambda x: 0.5 * Lp / (2 * mp.pi) * mp.sin(2 * mp.pi * x / Lp) - 0.25 * Lp / (4 * mp.pi) * mp.cos(4 * mp.pi * x / Lp)
print("Poisson mixed example E(0.7) =", E(mp.mpf("0.7")), " mean =", mp.quad(E, [0, Lp]) / Lp)
