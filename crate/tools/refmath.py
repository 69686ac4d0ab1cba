"""Shared high-precision reference implementations (mpmath) for the
functional-equation symbol set, used by oracle_check.py (identity
verification) and gen_golden.py (golden-data generation).

Conventions:
  * s = sigma + i*rho with rho > 0.
  * "tilde" quantities are evaluated at the reflected point 1 - sigma + i*rho.
  * Primed components stored in bundles are d/ds derivatives evaluated at the
    point in question; rho-derivatives of moduli/angles are formed separately
    (d/drho = i * d/ds).
  * theta(s) is the continuous imaginary part of LogGamma (mpmath's loggamma
    branch, continuous for Re s > 0 in the upper half plane).
"""

import mpmath as mp


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------

def spoint(sigma, rho):
    return mp.mpc(sigma, rho)


def reflect(s):
    return mp.mpc(1 - mp.re(s), mp.im(s))


def theta_cont(s):
    return mp.im(mp.loggamma(s))


def zeta_jet(s):
    """(zeta, dzeta/ds, d2zeta/ds2) at s."""
    return (mp.zeta(s), mp.zeta(s, derivative=1), mp.zeta(s, derivative=2))


def chi(s):
    return 2 * mp.cos(mp.pi * s / 2) * mp.gamma(s) * (2 * mp.pi) ** (-s)


def f_s(s):
    """Plane form: ln(2 pi) - psi(s) + (pi/2) tan(pi s / 2)."""
    return mp.log(2 * mp.pi) - mp.digamma(s) + mp.pi / 2 * mp.tan(mp.pi * s / 2)


def f_rho(rho):
    """Critical-line form: 4 cosh(pi rho) / (2 ln(2pi) cosh - 2 Re psi cosh + pi)."""
    ch = mp.cosh(mp.pi * rho)
    psr = mp.re(mp.digamma(mp.mpc(0.5, rho)))
    return 4 * ch / (2 * mp.log(2 * mp.pi) * ch - 2 * psr * ch + mp.pi)


def f_rho_d1(rho):
    """d f_rho / d rho via the E-form f = 4/E."""
    E = 2 * mp.log(2 * mp.pi) - 2 * mp.re(mp.digamma(mp.mpc(0.5, rho))) \
        + mp.pi / mp.cosh(mp.pi * rho)
    # d/drho Re psi(1/2 + i rho) = -Im psi'(1/2 + i rho)
    Ep = 2 * mp.im(mp.psi(1, mp.mpc(0.5, rho))) \
        - mp.pi ** 2 * mp.tanh(mp.pi * rho) / mp.cosh(mp.pi * rho)
    return -4 * Ep / E ** 2


# ---------------------------------------------------------------------------
# appendix symbol set
# ---------------------------------------------------------------------------

class Symbols:
    def __init__(self, s):
        sigma, rho = mp.re(s), mp.im(s)
        self.s = s
        self.sigma, self.rho = sigma, rho
        pi = mp.pi
        self.c0 = (mp.cos(pi * sigma) + mp.cosh(pi * rho)) / 2
        self.rho_pi = rho * mp.log(2 * pi)
        self.theta = theta_cont(s)
        self.theta_tilde = theta_cont(reflect(s))
        self.rho_theta = self.rho_pi - self.theta
        g = mp.gamma(s)
        self.gamma_val = g
        self.gamma_abs = abs(g)
        self.gamma_R, self.gamma_I = mp.re(g), mp.im(g)
        self.S1 = mp.sin(self.rho_pi) * mp.cos(pi * sigma / 2) * mp.cosh(pi * rho / 2) \
            + mp.cos(self.rho_pi) * mp.sin(pi * sigma / 2) * mp.sinh(pi * rho / 2)
        self.S2 = mp.sin(self.rho_pi) * mp.sin(pi * sigma / 2) * mp.sinh(pi * rho / 2) \
            - mp.cos(self.rho_pi) * mp.cos(pi * sigma / 2) * mp.cosh(pi * rho / 2)
        self.g1 = 4 * self.gamma_I * self.S2 + 4 * self.gamma_R * self.S1
        self.g2 = 4 * self.gamma_I * self.S1 - 4 * self.gamma_R * self.S2
        ps = mp.digamma(s)
        self.psi_val = ps
        self.Psi1 = mp.im(ps)
        self.Psi2 = -2 * mp.log(2 * pi) + 2 * mp.re(ps)
        self.p1 = 8 * self.c0 * self.Psi1 - 2 * pi * mp.sinh(pi * rho)
        self.p2 = 4 * self.c0 * self.Psi2 - 2 * pi * mp.sin(pi * sigma)
        self.q1 = -self.Psi2 + pi / 2 * mp.sin(pi * sigma) / self.c0
        self.q2 = 2 * self.Psi1 - pi / 2 * mp.sinh(pi * rho) / self.c0
        self.h1 = -self.g1 * self.p1 + self.g2 * self.p2
        self.h2 = self.g1 * self.p2 + self.g2 * self.p1
        self.h3 = -self.g1 * self.p2 + self.g2 * self.p1
        self.h4 = self.g1 * self.p1 + self.g2 * self.p2
        self.a = mp.sqrt(2) * self.g1 / (8 * mp.sqrt(pi))
        self.b = mp.sqrt(2) * self.g2 / (8 * mp.sqrt(pi))
        self.pi_sigma = (2 * pi) ** sigma
        self.chi = chi(s)
        self.f_s = f_s(s)
        self.f_rho = f_rho(rho)
        self.Phi = (2 * pi) ** (2 * sigma) / (2 * (mp.cos(pi * sigma) + mp.cosh(pi * rho)) * self.gamma_abs ** 2)


class Bundle:
    """zeta/zeta'/zeta'' components at s and the reflected point (d/ds primes)."""

    def __init__(self, s):
        self.s = s
        z, d, d2 = zeta_jet(s)
        tz, td, td2 = zeta_jet(reflect(s))
        self.z, self.d, self.d2 = z, d, d2
        self.tz, self.td, self.td2 = tz, td, td2
        self.zr, self.zi = mp.re(z), mp.im(z)
        self.z1r, self.z1i = mp.re(d), mp.im(d)
        self.z2r, self.z2i = mp.re(d2), mp.im(d2)
        self.tzr, self.tzi = mp.re(tz), mp.im(tz)
        self.tz1r, self.tz1i = mp.re(td), mp.im(td)
        self.tz2r, self.tz2i = mp.re(td2), mp.im(td2)
        self.zeta_p = None  # filled by attach() (needs g1/g2)

    def attach(self, sym):
        self.zeta_p = self.zi * sym.g1 + self.zr * sym.g2
        self.zeta_m = self.zi * sym.g2 - self.zr * sym.g1
        self.zeta_d = ((-8 * sym.Psi1 * sym.c0 + 2 * mp.pi * mp.sinh(mp.pi * sym.rho)) * self.z1i
                       + (-4 * sym.c0 * sym.Psi2 + 2 * mp.pi * mp.sin(mp.pi * sym.sigma)) * self.z1r) \
            * (2 * mp.pi) ** sym.sigma
        return self


def sym_bundle(sigma, rho):
    s = spoint(sigma, rho)
    sym = Symbols(s)
    b = Bundle(s).attach(sym)
    return sym, b


# ---------------------------------------------------------------------------
# pointwise polar helpers (directions from component ratios; no tracking)
# ---------------------------------------------------------------------------

def unit(zv):
    return zv / abs(zv)


def cos_sin_diff(u, v):
    """cos and sin of (arg u - arg v) from direction vectors."""
    w = unit(u) * mp.conj(unit(v))
    return mp.re(w), mp.im(w)


# ---------------------------------------------------------------------------
# critical-line tracked angles (simple fine-step unwrap for validation)
# ---------------------------------------------------------------------------

def track_angle(values_fn, rho_start, rho_end, step, anchor_plus_pi=True,
                jump_minus_pi=True):
    """Unwrap arg(values_fn(rho)) from rho_start to rho_end.

    Returns (rhos, angles, jumps) where jumps is a list of (rho, multiple_of_pi).
    Anchor: principal value at rho_start, shifted by +2pi when <= -pi/2 so the
    locus starting just below the negative real axis anchors near +pi.
    Jumps (increments exceeding pi/2 at the base step that persist at fine
    steps, i.e. zero crossings) are classified as odd multiples of -pi.
    """
    rhos, angles, jumps = [], [], []
    r = rho_start
    v = values_fn(r)
    ang = mp.arg(v)
    if anchor_plus_pi and ang <= -mp.pi / 2:
        ang += 2 * mp.pi
    prev_principal = mp.arg(v)
    rhos.append(r)
    angles.append(ang)
    while r < rho_end:
        h = min(step, rho_end - r)
        rn = r + h
        pn = mp.arg(values_fn(rn))
        inc = pn - prev_principal
        while inc > mp.pi:
            inc -= 2 * mp.pi
        while inc <= -mp.pi:
            inc += 2 * mp.pi
        if abs(inc) > mp.pi / 2 and h > 1e-6:
            # refine; a persistent ~pi increment marks a zero crossing
            step_fine = h / 16
            sub_r = r
            sub_prev = prev_principal
            sub_ang = ang
            while sub_r < rn - 1e-15:
                hh = min(step_fine, rn - sub_r)
                sr = sub_r + hh
                sp = mp.arg(values_fn(sr))
                sinc = sp - sub_prev
                while sinc > mp.pi:
                    sinc -= 2 * mp.pi
                while sinc <= -mp.pi:
                    sinc += 2 * mp.pi
                if abs(sinc) > mp.pi / 2:
                    m = int(mp.nint(abs(sinc) / mp.pi))
                    if m % 2 == 0:
                        m += 1
                    jump = (-m * mp.pi) if jump_minus_pi else (m * mp.pi)
                    smooth = sinc - mp.sign(sinc) * m * mp.pi
                    sub_ang = sub_ang + jump + smooth
                    jumps.append((sr, -m if jump_minus_pi else m))
                else:
                    sub_ang = sub_ang + sinc
                sub_prev = sp
                sub_r = sr
            ang = sub_ang
            prev_principal = sub_prev
        else:
            ang = ang + inc
            prev_principal = pn
        r = rn
        rhos.append(r)
        angles.append(ang)
    return rhos, angles, jumps
