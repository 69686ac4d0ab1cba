#!/usr/bin/env python3
"""High-precision verification of every identity in the registry, plus the
zero-condition set, the constructed-counterexample properties, and the
argument-tracking conventions, before anything is frozen into the engine.

Run:  python3 tools/oracle_check.py
Exit status 0 when all checks pass (known-variant probes report informative
lines but do not fail the run).
"""

import sys
import mpmath as mp

sys.path.insert(0, "tools")
from refmath import (  # noqa: E402
    Bundle, Symbols, chi, f_rho, f_rho_d1, f_s, reflect, spoint,
    sym_bundle, theta_cont, track_angle, unit,
)

mp.mp.dps = 40

RESULTS = []


def check(name, residual, tol=mp.mpf("1e-25"), note=""):
    res = abs(residual)
    ok = res < tol
    RESULTS.append((name, res, tol, ok, note))
    flag = "OK " if ok else "BAD"
    print(f"{flag} {name:<34} res={mp.nstr(res, 4):<12} tol={mp.nstr(mp.mpf(tol), 2)} {note}")
    return ok


def info(name, value, note=""):
    print(f"--  {name:<34} {mp.nstr(value, 20) if isinstance(value, (mp.mpf, mp.mpc)) else value} {note}")


def rel(lhs, rhs):
    scale = max(abs(lhs), abs(rhs), mp.mpf("1e-300"))
    return abs(lhs - rhs) / scale


# ---------------------------------------------------------------------------
# test points
# ---------------------------------------------------------------------------
PLANE_PTS = [(mp.mpf("0.3"), mp.mpf(8)), (mp.mpf("0.7"), mp.mpf("13.7")),
             (mp.mpf("0.1"), mp.mpf("2.2")), (mp.mpf("0.9"), mp.mpf(33)),
             (mp.mpf("0.25"), mp.mpf("4.6"))]
CL_PTS = [mp.mpf(2), mp.mpf(10), mp.mpf(33)]


def plane_max(fn):
    """Max residual of fn(sym, bundle) over the plane points."""
    worst = mp.mpf(0)
    for sg, rh in PLANE_PTS:
        sym, b = sym_bundle(sg, rh)
        worst = max(worst, abs(fn(sym, b)))
    return worst


def cl_max(fn, rhos=None):
    worst = mp.mpf(0)
    for rh in (rhos or CL_PTS):
        sym, b = sym_bundle(mp.mpf("0.5"), rh)
        worst = max(worst, abs(fn(sym, b)))
    return worst


# ===========================================================================
print("=" * 78)
print("SECTION A: structural relations (internal consistency of the symbol set)")
print("=" * 78)

# G = chi(conj(s)); reflected value relation tz = G * conj(z)
def a_refl(sym, b):
    G = (sym.g2 + 1j * sym.g1) / (2 * sym.pi_sigma)
    return abs(G - chi(mp.conj(sym.s))) + abs(b.tz - G * mp.conj(b.z))
check("A.reflection-multiplier", plane_max(a_refl))

# p2 + i p1 = -8 c0 f(s)
check("A.p-vs-f", plane_max(lambda sym, b: rel(sym.p2 + 1j * sym.p1, -8 * sym.c0 * sym.f_s)))

# h1 + i h2 = (p2 + i p1)(g2 + i g1);  h3 + i h4 = (p1 + i p2)(g2 + i g1)
check("A.h12-combo", plane_max(lambda sym, b: rel(sym.h1 + 1j * sym.h2, (sym.p2 + 1j * sym.p1) * (sym.g2 + 1j * sym.g1))))
check("A.h34-combo", plane_max(lambda sym, b: rel(sym.h3 + 1j * sym.h4, (sym.p1 + 1j * sym.p2) * (sym.g2 + 1j * sym.g1))))

# g1^2 + g2^2 = 16 |Gamma|^2 c0
check("A.g-norm", plane_max(lambda sym, b: rel(sym.g1 ** 2 + sym.g2 ** 2, 16 * sym.gamma_abs ** 2 * sym.c0)))

# h1^2 + h2^2 = (g1^2 + g2^2)(p1^2 + p2^2)
check("A.h-norm", plane_max(lambda sym, b: rel(sym.h1 ** 2 + sym.h2 ** 2, (sym.g1 ** 2 + sym.g2 ** 2) * (sym.p1 ** 2 + sym.p2 ** 2))))

# q1 = -p2/(4 c0), q2 = p1/(4 c0)
check("A.q-vs-p", plane_max(lambda sym, b: abs(sym.q1 + sym.p2 / (4 * sym.c0)) + abs(sym.q2 - sym.p1 / (4 * sym.c0))))

# f(s) = -chi'/chi  (derivative via mp.diff)
def a_fchi(sym, b):
    d = mp.diff(chi, sym.s)
    return rel(sym.f_s, -d / sym.chi)
check("A.f-log-deriv", plane_max(a_fchi), mp.mpf("1e-20"))

# critical line: f(s) real and equal to 2/f_rho; |G| = 1
def a_fcl(sym, b):
    return abs(mp.im(sym.f_s)) + abs(mp.re(sym.f_s) - 2 / sym.f_rho)
check("A.f-critical-line", cl_max(a_fcl))

# tan(pi s/2) component forms: T_R = sin(pi sigma)/(2 c0), T_I = sinh(pi rho)/(2 c0)
def a_tan(sym, b):
    t = mp.tan(mp.pi * sym.s / 2)
    return abs(mp.re(t) - mp.sin(mp.pi * sym.sigma) / (2 * sym.c0)) \
        + abs(mp.im(t) - mp.sinh(mp.pi * sym.rho) / (2 * sym.c0))
check("A.tan-components", plane_max(a_tan))

# (2 pi)^(i rho) cos(pi conj(s)/2) = -S2 + i S1
def a_s12(sym, b):
    lhs = mp.power(2 * mp.pi, 1j * sym.rho) * mp.cos(mp.pi * mp.conj(sym.s) / 2)
    return rel(lhs, -sym.S2 + 1j * sym.S1)
check("A.S12-combo", plane_max(a_s12))

# Phi = 1/|G|^2
def a_phi(sym, b):
    G = (sym.g2 + 1j * sym.g1) / (2 * sym.pi_sigma)
    return rel(sym.Phi, 1 / abs(G) ** 2)
check("A.phi-vs-G", plane_max(a_phi))

# derivative reflection: td = G*(conj(f_s)*conj(z) - conj(d))
def a_dref(sym, b):
    G = (sym.g2 + 1j * sym.g1) / (2 * sym.pi_sigma)
    fbar = f_s(mp.conj(sym.s))
    return abs(b.td - G * (fbar * mp.conj(b.z) - mp.conj(b.d)))
check("A.derivative-reflection", plane_max(a_dref))

# ===========================================================================
print("=" * 78)
print("SECTION B: plane identities (registry ids)")
print("=" * 78)

def fe_comp(sym, b):
    two_ps = 2 * sym.pi_sigma
    r1 = rel(b.tzr, (sym.g2 * b.zr + sym.g1 * b.zi) / two_ps)
    r2 = rel(b.tzi, (sym.g1 * b.zr - sym.g2 * b.zi) / two_ps)
    r3 = rel(b.tzr, b.zeta_p / two_ps)
    r4 = rel(b.tzi, -b.zeta_m / two_ps)
    return max(r1, r2, r3, r4)
check("FE-COMP", plane_max(fe_comp))

def fe_inv(sym, b):
    den = sym.gamma_abs ** 2 * sym.c0
    r1 = rel(b.zr, sym.pi_sigma * (b.tzi * sym.g1 + b.tzr * sym.g2) / (8 * den))
    r2 = rel(b.zi, -sym.pi_sigma * (b.tzi * sym.g2 - b.tzr * sym.g1) / (8 * den))
    return max(r1, r2)
check("FE-INV", plane_max(fe_inv))

def arg_fe(sym, b):
    sa, ca = b.zi / abs(b.z), b.zr / abs(b.z)
    sat, cat = b.tzi / abs(b.tz), b.tzr / abs(b.tz)
    gn = mp.hypot(sym.g1, sym.g2)
    return sat * (sa * sym.g1 + ca * sym.g2) / gn + cat * (sa * sym.g2 - ca * sym.g1) / gn
check("ARG-FE", plane_max(arg_fe))

check("MAG-RATIO", plane_max(lambda sym, b: rel(abs(b.z) ** 2 / abs(b.tz) ** 2, sym.Phi)))

def variant(sym, b):
    zp_at_1ms = mp.conj(b.td)           # zeta'(1-s): 1-s = conj(reflected point)
    z_at_1ms = mp.conj(b.tz)
    lhs = zp_at_1ms / b.d + sym.chi
    rhs = sym.f_s * z_at_1ms / b.d
    return rel(lhs, rhs)
check("VARIANT", plane_max(variant))

def xline(sym, b):
    Sg = sym.p1 ** 2 + sym.p2 ** 2
    ps = sym.pi_sigma
    lhs_r = -(4 * sym.c0 / Sg) * ((sym.h2 * b.z1i + sym.h1 * b.z1r) / ps
                                  - 2 * (b.tz1i * sym.p1 - b.tz1r * sym.p2))
    lhs_i = (4 * sym.c0 / Sg) * ((sym.h1 * b.z1i - sym.h2 * b.z1r) / ps
                                 - 2 * (b.tz1i * sym.p2 + b.tz1r * sym.p1))
    return max(rel(b.tzr, lhs_r), rel(b.tzi, lhs_i))
check("XLINE-R/I", plane_max(xline))

def dinv(sym, b):
    K = sym.pi_sigma / (64 * sym.gamma_abs ** 2 * sym.c0 ** 2)
    rr = -K * (8 * sym.c0 * (b.tz1i * sym.g1 + b.tz1r * sym.g2) + sym.h2 * b.tzi + sym.h1 * b.tzr)
    ii = K * (8 * sym.c0 * (b.tz1i * sym.g2 - b.tz1r * sym.g1) - sym.h2 * b.tzr + sym.h1 * b.tzi)
    return max(rel(b.z1r, rr), rel(b.z1i, ii))
check("DINV-R/I", plane_max(dinv))

def dfwd(sym, b):
    two_ps = 2 * sym.pi_sigma
    rr = -(sym.g1 * b.z1i + b.z1r * sym.g2) / two_ps \
        + (sym.h3 * b.zi - sym.h4 * b.zr) / (16 * sym.pi_sigma * sym.c0)
    ii = (sym.g2 * b.z1i - sym.g1 * b.z1r) / two_ps \
        + (sym.h4 * b.zi + sym.h3 * b.zr) / (16 * sym.pi_sigma * sym.c0)
    return max(rel(b.tz1r, rr), rel(b.tz1i, ii))
check("DFWD-R/I", plane_max(dfwd))

def dmag(sym, b):
    rhs = (sym.pi_sigma / sym.g1) * ((b.z1i * b.tzr + b.z1r * b.tzi) * sym.q1
                                     + (-b.z1i * b.tzi + b.z1r * b.tzr) * sym.q2
                                     - 2 * b.z1i * b.tz1r - 2 * b.z1r * b.tz1i)
    return rel(abs(b.d) ** 2, rhs)
check("DMAG", plane_max(dmag))

def arg_polar(sym, b):
    sa, ca = b.zi / abs(b.z), b.zr / abs(b.z)
    sat, cat = b.tzi / abs(b.tz), b.tzr / abs(b.tz)
    u = mp.e ** (-mp.pi * sym.rho)
    X1 = mp.pi * sym.sigma / 2 + sym.rho_theta      # ( pi sigma/2 - alpha + rho_theta) + alpha
    X2 = -mp.pi * sym.sigma / 2 + sym.rho_theta
    # sin(X - alpha) = sinX cosA - cosX sinA  etc.
    num = u * (mp.sin(X2) * ca - mp.cos(X2) * sa) + (mp.sin(X1) * ca - mp.cos(X1) * sa)
    den = (mp.cos(X1) * ca + mp.sin(X1) * sa) + u * (mp.cos(X2) * ca + mp.sin(X2) * sa)
    r = sat * den - cat * num
    return r / mp.hypot(num, den)
check("ARG-POLAR", plane_max(arg_polar))

def tanb(sym, b):
    tb = b.z1i / b.z1r
    tbt = b.tz1i / b.tz1r
    tat = b.tzi / b.tzr
    zr_t = b.tz1r / b.tzr
    num = 8 * zr_t * sym.c0 * (tbt * sym.g2 - sym.g1) + sym.h1 * tat - sym.h2
    den = 8 * zr_t * sym.c0 * (tbt * sym.g1 + sym.g2) + sym.h2 * tat + sym.h1
    return rel(tb, -num / den)
check("TANB", plane_max(tanb), mp.mpf("1e-20"))

def tanb_inv(sym, b):
    tb = b.z1i / b.z1r
    tbt = b.tz1i / b.tz1r
    ta = b.zi / b.zr
    zr_r = b.z1r / b.zr
    num = 8 * sym.c0 * zr_r * (tb * sym.g2 - sym.g1) + ta * sym.h4 + sym.h3
    den = 8 * sym.c0 * zr_r * (tb * sym.g1 + sym.g2) - ta * sym.h3 + sym.h4
    return rel(tbt, -num / den)
check("TANB-INV", plane_max(tanb_inv), mp.mpf("1e-20"))

def rlog_tilde(sym, b):
    tat = b.tzi / b.tzr
    tb = b.z1i / b.z1r
    tbt = b.tz1i / b.tz1r
    num = (-tat - tb) * sym.h1 + (-tat * tb + 1) * sym.h2
    den = 8 * sym.c0 * ((tbt * tb - 1) * sym.g1 + (tbt + tb) * sym.g2)
    return rel(b.tz1r / b.tzr, num / den)
check("RLOG-TILDE", plane_max(rlog_tilde), mp.mpf("1e-20"))

def rlog(sym, b):
    ta = b.zi / b.zr
    tb = b.z1i / b.z1r
    tbt = b.tz1i / b.tz1r
    num = (ta * sym.h3 - sym.h4) * tbt - ta * sym.h4 - sym.h3
    den = 8 * sym.c0 * ((tbt * sym.g1 + sym.g2) * tb + sym.g2 * tbt - sym.g1)
    return rel(b.z1r / b.zr, num / den)
check("RLOG", plane_max(rlog), mp.mpf("1e-20"))

def argsum_prod(sym, b):
    lhs = b.z1i * b.zi + b.z1r * b.zr
    rhs = -(b.tz1i * b.tzi + b.tz1r * b.tzr) * sym.Phi - sym.p2 * abs(b.z) ** 2 / (8 * sym.c0)
    return rel(lhs, rhs)
check("ARGSUM-PROD", plane_max(argsum_prod))

def argsum_sym(sym, b):
    lhs = (b.tz1i * b.tzi + b.tz1r * b.tzr) / abs(b.tz) ** 2 \
        + (b.z1i * b.zi + b.z1r * b.zr) / abs(b.z) ** 2
    rhs = -(2 * sym.Psi2 * sym.c0 - mp.pi * mp.sin(mp.pi * sym.sigma)) / (4 * sym.c0)
    return rel(lhs, rhs)
check("ARGSUM-SYM", plane_max(argsum_sym))

def gamma_ident(sym, b):
    half = mp.pi * sym.sigma / 2
    t1 = sym.theta - mp.atan(mp.tan(half) * mp.tanh(mp.pi * sym.rho / 2)) - sym.rho_pi
    gn = mp.hypot(sym.g1, sym.g2)
    r1 = mp.sin(t1) * sym.g2 / gn + mp.cos(t1) * sym.g1 / gn
    Mn = mp.sin(half) * mp.cos(sym.rho_theta) * mp.sinh(mp.pi * sym.rho / 2) \
        + mp.cos(half) * mp.sin(sym.rho_theta) * mp.cosh(mp.pi * sym.rho / 2)
    Md = mp.sin(half) * mp.sin(sym.rho_theta) * mp.sinh(mp.pi * sym.rho / 2) \
        - mp.cos(half) * mp.cos(sym.rho_theta) * mp.cosh(mp.pi * sym.rho / 2)
    r2 = (Mn * sym.g2 + Md * sym.g1) / (mp.hypot(Mn, Md) * gn / mp.hypot(sym.g1, sym.g2))
    # integer-k bookkeeping
    kval = (t1 - mp.atan(Mn / Md)) / mp.pi
    r3 = abs(kval - mp.nint(kval))
    return max(abs(r1), abs(r2) / gn, r3)
check("GAMMA-IDENT", plane_max(gamma_ident), mp.mpf("1e-22"))

def intpsi(sym, b):
    q = mp.quad(lambda t: mp.re(mp.digamma(mp.mpc(sym.sigma, t))), [0, sym.rho])
    return rel(q, sym.theta)
check("INTPSI", plane_max(intpsi), mp.mpf("1e-22"))

def lgamma_refl(sym, b):
    d = sym.theta - sym.theta_tilde
    return mp.sin(d) * mp.sin(mp.pi * sym.sigma) \
        + mp.cos(d) * mp.tanh(mp.pi * sym.rho) * mp.cos(mp.pi * sym.sigma)
check("LGAMMA-REFL", plane_max(lgamma_refl))

def cos_theta(sym, b):
    d = sym.theta - sym.theta_tilde
    rhs = mp.sin(mp.pi * sym.sigma) / (abs(mp.cos(mp.pi * sym.sigma))
                                       * mp.sqrt(mp.tan(mp.pi * sym.sigma) ** 2 + mp.tanh(mp.pi * sym.rho) ** 2))
    return rel(mp.cos(d), rhs)
check("COS-THETA", plane_max(cos_theta))

def psi_im(sym, b):
    lhs = mp.im(mp.digamma(sym.s) + mp.digamma(reflect(sym.s)))
    rhs = mp.pi * mp.sinh(2 * mp.pi * sym.rho) / (mp.cosh(2 * mp.pi * sym.rho) - mp.cos(2 * mp.pi * sym.sigma))
    return rel(lhs, rhs)
check("PSI-IM", plane_max(psi_im))

def psi_re(sym, b):
    # arranged with one psi value per side so the comparison is between
    # like-sized quantities (the raw difference cancels to ~pi/cosh(2 pi rho))
    lhs = mp.re(mp.digamma(sym.s)) \
        + mp.pi * mp.sin(2 * mp.pi * sym.sigma) / (mp.cosh(2 * mp.pi * sym.rho) - mp.cos(2 * mp.pi * sym.sigma))
    rhs = mp.re(mp.digamma(reflect(sym.s)))
    return rel(lhs, rhs)
check("PSI-RE", plane_max(psi_re))

def fe_raw_r(kappa):
    def inner(sym, b):
        pi = mp.pi
        num = ((-4 * sym.Psi1 * b.z1r + kappa * b.z1i * sym.Psi2) * b.zeta_m
               + 8 * (-b.z1i * b.tz1i + b.z1r * b.tz1r) * sym.pi_sigma
               + 4 * sym.g2 * abs(b.d) ** 2) * sym.c0 \
            + (mp.sinh(pi * sym.rho) * b.z1r - mp.sin(pi * sym.sigma) * b.z1i) * pi * b.zeta_m
        return rel(b.tzr, num / b.zeta_d)
    return inner
ok1 = check("FE-RAW-R[coeff 1, printed]", plane_max(fe_raw_r(1)), mp.mpf("1e-20"),
            note="(variant probe)")
ok2 = check("FE-RAW-R[coeff 2]", plane_max(fe_raw_r(2)), mp.mpf("1e-20"))

def fe_raw_i(sym, b):
    pi = mp.pi
    num = ((4 * sym.Psi1 * b.z1r - 2 * b.z1i * sym.Psi2) * b.zeta_p
           - 8 * (b.z1i * b.tz1r + b.z1r * b.tz1i) * sym.pi_sigma
           - 4 * sym.g1 * abs(b.d) ** 2) * sym.c0 \
        - (mp.sinh(pi * sym.rho) * b.z1r - mp.sin(pi * sym.sigma) * b.z1i) * pi * b.zeta_p
    return rel(b.tzi, -num / b.zeta_d)
check("FE-RAW-I", plane_max(fe_raw_i), mp.mpf("1e-20"))

def g_polar(sym, b):
    # polar rewrite of g1/g2; the angle enters as theta - rho ln(2 pi), i.e.
    # -rho_theta under our (and the notation table's) sign for rho_theta
    pi = mp.pi
    half = pi * sym.sigma / 2
    hh = pi * sym.rho / 2
    g1a = 4 * sym.gamma_abs * (mp.sin(half) * mp.cos(sym.rho_theta) * mp.sinh(hh)
                               + mp.cos(half) * mp.sin(sym.rho_theta) * mp.cosh(hh))
    g1b = 2 * sym.gamma_abs * (mp.sin(half + sym.rho_theta) * mp.e ** hh
                               - mp.sin(half - sym.rho_theta) * mp.e ** (-hh))
    g2a = 4 * sym.gamma_abs * (-mp.sin(half) * mp.sin(sym.rho_theta) * mp.sinh(hh)
                               + mp.cos(half) * mp.cos(sym.rho_theta) * mp.cosh(hh))
    g2b = 2 * sym.gamma_abs * (mp.cos(half + sym.rho_theta) * mp.e ** hh
                               + mp.cos(half - sym.rho_theta) * mp.e ** (-hh))
    return max(rel(sym.g1, g1a), rel(sym.g1, g1b), rel(sym.g2, g2a), rel(sym.g2, g2b))
check("G-POLAR", plane_max(g_polar))

def phi_diff(sym, b):
    pi = mp.pi
    cc = mp.cos(pi * sym.sigma) + mp.cosh(pi * sym.rho)
    rhs = (2 * pi) ** (2 * sym.sigma) * (pi * mp.sin(pi * sym.sigma) - sym.Psi2 * cc) \
        / (2 * cc ** 2 * sym.gamma_abs ** 2)
    num = mp.diff(lambda sg: Symbols(mp.mpc(sg, sym.rho)).Phi, sym.sigma)
    return rel(num, rhs)
check("PHI-DIFF", plane_max(phi_diff), mp.mpf("1e-18"))

# PHI-DIFF negativity spots (rho >= 10)
neg_ok = True
for sg in [mp.mpf("0.05"), mp.mpf("0.3"), mp.mpf("0.5"), mp.mpf("0.95")]:
    for rh in [mp.mpf(10), mp.mpf(35), mp.mpf(60)]:
        sym = Symbols(mp.mpc(sg, rh))
        cc = mp.cos(mp.pi * sg) + mp.cosh(mp.pi * rh)
        val = (2 * mp.pi) ** (2 * sg) * (mp.pi * mp.sin(mp.pi * sg) - sym.Psi2 * cc) \
            / (2 * cc ** 2 * sym.gamma_abs ** 2)
        if val >= 0:
            neg_ok = False
check("PHI-DIFF.negative(rho>=10)", mp.mpf(0) if neg_ok else mp.mpf(1), mp.mpf("0.5"))

# ===========================================================================
print("=" * 78)
print("SECTION C: critical-line identities")
print("=" * 78)

def cl_quantities(sym, b):
    """Common pointwise critical-line building blocks."""
    q = {}
    q["f"] = sym.f_rho
    q["fp"] = f_rho_d1(sym.rho)
    q["az"] = abs(b.z)
    q["ad"] = abs(b.d)
    q["ad2"] = abs(b.d2)
    q["sin2a"] = 2 * b.zr * b.zi / q["az"] ** 2
    q["cos2a"] = (b.zr ** 2 - b.zi ** 2) / q["az"] ** 2
    q["cos_ab"] = (b.zr * b.z1r + b.zi * b.z1i) / (q["az"] * q["ad"])
    q["sin_ab"] = (b.zi * b.z1r - b.zr * b.z1i) / (q["az"] * q["ad"])
    q["sin_ag"] = (b.zi * b.z2r - b.zr * b.z2i) / (q["az"] * q["ad2"])
    q["mzp"] = (b.zi * b.z1r - b.zr * b.z1i) / q["az"]          # d|zeta|/drho
    q["madp"] = (b.z1i * b.z2r - b.z1r * b.z2i) / q["ad"]        # d|zeta'|/drho
    q["alphap"] = (b.z1r * b.zr + b.z1i * b.zi) / q["az"] ** 2   # d alpha/d rho
    q["betap"] = (b.z2r * b.z1r + b.z2i * b.z1i) / q["ad"] ** 2  # d beta/d rho
    return q

def cl_tana(sym, b):
    q = cl_quantities(sym, b)
    sa, ca = b.zi / q["az"], b.zr / q["az"]
    u = mp.e ** (-mp.pi * sym.rho)
    X = mp.pi / 4 + sym.rho_theta
    root = mp.sqrt(1 + u ** 2)
    n2 = mp.sin(X) - u * mp.cos(X)
    d2 = mp.cos(X) + root + u * mp.sin(X)
    r1 = (sa * d2 - ca * n2) / mp.hypot(n2, d2)
    n1 = -(mp.cos(X) - root + u * mp.sin(X))
    d1 = mp.sin(X) - u * mp.cos(X)
    r2 = (sa * d1 - ca * n1) / mp.hypot(n1, d1)
    return max(abs(r1), abs(r2))
check("CL-TANA", cl_max(cl_tana))

def cl_lin(sym, b):
    q = cl_quantities(sym, b)
    r1 = rel(b.zr / q["f"], (sym.b + mp.mpf("0.5")) * b.z1r + sym.a * b.z1i)
    r2 = rel(b.zi / q["f"], sym.a * b.z1r - (sym.b - mp.mpf("0.5")) * b.z1i)
    return max(r1, r2)
check("CL-LIN-R/I", cl_max(cl_lin))

check("DET0", cl_max(lambda sym, b: sym.a ** 2 + sym.b ** 2 - mp.mpf("0.25")))
check("B-ID", cl_max(lambda sym, b: sym.b - cl_quantities(sym, b)["cos2a"] / 2))
check("A-ID", cl_max(lambda sym, b: sym.a - cl_quantities(sym, b)["sin2a"] / 2))

def sin2a_t(sym, b):
    q = cl_quantities(sym, b)
    hh = mp.pi * sym.rho / 2
    rhs = (mp.cos(sym.rho_theta) * mp.sinh(hh) + mp.sin(sym.rho_theta) * mp.cosh(hh)) / mp.sqrt(mp.cosh(mp.pi * sym.rho))
    return q["sin2a"] - rhs
check("SIN2A", cl_max(sin2a_t))

def cos2a_t(sym, b):
    q = cl_quantities(sym, b)
    hh = mp.pi * sym.rho / 2
    rhs = (mp.cosh(hh) * mp.cos(sym.rho_theta) - mp.sinh(hh) * mp.sin(sym.rho_theta)) / mp.sqrt(mp.cosh(mp.pi * sym.rho))
    return q["cos2a"] - rhs
check("COS2A", cl_max(cos2a_t))

def tan_id(sym, b):
    q = cl_quantities(sym, b)
    return rel(b.zi / b.zr, 1 / q["sin2a"] - q["cos2a"] / q["sin2a"])
check("TAN-ID", cl_max(tan_id), mp.mpf("1e-20"))

def inv_theta(sym, b):
    q = cl_quantities(sym, b)
    hh = mp.pi * sym.rho / 2
    rt = mp.sqrt(mp.cosh(mp.pi * sym.rho))
    r1 = mp.cos(sym.rho_theta) - (mp.sinh(hh) * q["sin2a"] + mp.cosh(hh) * q["cos2a"]) / rt
    r2 = mp.sin(sym.rho_theta) - (mp.cosh(hh) * q["sin2a"] - mp.sinh(hh) * q["cos2a"]) / rt
    # tangent form, exponential-normalized cross product
    u = mp.e ** (-mp.pi * sym.rho)
    t2a = q["sin2a"] / q["cos2a"]
    num = (1 + u) * t2a - 1 + u
    den = (1 - u) * t2a + 1 + u
    r3 = (mp.sin(sym.rho_theta) * den - mp.cos(sym.rho_theta) * num) / mp.hypot(num, den)
    return max(abs(r1), abs(r2), abs(r3))
check("INV-THETA", cl_max(inv_theta), mp.mpf("1e-20"))

def theta_asy(rh):
    sym, b = sym_bundle(mp.mpf("0.5"), rh)
    q = cl_quantities(sym, b)
    t2a = q["sin2a"] / q["cos2a"]
    return rel(mp.tan(sym.rho_theta), (t2a - 1) / (t2a + 1))
for rh in [5, 8, 14.2, 21]:
    info(f"THETA-ASY rel residual at rho={rh}", theta_asy(mp.mpf(rh)))
check("THETA-ASY(rho=8)", theta_asy(mp.mpf(8)), mp.mpf("1e-7"))
check("THETA-ASY(rho=21)", theta_asy(mp.mpf(21)), mp.mpf("1e-7"))

def zmain(sym, b):
    q = cl_quantities(sym, b)
    return rel(b.zr ** 2 + b.zi ** 2, q["f"] * (b.z1i * b.zi + b.z1r * b.zr))
check("ZMAIN", cl_max(zmain))

def alpha_prime(sym, b):
    q = cl_quantities(sym, b)
    r1 = rel(q["alphap"], 1 / q["f"])
    # numeric cross-check of the pointwise derivative formula
    num = mp.diff(lambda rr: mp.arg(mp.zeta(mp.mpc(0.5, rr))), sym.rho)
    r2 = rel(num, q["alphap"])
    return max(r1, r2)
check("ALPHA-PRIME", cl_max(alpha_prime), mp.mpf("1e-12"))

def zmain_int(sym, b):
    q = cl_quantities(sym, b)
    cos2 = (1 + q["cos2a"]) / 2
    rhs = q["f"] * (-(b.z1i ** 2 - b.z1r ** 2) * cos2 + b.z1r * b.z1i * q["sin2a"] + b.z1i ** 2)
    return rel(b.zi * b.z1i + b.zr * b.z1r, rhs)
check("ZMAIN-INT", cl_max(zmain_int))

def comp_sq(sym, b):
    q = cl_quantities(sym, b)
    cos2 = (1 + q["cos2a"]) / 2
    sin2 = (1 - q["cos2a"]) / 2
    r1 = rel(b.zr ** 2 / q["f"] ** 2, q["ad"] ** 2 * cos2 * q["cos_ab"] ** 2)
    r2 = rel(b.zi ** 2 / q["f"] ** 2, q["ad"] ** 2 * sin2 * q["cos_ab"] ** 2)
    return max(r1, r2)
check("COMP-SQ", cl_max(comp_sq))

check("MAG-SQ", cl_max(lambda sym, b: rel(abs(b.z) ** 2 / abs(b.d) ** 2,
                                          cl_quantities(sym, b)["f"] ** 2 * cl_quantities(sym, b)["cos_ab"] ** 2)))

def zzp(sym, b):
    q = cl_quantities(sym, b)
    return rel(q["az"] / q["ad"], q["f"] * q["cos_ab"])
check("ZZP", cl_max(zzp))

cosneg_worst = mp.mpf(-1)
for rh in mp.linspace(7, 50, 87):
    sym, b = sym_bundle(mp.mpf("0.5"), rh)
    q = cl_quantities(sym, b)
    cosneg_worst = max(cosneg_worst, q["cos_ab"])
check("COS-NEG(max over [7,50])", max(cosneg_worst, mp.mpf(0)), mp.mpf("1e-9"),
      note=f"max cos = {mp.nstr(cosneg_worst, 6)}")

def eq9(sym, b):
    q = cl_quantities(sym, b)
    lhs = q["az"] ** 2 / (q["ad"] ** 2 * q["f"] ** 2) \
        + (b.z1i * b.zr - b.z1r * b.zi) ** 2 / (q["ad"] ** 2 * q["az"] ** 2)
    return rel(lhs, mp.mpf(1))
check("EQ9", cl_max(eq9))

def diff_id(sym, b):
    q = cl_quantities(sym, b)
    lhs = (b.z1i * b.zr - b.z1r * b.zi) ** 2
    dnum = mp.diff(lambda rr: abs(mp.zeta(mp.mpc(0.5, rr))) ** 2, sym.rho)
    r1 = rel(lhs, dnum ** 2 / 4)
    r2 = rel(lhs, q["az"] ** 2 * q["mzp"] ** 2)
    return max(r1, r2)
check("DIFF-ID", cl_max(diff_id), mp.mpf("1e-12"))

def zprime(sym, b):
    q = cl_quantities(sym, b)
    return rel(q["mzp"] ** 2, q["ad"] ** 2 - q["az"] ** 2 / q["f"] ** 2)
check("ZPRIME", cl_max(zprime))

def logz(sym, b):
    q = cl_quantities(sym, b)
    lhs = (q["mzp"] / q["az"]) ** 2
    return rel(lhs, q["ad"] ** 2 / q["az"] ** 2 - 1 / q["f"] ** 2)
check("LOGZ", cl_max(logz))

def logza(sym, b):
    q = cl_quantities(sym, b)
    lhs = q["mzp"] / q["az"]
    return rel(lhs, (q["sin_ab"] / q["cos_ab"]) / q["f"])
check("LOGZA", cl_max(logza))

check("ZPZP", cl_max(lambda sym, b: rel(cl_quantities(sym, b)["mzp"] / abs(b.d),
                                        cl_quantities(sym, b)["sin_ab"])))

def exprep(r1, r2):
    def integrand(rr):
        sym, b = sym_bundle(mp.mpf("0.5"), rr)
        q = cl_quantities(sym, b)
        return (q["sin_ab"] / q["cos_ab"]) / q["f"]
    I = mp.quad(integrand, [r1, r2])
    ratio = abs(mp.zeta(mp.mpc(0.5, r2))) / abs(mp.zeta(mp.mpc(0.5, r1)))
    return rel(ratio, mp.e ** I), I
r_a, I_a = exprep(mp.mpf(15), mp.mpf(20))
r_b, I_b = exprep(mp.mpf(26), mp.mpf(29))
check("EXPREP[15,20]", r_a, mp.mpf("1e-18"))
check("EXPREP[26,29]", r_b, mp.mpf("1e-18"))
info("EXPREP integral [15,20]", I_a)
info("EXPREP integral [26,29]", I_b)

def dbeta(sym, b):
    q = cl_quantities(sym, b)
    tan_ab = q["sin_ab"] / q["cos_ab"]
    rhs = 2 / q["f"] - q["fp"] / (q["f"] * tan_ab) - q["madp"] / (tan_ab * q["ad"])
    r1 = rel(q["betap"], rhs)
    num = mp.diff(lambda rr: mp.arg(mp.zeta(mp.mpc(0.5, rr), derivative=1)), sym.rho)
    r2 = rel(num, q["betap"])
    return max(r1, r2)
check("DBETA", cl_max(dbeta), mp.mpf("1e-12"))

def dbda(sym, b):
    q = cl_quantities(sym, b)
    lhs = q["betap"] / q["alphap"]
    rhs = 2 - (q["madp"] / q["ad"] + q["fp"] / q["f"]) / (q["mzp"] / q["az"])
    return rel(lhs, rhs)
check("DBDA", cl_max(dbda))

def l1neg(sym, b):
    q = cl_quantities(sym, b)
    sb, cb = b.z1i / q["ad"], b.z1r / q["ad"]
    L1 = -1 / q["f"] + (sb * b.z2i + cb * b.z2r) / q["ad"]
    return rel(L1, q["betap"] - q["alphap"])
check("L1NEG.identity", cl_max(l1neg))
l1_worst = mp.mpf(-1)
for rh in mp.linspace(7, 50, 87):
    sym, b = sym_bundle(mp.mpf("0.5"), rh)
    q = cl_quantities(sym, b)
    l1_worst = max(l1_worst, q["betap"] - q["alphap"])
check("L1NEG.sign(max over [7,50])", max(l1_worst, mp.mpf(0)), mp.mpf("1e-9"),
      note=f"max L1 = {mp.nstr(l1_worst, 6)}")

def sing_inv(sym, b):
    q = cl_quantities(sym, b)
    rhs = 2 * b.zr / (q["sin2a"] * q["f"]) - (q["cos2a"] + 1) * b.z1r / q["sin2a"]
    return rel(b.z1i, rhs)
check("SING-INV", cl_max(sing_inv))

def pert(sym, b, which):
    q = cl_quantities(sym, b)
    sin2 = (1 - q["cos2a"]) / 2
    cos2 = (1 + q["cos2a"]) / 2
    if which == "R":
        rhs = q["fp"] * b.zi / (2 * q["f"]) + b.zr / q["f"] \
            + (2 * sin2 * b.z2r - q["sin2a"] * b.z2i) * q["f"] / 4
        return rel(b.z1r, rhs)
    rhs = -q["fp"] * b.zr / (2 * q["f"]) + b.zi / q["f"] \
        + (2 * cos2 * b.z2i - q["sin2a"] * b.z2r) * q["f"] / 4
    return rel(b.z1i, rhs)
check("PERT-R(sigma=1/2 exact)", cl_max(lambda s, b: pert(s, b, "R")))
check("PERT-I(sigma=1/2 exact)", cl_max(lambda s, b: pert(s, b, "I")))

def pert_resid_off(eps, rho, which, angles):
    """Residual of the first-order component relation at sigma = 1/2 + eps.

    These relations arise as the sigma -> 1/2 limit of the exact inverse
    transformation, extracted by expanding the singular pieces to first
    order in sigma - 1/2.  They are therefore exact critical-line
    identities (checked above); off the line their residual vanishes
    linearly, residual ~ C*eps, so the eps / 2*eps residual ratio is 1/2
    (not 1/4, which would require second-order accuracy off-line -- every
    evaluation prescription for the trig factors gives 1/2).

    All zeta-family components at the off-line point; f and f' are functions
    of rho alone (their defining form carries no free sigma).  `angles`
    selects where the trigonometric factors of alpha are evaluated:
    "line" pins them at sigma = 1/2 (symbols with no stated argument are
    functions of rho only), "point" evaluates them at the off-line point.
    """
    sym, b = sym_bundle(mp.mpf("0.5") + eps, rho)
    f = f_rho(rho)
    fp = f_rho_d1(rho)
    src = b if angles == "point" else sym_bundle(mp.mpf("0.5"), rho)[1]
    az2 = abs(src.z) ** 2
    sin2a = 2 * src.zr * src.zi / az2
    cos2a = (src.zr ** 2 - src.zi ** 2) / az2
    sin_sq = (1 - cos2a) / 2
    cos_sq = (1 + cos2a) / 2
    if which == "R":
        rhs = fp * b.zi / (2 * f) + b.zr / f + (2 * sin_sq * b.z2r - sin2a * b.z2i) * f / 4
        return abs(b.z1r - rhs)
    rhs = -fp * b.zr / (2 * f) + b.zi / f + (2 * cos_sq * b.z2i - sin2a * b.z2r) * f / 4
    return abs(b.z1i - rhs)

for which in ("R", "I"):
    for angles in ("line", "point"):
        r_eps1 = pert_resid_off(mp.mpf("1e-3"), mp.mpf(10), which, angles)
        r_eps2 = pert_resid_off(mp.mpf("2e-3"), mp.mpf(10), which, angles)
        info(f"PERT-{which} ratio [{angles} angles]", r_eps1 / r_eps2,
             f"(resid {mp.nstr(r_eps1, 4)} / {mp.nstr(r_eps2, 4)}; 0.5 = first order)")
for which in ("R", "I"):
    r_eps1 = pert_resid_off(mp.mpf("1e-3"), mp.mpf(10), which, "line")
    r_eps2 = pert_resid_off(mp.mpf("2e-3"), mp.mpf(10), which, "line")
    check(f"PERT-{which}.first-order", r_eps1 / r_eps2 - mp.mpf("0.5"), mp.mpf("0.13"))

def z2_ratio1(sym, b):
    q = cl_quantities(sym, b)
    rhs = (-q["fp"] * q["cos_ab"] + 2 * q["sin_ab"]) / (q["sin_ag"] * q["f"])
    return rel(q["ad2"] / q["ad"], rhs)
check("Z2-RATIO-1", cl_max(z2_ratio1))

def z2_ratio2(sym, b):
    q = cl_quantities(sym, b)
    rhs = (-q["fp"] + 2 * q["sin_ab"] / q["cos_ab"]) / (q["sin_ag"] * q["f"] ** 2)
    return rel(q["ad2"] / q["az"], rhs)
check("Z2-RATIO-2", cl_max(z2_ratio2))

def cform1(sym, b):
    q = cl_quantities(sym, b)
    e2ia = (b.z / q["az"]) ** 2
    return abs((2 / q["f"]) * b.z - (e2ia * mp.conj(b.d) + b.d)) / abs(b.d)
check("CFORM-1", cl_max(cform1))

def cform2(sym, b):
    q = cl_quantities(sym, b)
    eia = b.z / q["az"]
    r1 = abs(q["az"] - mp.conj(eia) * b.z)
    r2 = rel(q["az"], q["f"] * mp.re(eia * mp.conj(b.d)))
    return max(r1, r2)
check("CFORM-2", cl_max(cform2))

def cform3(sym, b):
    q = cl_quantities(sym, b)
    eia = b.z / q["az"]
    return abs(b.z / q["ad"] - q["f"] * eia * q["cos_ab"]) / abs(b.z / q["ad"])
check("CFORM-3", cl_max(cform3))

def cform4(sym, b):
    q = cl_quantities(sym, b)
    eiab = (b.z / q["az"]) * mp.conj(b.d / q["ad"])
    return abs(b.z / b.d - q["f"] * eiab * q["cos_ab"]) / abs(b.z / b.d)
check("CFORM-4", cl_max(cform4))

def interim(sym, b, beta_shift=mp.mpf(0), tsign=1):
    q = cl_quantities(sym, b)
    pi = mp.pi
    az, ad = q["az"], q["ad"]
    rt = tsign * sym.rho_theta
    e_ia = b.z / az
    e_ib = (b.d / ad) * mp.exp(1j * beta_shift)
    cos4b = mp.re(e_ib ** 4)
    sin4b = mp.im(e_ib ** 4)
    cos_ab = mp.re(e_ia * mp.conj(e_ib))
    phase = mp.exp(2j * rt) * e_ib ** 3 * e_ia
    sin_mix = mp.im(phase)
    cos_mix = mp.re(phase)
    sh, ch = mp.sinh(pi * sym.rho), mp.cosh(pi * sym.rho)
    num = (-sh * mp.sin(2 * rt) - mp.cos(2 * rt)) * cos4b \
        + (-mp.cos(2 * rt) * sh + mp.sin(2 * rt)) * sin4b + ch
    den = ch * cos_ab - sh * sin_mix - cos_mix
    return rel(num / den, 2 * cos_ab)
for tsign in (1, -1):
    v = cl_max(lambda s, b: interim(s, b, tsign=tsign))
    info(f"INTERIM residual [rho_theta sign {tsign:+d}]", v)
check("INTERIM", cl_max(lambda s, b: interim(s, b, tsign=-1)))
probe = interim(*sym_bundle(mp.mpf("0.5"), mp.mpf(10)), beta_shift=mp.mpf("0.3"), tsign=-1)
info("INTERIM beta-perturbation probe", probe,
     "(0 => identity holds for arbitrary beta)")

def h_cl(sym, b):
    q = cl_quantities(sym, b)
    K = -16 * mp.sqrt(2 * mp.pi) * mp.cosh(mp.pi * sym.rho) / q["f"]
    return max(rel(sym.h1, K * q["cos2a"]), rel(sym.h2, K * q["sin2a"]))
check("H-CL", cl_max(h_cl))

# ===========================================================================
print("=" * 78)
print("SECTION D: argument tracking, winding and comparison formulas")
print("=" * 78)

# closed form for the tracked argument sum (k-free part)
def alpha_p_closed_kfree(sigma, rho):
    th = theta_cont(mp.mpc(sigma, rho))
    atn = mp.atan((mp.cos(mp.pi * sigma) - 1) * mp.sinh(mp.pi * rho / 2)
                  / (mp.cosh(mp.pi * rho / 2) * mp.sin(mp.pi * sigma)))
    return -th - atn + rho * mp.log(2 * mp.pi)

mp.mp.dps = 25
sg3 = mp.mpf(1) / 3
rhos_a, al_a, j_a = track_angle(lambda r: mp.zeta(mp.mpc(sg3, r)), mp.mpf("0.001"), mp.mpf("14.5"), mp.mpf("0.05"))
rhos_t, al_t, j_t = track_angle(lambda r: mp.zeta(mp.mpc(1 - sg3, r)), mp.mpf("0.001"), mp.mpf("14.5"), mp.mpf("0.05"))
kvals = []
worst_k_res = mp.mpf(0)
for i in range(len(rhos_a)):
    if rhos_a[i] < 2:
        continue
    tracked_sum = al_a[i] + al_t[i]
    kfree = alpha_p_closed_kfree(sg3, rhos_a[i])
    kk = (tracked_sum - kfree) / mp.pi
    kvals.append(kk)
    worst_k_res = max(worst_k_res, abs(kk - mp.nint(kk)))
k_unique = set(int(mp.nint(k)) for k in kvals)
info("winding k values on sigma=1/3, rho in [2,14.5]", str(sorted(k_unique)))
check("D.winding-k=2", mp.mpf(0) if k_unique == {2} else mp.mpf(1), mp.mpf("0.5"))
check("D.winding-k residual", worst_k_res, mp.mpf("1e-6"))
info("anchored alpha(1/3, 0.001)", al_a[0])

# argument-sum derivative (rhs of the differential form)
def argsum_deriv_rhs(sigma, rho):
    return mp.log(2 * mp.pi) - mp.re(mp.digamma(mp.mpc(sigma, rho))) \
        + mp.pi / 2 * mp.sin(mp.pi * sigma) / (mp.cos(mp.pi * sigma) + mp.cosh(mp.pi * rho))
d_num = mp.diff(lambda r: alpha_p_closed_kfree(sg3, r), mp.mpf(5))
check("D.argsum-deriv", rel(d_num, argsum_deriv_rhs(sg3, mp.mpf(5))), mp.mpf("1e-12"))

# critical line: tracked alpha vs closed form with k=0:
#   alpha = -theta/2 + rho ln(2pi)/2 - 9 pi/8 + arctan(e^(pi rho))/2 + k pi
rhos_c, al_c, j_c = track_angle(lambda r: mp.zeta(mp.mpc(mp.mpf("0.5"), r)), mp.mpf("0.001"), mp.mpf("16"), mp.mpf("0.05"))
def alpha_closed_cl(rho):
    th = theta_cont(mp.mpc(mp.mpf("0.5"), rho))
    at = mp.pi / 2 - mp.atan(mp.e ** (-mp.pi * rho))
    return -th / 2 + rho * mp.log(2 * mp.pi) / 2 - 9 * mp.pi / 8 + at / 2
worst_below = mp.mpf(0)
for i, r in enumerate(rhos_c):
    if r < mp.mpf("14.0"):
        worst_below = max(worst_below, abs(al_c[i] - (alpha_closed_cl(r) + 2 * mp.pi)))
check("D.alpha-closed(k=0 + anchor 2pi)", worst_below, mp.mpf("1e-10"),
      note="below first zero")
info("jumps detected on critical line to 16", str([(mp.nstr(r, 8), m) for r, m in j_c]))

# after the first zero the tracked value differs from the closed form by -pi
i15 = min(range(len(rhos_c)), key=lambda i: abs(rhos_c[i] - 15))
check("D.alpha-closed(after zero)", al_c[i15] - (alpha_closed_cl(rhos_c[i15]) + 2 * mp.pi) + mp.pi,
      mp.mpf("1e-10"))

# comparison formula: theta/2 - rho ln(2pi)/2 - pi/8 + arctan(e^(-pi rho))/2 - pi
# should equal -alpha_tracked below the first zero
def comparison_rhs(rho, theta_val):
    return theta_val / 2 - rho * mp.log(2 * mp.pi) / 2 - mp.pi / 8 \
        + mp.atan(mp.e ** (-mp.pi * rho)) / 2 - mp.pi
worst_cmp = mp.mpf(0)
for i, r in enumerate(rhos_c):
    if mp.mpf("0.1") < r < mp.mpf("14.0"):
        th = theta_cont(mp.mpc(mp.mpf("0.5"), r))
        worst_cmp = max(worst_cmp, abs(-al_c[i] - comparison_rhs(r, th)))
check("D.comparison-continuous", worst_cmp, mp.mpf("1e-10"))

# above the first zero: difference is an exact multiple of pi
diff15 = -al_c[i15] - comparison_rhs(rhos_c[i15], theta_cont(mp.mpc(mp.mpf("0.5"), rhos_c[i15])))
check("D.comparison-mod-pi(rho=15)", diff15 / mp.pi - mp.nint(diff15 / mp.pi), mp.mpf("1e-10"),
      note=f"multiple = {mp.nstr(diff15 / mp.pi, 5)}")

# principal-vs-continuous theta interpretation differ by integer multiple of pi
th_c = theta_cont(mp.mpc(mp.mpf("0.5"), 15))
th_p = mp.arg(mp.gamma(mp.mpc(mp.mpf("0.5"), 15)))
wrapdiff = (th_c - th_p) / (2 * mp.pi)
check("D.theta-wraps-integer", wrapdiff - mp.nint(wrapdiff), mp.mpf("1e-20"),
      note=f"wraps = {mp.nstr(wrapdiff, 4)}")

# identity used by the comparison constant: arctan(e^x) - arctan(tanh(x/2)) = pi/4
xv = mp.mpf("1.7")
check("D.arctan-identity", mp.atan(mp.e ** xv) - mp.atan(mp.tanh(xv / 2)) - mp.pi / 4)

# rotation function used for zero bracketing is real (+-|zeta|)
worst_rot = mp.mpf(0)
for r in mp.linspace(2, 16, 29):
    z = mp.zeta(mp.mpc(mp.mpf("0.5"), r))
    a0 = alpha_closed_cl(r)
    worst_rot = max(worst_rot, abs(mp.im(mp.exp(-1j * a0) * z)))
check("D.rotation-real", worst_rot, mp.mpf("1e-18"))

# beta - alpha sawtooth on [30, 50], using absolute tracked angles anchored
# at rho = 0+.  Tracked alpha is assembled from the closed form: the anchor
# contributes +2 pi and every zero ordinate below rho contributes -pi.
mp.mp.dps = 20
ZEROS_TO_50 = [mp.mpf(z) for z in
               ["14.134725141734694", "21.022039638771555", "25.010857580145688",
                "30.424876125859513", "32.935061587739190", "37.586178158825671",
                "40.918719012147495", "43.327073280914999", "48.005150881167160",
                "49.773832477672302"]]
def alpha_tracked_formula(rho):
    n_below = sum(1 for z in ZEROS_TO_50 if z <= rho)
    return alpha_closed_cl(rho) + 2 * mp.pi - n_below * mp.pi
# spot-validate the assembled track against the pointwise unit vector
worst_unit = mp.mpf(0)
for r in [mp.mpf(31), mp.mpf(36), mp.mpf(45), mp.mpf("49.9")]:
    z = mp.zeta(mp.mpc(mp.mpf("0.5"), r))
    worst_unit = max(worst_unit, abs(mp.exp(1j * alpha_tracked_formula(r)) - z / abs(z)))
check("D.alpha-formula-unit", worst_unit, mp.mpf("1e-14"))

rhos_bb, be_b, jumps_bb = track_angle(lambda r: mp.zeta(mp.mpc(mp.mpf("0.5"), r), derivative=1), mp.mpf("0.001"), mp.mpf(50), mp.mpf("0.04"))
check("D.beta-continuous", mp.mpf(len(jumps_bb)), mp.mpf("0.5"),
      note=f"jumps: {[(mp.nstr(r, 8), m) for r, m in jumps_bb]}")
info("beta(0+) anchor", be_b[0])
vals, vrhos = [], []
for i, r in enumerate(rhos_bb):
    if r >= 30:
        vals.append(be_b[i] - alpha_tracked_formula(r))
        vrhos.append(r)
info("beta-alpha absolute range on [30,50]", f"[{mp.nstr(min(vals), 6)}, {mp.nstr(max(vals), 6)}]")
info("beta-alpha / pi at range ends", f"{mp.nstr(vals[0] / mp.pi, 6)} .. {mp.nstr(vals[-1] / mp.pi, 6)}")

# negative slope away from zeros; +pi jumps exactly at zeros
neg_slope_ok = True
jump_rhos = []
for i in range(1, len(vals)):
    dv = vals[i] - vals[i - 1]
    if dv > 0:
        if dv > 2:  # the +pi jump from alpha's drop
            jump_rhos.append((vrhos[i - 1] + vrhos[i]) / 2)
        elif dv > mp.mpf("1e-12"):
            neg_slope_ok = False
check("D.beta-alpha-slope", mp.mpf(0) if neg_slope_ok else mp.mpf(1), mp.mpf("0.5"))
zeros_in_range = [z for z in ZEROS_TO_50 if 30 <= z <= 50]
jump_match = len(jump_rhos) == len(zeros_in_range) and \
    all(min(abs(j - z) for z in zeros_in_range) < mp.mpf("0.05") for j in jump_rhos)
check("D.beta-alpha-jumps-at-zeros", mp.mpf(0) if jump_match else mp.mpf(1), mp.mpf("0.5"),
      note=f"{len(jump_rhos)} jumps vs {len(zeros_in_range)} zeros")
# band: no sample falls in the open interval (-pi/2, pi/2) (raw values), and
# the approach value just left of each zero pins the half-integer multiple
band_ok = all(not (-mp.pi / 2 + mp.mpf("1e-9") < v < mp.pi / 2 - mp.mpf("1e-9")) for v in vals)
check("D.beta-alpha-band", mp.mpf(0) if band_ok else mp.mpf(1), mp.mpf("0.5"))
for z in zeros_in_range[:3] + zeros_in_range[-1:]:
    sym, bz = sym_bundle(mp.mpf("0.5"), z - mp.mpf("1e-4"))
    approach = None
    for i in range(1, len(vrhos)):
        if vrhos[i - 1] < z <= vrhos[i]:
            approach = vals[i - 1]
            break
    if approach is not None:
        info(f"beta-alpha/pi just left of zero {mp.nstr(z, 8)}", approach / mp.pi)

mp.mp.dps = 40

# ===========================================================================
print("=" * 78)
print("SECTION E: zeros, half zeros and zero conditions")
print("=" * 78)

zero_list = [mp.zetazero(k) for k in range(1, 11)]
zero_rhos = [mp.im(z) for z in zero_list]
info("first 10 zero ordinates", str([mp.nstr(r, 12) for r in zero_rhos]))

# approach value of tracked (alpha - beta): cos must vanish; n = -2 convention
for rho0 in zero_rhos[:3]:
    sym, b = sym_bundle(mp.mpf("0.5"), rho0 - mp.mpf("1e-6"))
    q = cl_quantities(sym, b)
    check(f"E.cos(a-b)->0 at {mp.nstr(rho0, 8)}", q["cos_ab"], mp.mpf("1e-4"))

# tan-beta branch at the first three zeros
for rho0 in zero_rhos[:3]:
    sym, b = sym_bundle(mp.mpf("0.5"), rho0)
    tb = b.z1i / b.z1r
    root = mp.sqrt(sym.g1 ** 2 + sym.g2 ** 2)
    plus = (-sym.g2 + root) / sym.g1
    minus = (-sym.g2 - root) / sym.g1
    which = "+" if abs(tb - plus) < abs(tb - minus) else "-"
    res = min(abs(tb - plus), abs(tb - minus)) / max(abs(tb), 1)
    check(f"E.tanbeta-branch at {mp.nstr(rho0, 8)}", res, mp.mpf("1e-20"), note=f"branch {which}")

# half zeros: scan for sign changes of Re / Im on the critical line
def scan_roots(fn, lo, hi, step):
    roots = []
    prev = fn(lo)
    r = lo
    while r < hi:
        rn = min(r + step, hi)
        cur = fn(rn)
        if mp.sign(prev) * mp.sign(cur) < 0:
            roots.append(mp.findroot(fn, (r, rn), solver="bisect", tol=mp.mpf("1e-30")))
        prev = cur
        r = rn
    return roots

re_fn = lambda r: mp.re(mp.zeta(mp.mpc(mp.mpf("0.5"), r)))
im_fn = lambda r: mp.im(mp.zeta(mp.mpc(mp.mpf("0.5"), r)))
re_halves = scan_roots(re_fn, mp.mpf("0.5"), mp.mpf(30), mp.mpf("0.04"))
im_halves = scan_roots(im_fn, mp.mpf("0.5"), mp.mpf(30), mp.mpf("0.04"))
full = set()
for r0 in zero_rhos:
    if r0 < 30:
        full.add(mp.nstr(r0, 10))
re_only = [r for r in re_halves if all(abs(r - z) > mp.mpf("1e-6") for z in zero_rhos)]
im_only = [r for r in im_halves if all(abs(r - z) > mp.mpf("1e-6") for z in zero_rhos)]
info("real-part-only zeros in [0.5,30]", str([mp.nstr(r, 10) for r in re_only]))
info("imag-part-only zeros in [0.5,30]", str([mp.nstr(r, 10) for r in im_only]))

# half-zero angle conventions on the tracked line: alpha = (n+1/2) pi at a
# real-part zero, alpha = n pi at an imaginary-part zero; read n from the
# continuous track (dps 25 for speed)
mp.mp.dps = 25
rhos_f, al_f, j_f = track_angle(lambda r: mp.zeta(mp.mpc(mp.mpf("0.5"), r)), mp.mpf("0.001"), mp.mpf(30), mp.mpf("0.05"))
def tracked_alpha_at(r):
    i = min(range(len(rhos_f)), key=lambda i: abs(rhos_f[i] - r))
    # local correction: re-principal around sample
    z = mp.zeta(mp.mpc(mp.mpf("0.5"), rhos_f[i]))
    return al_f[i]
for r in re_only[:4]:
    av = tracked_alpha_at(r)
    nval = av / mp.pi - mp.mpf("0.5")
    check(f"E.realhalf-angle at {mp.nstr(r, 8)}", nval - mp.nint(nval), mp.mpf("1e-2"),
          note=f"n = {mp.nstr(mp.nint(nval), 3)}")
for r in im_only[:4]:
    av = tracked_alpha_at(r)
    nval = av / mp.pi
    check(f"E.imaghalf-angle at {mp.nstr(r, 8)}", nval - mp.nint(nval), mp.mpf("1e-2"),
          note=f"n = {mp.nstr(mp.nint(nval), 3)}")
# anomalous flags: imaginary-part zero with Re zeta < 0 and d(Re zeta)/drho > 0
anom = []
for r in im_only:
    zr = mp.re(mp.zeta(mp.mpc(mp.mpf("0.5"), r)))
    d = mp.zeta(mp.mpc(mp.mpf("0.5"), r), derivative=1)
    drho_re = -mp.im(d)   # d/drho Re zeta = Re(i * dzeta/ds) = -Im dzeta/ds
    if zr < 0 and drho_re > 0:
        anom.append(r)
info("anomalous imag-half zeros in [0.5,30]", str([mp.nstr(r, 10) for r in anom]))
mp.mp.dps = 40

# rho_s: root of 2 ln(2pi) - 2 Re psi(1/2 + i rho) + pi sech(pi rho) = 0
rho_s = mp.findroot(lambda r: 2 * mp.log(2 * mp.pi) - 2 * mp.re(mp.digamma(mp.mpc(mp.mpf("0.5"), r)))
                    + mp.pi / mp.cosh(mp.pi * r), mp.mpf("6.3"))
info("f pole ordinate rho_s", rho_s)
check("E.rho_s approx 6.28", rho_s - mp.mpf("6.28"), mp.mpf("0.01"))

# zero conditions at on-line zeros (derivative-pair forms)
def zero_conditions_at(s0, dval, tdval, sym):
    out = {}
    ps = sym.pi_sigma
    d_r, d_i = mp.re(dval), mp.im(dval)
    td_r, td_i = mp.re(tdval), mp.im(tdval)
    out["mag-sym"] = rel(abs(dval) ** 2, 2 * (d_i * td_i - d_r * td_r) * ps / sym.g2)
    out["mag-anti"] = rel(abs(dval) ** 2, -2 * (d_i * td_r + d_r * td_i) * ps / sym.g1)
    den = 8 * sym.gamma_abs ** 2 * sym.c0
    out["comp-r"] = rel(d_r, -ps * (td_i * sym.g1 + td_r * sym.g2) / den)
    out["comp-i"] = rel(d_i, ps * (td_i * sym.g2 - td_r * sym.g1) / den)
    # reflected-angle map: tan beta~ = -(g2 tan beta - g1)/(tan beta g1 + g2)
    tb, tbt = d_i / d_r, td_i / td_r
    out["beta-map"] = rel(tbt, -(sym.g2 * tb - sym.g1) / (tb * sym.g1 + sym.g2))
    # angle-sum condition: tan(beta + beta~) = g1/g2, and the closed trig form
    ebb = (dval / abs(dval)) * (tdval / abs(tdval))
    tsum = mp.im(ebb) / mp.re(ebb)
    out["beta-sum"] = rel(tsum, sym.g1 / sym.g2)
    tt = mp.tan(mp.pi * sym.sigma / 2) * mp.tanh(mp.pi * sym.rho / 2)
    trt = mp.tan(sym.rho_theta)
    out["beta-sum-trig"] = rel(tsum, (tt + trt) / (1 - tt * trt))
    return out

for rho0 in zero_rhos[:3]:
    s0 = mp.mpc(mp.mpf("0.5"), rho0)
    sym = Symbols(s0)
    dval = mp.zeta(s0, derivative=1)
    tdval = dval  # reflected point coincides on the critical line
    conds = zero_conditions_at(s0, dval, tdval, sym)
    for key, v in conds.items():
        check(f"E.{key} at {mp.nstr(rho0, 8)}", v, mp.mpf("1e-20"))

# doubled-angle condition on the critical line: tan 2 beta0 matches the trig form
for rho0 in zero_rhos[:3]:
    sym = Symbols(mp.mpc(mp.mpf("0.5"), rho0))
    dval = mp.zeta(mp.mpc(mp.mpf("0.5"), rho0), derivative=1)
    e2b = (dval / abs(dval)) ** 2
    t2b = mp.im(e2b) / mp.re(e2b)
    th = mp.tanh(mp.pi * rho0 / 2)
    trt = mp.tan(sym.rho_theta)
    rhs = (th + trt) / (1 - trt * th)
    check(f"E.two-beta at {mp.nstr(rho0, 8)}", rel(t2b, rhs), mp.mpf("1e-20"))
    # asymptotic variant tan(2 beta0) ~ tan(pi/4 + rho_theta)
    if rho0 > 20:
        asy = mp.tan(mp.pi / 4 + sym.rho_theta)
        info(f"E.two-beta-asy rel at {mp.nstr(rho0, 8)}", rel(t2b, asy))

# the doubled-angle right-hand side equals tan(2 alpha) pointwise at ANY rho
# (not just zeros), in cross-product form
def two_beta_vs_tan2a(sym, b):
    q = cl_quantities(sym, b)
    th = mp.tanh(mp.pi * sym.rho / 2)
    trt = mp.tan(sym.rho_theta)
    num = th + trt
    den = 1 - trt * th
    return (q["sin2a"] * den - q["cos2a"] * num) / mp.hypot(num, den)
check("E.two-beta-rhs=tan2a", cl_max(two_beta_vs_tan2a))

# asymptotic agreement of the doubled-angle condition with its rho->inf form,
# in cross-product terms at rho = 50
sym50 = Symbols(mp.mpc(mp.mpf("0.5"), 50))
th50 = mp.tanh(mp.pi * 25)
trt50 = mp.tan(sym50.rho_theta)
n_a, d_a = th50 + trt50, 1 - trt50 * th50
asy50 = mp.pi / 4 + sym50.rho_theta
cross50 = (mp.sin(asy50) * d_a - mp.cos(asy50) * n_a) / mp.hypot(n_a, d_a)
check("E.two-beta-asy-cross(rho=50)", cross50, mp.mpf("1e-8"))

# ===========================================================================
print("=" * 78)
print("SECTION F: constructed counterexample")
print("=" * 78)

def w_fn(s, s0):
    norm = (mp.cosh(mp.pi * mp.im(s0)) ** 2 - mp.cos(mp.pi * mp.re(s0)) ** 2) ** 2
    return mp.sin(mp.pi * (s - s0)) * mp.sin(mp.pi * (s + s0)) \
        * mp.sin(mp.pi * (s - mp.conj(s0))) * mp.sin(mp.pi * (s + mp.conj(s0))) / norm

def zeta_c(s, s0):
    return mp.zeta(s) * w_fn(s, s0)

s0 = mp.mpc(mp.mpf("0.75"), mp.mpf(12))

# planted zeros
check("F.zero at s0", abs(zeta_c(s0, s0)))
check("F.zero at 1-s0bar", abs(zeta_c(1 - mp.conj(s0), s0)))
check("F.zero at s0+1", abs(zeta_c(s0 + 1, s0)))

# w symmetries
for sg, rh in [(mp.mpf("0.3"), mp.mpf(9)), (mp.mpf("0.8"), mp.mpf(17))]:
    sx = mp.mpc(sg, rh)
    check(f"F.w-reflect ({sg},{rh})", rel(w_fn(sx, s0), w_fn(1 - sx, s0)))
    check(f"F.w-conj ({sg},{rh})", abs(w_fn(mp.conj(sx), s0) - mp.conj(w_fn(sx, s0))))
check("F.w(1)=1", w_fn(mp.mpf(1), s0) - 1)

# residue at s = 1 via the probe s = 1 + 1e-5
eps = mp.mpf("1e-5")
res_probe = eps * zeta_c(1 + eps, s0)
check("F.residue-probe", res_probe - 1, mp.mpf("1e-4"), note=f"value {mp.nstr(res_probe, 8)}")

# ratio identity: zeta_c(s)/zeta_c(1-s) = zeta(s)/zeta(1-s)
for sg, rh in [(mp.mpf("0.3"), mp.mpf(9)), (mp.mpf("0.6"), mp.mpf(21))]:
    sx = mp.mpc(sg, rh)
    check(f"F.ratio-fe ({sg},{rh})",
          rel(zeta_c(sx, s0) / zeta_c(1 - sx, s0), mp.zeta(sx) / mp.zeta(1 - sx)))

# magnitude-ratio limit at the in-strip reflected zero s* = 1 - conj(s0)
s_star = 1 - mp.conj(s0)
dzc_star = mp.diff(lambda u: zeta_c(u, s0), s_star)
dzc_s0 = mp.diff(lambda u: zeta_c(u, s0), s0)
ratio_lim = abs(dzc_star) ** 2 / abs(dzc_s0) ** 2
phi_star = Symbols(s_star).Phi
check("F.limit-ratio=Phi", rel(ratio_lim, phi_star), mp.mpf("1e-18"))
check("F.limit-ratio>1", mp.mpf(0) if ratio_lim > 1 else mp.mpf(1), mp.mpf("0.5"),
      note=f"value {mp.nstr(ratio_lim, 10)}")
info("Phi at s* = 1-conj(s0)", phi_star)

# inequality spot checks: |zeta_c(sigma + i rho0)| >= |zeta_c(1-sigma + i rho0)|
ineq_ok = True
for sg in mp.linspace(mp.mpf("0.02"), mp.mpf("0.48"), 12):
    va = abs(zeta_c(mp.mpc(sg, mp.im(s0)), s0))
    vb = abs(zeta_c(mp.mpc(1 - sg, mp.im(s0)), s0))
    if va < vb:
        ineq_ok = False
check("F.inequality", mp.mpf(0) if ineq_ok else mp.mpf(1), mp.mpf("0.5"))

# zero conditions at the planted off-line zero (derivative pair for zeta_c)
for z0 in [s0, s_star]:
    symz = Symbols(z0)
    dval = mp.diff(lambda u: zeta_c(u, s0), z0)
    # tilde derivative: d/ds of zeta_c at the reflected point 1 - sigma + i rho
    tdval = mp.diff(lambda u: zeta_c(u, s0), reflect(z0))
    conds = zero_conditions_at(z0, dval, tdval, symz)
    for key, v in conds.items():
        check(f"F.{key} at {mp.nstr(z0, 8)}", v, mp.mpf("1e-18"))
    # general asymptotic variant: tan(beta+beta~) ~ tan(pi sigma0/2 + rho_theta)
    ebb = (dval / abs(dval)) * (tdval / abs(tdval))
    tsum = mp.im(ebb) / mp.re(ebb)
    asy = mp.tan(mp.pi * mp.re(z0) / 2 + symz.rho_theta)
    info(f"F.beta-sum-asy rel at {mp.nstr(z0, 8)}", rel(tsum, asy))

# ===========================================================================
print("=" * 78)
print("SECTION G: asymptotic profiles")
print("=" * 78)

def asy_forms(sg, rh, printed):
    """Large-rho profiles for Re psi, Im psi, p1, p2.

    printed=True reproduces the article's displayed expansions verbatim;
    printed=False uses the expansions rebuilt from the standard digamma
    series (DLMF 5.11.2), which the displayed forms garble.
    """
    e = mp.e ** (mp.pi * rh)
    cs = mp.cos(mp.pi * sg)
    if printed:
        re_asy = mp.log(rh) + (2 * sg ** 2 - 4 * sg + 1) / (4 * rh ** 2)
        im_asy = mp.pi / 2 + (1 - sg) / rh + sg * (2 * sg ** 2 - 6 * sg + 3) / (6 * rh ** 3)
        p1_asy = (-2 * (sg - 1) / rh + sg * (2 * sg ** 2 - 6 * sg + 3) / (3 * rh ** 3)) * e \
            + 2 * mp.pi * cs - 4 * (sg - 1) * cs / rh \
            + (2 * sg / 3) * cs * (2 * sg ** 2 - 6 * sg + 3) / rh ** 3
        p2_asy = (mp.log(rh ** 2 / (4 * mp.pi ** 2)) + (sg ** 2 - 2 * sg + mp.mpf("0.5")) / rh ** 2) * e \
            + cs * mp.log(rh ** 4 / (16 * mp.pi ** 4)) - 2 * mp.pi * mp.sin(mp.pi * sg) \
            + (2 * sg ** 2 - 4 * sg + 1) * cs / rh ** 2
    else:
        re_asy = mp.log(rh) + (6 * sg ** 2 - 6 * sg + 1) / (12 * rh ** 2)
        im_asy = mp.pi / 2 - (2 * sg - 1) / (2 * rh) + sg * (sg - 1) * (2 * sg - 1) / (6 * rh ** 3)
        p1_asy = (-(2 * sg - 1) / rh + sg * (sg - 1) * (2 * sg - 1) / (3 * rh ** 3)) * e \
            + 2 * mp.pi * cs - 2 * (2 * sg - 1) * cs / rh \
            + mp.mpf(2) / 3 * sg * (sg - 1) * (2 * sg - 1) * cs / rh ** 3
        p2_asy = (mp.log(rh ** 2 / (4 * mp.pi ** 2)) + (6 * sg ** 2 - 6 * sg + 1) / (6 * rh ** 2)) * e \
            + cs * mp.log(rh ** 4 / (16 * mp.pi ** 4)) - 2 * mp.pi * mp.sin(mp.pi * sg) \
            + (6 * sg ** 2 - 6 * sg + 1) * cs / (3 * rh ** 2)
    return re_asy, im_asy, p1_asy, p2_asy

def asym_check(sg, rh, printed):
    s = mp.mpc(sg, rh)
    ps = mp.digamma(s)
    sym = Symbols(s)
    re_asy, im_asy, p1_asy, p2_asy = asy_forms(sg, rh, printed)
    r1 = abs(mp.re(ps) - re_asy)
    r2 = abs(mp.im(ps) - im_asy)
    # p1 is identically zero on sigma = 1/2 (both sides); guard the scale
    scale = mp.e ** (mp.pi * rh) * mp.mpf("1e-25")
    r3 = abs(sym.p1 - p1_asy) / max(abs(sym.p1), abs(p1_asy), scale)
    r4 = abs(sym.p2 - p2_asy) / max(abs(sym.p2), abs(p2_asy), scale)
    return r1, r2, r3, r4

for sg, rh in [(mp.mpf("0.3"), mp.mpf(50)), (mp.mpf("0.5"), mp.mpf(50)),
               (mp.mpf("0.7"), mp.mpf(50)), (mp.mpf("0.9"), mp.mpf(50)),
               (mp.mpf(1), mp.mpf(50)), (mp.mpf("0.5"), mp.mpf(20))]:
    r1, r2, r3, r4 = asym_check(sg, rh, printed=False)
    check(f"G.psi-re-asy ({mp.nstr(sg, 3)},{mp.nstr(rh, 3)})", r1, mp.mpf("1e-5"))
    check(f"G.psi-im-asy ({mp.nstr(sg, 3)},{mp.nstr(rh, 3)})", r2, mp.mpf("1e-5"))
    if sg != mp.mpf("0.5"):
        check(f"G.p1-asy ({mp.nstr(sg, 3)},{mp.nstr(rh, 3)})", r3, mp.mpf("1e-3"))
    else:
        info(f"G.p1-asy ({mp.nstr(sg, 3)},{mp.nstr(rh, 3)}) both sides ~0, rel", r3)
    check(f"G.p2-asy ({mp.nstr(sg, 3)},{mp.nstr(rh, 3)})", r4, mp.mpf("1e-3"))

# document how far the displayed (printed) expansions sit from the function
for sg in [mp.mpf("0.3"), mp.mpf("0.5"), mp.mpf("0.9")]:
    r1, r2, r3, r4 = asym_check(sg, mp.mpf(50), printed=True)
    info(f"G.printed-form gaps (sigma={mp.nstr(sg, 3)}, rho=50)",
         f"re {mp.nstr(r1, 3)}, im {mp.nstr(r2, 3)}, p1 {mp.nstr(r3, 3)}, p2 {mp.nstr(r4, 3)}")

# ===========================================================================
print("=" * 78)
bad = [r for r in RESULTS if not r[3]]
print(f"TOTAL {len(RESULTS)} checks, {len(bad)} failing")
for name, res, tol, ok, note in bad:
    print(f"  FAILING: {name} res={mp.nstr(res, 6)} {note}")
sys.exit(0 if all(ok or name.endswith("printed]") for name, _, _, ok, _ in
                  [(r[0], r[1], r[2], r[3], r[4]) for r in RESULTS]) else 1)
