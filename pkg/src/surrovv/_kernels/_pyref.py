"""Pure-numpy reference kernels: fixed-step RK4 and its exact discrete adjoint.

The compiled lane (`_cyk`) implements the same entry points for the built-in
field kinds; this module is the fallback selected at import when the
extension is unavailable, and the semantic reference the extension is tested
against.

Field kinds
-----------
0  LINEAR    ẋ = A·x, A given row-major in `u`; const = [n_state]
1  SM2       single-machine-infinite-bus swing pair [δ, ω];
             const = [H, D, E', X_d', X_line, V_re, V_im, t_step],
             u = [P_m0, dP_m]
2  SM2_PERT  SM2 with the interface-current disturbance injected at every
             stage; const = SM2 const + [amp, t_on, t_off, w, phi]
"""

import math

import numpy as np

from ..errors import DivergedTrajectoryError

LINEAR = 0
SM2 = 1
SM2_PERT = 2


def _sm2_pe(delta, const):
    """Electrical power from the complex network algebra (reference path)."""
    ep, xdp, xline = const[2], const[3], const[4]
    vinf = complex(const[5], const[6])
    xeq = xdp + xline
    e = ep * complex(math.cos(delta), math.sin(delta))
    i = (e - vinf) * complex(0.0, -1.0 / xeq)
    v = vinf + complex(0.0, xline) * i
    return (v * i.conjugate()).real


def _sm2_pe_pert(delta, t, const):
    ep, xdp, xline = const[2], const[3], const[4]
    vinf = complex(const[5], const[6])
    amp, t_on, t_off, w, phi = const[8:13]
    xeq = xdp + xline
    e = ep * complex(math.cos(delta), math.sin(delta))
    i = (e - vinf) * complex(0.0, -1.0 / xeq)
    s = 0.5 * (math.tanh((t - t_on) / w) - math.tanh((t - t_off) / w))
    i = i + amp * s * complex(math.cos(phi), math.sin(phi))
    v = vinf + complex(0.0, xline) * i
    return (v * i.conjugate()).real


def _make_eval(kind, const):
    if kind == LINEAR:
        n = int(const[0])

        def ev(x, u, t):
            return u.reshape(n, n) @ x

        return ev
    if kind == SM2:

        def ev(x, u, t):
            h, d, tstep = const[0], const[1], const[7]
            pm = u[0] + (u[1] if t >= tstep else 0.0)
            pe = _sm2_pe(x[0], const)
            return np.array([x[1], (pm - pe - d * x[1]) / (2.0 * h)])

        return ev
    if kind == SM2_PERT:

        def ev(x, u, t):
            h, d, tstep = const[0], const[1], const[7]
            pm = u[0] + (u[1] if t >= tstep else 0.0)
            pe = _sm2_pe_pert(x[0], t, const)
            return np.array([x[1], (pm - pe - d * x[1]) / (2.0 * h)])

        return ev
    raise ValueError(f"unknown field kind {kind}")


def _make_jacs(kind, const):
    """Analytic (jac_state, jac_param) callables for differentiable kinds."""
    if kind == LINEAR:
        n = int(const[0])

        def jx(x, u, t):
            return u.reshape(n, n).copy()

        def ju(x, u, t):
            j = np.zeros((n, n * n))
            for i in range(n):
                j[i, i * n : (i + 1) * n] = x
            return j

        return jx, ju
    if kind == SM2:
        h, d = const[0], const[1]
        ep, xdp, xline = const[2], const[3], const[4]
        vm = math.hypot(const[5], const[6])
        th = math.atan2(const[6], const[5])
        xeq = xdp + xline
        tstep = const[7]

        def jx(x, u, t):
            dpe = ep * vm * math.cos(x[0] - th) / xeq
            return np.array([[0.0, 1.0], [-dpe / (2.0 * h), -d / (2.0 * h)]])

        def ju(x, u, t):
            ind = 1.0 if t >= tstep else 0.0
            return np.array([[0.0, 0.0], [1.0 / (2.0 * h), ind / (2.0 * h)]])

        return jx, ju
    raise ValueError(f"field kind {kind} has no adjoint support")


def rk4_generic(ev, x0, u, t0, dt, n_steps):
    """Classical 4-stage RK4 with fixed step over any eval callable."""
    n = len(x0)
    states = np.empty((n_steps + 1, n))
    states[0] = x0
    x = np.asarray(x0, dtype=float).copy()
    half = 0.5 * dt
    for k in range(n_steps):
        t = t0 + k * dt
        k1 = ev(x, u, t)
        k2 = ev(x + half * k1, u, t + half)
        k3 = ev(x + half * k2, u, t + half)
        k4 = ev(x + dt * k3, u, t + dt)
        x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.isfinite(x).all():
            raise DivergedTrajectoryError(k + 1)
        states[k + 1] = x
    return states


def adjoint_generic(ev, jx, ju, x0, u, t0, dt, n_steps, states, grad_states):
    """Exact reverse-mode sweep through the discrete RK4 map.

    grad_states holds ∂J/∂(row k) for every grid row; stages are recomputed
    from the stored forward states, so memory stays O(n).
    """
    n_param = len(u)
    g_u = np.zeros(n_param)
    lam = np.asarray(grad_states[n_steps], dtype=float).copy()
    half = 0.5 * dt
    for k in range(n_steps - 1, -1, -1):
        t = t0 + k * dt
        x = states[k]
        k1 = ev(x, u, t)
        x2i = x + half * k1
        k2 = ev(x2i, u, t + half)
        x3i = x + half * k2
        k3 = ev(x3i, u, t + half)
        x4i = x + dt * k3

        bar_x = lam.copy()
        bar_k1 = (dt / 6.0) * lam
        bar_k2 = (dt / 3.0) * lam
        bar_k3 = (dt / 3.0) * lam
        bar_k4 = (dt / 6.0) * lam

        a4 = jx(x4i, u, t + dt).T @ bar_k4
        bar_x += a4
        bar_k3 = bar_k3 + dt * a4
        if n_param:
            g_u += ju(x4i, u, t + dt).T @ bar_k4

        a3 = jx(x3i, u, t + half).T @ bar_k3
        bar_x += a3
        bar_k2 = bar_k2 + half * a3
        if n_param:
            g_u += ju(x3i, u, t + half).T @ bar_k3

        a2 = jx(x2i, u, t + half).T @ bar_k2
        bar_x += a2
        bar_k1 = bar_k1 + half * a2
        if n_param:
            g_u += ju(x2i, u, t + half).T @ bar_k2

        a1 = jx(x, u, t).T @ bar_k1
        bar_x += a1
        if n_param:
            g_u += ju(x, u, t).T @ bar_k1

        lam = bar_x + grad_states[k]
    return lam, g_u


def integrate(kind, const, u, x0, t0, dt, n_steps):
    """Integrate a built-in field kind; returns the (n_steps+1, n) state matrix."""
    const = np.asarray(const, dtype=float)
    u = np.asarray(u, dtype=float)
    return rk4_generic(_make_eval(kind, const), x0, u, t0, dt, n_steps)


def adjoint(kind, const, u, x0, t0, dt, n_steps, states, grad_states):
    """Reverse-mode (grad_x0, grad_u) for a built-in differentiable kind."""
    const = np.asarray(const, dtype=float)
    u = np.asarray(u, dtype=float)
    ev = _make_eval(kind, const)
    jx, ju = _make_jacs(kind, const)
    return adjoint_generic(ev, jx, ju, x0, u, t0, dt, n_steps, states, grad_states)
