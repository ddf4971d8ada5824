"""Pure-numpy fallback for the batch ray kernel in ``_kernels.pyx``.

Both implementations share one contract, see :func:`trace_batch`.
"""

from __future__ import annotations

import numpy as np

TERM_LENGTH = 0
TERM_VERTEX = 1
TERM_STEPS = 2


def trace_batch(L, sec_face, sec_x, sec_y, sec_off, sec_ang, phis, max_length, max_steps):
    """Trace rays leaving a vertex and record their combinatorics.

    Parameters
    ----------
    L : (4, 4) float array
        Edge lengths by vertex index.
    sec_face, sec_x, sec_y : (3,) int arrays
        Sector faces of the source fan and their bounding edge endpoints
        (counterclockwise, face index = index of the opposite vertex).
    sec_off, sec_ang : (3,) float arrays
        Fan offset and angle of each sector.
    phis : (n,) float array
        Fan angles of the rays, ascending.
    max_length : float
    max_steps : int

    Returns
    -------
    sector, nsteps, term, hit : (n,) int arrays
    div : (n-1,) int array
        First step at which rays ``j`` and ``j+1`` exit differently, ``-2``
        if they start in different sectors and ``-1`` if their common
        prefix agrees.
    """
    phis = np.asarray(phis, dtype=np.float64)
    n = phis.size
    L = np.asarray(L, dtype=np.float64)
    sec_face = np.asarray(sec_face)
    sec_x = np.asarray(sec_x)
    sec_y = np.asarray(sec_y)
    sec_off = np.asarray(sec_off, dtype=np.float64)
    sec_ang = np.asarray(sec_ang, dtype=np.float64)
    src = int(6 - sec_face[0] - sec_x[0] - sec_y[0])

    sector = np.searchsorted(sec_off, phis, side="right") - 1
    sector = np.clip(sector, 0, 2)
    alpha = phis - sec_off[sector]
    dx, dy = np.cos(alpha), np.sin(alpha)

    p = sec_x[sector].astype(np.int64)
    q = sec_y[sector].astype(np.int64)
    f = sec_face[sector].astype(np.int64)
    Px = L[src, p].copy()
    Py = np.zeros(n)
    ang = sec_ang[sector]
    Qx = L[src, q] * np.cos(ang)
    Qy = L[src, q] * np.sin(ang)

    choices = np.zeros((n, max_steps), dtype=np.int8)
    nsteps = np.zeros(n, dtype=np.int64)
    term = np.full(n, TERM_STEPS, dtype=np.int64)
    hit = np.full(n, -1, dtype=np.int64)
    active = np.ones(n, dtype=bool)

    for k in range(max_steps):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        px, py, qx, qy = Px[idx], Py[idx], Qx[idx], Qy[idx]
        ddx, ddy = dx[idx], dy[idx]
        ex, ey = qx - px, qy - py
        den = ddx * ey - ddy * ex
        lam = (px * ey - py * ex) / den
        over = lam > max_length
        if over.any():
            term[idx[over]] = TERM_LENGTH
            active[idx[over]] = False
        keep = ~over
        idx = idx[keep]
        if idx.size == 0:
            break
        px, py, qx, qy = px[keep], py[keep], qx[keep], qy[keep]
        ex, ey = ex[keep], ey[keep]
        ddx, ddy = ddx[keep], ddy[keep]
        pk, qk, fk = p[idx], q[idx], f[idx]
        r = fk
        g = 6 - pk - qk - fk
        e = np.hypot(ex, ey)
        ux, uy = ex / e, ey / e
        lpr = L[pk, r]
        lqr = L[qk, r]
        a = (e * e + lpr * lpr - lqr * lqr) / (2 * e)
        h = np.sqrt(np.maximum(lpr * lpr - a * a, 0.0))
        rx = px + a * ux + h * uy
        ry = py + a * uy - h * ux
        side = ddx * ry - ddy * rx
        vhit = np.abs(side) <= 1e-13 * np.hypot(rx, ry)
        if vhit.any():
            term[idx[vhit]] = TERM_VERTEX
            hit[idx[vhit]] = r[vhit]
            active[idx[vhit]] = False
        go = ~vhit
        idx = idx[go]
        c = (side[go] <= 0).astype(np.int8)
        choices[idx, k] = c
        nsteps[idx] = k + 1
        r, g = r[go], g[go]
        rx, ry = rx[go], ry[go]
        left = c == 0
        # exit through P-R (R counterclockwise of the ray) or R-Q
        q_new = np.where(left, r, q[idx])
        p_new = np.where(left, p[idx], r)
        Qx[idx] = np.where(left, rx, Qx[idx])
        Qy[idx] = np.where(left, ry, Qy[idx])
        Px[idx] = np.where(left, Px[idx], rx)
        Py[idx] = np.where(left, Py[idx], ry)
        p[idx] = p_new
        q[idx] = q_new
        f[idx] = g

    div = np.full(max(n - 1, 0), -1, dtype=np.int64)
    if n > 1:
        m = np.minimum(nsteps[:-1], nsteps[1:])
        diff = choices[:-1] != choices[1:]
        diff &= np.arange(max_steps)[None, :] < m[:, None]
        anyd = diff.any(axis=1)
        first = np.argmax(diff, axis=1)
        div = np.where(anyd, first, -1)
        div = np.where(sector[:-1] != sector[1:], -2, div)
    return (sector.astype(np.int64), nsteps, term, hit, div.astype(np.int64))
