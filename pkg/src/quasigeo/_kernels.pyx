# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch ray kernel; same contract as ``_kernels_py.trace_batch``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, fabs, hypot

cnp.import_array()


def trace_batch(L_in, sec_face_in, sec_x_in, sec_y_in, sec_off_in, sec_ang_in,
                phis_in, double max_length, int max_steps):
    cdef double[:, ::1] L = np.ascontiguousarray(L_in, dtype=np.float64)
    cdef long[::1] sec_face = np.ascontiguousarray(sec_face_in, dtype=np.int64)
    cdef long[::1] sec_x = np.ascontiguousarray(sec_x_in, dtype=np.int64)
    cdef long[::1] sec_y = np.ascontiguousarray(sec_y_in, dtype=np.int64)
    cdef double[::1] sec_off = np.ascontiguousarray(sec_off_in, dtype=np.float64)
    cdef double[::1] sec_ang = np.ascontiguousarray(sec_ang_in, dtype=np.float64)
    cdef double[::1] phis = np.ascontiguousarray(phis_in, dtype=np.float64)
    cdef Py_ssize_t n = phis.shape[0]

    sector_a = np.zeros(n, dtype=np.int64)
    nsteps_a = np.zeros(n, dtype=np.int64)
    term_a = np.full(n, 2, dtype=np.int64)
    hit_a = np.full(n, -1, dtype=np.int64)
    div_a = np.full(n - 1 if n > 1 else 0, -1, dtype=np.int64)
    cdef long[::1] sector = sector_a
    cdef long[::1] nsteps = nsteps_a
    cdef long[::1] term = term_a
    cdef long[::1] hit = hit_a
    cdef long[::1] div = div_a

    prev_a = np.zeros(max_steps, dtype=np.int8)
    cur_a = np.zeros(max_steps, dtype=np.int8)
    cdef signed char[::1] prev = prev_a
    cdef signed char[::1] cur = cur_a
    cdef signed char[::1] tmp

    cdef long src = 6 - sec_face[0] - sec_x[0] - sec_y[0]
    cdef Py_ssize_t j, k, m
    cdef long s, p, q, f, r, g
    cdef double alpha, dx, dy, Px, Py, Qx, Qy, ex, ey, den, lam, e, ux, uy
    cdef double lpr, lqr, a, h, rx, ry, side, ang
    cdef long prev_n = 0, prev_sector = -1
    cdef signed char c

    for j in range(n):
        s = 0
        if phis[j] >= sec_off[1]:
            s = 1
        if phis[j] >= sec_off[2]:
            s = 2
        sector[j] = s
        alpha = phis[j] - sec_off[s]
        dx = cos(alpha)
        dy = sin(alpha)
        p = sec_x[s]
        q = sec_y[s]
        f = sec_face[s]
        Px = L[src, p]
        Py = 0.0
        ang = sec_ang[s]
        Qx = L[src, q] * cos(ang)
        Qy = L[src, q] * sin(ang)
        k = 0
        while k < max_steps:
            ex = Qx - Px
            ey = Qy - Py
            den = dx * ey - dy * ex
            lam = (Px * ey - Py * ex) / den
            if lam > max_length:
                term[j] = 0
                break
            r = f
            g = 6 - p - q - f
            e = hypot(ex, ey)
            ux = ex / e
            uy = ey / e
            lpr = L[p, r]
            lqr = L[q, r]
            a = (e * e + lpr * lpr - lqr * lqr) / (2 * e)
            h = lpr * lpr - a * a
            h = sqrt(h) if h > 0 else 0.0
            rx = Px + a * ux + h * uy
            ry = Py + a * uy - h * ux
            side = dx * ry - dy * rx
            if fabs(side) <= 1e-13 * hypot(rx, ry):
                term[j] = 1
                hit[j] = r
                break
            if side > 0:
                c = 0
                q = r
                Qx = rx
                Qy = ry
            else:
                c = 1
                p = r
                Px = rx
                Py = ry
            cur[k] = c
            f = g
            k += 1
        nsteps[j] = k
        if j > 0:
            if prev_sector != s:
                div[j - 1] = -2
            else:
                m = k if k < prev_n else prev_n
                for k in range(m):
                    if cur[k] != prev[k]:
                        div[j - 1] = k
                        break
        tmp = prev
        prev = cur
        cur = tmp
        prev_n = nsteps[j]
        prev_sector = s
    return sector_a, nsteps_a, term_a, hit_a, div_a
