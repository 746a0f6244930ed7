"""Numba-compiled twins of the hot kernels in ``_impl_numpy``.

Importing this module raises ImportError when numba is unavailable; the
backend module catches that and falls back to the numpy implementations.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _cantor_scalar(u):
    x = u
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    out = 0.0
    scale = 0.5
    for _ in range(64):
        d = int(3.0 * x)
        if d > 2:
            d = 2
        if d == 1:
            return out + scale
        if d == 2:
            out += scale
        x = 3.0 * x - d
        scale *= 0.5
    return out


@njit(cache=True)
def cantor_map(u):
    out = np.empty(u.size, dtype=np.float64)
    flat = u.ravel()
    for k in range(flat.size):
        out[k] = _cantor_scalar(flat[k])
    return out.reshape(u.shape)


@njit(cache=True)
def _cantor_integral_scalar(u):
    x = u
    if x <= 0.0:
        return 0.0
    if x > 1.0:
        x = 1.0
    acc = 0.0
    coeff = 1.0
    for _ in range(80):
        if x < 1.0 / 3.0:
            coeff /= 6.0
            x *= 3.0
            if x <= 0.0:
                break
        elif x <= 2.0 / 3.0:
            acc += coeff * (1.0 / 12.0 + 0.5 * (x - 1.0 / 3.0))
            break
        else:
            acc += coeff * (x - 0.5)
            x = 1.0 - x
    return acc


@njit(cache=True)
def cantor_integral(u):
    out = np.empty(u.size, dtype=np.float64)
    flat = u.ravel()
    for k in range(flat.size):
        out[k] = _cantor_integral_scalar(flat[k])
    return out.reshape(u.shape)


@njit(cache=True)
def trig_eval(coeffs, x):
    m = coeffs.size
    n = (m - 1) // 2
    out = np.empty(x.size, dtype=np.complex128)
    flat = x.ravel()
    for k in range(flat.size):
        z = np.exp(1j * flat[k])
        acc = coeffs[m - 1] + 0.0j
        for j in range(m - 2, -1, -1):
            acc = acc * z + coeffs[j]
        out[k] = acc * np.exp(-1j * n * flat[k])
    return out.reshape(x.shape)


@njit(cache=True)
def real_oscillation(values, drift):
    v0 = values[0]
    vmax = v0
    vmin = v0
    premax = v0
    premin = v0
    best_a = drift + premax - v0
    best_b = -drift + v0 - premin
    for k in range(1, values.size):
        v = values[k]
        if v > vmax:
            vmax = v
        if v < vmin:
            vmin = v
        a = drift + premax - v
        if a > best_a:
            best_a = a
        b = -drift + v - premin
        if b > best_b:
            best_b = b
        if v > premax:
            premax = v
        if v < premin:
            premin = v
    out = vmax - vmin
    if best_a > out:
        out = best_a
    if best_b > out:
        out = best_b
    if out < 0.0:
        out = 0.0
    return out


@njit(cache=True)
def complex_oscillation_scan(re, im, dre, dim, cos_t, sin_t):
    n = re.size
    best = -1.0
    best_re = 0.0
    best_im = 0.0
    for a in range(cos_t.size):
        ct = cos_t[a]
        st = sin_t[a]
        i_max = 0
        i_min = 0
        w_max = re[0] * ct + im[0] * st
        w_min = w_max
        premax = w_max
        premin = w_max
        pmi = 0
        pni = 0
        fa_val = -1e300
        fa_i = 0
        fa_j = 0
        fb_val = -1e300
        fb_i = 0
        fb_j = 0
        for k in range(n):
            w = re[k] * ct + im[k] * st
            if w > w_max:
                w_max = w
                i_max = k
            if w < w_min:
                w_min = w
                i_min = k
            a_val = premax - w
            if a_val > fa_val:
                fa_val = a_val
                fa_i = pmi
                fa_j = k
            b_val = w - premin
            if b_val > fb_val:
                fb_val = b_val
                fb_i = k
                fb_j = pni
            if w > premax:
                premax = w
                pmi = k
            if w < premin:
                premin = w
                pni = k
        for p in range(3):
            if p == 0:
                i = i_max
                j = i_min
                shift = 0.0
            elif p == 1:
                i = fa_i
                j = fa_j
                shift = 1.0
            else:
                i = fb_i
                j = fb_j
                shift = -1.0
            vr = re[i] - re[j] + shift * dre
            vi = im[i] - im[j] + shift * dim
            mod = np.sqrt(vr * vr + vi * vi)
            if mod > best:
                best = mod
                best_re = vr
                best_im = vi
    return best, best_re, best_im


@njit(cache=True)
def piecewise_eval(breaks, coeffs, t, left):
    m = breaks.size
    out = np.empty(t.size, dtype=coeffs.dtype)
    flat = t.ravel()
    two_pi = 2.0 * np.pi
    for k in range(flat.size):
        x = flat[k]
        lo = 0
        hi = m
        while lo < hi:
            mid = (lo + hi) // 2
            if breaks[mid] < x or (not left and breaks[mid] == x):
                lo = mid + 1
            else:
                hi = mid
        i = lo - 1
        xi = x
        if i < 0:
            i = m - 1
            xi = x + two_pi
        xi = xi - breaks[i]
        out[k] = ((coeffs[i, 3] * xi + coeffs[i, 2]) * xi + coeffs[i, 1]) * xi + coeffs[i, 0]
    return out.reshape(t.shape)
