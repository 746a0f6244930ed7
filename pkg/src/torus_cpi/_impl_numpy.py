"""Pure-numpy implementations of the hot kernels.

Every function here has a numba twin in ``_impl_numba``; the active set is
chosen in ``backend``. Keep signatures in sync between the two modules.
"""

import numpy as np


def cantor_map(u):
    """Standard Cantor function on [0, 1], vectorized.

    Ternary-digit walk: digits 0/2 emit binary digits 0/1, the first digit 1
    emits a trailing 1 and stops.
    """
    u = np.asarray(u, dtype=np.float64)
    out = np.zeros_like(u)
    x = np.clip(u, 0.0, 1.0).copy()
    scale = np.full_like(u, 0.5)
    active = np.ones(u.shape, dtype=bool)
    for _ in range(64):
        if not active.any():
            break
        d = np.floor(3.0 * x).astype(np.int64)
        d = np.minimum(d, 2)
        hit_mid = active & (d == 1)
        out[hit_mid] += scale[hit_mid]
        active = active & (d != 1)
        up = active & (d == 2)
        out[up] += scale[up]
        x = np.where(active, 3.0 * x - d, x)
        scale = np.where(active, 0.5 * scale, scale)
    return out


def cantor_integral(u):
    """Integral of the Cantor function: M(x) = int_0^x c, on [0, 1].

    Self-similarity gives M(x) = M(3x)/6 on [0,1/3],
    M(x) = 1/12 + (x-1/3)/2 on [1/3,2/3], and
    M(x) = (x - 1/2) + M(1-x) on [2/3,1].
    """
    u = np.asarray(u, dtype=np.float64)
    x = np.clip(u, 0.0, 1.0).copy()
    acc = np.zeros_like(x)
    coeff = np.ones_like(x)
    active = np.ones(x.shape, dtype=bool)
    for _ in range(80):
        if not active.any():
            break
        lo = active & (x < 1.0 / 3.0)
        mid = active & (x >= 1.0 / 3.0) & (x <= 2.0 / 3.0)
        hi = active & (x > 2.0 / 3.0)
        acc[mid] += coeff[mid] * (1.0 / 12.0 + 0.5 * (x[mid] - 1.0 / 3.0))
        active = active & ~mid
        coeff[lo] /= 6.0
        x[lo] *= 3.0
        acc[hi] += coeff[hi] * (x[hi] - 0.5)
        x[hi] = 1.0 - x[hi]
    return acc


def trig_eval(coeffs, x):
    """Evaluate sum_k c[k] e^{i k x} for k = -n..n; coeffs has length 2n+1."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    x = np.asarray(x, dtype=np.float64)
    n = (len(coeffs) - 1) // 2
    z = np.exp(1j * x)
    acc = np.zeros(x.shape, dtype=np.complex128)
    # Horner in z, starting from the highest index.
    for j in range(len(coeffs) - 1, -1, -1):
        acc = acc * z + coeffs[j]
    return acc * np.exp(-1j * n * x)


def real_oscillation(values, drift):
    """Max of |F(b) - F(a)| over pairs with |b - a| <= 2 pi, real case.

    ``values`` samples one period of the primitive; extension adds ``drift``
    per period. Candidate families: both points in the base period, or the
    earlier point shifted up one period.
    """
    v = np.asarray(values, dtype=np.float64)
    c = v.max() - v.min()
    premax = np.maximum.accumulate(v)
    premin = np.minimum.accumulate(v)
    a = drift + np.max(premax - v)
    b = -drift + np.max(v - premin)
    return max(c, a, b, 0.0)


def complex_oscillation_scan(re, im, dre, dim, cos_t, sin_t):
    """Directional scan for the complex oscillation.

    For each direction theta, project onto it and extract the three
    candidate maximizing pairs (global max/min, forward-shifted, and
    backward-shifted); the exact complex modulus of each pair difference is
    a lower bound for the oscillation. Returns the best modulus found plus
    the pair difference components (used to polish the direction).
    """
    re = np.asarray(re)
    im = np.asarray(im)
    idx = np.arange(re.size)
    best = -1.0
    best_re = 0.0
    best_im = 0.0
    for ct, st in zip(cos_t, sin_t):
        w = re * ct + im * st
        i_max = int(np.argmax(w))
        i_min = int(np.argmin(w))
        pm = np.maximum.accumulate(w)
        pmi = np.maximum.accumulate(np.where(w >= pm, idx, -1))
        pn = np.minimum.accumulate(w)
        pni = np.maximum.accumulate(np.where(w <= pn, idx, -1))
        xa = int(np.argmax(pm - w))
        xb = int(np.argmax(w - pn))
        pairs = (
            (i_max, i_min, 0.0),
            (int(pmi[xa]), xa, 1.0),
            (xb, int(pni[xb]), -1.0),
        )
        for i, j, shift in pairs:
            vr = re[i] - re[j] + shift * dre
            vi = im[i] - im[j] + shift * dim
            mod = np.hypot(vr, vi)
            if mod > best:
                best = mod
                best_re = vr
                best_im = vi
    return best, best_re, best_im


def piecewise_eval(breaks, coeffs, t, left):
    """Evaluate a piecewise cubic with local coordinates.

    ``breaks`` are sorted with breaks[0] == -pi; piece i covers
    [breaks[i], breaks[i+1]) with polynomial sum_m coeffs[i, m] (t - breaks[i])^m.
    ``left=True`` evaluates one-sided left limits (points exactly on a
    breakpoint use the previous piece).
    """
    t = np.asarray(t, dtype=np.float64)
    side = "left" if left else "right"
    i = np.searchsorted(breaks, t, side=side) - 1
    wrapped = i < 0
    i = np.where(wrapped, len(breaks) - 1, i)
    xi = t - breaks[i]
    xi = np.where(wrapped, xi + 2.0 * np.pi, xi)
    c = coeffs[i]
    return ((c[..., 3] * xi + c[..., 2]) * xi + c[..., 1]) * xi + c[..., 0]
