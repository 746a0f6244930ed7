"""Quadrature engines.

Three flavours cover every integral in the package:

* ``refining_simpson`` - composite Simpson with panel doubling, used where a
  panel count scaled to an oscillation frequency is prescribed.
* ``adaptive_simpson`` - breadth-first adaptive Simpson with Richardson
  correction, vectorized over the interval work set.
* ``OscillatoryPowerTail`` - semi-analytic evaluator for
  int_A^inf u^s e^{iu} du, the tail integral behind the x^{-k} sin(x^{-4})
  style primitives (no panel rule can resolve those phases directly).
"""

import numpy as np

# 10-point Gauss-Legendre rule on [-1, 1].
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def composite_simpson(fn, a, b, panels):
    """Composite Simpson with ``panels`` panels (2*panels+1 evaluations)."""
    t = np.linspace(a, b, 2 * panels + 1)
    y = fn(t)
    h = (b - a) / (2.0 * panels)
    return (h / 3.0) * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def refining_simpson(fn, a, b, initial_panels, rel_tol=1e-8, abs_floor=0.0,
                     max_panels=1 << 21):
    """Panel-doubling composite Simpson.

    Returns (value, error_estimate, converged); the error estimate is the
    last inter-level change.
    """
    if a == b:
        return 0.0, 0.0, True
    panels = max(int(initial_panels), 1)
    prev = composite_simpson(fn, a, b, panels)
    while True:
        panels *= 2
        cur = composite_simpson(fn, a, b, panels)
        change = abs(cur - prev)
        if change <= max(rel_tol * abs(cur), abs_floor):
            return cur, change, True
        if panels >= max_panels:
            return cur, change, False
        prev = cur


def _simpson_batch(fn, lo, hi):
    """One-level Simpson values for a batch of intervals."""
    mid = 0.5 * (lo + hi)
    pts = np.concatenate([lo, mid, hi])
    y = fn(pts)
    n = lo.size
    return (hi - lo) / 6.0 * (y[:n] + 4.0 * y[n:2 * n] + y[2 * n:])


def adaptive_simpson(fn, a, b, tol=1e-10, max_depth=48, max_active=400000):
    """Breadth-first adaptive Simpson with Richardson correction.

    Splits every interval whose two-half error estimate exceeds its
    width-proportional share of ``tol``. Returns
    (value, error_estimate, converged).
    """
    if a == b:
        return 0.0, 0.0, True
    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0
    span = b - a
    lo = np.array([a])
    hi = np.array([b])
    s_whole = _simpson_batch(fn, lo, hi)
    total = 0.0 + 0.0j
    err_total = 0.0
    converged = True
    for depth in range(max_depth):
        mid = 0.5 * (lo + hi)
        s_left = _simpson_batch(fn, lo, mid)
        s_right = _simpson_batch(fn, mid, hi)
        s2 = s_left + s_right
        err = np.abs(s2 - s_whole) / 15.0
        budget = tol * (hi - lo) / span
        done = err <= budget
        if depth == max_depth - 1:
            done = np.ones_like(done)
            converged = False
        corrected = s2 + (s2 - s_whole) / 15.0
        total += corrected[done].sum()
        err_total += err[done].sum()
        keep = ~done
        if not keep.any():
            break
        lo = np.concatenate([lo[keep], mid[keep]])
        hi = np.concatenate([mid[keep], hi[keep]])
        s_whole = np.concatenate([s_left[keep], s_right[keep]])
        if lo.size > max_active:
            # Give up on precision rather than memory; absorb what is left.
            total += s_whole.sum()
            err_total += np.abs(s_whole).sum() * 1e-2
            converged = False
            break
    total = sign * total
    if abs(total.imag) == 0.0:
        total = total.real
    return total, float(err_total), converged


def graded_gauss(fn, a, b, singular_end, levels=52, rule=(_GL_NODES, _GL_WEIGHTS)):
    """Gauss panels graded geometrically toward one integrable singularity.

    Interior nodes only, so the integrand is never evaluated at the singular
    endpoint itself.
    """
    if a == b:
        return 0.0
    nodes, weights = rule
    width = b - a
    fracs = np.concatenate([[0.0], 0.5 ** np.arange(levels, -1, -1.0)])
    if singular_end == "a":
        edges = a + width * fracs
    elif singular_end == "b":
        edges = np.sort(b - width * fracs)
    else:
        raise ValueError("singular_end must be 'a' or 'b'")
    lo = edges[:-1]
    hi = edges[1:]
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    pts = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    vals = np.asarray(fn(pts)).reshape(lo.size, -1)
    return ((vals * weights[None, :]).sum(axis=1) * half).sum()


def integral_with_singularities(fn, a, b, singular_points=(), tol=1e-10):
    """Adaptive integral with pre-splitting at known singular abscissas."""
    cuts = [a, b]
    for s in singular_points:
        if a < s < b:
            cuts.append(float(s))
    cuts = sorted(set(cuts))
    total = 0.0
    err = 0.0
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        sing_lo = any(abs(lo - s) < 1e-14 for s in singular_points)
        sing_hi = any(abs(hi - s) < 1e-14 for s in singular_points)
        if sing_lo and sing_hi:
            mid = 0.5 * (lo + hi)
            total += graded_gauss(fn, lo, mid, "a") + graded_gauss(fn, mid, hi, "b")
        elif sing_lo:
            total += graded_gauss(fn, lo, hi, "a")
        elif sing_hi:
            total += graded_gauss(fn, lo, hi, "b")
        else:
            v, e, _ = adaptive_simpson(fn, lo, hi, tol=tol)
            total += v
            err += e
    return total, err


class OscillatoryPowerTail:
    """Evaluator for I_s(A) = int_A^inf u^s e^{iu} du  (s < 0, A > 0).

    Repeated integration by parts gives

        I_s(A) = e^{iA} sum_k i^{k+1} s(s-1)...(s-k+1) A^{s-k} + R,

    which reaches machine precision for A >= ``switch``. Below the switch
    the integral is completed with phase-resolved Gauss panels on a cached
    knot grid, so arbitrary batches of query points cost one small Gauss
    panel each.
    """

    def __init__(self, s, a_min=1e-3, switch=60.0, phase_step=np.pi / 32.0):
        if s >= 0:
            raise ValueError("power must be negative")
        self.s = float(s)
        self.switch = float(switch)
        geo = np.geomspace(a_min, 1.0, 160)
        lin = np.arange(1.0, switch, phase_step)
        knots = np.unique(np.concatenate([geo, lin, [switch]]))
        self.knots = knots
        panel = self._panel_integrals(knots[:-1], knots[1:])
        cum = np.zeros(knots.size, dtype=np.complex128)
        cum[:-1] = panel[::-1].cumsum()[::-1]
        self.cumulative = cum
        self.tail_at_switch = self._asymptotic(np.array([self.switch]))[0]

    def _panel_integrals(self, lo, hi):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        pts = mid[:, None] + half[:, None] * _GL_NODES[None, :]
        vals = pts ** self.s * np.exp(1j * pts)
        return (vals * _GL_WEIGHTS[None, :]).sum(axis=1) * half

    def _asymptotic(self, A, terms=48):
        s = self.s
        acc = np.zeros(A.shape, dtype=np.complex128)
        coef = 1j
        power = A ** s
        for k in range(terms):
            acc += coef * power
            coef = coef * 1j * (s - k)
            power = power / A
            if np.all(np.abs(coef) * power < 1e-17 * np.maximum(np.abs(acc), 1e-300)):
                break
        return acc * np.exp(1j * A)

    def __call__(self, A):
        A = np.asarray(A, dtype=np.float64)
        scalar = A.ndim == 0
        A = np.atleast_1d(A)
        if np.any(A < self.knots[0]):
            raise ValueError("query below the tabulated range")
        out = np.empty(A.shape, dtype=np.complex128)
        far = A >= self.switch
        if far.any():
            out[far] = self._asymptotic(A[far])
        near = ~far
        if near.any():
            a = A[near]
            idx = np.searchsorted(self.knots, a, side="right")
            idx = np.minimum(idx, self.knots.size - 1)
            part = self._panel_integrals(a, self.knots[idx])
            out[near] = part + self.cumulative[idx] + self.tail_at_switch
        return out[0] if scalar else out


_TAILS = {}


def oscillatory_power_tail(s):
    """Cached ``OscillatoryPowerTail`` for a given power."""
    key = round(float(s), 12)
    if key not in _TAILS:
        _TAILS[key] = OscillatoryPowerTail(key)
    return _TAILS[key]
