"""Deterministic adaptive Gauss-Kronrod quadrature in one and two dimensions.

The 2d integrator applies a tensor (G7, K15) rule per rectangle, splits the
rectangle with the largest error estimate into four, and stops when the
summed error estimate drops below the tolerance.  Subdivision order is a
deterministic function of the inputs, so results are bit-reproducible.
All integrands are evaluated on numpy arrays.
"""

from __future__ import annotations

import heapq

import numpy as np

from .errors import ToleranceNotReached

# 15-point Kronrod nodes (ascending) with embedded 7-point Gauss subset.
_KRONROD_NODES = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813,
])
_KRONROD_WEIGHTS = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529,
])
_GAUSS_IDX = np.arange(1, 15, 2)
_GAUSS_WEIGHTS = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870,
])


def _panel_1d(f, a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid + half * _KRONROD_NODES
    y = np.asarray(f(x), dtype=float)
    kron = half * float(_KRONROD_WEIGHTS @ y)
    gauss = half * float(_GAUSS_WEIGHTS @ y[_GAUSS_IDX])
    return kron, abs(kron - gauss)


def adaptive_quad(f, a: float, b: float, tol: float = 1e-12,
                  limit: int = 2000) -> tuple[float, float]:
    """Integrate a vectorized scalar function over [a, b]."""
    if a == b:
        return 0.0, 0.0
    val, err = _panel_1d(f, a, b)
    heap = [(-err, 0, a, b, val, err)]
    counter = 1
    total_val, total_err = val, err
    while total_err > tol and len(heap) < limit:
        neg_err, _, lo, hi, pval, perr = heapq.heappop(heap)
        total_val -= pval
        total_err -= perr
        mid = 0.5 * (lo + hi)
        for seg in ((lo, mid), (mid, hi)):
            v, e = _panel_1d(f, *seg)
            heapq.heappush(heap, (-e, counter, seg[0], seg[1], v, e))
            counter += 1
            total_val += v
            total_err += e
    return total_val, total_err


def _panel_2d(f, rect) -> tuple[float, float]:
    x0, x1, y0, y1 = rect
    hx, hy = 0.5 * (x1 - x0), 0.5 * (y1 - y0)
    xs = 0.5 * (x0 + x1) + hx * _KRONROD_NODES
    ys = 0.5 * (y0 + y1) + hy * _KRONROD_NODES
    xg, yg = np.meshgrid(xs, ys, indexing="ij")
    vals = np.asarray(f(xg, yg), dtype=float)
    kron = hx * hy * float(_KRONROD_WEIGHTS @ vals @ _KRONROD_WEIGHTS)
    sub = vals[np.ix_(_GAUSS_IDX, _GAUSS_IDX)]
    gauss = hx * hy * float(_GAUSS_WEIGHTS @ sub @ _GAUSS_WEIGHTS)
    return kron, abs(kron - gauss)


def adaptive_quad_2d(f, xspan, yspan, tol: float = 1e-8,
                     max_panels: int = 20000) -> tuple[float, float]:
    """Integrate a vectorized f(x, y) over a rectangle to absolute
    tolerance `tol`.

    Raises ToleranceNotReached (carrying the best value and error bound)
    when the panel budget is exhausted first.
    """
    rect = (float(xspan[0]), float(xspan[1]), float(yspan[0]), float(yspan[1]))
    val, err = _panel_2d(f, rect)
    heap = [(-err, 0, rect, val, err)]
    counter = 1
    total_val, total_err = val, err
    while total_err > tol:
        if len(heap) >= max_panels or not heap:
            raise ToleranceNotReached(total_val, total_err)
        neg_err, _, r, pval, perr = heapq.heappop(heap)
        total_val -= pval
        total_err -= perr
        x0, x1, y0, y1 = r
        xm, ym = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
        for sub in ((x0, xm, y0, ym), (xm, x1, y0, ym),
                    (x0, xm, ym, y1), (xm, x1, ym, y1)):
            v, e = _panel_2d(f, sub)
            heapq.heappush(heap, (-e, counter, sub, v, e))
            counter += 1
            total_val += v
            total_err += e
    return total_val, total_err
