"""Grid version of the transform that carries twisted operators to sources.

``T u(x, y) = (2 pi)^(-1/2) int e^(-i z y) u(beta x + alpha z, beta x + beta gamma/delta z) dz``
``T^-1 v(x, y) = (2 pi)^(-1/2) int e^(i t delta (x - y)) v(alpha delta/beta y - gamma x, t) dt``

Both integrals are trapezoid sums; off-grid samples come from splines.
"""

from __future__ import annotations

import warnings

import numpy as np
from scipy.interpolate import RectBivariateSpline, make_interp_spline

from ..operators.symbols import TwistedFrame
from .report import CheckReport

DEFAULT_L = 10.0
DEFAULT_N = 256
SPLINE_ORDER = 5
BOUNDARY_TOL = 1e-12


class Grid:
    """Uniform ``N x N`` grid on ``[-L, L]^2``; arrays are indexed ``[ix, iy]``."""

    def __init__(self, L: float = DEFAULT_L, N: int = DEFAULT_N):
        self.L, self.N = float(L), int(N)
        self.x = np.linspace(-L, L, N)
        self.h = self.x[1] - self.x[0]

    def mesh(self):
        return np.meshgrid(self.x, self.x, indexing="ij")

    def l2(self, f: np.ndarray) -> float:
        return float(np.sqrt(np.sum(np.abs(f) ** 2)) * self.h)


def _boundary_mass(f: np.ndarray) -> float:
    edge = np.concatenate([f[0], f[-1], f[:, 0], f[:, -1]])
    return float(np.max(np.abs(edge)) / max(np.max(np.abs(f)), 1e-300))


def _check_boundary(f: np.ndarray, what: str) -> None:
    m = _boundary_mass(f)
    if m > BOUNDARY_TOL:
        warnings.warn(f"{what} is not negligible at the grid boundary ({m:.1e})", RuntimeWarning)


def _spline2d(grid: Grid, f: np.ndarray, k: int):
    re = RectBivariateSpline(grid.x, grid.x, f.real, kx=k, ky=k)
    im = RectBivariateSpline(grid.x, grid.x, f.imag, kx=k, ky=k)

    def ev(a, b):
        inside = (np.abs(a) <= grid.L) & (np.abs(b) <= grid.L)
        out = np.zeros(a.shape, dtype=complex)
        out[inside] = re.ev(a[inside], b[inside]) + 1j * im.ev(a[inside], b[inside])
        return out

    return ev


def transform_T(f: np.ndarray, frame: TwistedFrame, grid: Grid, nz: int | None = None,
                order: int = SPLINE_ORDER, check_boundary: bool = True) -> np.ndarray:
    frame.validate()
    if check_boundary:
        _check_boundary(f, "input")
    al, be, ga, de = (float(v) for v in (frame.alpha, frame.beta, frame.gamma, frame.delta))
    c2 = be * ga / de
    # z-range: both arguments must be able to reach the square
    slopes = [abs(s) for s in (al, c2) if s != 0]
    zmax = (grid.L + abs(be) * grid.L) / min(slopes)
    hz = grid.h / max(abs(al), abs(c2))
    nz = nz or int(np.ceil(2 * zmax / hz)) + 1
    z = np.linspace(-zmax, zmax, nz)
    wz = np.full(nz, z[1] - z[0])
    wz[[0, -1]] *= 0.5
    ev = _spline2d(grid, f, order)
    X, Z = np.meshgrid(grid.x, z, indexing="ij")
    samples = ev(be * X + al * Z, be * X + c2 * Z)  # [ix, iz]
    kernel = np.exp(-1j * np.outer(z, grid.x)) * wz[:, None]  # [iz, iy]
    return samples @ kernel / np.sqrt(2 * np.pi)


def transform_T_inverse(g: np.ndarray, frame: TwistedFrame, grid: Grid,
                        order: int = SPLINE_ORDER, check_boundary: bool = True) -> np.ndarray:
    frame.validate()
    if check_boundary:
        _check_boundary(g, "input")
    al, be, ga, de = (float(v) for v in (frame.alpha, frame.beta, frame.gamma, frame.delta))
    t = grid.x
    wt = np.full(grid.N, grid.h)
    wt[[0, -1]] *= 0.5
    spline = make_interp_spline(grid.x, g, k=order, axis=0)
    X, Y = np.meshgrid(grid.x, grid.x, indexing="ij")
    first = (al * de / be) * Y - ga * X
    inside = np.abs(first) <= grid.L
    vals = np.zeros((grid.N, grid.N, grid.N), dtype=complex)  # [ix, iy, it]
    vals[inside] = spline(first[inside])
    phase = np.exp(1j * de * (X - Y)[:, :, None] * t[None, None, :])
    return np.einsum("xyt,xyt,t->xy", vals, phase, wt) / np.sqrt(2 * np.pi)


def _spectral_d(f: np.ndarray, grid: Grid, axis: int) -> np.ndarray:
    """``-i d/dx`` along ``axis`` via the discrete Fourier transform."""
    k = 2 * np.pi * np.fft.fftfreq(grid.N, d=grid.h)
    shape = [1, 1]
    shape[axis] = grid.N
    # the periodic extension of [-L, L] closes at x = L + h
    return np.fft.ifft(k.reshape(shape) * np.fft.fft(f, axis=axis), axis=axis)


def _rel(a: np.ndarray, b: np.ndarray, grid: Grid) -> float:
    return grid.l2(a - b) / max(grid.l2(b), 1e-300)


def roundtrip_check(f: np.ndarray, frame: TwistedFrame, grid: Grid, tol: float = 1e-6,
                    name: str = "transform_roundtrip", order: int = SPLINE_ORDER) -> CheckReport:
    Tu = transform_T(f, frame, grid, order=order)
    back = transform_T_inverse(Tu, frame, grid, order=order, check_boundary=False)
    return CheckReport(name, _rel(back, f, grid), tol, {"N": grid.N, "L": grid.L, "order": order})


def intertwining_check(f: np.ndarray, frame: TwistedFrame, grid: Grid, which: str,
                       tol: float = 1e-5, order: int = SPLINE_ORDER) -> CheckReport:
    """``T(x u) = (-alpha D_y + beta M_x) T u`` or ``T(D_x u) = (-gamma D_x + delta M_y) T u``."""
    X, Y = grid.mesh()
    Tu = transform_T(f, frame, grid, order=order)
    if which == "M":
        lhs = transform_T(X * f, frame, grid, order=order, check_boundary=False)
        rhs = -frame.alpha * _spectral_d(Tu, grid, 1) + frame.beta * X * Tu
    elif which == "D":
        lhs = transform_T(_spectral_d(f, grid, 0), frame, grid, order=order, check_boundary=False)
        rhs = -frame.gamma * _spectral_d(Tu, grid, 0) + frame.delta * Y * Tu
    else:
        raise ValueError("which must be 'M' or 'D'")
    return CheckReport(f"transform_intertwining_{which}", _rel(lhs, rhs, grid), tol,
                       {"N": grid.N, "L": grid.L, "order": order})


def gaussian(grid: Grid, hermite: bool = False) -> np.ndarray:
    X, Y = grid.mesh()
    g = np.exp(-(X ** 2 + Y ** 2) / 2).astype(complex)
    return X * g if hermite else g
