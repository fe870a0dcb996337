"""Implicit 2D geometry: signed distances, surface normals, CSG composition.

Signed distance is negative inside a region, positive outside, zero on the
surface.  Primitive distances are exact; CSG composition uses the usual
min/max bound, which is exact everywhere a primitive is nearest (all
benchmark geometries are primitive-exact near their walls).
"""

from __future__ import annotations

import numpy as np

_FD_REL_STEP = 1e-6  # central-difference step as a fraction of domain scale


def _as_points(p):
    p = np.asarray(p, dtype=np.float64)
    if p.ndim == 1:
        return p[None, :], True
    return p, False


class Shape:
    """Base implicit region. Subclasses implement ``signed_distance``."""

    def signed_distance(self, points):
        raise NotImplementedError

    def bounding_box(self):
        """(xmin, ymin, xmax, ymax) enclosing the region."""
        raise NotImplementedError

    def contains(self, points):
        """True where signed_distance <= 0 (surface points count inside)."""
        pts, single = _as_points(points)
        inside = self.signed_distance(pts) <= 0.0
        return bool(inside[0]) if single else inside

    def _fd_step(self) -> float:
        x0, y0, x1, y1 = self.bounding_box()
        return _FD_REL_STEP * max(x1 - x0, y1 - y0)

    def distance_gradient(self, points):
        """Central-difference gradient of the distance field (unnormalized)."""
        pts, single = _as_points(points)
        h = self._fd_step()
        ex = np.array([h, 0.0])
        ey = np.array([0.0, h])
        gx = (self.signed_distance(pts + ex) - self.signed_distance(pts - ex))
        gy = (self.signed_distance(pts + ey) - self.signed_distance(pts - ey))
        grad = np.stack([gx, gy], axis=1) / (2.0 * h)
        return grad[0] if single else grad

    def surface_normal(self, points):
        """Outward unit normal of the nearest surface (normalized gradient).

        At CSG corners the field is not differentiable; the normalized
        gradient is still returned, flagged by ``surface_normal_confidence``.
        """
        pts, single = _as_points(points)
        grad = self.distance_gradient(pts)
        norm = np.linalg.norm(grad, axis=1)
        safe = np.where(norm > 1e-300, norm, 1.0)
        n = grad / safe[:, None]
        return n[0] if single else n

    def surface_normal_confidence(self, points):
        """|grad sd|, ~1 where differentiable; away from 1 flags corners."""
        pts, single = _as_points(points)
        norm = np.linalg.norm(self.distance_gradient(pts), axis=1)
        return float(norm[0]) if single else norm

    def project_to_surface(self, points, clearance: float = 0.0, iters: int = 3):
        """Move points along the distance gradient to sd = -clearance."""
        pts, single = _as_points(points)
        pts = pts.copy()
        for _ in range(iters):
            sd = self.signed_distance(pts)
            move = sd + clearance
            active = np.abs(move) > 1e-15
            if not np.any(active):
                break
            n = self.surface_normal(pts[active])
            pts[active] -= move[active, None] * n
        return pts[0] if single else pts

    def __or__(self, other):
        return Union(self, other)

    def __and__(self, other):
        return Intersection(self, other)

    def __sub__(self, other):
        return Difference(self, other)


class Box(Shape):
    """Axis-aligned rectangle [x0,x1] x [y0,y1]."""

    def __init__(self, x0, y0, x1, y1):
        if x1 <= x0 or y1 <= y0:
            raise ValueError("box must have positive extent")
        self.x0, self.y0, self.x1, self.y1 = float(x0), float(y0), float(x1), float(y1)

    def signed_distance(self, points):
        pts, single = _as_points(points)
        cx = 0.5 * (self.x0 + self.x1)
        cy = 0.5 * (self.y0 + self.y1)
        hx = 0.5 * (self.x1 - self.x0)
        hy = 0.5 * (self.y1 - self.y0)
        dx = np.abs(pts[:, 0] - cx) - hx
        dy = np.abs(pts[:, 1] - cy) - hy
        outside = np.hypot(np.maximum(dx, 0.0), np.maximum(dy, 0.0))
        inside = np.minimum(np.maximum(dx, dy), 0.0)
        sd = outside + inside
        return sd[0] if single else sd

    def bounding_box(self):
        return (self.x0, self.y0, self.x1, self.y1)


class Disk(Shape):
    """Circle/disk of given center and radius."""

    def __init__(self, cx, cy, radius):
        if radius <= 0.0:
            raise ValueError("disk radius must be positive")
        self.cx, self.cy, self.radius = float(cx), float(cy), float(radius)

    def signed_distance(self, points):
        pts, single = _as_points(points)
        sd = np.hypot(pts[:, 0] - self.cx, pts[:, 1] - self.cy) - self.radius
        return sd[0] if single else sd

    def bounding_box(self):
        r = self.radius
        return (self.cx - r, self.cy - r, self.cx + r, self.cy + r)

    def surface_normal(self, points):
        # Exact radial normal; avoids FD error on the most common wall shape.
        pts, single = _as_points(points)
        d = pts - np.array([self.cx, self.cy])
        norm = np.hypot(d[:, 0], d[:, 1])
        safe = np.where(norm > 1e-300, norm, 1.0)
        n = d / safe[:, None]
        return n[0] if single else n


class HalfPlane(Shape):
    """Region on the inner side of a line: sd(p) = n . (p - anchor).

    ``normal`` points out of the region and is normalized on construction.
    """

    def __init__(self, anchor, normal):
        n = np.asarray(normal, dtype=np.float64)
        mag = np.hypot(n[0], n[1])
        if mag == 0.0:
            raise ValueError("half-plane normal must be nonzero")
        self.anchor = np.asarray(anchor, dtype=np.float64)
        self.normal = n / mag

    def signed_distance(self, points):
        pts, single = _as_points(points)
        sd = (pts - self.anchor) @ self.normal
        return sd[0] if single else sd

    def bounding_box(self):
        big = 1e9
        return (-big, -big, big, big)

    def surface_normal(self, points):
        pts, single = _as_points(points)
        n = np.broadcast_to(self.normal, pts.shape).copy()
        return n[0] if single else n


class Polygon(Shape):
    """Simple polygon given by its vertices in order (either winding)."""

    def __init__(self, vertices):
        v = np.asarray(vertices, dtype=np.float64)
        if v.ndim != 2 or v.shape[0] < 3 or v.shape[1] != 2:
            raise ValueError("polygon needs at least 3 (x, y) vertices")
        self.vertices = v

    def signed_distance(self, points):
        pts, single = _as_points(points)
        v = self.vertices
        nv = v.shape[0]
        d2 = np.full(pts.shape[0], np.inf)
        inside = np.zeros(pts.shape[0], dtype=bool)
        j = nv - 1
        for i in range(nv):
            a, b = v[j], v[i]
            e = b - a
            w = pts - a
            t = np.clip((w @ e) / max(e @ e, 1e-300), 0.0, 1.0)
            closest = a + t[:, None] * e
            d2 = np.minimum(d2, np.sum((pts - closest) ** 2, axis=1))
            # even-odd crossing test
            cond = (a[1] > pts[:, 1]) != (b[1] > pts[:, 1])
            denom = b[1] - a[1]
            if abs(denom) > 1e-300:
                xint = a[0] + (pts[:, 1] - a[1]) * (b[0] - a[0]) / denom
                inside ^= cond & (pts[:, 0] < xint)
            j = i
        sd = np.sqrt(d2) * np.where(inside, -1.0, 1.0)
        return sd[0] if single else sd

    def bounding_box(self):
        v = self.vertices
        return (v[:, 0].min(), v[:, 1].min(), v[:, 0].max(), v[:, 1].max())


class Union(Shape):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def signed_distance(self, points):
        return np.minimum(self.a.signed_distance(points),
                          self.b.signed_distance(points))

    def bounding_box(self):
        ax0, ay0, ax1, ay1 = self.a.bounding_box()
        bx0, by0, bx1, by1 = self.b.bounding_box()
        return (min(ax0, bx0), min(ay0, by0), max(ax1, bx1), max(ay1, by1))


class Intersection(Shape):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def signed_distance(self, points):
        return np.maximum(self.a.signed_distance(points),
                          self.b.signed_distance(points))

    def bounding_box(self):
        ax0, ay0, ax1, ay1 = self.a.bounding_box()
        bx0, by0, bx1, by1 = self.b.bounding_box()
        return (max(ax0, bx0), max(ay0, by0), min(ax1, bx1), min(ay1, by1))


class Difference(Shape):
    """Points of ``a`` not in ``b`` (a minus b)."""

    def __init__(self, a, b):
        self.a, self.b = a, b

    def signed_distance(self, points):
        return np.maximum(self.a.signed_distance(points),
                          -self.b.signed_distance(points))

    def bounding_box(self):
        return self.a.bounding_box()
