"""Closed circuits of field directions on the Bloch sphere.

The default circuit is a regular polygon drawn in the tangent plane at +x,
radially projected onto the unit sphere, with the edge from the last vertex
back to vertex 0 bisected by the x-axis and crossed towards +z.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

__all__ = [
    "Circuit",
    "polygon_circuit",
    "solid_angle_cone",
    "solid_angle_polygon",
    "solid_angle_circumdisk",
]

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Circuit:
    """An ordered, closed list of unit field directions.

    ``radius`` is the planar circumradius used to build a polygon circuit;
    it is ``None`` for circuits given as raw vertex lists.
    """

    vertices: np.ndarray
    radius: float | None = None
    reversed: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3:
            raise ValueError(f"vertices must have shape (M, 3), got {v.shape}")
        if len(v) < 3:
            raise ValueError("a circuit needs at least 3 vertices for a non-trivial Bargmann phase")
        norms = np.linalg.norm(v, axis=1)
        if np.max(np.abs(norms - 1.0)) > UNIT_TOL:
            raise ValueError("all circuit vertices must be unit vectors")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def reverse(self) -> "Circuit":
        """Same vertex set traversed the other way; the closing edge is kept."""
        return Circuit(self.vertices[::-1], self.radius, not self.reversed, dict(self.meta))

    def roll(self, shift: int) -> "Circuit":
        return Circuit(np.roll(self.vertices, -shift, axis=0), self.radius, self.reversed, dict(self.meta))

    def to_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "radius": self.radius,
            "reversed": self.reversed,
            "vertices": self.vertices.tolist(),
            **({"meta": self.meta} if self.meta else {}),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "Circuit":
        return cls(np.array(d["vertices"], dtype=float), d.get("radius"), bool(d.get("reversed", False)), dict(d.get("meta", {})))

    @classmethod
    def from_json(cls, text: str) -> "Circuit":
        return cls.from_dict(json.loads(text))


def polygon_circuit(n_vertices: int, r: float, *, reverse: bool = False) -> Circuit:
    """Regular ``n_vertices``-gon of circumradius ``r`` around the +x axis.

    The planar polygon lives in the tangent plane at x-hat with its centre at
    ``x - r cos(pi/M) y``, so the midpoint of the closing edge (M-1 -> 0) is
    exactly x-hat and that edge moves in +z. Vertices are then normalised
    onto the sphere. ``reverse=True`` traverses the same vertices clockwise.
    """
    if int(n_vertices) != n_vertices or n_vertices < 3:
        raise ValueError("need at least 3 vertices for a non-trivial Bargmann phase")
    if not (0.0 < r < 0.9):
        raise ValueError(f"radius must lie in (0, 0.9), got {r!r}")
    M = int(n_vertices)
    alpha = (2 * np.arange(M) + 1) * np.pi / M
    p = np.empty((M, 3))
    p[:, 0] = 1.0
    p[:, 1] = r * (np.cos(alpha) - np.cos(np.pi / M))
    p[:, 2] = r * np.sin(alpha)
    p /= np.linalg.norm(p, axis=1, keepdims=True)
    c = Circuit(p, float(r), False, {"kind": "polygon"})
    return c.reverse() if reverse else c


def solid_angle_cone(r: float) -> float:
    """Solid angle of the cone whose base circle has angular radius arcsin(r)."""
    if not (0.0 < r <= 1.0):
        raise ValueError(f"cone radius must lie in (0, 1], got {r!r}")
    return 2 * np.pi * (1.0 - np.sqrt(1.0 - r * r))


def _triangle_excess(a, b, c) -> np.ndarray:
    # signed spherical excess of triangles (a, b, c), stable for tiny areas
    num = np.einsum("ij,ij->i", a, np.cross(b, c))
    den = 1.0 + np.einsum("ij,ij->i", a, b) + np.einsum("ij,ij->i", b, c) + np.einsum("ij,ij->i", c, a)
    return 2.0 * np.arctan2(num, den)


def solid_angle_polygon(circuit: Circuit | np.ndarray) -> float:
    """Signed area of the spherical polygon with great-circle edges.

    Computed as the sum of the spherical excesses of the fan of triangles
    from vertex 0. Positive when the vertices run counter-clockwise seen from
    outside the sphere.
    """
    v = circuit.vertices if isinstance(circuit, Circuit) else np.asarray(circuit, dtype=float)
    nxt = np.roll(v, -1, axis=0)
    if np.any(np.linalg.norm(v + nxt, axis=1) < 1e-12):
        raise ValueError("consecutive antipodal vertices: edge is not defined")
    a = np.broadcast_to(v[0], v[1:-1].shape)
    return float(np.sum(_triangle_excess(a, v[1:-1], v[2:])))


def solid_angle_circumdisk(r: float, n_vertices: int | None = None) -> float:
    """Solid angle subtended at the origin by the circumscribed disk.

    The disk has radius ``r`` in the tangent plane x = 1, centred a distance
    ``r cos(pi/M)`` from the tangent point (``r`` when ``n_vertices`` is None,
    the infinite-vertex limit). This is the continuum circuit that the
    radially projected polygon approaches from inside. Evaluated by
    quadrature of ``dA / (1 + rho^2)^(3/2)`` in polar coordinates about the
    disk centre.
    """
    if not (0.0 < r < 0.9):
        raise ValueError(f"radius must lie in (0, 0.9), got {r!r}")
    off = r if n_vertices is None else r * np.cos(np.pi / n_vertices)

    def f(rho, th):
        q2 = rho * rho + off * off - 2 * rho * off * np.cos(th)
        return rho / (1.0 + q2) ** 1.5

    val, _ = integrate.dblquad(f, 0.0, 2 * np.pi, 0.0, r, epsabs=1e-13, epsrel=1e-12)
    return float(val)
