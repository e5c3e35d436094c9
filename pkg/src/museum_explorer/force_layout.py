"""Deterministic Fruchterman-Reingold style force-directed layout.

Classic spring model: all node pairs repel with k^2/d, edges attract
with d^2/k, k = sqrt(W*H/n). Per-iteration displacement is capped by a
temperature cooled linearly from W/10 to zero, and positions are
clamped to the frame every iteration.

Determinism contract: positions are initialized from a seeded Mersenne
Twister (Python's random.Random), node and edge order is fixed by the
model, and force accumulation is plain summation in that order, so the
same (graph, frame, iterations, seed) always yields bit-identical
coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .network import NetworkGraphModel

PRNG_NAME = "mt19937"  # random.Random: documented, portable, seedable


class DegenerateFrame(ValueError):
    pass


@dataclass
class LayoutPositions:
    positions: dict  # node id -> (x, y)
    width: float
    height: float
    iterations: int
    seed: int
    prng: str = PRNG_NAME


def force_layout(
    g: NetworkGraphModel, width: float, height: float, iterations: int, seed: int
) -> LayoutPositions:
    if width <= 0 or height <= 0:
        raise DegenerateFrame(f"frame must be positive, got {width}x{height}")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")

    ids = [n.id for n in g.nodes]
    n = len(ids)
    if n == 0:
        return LayoutPositions({}, width, height, iterations, seed)

    rng = random.Random(seed)
    pos = np.empty((n, 2), dtype=np.float64)
    for i in range(n):
        pos[i, 0] = rng.random() * width
        pos[i, 1] = rng.random() * height
    # fallback directions for exactly-coincident nodes; drawn up front so
    # the PRNG consumption order never depends on collision timing
    jitter = np.empty((n, 2), dtype=np.float64)
    for i in range(n):
        angle = rng.random() * 2.0 * np.pi
        jitter[i] = (np.cos(angle), np.sin(angle))

    index = {node_id: i for i, node_id in enumerate(ids)}
    edge_idx = np.array(
        [[index[e.src], index[e.dst]] for e in g.edges], dtype=np.intp
    ).reshape(-1, 2)

    k = float(np.sqrt(width * height / n))
    t0 = width / 10.0
    eps = 1e-6 * k

    for it in range(iterations):
        t = t0 * (1.0 - it / iterations)
        disp = _displacements(pos, edge_idx, k, jitter, eps)
        length = np.sqrt((disp * disp).sum(axis=1))
        length = np.maximum(length, 1e-12)
        factor = np.minimum(length, t) / length
        pos = pos + disp * factor[:, None]
        np.clip(pos[:, 0], 0.0, width, out=pos[:, 0])
        np.clip(pos[:, 1], 0.0, height, out=pos[:, 1])

    return LayoutPositions(
        positions={node_id: (float(pos[i, 0]), float(pos[i, 1])) for node_id, i in index.items()},
        width=width,
        height=height,
        iterations=iterations,
        seed=seed,
        prng=PRNG_NAME,
    )


def _displacements(pos, edge_idx, k, jitter, eps):
    """One iteration's force accumulation (before the temperature cap)."""
    n = pos.shape[0]
    x, y = pos[:, 0], pos[:, 1]
    dx = x[:, None] - x[None, :]  # dx[i,j] = x_i - x_j
    dy = y[:, None] - y[None, :]
    dist2 = dx * dx + dy * dy
    adjusted = False
    if np.count_nonzero(dist2 < 1e-24) > n:
        # rare: distinct nodes at the exact same point; push them apart
        # along a deterministic jitter direction of length eps
        coincident = dist2 < 1e-24
        np.fill_diagonal(coincident, False)
        jx = jitter[:, 0][:, None] - jitter[:, 0][None, :]
        jy = jitter[:, 1][:, None] - jitter[:, 1][None, :]
        jnorm = np.maximum(np.sqrt(jx * jx + jy * jy), 1e-12)
        dx = np.where(coincident, jx / jnorm * eps, dx)
        dy = np.where(coincident, jy / jnorm * eps, dy)
        dist2 = dx * dx + dy * dy
        adjusted = True
    np.fill_diagonal(dist2, np.inf)  # no self-repulsion
    np.maximum(dist2, eps * eps, out=dist2)

    # repulsion: (k^2 / d) along the unit pair vector == delta * k^2/d^2
    coef = (k * k) / dist2
    disp = np.empty_like(pos)
    if adjusted:
        disp[:, 0] = (dx * coef).sum(axis=1)
        disp[:, 1] = (dy * coef).sum(axis=1)
    else:
        # sum_j (x_i - x_j) c_ij  ==  x_i * rowsum(c) - c @ x, via BLAS
        rowsum = coef.sum(axis=1)
        disp[:, 0] = x * rowsum - coef @ x
        disp[:, 1] = y * rowsum - coef @ y

    # attraction: d^2 / k along each edge
    if len(edge_idx):
        src, dst = edge_idx[:, 0], edge_idx[:, 1]
        edelta = pos[src] - pos[dst]
        edist = np.sqrt((edelta * edelta).sum(axis=1))
        edist = np.maximum(edist, eps)
        pull = edelta / edist[:, None] * (edist * edist / k)[:, None]
        np.subtract.at(disp, src, pull)
        np.add.at(disp, dst, pull)
    return disp
