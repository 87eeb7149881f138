"""Integral-kernel ingestion, spectrum-preserving quadrature discretization,
second-associated-kernel evaluation, and sampled kernel nonnegativity checks.

Builtin kernels live on the unit interval. The discretization is the
symmetrized quadrature matrix B[i, j] = sqrt(w_i) k(t_i, t_j) sqrt(w_j),
which is diagonally similar to the plain weighted matrix k(t_i, t_j) w_j
and therefore has the same spectrum, while keeping symmetric kernels
symmetric for the eigensolver.
"""

import csv
import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .compound import _det_stack, exterior_square
from .errors import ValidationError
from .positivity import MinorWitness, TNCertificate
from .spectra import DEFAULT_TOL, _check_tol

BUILTIN_NAMES = ("green_string", "gaussian", "cauchy")

# Fixed inward shift for the cauchy kernel: evaluation at 1/((t+e) + (s+e))
# keeps the kernel bounded on the unit square without losing total positivity.
CAUCHY_SHIFT = 1e-3

DEFAULT_GAUSSIAN_WIDTH = 1.0


@dataclass(frozen=True, eq=False)
class KernelSpec:
    """A kernel source: a named builtin or a tabulated grid of samples."""

    kind: str  # "builtin" | "tabulated"
    name: str = ""
    param: Optional[float] = None
    nodes: Optional[np.ndarray] = None  # tabulated only; None means implied midpoint
    values: Optional[np.ndarray] = None  # tabulated only


@dataclass(frozen=True, eq=False)
class KernelGrid:
    """Quadrature nodes/weights, sampled kernel, and the symmetrized matrix."""

    nodes: np.ndarray
    weights: np.ndarray
    values: np.ndarray
    discretized: np.ndarray


def builtin_kernel(name, param=None):
    """KernelSpec for a named builtin; ``param`` is the gaussian width."""
    if name not in BUILTIN_NAMES:
        raise ValidationError(
            f"unknown builtin kernel {name!r}; known names: {', '.join(BUILTIN_NAMES)}"
        )
    if name == "gaussian":
        width = DEFAULT_GAUSSIAN_WIDTH if param is None else float(param)
        if not width > 0:
            raise ValidationError(f"gaussian width must be positive, got {param!r}")
        return KernelSpec(kind="builtin", name=name, param=width)
    if param is not None:
        raise ValidationError(f"builtin kernel {name!r} takes no parameter")
    return KernelSpec(kind="builtin", name=name)


def tabulated_kernel(values, nodes=None):
    """KernelSpec wrapping an N x N table of kernel samples.

    Without explicit nodes the samples are read as living on the uniform
    midpoint grid t_i = (i + 1/2) / N.
    """
    v = np.asarray(values, dtype=float)
    if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] < 1:
        raise ValidationError(f"tabulated kernel must be square, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValidationError("tabulated kernel contains NaN or Inf")
    t = None
    if nodes is not None:
        t = np.asarray(nodes, dtype=float).ravel()
        if t.size != v.shape[0]:
            raise ValidationError(
                f"got {t.size} nodes for a {v.shape[0]}x{v.shape[0]} table"
            )
        if np.any(np.diff(t) <= 0) or t[0] <= 0.0 or t[-1] >= 1.0:
            raise ValidationError("nodes must be strictly increasing inside (0, 1)")
    return KernelSpec(kind="tabulated", nodes=t, values=v)


def load_kernel(path):
    """Read a tabulated kernel from CSV (values only) or JSON (nodes + values)."""
    text = open(path, "r", encoding="utf-8").read()
    if not text.strip():
        raise ValidationError(f"kernel file {path} is empty")
    if str(path).endswith(".json"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"bad JSON kernel file {path}: {exc}") from None
        if not isinstance(doc, dict) or "values" not in doc:
            raise ValidationError(f'JSON kernel file {path} needs a "values" field')
        return tabulated_kernel(doc["values"], doc.get("nodes"))
    rows = [r for r in csv.reader(text.splitlines()) if r]
    try:
        table = [[float(x) for x in r] for r in rows]
    except ValueError as exc:
        raise ValidationError(f"bad CSV kernel file {path}: {exc}") from None
    widths = {len(r) for r in table}
    if len(widths) != 1 or len(table) != widths.pop():
        raise ValidationError(f"CSV kernel file {path} is not a square table")
    return tabulated_kernel(table)


def _implied_nodes(count):
    return (np.arange(count) + 0.5) / count


def _eval_builtin(spec, t, s):
    t = np.asarray(t, dtype=float)
    s = np.asarray(s, dtype=float)
    if spec.name == "green_string":
        return np.minimum(t, s) - t * s
    if spec.name == "gaussian":
        return np.exp(-((t - s) ** 2) / spec.param ** 2)
    # cauchy, evaluated on the shifted domain
    return 1.0 / ((t + CAUCHY_SHIFT) + (s + CAUCHY_SHIFT))


def kernel_value(spec, t, s):
    """Pointwise evaluation of a builtin kernel on the closed unit square."""
    if spec.kind != "builtin":
        raise ValidationError("pointwise evaluation needs a builtin kernel")
    t = np.asarray(t, dtype=float)
    s = np.asarray(s, dtype=float)
    if np.any(t < 0.0) or np.any(t > 1.0) or np.any(s < 0.0) or np.any(s > 1.0):
        raise ValidationError("kernel arguments must lie in [0, 1]")
    return _eval_builtin(spec, t, s)


def _tabulated_grid(spec):
    n = spec.values.shape[0]
    nodes = spec.nodes if spec.nodes is not None else _implied_nodes(n)
    return nodes, spec.values


def discretize(spec, n, rule="midpoint"):
    """Quadrature discretization of a kernel on (0, 1).

    Parameters
    ----------
    spec : KernelSpec
        Builtin or tabulated kernel.
    n : int
        Number of quadrature nodes, n >= 2. A tabulated kernel must match
        its table size exactly.
    rule : str
        "midpoint" (default, stays inside the open interval) or "trapezoid"
        (includes both endpoints). Ignored for tabulated kernels, whose
        nodes are fixed; their weights are the cell widths of the partition
        of [0, 1] split at node midpoints.

    Returns
    -------
    KernelGrid
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValidationError(f"grid size must be an integer >= 2, got {n!r}")
    n = int(n)
    if rule not in ("midpoint", "trapezoid"):
        raise ValidationError(f'rule must be "midpoint" or "trapezoid", got {rule!r}')

    if spec.kind == "tabulated":
        nodes, values = _tabulated_grid(spec)
        if nodes.size != n:
            raise ValidationError(
                f"tabulated kernel has {nodes.size} nodes but grid size {n} was requested"
            )
        edges = np.concatenate(([0.0], 0.5 * (nodes[1:] + nodes[:-1]), [1.0]))
        weights = np.diff(edges)
    elif spec.kind == "builtin":
        if rule == "midpoint":
            nodes = _implied_nodes(n)
            weights = np.full(n, 1.0 / n)
        else:
            nodes = np.linspace(0.0, 1.0, n)
            h = 1.0 / (n - 1)
            weights = np.full(n, h)
            weights[0] = weights[-1] = h / 2.0
        values = _eval_builtin(spec, nodes[:, None], nodes[None, :])
    else:
        raise ValidationError(f"unknown kernel kind {spec.kind!r}")

    if np.any(np.diff(nodes) <= 0.0):
        raise ValidationError("quadrature nodes must be strictly increasing")
    if np.any(weights <= 0.0):
        raise ValidationError("quadrature weights must be positive")
    if abs(float(weights.sum()) - 1.0) > 1e-12:
        raise ValidationError("quadrature weights must sum to the domain length 1")
    sw = np.sqrt(weights)
    discretized = sw[:, None] * values * sw[None, :]
    return KernelGrid(nodes=nodes, weights=weights, values=values, discretized=discretized)


def second_associated(spec, t1, t2, s1, s2):
    """The order-2 associated kernel value det [[k(t1,s1), k(t1,s2)],
    [k(t2,s1), k(t2,s2)]].

    Builtins evaluate anywhere on [0, 1]; tabulated kernels evaluate at
    their stored nodes only (arguments are matched to nodes within 1e-12).
    Antisymmetric under swapping t1 with t2 and under swapping s1 with s2.
    """
    args = [float(t1), float(t2), float(s1), float(s2)]
    if spec.kind == "builtin":
        if any(a < 0.0 or a > 1.0 for a in args):
            raise ValidationError(f"arguments must lie in [0, 1], got {args}")
        a = _eval_builtin(spec, args[0], args[2])
        b = _eval_builtin(spec, args[0], args[3])
        c = _eval_builtin(spec, args[1], args[2])
        d = _eval_builtin(spec, args[1], args[3])
        return float(a * d - b * c)
    nodes, values = _tabulated_grid(spec)
    idx = []
    for a in args:
        k = int(np.argmin(np.abs(nodes - a)))
        if abs(float(nodes[k]) - a) > 1e-12:
            raise ValidationError(
                f"argument {a} is not a node of the tabulated kernel"
            )
        idx.append(k)
    i1, i2, j1, j2 = idx
    return float(values[i1, j1] * values[i2, j2] - values[i1, j2] * values[i2, j1])


def kernel_tn_check(spec, sample_nodes, order, trials, seed, tol=DEFAULT_TOL):
    """Sampled nonnegativity check of the compound determinants of a kernel
    at orders 1 through ``order``.

    Each trial draws an order j in 1..order and then independent increasing
    node tuples (rows and columns separately) of that length from a grid of
    ``sample_nodes`` midpoint points (builtin kernels) or from the stored
    nodes (tabulated kernels), evaluates the compound determinant, and
    certifies the sampled set. The verdict is always mode="sampled"; the
    continuum condition quantifies over all tuples of every order and a
    finite check cannot be exhaustive.
    """
    _check_tol(tol)
    if not isinstance(order, (int, np.integer)) or order < 1:
        raise ValidationError(f"order must be a positive integer, got {order!r}")
    if not isinstance(trials, (int, np.integer)) or trials < 1:
        raise ValidationError(f"trials must be a positive integer, got {trials!r}")
    order = int(order)
    if spec.kind == "builtin":
        if not isinstance(sample_nodes, (int, np.integer)) or sample_nodes < order:
            raise ValidationError(
                f"sample_nodes must be an integer >= order = {order}, got {sample_nodes!r}"
            )
        grid = _implied_nodes(int(sample_nodes))
        table = _eval_builtin(spec, grid[:, None], grid[None, :])
    else:
        _, table = _tabulated_grid(spec)
        if table.shape[0] < order:
            raise ValidationError(
                f"tabulated kernel has {table.shape[0]} nodes, fewer than order {order}"
            )
    count = table.shape[0]
    amax = float(np.abs(table).max())

    worst = None
    for t in range(int(trials)):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=(int(seed), t)))
        j = int(rng.integers(1, order + 1))
        rows = tuple(sorted(rng.choice(count, size=j, replace=False).tolist()))
        cols = tuple(sorted(rng.choice(count, size=j, replace=False).tolist()))
        val = float(_det_stack(table[np.ix_(rows, cols)][None, ...])[0])
        if val < -tol * amax ** j and (worst is None or val < worst.value):
            worst = MinorWitness(rows=rows, cols=cols, value=val)
    return TNCertificate(
        order_checked=order,
        verdict=worst is None,
        witness=worst,
        minors_evaluated=int(trials),
        mode="sampled",
    )


def exterior_grid(grid, force=False):
    """Exterior square of the discretized kernel matrix.

    This is the quadrature matrix of the order-2 associated kernel on the
    half-square of node pairs t_i < t_j, in the same pair-basis order used
    throughout the package. Subject to the compound size cap.
    """
    return exterior_square(grid.discretized, force=force)
