"""Deterministic grid sweeps over channel parameter space.

Grids have inclusive endpoints and uniform spacing; rows are emitted in
canonical order (lambda1 outermost, lambda3 innermost) regardless of how the
work is partitioned across threads, so output files are byte-identical for
any worker count. Rows are never filtered: non-CP nodes stay in the dataset
with cp = 0 so consumers can draw the full cube.

The flag columns are computed by exactly the same closed-form expressions
as classify(); the vectorized path exists only for speed.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from nonloc.channels import cp_closed_form
from nonloc.families import FAMILY_DOMAINS
from nonloc.nonlocality import ch_conditions

CSV_COLUMNS = (
    "lambda1",
    "lambda2",
    "lambda3",
    "t3",
    "cp",
    "ch1",
    "ch2",
    "paper_generating",
    "breaks_chsh_direct",
    "horodecki_m",
)

MODES = ("cube3d", "phase_covariant_2d", "family_1d")

_FLOAT_COLUMNS = ("lambda1", "lambda2", "lambda3", "t3", "horodecki_m")
_BOOL_COLUMNS = ("cp", "ch1", "ch2", "paper_generating", "breaks_chsh_direct")


@dataclass(frozen=True)
class SweepRequest:
    """What to sweep and where to write it.

    bounds, when given, must provide one (lo, hi) pair per grid axis of the
    mode (3 for cube3d, 2 for phase_covariant_2d, 1 for family_1d) with
    -1 <= lo <= hi <= 1; family_1d defaults to the family's own domain.
    """

    mode: str
    resolution: int
    t3: float = 0.0
    bounds: tuple[tuple[float, float], ...] | None = None
    family: str | None = None
    p: float = 0.0
    out: str | None = None
    fmt: str = "csv"


@dataclass(frozen=True)
class SweepRow:
    lambda1: float
    lambda2: float
    lambda3: float
    t3: float
    cp: bool
    ch1: bool
    ch2: bool
    paper_generating: bool
    breaks_chsh_direct: bool
    horodecki_m: float


class SweepDataset:
    """Columnar result of a sweep; one numpy array per CSV column."""

    def __init__(self, columns: dict[str, np.ndarray]):
        if set(columns) != set(CSV_COLUMNS):
            raise ValueError("dataset needs exactly the sweep columns")
        n = len(columns["lambda1"])
        for name, col in columns.items():
            if len(col) != n:
                raise ValueError(f"column {name} has mismatched length")
            setattr(self, name, col)
        self._n = n

    @classmethod
    def empty(cls) -> "SweepDataset":
        cols = {name: np.zeros(0) for name in _FLOAT_COLUMNS}
        cols.update({name: np.zeros(0, dtype=bool) for name in _BOOL_COLUMNS})
        return cls(cols)

    def __len__(self) -> int:
        return self._n

    def row(self, i: int) -> SweepRow:
        return SweepRow(
            *(getattr(self, name)[i].item() for name in CSV_COLUMNS)
        )

    def iter_rows(self):
        for i in range(self._n):
            yield self.row(i)

    def to_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n")
            cols = [getattr(self, name) for name in CSV_COLUMNS]
            chunk = []
            for i in range(self._n):
                chunk.append(_format_row(cols, i))
                if len(chunk) == 10000:
                    fh.write("\n".join(chunk) + "\n")
                    chunk = []
            if chunk:
                fh.write("\n".join(chunk) + "\n")

    def to_json_obj(self) -> dict:
        rows = []
        for i in range(self._n):
            rows.append(
                {
                    name: (
                        bool(getattr(self, name)[i])
                        if name in _BOOL_COLUMNS
                        else float(getattr(self, name)[i])
                    )
                    for name in CSV_COLUMNS
                }
            )
        return {"rows": rows}

    def to_json(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_obj(), fh)
            fh.write("\n")


def _format_row(cols, i) -> str:
    parts = []
    for name, col in zip(CSV_COLUMNS, cols):
        if name in _BOOL_COLUMNS:
            parts.append("1" if col[i] else "0")
        else:
            parts.append(f"{col[i]:.17g}")
    return ",".join(parts)


def axis_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """n uniformly spaced points with exact, inclusive endpoints.

    Built as lo + (hi-lo) * (k/(n-1)) so that, for symmetric bounds and odd
    n, the midpoint is exactly 0.0 (k/(n-1) = 0.5 is exact); boundary
    verdicts like the fully shifted cube collapsing to the origin rely on
    hitting that node exactly.
    """
    if n < 2:
        raise ValueError("resolution must be at least 2")
    k = np.arange(n, dtype=float)
    x = lo + (hi - lo) * (k / (n - 1))
    x[0] = lo
    x[-1] = hi
    return x


def _flag_block(l1, l2, l3, t3) -> dict[str, np.ndarray]:
    cp = cp_closed_form(l1, l2, l3, t3)
    c1, c2 = ch_conditions(l1, l2, l3)
    s1 = l3 * l3
    s2 = np.minimum(l1 * l1, l2 * l2)
    s3 = np.maximum(l1 * l1, l2 * l2)
    m = np.maximum(s1 + s2, np.maximum(s2 + s3, s3 + s1))
    return {
        "cp": cp,
        "ch1": c1,
        "ch2": c2,
        "paper_generating": c1 | c2,
        "breaks_chsh_direct": m > 1.0,
        "horodecki_m": m,
    }


def _worker_count(slices: int) -> int:
    env = os.environ.get("NONLOC_THREADS")
    if env is not None:
        try:
            workers = int(env)
        except ValueError:
            raise ValueError(f"NONLOC_THREADS must be an integer, got {env!r}")
        if workers < 1:
            raise ValueError("NONLOC_THREADS must be at least 1")
    else:
        workers = min(os.cpu_count() or 1, 8)
    return min(workers, slices)


def _check_bounds(bounds, naxes) -> tuple[tuple[float, float], ...]:
    if bounds is None:
        return ((-1.0, 1.0),) * naxes
    bounds = tuple((float(lo), float(hi)) for lo, hi in bounds)
    if len(bounds) != naxes:
        raise ValueError(f"expected {naxes} bounds pairs, got {len(bounds)}")
    for lo, hi in bounds:
        if not -1.0 <= lo <= hi <= 1.0:
            raise ValueError(f"bounds must satisfy -1 <= lo <= hi <= 1, got {(lo, hi)}")
    return bounds


def _alloc(n: int) -> dict[str, np.ndarray]:
    cols = {name: np.empty(n) for name in _FLOAT_COLUMNS}
    cols.update({name: np.empty(n, dtype=bool) for name in _BOOL_COLUMNS})
    return cols


def _fill(cols, sl, l1, l2, l3, t3) -> None:
    cols["lambda1"][sl] = l1
    cols["lambda2"][sl] = l2
    cols["lambda3"][sl] = l3
    cols["t3"][sl] = t3
    for name, values in _flag_block(l1, l2, l3, t3).items():
        cols[name][sl] = values


def _sweep_cube3d(req: SweepRequest) -> dict[str, np.ndarray]:
    b1, b2, b3 = _check_bounds(req.bounds, 3)
    n = req.resolution
    g1 = axis_grid(*b1, n)
    l2 = np.repeat(axis_grid(*b2, n), n)
    l3 = np.tile(axis_grid(*b3, n), n)
    block = n * n
    cols = _alloc(n * block)

    def work(i: int) -> None:
        sl = slice(i * block, (i + 1) * block)
        _fill(cols, sl, g1[i], l2, l3, req.t3)

    workers = _worker_count(n)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, range(n)))
    else:
        for i in range(n):
            work(i)
    return cols


def _sweep_pc2d(req: SweepRequest) -> dict[str, np.ndarray]:
    b1, b3 = _check_bounds(req.bounds, 2)
    n = req.resolution
    l1 = np.repeat(axis_grid(*b1, n), n)
    l3 = np.tile(axis_grid(*b3, n), n)
    cols = _alloc(n * n)
    _fill(cols, slice(None), l1, l1, l3, 0.0)
    return cols


def _sweep_family(req: SweepRequest) -> dict[str, np.ndarray]:
    kind = req.family
    if kind not in FAMILY_DOMAINS:
        raise ValueError(
            f"family must be one of {sorted(FAMILY_DOMAINS)}, got {kind!r}"
        )
    if abs(req.p) > 1.0:
        raise ValueError("shift weight p must satisfy |p| <= 1")
    domain = FAMILY_DOMAINS[kind]
    if req.bounds is None:
        lo, hi = domain
    else:
        ((lo, hi),) = _check_bounds(req.bounds, 1)
        if lo < domain[0] or hi > domain[1]:
            raise ValueError(f"bounds exceed the {kind} domain {domain}")
    g = axis_grid(lo, hi, req.resolution)
    zeros = np.zeros_like(g)
    ones = np.ones_like(g)
    if kind == "linear":
        l1, l2, l3, t3 = zeros, zeros, g, zeros
    elif kind == "dephasing":
        l1, l2, l3, t3 = g, g, ones, zeros
    elif kind == "depolarizing":
        l1, l2, l3, t3 = g, g, g, zeros
    elif kind == "two_pauli":
        l1, l2, l3, t3 = g, g, 2.0 * g - 1.0, zeros
    elif kind == "gad":
        l1, l2, l3, t3 = g, g, g * g, req.p * (1.0 - g * g)
    else:  # shifted_depolarizing
        l1, l2, l3, t3 = g, g, g, req.p * (1.0 - g)
    cols = _alloc(len(g))
    _fill(cols, slice(None), l1, l2, l3, t3)
    return cols


def run_sweep(req: SweepRequest) -> SweepDataset:
    """Evaluate the classification flags on the requested grid.

    Returns the full dataset in canonical row order and, when req.out is
    set, writes it as CSV (reals with 17 significant digits, booleans as
    0/1) or JSON according to req.fmt.
    """
    if req.mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {req.mode!r}")
    if req.resolution < 2:
        raise ValueError("resolution must be at least 2")
    if req.mode == "cube3d":
        cols = _sweep_cube3d(req)
    elif req.mode == "phase_covariant_2d":
        cols = _sweep_pc2d(req)
    else:
        cols = _sweep_family(req)
    ds = SweepDataset(cols)
    if req.out is not None:
        if req.fmt == "csv":
            ds.to_csv(req.out)
        elif req.fmt == "json":
            ds.to_json(req.out)
        else:
            raise ValueError(f"fmt must be 'csv' or 'json', got {req.fmt!r}")
    return ds


def region_summary(ds: SweepDataset) -> dict:
    """Counts over the CP region of a dataset.

    ch1_count and ch2_count are CP-conditioned (|cp & ch1|, |cp & ch2|):
    the summary describes the physical region, where only CP nodes exist.
    discrepancy_count tallies CP nodes whose closed-form generating verdict
    differs from the direct CHSH verdict of their Choi state; it is expected
    to be positive on any grid containing, e.g., the identity node.
    """
    if len(ds) == 0:
        raise ValueError("cannot summarize an empty dataset")
    cp = ds.cp
    cp_count = int(cp.sum())
    gen_count = int((cp & ds.paper_generating).sum())
    return {
        "cp_count": cp_count,
        "ch1_count": int((cp & ds.ch1).sum()),
        "ch2_count": int((cp & ds.ch2).sum()),
        "generating_fraction_of_cp": gen_count / cp_count if cp_count else 0.0,
        "discrepancy_count": int(
            (cp & (ds.paper_generating != ds.breaks_chsh_direct)).sum()
        ),
    }
