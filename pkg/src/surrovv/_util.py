"""Shared helpers: seed derivation, CSV emission, bounded thread maps."""

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np


def derive_seed(seed, *labels):
    """Derive a stable 63-bit child seed from a parent seed and task labels.

    Hash-based so the derived streams are independent of execution order and
    of how many sibling tasks exist.
    """
    h = hashlib.sha256(repr((int(seed),) + tuple(labels)).encode()).digest()
    return int.from_bytes(h[:8], "little") >> 1


def fmt(x):
    """Format a float with 17 significant digits (full double precision)."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def write_csv(path, header, rows):
    """Write rows of numbers as CSV with a plain-text header line."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_plot_data(path, comment, columns, rows):
    """Write whitespace-separated plot data with '#'-comment headers."""
    lines = [f"# {comment}", "# " + " ".join(columns)]
    for row in rows:
        lines.append(" ".join(str(v) if isinstance(v, str) else fmt(v) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def max_threads():
    """Parallelism cap from SURROVV_THREADS (default 1: fully sequential)."""
    raw = os.environ.get("SURROVV_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def ordered_map(fn, items):
    """Map fn over items, in parallel when allowed, preserving input order.

    Reduction order is by input index regardless of completion order, so
    results are deterministic for pure fn.
    """
    items = list(items)
    n = max_threads()
    if n <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
