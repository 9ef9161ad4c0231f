"""Serialization: text tables, CSV, JSON and DOT graph output.

All stored quantities stay exact integers.  The only non-integer anywhere is
the displayed distance column of the trace table, which renders the square
root of the exact v_sq truncated (never rounded) to one decimal place.
JSON encodes integers outside the signed-64-bit window as decimal strings so
downstream tools cannot silently lose precision; CSV always writes full
decimal digits and needs no such escape.
"""

import json
from math import isqrt

from .accelerated import AcceleratedTrace, TraceRow
from .arith import collatz_step, odd_part
from .classical import ClassicalTrajectory

ACCEL_CSV_HEADER = "w,x,y,z,u,eta,v_sq"
CLASSICAL_CSV_HEADER = "k,value,delta"
GRAPH_NODE_CAP = 100_000

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def truncated_sqrt_str(v_sq: int) -> str:
    """Square root of an exact non-negative integer, truncated to one
    decimal: 360 -> '18.9', 640 -> '25.2' (never 25.3), 0 -> '0'."""
    if v_sq < 0:
        raise ValueError(f"v_sq must be >= 0, got {v_sq}")
    if v_sq == 0:
        return "0"
    tenths = isqrt(100 * v_sq)  # floor(10 * sqrt(v_sq)), exactly
    return f"{tenths // 10}.{tenths % 10}"


# ---------------------------------------------------------------------------
# text tables


def render_accelerated_table(trace: AcceleratedTrace) -> str:
    """Fixed column order w, x, y, z, u, eta, v; z printed as a power of 2
    and v as the truncated square root of v_sq (blank on the final row)."""
    grid = [("w", "x", "y", "z", "u", "eta", "v")]
    for row in trace.rows:
        v = "" if row.v_sq is None else truncated_sqrt_str(row.v_sq)
        grid.append((str(row.w), str(row.x), str(row.y), f"2^{row.u}",
                     str(row.u), str(row.eta), v))
    widths = [max(len(line[col]) for line in grid) for col in range(7)]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip()
        for line in grid)


def render_classical_table(traj: ClassicalTrajectory) -> str:
    """Horizontal layout: a row of indices k, the iterate row, and the
    forward-difference row (one cell shorter)."""
    ks = [str(k) for k in range(len(traj.values))]
    vs = [str(v) for v in traj.values]
    ds = [str(d) for d in traj.deltas] + [""]
    labels = ("k", "C^k", "delta")
    label_width = max(len(s) for s in labels)
    widths = [max(len(ks[i]), len(vs[i]), len(ds[i])) for i in range(len(ks))]
    lines = []
    for label, cells in zip(labels, (ks, vs, ds)):
        parts = [label.ljust(label_width)]
        parts += [cell.rjust(width) for cell, width in zip(cells, widths)]
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# CSV (LF line endings, no quoting; every field numeric or empty)


def export_accelerated_csv(trace: AcceleratedTrace) -> bytes:
    lines = [ACCEL_CSV_HEADER]
    for row in trace.rows:
        v = "" if row.v_sq is None else str(row.v_sq)
        lines.append(f"{row.w},{row.x},{row.y},{row.z},{row.u},{row.eta},{v}")
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_accelerated_csv(data: bytes) -> AcceleratedTrace:
    """Inverse of export_accelerated_csv.

    i_min and the terminated flag are reconstructed from the rows: the trace
    terminated when the penultimate row's distance reached zero.
    """
    lines = data.decode("ascii").splitlines()
    if not lines or lines[0] != ACCEL_CSV_HEADER:
        raise ValueError("not an odd-part trace CSV")
    rows = []
    for line in lines[1:]:
        w, x, y, z, u, eta, v = line.split(",")
        row = TraceRow(w=int(w), x=int(x), y=int(y), u=int(u), eta=int(eta),
                       v_sq=int(v) if v else None)
        if int(z) != row.z:
            raise ValueError(f"row {w}: z={z} does not equal 2^{u}")
        rows.append(row)
    return AcceleratedTrace(input=rows[0].x, rows=rows,
                            i_min=_first_one(rows), terminated=_ended_at_zero(rows))


def export_classical_csv(traj: ClassicalTrajectory) -> bytes:
    lines = [CLASSICAL_CSV_HEADER]
    for k, v in enumerate(traj.values):
        d = str(traj.deltas[k]) if k < len(traj.deltas) else ""
        lines.append(f"{k},{v},{d}")
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_classical_csv(data: bytes) -> ClassicalTrajectory:
    lines = data.decode("ascii").splitlines()
    if not lines or lines[0] != CLASSICAL_CSV_HEADER:
        raise ValueError("not a trajectory CSV")
    values = []
    deltas = []
    for line in lines[1:]:
        _, v, d = line.split(",")
        values.append(int(v))
        if d:
            deltas.append(int(d))
    return _rebuild_classical(values, deltas)


# ---------------------------------------------------------------------------
# JSON


def _encode_int(v: int):
    return v if _INT64_MIN <= v <= _INT64_MAX else str(v)


def _encode_opt(v: int | None):
    return None if v is None else _encode_int(v)


def export_accelerated_json(trace: AcceleratedTrace) -> bytes:
    doc = {
        "input": _encode_int(trace.input),
        "rows": [{"w": row.w, "x": _encode_int(row.x), "y": _encode_int(row.y),
                  "u": row.u, "eta": _encode_int(row.eta),
                  "v_sq": _encode_opt(row.v_sq)} for row in trace.rows],
        "i_min": trace.i_min,
        "terminated": trace.terminated,
    }
    return (json.dumps(doc) + "\n").encode("ascii")


def parse_accelerated_json(data: bytes) -> AcceleratedTrace:
    doc = json.loads(data)
    rows = [TraceRow(w=int(r["w"]), x=int(r["x"]), y=int(r["y"]), u=int(r["u"]),
                     eta=int(r["eta"]),
                     v_sq=None if r["v_sq"] is None else int(r["v_sq"]))
            for r in doc["rows"]]
    return AcceleratedTrace(input=int(doc["input"]), rows=rows,
                            i_min=doc["i_min"], terminated=doc["terminated"])


def export_classical_json(traj: ClassicalTrajectory) -> bytes:
    doc = {
        "start": _encode_int(traj.start),
        "values": [_encode_int(v) for v in traj.values],
        "deltas": [_encode_int(d) for d in traj.deltas],
        "reached_one_at": traj.reached_one_at,
    }
    return (json.dumps(doc) + "\n").encode("ascii")


def parse_classical_json(data: bytes) -> ClassicalTrajectory:
    doc = json.loads(data)
    return _rebuild_classical([int(v) for v in doc["values"]],
                              [int(d) for d in doc["deltas"]])


# ---------------------------------------------------------------------------
# DOT graphs


def collatz_graph_dot(limit: int, kind: str = "classical",
                      cap: int = GRAPH_NODE_CAP) -> str:
    """Functional graph as a DOT digraph, one edge per node.

    classical: n -> C(n) for 1 <= n <= limit.
    accelerated: y -> odd_part(C(y)) for each odd y <= limit, the state
    transition of the odd-part iteration.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > cap:
        raise ValueError(f"limit {limit} exceeds the node cap {cap}")
    if kind == "classical":
        name = "collatz"
        edges = ((n, collatz_step(n)) for n in range(1, limit + 1))
    elif kind == "accelerated":
        name = "collatz_odd"
        edges = ((y, odd_part(collatz_step(y))) for y in range(1, limit + 1, 2))
    else:
        raise ValueError(f"kind must be 'classical' or 'accelerated', got {kind!r}")
    lines = [f"digraph {name} {{"]
    lines += [f"  {a} -> {b};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# scan summaries and experiment rows


def render_scan_summary(summary) -> str:
    """Line-oriented, machine-readable, deterministic scan summary."""
    lines = [
        f"RANGE {summary.lo} {summary.hi}",
        f"VERIFIED {summary.verified}",
        f"UNDECIDED {summary.undecided}",
    ]
    if summary.max_i_min is not None:
        lines.append(f"MAX_I_MIN {summary.max_i_min[0]} {summary.max_i_min[1]}")
    if summary.max_cardinality is not None:
        lines.append(f"MAX_CARDINALITY {summary.max_cardinality[0]} {summary.max_cardinality[1]}")
    for i_min in sorted(summary.histogram):
        lines.append(f"HIST {i_min} {summary.histogram[i_min]}")
    return "\n".join(lines) + "\n"


def render_pow3_csv(results) -> str:
    """CSV of the powers-of-3 sweep; undecided exponents leave their number
    fields empty."""
    lines = ["exponent,i_min,cardinality"]
    for r in results:
        i_min = "" if r.i_min is None else str(r.i_min)
        card = "" if r.cardinality is None else str(r.cardinality)
        lines.append(f"{r.exponent},{i_min},{card}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers


def _first_one(rows: list[TraceRow]) -> int | None:
    for i, row in enumerate(rows):
        if row.y == 1:
            return i
    return None


def _ended_at_zero(rows: list[TraceRow]) -> bool:
    return len(rows) >= 2 and rows[-1].v_sq is None and rows[-2].v_sq == 0


def _rebuild_classical(values: list[int], deltas: list[int]) -> ClassicalTrajectory:
    if len(deltas) != len(values) - 1:
        raise ValueError("delta column must be one shorter than the values")
    try:
        one_at = values.index(1)
    except ValueError:
        one_at = None
    return ClassicalTrajectory(start=values[0], values=tuple(values),
                               deltas=tuple(deltas), reached_one_at=one_at)
