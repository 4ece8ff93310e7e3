"""Schedule and execution-trace rendering.

Each job draws as a right triangle with vertices (s, 0), (s, h*p),
(s + p, 0): full criticality at the start, expiring linearly at s + p.
Execution traces add one row of rectangles under the time axis, one per
executed interval.  Rendering refuses infeasible schedules and reports the
violating pairs instead.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Schedule, check_feasible, makespan
from .simulate import ExecutionTrace


def _require_feasible(schedule: Schedule) -> None:
    violations = check_feasible(schedule)
    if violations:
        raise ValueError(f"refusing to render an infeasible schedule; violations {violations}")
    if not schedule.jobs:
        raise ValueError("refusing to render an empty schedule")


def _fmt(value) -> str:
    return f"{float(value):g}"


def render_svg(schedule: Schedule, scale=1, trace: ExecutionTrace | None = None) -> str:
    """SVG text; `scale` stretches both axes, `trace` adds the execution row."""
    _require_feasible(schedule)
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    span = makespan(schedule)
    peak = max(size for size, _ in schedule.jobs)
    axis_y = peak * scale
    row_h = max(peak * scale / 6, Fraction(4))
    height = axis_y + (row_h + 2 if trace else 0) + 2
    width = span * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    ]
    for size, start in schedule.jobs:
        x0 = start * scale
        x1 = (start + size) * scale
        top = axis_y - size * scale
        parts.append(
            f'  <polygon class="job" points="{_fmt(x0)},{_fmt(axis_y)} '
            f'{_fmt(x0)},{_fmt(top)} {_fmt(x1)},{_fmt(axis_y)}" '
            'fill="none" stroke="black"/>'
        )
    parts.append(
        f'  <line x1="0" y1="{_fmt(axis_y)}" x2="{_fmt(width)}" y2="{_fmt(axis_y)}" stroke="black"/>'
    )
    if trace is not None:
        for record in trace.records:
            if not record.executed:
                continue
            x0 = record.start * scale
            w = (record.end - record.start) * scale
            parts.append(
                f'  <rect class="run" x="{_fmt(x0)}" y="{_fmt(axis_y + 2)}" '
                f'width="{_fmt(w)}" height="{_fmt(row_h)}" fill="gray"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_ascii(schedule: Schedule, scale=1, trace: ExecutionTrace | None = None) -> str:
    """One text row per job in start order, offset by start, spanning size."""
    _require_feasible(schedule)
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")

    def cells(value) -> int:
        return int(round(float(value * scale)))

    span = makespan(schedule)
    lines = []
    order = sorted(range(len(schedule.jobs)), key=lambda i: schedule.jobs[i][1])
    for i in order:
        size, start = schedule.jobs[i]
        bar = "#" * max(1, cells(size))
        lines.append(f"{' ' * cells(start)}{bar}  p={size} s={start}")
    lines.append("-" * max(1, cells(span)))
    if trace is not None:
        for i in order:
            record = trace.records[i]
            if record.executed:
                width = max(1, cells(record.end - record.start))
                lines.append(
                    f"{' ' * cells(record.start)}{'=' * width}  run [{record.start}, {record.end})"
                )
            else:
                lines.append(
                    f"{' ' * cells(record.start)}x  canceled by job {record.canceled_by}"
                )
    return "\n".join(lines) + "\n"
