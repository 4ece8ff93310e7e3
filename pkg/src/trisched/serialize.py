"""JSON wire formats.

Exact rationals travel as "num/den" strings and integers stay bare JSON
numbers; floats are rejected on load so wire data can never smuggle rounding
error into the solvers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import ExactNumber, Instance, Schedule, new_instance
from .greedy import GreedyTrace, TraceStep
from .hardness import ReductionLabels, ThreeDMInstance
from .simulate import ExecutionRecord, ExecutionTrace


def encode_exact(value: ExactNumber) -> int | str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return value


def decode_exact(value: Any) -> ExactNumber:
    if isinstance(value, bool):
        raise ValueError(f"expected a number, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise ValueError(f"floats are not allowed on the wire: {value!r}; use \"num/den\"")
    if isinstance(value, str):
        num, _, den = value.partition("/")
        try:
            f = Fraction(int(num), int(den)) if den else Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {value!r}") from exc
        return int(f) if f.denominator == 1 else f
    raise ValueError(f"expected int or \"num/den\" string, got {value!r}")


def instance_to_obj(instance: Instance) -> dict:
    return {"sizes": list(instance.sizes)}


def instance_from_obj(obj: Any) -> Instance:
    if not isinstance(obj, dict) or "sizes" not in obj:
        raise ValueError("instance JSON must be an object with a \"sizes\" array")
    sizes = obj["sizes"]
    if not isinstance(sizes, list):
        raise ValueError("\"sizes\" must be an array")
    return new_instance([decode_exact(p) for p in sizes])


def schedule_to_obj(schedule: Schedule) -> dict:
    return {
        "jobs": [
            {"size": encode_exact(size), "start": encode_exact(start)}
            for size, start in schedule.jobs
        ]
    }


def schedule_from_obj(obj: Any) -> Schedule:
    if not isinstance(obj, dict) or "jobs" not in obj or not isinstance(obj["jobs"], list):
        raise ValueError("schedule JSON must be an object with a \"jobs\" array")
    jobs = []
    for entry in obj["jobs"]:
        if not isinstance(entry, dict) or "size" not in entry or "start" not in entry:
            raise ValueError(f"schedule job entries need \"size\" and \"start\": {entry!r}")
        jobs.append((decode_exact(entry["size"]), decode_exact(entry["start"])))
    return Schedule(tuple(jobs))


def tdm_to_obj(tdm: ThreeDMInstance) -> dict:
    return {"D": tdm.D, "a": list(tdm.a), "b": list(tdm.b), "c": list(tdm.c)}


def tdm_from_obj(obj: Any) -> ThreeDMInstance:
    if not isinstance(obj, dict):
        raise ValueError("3DM JSON must be an object with D, a, b, c")
    try:
        d = obj["D"]
        columns = [obj[key] for key in ("a", "b", "c")]
    except KeyError as exc:
        raise ValueError(f"3DM JSON missing key {exc}") from exc
    cols = []
    for column in columns:
        if not isinstance(column, list):
            raise ValueError("3DM columns must be arrays")
        cols.append(tuple(int(decode_exact(v)) for v in column))
    return ThreeDMInstance(D=int(decode_exact(d)), a=cols[0], b=cols[1], c=cols[2])


def labels_to_obj(labels: ReductionLabels) -> dict:
    return {
        "M": labels.M,
        "target": labels.target,
        "jobs": [
            {"type": kind, "index": index, "size": size}
            for kind, index, size in labels.jobs
        ],
    }


def greedy_trace_to_obj(trace: GreedyTrace) -> dict:
    return {
        "steps": [
            {
                "job": s.job,
                "size": s.size,
                "gap_start": s.gap_start,
                "gap_length": s.gap_length,
                "placement": s.placement,
                "shift": s.shift,
                "parent": s.parent,
                "makespan": s.makespan,
            }
            for s in trace
        ]
    }


def greedy_trace_from_obj(obj: Any) -> GreedyTrace:
    if not isinstance(obj, dict) or not isinstance(obj.get("steps"), list):
        raise ValueError("trace JSON must be an object with a \"steps\" array")
    return tuple(
        TraceStep(
            job=s["job"],
            size=s["size"],
            gap_start=s["gap_start"],
            gap_length=s["gap_length"],
            placement=s["placement"],
            shift=s["shift"],
            parent=s["parent"],
            makespan=s["makespan"],
        )
        for s in obj["steps"]
    )


def execution_trace_to_obj(trace: ExecutionTrace) -> dict:
    records = []
    for r in trace.records:
        entry = {
            "job": r.job,
            "size": encode_exact(r.size),
            "start": encode_exact(r.start),
            "status": "executed" if r.executed else "canceled",
        }
        if r.executed:
            entry["end"] = encode_exact(r.end)
        else:
            entry["canceled_by"] = r.canceled_by
        records.append(entry)
    return {"completion": encode_exact(trace.completion), "records": records}


def execution_trace_from_obj(obj: Any) -> ExecutionTrace:
    if not isinstance(obj, dict) or not isinstance(obj.get("records"), list):
        raise ValueError("execution trace JSON must be an object with a \"records\" array")
    records = []
    for r in obj["records"]:
        executed = r.get("status") == "executed"
        records.append(
            ExecutionRecord(
                job=r["job"],
                size=decode_exact(r["size"]),
                start=decode_exact(r["start"]),
                executed=executed,
                end=decode_exact(r["end"]) if executed else None,
                canceled_by=None if executed else r.get("canceled_by"),
            )
        )
    return ExecutionTrace(records=tuple(records), completion=decode_exact(obj["completion"]))


def demands_to_obj(demands) -> dict:
    return {"demands": [encode_exact(d) for d in demands]}


def demands_from_obj(obj: Any) -> tuple[ExactNumber, ...]:
    if not isinstance(obj, dict) or not isinstance(obj.get("demands"), list):
        raise ValueError("demands JSON must be an object with a \"demands\" array")
    return tuple(decode_exact(d) for d in obj["demands"])


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    return json.loads(text)


def write_json(path, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(obj))


def read_json(path) -> Any:
    with open(path, encoding="utf-8") as handle:
        return json.loads(handle.read())
