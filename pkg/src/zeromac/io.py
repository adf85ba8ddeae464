"""JSON file formats and canonical report emission.

Reports are written by a small serializer instead of :func:`json.dumps` so
that floats always carry exactly six fractional digits and arrays of scalars
stay on one line; identical results give byte-identical documents.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Any

from .codec import SynthesisResult, Verdict
from .errors import ZeromacError
from .mac import Channel, Code, CooperationStructure, build_channel
from .overlap import Info, Partition
from .region import RateRegion, SingleUserCapacity
from .uv import World, build_world


# -- reading ---------------------------------------------------------------


def read_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ZeromacError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ZeromacError(f"{path} is not valid JSON: {exc}") from None


def _field(doc, key, kind, where):
    if not isinstance(doc, dict) or key not in doc:
        raise ZeromacError(f"{where}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ZeromacError(f"{where}: field {key!r} has the wrong type")
    return value


def _seq(value, where) -> tuple:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise ZeromacError(f"{where}: a sequence must be an array of strings")
    return tuple(value)


def world_from_doc(doc) -> World:
    variables = _field(doc, "variables", list, "world")
    outcomes = _field(doc, "outcomes", list, "world")
    return build_world(variables, [_seq(o, "world outcome") for o in outcomes])


def channel_from_doc(doc) -> Channel:
    alphabets = [_field(doc, k, list, "channel") for k in ("x1", "x2", "w", "y")]
    transitions = _field(doc, "transitions", list, "channel")
    for t in transitions:
        if not isinstance(t, dict) or set(t) != {"x1", "x2", "w", "y"}:
            raise ZeromacError(f"channel: malformed transition {t!r}")
    return build_channel(*alphabets, transitions)


def structure_from_doc(doc) -> CooperationStructure:
    n = _field(doc, "n", int, "structure")
    rows = []
    for u in _field(doc, "u", list, "structure"):
        label = _field(u, "label", str, "structure entry")
        a = [_seq(s, "structure entry") for s in _field(u, "a", list, "structure entry")]
        b = [_seq(s, "structure entry") for s in _field(u, "b", list, "structure entry")]
        rows.append((label, a, b))
    return CooperationStructure.make(n, rows)


def code_from_doc(doc) -> Code:
    n = _field(doc, "n", int, "code")
    mu = _field(doc, "mu", list, "code")
    if len(mu) != 3 or not all(isinstance(m, int) for m in mu):
        raise ZeromacError("code: mu must be three integers")
    tables = []
    for key in ("gamma1", "gamma2"):
        table = {}
        for rec in _field(doc, key, list, "code"):
            k = (_field(rec, "m0", int, key), _field(rec, "m", int, key))
            if k in table:
                raise ZeromacError(f"code: duplicate {key} entry for {k}")
            table[k] = _seq(_field(rec, "sequence", list, key), key)
        tables.append(table)
    stages = [None, None, None]
    if "decoder" in doc:
        dec = _field(doc, "decoder", dict, "code")
        stages[0] = {
            _seq(r["y"], "stage0"): _field(r, "m0", int, "stage0")
            for r in _field(dec, "stage0", list, "decoder")
        }
        for i, key in ((1, "stage1"), (2, "stage2")):
            stages[i] = {
                (_field(r, "m0", int, key), _seq(r["y"], key)): _field(r, "m", int, key)
                for r in _field(dec, key, list, "decoder")
            }
    return Code(n, tuple(mu), *tables, *stages)


def load_world(path) -> World:
    return world_from_doc(read_json(path))


def load_channel(path) -> Channel:
    return channel_from_doc(read_json(path))


def load_structure(path) -> CooperationStructure:
    return structure_from_doc(read_json(path))


def load_code(path) -> Code:
    return code_from_doc(read_json(path))


# -- documents ----------------------------------------------------------------


def world_doc(w: World) -> dict:
    return {"variables": list(w.variables), "outcomes": [list(o) for o in w.outcomes]}


def channel_doc(ch: Channel) -> dict:
    return {
        "x1": list(ch.x1),
        "x2": list(ch.x2),
        "w": list(ch.w),
        "y": list(ch.y),
        "transitions": [
            {"x1": a, "x2": b, "w": z, "y": out} for (a, b, z), out in sorted(ch.table.items())
        ],
    }


def structure_doc(s: CooperationStructure) -> dict:
    return {
        "n": s.n,
        "u": [
            {"label": e.label, "a": [list(x) for x in e.a], "b": [list(x) for x in e.b]}
            for e in s.entries
        ],
    }


def code_doc(code: Code) -> dict:
    doc: dict = {
        "n": code.n,
        "mu": list(code.mu),
        "gamma1": [
            {"m0": k[0], "m": k[1], "sequence": list(v)} for k, v in sorted(code.gamma1.items())
        ],
        "gamma2": [
            {"m0": k[0], "m": k[1], "sequence": list(v)} for k, v in sorted(code.gamma2.items())
        ],
    }
    if code.has_decoder:
        doc["decoder"] = {
            "stage0": [{"y": list(y), "m0": m} for y, m in sorted(code.stage0.items())],
            "stage1": [
                {"m0": k[0], "y": list(k[1]), "m": m} for k, m in sorted(code.stage1.items())
            ],
            "stage2": [
                {"m0": k[0], "y": list(k[1]), "m": m} for k, m in sorted(code.stage2.items())
            ],
        }
    return doc


def partition_doc(p: Partition) -> list:
    return p.as_lists()


def info_doc(info: Info) -> dict:
    return {"cells": info.cells, "bits": info.bits}


def synthesis_doc(r: SynthesisResult) -> dict:
    return {
        "achieved": list(r.achieved),
        "representatives": [{"m0": m0, "u": u} for m0, u in sorted(r.representatives.items())],
        "cells": [
            {"m0": k[0], "input": k[1], "labels": list(v)}
            for k, v in sorted(r.cell_assignments.items())
        ],
        "code": code_doc(r.code),
    }


def region_doc(region: RateRegion) -> dict:
    best = list(region.maximal)
    witnesses = []
    for mu in best:
        wit = region.witnesses[mu]
        if isinstance(wit, CooperationStructure):
            witnesses.append({"mu": list(mu), "kind": "structure", "structure": structure_doc(wit)})
        else:
            witnesses.append({"mu": list(mu), "kind": "code", "code": code_doc(wit)})
    rows = []
    triples = sorted(region.checked) if region.checked is not None else region.points
    for t in triples:
        ok = t in region if region.checked is None else region.checked[t]
        m = region.witness_for(t) if ok else None
        rows.append(
            {
                "mu0": t[0],
                "mu1": t[1],
                "mu2": t[2],
                "achievable": ok,
                "witness": best.index(m) if m is not None else None,
            }
        )
    return {
        "n": region.n,
        "method": region.method,
        "maximal": [list(t) for t in best],
        "points": rows,
        "witnesses": witnesses,
    }


def single_user_doc(r: SingleUserCapacity, alpha: int) -> dict:
    return {
        "n": r.n,
        "cells": r.cells,
        "bits": r.bits,
        "bits_per_use": r.bits_per_use,
        "codebook": [list(s) for s in r.codebook],
        "independence_number": alpha,
        "agree": r.cells == alpha,
    }


def to_document(result) -> Any:
    if isinstance(result, Partition):
        return partition_doc(result)
    if isinstance(result, Info):
        return info_doc(result)
    if isinstance(result, RateRegion):
        return region_doc(result)
    if isinstance(result, Verdict):
        return result.as_dict()
    if isinstance(result, SynthesisResult):
        return synthesis_doc(result)
    if isinstance(result, Code):
        return code_doc(result)
    if isinstance(result, CooperationStructure):
        return structure_doc(result)
    if isinstance(result, World):
        return world_doc(result)
    if isinstance(result, Channel):
        return channel_doc(result)
    if isinstance(result, (dict, list)):
        return result
    raise ZeromacError(f"cannot serialise {type(result).__name__}")


# -- emission ---------------------------------------------------------------------


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.6f}"
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    raise ZeromacError(f"cannot serialise value of type {type(v).__name__}")


def dumps(doc, indent: int = 0) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(doc, (list, tuple)):
        if not doc:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in doc):
            return "[" + ", ".join(_scalar(v) for v in doc) + "]"
        if all(isinstance(v, (list, tuple)) and all(not isinstance(x, (dict, list, tuple)) for x in v) for v in doc):
            return "[\n" + ",\n".join(pad + dumps(v) for v in doc) + "\n" + end + "]"
        return "[\n" + ",\n".join(pad + dumps(v, indent + 1) for v in doc) + "\n" + end + "]"
    return _scalar(doc)


def region_csv(region: RateRegion) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["mu0", "mu1", "mu2", "achievable", "witness"])
    for row in region_doc(region)["points"]:
        writer.writerow(
            [
                row["mu0"],
                row["mu1"],
                row["mu2"],
                "true" if row["achievable"] else "false",
                "" if row["witness"] is None else row["witness"],
            ]
        )
    return buf.getvalue()


def emit_report(result, fmt: str = "json") -> str:
    """Render a result as a canonical JSON document or, for regions, a CSV table."""
    if fmt == "json":
        return dumps(to_document(result)) + "\n"
    if fmt == "csv":
        if not isinstance(result, RateRegion):
            raise ZeromacError("comma-separated output is only available for region tables")
        return region_csv(result)
    raise ZeromacError(f"unknown output format {fmt!r}")


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
