"""File formats and canonical JSON/CSV output (1-based indices on disk)."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from .polyhedra import Cone
from .seed import ExchangeMatrix, MutationLoop, SeedError
from .tropical import sign_string

_INT64 = 2 ** 63


class MalformedInput(ValueError):
    """Input file does not match the expected schema."""


def _load_json(src):
    if isinstance(src, dict):
        return src
    try:
        with open(src) as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedInput(f"{src}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{src}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _int_matrix(obj, name):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise MalformedInput(f"field '{name}' must be a list of integer rows")
    out = []
    for i, r in enumerate(obj):
        row = []
        for j, x in enumerate(r):
            if isinstance(x, str):
                try:
                    x = int(x)
                except ValueError:
                    raise MalformedInput(f"field '{name}'[{i}][{j}] is not an integer") from None
            if isinstance(x, bool) or not isinstance(x, int):
                raise MalformedInput(f"field '{name}'[{i}][{j}] is not an integer")
            row.append(x)
        out.append(row)
    return out


def _int_list(obj, name):
    if not isinstance(obj, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in obj):
        raise MalformedInput(f"field '{name}' must be a list of integers")
    return obj


def load_seed(src):
    d = _load_json(src)
    if "b" not in d:
        raise MalformedInput("missing field 'b'")
    b = _int_matrix(d["b"], "b")
    if "n" in d and d["n"] != len(b):
        raise MalformedInput(f"field 'n' is {d['n']} but 'b' has {len(b)} rows")
    try:
        return ExchangeMatrix(b)
    except SeedError as exc:
        raise MalformedInput(f"field 'b': {exc}") from None


def load_loop(src):
    d = _load_json(src)
    b = load_seed({"b": d.get("b")}) if "b" in d else None
    if b is None:
        raise MalformedInput("missing field 'b'")
    if "word" not in d:
        raise MalformedInput("missing field 'word'")
    word = _int_list(d["word"], "word")
    bad = [k for k in word if not 1 <= k <= b.n]
    if bad:
        raise MalformedInput(f"field 'word': index {bad[0]} outside 1..{b.n}")
    sigma = d.get("sigma")
    if sigma is not None:
        sigma = _int_list(sigma, "sigma")
        if sorted(sigma) != list(range(1, b.n + 1)):
            raise MalformedInput(f"field 'sigma' is not a permutation of 1..{b.n}")
        sigma = tuple(s - 1 for s in sigma)
    try:
        return MutationLoop(b, tuple(k - 1 for k in word), sigma)
    except SeedError as exc:
        raise MalformedInput(str(exc)) from None


def load_cone(src):
    d = _load_json(src)
    if "normals" not in d:
        raise MalformedInput("missing field 'normals'")
    normals = _int_matrix(d["normals"], "normals")
    if not normals:
        raise MalformedInput("field 'normals' is empty")
    if len({len(v) for v in normals}) != 1:
        raise MalformedInput("field 'normals' has rows of different lengths")
    return Cone([tuple(v) for v in normals])


def seed_to_json(b):
    return {"n": b.n, "b": b.tolist()}


def loop_to_json(loop):
    d = {"b": loop.b0.tolist(), "word": [k + 1 for k in loop.word]}
    if not loop.horizontal:
        d["sigma"] = [s + 1 for s in loop.sigma]
    return d


def frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(obj):
    """Convert library values to JSON-safe canonical data.

    Big integers become decimal strings, floats become 15-significant-digit
    strings, Fractions become "p/q" strings.
    """
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _INT64 else obj
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return str(obj)
        return format(obj, ".15g")
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, Cone):
        return to_jsonable(obj.to_json())
    if is_dataclass(obj):
        return to_jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "tolist"):
        return to_jsonable(obj.tolist())
    if isinstance(obj, complex):
        return [format(obj.real, ".15g"), format(obj.imag, ".15g")]
    return str(obj)


def dumps(obj):
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def report_to_json(report):
    d = asdict(report)
    for key in ("stable_sign", "stable_sign_minus"):
        if d[key] is not None:
            d[key] = sign_string(d[key])
    if isinstance(d["n0"], tuple):
        d["n0"] = list(d["n0"])
    return to_jsonable(d)


def snapshots_to_json(snaps):
    return to_jsonable([{"m": s.m, "C": s.c, "G": s.g, "F": s.f,
                         "tropSigns": sign_string(s.trop_signs)} for s in snaps])


def orbit_rows(points, signs):
    rows = []
    for i, p in enumerate(points):
        rows.append([i] + [frac_str(x) for x in p] + [sign_string(signs[i]) if i < len(signs) else ""])
    return rows


def orbit_to_csv(points, signs):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    n = len(points[0])
    w.writerow(["step"] + [f"x_{j + 1}" for j in range(n)] + ["sign"])
    w.writerows(orbit_rows(points, signs))
    return buf.getvalue()


def orbit_to_json(points, signs):
    return to_jsonable({"points": [[frac_str(x) for x in p] for p in points],
                        "signs": [sign_string(s) for s in signs]})


def rows_to_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([format(x, ".15g") if isinstance(x, float) else x for x in r])
    return buf.getvalue()
