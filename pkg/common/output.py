# Copyright 2024 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json

from json2html import json2html

SUPPRESSED = "-"


def _shape(parts):
    return "(" + ",".join(str(p) for p in parts) + ")"


def format_table(headers, rows):
    """Left-aligned fixed-width columns separated by two spaces."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _terms_table(terms):
    return format_table(("lambda", "coeff"), [(_shape(t["lambda"]), t["coeff"]) for t in terms])


def _expand(data):
    return [_terms_table(data["terms"])]


def _coeff(data):
    return [format_table(("lambda", "coeff"), [(_shape(data["lambda"]), data["coeff"])])]


def _mf(data):
    rows = [("verdict", "true" if data["verdict"] else "false"), ("clause", data["clause"])]
    if data.get("detail"):
        rows.append(("detail", data["detail"]))
    return [format_table(("field", "value"), rows)]


def _witness(data):
    certificate = data.get("certificate")
    if certificate is None:
        return ["multiplicity-free; no witness"]
    rows = [
        ("lambda", _shape(certificate["lambda"])),
        ("coeff >=", certificate["coeff"]),
        ("status", certificate["status"]),
    ]
    if certificate["engine_coeff"] is not None:
        rows.append(("engine coeff", certificate["engine_coeff"]))
    steps = []
    for index, step in enumerate(certificate["steps"]):
        if step["kind"] == "seed":
            text = f"seed {_shape(step['lambda'])} = {step['coeff']} at {_shape(step['nu'])} / {_shape(step['mu'])} [{step['source']}]"
        elif "alpha" in step:
            text = f"{step['kind']} {_shape(step['alpha'])}"
        elif "r" in step:
            text = f"{step['kind']} {step['r']}"
        else:
            text = step["kind"]
        steps.append((index, text))
    return [format_table(("field", "value"), rows), format_table(("step", "derivation"), steps)]


def _domino(data):
    plus = {tuple(t["lambda"]): t["coeff"] for t in data["plus"]}
    minus = {tuple(t["lambda"]): t["coeff"] for t in data["minus"]}
    keys = sorted(set(plus) | set(minus), reverse=True)
    blocks = [format_table(("lambda", "+", "-"), [(_shape(k), plus.get(k, "0"), minus.get(k, "0")) for k in keys])]
    blocks.extend(data.get("renders") or [])
    return blocks


def _table(data):
    rows = [
        (_shape(row["nu"]), _shape(row["mu"]), SUPPRESSED if row["p"] == "1" else row["p"])
        for row in data["rows"]
    ]
    blocks = [format_table(("nu", "mu", "p"), rows)]
    if data.get("golden_agrees") is not None:
        blocks.append(f"golden table agrees: {'yes' if data['golden_agrees'] else 'no'}")
    return blocks


_RENDERERS = {
    "expand": _expand,
    "coeff": _coeff,
    "mf": _mf,
    "witness": _witness,
    "domino": _domino,
    "table": _table,
}


def render_human(record):
    data = record.to_dict()
    header = [record.command] + [
        f"{key}={_shape(value) if isinstance(value, list) else value}" for key, value in record.inputs.items()
    ]
    blocks = ["  ".join(header)] + _RENDERERS[record.command](data)
    if record.oracle_agrees is not None:
        blocks.append(f"oracle agrees: {'yes' if record.oracle_agrees else 'no'}")
    return "\n\n".join(blocks)


def render_json(record):
    return json.dumps(record.to_dict(), indent=2)


def render_html(record):
    return json2html.convert(json=record.to_dict())


def render(record, fmt="human"):
    if fmt == "json":
        return render_json(record)
    if fmt == "html":
        return render_html(record)
    return render_human(record)
