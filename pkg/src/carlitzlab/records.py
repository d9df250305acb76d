"""Output records shared by every CLI command.

JSON output is one record per line; CSV uses ``CSV_HEADER``.  Values are
strings in the canonical text formats: polynomials and rational functions
as in :mod:`carlitzlab.poly`, rationals as ``num/den`` (or an integer).
"""

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources

from .ffield import FieldSpec
from .poly import parse_ratfunc

SCHEMA_VERSION = 1
CSV_HEADER = ["command", "params", "quantity", "n", "k", "method", "value", "match"]


@dataclass
class OutputRecord:
    command: str
    params: dict
    value: str
    method: str
    quantity: str = None
    n: int = None
    k: int = None
    match: bool = None
    detail: str = None
    schema_version: int = field(default=SCHEMA_VERSION)

    def to_dict(self):
        d = asdict(self)
        d["params"] = dict(sorted(self.params.items()))
        order = ["schema_version", "command", "params", "quantity", "n", "k",
                 "method", "value", "match", "detail"]
        return {key: d[key] for key in order if d[key] is not None or key in ("n", "k")}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, line):
        d = json.loads(line)
        return cls(**d)


def params_str(params):
    return ";".join(f"{k}={v}" for k, v in sorted(params.items()))


def write_csv(records, stream):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([
            r.command, params_str(r.params), r.quantity or "",
            "" if r.n is None else r.n, "" if r.k is None else r.k,
            r.method, r.value, "" if r.match is None else str(r.match).lower(),
        ])


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def record_value(rec):
    """Parse ``rec.value`` back into an exact object (RatFunc or Fraction)."""
    r = rec.params.get("r")
    if r is not None:
        return parse_ratfunc(rec.value, FieldSpec.of(int(r)))
    return Fraction(rec.value)


def load_schema():
    text = resources.files("carlitzlab").joinpath("schema/output_record.schema.json").read_text()
    return json.loads(text)
