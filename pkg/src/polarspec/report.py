"""Machine-readable spectrum reports: canonical JSON and CSV.

The JSON form is canonical (sorted keys, two-space indent, trailing
newline) so byte-identical round-trips can be asserted by golden tests.
Exact values are carried as {"num": decimal string, "exp2": int} pairs,
never as floats; decimal renderings are strings produced by the exact
dyadic rounding.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .construct import CodeConfig
from .dyadic import DyadicRational
from .oracle import WeightHistogram
from .spectrum import AverageSpectrum

__all__ = ["SpectrumReport", "report_from_average", "report_from_histogram"]

CSV_COLUMNS = ("d", "value_decimal", "num", "exp2", "variance", "samples", "saturated")


@dataclass(frozen=True, slots=True)
class SpectrumReport:
    """One spectrum computation, ready for serialization."""

    code: dict
    method: str
    entries: list = field(default_factory=list)
    transform: dict | None = None
    samples: int | None = None
    seed: int | None = None
    list_size: int | None = None

    def to_dict(self) -> dict:
        out: dict = {"code": self.code, "method": self.method, "entries": self.entries}
        if self.transform is not None:
            out["transform"] = self.transform
        if self.samples is not None:
            out["samples"] = self.samples
        if self.seed is not None:
            out["seed"] = self.seed
        if self.list_size is not None:
            out["list_size"] = self.list_size
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for e in self.entries:
            sat = e.get("saturated")
            writer.writerow(
                [
                    e["d"],
                    e["value"],
                    e.get("num", ""),
                    e.get("exp2", ""),
                    e.get("variance", ""),
                    e.get("samples", ""),
                    "" if sat is None else ("true" if sat else "false"),
                ]
            )
        return buf.getvalue()


def _code_block(config: CodeConfig, construction: str) -> dict:
    return {
        "n": config.n,
        "k": config.k,
        "construction": construction,
        "info_set": list(config.info_set),
    }


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}f}" if digits > 0 else str(round(x))


def report_from_average(
    config: CodeConfig,
    construction: str,
    spec: AverageSpectrum,
    digits: int = 6,
) -> SpectrumReport:
    """Report for the exact recursion output, one entry per weight."""
    entries = []
    for d in sorted(spec.entries):
        val: DyadicRational = spec.entries[d]
        entries.append(
            {"d": d, "num": str(val.num), "exp2": val.exp, "value": val.decimal(digits)}
        )
    return SpectrumReport(_code_block(config, construction), "recursion", entries)


def report_from_histogram(
    config: CodeConfig,
    construction: str,
    hist: WeightHistogram,
    digits: int = 6,
    transform: dict | None = None,
    list_size: int | None = None,
) -> SpectrumReport:
    """Report for an enumerated or sampled histogram.

    Integer and dyadic sources carry the exact num/exp2 pair; Monte-Carlo
    means carry decimal value, variance and the sample count instead.
    """
    entries = []
    for d, c in enumerate(hist.counts):
        e: dict = {"d": d}
        if hist.source == "monte-carlo":
            e["value"] = _fmt(c, digits)
            e["variance"] = _fmt(hist.variance[d], digits)
            e["samples"] = hist.samples
        elif isinstance(c, DyadicRational):
            e.update({"num": str(c.num), "exp2": c.exp, "value": c.decimal(digits)})
        else:
            e.update({"num": str(c), "exp2": 0, "value": _fmt(float(c), digits)})
        if hist.saturated is not None:
            e["saturated"] = bool(hist.saturated[d])
        entries.append(e)
    return SpectrumReport(
        _code_block(config, construction),
        hist.source,
        entries,
        transform=transform,
        samples=hist.samples if hist.source == "monte-carlo" else None,
        seed=hist.seed,
        list_size=list_size,
    )
