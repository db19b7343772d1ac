"""Variety records, TSV ingestion, and the classification filter.

A small built-in dataset collects the classified varieties whose
congruence of (n-1)-secant lines has order one, together with
complete-intersection non-examples.  classify_threefolds and
classify_surfaces re-run the numerical selection: quadruple/triple
point count one, vanishing 4-secant residual, and the focal degree
window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from .formulas import (
    SurfaceInvariants,
    ThreefoldInvariants,
    apparent_triple_points,
    curve_foursecants,
    focal_degree_bound,
    four_secants_through_point,
    foursecant_constraint_residual,
    foursecant_scroll_degree,
    quadruple_points,
)

TSV_COLUMNS = (
    "name",
    "n",
    "dim",
    "d",
    "pi",
    "chi_S",
    "chi_X",
    "K2",
    "scroll",
    "tags",
)


@dataclass(frozen=True)
class VarietyRecord:
    """One codimension-two variety with the invariants its dimension needs.

    chi_section is chi(O) of the general hyperplane section (threefolds
    only); chi is chi(O) of the variety itself.  scroll marks surfaces
    that are scrolls, for which the triple point count does not apply.
    """

    name: str
    n: int
    dim: int
    d: int
    pi: int
    chi_section: Optional[int] = None
    chi: Optional[int] = None
    k_squared: Optional[int] = None
    scroll: Optional[bool] = None
    tags: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.name:
            raise ValueError("record needs a name")
        if self.n < 3:
            raise ValueError("%s: n must be >= 3" % self.name)
        if self.dim != self.n - 2:
            raise ValueError(
                "%s: dim %d is not n-2 = %d" % (self.name, self.dim, self.n - 2)
            )
        if self.d < 1:
            raise ValueError("%s: degree must be >= 1" % self.name)
        if self.pi < 0:
            raise ValueError("%s: sectional genus must be >= 0" % self.name)
        required = {3: ("chi_section", "chi"), 2: ("chi", "k_squared", "scroll")}
        for fieldname in required.get(self.dim, ()):
            if getattr(self, fieldname) is None:
                raise ValueError("%s: missing field %s" % (self.name, fieldname))

    def threefold_invariants(self) -> ThreefoldInvariants:
        if self.dim != 3:
            raise ValueError("%s is not a threefold" % self.name)
        return ThreefoldInvariants(self.d, self.pi, self.chi_section, self.chi)

    def surface_invariants(self) -> SurfaceInvariants:
        if self.dim != 2:
            raise ValueError("%s is not a surface" % self.name)
        return SurfaceInvariants(self.d, self.pi, self.chi, self.k_squared)


# ----- TSV parsing -----


def _parse_int(token: str, line_no: int, column: str) -> Optional[int]:
    if token == "":
        return None
    try:
        return int(token)
    except ValueError:
        raise ValueError(
            "line %d, column %s: not an integer %r" % (line_no, column, token)
        ) from None


def parse_catalog(text: str) -> tuple:
    """Parse TSV catalog text into validated records.

    Schema: header `name n dim d pi chi_S chi_X K2 scroll tags`, tab
    separated, blank cells for inapplicable fields, scroll in {0,1},
    tags comma separated.
    """
    lines = text.splitlines()
    if not lines:
        raise ValueError("line 1: missing header")
    header = tuple(lines[0].rstrip("\n").split("\t"))
    if header != TSV_COLUMNS:
        raise ValueError(
            "line 1: header must be %s" % "\t".join(TSV_COLUMNS)
        )
    records = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != len(TSV_COLUMNS):
            raise ValueError(
                "line %d: expected %d columns, got %d"
                % (line_no, len(TSV_COLUMNS), len(cells))
            )
        row = dict(zip(TSV_COLUMNS, cells))
        scroll_token = row["scroll"]
        if scroll_token not in ("", "0", "1"):
            raise ValueError(
                "line %d, column scroll: expected 0 or 1, got %r"
                % (line_no, scroll_token)
            )
        ints = {
            col: _parse_int(row[col], line_no, col)
            for col in ("n", "dim", "d", "pi", "chi_S", "chi_X", "K2")
        }
        for col in ("n", "dim", "d", "pi"):
            if ints[col] is None:
                raise ValueError("line %d, column %s: required" % (line_no, col))
        tags = tuple(t for t in row["tags"].split(",") if t)
        try:
            record = VarietyRecord(
                name=row["name"],
                n=ints["n"],
                dim=ints["dim"],
                d=ints["d"],
                pi=ints["pi"],
                chi_section=ints["chi_S"],
                chi=ints["chi_X"],
                k_squared=ints["K2"],
                scroll=None if scroll_token == "" else scroll_token == "1",
                tags=tags,
            )
        except ValueError as err:
            raise ValueError("line %d: %s" % (line_no, err)) from None
        records.append(record)
    return tuple(records)


def save_catalog(records: Sequence[VarietyRecord]) -> str:
    def cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "1" if value else "0"
        return str(value)

    lines = ["\t".join(TSV_COLUMNS)]
    for r in records:
        lines.append(
            "\t".join(
                (
                    r.name,
                    cell(r.n),
                    cell(r.dim),
                    cell(r.d),
                    cell(r.pi),
                    cell(r.chi_section),
                    cell(r.chi),
                    cell(r.k_squared),
                    cell(r.scroll),
                    ",".join(r.tags),
                )
            )
        )
    return "\n".join(lines) + "\n"


def load_catalog(path) -> tuple:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_catalog(handle.read())


def load_builtin_catalog() -> tuple:
    text = resources.files("quadpoint").joinpath("data/builtin_catalog.tsv").read_text(
        encoding="utf-8"
    )
    return parse_catalog(text)


# ----- classification -----


def rational_json(value: Fraction) -> dict:
    """Exact rational as JSON-safe decimal strings."""
    f = Fraction(value)
    return {"num": str(f.numerator), "den": str(f.denominator)}


@dataclass(frozen=True)
class RecordVerdict:
    """Per-record outcome: named boolean verdicts plus the computed
    counts behind them; passed is the conjunction of all verdicts."""

    name: str
    verdicts: dict
    computed: dict

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def jsonable(self) -> dict:
        return {
            "name": self.name,
            "verdicts": dict(self.verdicts),
            "computed": {k: rational_json(v) for k, v in self.computed.items()},
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ClassificationReport:
    entries: tuple

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, name: str) -> RecordVerdict:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def jsonable(self) -> list:
        return [e.jsonable() for e in self.entries]


def classify_threefolds(
    records: Sequence[VarietyRecord], multiplicity: int = 1
) -> ClassificationReport:
    """Select threefolds in P^5 whose secant-line congruence can have
    order one: one apparent quadruple point, vanishing 4-secant
    residual, degree inside the focal window, and integral counts."""
    entries = []
    for r in records:
        if r.dim != 3 or r.n != 5:
            raise ValueError("%s: classify_threefolds needs dim 3, n 5" % r.name)
        inv = r.threefold_invariants()
        q = quadruple_points(inv)
        a1 = foursecant_scroll_degree(r.d, r.pi, r.chi_section)
        a2 = curve_foursecants(r.d, r.pi)
        residual = foursecant_constraint_residual(r.d, r.pi, r.chi_section)
        verdicts = {
            "quadruple_point_one": q == 1,
            "residual_zero": residual == 0,
            "degree_bound": focal_degree_bound(5, r.d, multiplicity),
            "integral": all(v.denominator == 1 for v in (q, a1, a2)),
        }
        computed = {"q": q, "a1": a1, "a2": a2, "residual": residual}
        entries.append(RecordVerdict(r.name, verdicts, computed))
    return ClassificationReport(tuple(entries))


def multidegree_of_verdict(v: RecordVerdict) -> tuple:
    """The (1, a1, a2) multidegree of the 4-secant family, meaningful
    for passing threefolds."""
    a1, a2 = v.computed["a1"], v.computed["a2"]
    if a1.denominator != 1 or a2.denominator != 1:
        raise ValueError("%s: non-integral multidegree" % v.name)
    return (1, int(a1), int(a2))


def classify_surfaces(records: Sequence[VarietyRecord]) -> ClassificationReport:
    """Select non-scroll surfaces in P^4 with exactly one apparent
    triple point and degree in the admissible window 4..8."""
    entries = []
    for r in records:
        if r.dim != 2 or r.n != 4:
            raise ValueError("%s: classify_surfaces needs dim 2, n 4" % r.name)
        triple = apparent_triple_points(r.surface_invariants())
        verdicts = {
            "triple_point_one": triple == 1,
            "degree_window": 4 <= r.d <= 8,
            "not_scroll": not r.scroll,
        }
        entries.append(RecordVerdict(r.name, verdicts, {"triple": triple}))
    return ClassificationReport(tuple(entries))


# ----- exclusion scan -----


def scan_exclusion(d: int, pi_range: tuple, chi_range: tuple) -> tuple:
    """Enumerate (pi, chi_S) over the given inclusive ranges, solve
    q = 1 exactly for chi_X (q is affine of slope 6 in chi_X), and keep
    triples with integral in-range chi_X and vanishing 4-secant
    residual.  Survivors are re-verified post hoc.  Negative lower pi
    bounds clamp to 0, since sectional genus cannot be negative.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    pi_lo, pi_hi = pi_range
    chi_lo, chi_hi = chi_range
    if pi_lo > pi_hi or chi_lo > chi_hi:
        raise ValueError("empty range")
    if pi_lo < 0:
        pi_lo = 0
    survivors = []
    for pi in range(pi_lo, pi_hi + 1):
        for chi_s in range(chi_lo, chi_hi + 1):
            rest = quadruple_points(ThreefoldInvariants(d, pi, chi_s, 0))
            chi_x = (1 - rest) / 6
            if chi_x.denominator != 1:
                continue
            chi_x = int(chi_x)
            if not chi_lo <= chi_x <= chi_hi:
                continue
            if foursecant_constraint_residual(d, pi, chi_s) != 0:
                continue
            assert quadruple_points(ThreefoldInvariants(d, pi, chi_s, chi_x)) == 1
            survivors.append((pi, chi_s, chi_x))
    return tuple(survivors)
