"""Running strata, merging records, and checking the census totals."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .groupact import GROUP_NAMES
from .records import STRATA, CurveRecord, read_jsonl, write_jsonl
from .weilzeta import admissible, counts_to_lpoly, load_isogeny_list, newton_polygon_of


def _runner(stratum: str):
    if stratum == "hyp":
        from .strata.hyperelliptic import hx_records
        return hx_records
    if stratum == "biell":
        from .strata.bielliptic import biell_records
        return biell_records
    if stratum == "quintic":
        from .strata.quintic import quintic_sweep
        return quintic_sweep
    if stratum in ("t0", "t2"):
        from .strata.trigonal import subset_records
        return lambda shard=None: subset_records(stratum, shard)
    if stratum == "bn":
        from .strata.generic import bn_records
        return bn_records
    raise ValueError(f"unknown stratum {stratum!r}")


def run(stratum: str, shard=None, out=None) -> list[CurveRecord]:
    recs = sorted(_runner(stratum)(shard), key=lambda r: r.sort_key)
    if out is not None:
        write_jsonl(recs, out)
    return recs


def merge(paths) -> list[CurveRecord]:
    recs = []
    for p in paths:
        recs.extend(read_jsonl(p))
    return sorted(recs, key=lambda r: r.sort_key)


# ------------------------------------------------------------ expected values

TABLE1 = {
    "hyp": (4134, 2048),
    "biell": (1530, 744),
    "quintic": (4204, 4096),
    "t0": (7282, 7166),
    "t2": (6181, 6148),
    "bn": (48896, 48413),
}
TOTAL = (72227, 68615)
MARKED = {"M_6,1": 223317, "M_6,2/S_2": 471210, "M_6,2": 650838}
ISOGENY_CLASSES = 164937
STRATUM_TITLES = {
    "hyp": "hyperelliptic",
    "biell": "bielliptic",
    "quintic": "plane quintic",
    "t0": "trigonal, Maroni 0",
    "t2": "trigonal, Maroni 2",
    "bn": "Brill-Noether general",
}


def mass_polynomial(q: int) -> int:
    """#M_6(F_q) for the census range of q."""
    return q ** 15 + q ** 14 + 2 * q ** 13 + q ** 12 - q ** 10 + q ** 3 - 1


# Informational predictions printed beside the empirical rows
PREDICTIONS = {
    "hyp": ("q^11", 2 ** 11),
    "biell": ("closed form", 742),
    "quintic": ("q^12", 2 ** 12),
    "t0": ("q^13 - q^10", 2 ** 13 - 2 ** 10),
    "t2": ("q^12 + q^11", 2 ** 12 + 2 ** 11),
}


# ------------------------------------------------------------ summary


@dataclass
class CensusSummary:
    rows: dict = field(default_factory=dict)     # stratum -> (count, mass)
    total: tuple = (0, Fraction(0))
    marked: dict = field(default_factory=dict)
    max_n1: int = 0
    max_n1_count: int = 0
    supersingular: int = 0
    supersingular_zetas: int = 0
    n4_zero: int = 0
    special_counts: int = 0
    distinct_lpolys: int = 0
    max_multiplicity: int = 0
    newton_polygons: int = 0
    fingerprints: dict = field(default_factory=dict)
    non_admissible: int = 0

    def as_dict(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, tuple):
                return [enc(v) for v in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x
        return {k: enc(v) for k, v in self.__dict__.items()}


SPECIAL = (0, 0, 0, 20, 15, 90)


def summarize(records, check_weil: bool = True) -> CensusSummary:
    """check_weil re-runs the (slow) admissibility test on every record."""
    s = CensusSummary()
    rows = {t: [0, Fraction(0)] for t in STRATA}
    m1 = m2s = m2 = Fraction(0)
    lp = Counter()
    ss = set()
    newton = set()
    fps = Counter()
    for r in records:
        w = Fraction(1, r.aut_order)
        rows[r.stratum][0] += 1
        rows[r.stratum][1] += w
        n1, n2 = r.counts[0], r.counts[1]
        m1 += n1 * w
        m2s += (comb(n1, 2) + Fraction(n2 - n1, 2)) * w
        m2 += n1 * (n1 - 1) * w
        if n1 > s.max_n1:
            s.max_n1, s.max_n1_count = n1, 0
        if n1 == s.max_n1:
            s.max_n1_count += 1
        lp[r.lpoly] += 1
        slopes = newton_polygon_of(r.lpoly, 2)
        newton.add(slopes)
        if all(x == Fraction(1, 2) for x in slopes):
            s.supersingular += 1
            ss.add(r.lpoly)
        if r.counts[3] == 0:
            s.n4_zero += 1
        if tuple(r.counts) == SPECIAL:
            s.special_counts += 1
        fps[r.aut_fingerprint] += 1
        if check_weil and not admissible(counts_to_lpoly(r.counts, 2, 6)):
            s.non_admissible += 1
    s.rows = {t: (c, m) for t, (c, m) in rows.items()}
    s.total = (sum(c for c, _ in s.rows.values()), sum((m for _, m in s.rows.values()), Fraction(0)))
    s.marked = {"M_6,1": m1, "M_6,2/S_2": m2s, "M_6,2": m2}
    s.supersingular_zetas = len(ss)
    s.distinct_lpolys = len(lp)
    s.max_multiplicity = max(lp.values(), default=0)
    s.newton_polygons = len(newton)
    s.fingerprints = dict(fps)
    return s


# ------------------------------------------------------------ verification


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        extra = ""
        if not self.ok and isinstance(self.expected, int) and isinstance(self.actual, (int, Fraction)):
            extra = f" (delta {self.actual - self.expected})"
        return f"{tag} {self.name}: expected {self.expected}, got {self.actual}{extra}"


def verify(records, isogeny_list=None) -> list[Check]:
    s = summarize(records)
    missing = [t for t in STRATA if s.rows[t][0] == 0]
    checks = [Check("strata present", [], missing)]
    for t in STRATA:
        checks.append(Check(f"{t} classes", TABLE1[t][0], s.rows[t][0]))
        checks.append(Check(f"{t} mass", TABLE1[t][1], s.rows[t][1]))
    checks += [
        Check("total classes", TOTAL[0], s.total[0]),
        Check("total mass", TOTAL[1], s.total[1]),
        Check("mass polynomial at q=2", TOTAL[1], mass_polynomial(2)),
        Check("total mass = polynomial", mass_polynomial(2), s.total[1]),
    ]
    for k, v in MARKED.items():
        checks.append(Check(f"#{k}", v, s.marked[k]))
    checks += [
        Check("max N_1", 10, s.max_n1),
        Check("curves attaining max N_1", 2, s.max_n1_count),
        Check("supersingular curves", 70, s.supersingular),
        Check("supersingular zeta functions", 28, s.supersingular_zetas),
        Check("curves with N_4 = 0", 0, s.n4_zero),
        Check(f"curves with counts {SPECIAL}", 1, s.special_counts),
        Check("distinct L-polynomials", 38327, s.distinct_lpolys),
        Check("max curves per L-polynomial", 20, s.max_multiplicity),
        Check("Newton polygons", 20, s.newton_polygons),
        Check("fingerprints outside the 12 groups", [],
              sorted(str(k) for k in s.fingerprints if k not in GROUP_NAMES)),
        Check("non-admissible records", 0, s.non_admissible),
    ]
    if isogeny_list is not None:
        classes = load_isogeny_list(isogeny_list)
        lp = {r.lpoly for r in records}
        checks.append(Check("isogeny list size", ISOGENY_CLASSES, len(classes)))
        checks.append(Check("L-polynomials outside the isogeny list", 0, len(lp - classes)))
    return checks


# ------------------------------------------------------------ report


def report(records) -> str:
    s = summarize(records, check_weil=False)
    lines = [f"{'stratum':<24}{'classes':>9}{'mass':>12}   prediction"]
    for t in STRATA:
        c, m = s.rows[t]
        pred = PREDICTIONS.get(t)
        ptxt = f"{pred[0]} = {pred[1]}" if pred else ""
        lines.append(f"{STRATUM_TITLES[t]:<24}{c:>9}{str(m):>12}   {ptxt}")
    lines.append(f"{'total':<24}{s.total[0]:>9}{str(s.total[1]):>12}   P(2) = {mass_polynomial(2)}")
    lines.append("")
    for k, v in s.marked.items():
        lines.append(f"#{k} = {v}")
    lines.append(f"max N_1 = {s.max_n1} ({s.max_n1_count} curves)")
    lines.append(f"supersingular: {s.supersingular} curves, {s.supersingular_zetas} zeta functions")
    lines.append(f"distinct L-polynomials: {s.distinct_lpolys}, max multiplicity {s.max_multiplicity}")
    lines.append(f"Newton polygons: {s.newton_polygons}")
    fp = ", ".join(f"{k}: {v}" for k, v in sorted(s.fingerprints.items(), key=lambda kv: str(kv[0])))
    lines.append(f"automorphism groups: {fp}")
    return "\n".join(lines)
