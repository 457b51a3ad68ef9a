"""Verification reports for the lex/saturation equivalence and the rigidity probe."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cohomology import (DegreeWindow, LCTable, SequentialCMVerdict, default_window,
                         local_cohomology_table, sequentially_cm_verdict, tables_agree)
from .families import FamilySpec, enumerate_strongly_stable
from .gotzmann import exchange_property, lex_ideal
from .ideals import MonomialIdeal
from .parsing import parse_monomial, parse_ring

VERDICT_CONSISTENT = "consistent"
VERDICT_VIOLATION = "THEOREM VIOLATION"

WINDOW_NOTE = ("comparisons are windowed; equality on the window is evidence, "
               "not a certificate")


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"ring": list(ideal.ring.names),
            "gens": [ideal.ring.monomial_str(g) for g in ideal.gens]}


def ideal_from_json(data: dict) -> MonomialIdeal:
    ring = parse_ring(",".join(data["ring"]))
    return MonomialIdeal(ring, tuple(parse_monomial(g, ring) for g in data["gens"]))


@dataclass
class VerificationReport:
    ideal: MonomialIdeal
    lex: MonomialIdeal
    sat_then_lex: MonomialIdeal       # left side of the exchange
    lex_then_sat: MonomialIdeal       # right side
    condition_i: bool
    window: DegreeWindow
    table_ideal: LCTable
    table_lex: LCTable
    condition_ii_on_window: bool
    first_mismatch: tuple[int, int] | None
    conclusive: bool                  # window covers the default bound
    gin: MonomialIdeal | None
    seq_cm: str | None
    condition_iii: bool | None
    verdict: str

    def to_json(self) -> dict:
        return {
            "ideal": ideal_to_json(self.ideal),
            "lex": ideal_to_json(self.lex),
            "saturations": {"left": ideal_to_json(self.sat_then_lex),
                            "right": ideal_to_json(self.lex_then_sat)},
            "condition_i": self.condition_i,
            "lc_window": [self.window.lo, self.window.hi],
            "tables": {"ideal": self.table_ideal.to_json(),
                       "lex": self.table_lex.to_json()},
            "condition_ii_on_window": self.condition_ii_on_window,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
            "conclusive": self.conclusive,
            "gin": ideal_to_json(self.gin) if self.gin else None,
            "seq_cm": self.seq_cm,
            "condition_iii": self.condition_iii,
            "verdict": self.verdict,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        lo, hi = data["lc_window"]
        mism = data["first_mismatch"]
        return cls(
            ideal=ideal_from_json(data["ideal"]),
            lex=ideal_from_json(data["lex"]),
            sat_then_lex=ideal_from_json(data["saturations"]["left"]),
            lex_then_sat=ideal_from_json(data["saturations"]["right"]),
            condition_i=data["condition_i"],
            window=DegreeWindow(lo, hi),
            table_ideal=LCTable.from_json(data["tables"]["ideal"]),
            table_lex=LCTable.from_json(data["tables"]["lex"]),
            condition_ii_on_window=data["condition_ii_on_window"],
            first_mismatch=tuple(mism) if mism else None,
            conclusive=data["conclusive"],
            gin=ideal_from_json(data["gin"]) if data["gin"] else None,
            seq_cm=data["seq_cm"],
            condition_iii=data["condition_iii"],
            verdict=data["verdict"],
        )

    def summary_lines(self) -> list[str]:
        lines = [
            f"ideal:            {self.ideal}",
            f"lex ideal:        {self.lex}",
            f"(sat)^lex:        {self.sat_then_lex}",
            f"(lex)^sat:        {self.lex_then_sat}",
            f"condition (i):    {self.condition_i}",
            f"window:           [{self.window.lo}, {self.window.hi}]",
            f"condition (ii):   {self.condition_ii_on_window} (on window)",
        ]
        if self.first_mismatch:
            lines.append(f"first mismatch:   (i, j) = {self.first_mismatch}")
        if self.gin is not None:
            lines.append(f"gin:              {self.gin}")
            lines.append(f"seq-CM verdict:   {self.seq_cm}")
            lines.append(f"condition (iii):  {self.condition_iii}")
        lines.append(f"verdict:          {self.verdict}")
        return lines


def verify_main(ideal: MonomialIdeal, window: DegreeWindow | None = None,
                include_gin: bool = False, trials: int = 3, seed: int = 0) -> VerificationReport:
    """Evaluate the exchange condition exactly and the cohomology condition on
    a window; a disagreement on a conclusive window is flagged as a violation
    (which would indicate a bug, not new mathematics)."""
    if ideal.is_unit:
        raise ValueError("verification needs a proper ideal")
    lex = lex_ideal(ideal)
    exchange = exchange_property(ideal)
    bound = default_window(ideal, lex)
    window = window or bound
    table_ideal = local_cohomology_table(ideal, window)
    table_lex = local_cohomology_table(lex, window)
    mismatch = tables_agree(table_ideal, table_lex, window)
    condition_ii = mismatch is None
    conclusive = window.covers(bound)
    verdict = VERDICT_CONSISTENT
    if conclusive and exchange.holds != condition_ii:
        verdict = VERDICT_VIOLATION
    gin_ideal = None
    seq_cm = None
    condition_iii = None
    if include_gin:
        from .groebner import gin
        gin_ideal = gin(ideal, trials=trials, seed=seed)
        seq_verdict = sequentially_cm_verdict(ideal, gin_ideal=gin_ideal)
        seq_cm = seq_verdict.value
        condition_iii = (seq_verdict is SequentialCMVerdict.CONSISTENT
                         and gin_ideal == lex)
    return VerificationReport(
        ideal=ideal, lex=lex,
        sat_then_lex=exchange.left, lex_then_sat=exchange.right,
        condition_i=exchange.holds,
        window=window, table_ideal=table_ideal, table_lex=table_lex,
        condition_ii_on_window=condition_ii, first_mismatch=mismatch,
        conclusive=conclusive,
        gin=gin_ideal, seq_cm=seq_cm, condition_iii=condition_iii,
        verdict=verdict)


@dataclass
class RigidityMemberReport:
    ideal: MonomialIdeal
    equal_rows: tuple[bool, ...]      # per cohomological index 0..n
    candidate: bool

    def to_json(self) -> dict:
        return {"ideal": ideal_to_json(self.ideal),
                "equal_rows": list(self.equal_rows),
                "candidate": self.candidate}


@dataclass
class RigidityReport:
    members: list[RigidityMemberReport]
    note: str = WINDOW_NOTE

    @property
    def candidates(self) -> list[RigidityMemberReport]:
        return [m for m in self.members if m.candidate]

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members],
                "candidates": [m.to_json() for m in self.candidates],
                "none_found": not self.candidates,
                "note": self.note}


def _rigidity_member(ideal: MonomialIdeal, window: DegreeWindow | None) -> RigidityMemberReport:
    lex = lex_ideal(ideal)
    w = window or default_window(ideal, lex)
    ours = local_cohomology_table(ideal, w)
    theirs = local_cohomology_table(lex, w)
    n = ideal.ring.n
    flags = tuple(
        all(ours.get(i, j) == theirs.get(i, j) for j in w.degrees())
        for i in range(n + 1))
    candidate = any(flags[i] and not all(flags[i:]) for i in range(n + 1))
    return RigidityMemberReport(ideal, flags, candidate)


def probe_rigidity(spec: FamilySpec, window: DegreeWindow | None = None,
                   jobs: int = 1) -> RigidityReport:
    """Search a family for windowed equality at one index without equality at
    a larger one.  Reports candidates only; never a claim."""
    members = list(enumerate_strongly_stable(spec))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda m: _rigidity_member(m, window), members))
    else:
        results = [_rigidity_member(m, window) for m in members]
    results.sort(key=lambda r: r.ideal.gens)
    return RigidityReport(results)
