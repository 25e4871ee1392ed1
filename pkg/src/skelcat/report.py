"""Diagram reports: the universal output of every checker.

A report is a list of (diagram id, pass/fail, first counterexample)
entries.  Diagram ids for the named coherence diagrams are the exact
strings below; plumbing checks (category laws, functoriality,
naturality squares) use their own ids.  Counterexamples are the
lexicographically first violating index tuple, with loops iterating
ids ascending and the leftmost index outermost.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Axiom diagrams: imposed by a definition and owned by one checker.
PENT_A = "pent.a"
TRI_A = "tri.a"
HEX_PHI2 = "hex.φ₂"
PHI0_L = "φ₀&l"
PHI0_R = "φ₀&r"
NAT_TR_PHI2 = "nat.tr.&φ₂"
NAT_TR_PHI0 = "nat.tr.&φ₀"
BR_HEX_1 = "br.hex.1"
BR_HEX_2 = "br.hex.2"
BETA_PHI2 = "β&φ₂"
PENT_M = "pent.m"
TRI_M = "tri.m"
S_M = "s&m"
S_LACT = "s&lʳ"
NAT_TR_S = "nat.tr.&s"
A1_A = "α¹&a"
A1_M = "α¹&m"
A2_A = "α²&a"
A2_M = "α²&m"
A1_A2 = "α¹&α²"
BETA_ACT = "β&⊳"
COMP_A1 = "comp.α¹"
COMP_A2 = "comp.α²"
HALF_BR_HEX = "half-br.hex"
HALF_BR_TENSOR = "half-br.on⊗"
HALF_BR_UNIT = "half-br.on\U0001d7cf"
GAMMA_BETA = "γ&β"
NAT_TR_GAMMA = "nat.tr.&γ"
ZIG_ZAG = "zig-zag"

# Derived diagrams: hold automatically whenever the axioms hold.
A_L = "a&l"
A_R = "a&r"
BETA_R = "β&r"
BETA_L = "β&l"
TRI_PRIME_M = "tri.'m"
A1_LACT = "α¹&lʳ"
A2_LACT = "α²&lʳ"
A1_R = "α¹&r"
A2_L = "α²&l"

AXIOM_DIAGRAMS = frozenset({
    PENT_A, TRI_A, HEX_PHI2, PHI0_L, PHI0_R, NAT_TR_PHI2, NAT_TR_PHI0,
    BR_HEX_1, BR_HEX_2, BETA_PHI2, PENT_M, TRI_M, S_M, S_LACT, NAT_TR_S,
    A1_A, A1_M, A2_A, A2_M, A1_A2, BETA_ACT, COMP_A1, COMP_A2,
    HALF_BR_HEX, HALF_BR_TENSOR, HALF_BR_UNIT, GAMMA_BETA, NAT_TR_GAMMA,
    ZIG_ZAG,
})

DERIVED_DIAGRAMS = frozenset({
    A_L, A_R, BETA_R, BETA_L, TRI_PRIME_M, A1_LACT, A2_LACT, A1_R, A2_L,
})


@dataclass(frozen=True)
class ReportEntry:
    diagram: str
    passed: bool
    counterexample: tuple | None = None

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError("passing entry must not carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError("failing entry must carry a counterexample")


@dataclass(frozen=True)
class DiagramReport:
    entries: tuple[ReportEntry, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, diagram: str) -> ReportEntry:
        for e in self.entries:
            if e.diagram == diagram:
                return e
        raise KeyError(diagram)

    def has(self, diagram: str) -> bool:
        return any(e.diagram == diagram for e in self.entries)

    def failing(self) -> tuple[ReportEntry, ...]:
        return tuple(e for e in self.entries if not e.passed)

    def prefixed(self, prefix: str) -> "DiagramReport":
        """Namespace every entry, for reports aggregated over sections."""
        return DiagramReport(tuple(
            ReportEntry(f"{prefix}{e.diagram}", e.passed, e.counterexample)
            for e in self.entries))

    @staticmethod
    def merge(*reports: "DiagramReport") -> "DiagramReport":
        entries = []
        for r in reports:
            entries.extend(r.entries)
        return DiagramReport(tuple(entries))

    def to_jsonable(self) -> list:
        return [
            {
                "diagram": e.diagram,
                "status": "pass" if e.passed else "fail",
                "counterexample":
                    None if e.counterexample is None else list(e.counterexample),
            }
            for e in self.entries
        ]

    def pretty(self) -> str:
        lines = []
        for e in self.entries:
            if e.passed:
                lines.append(f"  pass  {e.diagram}")
            else:
                lines.append(f"  FAIL  {e.diagram}  at {e.counterexample}")
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def entry_for(diagram: str, counterexample: tuple | None) -> ReportEntry:
    """Entry from a first-violation search result (None means pass)."""
    if counterexample is None:
        return ReportEntry(diagram, True)
    return ReportEntry(diagram, False, tuple(counterexample))
