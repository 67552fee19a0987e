from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.utils.exact import to_json

GENERAL_SECTION = "assumes a general section, so the locus is resolved by the zero locus upstairs"
KODAIRA_VANISHING = "h0(-K) is reported as chi(-K), Kodaira vanishing assumed"

CLASS_CHECK = "fundamental class double computation"
DIMENSION_CHECK = "dimension of the resolution"
INTEGRALITY_CHECK = "integral Euler characteristics"


@dataclass
class Classification:
    """Which canonical condition a configuration satisfies."""

    kind: str
    index: Optional[int] = None
    coindex: Optional[int] = None
    degenerate: bool = False
    diagnostics: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'index': self.index,
            'coindex': self.coindex,
            'degenerate': self.degenerate,
            'diagnostics': list(self.diagnostics),
        }


@dataclass
class HodgeTable:
    """Hodge numbers of a threefold as closed intervals (lo, hi)."""

    numbers: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    structure: Dict[str, Dict[int, Tuple[int, int]]] = field(default_factory=dict)
    divisor_rank: Optional[int] = None

    def interval(self, name: str) -> Tuple[int, int]:
        return self.numbers[name]

    def value(self, name: str) -> Optional[int]:
        lo, hi = self.numbers[name]
        return lo if lo == hi else None

    def candidates(self, name: str) -> List[int]:
        lo, hi = self.numbers[name]
        return list(range(lo, hi + 1))

    def is_exact(self) -> bool:
        return all(lo == hi for lo, hi in self.numbers.values())

    def to_dict(self) -> dict:
        return {
            'numbers': {k: list(v) if v[0] != v[1] else v[0] for k, v in sorted(self.numbers.items())},
            'divisor_rank': self.divisor_rank,
        }


@dataclass
class LocusReport:
    label: str
    ambient: str
    bundle: str
    dim: int
    canonical: str
    classification: Classification
    fundamental_class: str = ""
    schur_form: str = ""
    nonempty: Optional[bool] = None
    chi_O: Optional[Fraction] = None
    chi_omega: Dict[int, Fraction] = field(default_factory=dict)
    anticanonical_degree: Optional[Fraction] = None
    h0_anticanonical: Optional[Fraction] = None
    hodge: Optional[HodgeTable] = None
    method: str = ""
    notes: List[str] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def is_cy(self) -> bool:
        return self.classification.kind in ('cy', 'twisted')

    @property
    def is_fano(self) -> bool:
        return self.classification.kind == 'fano'

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    def record(self, check: str, passed: bool):
        """Outcome of a consistency check that ran while filling the report."""
        self.checks[check] = self.checks.get(check, True) and passed

    def to_dict(self) -> dict:
        return to_json({
            'label': self.label,
            'ambient': self.ambient,
            'bundle': self.bundle,
            'dim': self.dim,
            'canonical': self.canonical,
            'classification': self.classification,
            'fundamental_class': self.fundamental_class,
            'schur_form': self.schur_form,
            'nonempty': self.nonempty,
            'chi_O': self.chi_O,
            'chi_omega': {str(p): v for p, v in sorted(self.chi_omega.items())},
            'anticanonical_degree': self.anticanonical_degree,
            'h0_anticanonical': self.h0_anticanonical,
            'hodge': self.hodge,
            'method': self.method,
            'notes': list(self.notes),
        })
