from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.bott.cohomology import CohomologyTable, bott_cohomology
from src.bott.expressions import BundleExpr
from src.bott.flags import FlagVariety
from src.errors import ConsistencyError
from src.symfun.characters import GLCharacter, schur_decompose, wedge_of_character
from src.utils.log import get_logger

logger = get_logger('koszul')


@dataclass(frozen=True)
class E1Term:
    """A first-page contribution: `dimension` in total degree `degree`.

    `key` orders the filtration pieces; differentials only run from a term to a
    term of degree one higher with a strictly larger key.
    """

    key: Tuple[int, ...]
    degree: int
    dimension: int
    label: str = ""


@dataclass
class SpectralAssembly:
    terms: List[E1Term] = field(default_factory=list)

    def add(self, key: Tuple[int, ...], degree: int, dimension: int, label: str = ""):
        if dimension:
            self.terms.append(E1Term(tuple(key), degree, dimension, label))

    def extend(self, other: 'SpectralAssembly'):
        self.terms.extend(other.terms)

    def euler(self) -> int:
        return sum((-1) ** t.degree * t.dimension for t in self.terms)

    def totals(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for t in self.terms:
            out[t.degree] = out.get(t.degree, 0) + t.dimension
        return out

    def cancellation_capacity(self, degree: int) -> int:
        """Largest total rank the differentials from `degree` to `degree + 1` can have."""
        sources = sorted((t for t in self.terms if t.degree == degree), key=lambda t: t.key, reverse=True)
        sinks = sorted((t for t in self.terms if t.degree == degree + 1), key=lambda t: t.key, reverse=True)
        room = [t.dimension for t in sinks]
        total = 0
        for source in sources:
            need = source.dimension
            for idx, sink in enumerate(sinks):
                if not sink.key > source.key:
                    break
                used = min(need, room[idx])
                room[idx] -= used
                need -= used
                total += used
                if not need:
                    break
        return total

    def bounds(self) -> Dict[int, Tuple[int, int]]:
        totals = self.totals()
        if not totals:
            return {}
        lo_deg, hi_deg = min(totals), max(totals)
        capacity = {n: self.cancellation_capacity(n) for n in range(lo_deg - 1, hi_deg + 1)}
        out = {}
        for n in range(lo_deg, hi_deg + 1):
            a = totals.get(n, 0)
            lower = max(0, a - capacity.get(n - 1, 0) - capacity.get(n, 0))
            out[n] = (lower, a)
        return tighten_with_euler(out, self.euler())

    def table(self) -> CohomologyTable:
        table = CohomologyTable()
        for t in self.terms:
            table.entries.setdefault(t.degree, []).append((t.label, 1, t.dimension))
        table.bounds = {n: b for n, b in self.bounds().items() if b[1]}
        table.euler = self.euler()
        return table


def tighten_with_euler(bounds: Dict[int, Tuple[int, int]], euler: int) -> Dict[int, Tuple[int, int]]:
    bounds = dict(bounds)
    changed = True
    while changed:
        changed = False
        for n in bounds:
            others_lo = others_hi = 0
            for m, (lo, hi) in bounds.items():
                if m == n:
                    continue
                if m % 2 == 0:
                    others_lo += lo
                    others_hi += hi
                else:
                    others_lo -= hi
                    others_hi -= lo
            # (-1)^n h_n = euler - others
            lo_val, hi_val = euler - others_hi, euler - others_lo
            if n % 2:
                lo_val, hi_val = -hi_val, -lo_val
            lo, hi = bounds[n]
            new = (max(lo, lo_val), min(hi, hi_val))
            if new[0] > new[1]:
                raise ConsistencyError(f"inconsistent bounds in degree {n}: {new}")
            if new != (lo, hi):
                bounds[n] = new
                changed = True
    return bounds


def intersect(bounds: Dict[int, Tuple[int, int]], degree: int, interval: Tuple[int, int]) -> Dict[int, Tuple[int, int]]:
    out = dict(bounds)
    lo, hi = out.get(degree, (0, 0))
    new = (max(lo, interval[0]), min(hi, interval[1]))
    if new[0] > new[1]:
        raise ConsistencyError(f"incompatible constraint {interval} on degree {degree} with {(lo, hi)}")
    out[degree] = new
    return out


def koszul_terms(flag: FlagVariety, cuts: Sequence[BundleExpr], coefficient: GLCharacter,
                 key_prefix: Tuple[int, ...] = (), shift: int = 0, max_dim: int = None) -> SpectralAssembly:
    """E_1 terms of coefficient restricted to the zero locus of a section of sum(cuts)."""
    assembly = SpectralAssembly()
    conormal = flag.zero_character()
    for cut in cuts:
        conormal = conormal + cut.to_character(flag)
    conormal = conormal.dual()
    rank = conormal.dimension()
    for j in range(rank + 1):
        chi = wedge_of_character(conormal, j) * coefficient
        for weight, mult in schur_decompose(chi, max_dim):
            result = bott_cohomology(flag, weight)
            if result is None:
                continue
            degree = result.degree - j + shift
            logger.debug("koszul j=%d weight %s -> H^%d of dim %d", j, weight, result.degree, result.dimension)
            assembly.add(key_prefix + (-j,), degree, mult * result.dimension, f"j={j} {weight}")
    return assembly


def cohomology_on_ambient(flag: FlagVariety, cuts: Sequence[BundleExpr], bundle: BundleExpr,
                          max_dim: int = None) -> CohomologyTable:
    return koszul_terms(flag, cuts, bundle.to_character(flag), max_dim=max_dim).table()
