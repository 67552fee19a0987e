import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.bott.expressions import BundleExpr, parse_bundle
from src.bott.flags import FlagType, FlagVariety
from src.chow.varieties import (Variety, grassmann_bundle, grassmannian, product, projective_space, quadric,
                                zero_locus)
from src.errors import ConfigError, DomainError

_SINGLE = [
    (re.compile(r"(?:P\^?|projective_space\()(\d+)\)?"), 'P'),
    (re.compile(r"(?:Gr|grassmannian)\((\d+),\s*(\d+)\)"), 'Gr'),
    (re.compile(r"(?:Q\^?|quadric\()(\d+)\)?"), 'Q'),
]


def _split_top_level(text: str, sep: str = ',') -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(''.join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append(''.join(current).strip())
    return parts


def _factor_texts(text: str) -> List[str]:
    text = text.strip()
    if text.startswith('product(') and text.endswith(')'):
        return _split_top_level(text[len('product('):-1])
    return [t.strip() for t in re.split(r"\s+x\s+", text)]


def _parse_single(text: str) -> Tuple[str, Tuple[int, ...]]:
    for pattern, kind in _SINGLE:
        match = pattern.fullmatch(text.replace(' ', ''))
        if match:
            return kind, tuple(int(g) for g in match.groups())
    raise ConfigError(f"unknown ambient variety {text!r}")


def build_base(text: str) -> Tuple[Variety, Optional[FlagVariety]]:
    """Absolute ambient variety and, for type A, its flag description for Bott."""
    factors, flags = [], []
    for chunk in _factor_texts(text):
        kind, args = _parse_single(chunk)
        if kind == 'P':
            factors.append(projective_space(args[0]))
            flags.append(FlagType.projective(args[0]))
        elif kind == 'Gr':
            k, n = args
            factors.append(grassmannian(k, n))
            flags.append(FlagType.grassmannian(k, n))
        else:
            factors.append(quadric(args[0]))
            flags.append(FlagType.grassmannian(2, 4) if args[0] == 4 else None)
    flag = None if any(f is None for f in flags) else FlagVariety(tuple(flags))
    if len(factors) == 1:
        return factors[0], flag
    return product(*factors), flag


@dataclass
class AmbientSpec:
    """Ambient variety X: an absolute base, optional cuts, optional Grassmann bundle Gr(k, F)."""

    base: str
    cuts: List[str] = field(default_factory=list)
    bundle_f: Optional[str] = None
    bundle_k: Optional[int] = None

    def cut_exprs(self) -> List[BundleExpr]:
        return [parse_bundle(c) for c in self.cuts]

    def describe(self) -> str:
        text = self.base
        if self.cuts:
            text += " cut by " + ", ".join(self.cuts)
        if self.bundle_f:
            text = f"Gr({self.bundle_k}, {self.bundle_f}) over {text}"
        return text

    def build(self) -> 'Ambient':
        base, flag = build_base(self.base)
        cuts = self.cut_exprs()
        variety = base
        if cuts:
            normal = cuts[0].to_sheaf(base)
            for c in cuts[1:]:
                normal = normal + c.to_sheaf(base)
            variety = zero_locus(base, normal, f"{base.name} cut by {', '.join(self.cuts)}")
        cut_variety = variety
        if self.bundle_f:
            if self.bundle_k is None:
                raise ConfigError("Grassmann bundle needs k")
            bundle = parse_bundle(self.bundle_f).to_sheaf(variety)
            variety = grassmann_bundle(variety, bundle, self.bundle_k)
            variety.name = f"Gr({self.bundle_k}, {self.bundle_f}) over {cut_variety.name}"
            flag = None
        return Ambient(self, base, cut_variety, variety, flag, cuts)


@dataclass
class Ambient:
    spec: AmbientSpec
    base: Variety
    cut: Variety
    variety: Variety
    flag: Optional[FlagVariety]
    cuts: List[BundleExpr]

    @property
    def is_relative(self) -> bool:
        return self.variety is not self.cut

    def require_flag(self) -> FlagVariety:
        if self.flag is None:
            raise DomainError(f"{self.variety.name} has no homogeneous type A description")
        return self.flag
