"""Run files: a sectioned key = value format.

    [variety]
    ambient = grassmannian(2,7)
    cuts = ["O(1)", "O(1)"]
    [bundle]
    E = dual(U)+4*O
    [locus]
    kind = forms-y2
    [output]
    hodge = true

Values are bare text or JSON (strings, lists, numbers, booleans). Lines starting with
'#' are comments.
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from src.bott.expressions import parse_bundle
from src.errors import ConfigError, DomainError
from src.loci.ambient import AmbientSpec
from src.loci.forms import FormsLocusConfig
from src.loci.nilpotent import NilpotentLocusConfig

KINDS = ('forms-y2', 'richardson')
METHODS = ('universal', 'tower')

# section -> key -> attribute on RunConfig
SCHEMA: Dict[str, Dict[str, str]] = {
    'variety': {'ambient': 'ambient', 'cuts': 'cuts', 'bundle_f': 'bundle_f', 'bundle_k': 'bundle_k'},
    'bundle': {'E': 'bundle', 'twist': 'twist'},
    'locus': {'kind': 'kind', 'orbit': 'orbit', 'partition': 'partition', 'method': 'method'},
    'output': {'hodge': 'hodge', 'label': 'label'},
}


@dataclass
class RunConfig:
    ambient: str = ""
    cuts: List[str] = field(default_factory=list)
    bundle_f: Optional[str] = None
    bundle_k: Optional[int] = None
    bundle: str = ""
    twist: Optional[str] = None
    kind: str = 'forms-y2'
    orbit: Optional[int] = None
    partition: Optional[Tuple[int, ...]] = None
    method: str = 'universal'
    hodge: bool = False
    label: str = ""

    def ambient_spec(self) -> AmbientSpec:
        return AmbientSpec(self.ambient, list(self.cuts), self.bundle_f, self.bundle_k)

    def locus_config(self) -> Union[FormsLocusConfig, NilpotentLocusConfig]:
        if self.kind == 'forms-y2':
            return FormsLocusConfig(self.ambient_spec(), self.bundle, self.twist, self.label)
        return NilpotentLocusConfig(self.ambient_spec(), self.bundle, self.twist or "O", self.orbit,
                                    self.partition, self.label)


def _value(text: str, line: int, column: int) -> Any:
    text = text.strip()
    if text[:1] in '["{' or text in ('true', 'false', 'null') or text.lstrip('-').isdigit():
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"bad value: {exc.msg}", line, column + exc.colno - 1) from exc
    return text


def _expect(value: Any, kind, what: str, line: int, column: int):
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ConfigError(f"{what} must be {getattr(kind, '__name__', kind)}", line, column)
    return value


def _convert(attr: str, value: Any, line: int, column: int) -> Any:
    if attr == 'cuts':
        if isinstance(value, str):
            value = [value]
        _expect(value, list, "cuts", line, column)
        for cut in value:
            _expect(cut, str, "each cut", line, column)
            parse_bundle(cut, line, column)
        return list(value)
    if attr in ('bundle_k', 'orbit'):
        return _expect(value, int, attr, line, column)
    if attr == 'partition':
        if isinstance(value, str):
            value = [int(p) for p in value.replace('(', '').replace(')', '').split(',') if p.strip()]
        _expect(value, list, "partition", line, column)
        return tuple(_expect(p, int, "partition parts", line, column) for p in value)
    if attr == 'hodge':
        return _expect(value, bool, "hodge", line, column)
    value = _expect(value, str, attr, line, column)
    if attr in ('bundle', 'twist', 'bundle_f'):
        parse_bundle(value, line, column)
    if attr == 'kind' and value not in KINDS:
        raise ConfigError(f"unknown locus kind {value!r}; expected one of {', '.join(KINDS)}", line, column)
    if attr == 'method' and value not in METHODS:
        raise ConfigError(f"unknown method {value!r}; expected one of {', '.join(METHODS)}", line, column)
    return value


def parse_config(text: str, check_ranks: bool = True) -> RunConfig:
    cfg = RunConfig()
    section = None
    seen = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        indent = len(raw) - len(raw.lstrip())
        if stripped.startswith('['):
            if not stripped.endswith(']'):
                raise ConfigError("unterminated section header", number, indent + 1)
            section = stripped[1:-1].strip()
            if section not in SCHEMA:
                raise ConfigError(f"unknown section [{section}]", number, indent + 2)
            continue
        if section is None:
            raise ConfigError("key outside of a section", number, indent + 1)
        if '=' not in stripped:
            raise ConfigError("expected key = value", number, indent + 1)
        key, _, rest = stripped.partition('=')
        key = key.strip()
        if key not in SCHEMA[section]:
            raise ConfigError(f"unknown key {key!r} in [{section}]", number, indent + 1)
        if (section, key) in seen:
            raise ConfigError(f"duplicate key {key!r} (first on line {seen[section, key]})", number, indent + 1)
        seen[section, key] = number
        column = indent + raw.lstrip().index('=') + 2 + (len(rest) - len(rest.lstrip()))
        attr = SCHEMA[section][key]
        setattr(cfg, attr, _convert(attr, _value(rest, number, column), number, column))
    _validate(cfg, seen, check_ranks)
    return cfg


def _validate(cfg: RunConfig, seen: Dict[Tuple[str, str], int], check_ranks: bool):
    last = max(seen.values(), default=1)
    if not cfg.ambient:
        raise ConfigError("missing [variety] ambient", last, 1)
    if not cfg.bundle:
        raise ConfigError("missing [bundle] E", last, 1)
    if (cfg.bundle_f is None) != (cfg.bundle_k is None):
        raise ConfigError("bundle_f and bundle_k go together", seen.get(('variety', 'bundle_f'),
                                                                      seen.get(('variety', 'bundle_k'), last)), 1)
    if cfg.kind == 'richardson' and cfg.orbit is None and not cfg.partition:
        raise ConfigError("a richardson locus needs an orbit or a partition", seen.get(('locus', 'kind'), last), 1)
    if cfg.kind == 'richardson' and cfg.orbit is not None and cfg.partition:
        raise ConfigError("give either an orbit or a partition, not both", seen[('locus', 'partition')], 1)
    if not check_ranks:
        return
    line = seen.get(('bundle', 'E'), last)
    try:
        variety = cfg.ambient_spec().build().variety
        rank = parse_bundle(cfg.bundle).to_sheaf(variety).rank
    except DomainError as exc:
        raise ConfigError(str(exc), line, 1) from exc
    if cfg.kind == 'forms-y2' and rank != 6:
        raise ConfigError(f"E has rank {rank}, the forms locus needs rank 6", line, 1)
    if cfg.kind == 'richardson' and cfg.partition and sum(cfg.partition) != rank:
        raise ConfigError(f"partition {cfg.partition} is not a partition of rank E = {rank}",
                          seen.get(('locus', 'partition'), line), 1)


def serialize(cfg: RunConfig) -> str:
    defaults = RunConfig()
    lines = []
    for section, keys in SCHEMA.items():
        body = []
        for key, attr in keys.items():
            value = getattr(cfg, attr)
            if value == getattr(defaults, attr) and attr not in ('ambient', 'bundle', 'kind'):
                continue
            if isinstance(value, tuple):
                value = list(value)
            body.append(f"{key} = {json.dumps(value, ensure_ascii=False)}")
        if body:
            lines.append(f"[{section}]")
            lines.extend(body)
    return "\n".join(lines) + "\n"


def load_config(path: str, check_ranks: bool = True) -> RunConfig:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_config(f.read(), check_ranks)
