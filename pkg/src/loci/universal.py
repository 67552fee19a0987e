from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from src.chow.graded import GradedClass
from src.chow.varieties import GenericBase, ProjectiveBundle, Variety, generic_base, projective_bundle
from src.errors import DomainError
from src.sheaves.sheaf_class import SheafClass
from src.utils.log import get_logger

logger = get_logger('universal')

FORMS_RANK = 6


@dataclass
class UniversalPushforwards:
    """Pushforwards along P(E) -> X of the classes entering the invariants of the forms locus.

    All classes are polynomials in e_i = c_i(E) (and l = c_1(L) when twisted):
    `euler[b]` is the pushforward of ch(wedge^b(Omega_rel - Q_W^*)) td(T_rel - Q_W) c_top(Q_W),
    `hyperplane[c]` the pushforward of H^c c_top(Q_W).
    """

    base: GenericBase
    bundle: ProjectiveBundle
    euler: Tuple[GradedClass, ...]
    hyperplane: Tuple[GradedClass, ...]

    @property
    def fundamental_class(self) -> GradedClass:
        return self.hyperplane[0]

    def images(self, variety: Variety, bundle: SheafClass, twist: SheafClass = None) -> Dict[int, GradedClass]:
        ring = self.base.ring
        out: Dict[int, GradedClass] = {}
        chern = bundle.chern
        for i, name in enumerate(ring.names):
            if name.startswith('e'):
                out[i] = chern.part(int(name[1:]))
            elif name == 'l':
                if twist is None:
                    raise DomainError("twisted pushforwards need a twist line bundle")
                out[i] = twist.c1()
        return out

    def evaluate(self, cls: GradedClass, variety: Variety, bundle: SheafClass,
                 twist: SheafClass = None) -> GradedClass:
        return cls.substitute(self.images(variety, bundle, twist), variety.ring)


@lru_cache(maxsize=None)
def forms_pushforwards(dim: int = 9, forms: int = 2, twisted: bool = False) -> UniversalPushforwards:
    logger.info("computing universal pushforwards on a generic base of dimension %d", dim)
    base = generic_base(dim, {'E': FORMS_RANK}, ('L',) if twisted else ())
    bundle = projective_bundle(base, base.sheaf('E'))
    ring = bundle.ring
    qw = bundle.sheaf('Qrel').wedge(3)
    if twisted:
        qw = qw * base.sheaf('L').lift(ring)
    ctop = qw.top()
    integrand = (bundle.sheaf('Trel') - qw).todd() * ctop
    relative_forms = bundle.sheaf('Trel').dual() - qw.dual()
    wedges = relative_forms.wedges(forms)
    euler = tuple(bundle.pushforward(w.ch * integrand) for w in wedges)
    hyperplane = tuple(bundle.pushforward(bundle.H ** c * ctop) for c in range(5))
    return UniversalPushforwards(base, bundle, euler, hyperplane)


@lru_cache(maxsize=None)
def generic_top_class(dim: int = 10) -> Tuple[ProjectiveBundle, GradedClass]:
    """c_top(wedge^3 Q) on P(E) over a generic base, reduced to H-degree below 6."""
    base = generic_base(dim, {'E': FORMS_RANK})
    bundle = projective_bundle(base, base.sheaf('E'))
    ctop = bundle.sheaf('Qrel').wedge(3).top()
    return bundle, bundle.normal_form(ctop)


def generic_fundamental_class(dim: int = 5) -> GradedClass:
    bundle, ctop = generic_top_class(max(dim, 5))
    return bundle.pushforward(ctop)


@lru_cache(maxsize=None)
def todd_base(dim: int = 9) -> Tuple[GenericBase, GradedClass]:
    base = generic_base(dim, {'E': FORMS_RANK, 'T': dim})
    return base, base.tangent.todd()


def universal_euler_polynomial(dim: int = 9) -> GradedClass:
    """Degree-dim part of td(T_X) times the pushforward for chi(O), in e_i and t_i."""
    base, td = todd_base(dim)
    pushed = forms_pushforwards(dim).euler[0]
    lifted = base.ring.lift(pushed) if pushed.ring.is_prefix_of(base.ring) else None
    if lifted is None:
        raise DomainError("generic rings are not compatible")
    return (td * lifted).part(dim)
