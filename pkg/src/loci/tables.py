"""Golden rows of the verification suites.

Rows are plain tuples of strings and numbers in the run-config vocabulary so that
the same data drives the suites, the tests and the README examples.
"""
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple


class FormsRow(NamedTuple):
    label: str
    ambient: str
    cuts: Tuple[str, ...]
    bundle: str
    twist: Optional[str] = None
    skip: Optional[str] = None


class HodgeRow(NamedTuple):
    label: str
    ambient: str
    cuts: Tuple[str, ...]
    bundle: str
    h11: Tuple[int, int]
    h21: Tuple[int, int]


class GrassmannBundleRow(NamedTuple):
    label: str
    base: str
    cuts: Tuple[str, ...]
    bundle_f: str
    k: int
    line: Optional[str] = None
    bundle: Optional[str] = None
    skip: Optional[str] = None


class FanoRow(NamedTuple):
    label: str
    orbit: Optional[int]
    ambient: str
    cuts: Tuple[str, ...]
    bundle: str
    twist: Optional[str]
    degree: int
    chi_omega: Dict[int, int]
    h0: Optional[int] = None
    skip: Optional[str] = None


class OrbitRow(NamedTuple):
    id: int
    dim_gp: int
    space: str
    group: str
    ell_p: int
    codim_sing: int
    delta: int
    group_dim: int
    rank: Optional[int]
    flag_dims: Optional[Tuple[int, ...]]


class NilpotentRow(NamedTuple):
    label: str
    orbit: int
    ambient: str
    cuts: Tuple[str, ...]
    bundle: str
    twist: str
    expected: Dict[str, int]
    skip: Optional[str] = None


SPIN_SKIP = "orthogonal Grassmannian with a spin bundle: type D Bott is out of scope"
BLOWUP_SKIP = "blow-up of P^3 in a point is not a flag variety"
WEIGHTED_SKIP = "weighted projective ambient is out of scope"
NON_TYPE_A_SKIP = "orbit of a group not of type A: data only"

HODGE_ROWS = [
    HodgeRow('t.1', 'grassmannian(2,7)', ('O(1)', 'O(1)'), 'dual(U)+4*O', (2, 2), (49, 49)),
    HodgeRow('t.2', 'grassmannian(2,7)', ('O(1)', 'O(1)'), 'Q+O', (3, 4), (36, 37)),
    HodgeRow('t.3', 'grassmannian(3,6)', ('O(1)',), 'dual(U)+3*O', (2, 2), (38, 38)),
    HodgeRow('t.4', 'product(projective_space(4),projective_space(4))', (), 'O(1,0)+O(0,1)+4*O', (3, 3), (48, 48)),
    HodgeRow('t.5', 'product(projective_space(4),projective_space(4))', (), 'Q1+O(0,1)+O', (4, 4), (32, 32)),
]

FORMS_ROWS = [
    FormsRow('f.1', 'projective_space(9)', (), '2*O(1)+4*O'),
    FormsRow('f.2', 'grassmannian(2,7)', ('O(2)',), 'dual(U)+4*O'),
    FormsRow('f.3', 'grassmannian(2,7)', ('O(2)',), 'Q+O'),
    FormsRow('f.4', 'grassmannian(2,8)', ('3*O(1)',), 'dual(U)+4*O'),
    FormsRow('f.5', 'grassmannian(2,8)', ('3*O(1)',), 'Q'),
    FormsRow('f.6', 'grassmannian(2,8)', ('sym(dual(U),2)',), 'dual(U)+4*O'),
    FormsRow('f.7', 'grassmannian(2,8)', ('sym(dual(U),2)',), 'Q'),
    FormsRow('f.8', 'grassmannian(3,7)', ('wedge(dual(U),2)',), 'dual(U)+3*O'),
    FormsRow('f.9', 'grassmannian(3,7)', ('wedge(dual(U),2)',), 'Q+2*O'),
    FormsRow('f.10', 'OGr(2,10)', (), 'dual(U)+4*O', skip=SPIN_SKIP),
    FormsRow('f.11', 'OGr(2,12)', (), 'dual(U)+4*O', skip=SPIN_SKIP),
]

GRASSMANN_BUNDLE_ROWS = [
    GrassmannBundleRow('f.12', 'grassmannian(2,5)', ('sym(dual(U),2)',), 'U+3*O', 2),
    GrassmannBundleRow('f.13', 'projective_space(3)', (), 'wedge(dual(Q),2)+2*O', 2),
    GrassmannBundleRow('f.14', 'projective_space(3)', (), 'O(-1)+O(-1)+3*O', 2),
    GrassmannBundleRow('f.15', 'projective_space(3)', (), 'O(-2)+4*O', 2),
    GrassmannBundleRow('f.16', 'projective_space(4)', ('O(3)',), 'dual(Q)+O', 2),
    GrassmannBundleRow('f.17', 'projective_space(4)', ('O(3)',), 'O(-1)+4*O', 2),
    GrassmannBundleRow('f.18', 'Bl_pt P^3', (), 'Exc(-1)+O(-1)+3*O', 2, skip=BLOWUP_SKIP),
    GrassmannBundleRow('f.19', 'Bl_pt P^3', (), 'Exc(-2)+4*O', 2, skip=BLOWUP_SKIP),
    GrassmannBundleRow('f.20', 'product(projective_space(2),projective_space(2))', ('O(1,1)',),
                       'dual(Q1)+dual(Q2)+O', 2),
    GrassmannBundleRow('f.21', 'product(projective_space(2),projective_space(2))', ('O(1,1)',),
                       'dual(Q1)+U2+2*O', 2),
    GrassmannBundleRow('f.22', 'product(projective_space(2),projective_space(2))', ('O(1,1)',),
                       'U1+U2+3*O', 2),
    GrassmannBundleRow('f.23', 'product(projective_space(2),projective_space(2))', ('O(1,1)',),
                       'tensor(U1,U2)+4*O', 2),
    GrassmannBundleRow('f.24', 'grassmannian(2,4)', ('O(2)',), 'U+3*O', 2),
    GrassmannBundleRow('f.25', 'grassmannian(2,4)', ('O(2)',), 'O(-1)+4*O', 2),
    GrassmannBundleRow('f.26', 'grassmannian(2,5)', ('3*O(1)',), 'dual(Q)+2*O', 2),
    GrassmannBundleRow('f.27', 'grassmannian(2,5)', ('3*O(1)',), 'U+3*O', 2),
    GrassmannBundleRow('f.28', 'grassmannian(2,5)', ('3*O(1)',), 'O(-1)+4*O', 2),
    GrassmannBundleRow('f.29', 'product(projective_space(1),projective_space(1),projective_space(1))', (),
                       'U1+U2+U3+2*O', 2),
    GrassmannBundleRow('f.30', 'product(projective_space(1),projective_space(1),projective_space(1))', (),
                       'tensor(U1,U2)+U3+3*O', 2),
    GrassmannBundleRow('f.31', 'product(projective_space(1),projective_space(1),projective_space(1))', (),
                       'tensor(U1,U2,U3)+4*O', 2),
    GrassmannBundleRow('f.32', 'grassmannian(2,4)', ('O(1)',), 'U+3*O', 3),
    GrassmannBundleRow('f.33', 'grassmannian(2,4)', ('O(1)',), 'O(-1)+4*O', 3),
    GrassmannBundleRow('f.34', 'projective_space(6)', ('O(3)',), 'O(-1)+4*O', 4),
    GrassmannBundleRow('f.35', 'projective_space(7)', ('O(2)', 'O(2)'), 'O(-1)+4*O', 4),
    GrassmannBundleRow('f.36', 'grassmannian(2,5)', ('O(1)',), 'dual(Q)+2*O', 4),
    GrassmannBundleRow('f.37', 'grassmannian(2,5)', ('O(1)',), 'U+3*O', 4),
    GrassmannBundleRow('f.38', 'grassmannian(2,5)', ('O(1)',), 'O(-1)+4*O', 4),
]

SPORADIC_BUNDLES = [
    GrassmannBundleRow('s.1', 'projective_space(5)', (), 'O(-1)+4*O', 1, 'O(-1)'),
    GrassmannBundleRow('s.2', 'projective_space(5)', (), 'dual(Q)', 1, 'O(-1)'),
    GrassmannBundleRow('s.3', 'projective_space(6)', ('O(2)',), '5*O', 1, 'O(-1)'),
    GrassmannBundleRow('s.4', 'projective_space(6)', ('O(2)',), '5*O', 1, 'O(-1)', 'Qrel+dual(O(-1))+O'),
]

SPORADIC_FORMS = [
    FormsRow('F(1,5,6).1', 'product(projective_space(5),projective_space(5))', ('O(1,1)',),
             'dual(U1)+dual(U2)+4*O'),
    FormsRow('F(1,5,6).2', 'product(projective_space(5),projective_space(5))', ('O(1,1)',), 'Q1+dual(U2)'),
    FormsRow('twisted', 'projective_space(9)', (), '4*O(1)+2*O', 'O(-1)'),
]

FORMS_FANO3 = [
    FanoRow('fano3.1', None, 'grassmannian(2,6)', (), 'dual(U)+4*O', None, 16, {1: 3}),
    FanoRow('fano3.2', None, 'grassmannian(2,6)', (), 'Q+2*O', None, 24, {1: -2}),
]

NILPOTENT_FANO3 = [
    FanoRow('fano3.3', 2, 'quadric(7)', (), '3*O', 'O(1)', 12, {1: 7}),
    FanoRow('fano3.4', 2, 'quadric(7)', (), 'O(-1)+2*O', 'O(1)', 8, {1: 13}),
    FanoRow('fano3.5', 3, 'projective_space(12)', (), '4*O', 'O(1)', 20, {1: 1}),
    FanoRow('fano3.6', 3, 'projective_space(12)', (), 'O(-1)+3*O', 'O(1)', 8, {1: 13}),
]

ORBIT_ROWS = [
    OrbitRow(1, 1, 'P^1', 'SL2', 1, 2, 1, 3, 2, (1,)),
    OrbitRow(2, 2, 'P^2', 'SL3', 4, 4, 1, 8, 3, (1,)),
    OrbitRow(3, 3, 'P^3', 'SL4', 9, 6, 1, 15, 4, (1,)),
    OrbitRow(4, 3, 'P^3', 'Sp4', 4, 2, 2, 10, None, None),
    OrbitRow(5, 3, 'Q^3', 'SO5', 4, 2, 1, 10, None, None),
    OrbitRow(6, 3, 'F(1,2)', 'SL3', 2, 2, 1, 8, 3, (1, 2)),
    OrbitRow(7, 4, 'P^4', 'SL5', 16, 8, 1, 24, 5, (1,)),
    OrbitRow(8, 4, 'Q^4', 'SL4', 7, 2, 1, 15, 4, (2,)),
    OrbitRow(9, 4, 'OF(1,2)', 'SO5', 2, 2, 1, 10, None, None),
    OrbitRow(10, 5, 'P^5', 'SL6', 25, 10, 1, 35, 6, (1,)),
    OrbitRow(11, 5, 'P^5', 'Sp6', 11, 2, 2, 21, None, None),
    OrbitRow(12, 5, 'Q^5', 'SO7', 11, 2, 1, 21, None, None),
    OrbitRow(13, 5, 'F(1,2)', 'SL4', 5, 2, 1, 15, 4, (1, 2)),
    OrbitRow(14, 5, 'F(1,3)', 'SL4', 5, 2, 1, 15, 4, (1, 3)),
    OrbitRow(15, 5, 'Q^5', 'G2', 4, 2, 2, 14, None, None),
    OrbitRow(16, 5, 'G2/P', 'G2', 4, 2, 1, 14, None, None),
]

NILPOTENT_ROWS = [
    NilpotentRow('5.1a', 1, 'product(projective_space(2),projective_space(2))', (), '2*O', 'O(1,1)', {'degree': 12}),
    NilpotentRow('5.1b', 1, 'product(projective_space(2),projective_space(2))', (), 'O+O(1,1)', 'O(1,1)',
                 {'degree': 12}),
    NilpotentRow('5.1c', 1, 'product(projective_space(2),projective_space(2))', (), 'O(1,0)+O(0,1)', 'O(1,1)',
                 {'degree': 12}),
    NilpotentRow('5.2a', 1, 'grassmannian(2,5)', ('O(1)', 'O(1)'), '2*O', 'O(1)', {'degree': 10}),
    NilpotentRow('5.2b', 1, 'grassmannian(2,5)', ('O(1)', 'O(1)'), 'O+O(1)', 'O(1)', {'degree': 10}),
    NilpotentRow('5.2c', 1, 'grassmannian(2,5)', ('O(1)', 'O(1)'), 'dual(U)', 'O(1)', {'degree': 10}),
    NilpotentRow('5.3a', 1, 'projective_space(6)', ('O(2)', 'O(2)'), '2*O', 'O(1)', {'degree': 8}),
    NilpotentRow('5.3b', 1, 'projective_space(6)', ('O(2)', 'O(2)'), 'O+O(1)', 'O(1)', {'degree': 8}),
    NilpotentRow('5.4a', 1, 'projective_space(5)', ('O(3)',), '2*O', 'O(1)', {'degree': 6}),
    NilpotentRow('5.4b', 1, 'projective_space(5)', ('O(3)',), 'O+O(1)', 'O(1)', {'degree': 6}),
    NilpotentRow('5.5a', 1, 'P(2,1,1,1,1,1)_4', (), '2*O', 'O(1)', {'degree': 4}, WEIGHTED_SKIP),
    NilpotentRow('5.5b', 1, 'P(2,1,1,1,1,1)_4', (), 'O+O(1)', 'O(1)', {'degree': 4}, WEIGHTED_SKIP),
    NilpotentRow('5.6a', 1, 'P(3,2,1,1,1,1)_6', (), '2*O', 'O(1)', {'degree': 2}, WEIGHTED_SKIP),
    NilpotentRow('5.6b', 1, 'P(3,2,1,1,1,1)_6', (), 'O+O(1)', 'O(1)', {'degree': 2}, WEIGHTED_SKIP),
    NilpotentRow('5.7a', 5, 'projective_space(7)', (), '4*O', 'O(1)', {'degree': 10}, NON_TYPE_A_SKIP),
    NilpotentRow('5.7b', 5, 'projective_space(7)', (), '2*O+2*O(1)', 'O(1)', {'degree': 8}, NON_TYPE_A_SKIP),
    NilpotentRow('5.8a', 6, 'projective_space(5)', (), '3*O', 'O(1)', {'degree': 6}),
    NilpotentRow('5.8b', 6, 'projective_space(5)', (), '2*O+O(1)', 'O(1)', {'degree': 6}),
]

FANO4_ROWS = [
    FanoRow('6.1', None, 'grassmannian(3,6)', (), 'dual(U)+3*O', None, 63, {1: -2, 2: 21}, 19),
    FanoRow('6.2', None, 'grassmannian(2,7)', ('O(1)',), 'Q+O', None, 69, {1: -4, 2: 26}, 20),
    FanoRow('6.3', None, 'grassmannian(2,7)', ('O(1)',), 'dual(U)+4*O', None, 47, {1: -7, 2: 54}, 16),
    FanoRow('6.4', 3, 'quadric(13)', (), '4*O', 'O(1)', 40, {1: -18, 2: 114}, 15),
    FanoRow('6.5', 7, 'projective_space(20)', (), '5*O', 'O(1)', 70, {1: -6, 2: 46}, 21),
]

FOURFOLDS = [
    NilpotentRow('4f.1', 6, 'grassmannian(2,5)', (), '3*O', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.2', 6, 'grassmannian(2,5)', (), '2*O+O(-1)', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.3', 6, 'grassmannian(2,5)', (), 'U+O', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.4', 6, 'grassmannian(2,5)', (), 'U+O(-1)', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.5', 6, 'grassmannian(2,5)', (), 'Q', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.6', 2, 'grassmannian(2,6)', (), '3*O', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.7', 2, 'grassmannian(2,6)', (), '2*O+O(-1)', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.8', 2, 'grassmannian(2,6)', (), 'U+O', 'O(1)', {'chi': 2}),
    NilpotentRow('4f.9', 2, 'grassmannian(2,6)', (), 'U+O(-1)', 'O(1)', {'chi': 2}),
]

# direct images R^q of wedge^i Q_W^* (x) G along P(E) -> X, keyed by (i, q);
# each partition labels a copy of S_lambda E^*
PUSHFORWARD_O: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {
    (0, 0): [(0, 0, 0, 0, 0, 0)],
    (3, 2): [(2, 2, 2, 1, 1, 1)],
    (4, 2): [(3, 2, 2, 2, 2, 1)],
    (6, 3): [(4, 3, 3, 3, 3, 2)],
    (7, 3): [(4, 4, 4, 3, 3, 3)],
    (10, 5): [(5, 5, 5, 5, 5, 5)],
}

PUSHFORWARD_QW: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {
    (1, 1): [(1, 1, 1, 1, 1, 1)],
    (2, 2): [(2, 2, 2, 2, 1, 0), (2, 2, 2, 1, 1, 1)],
    (3, 2): [(3, 3, 2, 2, 1, 1), (3, 2, 2, 2, 2, 1), (3, 2, 2, 2, 2, 1), (2, 2, 2, 2, 2, 2)],
    (4, 2): [(4, 3, 2, 2, 2, 2)],
    (4, 3): [(3, 3, 3, 3, 3, 0)],
    (5, 3): [(5, 3, 3, 3, 2, 2), (4, 4, 3, 3, 3, 1), (4, 3, 3, 3, 3, 2), (4, 3, 3, 3, 3, 2)],
    (6, 3): [(6, 3, 3, 3, 3, 3), (5, 4, 4, 3, 3, 2), (5, 4, 3, 3, 3, 3), (4, 4, 4, 3, 3, 3)],
    (7, 3): [(5, 5, 5, 3, 3, 3)],
    (7, 4): [(5, 4, 4, 4, 4, 3)],
    (8, 4): [(6, 5, 4, 4, 4, 4), (5, 5, 5, 4, 4, 4)],
    (9, 5): [(5, 5, 5, 5, 5, 5)],
    (10, 5): [(6, 6, 6, 5, 5, 5)],
}

PUSHFORWARD_OMEGA: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {
    (0, 1): [(0, 0, 0, 0, 0, 0)],
    (2, 2): [(2, 1, 1, 1, 1, 0), (1, 1, 1, 1, 1, 1)],
    (3, 2): [(3, 2, 1, 1, 1, 1)],
    (4, 3): [(3, 2, 2, 2, 2, 1)],
    (5, 3): [(5, 2, 2, 2, 2, 2), (4, 3, 2, 2, 2, 2)],
    (6, 4): [(4, 3, 3, 3, 3, 2)],
    (7, 4): [(6, 3, 3, 3, 3, 3), (5, 4, 3, 3, 3, 3), (4, 4, 4, 3, 3, 3)],
    (9, 5): [(6, 5, 4, 4, 4, 4), (5, 5, 5, 4, 4, 4)],
    (10, 5): [(6, 5, 5, 5, 5, 4)],
}

PUSHFORWARD_TABLES = {'O': PUSHFORWARD_O, 'QW*': PUSHFORWARD_QW, 'Omega': PUSHFORWARD_OMEGA}

FUNDAMENTAL_CLASS = "e1*(e1**4 + e2**2 + 2*e1*e3 - 4*e4)"
SCHUR_COFACTOR = {(4,): 1, (3, 1): 3, (2, 2): 3, (2, 1, 1): 6}
SCHUR_FULL = {(5,): 1, (4, 1): 4, (3, 2): 6, (3, 1, 1): 9, (2, 2, 1): 9, (2, 1, 1, 1): 6}

# c_top(wedge^3 Q) on P(E), coefficient of H^j after reduction by the relation
CTOP_EXPANSION: Dict[int, str] = {
    5: "e1*(e1**4 + e2**2 + 2*e1*e3 - 4*e4)",
    4: "e1*(e1**5 + e1**3*e2 + 2*e1*e2**2 + e1**2*e3 - e2*e3 - 6*e1*e4 + 2*e5)",
    3: "e1*(2*e1**4*e2 + 2*e1**2*e2**2 + e2**3 - e1**3*e3 - e1*e2*e3 + e3**2 - 4*e1**2*e4 - 4*e2*e4"
       " + 4*e1*e5 - 4*e6)",
    2: "e1*(2*e1**3*e2**2 + e1*e2**3 + e1**4*e3 - 3*e1**2*e2*e3 + 3*e1*e3**2 - 3*e1**3*e4"
       " - 3*e1*e2*e4 - 2*e3*e4 + 3*e1**2*e5 + e2*e5 - 8*e1*e6)",
    1: "e1*(e1**2*e2**3 + e1**3*e2*e3 - e1*e2**2*e3 - e1**2*e3**2 - 4*e1**2*e2*e4 + e2**2*e4"
       " + 5*e1*e3*e4 - 4*e4**2 + e1**3*e5 + e3*e5 - 6*e1**2*e6 - 2*e2*e6)",
    0: "e6*(-3*e1**4 - e2**2 - 4*e1*e3 + 4*e4)"
       " + e5*(e1**5 - e1**3*e2 + 3*e1**2*e3 + e2*e3 - 2*e1*e4 - e5)"
       " + e4*(-e1**4*e2 + e1**3*e3 + e1*e2*e3 - e3**2 - e1**2*e4)"
       " + e3*(e1**3*e2**2 - 2*e1**2*e2*e3 + e1*e3**2)",
}

# degree 9 part of td(X) times the pushforward of td(T_rel - Q_W) c_top(Q_W)
TODD_FORMULA = (
    "e1*e6*(601/180*e1**2 - 1/12*e2 - 5/4*e1*t1 + 1/12*t1**2 + 1/12*t2)"
    " + e1*e5*(-101/180*e1**3 + 11/360*e1*e2 - 1/40*e3 + 5/24*e1**2*t1 - 1/72*e1*t1**2 - 1/72*e1*t2)"
    " + e1*e4*(-311/36*e1**4 + 787/360*e1**2*e2 - 1/18*e2**2 - 1/72*e1*e3 + 145/24*e1**3*t1"
    " - 5/6*e1*e2*t1 - 79/72*e1**2*t1**2 + 1/18*e2*t1**2 + 1/180*t1**4 - 79/72*e1**2*t2 + 1/18*e2*t2"
    " + 5/12*e1*t1*t2 - 1/45*t1**2*t2 - 1/60*t2**2 - 1/180*t1*t3 + 1/180*t4 + 1/45*e4)"
    " + e1*e3*(81/20*e1**5 - 1/60*e1*e2**2 - 35/12*e1**4*t1 + 13/24*e1**3*t1**2 - 1/360*e1*t1**4"
    " + 13/24*e1**3*t2 - 5/24*e1**2*t1*t2 + 1/90*e1*t1**2*t2 + 1/120*e1*t2**2 + 1/360*e1*t1*t3"
    " - 1/360*e1*t4 - 97/120*e1**2*e3 + 1/30*e2*e3 + 5/16*e1*e3*t1 - 1/48*e3*t1**2 - 1/48*e3*t2)"
    " + e1*e2*(81/40*e1**4*e2 - 35/24*e1**3*e2*t1 + 13/48*e1**2*e2*t1**2 - 1/720*e2*t1**4"
    " + 13/48*e1**2*e2*t2 - 5/48*e1*e2*t1*t2 + 1/180*e2*t1**2*t2 + 1/240*e2*t2**2 + 1/720*e2*t1*t3"
    " - 1/720*e2*t4 - 97/180*e1**2*e2**2 + 5/24*e1*e2**2*t1 - 1/72*e2**2*t1**2 - 1/72*e2**2*t2"
    " + 1/80*e2**3)"
    " + e1**5*(-1/720*t1**4 + 1/180*t1**2*t2 + 1/240*t2**2 + 1/720*t1*t3 - 1/720*t4"
    " - 5/48*e1*t1*t2 + 5/18*e1**2*t1**2 + 5/18*e1**2*t2 - 25/16*e1**3*t1 + 331/144*e1**4)"
)

N_VALUE_EXAMPLES: Sequence[Tuple[Tuple[int, int, int, int], int]] = [
    ((3, 0, 10, 6), 10),
    ((1, 2, 10, 4), 10),
    ((1, 2, 6, 1), 6),
]


def forms_rows(skip_out_of_scope: bool = False) -> List[FormsRow]:
    rows = list(FORMS_ROWS)
    return [r for r in rows if not (skip_out_of_scope and r.skip)]
