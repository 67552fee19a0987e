from src.chow.graded import ChowRing, GradedClass
from src.errors import DomainError
from src.sheaves.sheaf_class import SheafClass
from src.symfun.partitions import Partition


def dual(sheaf: SheafClass) -> SheafClass:
    return sheaf.dual()


def direct_sum(*sheaves: SheafClass) -> SheafClass:
    if not sheaves:
        raise DomainError("empty direct sum")
    total = sheaves[0]
    for s in sheaves[1:]:
        total = total + s
    return total


def tensor(first: SheafClass, second: SheafClass) -> SheafClass:
    return first * second


def tensor_line(sheaf: SheafClass, line: SheafClass) -> SheafClass:
    return sheaf.tensor_line(line)


def det(sheaf: SheafClass) -> SheafClass:
    return sheaf.det()


def ch(sheaf: SheafClass) -> GradedClass:
    return sheaf.ch


def chern_from_ch(rank: int, character: GradedClass) -> SheafClass:
    """Sheaf class with the given Chern character; its total Chern class is `.chern`."""
    if character.constant() != rank:
        raise DomainError("rank does not match the degree-0 part of the character")
    return SheafClass(character)


def ch_from_chern(rank: int, chern: GradedClass) -> GradedClass:
    return SheafClass.from_chern(rank, chern).ch


def todd(sheaf: SheafClass) -> GradedClass:
    return sheaf.todd()


def wedge(sheaf: SheafClass, k: int) -> SheafClass:
    return sheaf.wedge(k)


def sym(sheaf: SheafClass, k: int) -> SheafClass:
    return sheaf.sym(k)


def schur(sheaf: SheafClass, partition: Partition) -> SheafClass:
    return sheaf.schur(partition)


def adjoint_sl(sheaf: SheafClass) -> SheafClass:
    if sheaf.rank < 2:
        raise DomainError("sl(E) needs rank at least 2")
    return sheaf * sheaf.dual() - 1


def cotangent_of_zero_locus(ambient_tangent: SheafClass, normal: SheafClass, p: int) -> SheafClass:
    """Omega^p of the zero locus of a regular section of `normal`, as a class upstairs."""
    if p < 0:
        raise DomainError("negative form degree")
    return (ambient_tangent.dual() - normal.dual()).wedge(p)


def trivial(ring: ChowRing, n: int = 1) -> SheafClass:
    return SheafClass.trivial(ring, n)


def line_bundle(c1: GradedClass) -> SheafClass:
    return SheafClass.line(c1)
