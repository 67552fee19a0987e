from .graded import ChowRing, GradedClass

__all__ = ['ChowRing', 'GradedClass']
