"""Exact arithmetic in the rational cohomology ring of the Grassmannian.

Schur-basis multiplication truncated to a k x l box, the Hilbert series of
the filtration by the subalgebras generated by e_1..e_m, and instance
checkers for the conjectures and identities built on them.
"""

__version__ = "0.1.0"
