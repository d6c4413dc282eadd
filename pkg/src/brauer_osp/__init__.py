"""Exact Brauer-diagram calculus and the orthosymplectic kernel of the Brauer functor.

Submodules:

* :mod:`brauer_osp.combinatorics` partitions, tableaux, symmetric-group algebra
* :mod:`brauer_osp.diagram` Brauer diagrams and their composition
* :mod:`brauer_osp.linalg` exact sparse linear algebra
* :mod:`brauer_osp.algebra` the Brauer category with rational coefficients
* :mod:`brauer_osp.kernel` the kernel elements and their bases
* :mod:`brauer_osp.functor` matrices on tensor powers of a superspace
* :mod:`brauer_osp.cli` batch verification reports
"""

__version__ = "0.1.0"
