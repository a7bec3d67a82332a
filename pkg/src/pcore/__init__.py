"""Toolkit for group orders that force nontrivial normal p-subgroups.

Classifies orders n = p**s * m by exact divisibility of p**s against the
GL-order product big_gamma(m), constructs the witness group (a semidirect
product of an elementary-abelian kernel by a p-group of automorphisms)
whenever the divisibility permits one, verifies the construction on concrete
permutation groups, and computes reduced integer homology of the complex of
nontrivial p-subgroups.
"""

__version__ = "0.1.0"
