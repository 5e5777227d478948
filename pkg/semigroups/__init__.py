"""
Semigroups package for semidecomp.

This package contains the numerical semigroup kernel, oversemigroup
enumeration, irreducible decompositions and the named families.
"""
