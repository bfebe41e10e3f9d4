"""Bifurcation sets at infinity of real bivariate polynomials, computed exactly.

Submodules:

* ``exactmath``   rationals, univariate polynomials, real algebraic numbers
* ``bivar``       bivariate / Laurent polynomials
* ``newton``      Newton polygons and faces at infinity
* ``fan``         admissible fans and chart expansions
* ``criticality`` critical values
* ``atinfinity``  hypotheses, B_f, family counts
* ``bound``       upper bound and successive toric modifications
* ``cli``         expression parser and command line front end
"""

__version__ = "0.1.0"
