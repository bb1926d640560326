"""Exact verification of maximally symmetric graphs in the 3-torus.

Builds triply periodic graphs and their crystallographic symmetry groups with
rational arithmetic, passes to finite quotients on the 3-torus, and checks
genus, group order and knottedness against closed forms, together with the
Riemann-Hurwitz bound ``|G| <= 12(g-1)``.
"""

__version__ = "0.1.0"
