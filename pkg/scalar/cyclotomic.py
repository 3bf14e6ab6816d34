"""
Corps cyclotomiques comme domaines sympy.

Φ_m vient de sympy.cyclotomic_poly ; Q(ω_m) est le corps algébrique de
sympy engendré par ω_m = exp(2iπ/m), déclaré avec Φ_m comme polynôme minimal
(aucune approximation numérique). Q(ω_m)[β] est l'anneau de polynômes
sympy.polys.rings sur ce corps.
"""
from functools import lru_cache

from sympy import I, Symbol, cyclotomic_poly, exp, pi, totient
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

x = Symbol('x')


def _check_conductor(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f'conductor must be a positive integer, got {m!r}')


@lru_cache(maxsize=None)
def minimal_polynomial(m):
    """Φ_m comme Poly entier en x"""
    _check_conductor(m)
    return cyclotomic_poly(m, x, polys=True)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients de Φ_m par degré croissant : (1, -1, 1) pour m = 6"""
    return tuple(int(c) for c in reversed(minimal_polynomial(m).all_coeffs()))


@lru_cache(maxsize=None)
def phi_degree(m):
    _check_conductor(m)
    return int(totient(m))


@lru_cache(maxsize=None)
def cyclotomic_field(m):
    """QQ<ω_m> ; ses éléments (ANP) sont réduits modulo Φ_m"""
    return QQ.algebraic_field((minimal_polynomial(m), exp(2 * pi * I / m)))


@lru_cache(maxsize=None)
def beta_ring(m):
    """QQ<ω_m>[b], b tenant lieu du paramètre formel β"""
    R, _ = ring('b', cyclotomic_field(m))
    return R
