"""
Format JSON des scalaires : un rationnel est une chaîne "p/q" (ou "p"),
un élément cyclotomique un tableau de rationnels de longueur φ(m), un
polynôme en β un tableau d'éléments cyclotomiques. Le conducteur m est
porté par le document englobant.
"""
from fractions import Fraction

from hopfcore.exceptions import SchemaError

from .cyclotomic import phi_degree
from .numbers import CycScalar, ParamScalar


def rational_to_json(value):
    return str(Fraction(value))


def rational_from_json(data):
    if isinstance(data, bool) or not isinstance(data, (str, int)):
        raise SchemaError(f'rational must be a "p/q" string, got {data!r}')
    try:
        return Fraction(data)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f'invalid rational {data!r}') from exc


def cyc_to_json(value):
    return [rational_to_json(c) for c in value.coeffs]


def cyc_from_json(conductor, data):
    if not isinstance(data, list):
        raise SchemaError(f'cyclotomic value must be an array, got {data!r}')
    if len(data) > phi_degree(conductor):
        raise SchemaError(f'too many coefficients for conductor {conductor}')
    return CycScalar.from_coeffs(conductor, [rational_from_json(c) for c in data])


def param_to_json(value):
    return [cyc_to_json(c) for c in value.coefficients]


def param_from_json(conductor, data):
    if not isinstance(data, list):
        raise SchemaError(f'parameter polynomial must be an array, got {data!r}')
    return ParamScalar.from_coefficients(conductor, [cyc_from_json(conductor, c) for c in data])
