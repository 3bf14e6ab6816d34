"""
Scalaires exacts : le corps cyclotomique Q(ω_m) et l'anneau Q(ω_m)[β] en un
paramètre formel, portés par les domaines de sympy.

CycScalar enveloppe un élément du corps algébrique QQ<ω_m> (ANP, réduit
modulo Φ_m), ParamScalar un polynôme de QQ<ω_m>[b]. Les représentants sont
canoniques : deux valeurs sont égales si et seulement si leurs coefficients
le sont.
"""
from fractions import Fraction

from sympy.polys.domains import QQ

from hopfcore.exceptions import ConductorMismatch, NotInvertible

from .cyclotomic import beta_ring, cyclotomic_field, phi_degree


def to_fraction(q):
    return Fraction(int(q.numerator), int(q.denominator))


def _field_element(conductor, coeffs):
    """Élément de QQ<ω_m> à partir de rationnels par degré croissant"""
    K = cyclotomic_field(conductor)
    coeffs = [Fraction(c) for c in coeffs]
    element = K([QQ(c.numerator, c.denominator) for c in reversed(coeffs)])
    if len(coeffs) > phi_degree(conductor):
        # l'ANP ne se réduit modulo Φ_m qu'au produit
        element = element * K.one
    return element


class CycScalar:
    """Élément de Q(ω_m), ω_m racine primitive m-ième de l'unité"""

    __slots__ = ('conductor', 'value', '_hash')

    def __init__(self, conductor, coeffs=()):
        self._set(conductor, _field_element(conductor, coeffs))

    def _set(self, conductor, value):
        self.conductor = conductor
        self.value = value
        self._hash = None

    @classmethod
    def from_field(cls, conductor, value):
        """Enveloppe un élément déjà dans cyclotomic_field(conductor)"""
        obj = cls.__new__(cls)
        obj._set(conductor, value)
        return obj

    @classmethod
    def from_coeffs(cls, conductor, coeffs):
        return cls(conductor, coeffs)

    @classmethod
    def rational(cls, conductor, value):
        return cls(conductor, [value])

    @classmethod
    def root(cls, conductor, k=1):
        """ω^k"""
        omega = _field_element(conductor, [0, 1])
        return cls.from_field(conductor, omega ** (k % conductor))

    @property
    def field(self):
        return cyclotomic_field(self.conductor)

    @property
    def coeffs(self):
        """Coefficients rationnels sur 1, ω, …, ω^{φ(m)-1}"""
        coeffs = [to_fraction(c) for c in reversed(self.value.to_list())]
        return tuple(coeffs + [Fraction(0)] * (phi_degree(self.conductor) - len(coeffs)))

    def is_zero(self):
        return not self.value

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(f'conductors {self.conductor} and {other.conductor}')
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar.from_field(self.conductor, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar.from_field(self.conductor, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar.from_field(self.conductor, self.value - other.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar.from_field(self.conductor, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return CycScalar.from_field(self.conductor, self.field.one)
        return CycScalar.from_field(self.conductor, self.value ** exponent)

    def inverse(self):
        return field_inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, ParamScalar):
            return other == self
        try:
            other = self._coerce(other)
        except ConductorMismatch:
            return False
        if other is NotImplemented:
            return other
        return self.value == other.value

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, (self.coeffs,) if self.value else ()))
        return self._hash

    def __repr__(self):
        return f'CycScalar({self.conductor}, {format_coeffs(self.coeffs)!r})'

    def __str__(self):
        return format_coeffs(self.coeffs)


class ParamScalar:
    """Polynôme en β à coefficients dans Q(ω_m)"""

    __slots__ = ('conductor', 'poly', '_hash', '_unit')

    def __init__(self, conductor, poly):
        self.conductor = conductor
        self.poly = poly
        self._hash = None
        self._unit = None

    @property
    def ring(self):
        return beta_ring(self.conductor)

    @classmethod
    def zero(cls, conductor):
        return cls(conductor, beta_ring(conductor).zero)

    @classmethod
    def constant(cls, conductor, value=1):
        if isinstance(value, ParamScalar):
            return value
        if not isinstance(value, CycScalar):
            value = CycScalar.rational(conductor, value)
        elif value.conductor != conductor:
            raise ConductorMismatch(f'conductors {conductor} and {value.conductor}')
        return cls(conductor, beta_ring(conductor).ground_new(value.value))

    @classmethod
    def beta(cls, conductor):
        """Le paramètre formel β"""
        return cls(conductor, beta_ring(conductor).gens[0])

    @classmethod
    def root(cls, conductor, k=1):
        return cls.constant(conductor, CycScalar.root(conductor, k))

    @classmethod
    def from_coefficients(cls, conductor, coefficients):
        terms = {}
        for power, c in enumerate(coefficients):
            c = c if isinstance(c, CycScalar) else CycScalar.rational(conductor, c)
            if c:
                terms[(power,)] = c.value
        return cls(conductor, beta_ring(conductor)(terms))

    @property
    def coefficients(self):
        zero = cyclotomic_field(self.conductor).zero
        return tuple(CycScalar.from_field(self.conductor, self.poly.get((k,), zero))
                     for k in range(self.degree + 1))

    @property
    def degree(self):
        return max((monom[0] for monom in self.poly), default=-1)

    def is_zero(self):
        return not self.poly

    def __bool__(self):
        return bool(self.poly)

    def is_constant(self):
        return self.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise NotInvertible('value depends on the formal parameter')
        zero = cyclotomic_field(self.conductor).zero
        return CycScalar.from_field(self.conductor, self.poly.get((0,), zero))

    def unit_sign(self):
        """+1 ou -1 si la valeur vaut ±1, 0 sinon"""
        if self._unit is None:
            self._unit = 0
            c = self.poly.get((0,)) if len(self.poly) == 1 else None
            if c is not None:
                one = cyclotomic_field(self.conductor).one
                if c == one:
                    self._unit = 1
                elif c == -one:
                    self._unit = -1
        return self._unit

    def _coerce(self, other):
        if isinstance(other, ParamScalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(f'conductors {self.conductor} and {other.conductor}')
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return ParamScalar.constant(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ParamScalar(self.conductor, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar(self.conductor, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ParamScalar(self.conductor, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        sign = other.unit_sign()
        if sign:
            return self if sign == 1 else -self
        return ParamScalar(self.conductor, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ParamScalar(self.conductor, self.poly ** exponent)

    def inverse(self):
        return ParamScalar.constant(self.conductor, field_inverse(self))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def evaluate(self, value):
        """Substitue une valeur (constante) au paramètre β"""
        value = self._coerce(value)
        result = ParamScalar.zero(self.conductor)
        for coefficient in reversed(self.coefficients):
            result = result * value + ParamScalar.constant(self.conductor, coefficient)
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ConductorMismatch:
            return False
        if other is NotImplemented:
            return other
        return self.poly == other.poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, tuple(c.coeffs for c in self.coefficients)))
        return self._hash

    def __repr__(self):
        return f'ParamScalar({self.conductor}, {str(self)!r})'

    def __str__(self):
        if not self.poly:
            return '0'
        parts = []
        for power, coefficient in enumerate(self.coefficients):
            if coefficient.is_zero():
                continue
            text = format_coeffs(coefficient.coeffs)
            if power == 0:
                parts.append(text)
            else:
                suffix = 'b' if power == 1 else f'b^{power}'
                parts.append(f'({text})*{suffix}')
        return ' + '.join(parts)


def format_coeffs(coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            power = 'w' if k == 1 else f'w^{k}'
            terms.append(power if c == 1 else f'{c}*{power}')
    return ' + '.join(terms) or '0'


def field_inverse(a):
    """Inverse dans Q(ω_m), calculé par le corps algébrique de sympy"""
    if isinstance(a, ParamScalar):
        a = a.constant_value()
    if a.is_zero():
        raise NotInvertible('zero has no inverse')
    K = a.field
    return CycScalar.from_field(a.conductor, K.quo(K.one, a.value))


def scalar_arith(op, a, b=None):
    """Point d'entrée unique pour add, sub, mul, neg et eq"""
    if op == 'neg':
        return -a
    if b is not None and a.conductor != b.conductor:
        raise ConductorMismatch(f'conductors {a.conductor} and {b.conductor}')
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'eq':
        return a == b
    raise ValueError(f'unknown operation {op!r}')
