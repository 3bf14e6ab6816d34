"""
Tenseurs creux : éléments de V_1 ⊗ ... ⊗ V_k stockés comme un dictionnaire
{tuple d'indices de base: coefficient non nul}. Un élément de H est un
tenseur d'arité 1, un scalaire un tenseur d'arité 0 (clé ()).
"""
from scalar.numbers import ParamScalar

from .exceptions import StructureError


class Accumulator:
    """Somme de termes indexés, les zéros sont éliminés à la fin"""

    __slots__ = ('conductor', 'terms')

    def __init__(self, conductor):
        self.conductor = conductor
        self.terms = {}

    def add(self, key, value):
        current = self.terms.get(key)
        self.terms[key] = value if current is None else current + value

    def add_tensor(self, tensor, factor=None):
        for key, value in tensor.entries.items():
            self.add(key, value if factor is None else value * factor)

    def to_tensor(self, dims):
        return Tensor._build(dims, self.conductor,
                             {k: v for k, v in self.terms.items() if v})


class Tensor:
    __slots__ = ('dims', 'conductor', 'entries')

    def __init__(self, dims, entries=None, conductor=1):
        dims = tuple(dims)
        clean = {}
        for key, value in (entries or {}).items():
            key = tuple(key)
            if len(key) != len(dims):
                raise StructureError(f'index {key} does not have arity {len(dims)}')
            for index, bound in zip(key, dims):
                if not 0 <= index < bound:
                    raise StructureError(f'index {key} out of range for dims {dims}')
            value = ParamScalar.constant(conductor, value)
            if value.conductor != conductor:
                raise StructureError(f'coefficient conductor {value.conductor} != {conductor}')
            if value:
                clean[key] = value
        self.dims = dims
        self.conductor = conductor
        self.entries = clean

    @classmethod
    def _build(cls, dims, conductor, entries):
        """Entrées déjà normalisées (aucun zéro stocké)"""
        obj = cls.__new__(cls)
        obj.dims = tuple(dims)
        obj.conductor = conductor
        obj.entries = entries
        return obj

    @classmethod
    def zero(cls, dims, conductor=1):
        return cls._build(dims, conductor, {})

    @classmethod
    def basis(cls, dims, key, conductor=1, coefficient=1):
        return cls(dims, {tuple(key): coefficient}, conductor)

    @property
    def arity(self):
        return len(self.dims)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def items(self):
        return self.entries.items()

    def get(self, key):
        return self.entries.get(tuple(key), ParamScalar.zero(self.conductor))

    def scalar_value(self):
        """Valeur d'un tenseur d'arité 0"""
        if self.dims:
            raise StructureError('only arity 0 tensors have a scalar value')
        return self.entries.get((), ParamScalar.zero(self.conductor))

    def _check_compatible(self, other):
        if not isinstance(other, Tensor):
            raise StructureError(f'expected a Tensor, got {type(other).__name__}')
        if other.dims != self.dims:
            raise StructureError(f'dims {self.dims} and {other.dims} differ')

    def __add__(self, other):
        self._check_compatible(other)
        acc = Accumulator(self.conductor)
        acc.add_tensor(self)
        acc.add_tensor(other)
        return acc.to_tensor(self.dims)

    def __neg__(self):
        return Tensor._build(self.dims, self.conductor, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = ParamScalar.constant(self.conductor, factor)
        if not factor:
            return Tensor.zero(self.dims, self.conductor)
        return Tensor._build(self.dims, self.conductor,
                             {k: v * factor for k, v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.dims == other.dims and self.entries == other.entries

    __hash__ = None

    def coefficients_in(self, allowed):
        """Vrai si tous les coefficients appartiennent à l'ensemble donné"""
        allowed = [ParamScalar.constant(self.conductor, a) for a in allowed]
        return all(value in allowed for value in self.entries.values())

    def describe(self, labels=None):
        if not self.entries:
            return '0'
        parts = []
        for key in sorted(self.entries):
            names = [labels[i] if labels else str(i) for i in key]
            parts.append(f'({self.entries[key]}) {"⊗".join(names)}')
        return ' + '.join(parts)

    def __repr__(self):
        return f'Tensor(dims={self.dims}, terms={len(self.entries)})'
