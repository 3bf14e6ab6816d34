"""
Matrices creuses exactes, stockées par colonnes : la colonne j est l'image
du j-ième vecteur de base.
"""
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from scalar.cyclotomic import cyclotomic_field
from scalar.numbers import CycScalar, ParamScalar

from .exceptions import NotInvertible, StructureError


class SparseMatrix:
    __slots__ = ('nrows', 'ncols', 'conductor', 'columns')

    def __init__(self, nrows, ncols, columns=None, conductor=1):
        self.nrows = nrows
        self.ncols = ncols
        self.conductor = conductor
        self.columns = {}
        for j, column in (columns or {}).items():
            if not 0 <= j < ncols:
                raise StructureError(f'column {j} out of range')
            clean = {}
            for i, value in column.items():
                if not 0 <= i < nrows:
                    raise StructureError(f'row {i} out of range')
                value = ParamScalar.constant(conductor, value)
                if value:
                    clean[i] = value
            if clean:
                self.columns[j] = clean

    @classmethod
    def _build(cls, nrows, ncols, conductor, columns):
        obj = cls.__new__(cls)
        obj.nrows, obj.ncols, obj.conductor = nrows, ncols, conductor
        obj.columns = {j: c for j, c in columns.items() if c}
        return obj

    @classmethod
    def identity(cls, n, conductor=1):
        one = ParamScalar.constant(conductor, 1)
        return cls._build(n, n, conductor, {j: {j: one} for j in range(n)})

    @classmethod
    def from_entries(cls, nrows, ncols, entries, conductor=1):
        """entries : itérable de (ligne, colonne, valeur)"""
        columns = {}
        for i, j, value in entries:
            columns.setdefault(j, {})[i] = value
        return cls(nrows, ncols, columns, conductor)

    def entries(self):
        for j in sorted(self.columns):
            column = self.columns[j]
            for i in sorted(column):
                yield i, j, column[i]

    def get(self, i, j):
        return self.columns.get(j, {}).get(i, ParamScalar.zero(self.conductor))

    def column(self, j):
        return self.columns.get(j, {})

    def apply(self, vector):
        """Image d'un vecteur {indice: coefficient}"""
        out = {}
        for j, coefficient in vector.items():
            for i, value in self.columns.get(j, {}).items():
                term = value * coefficient
                out[i] = out[i] + term if i in out else term
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise StructureError(f'cannot multiply {self.shape} by {other.shape}')
        columns = {}
        for j, column in other.columns.items():
            columns[j] = self.apply(column)
        return SparseMatrix._build(self.nrows, other.ncols, self.conductor, columns)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def kron(self, other):
        """Produit tensoriel A ⊗ B, indices (i, k) ↦ i * nrows(B) + k"""
        columns = {}
        for j, a_column in self.columns.items():
            for l, b_column in other.columns.items():
                column = {}
                for i, a in a_column.items():
                    base = i * other.nrows
                    for k, b in b_column.items():
                        column[base + k] = a * b
                columns[j * other.ncols + l] = column
        return SparseMatrix._build(self.nrows * other.nrows, self.ncols * other.ncols,
                                   self.conductor, columns)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    __hash__ = None

    def first_difference(self, other):
        """Première colonne où les deux matrices diffèrent, ou None"""
        for j in range(self.ncols):
            if self.columns.get(j, {}) != other.columns.get(j, {}):
                return j
        return None

    def is_identity(self):
        return self == SparseMatrix.identity(self.nrows, self.conductor) and self.nrows == self.ncols

    def is_constant(self):
        return all(v.is_constant() for column in self.columns.values() for v in column.values())

    def inverse(self):
        """Inverse sur Q(ω) par DomainMatrix ; les entrées dépendant de β ne sont pas inversibles ici"""
        if self.nrows != self.ncols:
            raise NotInvertible('only square matrices can be inverted')
        if not self.is_constant():
            raise NotInvertible('matrix entries depend on the formal parameter')
        rows = {}
        for i, j, value in self.entries():
            rows.setdefault(i, {})[j] = value.constant_value().value
        matrix = DomainMatrix(rows, self.shape, cyclotomic_field(self.conductor))
        try:
            inverse = matrix.inv()
        except DMNonInvertibleMatrixError as exc:
            raise NotInvertible('singular matrix') from exc
        columns = {}
        for i, row in inverse.to_sparse().rep.items():
            for j, value in row.items():
                if value:
                    scalar = CycScalar.from_field(self.conductor, value)
                    columns.setdefault(j, {})[i] = ParamScalar.constant(self.conductor, scalar)
        return SparseMatrix._build(self.nrows, self.ncols, self.conductor, columns)

    def __repr__(self):
        nnz = sum(len(c) for c in self.columns.values())
        return f'SparseMatrix({self.nrows}x{self.ncols}, nnz={nnz})'
