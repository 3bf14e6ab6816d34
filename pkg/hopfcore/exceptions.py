class QHopfError(Exception):
    """Erreur de base de la boîte à outils"""


class ConductorMismatch(QHopfError, ValueError):
    """Deux scalaires vivent dans des corps cyclotomiques différents"""


class NotInvertible(QHopfError, ZeroDivisionError):
    pass


class StructureError(QHopfError, ValueError):
    """Arité, pattes ou constantes de structure incohérentes"""


class GroupError(StructureError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AxiomFailure(QHopfError):
    """Un constructeur a produit un objet qui ne vérifie pas ses axiomes"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CrossCheckError(QHopfError):
    """Deux critères indépendants donnent des verdicts différents"""


class SchemaError(QHopfError, ValueError):
    pass
