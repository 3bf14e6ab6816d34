from functools import lru_cache

from hopfcore.exceptions import GroupError

from .groups import cyclic, direct_product, s3

BUILDERS = {
    'c2': lambda: cyclic(2, 'g'),
    'c3': lambda: cyclic(3),
    'c4': lambda: cyclic(4),
    'c2xc2': lambda: direct_product(cyclic(2, 'a'), cyclic(2, 'b'), name='C2xC2'),
    's3': s3,
}


@lru_cache(maxsize=None)
def _build(name):
    return BUILDERS[name]()


class GroupCatalog:
    """Groupes intégrés, adressables par nom (builtin:s3 en ligne de commande)"""

    def names(self):
        return list(BUILDERS)

    def get(self, name):
        key = name.lower().replace('×', 'x')
        if key not in BUILDERS:
            raise GroupError(f'unknown catalog group {name!r}, expected one of {", ".join(BUILDERS)}')
        return _build(key)

    def all(self):
        return [self.get(name) for name in BUILDERS]

    def abelian(self):
        return [G for G in self.all() if G.is_abelian()]

    def non_abelian(self):
        return [G for G in self.all() if not G.is_abelian()]

    def factorizations(self):
        """(groupe, G₊, G₋) en étiquettes, utilisés par les balayages"""
        out = []
        for G in self.all():
            everything = list(G.labels)
            out.append((G, everything, [G.label(G.identity)]))
            out.append((G, [G.label(G.identity)], everything))
        S3 = self.get('s3')
        out.append((S3, ['e', 'r', 'r2'], ['e', 's']))
        V = self.get('c2xc2')
        out.append((V, ['(e,e)', '(a,e)'], ['(e,e)', '(e,b)']))
        return out


catalog = GroupCatalog()
