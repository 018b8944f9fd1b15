from __future__ import (absolute_import, division, print_function,
                        unicode_literals)


class CapExceeded(ValueError):
    """A configured size cap would be exceeded; nothing is silently truncated."""

    def __init__(self, message, cap):
        ValueError.__init__(self, '{} (cap={})'.format(message, cap))
        self.cap = cap


class TruncationError(CapExceeded):
    """A depth-truncated table is not closed under a fragment morphism."""


class UniverseError(ValueError):
    """An atom lies outside the declared universe."""

    def __init__(self, atom, where=''):
        msg = 'atom {!r} is outside the declared universe'.format(str(atom))
        if where:
            msg = '{}: {}'.format(where, msg)
        ValueError.__init__(self, msg)
        self.atom = atom


class SchemaError(ValueError):
    """An input document violates its schema.  *path* is a JSON pointer."""

    def __init__(self, path, message):
        ValueError.__init__(self, '{}: {}'.format(path or '/', message))
        self.path = path
