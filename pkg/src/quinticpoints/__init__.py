"""Exact construction and certification of rational and Q(i)-rational points
on quintic hypersurfaces f(p) + f(q) = f(r) + f(s)."""

__version__ = "0.1.0"
