"""Exact computations with lowest weight modules over rational Cherednik
algebras of S_n, G(l,1,n) and Z/lZ."""

__version__ = "0.1.0"
