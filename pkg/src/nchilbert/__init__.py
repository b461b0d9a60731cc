"""Hilbert series of monomial right modules over free associative algebras."""
