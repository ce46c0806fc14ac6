"""Exact-arithmetic engine for skew polynomial rings, their (possibly
nonassociative) quotient algebras, and the monomial maps between them."""

__version__ = "0.1.0"
