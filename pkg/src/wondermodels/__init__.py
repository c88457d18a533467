"""Cohomology of wonderful models for G(r,p,n) and real nestohedron face counts."""

__version__ = "0.1.0"

from .series import TruncatedSeries, QPolynomial

__all__ = ["TruncatedSeries", "QPolynomial", "__version__"]
