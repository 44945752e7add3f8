"""Generalized bent functions over Z_{2^t}: exact spectra, spread constructions,
vectorial gbent maps and relative difference sets."""

__version__ = "0.1.0"
