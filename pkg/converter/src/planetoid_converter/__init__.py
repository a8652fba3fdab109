"""One-shot converter from the public Planetoid distribution to portable graph bundles."""

from .convert import ConversionError, ConversionReport, convert

__all__ = ["ConversionError", "ConversionReport", "convert"]
