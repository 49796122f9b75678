"""Distribution-shift benchmark splits and OOD detector evaluation for source code."""

__version__ = "0.1.0"
