"""supercheck: exact verification of supersymmetric monoidal structures."""
__version__ = "0.1.0"
