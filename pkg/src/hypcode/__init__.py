"""Surface codes from {r,s} tilings of closed hyperbolic and euclidean
surfaces: construction, parameters, decoding, and threshold estimation."""

__version__ = "0.1.0"
