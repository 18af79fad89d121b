"""Eye-movement trajectory features: macro-event statistics and persistent
homology, with a bundled random forest and experiment harness."""

__version__ = "0.1.0"
