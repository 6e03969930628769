"""Weighted degrees and multidegrees of polynomial automorphisms."""
