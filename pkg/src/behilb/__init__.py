"""Hilbert series of binomial edge ideals, by formula and by Groebner oracle."""
