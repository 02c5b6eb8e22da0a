"""Enumerators for the six Brill-Noether strata of genus-6 curves over F_2."""
