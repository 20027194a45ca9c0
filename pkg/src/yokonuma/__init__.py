"""Exact arithmetic in Yokonuma-Hecke algebras, their Temperley-Lieb type
quotient, and the Markov-trace factoring question."""

from .scalars import Laurent, TracePoly, QuadExt, QuadRoots, parse_poly, U
from .yhecke import AlgebraElement, basis_element, gen_g, gen_t, idempotent_e, g_inverse, mul, unit
from .ytl import dim_formula, linear_relation, reduce_to_sigma, ytl_dimension, ytl_mul
from .jtrace import TraceParams, factoring_scan, trace, z_quadratic, z_roots

__version__ = "0.1.0"
