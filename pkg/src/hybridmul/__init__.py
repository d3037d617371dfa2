"""Negacyclic polynomial multiplication over F_q[x]/(x^n + 1) that stops the
NTT early and finishes each component with Toom-4 or Karatsuba."""

from .addchain import AdditionChain, interpolation_chains, search_optimal, validate_chain, verify_chains
from .costmodel import DEFAULT_W, optimal_L, reproduce_table1, total_cost
from .field import CountingField, FieldCtx, FieldError, OpCount, max_ntt_depth
from .hybrid import HybridParams, ParamsError, Pipeline, negacyclic_mul, resolve
from .karatsuba import karatsuba_mul
from .ntt import Inner, NttPlan, build_plan, incomplete_ntt_mul, ntt_forward, ntt_inverse, pointwise_mul
from .opcounter import measure
from .poly import Poly, decode, encode, negacyclic_schoolbook, reduce_binomial, schoolbook_mul
from .toom4 import Toom4Error, toom4_mul, toom4_mul_scaled, toom4_rescale

__version__ = "0.1.0"

__all__ = [
    "AdditionChain", "interpolation_chains", "search_optimal", "validate_chain", "verify_chains",
    "DEFAULT_W", "optimal_L", "reproduce_table1", "total_cost",
    "CountingField", "FieldCtx", "FieldError", "OpCount", "max_ntt_depth",
    "HybridParams", "ParamsError", "Pipeline", "negacyclic_mul", "resolve",
    "karatsuba_mul",
    "Inner", "NttPlan", "build_plan", "incomplete_ntt_mul", "ntt_forward", "ntt_inverse", "pointwise_mul",
    "measure",
    "Poly", "decode", "encode", "negacyclic_schoolbook", "reduce_binomial", "schoolbook_mul",
    "Toom4Error", "toom4_mul", "toom4_mul_scaled", "toom4_rescale",
]
