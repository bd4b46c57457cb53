"""Soft-decision Reed-Solomon decoding with tree-ordered Chase trials.

Public surface: field/code construction, the AWGN likelihood pipeline, the
tree-search decoder with its optimality certificates, a Chase baseline with
Gray-ordered test patterns, and a seeded Monte-Carlo sweep harness.
"""

from .baselines import BoundTally, LccConfig, classify_ml, lcc_decode
from .channel import (SoftWeights, frame_rng, hard_decision, likelihoods, load_pi,
                      modulate, save_pi, sigma_from_snr_db, soft_weights, transmit)
from .chase import (AtomChain, FlippingPattern, ROOT, bound_B, build_atom_chain,
                    greedy_g_min, kaneko_B0, leftmost_child, minimal_decompose,
                    next_sibling, pattern_from_ranks, render_pattern)
from .decoder import (CERTIFIED_EXITS, DecodeResult, DecoderConfig,
                      EXIT_BUDGET, EXIT_CERTIFIED_KANEKO, EXIT_CERTIFIED_TREE, EXIT_GENIE,
                      EXIT_THRESHOLD, compare_traces, decode_with_trace,
                      mld_oracle, tcgs_decode, verify_trace)
from .galois import BinaryField, Field, PrimeField, make_field
from .interp import (GroebnerBasis, backward_remove, basis_init, factorize,
                     forward_add, interpolate_points, minimal_poly, wdeg_key)
from .rscode import CodeParams, encode, is_codeword, make_code, message_of
from .sim import SweepConfig, SweepRow, parse_snr_spec, rows_to_csv, run_point, run_sweep
from .stats import chi2_sf, chi2_threshold, wilson_interval

__version__ = "0.1.0"

__all__ = [
    "AtomChain", "BinaryField", "BoundTally", "CERTIFIED_EXITS", "CodeParams",
    "DecodeResult", "DecoderConfig", "EXIT_BUDGET", "EXIT_CERTIFIED_TREE",
    "EXIT_CERTIFIED_KANEKO", "EXIT_GENIE", "EXIT_THRESHOLD", "Field", "FlippingPattern",
    "GroebnerBasis", "LccConfig", "PrimeField", "ROOT", "SoftWeights",
    "SweepConfig", "SweepRow", "backward_remove", "basis_init", "bound_B",
    "build_atom_chain", "chi2_sf", "chi2_threshold", "classify_ml",
    "compare_traces", "decode_with_trace", "encode", "factorize", "forward_add",
    "frame_rng", "greedy_g_min", "hard_decision", "interpolate_points",
    "is_codeword", "kaneko_B0", "lcc_decode", "leftmost_child", "likelihoods",
    "load_pi", "make_code", "make_field", "message_of", "minimal_decompose",
    "minimal_poly", "mld_oracle", "modulate", "next_sibling", "parse_snr_spec",
    "pattern_from_ranks", "render_pattern", "rows_to_csv", "run_point",
    "run_sweep", "save_pi", "sigma_from_snr_db", "soft_weights", "tcgs_decode",
    "transmit", "verify_trace", "wdeg_key", "wilson_interval",
]
