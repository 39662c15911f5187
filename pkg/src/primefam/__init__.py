"""Prime families around Bertrand-type intervals.

Sieve-backed generation and classification of Ramanujan, pseudo-Ramanujan,
Labos, and pseudo-Labos primes, doubling-chain family sieves, density
statistics, and OEIS b-file cross-checks.
"""

from .chains import (ASCENDING, DESCENDING, DoublingChain, FamilySieveState,
                     doubling_chain, doubling_terms, family_sieve,
                     verify_seed_identity)
from .classify import (LABOS, NON_LPL, NON_RPR, PSEUDO_LABOS,
                       PSEUDO_RAMANUJAN, RAMANUJAN, ConditionTable, PrimeClass,
                       classify_range, condition1, condition2, condition3,
                       condition4, condition_table, lpl_upto, rpr_upto)
from .engine import PrimeTable, build_table
from .errors import (BFileParseError, OeisUnavailableError, OutOfRangeError,
                     ResourceLimitError)
from .oeis import BFile, diff_sequence, fetch_bfile, parse_bfile
from .ramanujan import (interval_prime_counts, labos_primes, labos_upto,
                        ramanujan_primes, ramanujan_upto,
                        verify_ramanujan_extremal)
from .stats import (IntervalIdentity, StatsReport, aligned_checkpoints,
                    interval_count_identity, ladder, ramanujan_fraction,
                    reference_constants, win_fraction)

__version__ = "0.1.0"

__all__ = [
    "ASCENDING", "DESCENDING", "LABOS", "NON_LPL", "NON_RPR", "PSEUDO_LABOS",
    "PSEUDO_RAMANUJAN", "RAMANUJAN", "BFile", "BFileParseError",
    "ConditionTable", "DoublingChain", "FamilySieveState", "IntervalIdentity",
    "OeisUnavailableError", "OutOfRangeError", "PrimeClass", "PrimeTable",
    "ResourceLimitError", "StatsReport", "aligned_checkpoints", "build_table",
    "classify_range", "condition1", "condition2", "condition3", "condition4",
    "condition_table", "diff_sequence", "doubling_chain", "doubling_terms",
    "family_sieve", "fetch_bfile", "interval_count_identity",
    "interval_prime_counts", "labos_primes", "labos_upto", "ladder",
    "lpl_upto", "parse_bfile", "ramanujan_fraction", "ramanujan_primes",
    "ramanujan_upto", "reference_constants", "rpr_upto",
    "verify_ramanujan_extremal", "verify_seed_identity", "win_fraction",
]
