"""Exact character tables and supercharacter theories."""

from ._supchar import (
    CandidateLimitExceeded,
    CharacterTable,
    ConstructionError,
    Cyclotomic,
    FormatError,
    InvalidTable,
    ParseError,
    SuperTheory,
    classify_n,
    classify_small_s,
    coarse,
    conjugation,
    count,
    divisor_count,
    enumerate,
    fine,
    galois,
    gen_cyclic,
    gen_suzuki,
    is_prime,
    join,
    load_table,
    load_table_file,
    naive_enumerate,
    nonreal_pair_count,
    odd_distinct_partitions,
    pair,
    parse,
    prime_profile,
    s_cyclic,
    safe_primes_upto,
    split_profile,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
