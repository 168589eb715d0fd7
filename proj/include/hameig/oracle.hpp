#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hameig/constructions.hpp"
#include "hameig/operators.hpp"

namespace hameig {

struct OracleOptions {
    /// Maximum number of coefficient combinations; larger grids are rejected
    /// unless the caller raises the cap explicitly.
    std::int64_t grid_cap = 10'000'000;
    /// Random grid points re-checked against is_eigenfunction per run.
    int eigencheck_samples = 100;
    std::uint64_t sample_seed = 0x6d696e73;
    /// Chunked OpenMP enumeration; the result is identical either way.
    bool parallel = true;
};

/// A minimum-support coefficient vector over eigenbasis_lambda1, stored as its
/// primitive representative (entries divided by their gcd; sign kept, since a
/// sign flip swaps the two layers and is a different canonical form).
struct Achiever {
    std::vector<int> coeffs;
    std::int64_t support = 0;
    std::optional<CanonicalForm> form;  // filled by verify_main_theorem
    bool eigen_ok = false;
    bool additive_ok = false;
};

struct SearchReport {
    int n = 0;
    int q = 0;
    std::vector<int> coefficient_set;
    std::int64_t theoretical_min = 0;  // 2(q-1)q^(n-2)
    std::int64_t observed_min = 0;
    std::int64_t enumerated_count = 0;  // nonzero coefficient vectors
    std::vector<Achiever> achievers;    // deduplicated, lexicographic order
    int eigencheck_samples = 0;
    bool eigencheck_passed = false;
    /// False until verify_main_theorem has classified the achievers; the
    /// verdict of an unclassified report only asserts observed == theoretical
    /// plus the sampled eigenchecks.
    bool classified = false;
    bool verdict = false;
    std::string note;
};

/// Enumerates every nonzero coefficient vector over eigenbasis_lambda1 with
/// entries from coefficient_set, recording the minimum support and all
/// achievers. The set must be symmetric, contain 0 and +-1. Requires q > 2,
/// n >= 2. Pruning abandons a vector once its count exceeds the best known
/// minimum; achievers are recollected in a second pass at the final minimum.
SearchReport grid_min_support(const GraphParams& params,
                              const std::vector<int>& coefficient_set,
                              const OracleOptions& options = {});

/// grid_min_support plus classification: every achiever is classified through
/// classify_additive and cross-checked with is_eigenfunction(lambda_1) and
/// is_additive. verdict is true iff the observed minimum equals
/// 2(q-1)q^(n-2), every achiever is a dual layer and every cross-check and
/// sampled eigencheck passed.
SearchReport verify_main_theorem(const GraphParams& params,
                                 const std::vector<int>& coefficient_set,
                                 const OracleOptions& options = {});

/// Single-threaded single-pass enumeration without pruning. Reference
/// implementation for testing the search kernel; produces a field-identical
/// report.
SearchReport grid_min_support_reference(const GraphParams& params,
                                        const std::vector<int>& coefficient_set,
                                        const OracleOptions& options = {});

struct Lemma3Report {
    int q = 0;
    std::vector<int> coefficient_set;
    std::int64_t enumerated = 0;   // all base/part tables over the set
    std::int64_t qualifying = 0;   // support <= 2(q-1)
    std::int64_t zero_count = 0;
    std::int64_t single_count = 0;
    std::int64_t dual_count = 0;
    std::int64_t failures = 0;  // trichotomy violations (must stay 0)
    std::vector<std::string> diagnostics;
};

/// Enumerates every function base + part_1(x_1) + part_2(x_2) on H(2,q) with
/// base and all 2q table entries drawn from coefficient_set; classifies each
/// one whose support is at most 2(q-1). Requires q > 2.
Lemma3Report exhaustive_lemma3_check(int q, const std::vector<int>& coefficient_set,
                                     std::int64_t enumeration_cap = 10'000'000);

}  // namespace hameig
