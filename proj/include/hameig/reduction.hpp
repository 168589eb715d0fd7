#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hameig/vertex_function.hpp"

namespace hameig {

/// Coordinate-difference reduction: from f on H(n,q) build the function
/// t -> f(insert(t,i,k)) - f(insert(t,i,m)) on H(n-1,q), where insert places
/// the digit at 1-based coordinate i and shifts the tail right. Maps a
/// lambda-eigenfunction to a (lambda+1)-eigenfunction one graph down.
struct ReductionSpec {
    int i;  // 1..n of the source graph
    int k;
    int m;  // k != m
};

VertexFunction reduce(const VertexFunction& f, const ReductionSpec& spec);

/// Proof that a function is not additive: a reduction that takes two
/// different values.
struct NonAdditiveWitness {
    ReductionSpec spec{};
    std::int64_t t1 = 0;  // reduced-graph vertex indices
    std::int64_t t2 = 0;
    Rational g1;
    Rational g2;

    std::string describe() const;
};

class NotAdditiveError : public std::runtime_error {
public:
    explicit NotAdditiveError(NonAdditiveWitness witness);
    const NonAdditiveWitness& witness() const { return witness_; }

private:
    NonAdditiveWitness witness_;
};

/// Scans every coordinate and every unordered digit pair k < m; returns the
/// first non-constant reduction found. Requires n >= 2.
std::optional<NonAdditiveWitness> find_non_additive_witness(const VertexFunction& f);

/// True iff every reduction g_{i,k,m} of f is a constant function.
bool is_additive(const VertexFunction& f);

/// f written as base + sum_t part_t(x_t) with part_t[0] == 0; exists exactly
/// for additive f, with base = f(0,...,0).
struct AdditiveDecomposition {
    GraphParams params;
    Rational base;
    std::vector<std::vector<Rational>> parts;  // n tables of q entries

    VertexFunction reconstruct() const;
};

/// Throws NotAdditiveError (with witness) when f is not additive.
AdditiveDecomposition additive_decompose(const VertexFunction& f);

}  // namespace hameig
