#pragma once

#include <cstdint>
#include <vector>

#include "hameig/vertex_function.hpp"

namespace hameig {

/// lambda_m = n(q-1) - q*m, the m-th adjacency eigenvalue of H(n,q).
/// Requires 0 <= m <= n.
std::int64_t eigenvalue(int m, const GraphParams& params);

/// [lambda_0, ..., lambda_n], strictly decreasing in steps of q.
std::vector<std::int64_t> spectrum(const GraphParams& params);

/// (Af)(x) = sum of f over the neighbors of x, computed matrix-free from
/// per-axis column sums: Af = sum_t S_t - n*f where S_t(x) sums f over the q
/// values of coordinate t. Costs O(n*q^n) rational additions. The column
/// loops run under OpenMP; the arithmetic is exact, so the result does not
/// depend on the thread count.
VertexFunction apply_adjacency(const VertexFunction& f);

/// Same operator by literal neighbor enumeration per vertex, O(n*q*q^n) and
/// serial. Reference implementation kept for tests and the benchmark.
VertexFunction apply_adjacency_reference(const VertexFunction& f);

struct EigenCheck {
    bool passes = false;
    /// The zero function satisfies Af = lambda*f for every lambda; callers
    /// that need f != 0 must look at this flag.
    bool trivial_zero = false;
};

/// Exact test of Af == lambda*f.
EigenCheck check_eigenfunction(const VertexFunction& f, std::int64_t lambda);
bool is_eigenfunction(const VertexFunction& f, std::int64_t lambda);

/// The n(q-1) functions e_{i,v}(x) = [x_i = v] - [x_i = 0] for i in 1..n and
/// v in 1..q-1, ordered i-major then v ascending. Each satisfies
/// Ae = lambda_1 * e and the family is linearly independent; digit 0 is the
/// reference cell of every coordinate.
std::vector<VertexFunction> eigenbasis_lambda1(const GraphParams& params);

/// A nonzero lambda_1-combination with the given integer coefficients over
/// eigenbasis_lambda1 order (coefficient (i-1)(q-1)+(v-1) multiplies e_{i,v}).
VertexFunction lambda1_combination(const GraphParams& params,
                                   const std::vector<int>& coeffs);

/// Random integer-coefficient sum of product functions prod_{t in M} phi_t(x_t)
/// with |M| = m and every phi_t zero-sum over the alphabet; such products are
/// lambda_m eigenfunctions. The result is nonzero for m >= 0 and reproducible
/// for a fixed seed. coefficient_bound caps the magnitude of the random
/// integers used for coefficients and table entries.
VertexFunction random_eigenfunction(int m, const GraphParams& params,
                                    std::uint64_t seed, int coefficient_bound = 3);

}  // namespace hameig
