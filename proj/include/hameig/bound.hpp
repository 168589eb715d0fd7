#pragma once

#include <cstdint>
#include <string>

#include "hameig/rational.hpp"

namespace hameig {

/// Two-branch support lower bound for a nonzero lambda_m eigenfunction on
/// H(n,q), selected by the exact integer test m*q^2 > 4*n*(q-1):
///   branch 1:  2^m * (q-2)^(n-m)                          (exact integer)
///   branch 2:  q^n * (q-1)^(-m/2) * (m/(n-m))^(m/2) * (1-m/n)^(n/2)
/// Branch 2 is irrational in general; it is carried as its exact rational
/// square plus a decimal rendering computed at 256-bit precision (far beyond
/// the documented 20 significant digits) and is never used for exact
/// decisions -- comparisons go through the square.
struct SupportBound {
    int branch = 0;
    /// Branch 1 value, or the root of a branch 2 square that happens to be a
    /// perfect rational square; zero when the bound is irrational.
    Rational exact;
    Rational squared;     // exact square of the bound, both branches
    std::string decimal;  // decimal rendering, 25 significant digits
    double approx = 0.0;

    bool is_exact() const { return branch == 1 || sgn(exact) != 0; }

    /// Exact test bound <= x. No rounding: branch 2 compares squares.
    bool leq(const Rational& x) const;
};

/// Requires n >= 1, q >= 2, 0 <= m <= n. The pair (q=2, m=n) is rejected:
/// branch 2 is undefined there and the q = 2 case is outside this library's
/// certification scope.
SupportBound vorobev_lower_bound(int n, int q, int m);

}  // namespace hameig
