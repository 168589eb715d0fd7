#pragma once

#include <cstdint>
#include <vector>

#include "hameig/hamming.hpp"
#include "hameig/rational.hpp"

namespace hameig {

/// A function H(n,q) -> Q as a dense table of exact rationals in vertex-index
/// order. Treat instances as immutable once built; all operations on them are
/// pure and safe to run concurrently.
class VertexFunction {
public:
    explicit VertexFunction(GraphParams params);
    VertexFunction(GraphParams params, std::vector<Rational> values);

    const GraphParams& params() const { return params_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    const Rational& operator[](std::int64_t index) const {
        return values_[static_cast<std::size_t>(index)];
    }
    Rational& operator[](std::int64_t index) {
        return values_[static_cast<std::size_t>(index)];
    }
    const std::vector<Rational>& values() const { return values_; }

    bool is_zero() const;

    friend bool operator==(const VertexFunction& a, const VertexFunction& b) {
        return a.params_ == b.params_ && a.values_ == b.values_;
    }

private:
    GraphParams params_;
    std::vector<Rational> values_;
};

VertexFunction operator+(const VertexFunction& a, const VertexFunction& b);
VertexFunction operator-(const VertexFunction& a, const VertexFunction& b);
VertexFunction operator*(const Rational& scalar, const VertexFunction& f);

/// Vertex indices with nonzero value, ascending.
std::vector<std::int64_t> support_indices(const VertexFunction& f);
std::int64_t support_size(const VertexFunction& f);

}  // namespace hameig
