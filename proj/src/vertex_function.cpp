#include "hameig/vertex_function.hpp"

#include <stdexcept>

namespace hameig {

VertexFunction::VertexFunction(GraphParams params)
    : params_(std::move(params)),
      values_(static_cast<std::size_t>(params_.vertex_count())) {}

VertexFunction::VertexFunction(GraphParams params, std::vector<Rational> values)
    : params_(std::move(params)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != params_.vertex_count()) {
        throw std::invalid_argument("VertexFunction: value table length must be q^n");
    }
}

bool VertexFunction::is_zero() const {
    for (const Rational& v : values_) {
        if (!hameig::is_zero(v)) return false;
    }
    return true;
}

namespace {

void require_same_params(const VertexFunction& a, const VertexFunction& b) {
    if (!(a.params() == b.params())) {
        throw std::invalid_argument("VertexFunction: graph parameters differ");
    }
}

}  // namespace

VertexFunction operator+(const VertexFunction& a, const VertexFunction& b) {
    require_same_params(a, b);
    VertexFunction out(a.params());
    for (std::int64_t v = 0; v < a.size(); ++v) out[v] = a[v] + b[v];
    return out;
}

VertexFunction operator-(const VertexFunction& a, const VertexFunction& b) {
    require_same_params(a, b);
    VertexFunction out(a.params());
    for (std::int64_t v = 0; v < a.size(); ++v) out[v] = a[v] - b[v];
    return out;
}

VertexFunction operator*(const Rational& scalar, const VertexFunction& f) {
    VertexFunction out(f.params());
    for (std::int64_t v = 0; v < f.size(); ++v) out[v] = scalar * f[v];
    return out;
}

std::vector<std::int64_t> support_indices(const VertexFunction& f) {
    std::vector<std::int64_t> indices;
    for (std::int64_t v = 0; v < f.size(); ++v) {
        if (!is_zero(f[v])) indices.push_back(v);
    }
    return indices;
}

std::int64_t support_size(const VertexFunction& f) {
    std::int64_t count = 0;
    for (std::int64_t v = 0; v < f.size(); ++v) {
        if (!is_zero(f[v])) ++count;
    }
    return count;
}

}  // namespace hameig
