#include "hameig/reduction.hpp"

#include <sstream>

namespace hameig {

namespace {

void validate_spec(const ReductionSpec& spec, const GraphParams& source) {
    if (source.n() < 2) {
        throw std::invalid_argument("reduce: source graph needs n >= 2");
    }
    if (spec.i < 1 || spec.i > source.n()) {
        throw std::invalid_argument("reduce: coordinate i out of range");
    }
    if (spec.k < 0 || spec.k >= source.q() || spec.m < 0 || spec.m >= source.q()) {
        throw std::invalid_argument("reduce: digit out of range");
    }
    if (spec.k == spec.m) {
        throw std::invalid_argument("reduce: digits k and m must differ");
    }
}

}  // namespace

VertexFunction reduce(const VertexFunction& f, const ReductionSpec& spec) {
    const GraphParams& source = f.params();
    validate_spec(spec, source);
    const GraphParams target(source.n() - 1, source.q());
    const std::int64_t s = source.stride(spec.i);
    VertexFunction g(target);
    for (std::int64_t t = 0; t < target.vertex_count(); ++t) {
        // insert(t, i, d) = low + d*s + high*(s*q) where t = low + high*s
        const std::int64_t low = t % s;
        const std::int64_t high = t / s;
        const std::int64_t stem = low + high * s * source.q();
        g[t] = f[stem + spec.k * s] - f[stem + spec.m * s];
    }
    return g;
}

std::string NonAdditiveWitness::describe() const {
    std::ostringstream out;
    out << "reduction (i=" << spec.i << ", k=" << spec.k << ", m=" << spec.m
        << ") is not constant: g(" << t1 << ") = " << to_string(g1)
        << " but g(" << t2 << ") = " << to_string(g2);
    return out.str();
}

NotAdditiveError::NotAdditiveError(NonAdditiveWitness witness)
    : std::runtime_error("function is not additive: " + witness.describe()),
      witness_(std::move(witness)) {}

std::optional<NonAdditiveWitness> find_non_additive_witness(const VertexFunction& f) {
    const GraphParams& p = f.params();
    if (p.n() < 2) {
        throw std::invalid_argument("find_non_additive_witness: needs n >= 2");
    }
    for (int i = 1; i <= p.n(); ++i) {
        for (int k = 0; k < p.q(); ++k) {
            for (int m = k + 1; m < p.q(); ++m) {
                const ReductionSpec spec{i, k, m};
                const VertexFunction g = reduce(f, spec);
                for (std::int64_t t = 1; t < g.size(); ++t) {
                    if (g[t] != g[0]) {
                        return NonAdditiveWitness{spec, 0, t, g[0], g[t]};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_additive(const VertexFunction& f) {
    return !find_non_additive_witness(f).has_value();
}

VertexFunction AdditiveDecomposition::reconstruct() const {
    VertexFunction f(params);
    for (std::int64_t x = 0; x < params.vertex_count(); ++x) {
        Rational value = base;
        for (int i = 1; i <= params.n(); ++i) {
            value += parts[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(params.digit(x, i))];
        }
        f[x] = std::move(value);
    }
    return f;
}

AdditiveDecomposition additive_decompose(const VertexFunction& f) {
    if (auto witness = find_non_additive_witness(f)) {
        throw NotAdditiveError(std::move(*witness));
    }
    const GraphParams& p = f.params();
    AdditiveDecomposition d{p, f[0], {}};
    d.parts.assign(static_cast<std::size_t>(p.n()),
                   std::vector<Rational>(static_cast<std::size_t>(p.q())));
    for (int i = 1; i <= p.n(); ++i) {
        const std::int64_t s = p.stride(i);
        for (int v = 1; v < p.q(); ++v) {
            d.parts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v)] =
                f[v * s] - d.base;
        }
    }
    return d;
}

}  // namespace hameig
