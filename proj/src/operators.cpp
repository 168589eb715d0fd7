#include "hameig/operators.hpp"

#include <random>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hameig {

std::int64_t eigenvalue(int m, const GraphParams& params) {
    if (m < 0 || m > params.n()) {
        throw std::invalid_argument("eigenvalue: m must lie in 0..n");
    }
    return static_cast<std::int64_t>(params.n()) * (params.q() - 1) -
           static_cast<std::int64_t>(params.q()) * m;
}

std::vector<std::int64_t> spectrum(const GraphParams& params) {
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(params.n()) + 1);
    for (int m = 0; m <= params.n(); ++m) values.push_back(eigenvalue(m, params));
    return values;
}

VertexFunction apply_adjacency(const VertexFunction& f) {
    const GraphParams& p = f.params();
    const std::int64_t count = p.vertex_count();
    const int n = p.n();
    const int q = p.q();
    VertexFunction out(p);

    // One pass per axis: every column of q entries along the axis receives its
    // column sum. Columns are disjoint, so each pass parallelizes cleanly.
    for (int t = 1; t <= n; ++t) {
        const std::int64_t s = p.stride(t);
        const std::int64_t columns = count / q;
#pragma omp parallel for schedule(static)
        for (std::int64_t col = 0; col < columns; ++col) {
            const std::int64_t base = (col / s) * (s * q) + col % s;
            Rational colsum = f[base];
            for (int d = 1; d < q; ++d) colsum += f[base + d * s];
            for (int d = 0; d < q; ++d) out[base + d * s] += colsum;
        }
    }

    // Each column sum included f(x) itself once per axis.
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < count; ++x) out[x] -= n * f[x];
    return out;
}

VertexFunction apply_adjacency_reference(const VertexFunction& f) {
    const GraphParams& p = f.params();
    VertexFunction out(p);
    for (std::int64_t x = 0; x < p.vertex_count(); ++x) {
        Rational sum = 0;
        for (const Word& y : neighbors(decode_vertex(x, p), p)) {
            sum += f[encode_vertex(y, p)];
        }
        out[x] = std::move(sum);
    }
    return out;
}

EigenCheck check_eigenfunction(const VertexFunction& f, std::int64_t lambda) {
    EigenCheck result;
    result.trivial_zero = f.is_zero();
    const VertexFunction af = apply_adjacency(f);
    const Rational lam(static_cast<long>(lambda));
    for (std::int64_t x = 0; x < f.size(); ++x) {
        if (af[x] != lam * f[x]) return result;
    }
    result.passes = true;
    return result;
}

bool is_eigenfunction(const VertexFunction& f, std::int64_t lambda) {
    return check_eigenfunction(f, lambda).passes;
}

std::vector<VertexFunction> eigenbasis_lambda1(const GraphParams& params) {
    std::vector<VertexFunction> basis;
    basis.reserve(static_cast<std::size_t>(params.degree()));
    for (int i = 1; i <= params.n(); ++i) {
        for (int v = 1; v < params.q(); ++v) {
            VertexFunction e(params);
            for (std::int64_t x = 0; x < params.vertex_count(); ++x) {
                const int d = params.digit(x, i);
                if (d == v) {
                    e[x] = 1;
                } else if (d == 0) {
                    e[x] = -1;
                }
            }
            basis.push_back(std::move(e));
        }
    }
    return basis;
}

VertexFunction lambda1_combination(const GraphParams& params,
                                   const std::vector<int>& coeffs) {
    const int n = params.n();
    const int q = params.q();
    if (static_cast<int>(coeffs.size()) != params.degree()) {
        throw std::invalid_argument("lambda1_combination: need n(q-1) coefficients");
    }
    // Per-coordinate digit tables; each sums to zero over the alphabet.
    std::vector<std::vector<long>> u(static_cast<std::size_t>(n),
                                     std::vector<long>(static_cast<std::size_t>(q), 0));
    for (int i = 0; i < n; ++i) {
        for (int v = 1; v < q; ++v) {
            const long c = coeffs[static_cast<std::size_t>(i * (q - 1) + v - 1)];
            u[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = c;
            u[static_cast<std::size_t>(i)][0] -= c;
        }
    }
    VertexFunction out(params);
    for (std::int64_t x = 0; x < params.vertex_count(); ++x) {
        long sum = 0;
        for (int i = 1; i <= n; ++i) {
            sum += u[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(params.digit(x, i))];
        }
        if (sum != 0) out[x] = sum;
    }
    return out;
}

VertexFunction random_eigenfunction(int m, const GraphParams& params,
                                    std::uint64_t seed, int coefficient_bound) {
    if (m < 0 || m > params.n()) {
        throw std::invalid_argument("random_eigenfunction: m must lie in 0..n");
    }
    if (coefficient_bound < 1) {
        throw std::invalid_argument("random_eigenfunction: coefficient bound must be >= 1");
    }
    const int n = params.n();
    const int q = params.q();
    std::mt19937_64 rng(seed);
    // Plain modulo keeps the draw deterministic across standard libraries.
    auto draw = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        VertexFunction f(params);
        const int terms = draw(1, 3);
        for (int term = 0; term < terms; ++term) {
            // m distinct coordinates for this product term
            std::vector<int> coords(static_cast<std::size_t>(n));
            std::iota(coords.begin(), coords.end(), 1);
            for (int t = n - 1; t > 0; --t) {
                std::swap(coords[static_cast<std::size_t>(t)],
                          coords[static_cast<std::size_t>(draw(0, t))]);
            }
            coords.resize(static_cast<std::size_t>(m));

            // zero-sum digit table per chosen coordinate
            std::vector<std::vector<long>> phi(static_cast<std::size_t>(m),
                                               std::vector<long>(static_cast<std::size_t>(q)));
            for (auto& table : phi) {
                bool nonzero = false;
                while (!nonzero) {
                    long total = 0;
                    for (int d = 0; d < q - 1; ++d) {
                        table[static_cast<std::size_t>(d)] = draw(-coefficient_bound, coefficient_bound);
                        total += table[static_cast<std::size_t>(d)];
                    }
                    table[static_cast<std::size_t>(q - 1)] = -total;
                    for (long v : table) nonzero = nonzero || v != 0;
                }
            }

            long coef = 0;
            while (coef == 0) coef = draw(-coefficient_bound, coefficient_bound);

            for (std::int64_t x = 0; x < params.vertex_count(); ++x) {
                long product = coef;
                for (int t = 0; t < m && product != 0; ++t) {
                    const int i = coords[static_cast<std::size_t>(t)];
                    product *= phi[static_cast<std::size_t>(t)]
                                  [static_cast<std::size_t>(params.digit(x, i))];
                }
                if (product != 0) f[x] += product;
            }
        }
        if (!f.is_zero()) return f;
    }
    throw std::runtime_error("random_eigenfunction: no nonzero draw after 64 attempts");
}

}  // namespace hameig
