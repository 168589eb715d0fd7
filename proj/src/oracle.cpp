#include "hameig/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hameig/reduction.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hameig {

namespace {

std::vector<int> normalized_coefficient_set(const std::vector<int>& raw) {
    if (raw.empty()) {
        throw std::invalid_argument("coefficient set must not be empty");
    }
    std::vector<int> set = raw;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!std::binary_search(set.begin(), set.end(), 0) ||
        !std::binary_search(set.begin(), set.end(), 1) ||
        !std::binary_search(set.begin(), set.end(), -1)) {
        throw std::invalid_argument("coefficient set must contain 0, 1 and -1");
    }
    for (int value : set) {
        if (!std::binary_search(set.begin(), set.end(), -value)) {
            throw std::invalid_argument(
                "coefficient set must be symmetric under negation");
        }
    }
    return set;
}

/// |set|^dims, or cap+1 as soon as the product exceeds cap.
std::int64_t combination_count(std::int64_t set_size, int dims, std::int64_t cap) {
    std::int64_t total = 1;
    for (int t = 0; t < dims; ++t) {
        if (total > cap / set_size) {
            return cap + 1;
        }
        total *= set_size;
    }
    return total;
}

struct GridContext {
    GraphParams params;
    std::vector<int> set;
    int dims;            // n(q-1) coefficient slots
    std::int64_t total;  // |set|^dims combinations, all-zero included

    /// digits[x*n + (i-1)] = digit of vertex x in coordinate i.
    std::vector<int> digits;

    explicit GridContext(const GraphParams& p, std::vector<int> s,
                         std::int64_t total_count)
        : params(p), set(std::move(s)), dims(p.n() * (p.q() - 1)), total(total_count) {
        const std::int64_t vertex_count = p.vertex_count();
        digits.resize(static_cast<std::size_t>(vertex_count * p.n()));
        for (std::int64_t x = 0; x < vertex_count; ++x) {
            for (int i = 1; i <= p.n(); ++i) {
                digits[static_cast<std::size_t>(x * p.n() + i - 1)] = p.digit(x, i);
            }
        }
    }

    void decode(std::int64_t combo, std::vector<int>& coeffs) const {
        const auto set_size = static_cast<std::int64_t>(set.size());
        for (int t = 0; t < dims; ++t) {
            coeffs[static_cast<std::size_t>(t)] =
                set[static_cast<std::size_t>(combo % set_size)];
            combo /= set_size;
        }
    }

    /// Per-coordinate value tables of sum c_{i,v} e_{i,v}: slot (i-1)*q + v
    /// holds c_{i,v} for v >= 1 and -(sum over v) for v = 0, so the function
    /// value at x is the sum of the table entries the digits of x select.
    void build_tables(const std::vector<int>& coeffs, std::vector<long>& u) const {
        const int n = params.n();
        const int q = params.q();
        for (int i = 0; i < n; ++i) {
            long sum = 0;
            for (int v = 1; v < q; ++v) {
                const long entry = coeffs[static_cast<std::size_t>(i * (q - 1) + v - 1)];
                u[static_cast<std::size_t>(i * q + v)] = entry;
                sum += entry;
            }
            u[static_cast<std::size_t>(i * q)] = -sum;
        }
    }

    /// Support of the combination, except that counting stops at limit+1 once
    /// the support provably exceeds limit. Exact whenever the result <= limit.
    std::int64_t support_up_to(const std::vector<long>& u, std::int64_t limit) const {
        const int n = params.n();
        const int q = params.q();
        const std::int64_t vertex_count = params.vertex_count();
        std::int64_t count = 0;
        for (std::int64_t x = 0; x < vertex_count; ++x) {
            long value = 0;
            const std::size_t row = static_cast<std::size_t>(x * n);
            for (int i = 0; i < n; ++i) {
                value += u[static_cast<std::size_t>(i * q) +
                           static_cast<std::size_t>(digits[row + static_cast<std::size_t>(i)])];
            }
            if (value != 0 && ++count > limit) {
                return count;
            }
        }
        return count;
    }
};

std::vector<int> primitive_representative(const std::vector<int>& coeffs) {
    long g = 0;
    for (int value : coeffs) {
        g = std::gcd(g, static_cast<long>(std::abs(value)));
    }
    std::vector<int> rep = coeffs;
    if (g > 1) {
        for (int& value : rep) {
            value /= static_cast<int>(g);
        }
    }
    return rep;
}

bool run_sampled_eigenchecks(const GraphParams& params, const std::vector<int>& set,
                             const OracleOptions& options) {
    std::mt19937_64 rng(options.sample_seed);
    const std::int64_t lambda1 = eigenvalue(1, params);
    const int dims = params.n() * (params.q() - 1);
    const auto set_size = static_cast<std::uint64_t>(set.size());
    std::vector<int> coeffs(static_cast<std::size_t>(dims));
    for (int s = 0; s < options.eigencheck_samples; ++s) {
        bool nonzero = false;
        while (!nonzero) {
            for (int t = 0; t < dims; ++t) {
                coeffs[static_cast<std::size_t>(t)] =
                    set[static_cast<std::size_t>(rng() % set_size)];
                nonzero = nonzero || coeffs[static_cast<std::size_t>(t)] != 0;
            }
        }
        if (!is_eigenfunction(lambda1_combination(params, coeffs), lambda1)) {
            return false;
        }
    }
    return true;
}

GridContext make_context(const GraphParams& params, const std::vector<int>& raw_set,
                         const OracleOptions& options) {
    if (params.n() < 2) {
        throw std::invalid_argument("grid search requires n >= 2");
    }
    if (params.q() <= 2) {
        throw std::invalid_argument(
            "grid search requires q > 2; for q = 2 the lambda_1 minimum is not "
            "2(q-1)q^(n-2)");
    }
    std::vector<int> set = normalized_coefficient_set(raw_set);
    const int dims = params.n() * (params.q() - 1);
    const std::int64_t total =
        combination_count(static_cast<std::int64_t>(set.size()), dims, options.grid_cap);
    if (total > options.grid_cap) {
        std::ostringstream msg;
        msg << "coefficient grid needs |set|^" << dims << " = " << set.size() << "^"
            << dims << " combinations, which exceeds the cap " << options.grid_cap
            << "; raise OracleOptions::grid_cap to run it anyway";
        throw std::invalid_argument(msg.str());
    }
    return GridContext(params, std::move(set), total);
}

const char* kGridScopeNote =
    "minimum certified over the enumerated integer coefficient grid; extending "
    "it to arbitrary real coefficients uses the dual-layer characterization and "
    "is not re-proved by this search";

SearchReport finish_report(const GridContext& ctx, const OracleOptions& options,
                           std::int64_t observed_min,
                           const std::set<std::vector<int>>& representatives) {
    SearchReport report;
    report.n = ctx.params.n();
    report.q = ctx.params.q();
    report.coefficient_set = ctx.set;
    report.theoretical_min = 2 * (ctx.params.q() - 1) * ctx.params.pow(ctx.params.n() - 2);
    report.observed_min = observed_min;
    report.enumerated_count = ctx.total - 1;  // the all-zero vector is skipped
    for (const std::vector<int>& rep : representatives) {
        Achiever achiever;
        achiever.coeffs = rep;
        achiever.support = observed_min;
        report.achievers.push_back(std::move(achiever));
    }
    report.eigencheck_samples = options.eigencheck_samples;
    report.eigencheck_passed = run_sampled_eigenchecks(ctx.params, ctx.set, options);
    report.classified = false;
    report.verdict =
        report.observed_min == report.theoretical_min && report.eigencheck_passed;
    report.note = kGridScopeNote;
    return report;
}

}  // namespace

SearchReport grid_min_support(const GraphParams& params,
                              const std::vector<int>& coefficient_set,
                              const OracleOptions& options) {
    const GridContext ctx = make_context(params, coefficient_set, options);
    const std::int64_t vertex_count = params.vertex_count();
    const int table_size = params.n() * params.q();

    std::atomic<std::int64_t> best{vertex_count + 1};
    std::atomic<bool> degenerate{false};

    // Pass 1: the minimum. Pruning reads the best-so-far once per combination;
    // a stale value only weakens the short-circuit, never the count.
#ifdef _OPENMP
#pragma omp parallel if (options.parallel)
#endif
    {
        std::vector<int> coeffs(static_cast<std::size_t>(ctx.dims));
        std::vector<long> u(static_cast<std::size_t>(table_size));
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4096)
#endif
        for (std::int64_t combo = 0; combo < ctx.total; ++combo) {
            ctx.decode(combo, coeffs);
            if (std::all_of(coeffs.begin(), coeffs.end(),
                            [](int v) { return v == 0; })) {
                continue;
            }
            ctx.build_tables(coeffs, u);
            const std::int64_t limit = best.load(std::memory_order_relaxed);
            const std::int64_t support = ctx.support_up_to(u, limit);
            if (support == 0) {
                degenerate.store(true, std::memory_order_relaxed);
            }
            std::int64_t current = best.load(std::memory_order_relaxed);
            while (support < current &&
                   !best.compare_exchange_weak(current, support,
                                               std::memory_order_relaxed)) {
            }
        }
    }
    if (degenerate.load()) {
        throw std::logic_error(
            "a nonzero coefficient vector produced the zero function; the "
            "eigenbasis is not independent");
    }
    const std::int64_t observed_min = best.load();

    // Pass 2: every achiever of the final minimum, deduplicated up to positive
    // scaling via the primitive representative (entries divided by their gcd).
    std::set<std::vector<int>> representatives;
#ifdef _OPENMP
#pragma omp parallel if (options.parallel)
#endif
    {
        std::vector<int> coeffs(static_cast<std::size_t>(ctx.dims));
        std::vector<long> u(static_cast<std::size_t>(table_size));
        std::vector<std::vector<int>> found;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4096) nowait
#endif
        for (std::int64_t combo = 0; combo < ctx.total; ++combo) {
            ctx.decode(combo, coeffs);
            if (std::all_of(coeffs.begin(), coeffs.end(),
                            [](int v) { return v == 0; })) {
                continue;
            }
            ctx.build_tables(coeffs, u);
            if (ctx.support_up_to(u, observed_min) == observed_min) {
                found.push_back(primitive_representative(coeffs));
            }
        }
#ifdef _OPENMP
#pragma omp critical(hameig_oracle_merge)
#endif
        representatives.insert(found.begin(), found.end());
    }

    return finish_report(ctx, options, observed_min, representatives);
}

SearchReport grid_min_support_reference(const GraphParams& params,
                                        const std::vector<int>& coefficient_set,
                                        const OracleOptions& options) {
    const GridContext ctx = make_context(params, coefficient_set, options);
    const std::int64_t no_limit = params.vertex_count();  // count is never cut off

    // One serial pass, no pruning: track the running minimum and restart the
    // achiever list whenever it improves.
    std::int64_t observed_min = params.vertex_count() + 1;
    std::vector<std::vector<int>> achiever_coeffs;
    std::vector<int> coeffs(static_cast<std::size_t>(ctx.dims));
    std::vector<long> u(static_cast<std::size_t>(params.n() * params.q()));
    for (std::int64_t combo = 0; combo < ctx.total; ++combo) {
        ctx.decode(combo, coeffs);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](int v) { return v == 0; })) {
            continue;
        }
        ctx.build_tables(coeffs, u);
        const std::int64_t support = ctx.support_up_to(u, no_limit);
        if (support == 0) {
            throw std::logic_error(
                "a nonzero coefficient vector produced the zero function; the "
                "eigenbasis is not independent");
        }
        if (support < observed_min) {
            observed_min = support;
            achiever_coeffs.clear();
        }
        if (support == observed_min) {
            achiever_coeffs.push_back(coeffs);
        }
    }

    std::set<std::vector<int>> representatives;
    for (const std::vector<int>& found : achiever_coeffs) {
        representatives.insert(primitive_representative(found));
    }
    return finish_report(ctx, options, observed_min, representatives);
}

SearchReport verify_main_theorem(const GraphParams& params,
                                 const std::vector<int>& coefficient_set,
                                 const OracleOptions& options) {
    SearchReport report = grid_min_support(params, coefficient_set, options);
    const std::int64_t lambda1 = eigenvalue(1, params);

    bool all_dual = !report.achievers.empty();
    std::vector<std::string> problems;
    for (Achiever& achiever : report.achievers) {
        const VertexFunction f = lambda1_combination(params, achiever.coeffs);
        achiever.eigen_ok = is_eigenfunction(f, lambda1);
        achiever.additive_ok = is_additive(f);
        std::string problem;
        if (achiever.additive_ok) {
            try {
                achiever.form = classify_additive(f);
            } catch (const TrichotomyViolation& violation) {
                problem = violation.what();
            }
        } else {
            problem = "achiever is not additive";
        }
        if (!achiever.eigen_ok) {
            problem = problem.empty() ? "achiever failed the eigencheck"
                                      : problem + "; achiever failed the eigencheck";
        }
        const bool dual = achiever.form.has_value() &&
                          achiever.form->tag == CanonicalForm::Tag::DualLayer;
        if (!dual || !problem.empty()) {
            all_dual = false;
            std::ostringstream diag;
            diag << "coeffs (";
            for (std::size_t t = 0; t < achiever.coeffs.size(); ++t) {
                diag << (t ? "," : "") << achiever.coeffs[t];
            }
            diag << "): "
                 << (problem.empty() ? "classified as " + to_string(achiever.form->tag)
                                     : problem);
            problems.push_back(diag.str());
        }
    }

    report.classified = true;
    report.verdict = report.observed_min == report.theoretical_min && all_dual &&
                     report.eigencheck_passed;
    for (const std::string& problem : problems) {
        report.note += "; ";
        report.note += problem;
    }
    return report;
}

Lemma3Report exhaustive_lemma3_check(int q, const std::vector<int>& coefficient_set,
                                     std::int64_t enumeration_cap) {
    if (q <= 2) {
        throw std::invalid_argument("the trichotomy needs q > 2");
    }
    if (coefficient_set.empty()) {
        throw std::invalid_argument("coefficient set must not be empty");
    }
    std::vector<int> set = coefficient_set;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());

    const GraphParams params(2, q);
    const int dims = 1 + 2 * q;  // base plus two full part tables
    const std::int64_t total =
        combination_count(static_cast<std::int64_t>(set.size()), dims, enumeration_cap);
    if (total > enumeration_cap) {
        std::ostringstream msg;
        msg << "lemma-3 enumeration needs " << set.size() << "^" << dims
            << " combinations, which exceeds the cap " << enumeration_cap;
        throw std::invalid_argument(msg.str());
    }

    Lemma3Report report;
    report.q = q;
    report.coefficient_set = set;
    report.enumerated = total;

    const std::int64_t support_bound = 2 * (q - 1);  // 2(q-1)q^(n-2) at n = 2
    const auto set_size = static_cast<std::int64_t>(set.size());
    std::vector<int> digitsv(static_cast<std::size_t>(dims));
    std::vector<Rational> values(static_cast<std::size_t>(params.vertex_count()));
    constexpr std::size_t kMaxDiagnostics = 20;

    for (std::int64_t combo = 0; combo < total; ++combo) {
        std::int64_t rest = combo;
        for (int t = 0; t < dims; ++t) {
            digitsv[static_cast<std::size_t>(t)] =
                set[static_cast<std::size_t>(rest % set_size)];
            rest /= set_size;
        }
        const int base = digitsv[0];
        const int* part1 = digitsv.data() + 1;      // q entries, indexed by x_1
        const int* part2 = digitsv.data() + 1 + q;  // q entries, indexed by x_2

        std::int64_t support = 0;
        for (int x2 = 0; x2 < q && support <= support_bound; ++x2) {
            for (int x1 = 0; x1 < q; ++x1) {
                if (base + part1[x1] + part2[x2] != 0) {
                    ++support;
                }
            }
        }
        if (support > support_bound) {
            continue;
        }
        ++report.qualifying;

        for (int x2 = 0; x2 < q; ++x2) {
            for (int x1 = 0; x1 < q; ++x1) {
                values[static_cast<std::size_t>(x2 * q + x1)] =
                    base + part1[x1] + part2[x2];
            }
        }
        try {
            switch (classify_additive(VertexFunction(params, values)).tag) {
                case CanonicalForm::Tag::Zero:
                    ++report.zero_count;
                    break;
                case CanonicalForm::Tag::SingleLayer:
                    ++report.single_count;
                    break;
                case CanonicalForm::Tag::DualLayer:
                    ++report.dual_count;
                    break;
            }
        } catch (const TrichotomyViolation& violation) {
            ++report.failures;
            if (report.diagnostics.size() < kMaxDiagnostics) {
                std::ostringstream diag;
                diag << "base " << base << ", parts (";
                for (int v = 0; v < q; ++v) {
                    diag << (v ? "," : "") << part1[v];
                }
                diag << ") / (";
                for (int v = 0; v < q; ++v) {
                    diag << (v ? "," : "") << part2[v];
                }
                diag << "): " << violation.what();
                report.diagnostics.push_back(diag.str());
            }
        }
    }
    return report;
}

}  // namespace hameig
