#include "hameig/hamming.hpp"

#include <sstream>
#include <stdexcept>

namespace hameig {

GraphParams::GraphParams(int n, int q, std::int64_t vertex_cap) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("GraphParams: n must be >= 1");
    if (q < 2) throw std::invalid_argument("GraphParams: q must be >= 2");
    if (vertex_cap < 1) throw std::invalid_argument("GraphParams: vertex cap must be positive");
    pow_.reserve(static_cast<std::size_t>(n) + 1);
    pow_.push_back(1);
    for (int e = 1; e <= n; ++e) {
        std::int64_t prev = pow_.back();
        if (prev > vertex_cap / q) {
            std::ostringstream msg;
            msg << "GraphParams: q^n = " << q << "^" << n
                << " exceeds the vertex cap " << vertex_cap;
            throw std::invalid_argument(msg.str());
        }
        pow_.push_back(prev * q);
    }
    if (pow_.back() > vertex_cap) {
        std::ostringstream msg;
        msg << "GraphParams: q^n = " << pow_.back() << " exceeds the vertex cap " << vertex_cap;
        throw std::invalid_argument(msg.str());
    }
}

std::int64_t encode_vertex(const Word& word, const GraphParams& params) {
    if (static_cast<int>(word.size()) != params.n()) {
        throw std::invalid_argument("encode_vertex: word length does not match n");
    }
    std::int64_t index = 0;
    for (int t = params.n(); t >= 1; --t) {
        int d = word[static_cast<std::size_t>(t - 1)];
        if (d < 0 || d >= params.q()) {
            throw std::invalid_argument("encode_vertex: digit out of range");
        }
        index = index * params.q() + d;
    }
    return index;
}

Word decode_vertex(std::int64_t index, const GraphParams& params) {
    if (index < 0 || index >= params.vertex_count()) {
        throw std::out_of_range("decode_vertex: index out of range");
    }
    Word word(static_cast<std::size_t>(params.n()));
    for (int t = 1; t <= params.n(); ++t) {
        word[static_cast<std::size_t>(t - 1)] = static_cast<int>(index % params.q());
        index /= params.q();
    }
    return word;
}

std::vector<Word> neighbors(const Word& x, const GraphParams& params) {
    encode_vertex(x, params);  // validates
    std::vector<Word> result;
    result.reserve(static_cast<std::size_t>(params.degree()));
    for (int t = 0; t < params.n(); ++t) {
        for (int d = 0; d < params.q(); ++d) {
            if (d == x[static_cast<std::size_t>(t)]) continue;
            Word y = x;
            y[static_cast<std::size_t>(t)] = d;
            result.push_back(std::move(y));
        }
    }
    return result;
}

int hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    int d = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t] != y[t]) ++d;
    }
    return d;
}

bool in_layer(const Word& x, int i, int k, const GraphParams& params) {
    if (i < 1 || i > params.n()) throw std::invalid_argument("in_layer: coordinate out of range");
    if (k < 0 || k >= params.q()) throw std::invalid_argument("in_layer: digit out of range");
    if (static_cast<int>(x.size()) != params.n()) {
        throw std::invalid_argument("in_layer: word length does not match n");
    }
    return x[static_cast<std::size_t>(i - 1)] == k;
}

std::string format_word(const Word& x) {
    std::ostringstream out;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (t > 0) out << ',';
        out << x[t];
    }
    return out.str();
}

}  // namespace hameig
