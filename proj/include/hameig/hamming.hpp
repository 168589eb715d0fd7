#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hameig {

/// Parameters of the Hamming graph H(n,q): vertices are the words of length
/// n over {0,...,q-1}, edges join words at Hamming distance 1.
///
/// Vertices are addressed by their little-endian radix-q index
///   index(w) = sum_t w[t] * q^(t-1),   t = 1..n (1-based coordinates),
/// so coordinate t has index stride q^(t-1).
class GraphParams {
public:
    static constexpr std::int64_t kDefaultVertexCap = 100'000'000;

    /// Requires n >= 1, q >= 2 and q^n <= vertex_cap.
    GraphParams(int n, int q, std::int64_t vertex_cap = kDefaultVertexCap);

    int n() const { return n_; }
    int q() const { return q_; }
    std::int64_t vertex_count() const { return pow_[static_cast<std::size_t>(n_)]; }
    /// Vertex degree n(q-1).
    int degree() const { return n_ * (q_ - 1); }

    /// q^e for 0 <= e <= n.
    std::int64_t pow(int e) const { return pow_[static_cast<std::size_t>(e)]; }
    /// Index stride of 1-based coordinate i: q^(i-1).
    std::int64_t stride(int i) const { return pow_[static_cast<std::size_t>(i - 1)]; }
    /// Digit at 1-based coordinate i of the vertex with the given index.
    int digit(std::int64_t index, int i) const {
        return static_cast<int>(index / stride(i) % q_);
    }

    friend bool operator==(const GraphParams&, const GraphParams&) = default;

private:
    int n_;
    int q_;
    std::vector<std::int64_t> pow_;  // q^0 .. q^n
};

/// A vertex as its digit word; word[t-1] is coordinate t.
using Word = std::vector<int>;

/// Little-endian radix-q index of a word. Rejects wrong length and digits
/// outside {0,...,q-1}.
std::int64_t encode_vertex(const Word& word, const GraphParams& params);

/// Inverse of encode_vertex. Rejects indices outside [0, q^n).
Word decode_vertex(std::int64_t index, const GraphParams& params);

/// The n(q-1) words at Hamming distance 1 from x, ordered coordinate-major
/// with digits ascending.
std::vector<Word> neighbors(const Word& x, const GraphParams& params);

/// Number of coordinates in which x and y differ. Rejects length mismatch.
int hamming_distance(const Word& x, const Word& y);

/// True iff the i-th coordinate (1-based) of x equals k, i.e. x lies in the
/// layer T_k(i,n).
bool in_layer(const Word& x, int i, int k, const GraphParams& params);

/// Comma-separated digits in word order, e.g. (1,2) -> "1,2". The last
/// printed coordinate is the most significant one of the index formula.
std::string format_word(const Word& x);

}  // namespace hameig
