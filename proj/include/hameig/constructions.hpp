#pragma once

#include <stdexcept>
#include <string>

#include "hameig/rational.hpp"
#include "hameig/vertex_function.hpp"

namespace hameig {

/// Outcome of the trichotomy for additive functions with support at most
/// 2(q-1)q^(n-2): identically zero, a single layer, or a dual layer.
///
/// DualLayer(i,k,j,m,c) and DualLayer(j,m,i,k,-c) are the same function; the
/// stored representative always has i < j.
struct CanonicalForm {
    enum class Tag { Zero, SingleLayer, DualLayer };

    Tag tag = Tag::Zero;
    int i = 0;
    int k = 0;
    int j = 0;  // DualLayer only
    int m = 0;  // DualLayer only
    Rational c; // nonzero for the layer forms

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

std::string to_string(CanonicalForm::Tag tag);

/// f = c on T_k(i,n) minus T_m(j,n), -c on T_m(j,n) minus T_k(i,n), 0
/// elsewhere. Support is exactly 2(q-1)q^(n-2) and Af = lambda_1 f for every
/// q >= 2. Requires n >= 2, i != j, c != 0.
VertexFunction construct_dual_layer(const GraphParams& params, int i, int k,
                                    int j, int m, const Rational& c);

/// f = c on the layer T_k(i,n), 0 elsewhere. Additive with support q^(n-1),
/// but never a lambda_1 eigenfunction. Requires c != 0.
VertexFunction construct_single_layer(const GraphParams& params, int i, int k,
                                      const Rational& c);

/// An additive function within the trichotomy's support bound matched none of
/// the three forms. This cannot happen if the trichotomy holds; a throw is a
/// certification failure, not a user error.
class TrichotomyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decides which of the three forms an additive function is, by reading
/// candidate parameters off its additive decomposition and verifying the
/// reconstruction against the constructed candidate with exact equality.
/// Requires n >= 2, q > 2, f additive, support(f) <= 2(q-1)q^(n-2).
CanonicalForm classify_additive(const VertexFunction& f);

}  // namespace hameig
