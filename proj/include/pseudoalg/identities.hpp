#pragma once

#include "pseudoalg/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace pseudoalg {

/// One term of a structure-constant identity, normalized to the form
///   coeff * [swap_after] OP(first, [swap_second] second)
/// where OP is either (X Delta (x) 1) Y  or  (1 (x) X Delta) Y.
/// Identities are sums of such terms equated to zero.
struct IdentityTerm {
    enum class Op { CompLeft, CompRight };

    Rat coeff;
    Op op;
    std::string first;
    std::string second;
    bool swap_second = false; // apply (12) to the second argument first
    bool swap_after = false;  // apply (12) to the whole result
};

struct IdentityTemplate {
    std::string id;
    std::vector<IdentityTerm> terms;

    /// Names of all structure constants the identity mentions.
    std::vector<std::string> slots() const;

    /// Evaluates the residual with every slot bound.
    Tensor3 evaluate(const std::map<std::string, Tensor2>& bind) const;
};

/// The identity catalog, keyed by id ("aa1".."aa4", "L8", "L15",
/// "eq25a", "eq25b", "eq26".."eq220").
const std::vector<IdentityTemplate>& identity_templates();
const IdentityTemplate& identity(const std::string& id);

} // namespace pseudoalg
