#pragma once

#include <vector>

#include "homog/qf_type.hpp"
#include "homog/structure.hpp"

namespace homog {

// One derived symbol Q of the expanded vocabulary: it absorbs the parameter
// tuple `param_positions` (indices into the parameter list, repetitions
// allowed) at the permuted argument positions given by `perm`.
struct DerivedSymbolInfo {
    int base_symbol = 0;
    std::vector<int> param_positions;  // length k, values index the parameter list
    std::vector<int> perm;             // permutation of {0..r-1}
};

// Expanded vocabulary over a parameter list: the base symbols plus, for every
// base symbol of arity r > 1, every 0 < k < r, every parameter tuple of
// length k and every permutation of the r argument slots, one derived symbol
// of arity r - k.  Derived symbols of a symmetric base symbol are symmetric.
struct ExpandedSignature {
    Signature signature;      // base symbols first, then derived symbols
    Signature base;
    int base_symbol_count = 0;
    std::vector<DerivedSymbolInfo> derived;  // parallel to the trailing symbols
    std::vector<int> params;                 // parameter vertices of the ambient structure
};

ExpandedSignature expanded_signature(const Signature& base, const std::vector<int>& a_params);

struct MPResult {
    FinStructure structure;     // over info.signature
    ExpandedSignature info;
    std::vector<int> universe;  // ambient labels of the kept elements, ascending
};

// The expansion generated by a set of one-point types over the parameters.
// The universe is every element outside the parameters whose type over them
// (the qf type of (params..., x)) lies in p_types; base symbols restrict, and
// a derived-symbol tuple b holds exactly when the base relation holds of the
// permuted concatenation (b, params').  Every p_type must be realized.
MPResult build_M_P(const FinStructure& m, const std::vector<int>& a_params,
                   const std::vector<QfType>& p_types);

// Reduct dropping the base symbols and keeping the derived ones; binary when
// the base vocabulary is ternary and the parameter list is nonempty.
FinStructure reduct_M_P_minus(const MPResult& mp);

// Convenience: the qf type of x over an ordered parameter tuple.
QfType point_type_over(const FinStructure& m, const std::vector<int>& params, int x);

}  // namespace homog
