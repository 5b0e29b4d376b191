#pragma once

#include <string>
#include <vector>

#include "homog/structure.hpp"

namespace homog {

struct Partition {
    std::vector<int> class_of;             // vertex -> class index
    std::vector<std::vector<int>> classes; // deterministic order, members ascending
};

// Coarsest partition stable under iterated refinement by the multiset of
// relation patterns through each vertex (a quantifier-free surrogate for
// 0-definable vertex invariants).  Class order is deterministic.
Partition refine_partition(const FinStructure& s);

// One refinement pass machinery shared with canonical labeling: refines the
// given ordered cells until stable.  Cells must partition 0..n-1.
std::vector<std::vector<int>> refine_ordered(const FinStructure& s,
                                             std::vector<std::vector<int>> cells);

}  // namespace homog
