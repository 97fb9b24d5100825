#pragma once

#include <utility>
#include <vector>

namespace ksgen::proof {

/// One line of the extended-DRAT trace. Standard additions/deletions carry
/// only literals; t-events add a permutation witness (image of 1..k) and
/// o-events a vertex-pair list whose first pair names the violating pair
/// and whose remaining pairs are the dependency edges.
struct ProofEvent {
    enum class Kind { Add, Delete, TAdd, OAdd };

    Kind kind = Kind::Add;
    std::vector<int> lits;
    std::vector<int> t_witness;
    std::vector<std::pair<int, int>> o_witness;
};

class ProofSink {
public:
    virtual ~ProofSink() = default;
    virtual void emit(const ProofEvent& event) = 0;
};

} // namespace ksgen::proof
