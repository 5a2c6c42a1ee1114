#pragma once

#include <cstdint>
#include <vector>

#include "cranq/common.hpp"

namespace cranq {

struct FermionFactor {
    std::uint16_t index;
    bool creation;
};

/// One product term c * op_0 op_1 ... (operators applied right to left).
struct FermionTerm {
    cxd coeff;
    std::vector<FermionFactor> factors;
};

struct FermionOperator {
    int n_modes = 0;
    std::vector<FermionTerm> terms;

    FermionOperator() = default;
    explicit FermionOperator(int modes) : n_modes(modes) {}

    void add(cxd c, std::initializer_list<FermionFactor> factors) {
        terms.push_back({c, std::vector<FermionFactor>(factors)});
    }

    /// c * a_p† a_q
    void add_hop(int p, int q, cxd c) {
        add(c, {{static_cast<std::uint16_t>(p), true}, {static_cast<std::uint16_t>(q), false}});
    }

    /// c * n_p
    void add_number(int p, cxd c) { add_hop(p, p, c); }

    /// constant * identity
    void add_constant(cxd c) { terms.push_back({c, {}}); }
};

}  // namespace cranq
