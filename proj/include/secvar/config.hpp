#pragma once

#include "secvar/common.hpp"
#include "secvar/field.hpp"

namespace secvar {

// Shared knobs for every randomized computation. Two runs with equal
// configuration and equal inputs produce identical results byte for byte.
struct ComputeCfg {
    u64 prime = kDefaultPrime;
    u64 seed = 0;
    unsigned trials = 3;
    unsigned retry_cap = 8;
    bool cross_check = false;
    std::size_t direction_limit = 64;
};

} // namespace secvar
