#pragma once

#include <cstdint>
#include <vector>

#include "cagen/model.hpp"
#include "cagen/tuple_store.hpp"

namespace cagen {

// All k-bit masks with exactly t bits set, in ascending integer order.
// Bit i corresponds to parameter i. Exactly C(k, t) masks come back.
std::vector<std::uint64_t> enumerate_masks(int k, int t);

// Builds the full t-way tuple set for cfg: for every mask, the Cartesian
// product of the participating parameters' values. Throws
// std::overflow_error if the tuple count does not fit 64 bits.
TupleStore build_store(const CAConfig& cfg);

}  // namespace cagen
