#include "cagen/tuplegen.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cagen {

namespace {

// C(k, t) with overflow detection.
std::uint64_t binomial(int k, int t) {
  std::uint64_t result = 1;
  for (int i = 1; i <= t; ++i) {
    if (__builtin_mul_overflow(result,
                               static_cast<std::uint64_t>(k - t + i),
                               &result)) {
      throw std::overflow_error("mask count overflows 64 bits");
    }
    result /= static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace

std::vector<std::uint64_t> enumerate_masks(int k, int t) {
  if (k < 1 || k > 63) {
    throw std::invalid_argument("parameter count must be in [1, 63]");
  }
  if (t < 1 || t > k) {
    throw std::invalid_argument("strength " + std::to_string(t) +
                                " outside [1, " + std::to_string(k) + "]");
  }
  const std::uint64_t count = binomial(k, t);
  if (count > (std::uint64_t{1} << 30)) {
    throw std::overflow_error("mask count " + std::to_string(count) +
                              " is too large to materialize");
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  // Gosper's hack walks the popcount-t masks in ascending order.
  std::uint64_t v = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    masks.push_back(v);
    const std::uint64_t filled = v | (v - 1);
    v = (filled + 1) |
        (((~filled & (filled + 1)) - 1) >>
         (static_cast<unsigned>(std::countr_zero(v)) + 1));
  }
  return masks;
}

TupleStore build_store(const CAConfig& cfg) {
  const int k = cfg.parameter_count();
  const auto masks = enumerate_masks(k, cfg.strength);

  std::vector<TupleStore::Bucket> buckets;
  buckets.reserve(masks.size());
  std::uint64_t remaining = 0;

  for (const std::uint64_t mask : masks) {
    TupleStore::Bucket b;
    b.mask = mask;
    std::uint64_t domain = 1;
    for (int i = 0; i < k; ++i) {
      if (!((mask >> i) & 1u)) continue;
      b.params.push_back(i);
      b.strides.push_back(domain);
      if (__builtin_mul_overflow(
              domain, static_cast<std::uint64_t>(cfg.cardinalities[i]),
              &domain)) {
        throw std::overflow_error("tuple count overflows 64 bits");
      }
    }
    b.domain = domain;
    b.live = domain;
    b.words.assign((domain + 63) / 64, ~std::uint64_t{0});
    if (domain & 63) {
      // Clear the bits past the last valid code.
      b.words.back() = (std::uint64_t{1} << (domain & 63)) - 1;
    }
    if (__builtin_add_overflow(remaining, domain, &remaining)) {
      throw std::overflow_error("tuple count overflows 64 bits");
    }
    buckets.push_back(std::move(b));
  }

  return TupleStore(cfg, std::move(buckets), remaining);
}

}  // namespace cagen
