#include "cagen/tuple_store.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace cagen {

TupleStore::TupleStore(CAConfig cfg, std::vector<Bucket> buckets,
                       std::uint64_t remaining)
    : cfg_(std::move(cfg)), buckets_(std::move(buckets)),
      remaining_(remaining) {}

std::uint64_t TupleStore::code_of(const Bucket& b, const TestCase& tc) const {
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < b.params.size(); ++j) {
    code += static_cast<std::uint64_t>(tc[b.params[j]]) * b.strides[j];
  }
  return code;
}

InteractionTuple TupleStore::decode(const Bucket& b,
                                    std::uint64_t code) const {
  InteractionTuple tup;
  tup.mask = b.mask;
  tup.assignment.assign(cfg_.cardinalities.size(), kDontCare);
  for (std::size_t j = 0; j < b.params.size(); ++j) {
    const auto v =
        static_cast<std::uint64_t>(cfg_.cardinalities[b.params[j]]);
    tup.assignment[b.params[j]] = static_cast<int>((code / b.strides[j]) % v);
  }
  return tup;
}

int TupleStore::fitness(const TestCase& tc) const {
  if (static_cast<int>(tc.size()) != cfg_.parameter_count()) {
    throw std::invalid_argument("test case length does not match config");
  }
  int covered = 0;
  for (const Bucket& b : buckets_) {
    if (b.live == 0) continue;
    const std::uint64_t code = code_of(b, tc);
    if (b.words[code >> 6] & (std::uint64_t{1} << (code & 63))) ++covered;
  }
  return covered;
}

int TupleStore::remove_covered(const TestCase& tc) {
  if (static_cast<int>(tc.size()) != cfg_.parameter_count()) {
    throw std::invalid_argument("test case length does not match config");
  }
  int removed = 0;
  for (Bucket& b : buckets_) {
    if (b.live == 0) continue;
    const std::uint64_t code = code_of(b, tc);
    std::uint64_t& word = b.words[code >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (code & 63);
    if (word & bit) {
      word &= ~bit;
      --b.live;
      ++removed;
    }
  }
  remaining_ -= static_cast<std::uint64_t>(removed);
  return removed;
}

std::uint64_t TupleStore::bucket_size(std::uint64_t mask) const {
  for (const Bucket& b : buckets_) {
    if (b.mask == mask) return b.live;
  }
  throw std::invalid_argument("no bucket for the given mask");
}

std::vector<InteractionTuple> TupleStore::uncovered_in_bucket(
    std::uint64_t mask) const {
  for (const Bucket& b : buckets_) {
    if (b.mask != mask) continue;
    std::vector<InteractionTuple> out;
    out.reserve(b.live);
    for (std::uint64_t code = 0; code < b.domain; ++code) {
      if (b.words[code >> 6] & (std::uint64_t{1} << (code & 63))) {
        out.push_back(decode(b, code));
      }
    }
    return out;
  }
  throw std::invalid_argument("no bucket for the given mask");
}

std::optional<InteractionTuple> TupleStore::any_uncovered() const {
  for (const Bucket& b : buckets_) {
    if (b.live == 0) continue;
    for (std::size_t w = 0; w < b.words.size(); ++w) {
      if (b.words[w] == 0) continue;
      const auto bit = static_cast<std::uint64_t>(std::countr_zero(b.words[w]));
      return decode(b, (static_cast<std::uint64_t>(w) << 6) | bit);
    }
  }
  return std::nullopt;
}

}  // namespace cagen
