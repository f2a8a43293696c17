#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cagen/model.hpp"

namespace cagen {

// The set of still-uncovered interaction tuples, bucketed by the
// parameter-combination mask. Within a bucket every tuple is identified by
// the mixed-radix code of its masked values, and the bucket keeps one bit
// per code, so membership tests and deletions are O(1) and the whole store
// occupies one bit per tuple.
class TupleStore {
 public:
  struct Bucket {
    std::uint64_t mask = 0;
    std::vector<int> params;             // ascending parameter indices
    std::vector<std::uint64_t> strides;  // mixed-radix stride per params[j]
    std::uint64_t domain = 0;            // product of masked cardinalities
    std::uint64_t live = 0;              // uncovered tuples in this bucket
    std::vector<std::uint64_t> words;    // bit c set <=> code c uncovered
  };

  TupleStore(CAConfig cfg, std::vector<Bucket> buckets,
             std::uint64_t remaining);

  const CAConfig& config() const { return cfg_; }
  std::uint64_t remaining() const { return remaining_; }
  std::size_t bucket_count() const { return buckets_.size(); }

  // How many uncovered tuples tc covers. Store unchanged.
  int fitness(const TestCase& tc) const;

  // Deletes every uncovered tuple tc covers; returns the count deleted.
  int remove_covered(const TestCase& tc);

  std::uint64_t bucket_size(std::uint64_t mask) const;
  std::vector<InteractionTuple> uncovered_in_bucket(std::uint64_t mask) const;

  // Some uncovered tuple, deterministic for a given store state; nullopt
  // once everything is covered.
  std::optional<InteractionTuple> any_uncovered() const;

 private:
  std::uint64_t code_of(const Bucket& b, const TestCase& tc) const;
  InteractionTuple decode(const Bucket& b, std::uint64_t code) const;

  CAConfig cfg_;
  std::vector<Bucket> buckets_;
  std::uint64_t remaining_ = 0;
};

}  // namespace cagen
