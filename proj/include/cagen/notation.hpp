#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cagen/model.hpp"

namespace cagen {

// Parse failure carrying the offending character offset.
class NotationError : public std::runtime_error {
 public:
  NotationError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses covering-array notation: "CA(2,3^13)", "MCA(2,5^1 3^8 2^2)",
// "CA(3,4^6)". An optional "N;" after the opening parenthesis is accepted,
// whitespace is insignificant, and exponents expand left to right.
CAConfig parse_ca_notation(const std::string& text);

// Inverse pretty-printer: groups consecutive equal cardinalities; uses the
// CA form when all cardinalities agree and MCA otherwise.
std::string render_ca_notation(const CAConfig& cfg);

// Suite CSV: header "p0,p1,...,p{k-1}", then one 0-based row per line.
void write_suite_csv(std::ostream& out, const TestSuite& suite);

// Reads rows of integers; a leading "p0,..." header is skipped. Ragged rows
// are returned as-is (the verifier reports them as structural errors).
std::vector<TestCase> read_suite_csv(std::istream& in);

}  // namespace cagen
