#include "cagen/notation.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace cagen {

NotationError::NotationError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " +
                         std::to_string(position) + ")"),
      position_(position) {}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_int(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw NotationError("number too large", start);
      ++pos;
    }
    if (pos == start) {
      throw NotationError(std::string("expected ") + what, start);
    }
    return value;
  }
};

}  // namespace

CAConfig parse_ca_notation(const std::string& text) {
  Cursor c{text};

  c.skip_ws();
  std::size_t word_start = c.pos;
  std::string word;
  while (c.pos < text.size() &&
         std::isalpha(static_cast<unsigned char>(text[c.pos]))) {
    word.push_back(static_cast<char>(
        std::toupper(static_cast<unsigned char>(text[c.pos]))));
    ++c.pos;
  }
  if (word != "CA" && word != "MCA") {
    throw NotationError("expected CA or MCA", word_start);
  }
  if (!c.consume('(')) throw NotationError("expected '('", c.pos);

  // Optional "N;" placeholder for the (unknown) array size.
  c.skip_ws();
  if (c.peek() == 'N' || c.peek() == 'n') {
    ++c.pos;
    if (!c.consume(';') && !c.consume(',')) {
      throw NotationError("expected ';' after N", c.pos);
    }
  }

  const std::size_t strength_pos = c.pos;
  const long strength = c.parse_int("interaction strength");
  if (strength < 2) {
    throw NotationError("interaction strength must be >= 2", strength_pos);
  }
  if (!c.consume(',') && !c.consume(';')) {
    throw NotationError("expected ',' after the strength", c.pos);
  }

  std::vector<int> cardinalities;
  while (true) {
    c.skip_ws();
    if (c.peek() == ')') break;
    const std::size_t factor_pos = c.pos;
    const long v = c.parse_int("cardinality");
    if (v < 2) {
      throw NotationError("cardinality must be >= 2", factor_pos);
    }
    long exponent = 1;
    if (c.consume('^')) {
      const std::size_t exp_pos = c.pos;
      exponent = c.parse_int("exponent");
      if (exponent < 1) throw NotationError("exponent must be >= 1", exp_pos);
    }
    if (static_cast<long>(cardinalities.size()) + exponent > 63) {
      throw NotationError("more than 63 parameters", factor_pos);
    }
    cardinalities.insert(cardinalities.end(), exponent, static_cast<int>(v));
  }
  if (!c.consume(')')) throw NotationError("expected ')'", c.pos);
  if (!c.eof()) throw NotationError("trailing characters", c.pos);

  if (cardinalities.empty()) {
    throw NotationError("no parameters given", c.pos);
  }
  if (strength > static_cast<long>(cardinalities.size())) {
    throw NotationError("strength exceeds the parameter count", strength_pos);
  }
  return CAConfig(static_cast<int>(strength), std::move(cardinalities));
}

std::string render_ca_notation(const CAConfig& cfg) {
  std::ostringstream out;
  std::vector<std::pair<int, int>> groups;  // cardinality, run length
  for (const int v : cfg.cardinalities) {
    if (!groups.empty() && groups.back().first == v) {
      ++groups.back().second;
    } else {
      groups.emplace_back(v, 1);
    }
  }
  out << (groups.size() == 1 ? "CA(" : "MCA(") << cfg.strength << ',';
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i > 0) out << ' ';
    out << groups[i].first << '^' << groups[i].second;
  }
  out << ')';
  return out.str();
}

void write_suite_csv(std::ostream& out, const TestSuite& suite) {
  const int k = suite.config.parameter_count();
  for (int i = 0; i < k; ++i) out << (i > 0 ? "," : "") << 'p' << i;
  out << '\n';
  for (const TestCase& row : suite.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i > 0 ? "," : "") << row[i];
    }
    out << '\n';
  }
}

std::vector<TestCase> read_suite_csv(std::istream& in) {
  std::vector<TestCase> rows;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty()) continue;
    if (first && (trimmed[0] == 'p' || trimmed[0] == 'P')) {
      first = false;
      continue;
    }
    first = false;
    TestCase row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(cell, &used);
        while (used < cell.size() &&
               std::isspace(static_cast<unsigned char>(cell[used]))) {
          ++used;
        }
        if (used != cell.size()) throw std::invalid_argument(cell);
        row.push_back(value);
      } catch (const std::exception&) {
        throw NotationError("line " + std::to_string(line_no) +
                                ": cell '" + cell + "' is not an integer",
                            0);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cagen
