#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace d4v {

// Structural size conflict (operands of a coupling, matrix/vector pairing, ...).
// `where` names the offending node path for tree-shaped inputs, e.g. "co.left".
class DimensionError : public std::runtime_error {
public:
  DimensionError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

// Malformed textual input; `pos` is the byte offset of the first bad character.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

// Request exceeds a documented resource bound (e.g. hierarchy level too deep).
class ResourceBoundError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace d4v
