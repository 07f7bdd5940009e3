#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace papm {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- expression layer ----

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
public:
  SyntaxError(std::size_t position, const std::string& expected)
      : ParseError("syntax error, expected " + expected, position),
        expected_(expected) {}
  const std::string& expected() const { return expected_; }

private:
  std::string expected_;
};

class UnknownIdentifier : public ParseError {
public:
  UnknownIdentifier(const std::string& name, std::size_t position)
      : ParseError("unknown identifier '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class NonLiteralExponent : public ParseError {
public:
  explicit NonLiteralExponent(std::size_t position)
      : ParseError("exponent must be a numeric literal", position) {}
};

class DomainError : public Error {
public:
  DomainError(const std::string& function, double value)
      : Error("domain error in '" + function + "' at value " + std::to_string(value)),
        function_(function), value_(value) {}
  const std::string& function() const { return function_; }
  double value() const { return value_; }

private:
  std::string function_;
  double value_;
};

class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& where)
      : Error("non-finite value produced in " + where) {}
};

// ---- tensor layer ----

class NotPositiveDefinite : public Error {
public:
  explicit NotPositiveDefinite(double min_eigenvalue)
      : Error("matrix is not positive definite (smallest eigenvalue " +
              std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

private:
  double min_eigenvalue_;
};

class AsymmetricMatrix : public Error {
public:
  explicit AsymmetricMatrix(double max_deviation)
      : Error("matrix is not symmetric (max deviation " +
              std::to_string(max_deviation) + ")") {}
};

class SlotOutOfRange : public Error {
public:
  SlotOutOfRange(int slot, int rank)
      : Error("slot " + std::to_string(slot) + " out of range for rank " +
              std::to_string(rank)) {}
};

class VarianceMismatch : public Error {
public:
  explicit VarianceMismatch(const std::string& msg) : Error(msg) {}
};

// ---- manifold layer ----

class FormatError : public Error {
public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

class OddDimensionError : public FormatError {
public:
  explicit OddDimensionError(int n)
      : FormatError("dimension " + std::to_string(n) +
                    " is odd; an almost product structure with zero trace "
                    "requires an even-dimensional manifold") {}
};

class DimensionNot4 : public Error {
public:
  explicit DimensionNot4(int n)
      : Error("operation requires dimension 4, got " + std::to_string(n)) {}
};

} // namespace papm
