#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qg {

// Base for all domain errors. `name()` is the stable machine-readable
// identifier the CLI prints on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct RowViolation : Error {
  explicit RowViolation(int row_index)
      : Error("RowViolation",
              "row " + std::to_string(row_index) + " is not a permutation"),
        row(row_index) {}
  int row;
};

struct ColumnViolation : Error {
  explicit ColumnViolation(int column_index)
      : Error("ColumnViolation",
              "column " + std::to_string(column_index) + " is not a permutation"),
        column(column_index) {}
  int column;
};

struct OrderMismatch : Error {
  OrderMismatch(int left, int right)
      : Error("OrderMismatch", "orders differ: " + std::to_string(left) +
                                   " vs " + std::to_string(right)) {}
};

struct OrderLimitExceeded : Error {
  OrderLimitExceeded(long long order, long long limit)
      : Error("OrderLimitExceeded",
              "order " + std::to_string(order) + " exceeds the configured maximum " +
                  std::to_string(limit)) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& message) : Error("FormatError", message) {}
};

struct SyntaxError : Error {
  SyntaxError(std::size_t byte_offset, const std::string& message)
      : Error("SyntaxError", message + " at offset " + std::to_string(byte_offset)),
        offset(byte_offset) {}
  std::size_t offset;
};

struct UnknownVariable : Error {
  UnknownVariable(std::size_t byte_offset, char seen)
      : Error("UnknownVariable", std::string("unknown variable '") + seen +
                                     "' at offset " + std::to_string(byte_offset)),
        offset(byte_offset),
        variable(seen) {}
  std::size_t offset;
  char variable;
};

struct Overflow : Error {
  explicit Overflow(const std::string& message) : Error("Overflow", message) {}
};

struct NotARoot : Error {
  NotARoot(long long k, long long r)
      : Error("NotARoot", "k = " + std::to_string(k) +
                              " does not solve k^5 + k^4 + 1 = 0 (mod " +
                              std::to_string(r) + ")") {}
};

struct NotInvertible : Error {
  NotInvertible(long long value, long long modulus)
      : Error("NotInvertible", std::to_string(value) + " is not invertible mod " +
                                   std::to_string(modulus)) {}
};

struct BadConstant : Error {
  BadConstant(long long b, long long r)
      : Error("BadConstant", "b = " + std::to_string(b) +
                                 " fails (k^2 + k + 1) b = 0 (mod " +
                                 std::to_string(r) + ")") {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& message) : Error("InvalidSpec", message) {}
};

struct DesignViolation : Error {
  explicit DesignViolation(const std::string& message)
      : Error("DesignViolation", message) {}
};

struct MissingBlockModel : Error {
  explicit MissingBlockModel(int block_size)
      : Error("MissingBlockModel",
              "no block model of order " + std::to_string(block_size)),
        size(block_size) {}
  int size;
};

struct NotIdempotent : Error {
  explicit NotIdempotent(int block_size)
      : Error("NotIdempotent", "block model of order " + std::to_string(block_size) +
                                   " is not idempotent") {}
};

struct LambdaUnsupported : Error {
  explicit LambdaUnsupported(int lambda)
      : Error("LambdaUnsupported",
              "composition requires lambda = 1, got " + std::to_string(lambda)) {}
};

struct Unrepresentable : Error {
  explicit Unrepresentable(const std::string& message)
      : Error("Unrepresentable", message) {}
};

struct UnknownFixture : Error {
  explicit UnknownFixture(const std::string& name)
      : Error("UnknownFixture", "no fixture named '" + name + "'") {}
};

}  // namespace qg
