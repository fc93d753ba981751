#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boson {

/// Base class of every error raised by the engine.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial was evaluated without a value for one of its symbols.
class MissingBinding : public error {
 public:
  explicit MissingBinding(std::string symbol)
      : error("missing binding for symbol '" + symbol + "'"),
        symbol_(std::move(symbol)) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class OrderMismatch : public error {
 public:
  OrderMismatch(unsigned lhs, unsigned rhs)
      : error("truncation orders differ: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class NonzeroConstantTerm : public error {
 public:
  NonzeroConstantTerm()
      : error("series exponential requires a zero constant term") {}
};

/// Ordering parameter outside [-1, 1] or two operands tagged differently.
class InvalidOrdering : public error {
 public:
  using error::error;
};

/// The rewriting oracle refuses words longer than its cap.
class LengthCap : public error {
 public:
  LengthCap(std::size_t length, std::size_t cap)
      : error("word length " + std::to_string(length) + " exceeds cap " +
              std::to_string(cap)) {}
};

/// Contraction enumeration or lowering would exceed its configured size.
class SizeCap : public error {
 public:
  SizeCap(const std::string& what, std::size_t size, std::size_t cap)
      : error(what + " " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)) {}
};

class UnsupportedOrdering : public error {
 public:
  using error::error;
};

class ConstantTermObstruction : public error {
 public:
  ConstantTermObstruction()
      : error("constant term prevents cancelling the formal inverse of a^dag a") {}
};

class UnboundSymbol : public error {
 public:
  explicit UnboundSymbol(const std::string& symbol)
      : error("cannot realize numerically: unbound symbol '" + symbol + "'") {}
};

class DegreeTooLarge : public error {
 public:
  DegreeTooLarge(std::size_t degree, std::size_t dim)
      : error("operator degree " + std::to_string(degree) +
              " needs a Fock dimension of at least " +
              std::to_string(degree + 1) + ", got " + std::to_string(dim)) {}
};

class NestingUnsupported : public error {
 public:
  NestingUnsupported() : error("ordered blocks cannot be nested") {}
};

/// Parse failure at a byte offset, with the set of tokens that would have
/// been accepted there.
class SyntaxError : public error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& detail = {})
      : error(make_message(offset, expected, detail)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string make_message(std::size_t offset,
                                  const std::vector<std::string>& expected,
                                  const std::string& detail) {
    std::string msg = "syntax error at byte " + std::to_string(offset);
    if (!detail.empty()) msg += ": " + detail;
    if (!expected.empty()) {
      msg += "; expected one of:";
      for (const auto& e : expected) msg += " " + e;
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace boson
