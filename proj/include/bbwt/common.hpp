#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbwt {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline std::string to_string(std::span<const Byte> b) {
  return std::string(b.begin(), b.end());
}

/// The indexed input string is a nontrivial power w^k, k >= 2.
class NonPrimitiveInput : public std::invalid_argument {
 public:
  explicit NonPrimitiveInput(std::size_t index)
      : std::invalid_argument("input string " + std::to_string(index) +
                              " is not primitive"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class EmptyString : public std::invalid_argument {
 public:
  explicit EmptyString(std::size_t index)
      : std::invalid_argument("input string " + std::to_string(index) +
                              " is empty"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// The reserved sentinel byte 0x00 occurs in the input.
class SentinelPresent : public std::invalid_argument {
 public:
  explicit SentinelPresent(std::size_t position)
      : std::invalid_argument("sentinel byte 0x00 present at position " +
                              std::to_string(position)),
        position_(position) {}
  /// 1-based position of the first offending byte.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Two distinct positions produced the same conjugate. Cannot happen for a
/// duplicate-free factorization, so this signals a factorization bug.
class DuplicateConjugate : public std::logic_error {
 public:
  DuplicateConjugate()
      : std::logic_error("distinct positions share a conjugate") {}
};

}  // namespace bbwt
