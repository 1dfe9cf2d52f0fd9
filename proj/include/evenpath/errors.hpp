#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace evenpath {

/// Malformed graph6 (or other textual) input. `offset` is the byte at fault.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A requested size is beyond a documented hard cap.
class limit_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The caller asked for a certificate on an input whose condition fails.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(const std::string& what, std::int64_t margin)
      : std::invalid_argument(what), margin_(margin) {}

  std::int64_t margin() const noexcept { return margin_; }

 private:
  std::int64_t margin_;
};

/// An internal invariant was violated. Always indicates a bug.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what, std::string dump = {})
      : std::logic_error(what), dump_(std::move(dump)) {}

  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Overflow-checked integer helpers. Degree-power sums grow fast.
namespace checked {

template <class T>
T mul(T a, T b) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

template <class T>
T add(T a, T b) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

template <class T>
T sub(T a, T b) {
  T r{};
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

template <class T>
T pow(T base, int exp) {
  T r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked
}  // namespace evenpath
