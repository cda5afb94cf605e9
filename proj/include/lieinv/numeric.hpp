#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieinv {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Integer coordinate vector: Dynkin labels of a weight, or root-basis
/// coordinates of a root.
using Labels = std::vector<std::int64_t>;

struct LabelsHash {
  std::size_t operator()(const Labels& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

}  // namespace checked

/// Converts an exactly-integral rational to int64, throwing otherwise.
inline std::int64_t to_int64(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error("expected an integral rational, got " + q.str());
  }
  return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

std::string to_string(const Labels& v);

}  // namespace lieinv
