#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covext/error.hpp"

namespace covext {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

/// A partition of n: weakly decreasing positive parts.
///
/// Doubles as the cycle type of a permutation of {1..n}; fixed points are
/// parts equal to 1.
class Partition {
 public:
  Partition() = default;

  /// Parts in any order; they are sorted. Throws input_error on a zero part
  /// or an empty list.
  explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw input_error("partition must have at least one part");
    for (auto p : parts_) {
      if (p == 0) throw input_error("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (auto p : parts_) n_ += p;
  }

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::uint32_t size() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  /// Multiplicity m_k of part k.
  std::map<std::uint32_t, std::uint32_t> multiplicities() const {
    std::map<std::uint32_t, std::uint32_t> m;
    for (auto p : parts_) ++m[p];
    return m;
  }

  /// Sign of the class as a permutation: even iff n - (#parts) is even.
  bool is_even() const { return (n_ - parts_.size()) % 2 == 0; }

  /// "3 2 1 1"
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? " " : "") << parts_[i];
    return os.str();
  }

  /// Conjugate (transposed) partition.
  Partition transpose() const {
    std::vector<std::uint32_t> t(parts_.front(), 0);
    for (auto p : parts_) {
      for (std::uint32_t i = 0; i < p; ++i) ++t[i];
    }
    return Partition(std::move(t));
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint32_t n_ = 0;
};

using CycleType = Partition;

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '{' << p.to_string() << '}';
}

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions(std::uint32_t n) {
  if (n == 0) throw precondition_error("partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest,
                                                             std::uint32_t max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline big_int factorial(std::uint32_t n) {
  big_int f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Order of the centralizer of a permutation of cycle type t: prod_k k^{m_k} m_k!.
inline big_int centralizer_order(const CycleType& t) {
  big_int z = 1;
  for (auto [k, m] : t.multiplicities()) {
    big_int km = 1;
    for (std::uint32_t i = 0; i < m; ++i) km *= k;
    z *= km * factorial(m);
  }
  return z;
}

/// Number of permutations of {1..n} with cycle type t.
inline big_int class_size(const CycleType& t) {
  return factorial(t.size()) / centralizer_order(t);
}

}  // namespace covext
