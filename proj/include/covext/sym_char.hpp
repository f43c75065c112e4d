#pragma once

// Irreducible characters of S_n (Murnaghan-Nakayama) and the Frobenius count
// of solutions to g_1 g_2 ... g_k = e with g_i in prescribed classes.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "covext/error.hpp"
#include "covext/partition.hpp"

namespace covext {

namespace detail {

using mn_key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
using mn_memo = std::map<mn_key, std::int64_t>;

// lambda may be empty (the empty partition); mu_rest is a list of strip lengths
// whose sum equals |lambda|.
inline std::int64_t mn_rec(const std::vector<std::uint32_t>& lambda,
                           const std::vector<std::uint32_t>& mu_rest, mn_memo& memo) {
  if (mu_rest.empty()) return lambda.empty() ? 1 : 0;
  mn_key key{lambda, mu_rest};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const std::uint32_t r = mu_rest.front();
  std::vector<std::uint32_t> tail(mu_rest.begin() + 1, mu_rest.end());

  // Beta set: b_i = lambda_i + (L - 1 - i), strictly decreasing.
  const std::size_t len = lambda.size();
  std::vector<std::int64_t> beta(len);
  for (std::size_t i = 0; i < len; ++i)
    beta[i] = static_cast<std::int64_t>(lambda[i]) + static_cast<std::int64_t>(len - 1 - i);

  std::int64_t total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t moved = beta[i] - static_cast<std::int64_t>(r);
    if (moved < 0) continue;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < len; ++j) {
      if (beta[j] == moved) occupied = true;
      if (beta[j] > moved && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<std::int64_t> nb = beta;
    nb[i] = moved;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<std::uint32_t> next;
    for (std::size_t j = 0; j < len; ++j) {
      std::int64_t part = nb[j] - static_cast<std::int64_t>(len - 1 - j);
      if (part > 0) next.push_back(static_cast<std::uint32_t>(part));
    }
    const std::int64_t sub = mn_rec(next, tail, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi_lambda(mu) by border-strip removal.
inline std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw input_error("character: |lambda| = " + std::to_string(lambda.size()) +
                      " but |mu| = " + std::to_string(mu.size()));
  }
  detail::mn_memo memo;
  return detail::mn_rec(lambda.parts(), mu.parts(), memo);
}

/// Full table chi_lambda(mu) for one n; rows and columns both indexed by
/// partitions(n). Immutable once built.
class CharacterTable {
 public:
  static constexpr std::uint32_t kDefaultMaxDegree = 14;

  explicit CharacterTable(std::uint32_t n, std::uint32_t max_degree = kDefaultMaxDegree)
      : n_(n), parts_(partitions_checked(n, max_degree)) {
    detail::mn_memo memo;
    values_.resize(parts_.size() * parts_.size());
    for (std::size_t a = 0; a < parts_.size(); ++a) {
      for (std::size_t b = 0; b < parts_.size(); ++b) {
        values_[a * parts_.size() + b] = detail::mn_rec(parts_[a].parts(), parts_[b].parts(), memo);
      }
    }
    for (std::size_t b = 0; b < parts_.size(); ++b) index_.emplace(parts_[b], b);
  }

  std::uint32_t degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw input_error("partition " + p.to_string() + " is not of n=" + std::to_string(n_));
    return it->second;
  }
  std::int64_t value(std::size_t lambda_idx, std::size_t mu_idx) const {
    return values_[lambda_idx * parts_.size() + mu_idx];
  }
  std::int64_t operator()(const Partition& lambda, const Partition& mu) const {
    return value(index_of(lambda), index_of(mu));
  }

 private:
  static std::vector<Partition> partitions_checked(std::uint32_t n, std::uint32_t max_degree) {
    if (n > max_degree) {
      throw precondition_error("character table for n=" + std::to_string(n) +
                               " exceeds the degree cap " + std::to_string(max_degree));
    }
    return covext::partitions(n);
  }

  std::uint32_t n_;
  std::vector<Partition> parts_;
  std::vector<std::int64_t> values_;
  std::map<Partition, std::size_t> index_;
};

/// Number of ordered tuples (g_1..g_k), g_i in class_i, with g_1 ... g_k = e:
///   (1/n!) |C_1|...|C_k| sum_chi chi(x_1)...chi(x_k) / chi(1)^(k-2),
/// evaluated in exact rationals.
inline big_int frobenius_count(std::span<const CycleType> classes, std::uint32_t n,
                               std::uint32_t max_degree = CharacterTable::kDefaultMaxDegree) {
  if (classes.empty()) throw precondition_error("frobenius_count: need at least one class");
  for (const auto& c : classes) {
    if (c.size() != n) {
      throw input_error("class " + c.to_string() + " has degree " + std::to_string(c.size()) +
                        ", expected " + std::to_string(n));
    }
  }
  if (n > max_degree) {
    throw precondition_error("frobenius_count: n=" + std::to_string(n) + " exceeds degree cap " +
                             std::to_string(max_degree));
  }
  const auto k = static_cast<std::int64_t>(classes.size());
  const Partition identity(std::vector<std::uint32_t>(n, 1));

  detail::mn_memo memo;
  big_rational sum = 0;
  for (const auto& lambda : covext::partitions(n)) {
    big_rational term = 1;
    for (const auto& c : classes) term *= detail::mn_rec(lambda.parts(), c.parts(), memo);
    if (term == 0) continue;
    const big_int dim = detail::mn_rec(lambda.parts(), identity.parts(), memo);
    // divide by dim^(k-2); k = 1 multiplies by dim
    if (k >= 2) {
      for (std::int64_t i = 0; i < k - 2; ++i) term /= big_rational(dim);
    } else {
      term *= big_rational(dim);
    }
    sum += term;
  }
  big_rational total = sum;
  for (const auto& c : classes) total *= big_rational(class_size(c));
  total /= big_rational(factorial(n));
  if (boost::multiprecision::denominator(total) != 1 || total < 0) {
    throw std::logic_error("frobenius_count: non-integral result; character data is wrong");
  }
  return boost::multiprecision::numerator(total);
}

}  // namespace covext
