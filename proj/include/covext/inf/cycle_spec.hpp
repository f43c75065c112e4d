#pragma once

// Conjugacy-class data of a permutation of a countably infinite set: for each
// cycle length (finite or infinite) the number of cycles (finite or aleph_0).
// Two permutations of Z^2 are conjugate iff their specs agree.
//
// Text form: comma-separated "size:count" entries with "inf" for both infinite
// length and aleph_0, e.g. "inf:1, 1:inf".

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "covext/error.hpp"

namespace covext::inf {

/// A nonnegative integer or the countable infinity.
struct Cardinal {
  bool infinite = false;
  std::uint64_t value = 0;

  static constexpr Cardinal finite(std::uint64_t v) { return {false, v}; }
  static constexpr Cardinal aleph0() { return {true, 0}; }

  bool is_zero() const { return !infinite && value == 0; }

  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }

  bool operator==(const Cardinal&) const = default;
};

struct SpecEntry {
  Cardinal size;   // cycle length, >= 1
  Cardinal count;  // number of such cycles, >= 1 after normalization
  bool operator==(const SpecEntry&) const = default;
};

class CycleTypeSpec {
 public:
  CycleTypeSpec() = default;

  /// Drops zero counts, sorts (infinite length first, then finite lengths
  /// descending) and validates. Throws input_error on a repeated length, a
  /// zero length, or a finite underlying set.
  explicit CycleTypeSpec(std::vector<SpecEntry> entries) {
    for (auto& e : entries) {
      if (e.count.is_zero()) continue;
      if (e.size.is_zero()) throw input_error("cycle length must be >= 1");
      entries_.push_back(e);
    }
    std::sort(entries_.begin(), entries_.end(), [](const SpecEntry& a, const SpecEntry& b) {
      if (a.size.infinite != b.size.infinite) return a.size.infinite;
      return a.size.value > b.size.value;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i].size == entries_[i - 1].size) {
        throw input_error("cycle length " + entries_[i].size.to_string() + " listed twice");
      }
    }
    bool infinite_set = false;
    for (const auto& e : entries_) infinite_set |= e.count.infinite || e.size.infinite;
    if (!infinite_set) {
      throw input_error("spec describes a finite set; add an infinite cycle or 1:inf fixed points");
    }
  }

  static CycleTypeSpec parse(std::string_view text) {
    std::vector<SpecEntry> entries;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto card = [&]() -> Cardinal {
      skip();
      if (text.substr(i, 3) == "inf") {
        i += 3;
        return Cardinal::aleph0();
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw input_error("spec: expected a number or 'inf' at column " + std::to_string(i + 1) +
                          " of \"" + std::string(text) + "\"");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (v > 100'000'000'000ULL) throw input_error("spec: number too large");
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        ++i;
      }
      return Cardinal::finite(v);
    };
    skip();
    if (i >= text.size()) throw input_error("spec: empty");
    for (;;) {
      SpecEntry e;
      e.size = card();
      skip();
      if (i >= text.size() || text[i] != ':') {
        throw input_error("spec: expected ':' at column " + std::to_string(i + 1) + " of \"" +
                          std::string(text) + "\"");
      }
      ++i;
      e.count = card();
      entries.push_back(e);
      skip();
      if (i >= text.size()) break;
      if (text[i] != ',') {
        throw input_error("spec: expected ',' at column " + std::to_string(i + 1) + " of \"" +
                          std::string(text) + "\"");
      }
      ++i;
    }
    return CycleTypeSpec(std::move(entries));
  }

  const std::vector<SpecEntry>& entries() const { return entries_; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      os << (i ? ", " : "") << entries_[i].size.to_string() << ':' << entries_[i].count.to_string();
    }
    return os.str();
  }

  /// Number of infinite cycles.
  Cardinal infinite_cycles() const {
    for (const auto& e : entries_)
      if (e.size.infinite) return e.count;
    return Cardinal::finite(0);
  }

  /// Whether the total number of cycles (fixed points included) is infinite.
  bool has_infinitely_many_cycles() const {
    for (const auto& e : entries_)
      if (e.count.infinite) return true;
    return false;
  }

  /// Finite-length entries, longest first.
  std::vector<SpecEntry> finite_entries() const {
    std::vector<SpecEntry> out;
    for (const auto& e : entries_)
      if (!e.size.infinite) out.push_back(e);
    return out;
  }

  bool moves_infinitely_many() const {
    for (const auto& e : entries_) {
      if (e.size.infinite) return true;
      if (e.size.value >= 2 && e.count.infinite) return true;
    }
    return false;
  }

  bool is_identity() const {
    return entries_.size() == 1 && entries_[0].size == Cardinal::finite(1);
  }

  /// Some infinite cycle is present.
  bool has_infinite_cycle() const { return !infinite_cycles().is_zero(); }

  /// Exactly one infinite cycle; every other cycle is a fixed point.
  bool is_single_infinite_cycle_plus_fixed() const {
    if (infinite_cycles() != Cardinal::finite(1)) return false;
    for (const auto& e : entries_)
      if (!e.size.infinite && e.size.value != 1) return false;
    return true;
  }

  /// Parity of a finitely supported permutation; nullopt if the support is
  /// infinite.
  std::optional<bool> finite_support_is_odd() const {
    if (moves_infinitely_many()) return std::nullopt;
    std::uint64_t transpositions = 0;
    for (const auto& e : entries_) {
      if (e.size.value >= 2) transpositions += (e.size.value - 1) * e.count.value;
    }
    return transpositions % 2 == 1;
  }

  bool operator==(const CycleTypeSpec&) const = default;

 private:
  std::vector<SpecEntry> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const CycleTypeSpec& s) {
  return os << '{' << s.to_string() << '}';
}

}  // namespace covext::inf
