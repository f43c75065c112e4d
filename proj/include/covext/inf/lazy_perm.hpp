#pragma once

// Lazily evaluated permutations of Z^2 built from a small expression grammar:
//
//   EXPR := ID | SHIFT(k) | SIGMA_INF(spec) | SIGMA_FIN(spec)
//         | CONJ(mode, spec-or-EXPR, seed) | INV(EXPR) | COMP(EXPR, EXPR, ...)
//         | POW(EXPR, k) | ROOT(EXPR, n_1 ... n_r[, group=i][, phase=p])
//
// COMP(A, B) is A*B, i.e. B acts first. SHIFT(k) is (x, y) -> (x, y+k).
//
// CONJ(A, d, s): d row-preserving, psi = d*SHIFT(1). Then
//   a(i, j) = psi^j(pi_s(i), 0),   pi_s = f o (i -> i+1) o f,  f = (0 s),
// so a*SHIFT(1)*a^-1 = psi and a_s(-1, 0) = (s, 0) separates seeds.
//
// CONJ(B, d, s): d with vertical displacement in [lo, hi], h = max(1, 1-lo),
// psi = d*SHIFT(h), which moves every point up by 1..hi+h. Every psi-orbit has
// a unique entry point: the first orbit point with y >= 0. Entries are ranked
// by scanning the band Z x [0, hi+h) column by column (x = 0, 1, -1, 2, ...)
// and bottom to top. SHIFT(h)-cycles {(x, r + h t)} are ranked zig(x) h + r.
// a sends the SHIFT(h)-cycle of rank r onto the psi-cycle of rank (0 s)(r),
// so a_s(0, 0) is the entry of rank s.
//
// ROOT(F, n_1 ... n_r, group=i, phase=p): F is SHIFT(k), a psi of the form
// COMP(d, SHIFT(h)) as above, or INV of one of these. The cycles of F are
// indexed by c in Z; they are cut into consecutive blocks of sizes n_1..n_r
// repeating with period n_1+..+n_r, starting at c = p. The result is one
// infinite cycle per block of group i, interleaving the block's cycles, and
// the identity elsewhere. Its n_i-th power is F on those cycles.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covext/error.hpp"
#include "covext/inf/cycle_spec.hpp"
#include "covext/inf/layout.hpp"
#include "covext/inf/point.hpp"

namespace covext::inf {

struct YBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const YBounds&) const = default;
};

enum class Direction { forward, backward };
enum class ConjMode { caseA, caseB };

class LazyPerm;

namespace detail {

enum class NodeKind { id, shift, sigma_inf, sigma_fin, conj, inv, comp, power, root };

class Node {
 public:
  virtual ~Node() = default;
  virtual NodeKind kind() const = 0;
  virtual Point eval(Point q, bool fwd, step_budget& b) const = 0;
  virtual void print(std::ostream& os) const = 0;
  virtual std::optional<YBounds> y_bounds() const = 0;
  virtual std::optional<CycleTypeSpec> spec() const { return std::nullopt; }
};

using NodePtr = std::shared_ptr<const Node>;

}  // namespace detail

class LazyPerm {
 public:
  LazyPerm();
  explicit LazyPerm(detail::NodePtr n) : node_(std::move(n)) {}

  static LazyPerm identity();
  static LazyPerm shift(std::int64_t k);
  static LazyPerm sigma_infinite(const CycleTypeSpec& spec);
  static LazyPerm sigma_finite(const CycleTypeSpec& spec);
  static LazyPerm conjugator(const LazyPerm& delta, ConjMode mode, std::int64_t seed);
  static LazyPerm root(const LazyPerm& family, std::vector<std::uint32_t> pattern, std::size_t group = 0,
                       std::int64_t phase = 0);
  static LazyPerm parse(std::string_view text);

  LazyPerm inverse() const;
  LazyPerm pow(std::int64_t k) const;
  friend LazyPerm operator*(const LazyPerm& a, const LazyPerm& b);

  Point eval(Point q, Direction d, step_budget& b) const { return node_->eval(q, d == Direction::forward, b); }
  Point forward(Point q, step_budget& b) const { return node_->eval(q, true, b); }
  Point backward(Point q, step_budget& b) const { return node_->eval(q, false, b); }
  Point forward(Point q) const {
    step_budget b;
    return forward(q, b);
  }
  Point backward(Point q) const {
    step_budget b;
    return backward(q, b);
  }
  Point operator()(Point q) const { return forward(q); }

  std::optional<YBounds> y_bounds() const { return node_->y_bounds(); }
  /// Cycle type, when known from construction.
  std::optional<CycleTypeSpec> spec() const { return node_->spec(); }
  bool is_identity_expression() const { return node_->kind() == detail::NodeKind::id; }

  std::string to_string() const {
    std::ostringstream os;
    node_->print(os);
    return os.str();
  }

  const detail::NodePtr& node() const { return node_; }

 private:
  detail::NodePtr node_;
};

inline std::ostream& operator<<(std::ostream& os, const LazyPerm& p) { return os << p.to_string(); }

/// Lazy evaluation entry point with an explicit direction.
inline Point lazy_eval(const LazyPerm& p, Point q, Direction d) {
  step_budget b;
  return p.eval(q, d, b);
}

namespace detail {

class IdNode final : public Node {
 public:
  NodeKind kind() const override { return NodeKind::id; }
  Point eval(Point q, bool, step_budget&) const override { return q; }
  void print(std::ostream& os) const override { os << "ID"; }
  std::optional<YBounds> y_bounds() const override { return YBounds{0, 0}; }
  std::optional<CycleTypeSpec> spec() const override {
    return CycleTypeSpec({{Cardinal::finite(1), Cardinal::aleph0()}});
  }
};

class ShiftNode final : public Node {
 public:
  explicit ShiftNode(std::int64_t k) : k_(k) {}
  std::int64_t step() const { return k_; }
  NodeKind kind() const override { return NodeKind::shift; }
  Point eval(Point q, bool fwd, step_budget& b) const override {
    b.spend();
    return {q.x, fwd ? q.y + k_ : q.y - k_};
  }
  void print(std::ostream& os) const override { os << "SHIFT(" << k_ << ')'; }
  std::optional<YBounds> y_bounds() const override { return YBounds{k_, k_}; }
  std::optional<CycleTypeSpec> spec() const override {
    if (k_ == 0) return CycleTypeSpec({{Cardinal::finite(1), Cardinal::aleph0()}});
    return CycleTypeSpec({{Cardinal::aleph0(), Cardinal::aleph0()}});
  }

 private:
  std::int64_t k_;
};

class SigmaInfNode final : public Node {
 public:
  explicit SigmaInfNode(const CycleTypeSpec& s) : layout_(s) {}
  NodeKind kind() const override { return NodeKind::sigma_inf; }
  Point eval(Point q, bool fwd, step_budget& b) const override {
    b.spend();
    return fwd ? layout_.forward(q) : layout_.backward(q);
  }
  void print(std::ostream& os) const override { os << "SIGMA_INF(" << layout_.spec().to_string() << ')'; }
  std::optional<YBounds> y_bounds() const override { return YBounds{0, 0}; }
  std::optional<CycleTypeSpec> spec() const override { return layout_.spec(); }

 private:
  RowLayout layout_;
};

class SigmaFinNode final : public Node {
 public:
  explicit SigmaFinNode(const CycleTypeSpec& s) : layout_(s) {}
  NodeKind kind() const override { return NodeKind::sigma_fin; }
  Point eval(Point q, bool fwd, step_budget& b) const override {
    b.spend();
    return fwd ? layout_.forward(q) : layout_.backward(q);
  }
  void print(std::ostream& os) const override { os << "SIGMA_FIN(" << layout_.spec().to_string() << ')'; }
  std::optional<YBounds> y_bounds() const override { return YBounds{-1, 1}; }
  std::optional<CycleTypeSpec> spec() const override { return layout_.spec(); }

 private:
  SweepLayout layout_;
};

class InvNode final : public Node {
 public:
  explicit InvNode(NodePtr c) : child_(std::move(c)) {}
  const NodePtr& child() const { return child_; }
  NodeKind kind() const override { return NodeKind::inv; }
  Point eval(Point q, bool fwd, step_budget& b) const override { return child_->eval(q, !fwd, b); }
  void print(std::ostream& os) const override {
    os << "INV(";
    child_->print(os);
    os << ')';
  }
  std::optional<YBounds> y_bounds() const override {
    auto c = child_->y_bounds();
    if (!c) return std::nullopt;
    return YBounds{-c->hi, -c->lo};
  }
  std::optional<CycleTypeSpec> spec() const override { return child_->spec(); }

 private:
  NodePtr child_;
};

class CompNode final : public Node {
 public:
  CompNode(NodePtr a, NodePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  const NodePtr& left() const { return a_; }
  const NodePtr& right() const { return b_; }
  NodeKind kind() const override { return NodeKind::comp; }
  Point eval(Point q, bool fwd, step_budget& bud) const override {
    if (fwd) return a_->eval(b_->eval(q, true, bud), true, bud);
    return b_->eval(a_->eval(q, false, bud), false, bud);
  }
  void print(std::ostream& os) const override {
    os << "COMP(";
    a_->print(os);
    os << ", ";
    b_->print(os);
    os << ')';
  }
  std::optional<YBounds> y_bounds() const override {
    auto x = a_->y_bounds();
    auto y = b_->y_bounds();
    if (!x || !y) return std::nullopt;
    return YBounds{x->lo + y->lo, x->hi + y->hi};
  }

 private:
  NodePtr a_, b_;
};

class PowNode final : public Node {
 public:
  PowNode(NodePtr c, std::int64_t k) : child_(std::move(c)), k_(k) {}
  NodeKind kind() const override { return NodeKind::power; }
  Point eval(Point q, bool fwd, step_budget& b) const override {
    const bool f = (k_ >= 0) == fwd;
    const std::int64_t n = k_ >= 0 ? k_ : -k_;
    for (std::int64_t i = 0; i < n; ++i) q = child_->eval(q, f, b);
    return q;
  }
  void print(std::ostream& os) const override {
    os << "POW(";
    child_->print(os);
    os << ", " << k_ << ')';
  }
  std::optional<YBounds> y_bounds() const override {
    auto c = child_->y_bounds();
    if (!c) return std::nullopt;
    if (k_ >= 0) return YBounds{c->lo * k_, c->hi * k_};
    return YBounds{c->hi * k_, c->lo * k_};
  }

 private:
  NodePtr child_;
  std::int64_t k_;
};

inline std::int64_t zig(std::int64_t x) { return x > 0 ? 2 * x - 1 : -2 * x; }
inline std::int64_t unzig(std::int64_t r) { return r % 2 == 1 ? (r + 1) / 2 : -(r / 2); }

/// psi = delta*SHIFT(h) for a delta with finite displacement bounds, together
/// with the lazily built ranking of psi-orbit entry points.
class BandIndex {
 public:
  BandIndex(NodePtr delta, std::int64_t h, std::int64_t width)
      : delta_(std::move(delta)), h_(h), width_(width) {}

  std::int64_t step() const { return h_; }
  const NodePtr& delta() const { return delta_; }

  Point psi(Point q, bool fwd, step_budget& b) const {
    if (fwd) return delta_->eval({q.x, q.y + h_}, true, b);
    const Point r = delta_->eval(q, false, b);
    return {r.x, r.y - h_};
  }

  /// Writes q = psi^t(entry); returns (entry, t).
  std::pair<Point, std::int64_t> to_entry(Point q, step_budget& b) const {
    std::int64_t t = 0;
    if (q.y >= 0) {
      for (;;) {
        const Point prev = psi(q, false, b);
        if (prev.y < 0) break;
        q = prev;
        ++t;
      }
    } else {
      while (q.y < 0) {
        q = psi(q, true, b);
        --t;
      }
    }
    return {q, t};
  }

  Point entry(std::int64_t rank, step_budget& b) const {
    std::lock_guard lock(mu_);
    while (static_cast<std::int64_t>(entries_.size()) <= rank) scan_column(b);
    return entries_[static_cast<std::size_t>(rank)];
  }

  std::int64_t rank_of(Point e, step_budget& b) const {
    std::lock_guard lock(mu_);
    const std::int64_t col = zig(e.x);
    while (columns_ <= col) scan_column(b);
    auto it = rank_.find(e);
    if (it == rank_.end()) throw std::logic_error("BandIndex: point is not an orbit entry");
    return it->second;
  }

 private:
  void scan_column(step_budget& b) const {
    const std::int64_t x = unzig(columns_);
    std::vector<Point> found;
    for (std::int64_t y = 0; y < width_; ++y) {
      const Point p{x, y};
      if (psi(p, false, b).y < 0) found.push_back(p);
    }
    for (const Point& p : found) {
      rank_.emplace(p, static_cast<std::int64_t>(entries_.size()));
      entries_.push_back(p);
    }
    ++columns_;
  }

  NodePtr delta_;
  std::int64_t h_;
  std::int64_t width_;
  mutable std::mutex mu_;
  mutable std::vector<Point> entries_;
  mutable std::unordered_map<Point, std::int64_t, PointHash> rank_;
  mutable std::int64_t columns_ = 0;
};

inline std::shared_ptr<const BandIndex> make_band(const NodePtr& delta) {
  const auto bounds = delta->y_bounds();
  if (!bounds) throw input_error("CONJ(B, ...): base permutation has unbounded vertical displacement");
  const std::int64_t h = std::max<std::int64_t>(1, 1 - bounds->lo);
  return std::make_shared<const BandIndex>(delta, h, bounds->hi + h);
}

inline void print_conj_base(std::ostream& os, const NodePtr& delta, NodeKind spec_kind) {
  if (delta->kind() == spec_kind) os << delta->spec()->to_string();
  else delta->print(os);
}

class ConjANode final : public Node {
 public:
  ConjANode(NodePtr delta, std::int64_t seed) : delta_(std::move(delta)), seed_(seed) {
    if (seed < 0) throw input_error("CONJ seed must be >= 0");
    const auto b = delta_->y_bounds();
    if (!b || b->lo != 0 || b->hi != 0) {
      throw input_error("CONJ(A, ...): base permutation must keep every row invariant");
    }
  }
  NodeKind kind() const override { return NodeKind::conj; }

  Point eval(Point q, bool fwd, step_budget& b) const override {
    if (fwd) {
      Point p{pi(q.x, true), 0};
      const std::int64_t n = q.y >= 0 ? q.y : -q.y;
      for (std::int64_t i = 0; i < n; ++i) p = psi(p, q.y >= 0, b);
      return p;
    }
    Point p = q;
    const std::int64_t n = q.y >= 0 ? q.y : -q.y;
    for (std::int64_t i = 0; i < n; ++i) p = psi(p, q.y < 0, b);
    return {pi(p.x, false), q.y};
  }

  void print(std::ostream& os) const override {
    os << "CONJ(A, ";
    print_conj_base(os, delta_, NodeKind::sigma_inf);
    os << ", " << seed_ << ')';
  }
  std::optional<YBounds> y_bounds() const override { return std::nullopt; }

 private:
  std::int64_t swap(std::int64_t i) const { return i == 0 ? seed_ : (i == seed_ ? 0 : i); }
  std::int64_t pi(std::int64_t i, bool fwd) const { return swap(swap(i) + (fwd ? 1 : -1)); }
  Point psi(Point q, bool fwd, step_budget& b) const {
    if (fwd) return delta_->eval({q.x, q.y + 1}, true, b);
    const Point r = delta_->eval(q, false, b);
    return {r.x, r.y - 1};
  }

  NodePtr delta_;
  std::int64_t seed_;
};

class ConjBNode final : public Node {
 public:
  ConjBNode(NodePtr delta, std::int64_t seed) : band_(make_band(delta)), seed_(seed) {
    if (seed < 0) throw input_error("CONJ seed must be >= 0");
  }
  NodeKind kind() const override { return NodeKind::conj; }

  Point eval(Point q, bool fwd, step_budget& b) const override {
    const std::int64_t h = band_->step();
    if (fwd) {
      const std::int64_t t = floor_div(q.y, h);
      const std::int64_t r = q.y - t * h;
      Point p = band_->entry(swap(zig(q.x) * h + r), b);
      const std::int64_t n = t >= 0 ? t : -t;
      for (std::int64_t i = 0; i < n; ++i) p = band_->psi(p, t >= 0, b);
      return p;
    }
    const auto [e, t] = band_->to_entry(q, b);
    const std::int64_t c = swap(band_->rank_of(e, b));
    return {unzig(c / h), c % h + h * t};
  }

  void print(std::ostream& os) const override {
    os << "CONJ(B, ";
    print_conj_base(os, band_->delta(), NodeKind::sigma_fin);
    os << ", " << seed_ << ')';
  }
  std::optional<YBounds> y_bounds() const override { return std::nullopt; }

 private:
  std::int64_t swap(std::int64_t i) const { return i == 0 ? seed_ : (i == seed_ ? 0 : i); }

  std::shared_ptr<const BandIndex> band_;
  std::int64_t seed_;
};

/// A permutation all of whose cycles are infinite, with an explicit
/// enumeration (c, q) -> point, c in Z the cycle and q in Z the position,
/// such that the permutation sends (c, q) to (c, q+1).
class CycleFamily {
 public:
  virtual ~CycleFamily() = default;
  virtual std::pair<std::int64_t, std::int64_t> locate(Point p, step_budget& b) const = 0;
  virtual Point point(std::int64_t c, std::int64_t q, step_budget& b) const = 0;
};

class ShiftFamily final : public CycleFamily {
 public:
  explicit ShiftFamily(std::int64_t k) : k_(k) {
    if (k == 0) throw input_error("ROOT: SHIFT(0) has no infinite cycles");
  }
  std::pair<std::int64_t, std::int64_t> locate(Point p, step_budget&) const override {
    const std::int64_t m = k_ > 0 ? k_ : -k_;
    const std::int64_t t = floor_div(p.y, m);
    return {p.x * m + (p.y - t * m), k_ > 0 ? t : -t};
  }
  Point point(std::int64_t c, std::int64_t q, step_budget&) const override {
    const std::int64_t m = k_ > 0 ? k_ : -k_;
    const std::int64_t x = floor_div(c, m);
    return {x, (c - x * m) + m * (k_ > 0 ? q : -q)};
  }

 private:
  std::int64_t k_;
};

/// psi = delta*SHIFT(1) with delta row-preserving; cycle c passes (c, 0).
class RowPsiFamily final : public CycleFamily {
 public:
  explicit RowPsiFamily(NodePtr delta) : delta_(std::move(delta)) {}
  std::pair<std::int64_t, std::int64_t> locate(Point p, step_budget& b) const override {
    Point r = p;
    const std::int64_t n = p.y >= 0 ? p.y : -p.y;
    for (std::int64_t i = 0; i < n; ++i) r = psi(r, p.y < 0, b);
    return {r.x, p.y};
  }
  Point point(std::int64_t c, std::int64_t q, step_budget& b) const override {
    Point r{c, 0};
    const std::int64_t n = q >= 0 ? q : -q;
    for (std::int64_t i = 0; i < n; ++i) r = psi(r, q >= 0, b);
    return r;
  }

 private:
  Point psi(Point q, bool fwd, step_budget& b) const {
    if (fwd) return delta_->eval({q.x, q.y + 1}, true, b);
    const Point r = delta_->eval(q, false, b);
    return {r.x, r.y - 1};
  }
  NodePtr delta_;
};

class BandPsiFamily final : public CycleFamily {
 public:
  explicit BandPsiFamily(std::shared_ptr<const BandIndex> band) : band_(std::move(band)) {}
  std::pair<std::int64_t, std::int64_t> locate(Point p, step_budget& b) const override {
    const auto [e, t] = band_->to_entry(p, b);
    return {unzig(band_->rank_of(e, b)), t};
  }
  Point point(std::int64_t c, std::int64_t q, step_budget& b) const override {
    Point r = band_->entry(zig(c), b);
    const std::int64_t n = q >= 0 ? q : -q;
    for (std::int64_t i = 0; i < n; ++i) r = band_->psi(r, q >= 0, b);
    return r;
  }

 private:
  std::shared_ptr<const BandIndex> band_;
};

class InverseFamily final : public CycleFamily {
 public:
  explicit InverseFamily(std::shared_ptr<const CycleFamily> f) : f_(std::move(f)) {}
  std::pair<std::int64_t, std::int64_t> locate(Point p, step_budget& b) const override {
    auto [c, q] = f_->locate(p, b);
    return {c, -q};
  }
  Point point(std::int64_t c, std::int64_t q, step_budget& b) const override { return f_->point(c, -q, b); }

 private:
  std::shared_ptr<const CycleFamily> f_;
};

inline std::shared_ptr<const CycleFamily> family_of(const NodePtr& n) {
  switch (n->kind()) {
    case NodeKind::shift:
      return std::make_shared<ShiftFamily>(static_cast<const ShiftNode&>(*n).step());
    case NodeKind::inv:
      return std::make_shared<InverseFamily>(family_of(static_cast<const InvNode&>(*n).child()));
    case NodeKind::comp: {
      const auto& c = static_cast<const CompNode&>(*n);
      if (c.right()->kind() == NodeKind::shift) {
        const std::int64_t h = static_cast<const ShiftNode&>(*c.right()).step();
        const auto bounds = c.left()->y_bounds();
        if (bounds && bounds->lo == 0 && bounds->hi == 0 && h == 1) {
          return std::make_shared<RowPsiFamily>(c.left());
        }
        if (bounds && h == std::max<std::int64_t>(1, 1 - bounds->lo)) {
          return std::make_shared<BandPsiFamily>(make_band(c.left()));
        }
      }
      break;
    }
    default:
      break;
  }
  std::ostringstream os;
  n->print(os);
  throw input_error("ROOT: " + os.str() + " is not an enumerable family of infinite cycles");
}

class RootNode final : public Node {
 public:
  RootNode(NodePtr family, std::vector<std::uint32_t> pattern, std::size_t group, std::int64_t phase)
      : expr_(std::move(family)), pattern_(std::move(pattern)), group_(group), phase_(phase) {
    if (pattern_.empty()) throw input_error("ROOT: empty block pattern");
    for (auto n : pattern_)
      if (n < 1) throw input_error("ROOT: block sizes must be >= 1");
    if (group_ >= pattern_.size()) throw input_error("ROOT: group index out of range");
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      if (i == group_) start_ = period_;
      period_ += pattern_[i];
    }
    family_ = family_of(expr_);
  }
  NodeKind kind() const override { return NodeKind::root; }

  Point eval(Point p, bool fwd, step_budget& b) const override {
    const auto [c, q] = family_->locate(p, b);
    const std::int64_t o = floor_mod(c - phase_, period_);
    const std::int64_t n = pattern_[group_];
    if (o < start_ || o >= start_ + n) return p;
    const std::int64_t t = o - start_;
    const std::int64_t first = c - t;
    if (fwd) return t < n - 1 ? family_->point(c + 1, q, b) : family_->point(first, q + 1, b);
    return t > 0 ? family_->point(c - 1, q, b) : family_->point(first + n - 1, q - 1, b);
  }

  void print(std::ostream& os) const override {
    os << "ROOT(";
    expr_->print(os);
    os << ',';
    for (auto n : pattern_) os << ' ' << n;
    if (group_ != 0) os << ", group=" << group_;
    if (phase_ != 0) os << ", phase=" << phase_;
    os << ')';
  }
  std::optional<YBounds> y_bounds() const override { return std::nullopt; }

 private:
  NodePtr expr_;
  std::shared_ptr<const CycleFamily> family_;
  std::vector<std::uint32_t> pattern_;
  std::size_t group_;
  std::int64_t phase_;
  std::int64_t start_ = 0;
  std::int64_t period_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw input_error(std::string(what) + ": expected an integer, got \"" + std::string(s) + "\"");
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw input_error(std::string(what) + ": expected an integer, got \"" + std::string(s) + "\"");
    }
    if (v > 1'000'000'000'000'000LL) throw input_error(std::string(what) + ": integer too large");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

/// Splits "NAME(a, b(c, d), e)" into NAME and its top-level arguments.
inline std::pair<std::string_view, std::vector<std::string_view>> split_call(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && (std::isupper(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  const std::string_view name = s.substr(0, i);
  if (name.empty()) throw input_error("expression: expected a keyword at \"" + std::string(s) + "\"");
  std::vector<std::string_view> args;
  const std::string_view rest = trim(s.substr(i));
  if (rest.empty()) return {name, args};
  if (rest.front() != '(' || rest.back() != ')') {
    throw input_error("expression: malformed argument list in \"" + std::string(s) + "\"");
  }
  const std::string_view inner = rest.substr(1, rest.size() - 2);
  int depth = 0;
  std::size_t from = 0;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    if (inner[j] == '(') ++depth;
    else if (inner[j] == ')') {
      if (--depth < 0) throw input_error("expression: unbalanced ')' in \"" + std::string(s) + "\"");
    } else if (inner[j] == ',' && depth == 0) {
      args.push_back(trim(inner.substr(from, j - from)));
      from = j + 1;
    }
  }
  if (depth != 0) throw input_error("expression: unbalanced '(' in \"" + std::string(s) + "\"");
  args.push_back(trim(inner.substr(from)));
  return {name, args};
}

inline std::string join(const std::vector<std::string_view>& parts, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ',';
    out += parts[i];
  }
  return out;
}

}  // namespace detail

inline LazyPerm::LazyPerm() : node_(std::make_shared<detail::IdNode>()) {}
inline LazyPerm LazyPerm::identity() { return LazyPerm(); }
inline LazyPerm LazyPerm::shift(std::int64_t k) { return LazyPerm(std::make_shared<detail::ShiftNode>(k)); }
inline LazyPerm LazyPerm::sigma_infinite(const CycleTypeSpec& s) {
  return LazyPerm(std::make_shared<detail::SigmaInfNode>(s));
}
inline LazyPerm LazyPerm::sigma_finite(const CycleTypeSpec& s) {
  return LazyPerm(std::make_shared<detail::SigmaFinNode>(s));
}
inline LazyPerm LazyPerm::conjugator(const LazyPerm& delta, ConjMode mode, std::int64_t seed) {
  if (mode == ConjMode::caseA) return LazyPerm(std::make_shared<detail::ConjANode>(delta.node(), seed));
  return LazyPerm(std::make_shared<detail::ConjBNode>(delta.node(), seed));
}
inline LazyPerm LazyPerm::root(const LazyPerm& family, std::vector<std::uint32_t> pattern, std::size_t group,
                               std::int64_t phase) {
  return LazyPerm(std::make_shared<detail::RootNode>(family.node(), std::move(pattern), group, phase));
}
inline LazyPerm LazyPerm::inverse() const { return LazyPerm(std::make_shared<detail::InvNode>(node_)); }
inline LazyPerm LazyPerm::pow(std::int64_t k) const { return LazyPerm(std::make_shared<detail::PowNode>(node_, k)); }
inline LazyPerm operator*(const LazyPerm& a, const LazyPerm& b) {
  return LazyPerm(std::make_shared<detail::CompNode>(a.node(), b.node()));
}

inline LazyPerm LazyPerm::parse(std::string_view text) {
  using namespace detail;
  const auto [name, args] = split_call(text);
  auto arity = [&, name = name, &args = args](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw input_error(std::string(name) + ": wrong number of arguments in \"" + std::string(trim(text)) + "\"");
    }
  };
  if (name == "ID") {
    arity(0, 0);
    return identity();
  }
  if (name == "SHIFT") {
    arity(1, 1);
    return shift(parse_int(args[0], "SHIFT"));
  }
  if (name == "SIGMA_INF") return sigma_infinite(CycleTypeSpec::parse(join(args, 0, args.size())));
  if (name == "SIGMA_FIN") return sigma_finite(CycleTypeSpec::parse(join(args, 0, args.size())));
  if (name == "INV") {
    arity(1, 1);
    return parse(args[0]).inverse();
  }
  if (name == "COMP") {
    arity(2, 64);
    LazyPerm out = parse(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) out = out * parse(args[i]);
    return out;
  }
  if (name == "POW") {
    arity(2, 2);
    return parse(args[0]).pow(parse_int(args[1], "POW"));
  }
  if (name == "CONJ") {
    arity(3, 64);
    ConjMode mode;
    if (args[0] == "A") mode = ConjMode::caseA;
    else if (args[0] == "B") mode = ConjMode::caseB;
    else throw input_error("CONJ: mode must be A or B, got \"" + std::string(args[0]) + "\"");
    const std::string base = join(args, 1, args.size() - 1);
    const std::int64_t seed = parse_int(args.back(), "CONJ seed");
    const std::string_view b = trim(base);
    LazyPerm delta;
    if (!b.empty() && std::isupper(static_cast<unsigned char>(b.front()))) delta = parse(b);
    else if (mode == ConjMode::caseA) delta = sigma_infinite(CycleTypeSpec::parse(b));
    else delta = sigma_finite(CycleTypeSpec::parse(b));
    return conjugator(delta, mode, seed);
  }
  if (name == "ROOT") {
    arity(2, 4);
    std::vector<std::uint32_t> pattern;
    std::istringstream is{std::string(args[1])};
    std::string tok;
    while (is >> tok) {
      const auto v = parse_int(tok, "ROOT block size");
      if (v < 1 || v > 1'000'000) throw input_error("ROOT: block sizes must lie in [1, 10^6]");
      pattern.push_back(static_cast<std::uint32_t>(v));
    }
    std::size_t group = 0;
    std::int64_t phase = 0;
    for (std::size_t i = 2; i < args.size(); ++i) {
      const auto eq = args[i].find('=');
      const auto key = trim(args[i].substr(0, eq));
      if (eq == std::string_view::npos) throw input_error("ROOT: expected key=value, got \"" + std::string(args[i]) + "\"");
      const auto val = parse_int(args[i].substr(eq + 1), "ROOT");
      if (key == "group") {
        if (val < 0) throw input_error("ROOT: negative group");
        group = static_cast<std::size_t>(val);
      } else if (key == "phase") {
        phase = val;
      } else {
        throw input_error("ROOT: unknown option \"" + std::string(key) + "\"");
      }
    }
    return root(parse(args[0]), std::move(pattern), group, phase);
  }
  throw input_error("expression: unknown keyword \"" + std::string(name) + "\"");
}

}  // namespace covext::inf
