#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "endorsim/graph.hpp"
#include "endorsim/pattern.hpp"

namespace endorsim {

// Exact nonnegative fraction in lowest terms, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Symmetric matrix of nonnegative integers: p_ij is the requested size of
/// S_i intersected with S_j, p_ii the size of S_i.
class RipInstance {
 public:
  // Throws ValidationError for non-square, asymmetric or negative input.
  explicit RipInstance(std::vector<std::vector<std::int64_t>> rows);

  std::size_t size() const noexcept { return p_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return p_[i][j]; }
  std::int64_t trace() const noexcept;

 private:
  std::vector<std::vector<std::int64_t>> p_;
};

struct RepInstance {
  std::shared_ptr<const Graph> graph;
  std::vector<std::vector<Rational>> exact;  // the target, entry by entry
  PatternMatrix target;                      // the same target as doubles
};

/// Maps an intersection-pattern instance to an endorsement-pattern instance:
/// the complete graph on tr(P) vertices with m_ii = p_ii / tr(P) and
/// m_ij = p_ij / p_ii. P is an intersection pattern iff the target is
/// realizable on that graph. Throws ValidationError when some p_ii is 0.
RepInstance rip_to_rep(const RipInstance& p);

}  // namespace endorsim
