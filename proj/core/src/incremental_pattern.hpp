#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "endorsim/endorsement_set.hpp"
#include "endorsim/pattern.hpp"

namespace endorsim::detail {

// Tracks, for a configuration under construction, the endorsed-set sizes and
// pairwise co-endorsement counts together with the weighted squared error of
// every matrix entry against a target.
//
// Only membership flips (a vertex becoming endorsed, or ceasing to be, for one
// skill) change the pattern matrix. A flip on skill i touches entry (i, i),
// row i, and column entries (j, i) for the skills j the vertex holds, so
// evaluating one costs O(n_s).
class IncrementalPattern {
 public:
  IncrementalPattern(const EndorsementSet& config, const PatternMatrix& target, const WeightMatrix& weights);

  std::size_t skills() const noexcept { return n_; }
  double rho() const noexcept { return rho_; }
  double delta() const noexcept { return n_ == 0 ? 0.0 : rho_ / static_cast<double>(n_ * n_); }

  bool member(Skill s, Vertex v) const noexcept { return member_[static_cast<std::size_t>(v) * n_ + s] != 0; }

  // Objective after flipping v's membership in skill s.
  double rho_if_flipped(Skill s, Vertex v) const;

  // Commits a flip previously evaluated with rho_if_flipped.
  void flip(Skill s, Vertex v);

  // Recomputes every error term from the integer counts.
  void resync();

  PatternMatrix current() const;

 private:
  double entry(std::size_t i, std::size_t j) const noexcept;
  double term(std::size_t i, std::size_t j, double value) const noexcept {
    const double t = w_(i, j) * (target_(i, j) - value);
    return t * t;
  }

  std::size_t n_;
  std::size_t vertices_;
  SquareMatrix target_;
  SquareMatrix w_;
  std::vector<std::uint8_t> member_;       // vertex-major, n_ flags per vertex
  std::vector<std::int64_t> endorsed_;     // per skill
  std::vector<std::int64_t> both_;         // n_ x n_, symmetric
  SquareMatrix terms_;
  double rho_ = 0.0;
  std::uint32_t flips_since_resync_ = 0;
};

}  // namespace endorsim::detail
