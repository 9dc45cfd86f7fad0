#include "incremental_pattern.hpp"

#include "endorsim/error.hpp"

namespace endorsim::detail {

namespace {
constexpr std::uint32_t kResyncInterval = 32;
}

IncrementalPattern::IncrementalPattern(const EndorsementSet& config, const PatternMatrix& target,
                                       const WeightMatrix& weights)
    : n_(config.skill_count()),
      vertices_(config.base().vertex_count()),
      target_(target.matrix()),
      w_(weights.matrix()),
      member_(vertices_ * n_, 0),
      endorsed_(n_, 0),
      both_(n_ * n_, 0),
      terms_(n_) {
  if (target.size() != n_ || weights.size() != n_) {
    throw DimensionError("target and weights must be " + std::to_string(n_) + "x" + std::to_string(n_) +
                         " to match the skill count");
  }
  for (Vertex v = 0; v < vertices_; ++v) {
    for (Skill s = 0; s < n_; ++s) {
      if (config.endorsed(s, v)) member_[static_cast<std::size_t>(v) * n_ + s] = 1;
    }
    const std::uint8_t* row = &member_[static_cast<std::size_t>(v) * n_];
    for (std::size_t a = 0; a < n_; ++a) {
      if (!row[a]) continue;
      ++endorsed_[a];
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (row[b]) {
          ++both_[a * n_ + b];
          ++both_[b * n_ + a];
        }
      }
    }
  }
  resync();
}

double IncrementalPattern::entry(std::size_t i, std::size_t j) const noexcept {
  if (i == j) return vertices_ == 0 ? 0.0 : static_cast<double>(endorsed_[i]) / static_cast<double>(vertices_);
  return endorsed_[i] == 0 ? 0.0 : static_cast<double>(both_[i * n_ + j]) / static_cast<double>(endorsed_[i]);
}

void IncrementalPattern::resync() {
  rho_ = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      terms_(i, j) = term(i, j, entry(i, j));
      rho_ += terms_(i, j);
    }
  }
  flips_since_resync_ = 0;
}

double IncrementalPattern::rho_if_flipped(Skill s, Vertex v) const {
  const std::size_t i = s;
  const std::uint8_t* row = &member_[static_cast<std::size_t>(v) * n_];
  const std::int64_t step = row[i] ? -1 : 1;
  const std::int64_t endorsed_i = endorsed_[i] + step;
  const double vertices = static_cast<double>(vertices_);

  double r = rho_ - terms_(i, i) + term(i, i, static_cast<double>(endorsed_i) / vertices);
  for (std::size_t j = 0; j < n_; ++j) {
    if (j == i) continue;
    const std::int64_t both = both_[i * n_ + j] + (row[j] ? step : 0);
    const double mij = endorsed_i == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(endorsed_i);
    r += term(i, j, mij) - terms_(i, j);
    if (row[j]) {
      // endorsed_[j] > 0 because v holds skill j.
      const double mji = static_cast<double>(both) / static_cast<double>(endorsed_[j]);
      r += term(j, i, mji) - terms_(j, i);
    }
  }
  return r;
}

void IncrementalPattern::flip(Skill s, Vertex v) {
  const std::size_t i = s;
  std::uint8_t* row = &member_[static_cast<std::size_t>(v) * n_];
  const std::int64_t step = row[i] ? -1 : 1;
  row[i] = static_cast<std::uint8_t>(!row[i]);
  endorsed_[i] += step;

  auto retarget = [this](std::size_t a, std::size_t b) {
    const double t = term(a, b, entry(a, b));
    rho_ += t - terms_(a, b);
    terms_(a, b) = t;
  };
  for (std::size_t j = 0; j < n_; ++j) {
    if (j != i && row[j]) {
      both_[i * n_ + j] += step;
      both_[j * n_ + i] += step;
      retarget(j, i);
    }
  }
  for (std::size_t j = 0; j < n_; ++j) retarget(i, j);

  if (++flips_since_resync_ >= kResyncInterval) resync();
}

PatternMatrix IncrementalPattern::current() const {
  SquareMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = entry(i, j);
  }
  return PatternMatrix(std::move(m));
}

}  // namespace endorsim::detail
