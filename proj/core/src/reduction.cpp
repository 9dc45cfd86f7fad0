#include "endorsim/reduction.hpp"

#include <numeric>
#include <string>

#include "endorsim/error.hpp"

namespace endorsim {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw ValidationError("rational must have num >= 0 and den > 0");
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

RipInstance::RipInstance(std::vector<std::vector<std::int64_t>> rows) : p_(std::move(rows)) {
  const std::size_t n = p_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p_[i].size() != n) throw DimensionError("intersection matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p_[i][j] < 0) throw ValidationError("intersection sizes must be nonnegative");
      if (p_[i][j] != p_[j][i]) {
        throw ValidationError("intersection matrix is not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
}

std::int64_t RipInstance::trace() const noexcept {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) t += p_[i][i];
  return t;
}

RepInstance rip_to_rep(const RipInstance& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p(i, i) == 0) {
      throw ValidationError("set " + std::to_string(i) +
                            " has size 0: the ratio p_ij / p_ii is undefined, instance rejected");
    }
  }
  const std::int64_t order = p.trace();
  if (order > 0xffffffffll) throw ValidationError("trace too large for a vertex id range");

  std::vector<std::vector<Rational>> exact(n, std::vector<Rational>(n));
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      exact[i][j] = i == j ? Rational::of(p(i, i), order) : Rational::of(p(i, j), p(i, i));
      m(i, j) = exact[i][j].to_double();
    }
  }
  auto graph = std::make_shared<const Graph>(Graph::complete(static_cast<std::size_t>(order)));
  return RepInstance{std::move(graph), std::move(exact), PatternMatrix(std::move(m))};
}

}  // namespace endorsim
