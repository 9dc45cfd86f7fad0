#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "endorsim/endorsement_set.hpp"
#include "endorsim/graph.hpp"

namespace endorsim {

// Dense row-major n x n matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  // Throws DimensionError unless every row has rows.size() entries.
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Skill occurrence / co-occurrence matrix.
///
/// m_ii is the fraction of vertices endorsed for skill i; m_ij (i != j) is the
/// number endorsed for both i and j over the number endorsed for i, or 0 when
/// nobody is endorsed for i. Construction checks entries are finite and
/// nonnegative with diagonal <= 1. Off-diagonal entries above 1 are accepted
/// (such targets are reported by sanity_violations()).
class PatternMatrix {
 public:
  PatternMatrix() = default;
  explicit PatternMatrix(SquareMatrix m);

  static PatternMatrix zero(std::size_t n) { return PatternMatrix(SquareMatrix(n)); }

  std::size_t size() const noexcept { return m_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  const SquareMatrix& matrix() const noexcept { return m_; }

  // Human-readable reasons the matrix cannot arise from any configuration.
  std::vector<std::string> sanity_violations() const;

  friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;

 private:
  SquareMatrix m_;
};

// Strictly positive elementwise weights.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(SquareMatrix w);

  static WeightMatrix uniform(std::size_t n, double value = 1.0);
  static WeightMatrix diagonal_emphasis(std::size_t n, double diagonal = 10.0, double off_diagonal = 1.0);

  std::size_t size() const noexcept { return w_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return w_(i, j); }
  const SquareMatrix& matrix() const noexcept { return w_; }

 private:
  SquareMatrix w_;
};

inline constexpr double kDefaultDiagonalWeight = 10.0;
inline constexpr double kDefaultOffDiagonalWeight = 1.0;

PatternMatrix compute_pattern_matrix(const EndorsementSet& endorsements);

/// Sum over (i, j) of (w_ij * (m_ij - m'_ij))^2, the squared Frobenius norm of
/// the Hadamard-weighted difference. Throws DimensionError on size mismatch.
double rho(const PatternMatrix& m, const PatternMatrix& other, const WeightMatrix& w);

/// rho / n^2.
double delta(const PatternMatrix& m, const PatternMatrix& other, const WeightMatrix& w);

// Row-major CSV, one matrix row per line, shortest round-trip decimals.
std::string matrix_to_csv(const SquareMatrix& m);
SquareMatrix matrix_from_csv(std::string_view text);  // throws ParseError / DimensionError

SquareMatrix read_matrix_csv(const std::filesystem::path& path);
void write_matrix_csv(const std::filesystem::path& path, const SquareMatrix& m);

}  // namespace endorsim
