#include "endorsim/pattern.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "endorsim/error.hpp"
#include "endorsim/io.hpp"

namespace endorsim {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw DimensionError("matrix is not square: row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PatternMatrix::PatternMatrix(SquareMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    for (std::size_t j = 0; j < m_.size(); ++j) {
      const double x = m_(i, j);
      if (!std::isfinite(x) || x < 0.0) {
        throw ValidationError("pattern entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") must be finite and nonnegative");
      }
    }
    if (m_(i, i) > 1.0) {
      throw ValidationError("pattern diagonal entry " + std::to_string(i) + " exceeds 1");
    }
  }
}

std::vector<std::string> PatternMatrix::sanity_violations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j) continue;
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (m_(i, j) > 1.0) out.push_back("co-endorsement ratio " + at + " exceeds 1");
      if (m_(i, i) == 0.0 && m_(i, j) > 0.0) {
        out.push_back("ratio " + at + " is positive but nobody is endorsed for skill " + std::to_string(i));
      }
    }
  }
  return out;
}

WeightMatrix::WeightMatrix(SquareMatrix w) : w_(std::move(w)) {
  for (double x : w_.data()) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("weights must be finite and strictly positive");
  }
}

WeightMatrix WeightMatrix::uniform(std::size_t n, double value) { return WeightMatrix(SquareMatrix(n, value)); }

WeightMatrix WeightMatrix::diagonal_emphasis(std::size_t n, double diagonal, double off_diagonal) {
  SquareMatrix w(n, off_diagonal);
  for (std::size_t i = 0; i < n; ++i) w(i, i) = diagonal;
  return WeightMatrix(std::move(w));
}

PatternMatrix compute_pattern_matrix(const EndorsementSet& endorsements) {
  const std::size_t n = endorsements.skill_count();
  const std::size_t vertices = endorsements.base().vertex_count();
  std::vector<std::size_t> endorsed(n, 0);
  std::vector<std::size_t> both(n * n, 0);
  std::vector<Skill> skills_of_v;
  for (Vertex v = 0; v < vertices; ++v) {
    skills_of_v.clear();
    for (Skill s = 0; s < n; ++s) {
      if (endorsements.endorsed(s, v)) skills_of_v.push_back(s);
    }
    for (Skill a : skills_of_v) {
      ++endorsed[a];
      for (Skill b : skills_of_v) {
        if (a != b) ++both[a * n + b];
      }
    }
  }
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = vertices == 0 ? 0.0 : static_cast<double>(endorsed[i]) / static_cast<double>(vertices);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      m(i, j) = endorsed[i] == 0 ? 0.0 : static_cast<double>(both[i * n + j]) / static_cast<double>(endorsed[i]);
    }
  }
  return PatternMatrix(std::move(m));
}

double rho(const PatternMatrix& m, const PatternMatrix& other, const WeightMatrix& w) {
  const std::size_t n = m.size();
  if (other.size() != n || w.size() != n) {
    throw DimensionError("distance needs matrices of equal size (got " + std::to_string(n) + ", " +
                         std::to_string(other.size()) + ", weights " + std::to_string(w.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double t = w(i, j) * (m(i, j) - other(i, j));
      sum += t * t;
    }
  }
  return sum;
}

double delta(const PatternMatrix& m, const PatternMatrix& other, const WeightMatrix& w) {
  const double r = rho(m, other, w);
  const double n = static_cast<double>(m.size());
  return m.size() == 0 ? 0.0 : r / (n * n);
}

std::string matrix_to_csv(const SquareMatrix& m) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      auto r = std::to_chars(buf, buf + sizeof buf, m(i, j));
      out.append(buf, r.ptr);
    }
    out += '\n';
  }
  return out;
}

SquareMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    for (;;) {
      const std::size_t comma = line.find(',');
      std::string_view cell = line.substr(0, comma);
      while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
      while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError(line_no, "malformed matrix entry '" + std::string(cell) + "'");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return SquareMatrix::from_rows(rows);
}

SquareMatrix read_matrix_csv(const std::filesystem::path& path) {
  return matrix_from_csv(read_text_file(path));
}

void write_matrix_csv(const std::filesystem::path& path, const SquareMatrix& m) {
  write_text_file_atomic(path, matrix_to_csv(m));
}

}  // namespace endorsim
