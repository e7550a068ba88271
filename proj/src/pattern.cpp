#include "sap/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sap/errors.hpp"

namespace sap {

char to_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: break;
  }
  throw Error(ErrorKind::InvalidInput, std::string("not a sign character: '") + c + "'");
}

int to_int(Sign s) {
  switch (s) {
    case Sign::Plus: return 1;
    case Sign::Minus: return -1;
    case Sign::Zero: return 0;
  }
  return 0;
}

// ---------------------------------------------------------------------------

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionError, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool RealMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

double RealMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (double x : row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double RealMatrix::max_abs() const {
  double best = 0.0;
  for (double x : data_) best = std::max(best, std::abs(x));
  return best;
}

RealMatrix RealMatrix::scaled(double c) const {
  RealMatrix out = *this;
  for (double& x : out.data_) x *= c;
  return out;
}

// ---------------------------------------------------------------------------

SignPattern::SignPattern(std::size_t rows, std::size_t cols, Sign fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

SignPattern SignPattern::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_rows(copy);
}

SignPattern SignPattern::from_rows(std::span<const std::string> rows) {
  SignPattern out;
  out.rows_ = rows.size();
  out.cols_ = rows.empty() ? 0 : rows.front().size();
  out.entries_.reserve(out.rows_ * out.cols_);
  for (const auto& r : rows) {
    if (r.size() != out.cols_) throw Error(ErrorKind::DimensionError, "ragged pattern rows");
    for (char c : r) out.entries_.push_back(sign_from_char(c));
  }
  return out;
}

SignPattern SignPattern::with_entry(Position p, Sign s) const {
  if (p.row >= rows_ || p.col >= cols_) throw Error(ErrorKind::InvalidInput, "position out of range");
  SignPattern out = *this;
  out.entries_[p.row * cols_ + p.col] = s;
  return out;
}

std::vector<Position> SignPattern::nonzero_positions() const {
  std::vector<Position> out;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Sign::Zero) out.push_back({i, j});
  return out;
}

std::vector<std::string> SignPattern::row_strings() const {
  std::vector<std::string> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_char((*this)(i, j)));
  return out;
}

// ---------------------------------------------------------------------------

Sign sign_of(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "non-finite value has no sign");
  if (x > 0.0) return Sign::Plus;
  if (x < 0.0) return Sign::Minus;
  return Sign::Zero;
}

namespace {

void require_same_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
  if (r1 != r2 || c1 != c2) {
    throw Error(ErrorKind::DimensionError, std::to_string(r1) + "x" + std::to_string(c1) + " vs " +
                                               std::to_string(r2) + "x" + std::to_string(c2));
  }
}

}  // namespace

bool member_of_class(const RealMatrix& a, const SignPattern& s) {
  require_same_shape(a.rows(), a.cols(), s.rows(), s.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sign_of(a(i, j)) != s(i, j)) return false;
  return true;
}

bool member_of_class_tol(const RealMatrix& a, const SignPattern& s, double eps) {
  require_same_shape(a.rows(), a.cols(), s.rows(), s.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double x = a(i, j);
      if (!std::isfinite(x)) return false;
      if (s(i, j) == Sign::Zero) {
        if (std::abs(x) > eps) return false;
      } else if (std::abs(x) <= eps || sign_of(x) != s(i, j)) {
        return false;
      }
    }
  }
  return true;
}

bool is_superpattern(const SignPattern& u, const SignPattern& s) {
  require_same_shape(u.rows(), u.cols(), s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s(i, j) != Sign::Zero && u(i, j) != s(i, j)) return false;
  return true;
}

std::vector<std::pair<Position, SignPattern>> one_entry_subpatterns(const SignPattern& s) {
  std::vector<std::pair<Position, SignPattern>> out;
  for (Position p : s.nonzero_positions()) out.emplace_back(p, s.with_entry(p, Sign::Zero));
  return out;
}

std::size_t nonzero_count(const SignPattern& s) { return s.nonzero_positions().size(); }

std::vector<std::vector<std::size_t>> strongly_connected_components(const SignPattern& s) {
  if (!s.square()) throw Error(ErrorKind::DimensionError, "digraph of a non-square pattern");
  const std::size_t n = s.rows();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // Tarjan; n is small so recursion depth is not a concern.
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (s(v, w) == Sign::Zero) continue;
      if (index[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == kUnvisited) visit(v);
  return components;
}

bool is_irreducible(const SignPattern& s) {
  if (s.rows() == 0) return false;
  return strongly_connected_components(s).size() == 1;
}

}  // namespace sap
