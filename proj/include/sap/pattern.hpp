#pragma once

// Sign patterns over {+,-,0}, the real matrices they stand for, and the
// structural relations between patterns (super/subpattern, irreducibility).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sap {

enum class Sign { Plus, Minus, Zero };

char to_char(Sign s);
Sign sign_from_char(char c);  // throws InvalidInput
/// +1, -1 or 0.
int to_int(Sign s);

/// Zero-based (row, col).
struct Position {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Dense row-major real matrix. Entries are expected to be finite; sign
/// classification rejects NaN/Inf.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  bool all_finite() const;
  double norm_inf() const;  // max row sum
  double max_abs() const;
  RealMatrix scaled(double c) const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(std::size_t rows, std::size_t cols, Sign fill = Sign::Zero);
  /// Rows given as strings over {+,-,0}, e.g. {"+-", "+-"}.
  static SignPattern from_rows(std::initializer_list<std::string_view> rows);
  static SignPattern from_rows(std::span<const std::string> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Sign operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Sign at(Position p) const { return (*this)(p.row, p.col); }

  /// Copy with one entry replaced.
  SignPattern with_entry(Position p, Sign s) const;
  std::vector<Position> nonzero_positions() const;
  std::vector<std::string> row_strings() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Sign> entries_;
};

/// Exact comparison against zero; non-finite input throws InvalidInput.
Sign sign_of(double x);

bool member_of_class(const RealMatrix& a, const SignPattern& s);

/// Membership for iterative-solver output: required nonzeros must exceed eps
/// in magnitude with the right sign, required zeros must be within eps.
bool member_of_class_tol(const RealMatrix& a, const SignPattern& s, double eps = 1e-12);

bool is_superpattern(const SignPattern& u, const SignPattern& s);

/// One pattern per nonzero of s, with that entry zeroed, in row-major order.
std::vector<std::pair<Position, SignPattern>> one_entry_subpatterns(const SignPattern& s);

std::size_t nonzero_count(const SignPattern& s);

/// Strongly connected components of the digraph with arc i->j whenever
/// s(i,j) != 0. Components come out sinks first, which is the diagonal block
/// order of the block lower triangular form.
std::vector<std::vector<std::size_t>> strongly_connected_components(const SignPattern& s);

bool is_irreducible(const SignPattern& s);

}  // namespace sap
