#pragma once

#include <map>
#include <optional>
#include <vector>

#include "khoskein/rational.hpp"

namespace khoskein {

// Sparse matrix of exact rationals, stored row-wise. Zero entries are never
// kept. Values are immutable in practice: operations return fresh matrices.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat at(int r, int c) const;
  void set(int r, int c, const Rat& v);
  void add_at(int r, int c, const Rat& v);

  const std::map<int, Rat>& row(int r) const { return row_[r]; }

  bool is_zero() const;
  std::size_t nonzeros() const;

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  RatMatrix hconcat(const RatMatrix& o) const;
  RatMatrix select_columns(const std::vector<int>& idx) const;
  std::vector<Rat> column(int c) const;
  static RatMatrix from_columns(int rows, const std::vector<std::vector<Rat>>& cols);

  int rank() const;
  // Basis of the null space; columns ordered by ascending free column index.
  RatMatrix kernel_basis() const;
  // The pivot columns of the matrix itself, in ascending column order.
  RatMatrix image_basis() const;

  // Any solution of A x = b, free variables set to zero; nullopt if none.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  // Columnwise solve A X = B; nullopt if any column is unsolvable.
  std::optional<RatMatrix> solve_matrix(const RatMatrix& b) const;

  // Indices of `cand` columns that enlarge the column span of `base`,
  // scanning left to right.
  static std::vector<int> independent_extension(const RatMatrix& base, const RatMatrix& cand);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, Rat>> row_;
};

}  // namespace khoskein
