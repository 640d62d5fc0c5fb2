#include "khoskein/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace khoskein {
namespace {

// Row-echelon worker. Columns are processed left to right; within a column
// the pivot row is the candidate with the smallest numerator+denominator bit
// length, which keeps intermediate fractions small at this scale.
struct Echelon {
  std::vector<std::map<int, Rat>> rows;
  std::vector<int> pivot_col;        // per pivot, in elimination order
  std::vector<int> pivot_row_of_col; // -1 when the column is free
  int n_cols = 0;

  int rank() const { return static_cast<int>(pivot_col.size()); }
};

Echelon reduce(std::vector<std::map<int, Rat>> rows, int n_cols) {
  Echelon e;
  e.n_cols = n_cols;
  e.pivot_row_of_col.assign(n_cols, -1);
  const int n_rows = static_cast<int>(rows.size());
  int next_pivot_row = 0;
  for (int col = 0; col < n_cols && next_pivot_row < n_rows; ++col) {
    int best = -1;
    std::size_t best_size = 0;
    for (int r = next_pivot_row; r < n_rows; ++r) {
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      std::size_t sz = bit_size(it->second);
      if (best < 0 || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best < 0) continue;
    std::swap(rows[next_pivot_row], rows[best]);
    auto& prow = rows[next_pivot_row];
    Rat inv = Rat(1) / prow.at(col);
    if (inv != 1)
      for (auto& [c, v] : prow) v *= inv;
    for (int r = 0; r < n_rows; ++r) {
      if (r == next_pivot_row) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Rat factor = it->second;
      for (const auto& [c, v] : prow) {
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          Rat nv = -factor * v;
          if (!khoskein::is_zero(nv)) rows[r].emplace(c, nv);
        } else {
          jt->second -= factor * v;
          if (is_zero(jt->second)) rows[r].erase(jt);
        }
      }
    }
    e.pivot_col.push_back(col);
    e.pivot_row_of_col[col] = next_pivot_row;
    ++next_pivot_row;
  }
  e.rows = std::move(rows);
  return e;
}

Echelon reduce(const RatMatrix& m) {
  std::vector<std::map<int, Rat>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return reduce(std::move(rows), m.cols());
}

}  // namespace

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

Rat RatMatrix::at(int r, int c) const {
  auto it = row_[r].find(c);
  return it == row_[r].end() ? Rat(0) : it->second;
}

void RatMatrix::set(int r, int c, const Rat& v) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (khoskein::is_zero(v))
    row_[r].erase(c);
  else
    row_[r][c] = v;
}

void RatMatrix::add_at(int r, int c, const Rat& v) {
  if (khoskein::is_zero(v)) return;
  auto it = row_[r].find(c);
  if (it == row_[r].end()) {
    row_[r].emplace(c, v);
  } else {
    it->second += v;
    if (khoskein::is_zero(it->second)) row_[r].erase(it);
  }
}

bool RatMatrix::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row_) n += r.size();
  return n;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  assert(cols_ == o.rows_);
  RatMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : row_[r])
      for (const auto& [c, w] : o.row_[k]) out.add_at(r, c, v * w);
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMatrix out = *this;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : o.row_[r]) out.add_at(r, c, v);
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMatrix out = *this;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : o.row_[r]) out.add_at(r, c, -v);
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  std::vector<Rat> out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, w] : row_[r]) out[r] += w * v[c];
  return out;
}

RatMatrix RatMatrix::hconcat(const RatMatrix& o) const {
  assert(rows_ == o.rows_);
  RatMatrix out(rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r) {
    out.row_[r] = row_[r];
    for (const auto& [c, v] : o.row_[r]) out.row_[r].emplace(cols_ + c, v);
  }
  return out;
}

RatMatrix RatMatrix::select_columns(const std::vector<int>& idx) const {
  RatMatrix out(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < static_cast<int>(idx.size()); ++j)
    for (int r = 0; r < rows_; ++r) {
      auto it = row_[r].find(idx[j]);
      if (it != row_[r].end()) out.row_[r].emplace(j, it->second);
    }
  return out;
}

std::vector<Rat> RatMatrix::column(int c) const {
  std::vector<Rat> out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r) {
    auto it = row_[r].find(c);
    if (it != row_[r].end()) out[r] = it->second;
  }
  return out;
}

RatMatrix RatMatrix::from_columns(int rows, const std::vector<std::vector<Rat>>& cols) {
  RatMatrix out(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    assert(static_cast<int>(cols[j].size()) == rows);
    for (int r = 0; r < rows; ++r)
      if (!khoskein::is_zero(cols[j][r])) out.row_[r].emplace(j, cols[j][r]);
  }
  return out;
}

int RatMatrix::rank() const { return reduce(*this).rank(); }

RatMatrix RatMatrix::kernel_basis() const {
  Echelon e = reduce(*this);
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (e.pivot_row_of_col[c] < 0) free_cols.push_back(c);
  RatMatrix out(cols_, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    int f = free_cols[j];
    out.set(f, j, Rat(1));
    for (int k = 0; k < e.rank(); ++k) {
      int p = e.pivot_col[k];
      auto it = e.rows[k].find(f);
      if (it != e.rows[k].end()) out.set(p, j, -it->second);
    }
  }
  return out;
}

RatMatrix RatMatrix::image_basis() const {
  Echelon e = reduce(*this);
  return select_columns(e.pivot_col);
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
  auto X = solve_matrix(from_columns(rows_, {b}));
  if (!X) return std::nullopt;
  return X->column(0);
}

std::optional<RatMatrix> RatMatrix::solve_matrix(const RatMatrix& b) const {
  assert(b.rows() == rows_);
  Echelon e = reduce(hconcat(b));
  RatMatrix x(cols_, b.cols());
  for (int k = 0; k < e.rank(); ++k) {
    int p = e.pivot_col[k];
    if (p >= cols_) return std::nullopt;  // inconsistent system
    for (auto it = e.rows[k].lower_bound(cols_); it != e.rows[k].end(); ++it)
      x.set(p, it->first - cols_, it->second);
  }
  return x;
}

std::vector<int> RatMatrix::independent_extension(const RatMatrix& base, const RatMatrix& cand) {
  assert(base.rows() == cand.rows());
  Echelon e = reduce(base.hconcat(cand));
  std::vector<int> out;
  for (int p : e.pivot_col)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

}  // namespace khoskein
