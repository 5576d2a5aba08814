#include "psl3/linalg.hpp"

#include <algorithm>

namespace psl3::linalg {

std::vector<std::size_t> rref(Field const& f, std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Code s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Code factor = f.neg(rows[i][c]);
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = f.add(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(Field const& f, std::vector<Row> rows, std::size_t cols) {
  return rref(f, rows, cols).size();
}

std::vector<Row> nullspace(Field const& f, std::vector<Row> rows, std::size_t cols) {
  auto pivots = rref(f, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Row> intersect_spans(Field const& f, std::vector<Row> const& a,
                                 std::vector<Row> const& b, std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0; columns are the spanning vectors.
  std::size_t n = a.size() + b.size();
  std::vector<Row> sys(dim, Row(n, 0));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < a.size(); ++i) sys[k][i] = a[i][k];
    for (std::size_t j = 0; j < b.size(); ++j) sys[k][a.size() + j] = f.neg(b[j][k]);
  }
  std::vector<Row> out;
  for (auto const& coef : nullspace(f, sys, n)) {
    Row v(dim, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < dim; ++k) v[k] = f.add(v[k], f.mul(coef[i], a[i][k]));
    out.push_back(std::move(v));
  }
  rref(f, out, dim);
  return out;
}

Row normalize(Field const& f, Row v) {
  for (auto x : v) {
    if (x != 0) {
      Code s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      break;
    }
  }
  return v;
}

std::vector<Row> projective_points(Field const& f, std::vector<Row> const& basis, std::size_t limit) {
  std::vector<Row> b = basis;
  if (b.empty()) return {};
  std::size_t dim = b.front().size();
  rref(f, b, dim);
  std::vector<Row> out;
  std::size_t k = b.size();
  // Representatives: the leading nonzero coefficient (in rref order) is 1.
  for (std::size_t lead = 0; lead < k && out.size() < limit; ++lead) {
    std::size_t rest = k - lead - 1;
    std::vector<Code> coef(rest, 0);
    while (out.size() < limit) {
      Row v = b[lead];
      for (std::size_t i = 0; i < rest; ++i) {
        if (coef[i] == 0) continue;
        for (std::size_t c = 0; c < dim; ++c) v[c] = f.add(v[c], f.mul(coef[i], b[lead + 1 + i][c]));
      }
      out.push_back(normalize(f, std::move(v)));
      std::size_t i = 0;
      while (i < rest && ++coef[i] == f.q()) coef[i++] = 0;
      if (i == rest) break;
    }
  }
  return out;
}

}  // namespace psl3::linalg
