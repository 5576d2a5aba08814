#pragma once

// Dense Gaussian elimination over a runtime finite field.

#include <cstddef>
#include <vector>

#include "psl3/gf.hpp"

namespace psl3::linalg {

using gf::Code;
using gf::Field;
using Row = std::vector<Code>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Field const& f, std::vector<Row>& rows, std::size_t cols);

std::size_t rank(Field const& f, std::vector<Row> rows, std::size_t cols);

/// Basis of { v : rows * v = 0 }, one vector per free column.
std::vector<Row> nullspace(Field const& f, std::vector<Row> rows, std::size_t cols);

/// Basis of the intersection of two subspaces given by spanning sets.
std::vector<Row> intersect_spans(Field const& f, std::vector<Row> const& a,
                                 std::vector<Row> const& b, std::size_t dim);

/// Every vector of span(basis) whose first nonzero coordinate is 1, i.e. one
/// representative per projective point. Stops after `limit` vectors.
std::vector<Row> projective_points(Field const& f, std::vector<Row> const& basis,
                                   std::size_t limit = static_cast<std::size_t>(-1));

/// Scale v so its first nonzero coordinate is 1. Zero vectors are returned as is.
Row normalize(Field const& f, Row v);

}  // namespace psl3::linalg
