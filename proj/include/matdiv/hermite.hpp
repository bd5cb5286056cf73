#pragma once

#include <cstddef>
#include <vector>

#include "matdiv/domains.hpp"
#include "matdiv/matrix.hpp"

namespace matdiv {

/// Column-style Hermite form: A * W == H with W unimodular.
///
/// H is lower echelon by columns. Column c < rank has its first nonzero
/// entry (the pivot) in row pivot_rows[c], strictly increasing in c; the
/// pivot is canonical and every entry left of it in the same row is reduced
/// modulo it (integers: in [0, pivot); polynomials: lower degree). Columns
/// from rank on are zero. H depends only on the column module of A.
template <EuclideanDomain T>
struct HermiteDecomposition {
    Matrix<T> H;
    Matrix<T> W;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

template <EuclideanDomain T>
HermiteDecomposition<T> hermite_col(const Matrix<T>& a);

extern template HermiteDecomposition<Integer> hermite_col(const Matrix<Integer>&);
extern template HermiteDecomposition<PolyQ> hermite_col(const Matrix<PolyQ>&);

} // namespace matdiv
