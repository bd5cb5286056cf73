#pragma once

// Verification machinery that is independent of the Smith pipeline: it only
// uses the scalar domains, dense matrices and the column Hermite form.

#include <cstdint>
#include <optional>
#include <vector>

#include "matdiv/hermite.hpp"

namespace matdiv {

/// Canonical description of the column module generated by a block: the
/// Hermite form with zero columns dropped. Equal modules compare equal.
template <EuclideanDomain T>
struct ColumnModule {
    Matrix<T> canonical;

    friend bool operator==(const ColumnModule&, const ColumnModule&) = default;
};

/// Some X with B*X == A, found column by column through hermite_col(B).
template <EuclideanDomain T>
std::optional<Matrix<T>> hnf_solve(const Matrix<T>& b, const Matrix<T>& a);

template <EuclideanDomain T>
ColumnModule<T> column_module(const std::vector<Matrix<T>>& generators);

inline constexpr std::uint64_t kExhaustiveCeiling = 100'000;

/// Every X with entries in [-bound, bound] and B*X == A. Throws TooLarge
/// when (2*bound + 1)^(n*n) exceeds `ceiling`.
std::vector<Matrix<Integer>> exhaustive_solutions(const Matrix<Integer>& b, const Matrix<Integer>& a,
                                                  unsigned bound, std::uint64_t ceiling = kExhaustiveCeiling);

extern template std::optional<Matrix<Integer>> hnf_solve(const Matrix<Integer>&, const Matrix<Integer>&);
extern template std::optional<Matrix<PolyQ>> hnf_solve(const Matrix<PolyQ>&, const Matrix<PolyQ>&);
extern template ColumnModule<Integer> column_module(const std::vector<Matrix<Integer>>&);
extern template ColumnModule<PolyQ> column_module(const std::vector<Matrix<PolyQ>>&);

} // namespace matdiv
