#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matdiv/domains.hpp"
#include "matdiv/matrix.hpp"

namespace matdiv {

/// P * A * Q == E with E = diag(inv_factors, 0, ..., 0), equivalently
/// A == Pinv * E * Qinv. The invariant factors are canonical, nonzero and
/// form a divisibility chain.
template <EuclideanDomain T>
struct SmithDecomposition {
    Matrix<T> P;
    Matrix<T> Pinv;
    std::vector<T> inv_factors;
    Matrix<T> Q;
    Matrix<T> Qinv;
    std::size_t rank = 0;

    /// The Smith form, shaped like the decomposed matrix.
    Matrix<T> E() const { return Matrix<T>::diagonal(inv_factors, P.rows(), Q.rows()); }
};

/// Smith normal form with row transforms (P, Pinv) and column transforms
/// (Q, Qinv). Deterministic: the same input always yields the same output.
/// Works for rectangular input as well as square.
template <EuclideanDomain T>
SmithDecomposition<T> smith(const Matrix<T>& a);

/// Nonzero invariant factors of any matrix, canonical, in divisibility order.
template <EuclideanDomain T>
std::vector<T> invariant_factors(const Matrix<T>& a);

/// Checks every SmithDecomposition invariant against the source matrix.
/// Returns a description of the first violation, or nothing.
template <EuclideanDomain T>
std::optional<std::string> smith_violation(const Matrix<T>& a, const SmithDecomposition<T>& sd);

/// Called after every smith() with the input and its decomposition; used by
/// audits that want to see each decomposition the library produces. Pass an
/// empty function to remove. Not synchronized.
template <EuclideanDomain T>
using SmithObserver = std::function<void(const Matrix<T>&, const SmithDecomposition<T>&)>;

template <EuclideanDomain T>
void set_smith_observer(SmithObserver<T> observer);

extern template SmithDecomposition<Integer> smith(const Matrix<Integer>&);
extern template SmithDecomposition<PolyQ> smith(const Matrix<PolyQ>&);
extern template std::vector<Integer> invariant_factors(const Matrix<Integer>&);
extern template std::vector<PolyQ> invariant_factors(const Matrix<PolyQ>&);
extern template std::optional<std::string> smith_violation(const Matrix<Integer>&, const SmithDecomposition<Integer>&);
extern template std::optional<std::string> smith_violation(const Matrix<PolyQ>&, const SmithDecomposition<PolyQ>&);
extern template void set_smith_observer(SmithObserver<Integer>);
extern template void set_smith_observer(SmithObserver<PolyQ>);

} // namespace matdiv
