#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "matdiv/smith.hpp"

namespace matdiv {

/// Solvability of B*X = A decided from fixed Smith decompositions
/// P*A*Q = E (rank k) and V*B*U = Phi (rank t).
///
/// With L = V * Pinv the equation is equivalent to Phi * S = L * E for
/// S = Uinv * X * Q. It is solvable iff phi_i | l_ij * eps_j for i < t,
/// j < k, and l_ij = 0 for i >= t, j < k.
template <EuclideanDomain T>
struct SolvabilityCertificate {
    SmithDecomposition<T> snfA;
    SmithDecomposition<T> snfB;
    Matrix<T> L;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    bool solvable = false;
    /// First (row, col) cell, 0-based, that breaks the pattern when unsolvable.
    std::optional<std::pair<std::size_t, std::size_t>> failing_cell;

    const std::vector<T>& eps() const { return snfA.inv_factors; }
    const std::vector<T>& phi() const { return snfB.inv_factors; }
    const Matrix<T>& U() const { return snfB.Q; }
    const Matrix<T>& Uinv() const { return snfB.Qinv; }
};

/// All solutions are U * [[M1, 0], [M2, 0], [T3, T4]] * Qinv. core holds
/// [M1; M2] (t x k); the bottom (n - t) rows are free.
template <EuclideanDomain T>
struct SolutionSet {
    Matrix<T> core;
    Matrix<T> U;
    Matrix<T> Uinv;
    Matrix<T> Q;
    Matrix<T> Qinv;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;

    Matrix<T> M1() const { return block_extract(core, 0, 0, k, k); }
    Matrix<T> M2() const { return block_extract(core, k, 0, t - k, k); }
    /// [M1 0; M2 0], the fixed top t rows of S.
    Matrix<T> fixed_rows() const { return block_compose<T>({{core, Matrix<T>(t, n - k)}}); }
};

/// The free bottom block [T3 T4] of S: T3 is (n-t) x t, T4 is (n-t) x (n-t).
template <EuclideanDomain T>
struct SolutionParameter {
    Matrix<T> T3;
    Matrix<T> T4;
};

/// D is (n-t) x n; the annihilator element is U * [0; D].
template <EuclideanDomain T>
struct AnnihilatorParameter {
    Matrix<T> D;
};

template <EuclideanDomain T>
SolvabilityCertificate<T> certify(const Matrix<T>& b, const Matrix<T>& a);

/// Same test against caller-supplied decompositions of A and B (any valid
/// pair gives the same verdict).
template <EuclideanDomain T>
SolvabilityCertificate<T> certify_with(SmithDecomposition<T> snfA, SmithDecomposition<T> snfB);

/// invariant_factors(B) == invariant_factors([A B]).
template <EuclideanDomain T>
bool check_solvable_augmented(const Matrix<T>& b, const Matrix<T>& a);

/// Throws NotSolvable for an unsolvable certificate.
template <EuclideanDomain T>
SolutionSet<T> build_solution_set(const SolvabilityCertificate<T>& cert);

/// U * [M1 0; M2 0; 0 0] * Qinv (the zero free block).
template <EuclideanDomain T>
Matrix<T> particular_solution(const SolutionSet<T>& ss);

template <EuclideanDomain T>
Matrix<T> general_solution(const SolutionSet<T>& ss, const SolutionParameter<T>& p);

/// Inverse of general_solution: the parameter of X if X lies in the
/// solution coset, nothing otherwise.
template <EuclideanDomain T>
std::optional<SolutionParameter<T>> recover_parameter(const SolutionSet<T>& ss, const Matrix<T>& x);

/// Zero parameter of the right shape.
template <EuclideanDomain T>
SolutionParameter<T> zero_parameter(const SolutionSet<T>& ss);

template <EuclideanDomain T>
Matrix<T> annihilator_element(const SmithDecomposition<T>& snfB, const AnnihilatorParameter<T>& d);

/// Columns t.. of U; they generate Ann_r(B) as a column module.
template <EuclideanDomain T>
Matrix<T> annihilator_generators(const SmithDecomposition<T>& snfB);

#define MATDIV_SOLVER_EXTERN(T)                                                                          \
    extern template SolvabilityCertificate<T> certify(const Matrix<T>&, const Matrix<T>&);               \
    extern template SolvabilityCertificate<T> certify_with(SmithDecomposition<T>, SmithDecomposition<T>); \
    extern template bool check_solvable_augmented(const Matrix<T>&, const Matrix<T>&);                   \
    extern template SolutionSet<T> build_solution_set(const SolvabilityCertificate<T>&);                 \
    extern template Matrix<T> particular_solution(const SolutionSet<T>&);                                \
    extern template Matrix<T> general_solution(const SolutionSet<T>&, const SolutionParameter<T>&);      \
    extern template std::optional<SolutionParameter<T>> recover_parameter(const SolutionSet<T>&,         \
                                                                          const Matrix<T>&);             \
    extern template SolutionParameter<T> zero_parameter(const SolutionSet<T>&);                          \
    extern template Matrix<T> annihilator_element(const SmithDecomposition<T>&,                          \
                                                  const AnnihilatorParameter<T>&);                       \
    extern template Matrix<T> annihilator_generators(const SmithDecomposition<T>&);

MATDIV_SOLVER_EXTERN(Integer)
MATDIV_SOLVER_EXTERN(PolyQ)
#undef MATDIV_SOLVER_EXTERN

} // namespace matdiv
