#pragma once

#include <optional>

#include "matdiv/solver.hpp"

namespace matdiv {

/// Left g.c.d. F and left l.c.m. N of all solutions of B*X = A, with the
/// projector K = U * diag(I_t, 0) * Uinv that maps every solution X to N.
template <EuclideanDomain T>
struct GcdLcmPair {
    Matrix<T> F;
    Matrix<T> N;
    Matrix<T> K;
};

template <EuclideanDomain T>
struct Divisibility {
    bool holds = false;
    std::optional<Matrix<T>> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// U * [M1 0; M2 0; 0 I] * Qinv. Itself a solution; left-divides every solution.
template <EuclideanDomain T>
Matrix<T> left_gcd(const SolutionSet<T>& ss);

/// U * [M1 0; M2 0; 0 0] * Qinv. Itself a solution; equals K * X for every solution X.
template <EuclideanDomain T>
Matrix<T> left_lcm(const SolutionSet<T>& ss);

template <EuclideanDomain T>
Matrix<T> lcm_projector(const SolutionSet<T>& ss);

template <EuclideanDomain T>
GcdLcmPair<T> gcd_lcm(const SolutionSet<T>& ss);

/// M = Q * [I_t 0; T3 T4] * Qinv, so that left_gcd(ss) * M == general_solution(ss, p).
template <EuclideanDomain T>
Matrix<T> cofactor(const SolutionSet<T>& ss, const SolutionParameter<T>& p);

/// D * W == A for some W (the witness).
template <EuclideanDomain T>
Divisibility<T> left_divides(const Matrix<T>& d, const Matrix<T>& a);

/// G * X == N for some G (the witness); solved on transposes.
template <EuclideanDomain T>
Divisibility<T> right_divides(const Matrix<T>& x, const Matrix<T>& n);

/// Mutual left divisibility: M1 = M2 * W and M2 = M1 * W'. For invertible
/// matrices this is right associativity; for singular ones the witnesses
/// need not be unimodular. The equivalence under which left g.c.d.s of one
/// solution set agree.
template <EuclideanDomain T>
bool mutually_associate(const Matrix<T>& m1, const Matrix<T>& m2);

/// Mutual right divisibility: M1 = G * M2 and M2 = G' * M1. The
/// equivalence under which left l.c.m.s (N = K * X) of one solution set agree.
template <EuclideanDomain T>
bool mutually_right_divisible(const Matrix<T>& m1, const Matrix<T>& m2);

#define MATDIV_GCD_LCM_EXTERN(T)                                                                         \
    extern template Matrix<T> left_gcd(const SolutionSet<T>&);                                           \
    extern template Matrix<T> left_lcm(const SolutionSet<T>&);                                           \
    extern template Matrix<T> lcm_projector(const SolutionSet<T>&);                                      \
    extern template GcdLcmPair<T> gcd_lcm(const SolutionSet<T>&);                                        \
    extern template Matrix<T> cofactor(const SolutionSet<T>&, const SolutionParameter<T>&);              \
    extern template Divisibility<T> left_divides(const Matrix<T>&, const Matrix<T>&);                    \
    extern template Divisibility<T> right_divides(const Matrix<T>&, const Matrix<T>&);                   \
    extern template bool mutually_associate(const Matrix<T>&, const Matrix<T>&);                         \
    extern template bool mutually_right_divisible(const Matrix<T>&, const Matrix<T>&);

MATDIV_GCD_LCM_EXTERN(Integer)
MATDIV_GCD_LCM_EXTERN(PolyQ)
#undef MATDIV_GCD_LCM_EXTERN

} // namespace matdiv
