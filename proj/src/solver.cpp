#include "matdiv/solver.hpp"

#include <stdexcept>
#include <string>

namespace matdiv {
namespace {

template <EuclideanDomain T>
void require_square_pair(const Matrix<T>& b, const Matrix<T>& a, const char* op) {
    if (!b.is_square() || !a.is_square() || b.rows() != a.rows())
        throw DimensionMismatch(std::string(op) + ": need square matrices of equal size, got " + b.shape() + " and " +
                                a.shape());
}

template <EuclideanDomain T>
void require_shape(const Matrix<T>& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw DimensionMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                                ", got " + m.shape());
}

} // namespace

template <EuclideanDomain T>
SolvabilityCertificate<T> certify(const Matrix<T>& b, const Matrix<T>& a) {
    require_square_pair(b, a, "certify");
    return certify_with(smith(a), smith(b));
}

template <EuclideanDomain T>
SolvabilityCertificate<T> certify_with(SmithDecomposition<T> snfA, SmithDecomposition<T> snfB) {
    using R = RingTraits<T>;
    if (snfA.P.rows() != snfA.Q.rows() || snfB.P.rows() != snfB.Q.rows() || snfA.P.rows() != snfB.P.rows())
        throw DimensionMismatch("certify_with: decompositions of square matrices of equal size required");

    SolvabilityCertificate<T> cert;
    cert.snfA = std::move(snfA);
    cert.snfB = std::move(snfB);
    cert.L = cert.snfB.P * cert.snfA.Pinv;
    cert.n = cert.snfA.P.rows();
    cert.k = cert.snfA.rank;
    cert.t = cert.snfB.rank;

    const auto& eps = cert.eps();
    const auto& phi = cert.phi();
    for (std::size_t i = 0; i < cert.n && !cert.failing_cell; ++i) {
        for (std::size_t j = 0; j < cert.k; ++j) {
            const T le = cert.L(i, j) * eps[j];
            const bool ok = i < cert.t ? R::divides(phi[i], le) : R::is_zero(le);
            if (!ok) {
                cert.failing_cell = std::make_pair(i, j);
                break;
            }
        }
    }
    cert.solvable = !cert.failing_cell;

    if (cert.solvable) {
        if (cert.t < cert.k)
            throw std::logic_error("certify: solvable certificate with t < k");
        for (std::size_t i = 0; i < cert.k; ++i)
            if (!R::divides(phi[i], eps[i]))
                throw std::logic_error("certify: solvable certificate with phi_" + std::to_string(i + 1) +
                                       " not dividing eps_" + std::to_string(i + 1));
    }
    return cert;
}

template <EuclideanDomain T>
bool check_solvable_augmented(const Matrix<T>& b, const Matrix<T>& a) {
    require_square_pair(b, a, "check_solvable_augmented");
    return invariant_factors(b) == invariant_factors(hconcat(a, b));
}

template <EuclideanDomain T>
SolutionSet<T> build_solution_set(const SolvabilityCertificate<T>& cert) {
    if (!cert.solvable) throw NotSolvable("build_solution_set: the equation has no solution");
    SolutionSet<T> ss;
    ss.n = cert.n;
    ss.k = cert.k;
    ss.t = cert.t;
    ss.core = Matrix<T>(cert.t, cert.k);
    for (std::size_t i = 0; i < cert.t; ++i)
        for (std::size_t j = 0; j < cert.k; ++j)
            ss.core(i, j) = RingTraits<T>::exact_div(T(cert.L(i, j) * cert.eps()[j]), cert.phi()[i]);
    ss.U = cert.snfB.Q;
    ss.Uinv = cert.snfB.Qinv;
    ss.Q = cert.snfA.Q;
    ss.Qinv = cert.snfA.Qinv;
    return ss;
}

template <EuclideanDomain T>
SolutionParameter<T> zero_parameter(const SolutionSet<T>& ss) {
    return {Matrix<T>(ss.n - ss.t, ss.t), Matrix<T>(ss.n - ss.t, ss.n - ss.t)};
}

template <EuclideanDomain T>
Matrix<T> general_solution(const SolutionSet<T>& ss, const SolutionParameter<T>& p) {
    require_shape(p.T3, ss.n - ss.t, ss.t, "T3");
    require_shape(p.T4, ss.n - ss.t, ss.n - ss.t, "T4");
    const Matrix<T> s = block_compose<T>({{ss.fixed_rows()}, {hconcat(p.T3, p.T4)}});
    return ss.U * s * ss.Qinv;
}

template <EuclideanDomain T>
Matrix<T> particular_solution(const SolutionSet<T>& ss) {
    return general_solution(ss, zero_parameter(ss));
}

template <EuclideanDomain T>
std::optional<SolutionParameter<T>> recover_parameter(const SolutionSet<T>& ss, const Matrix<T>& x) {
    require_shape(x, ss.n, ss.n, "X");
    const Matrix<T> s = ss.Uinv * x * ss.Q;
    if (block_extract(s, 0, 0, ss.t, ss.n) != ss.fixed_rows()) return std::nullopt;
    return SolutionParameter<T>{block_extract(s, ss.t, 0, ss.n - ss.t, ss.t),
                                block_extract(s, ss.t, ss.t, ss.n - ss.t, ss.n - ss.t)};
}

template <EuclideanDomain T>
Matrix<T> annihilator_element(const SmithDecomposition<T>& snfB, const AnnihilatorParameter<T>& d) {
    const std::size_t n = snfB.Q.rows();
    require_shape(d.D, n - snfB.rank, n, "D");
    return snfB.Q * block_compose<T>({{Matrix<T>(snfB.rank, n)}, {d.D}});
}

template <EuclideanDomain T>
Matrix<T> annihilator_generators(const SmithDecomposition<T>& snfB) {
    const std::size_t n = snfB.Q.rows();
    return block_extract(snfB.Q, 0, snfB.rank, n, n - snfB.rank);
}

#define MATDIV_SOLVER_INSTANTIATE(T)                                                                     \
    template SolvabilityCertificate<T> certify(const Matrix<T>&, const Matrix<T>&);                      \
    template SolvabilityCertificate<T> certify_with(SmithDecomposition<T>, SmithDecomposition<T>);       \
    template bool check_solvable_augmented(const Matrix<T>&, const Matrix<T>&);                          \
    template SolutionSet<T> build_solution_set(const SolvabilityCertificate<T>&);                        \
    template Matrix<T> particular_solution(const SolutionSet<T>&);                                       \
    template Matrix<T> general_solution(const SolutionSet<T>&, const SolutionParameter<T>&);             \
    template std::optional<SolutionParameter<T>> recover_parameter(const SolutionSet<T>&, const Matrix<T>&); \
    template SolutionParameter<T> zero_parameter(const SolutionSet<T>&);                                 \
    template Matrix<T> annihilator_element(const SmithDecomposition<T>&, const AnnihilatorParameter<T>&); \
    template Matrix<T> annihilator_generators(const SmithDecomposition<T>&);

MATDIV_SOLVER_INSTANTIATE(Integer)
MATDIV_SOLVER_INSTANTIATE(PolyQ)

} // namespace matdiv
