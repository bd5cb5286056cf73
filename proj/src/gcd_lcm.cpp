#include "matdiv/gcd_lcm.hpp"

#include <string>

namespace matdiv {
namespace {

// [I_t 0; 0 0] when free is false, [0 0; 0 I_{n-t}] when true.
template <EuclideanDomain T>
Matrix<T> split_identity(std::size_t n, std::size_t t, bool free) {
    Matrix<T> m(n, n);
    for (std::size_t i = free ? t : 0; i < (free ? n : t); ++i) m(i, i) = RingTraits<T>::one();
    return m;
}

template <EuclideanDomain T>
void require_same_square(const Matrix<T>& x, const Matrix<T>& y, const char* op) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw DimensionMismatch(std::string(op) + ": need square matrices of equal size, got " + x.shape() + " and " +
                                y.shape());
}

} // namespace

template <EuclideanDomain T>
Matrix<T> left_gcd(const SolutionSet<T>& ss) {
    const std::size_t free = ss.n - ss.t;
    return general_solution(ss, {Matrix<T>(free, ss.t), Matrix<T>::identity(free)});
}

template <EuclideanDomain T>
Matrix<T> left_lcm(const SolutionSet<T>& ss) {
    return particular_solution(ss);
}

template <EuclideanDomain T>
Matrix<T> lcm_projector(const SolutionSet<T>& ss) {
    return ss.U * split_identity<T>(ss.n, ss.t, false) * ss.Uinv;
}

template <EuclideanDomain T>
GcdLcmPair<T> gcd_lcm(const SolutionSet<T>& ss) {
    return {left_gcd(ss), left_lcm(ss), lcm_projector(ss)};
}

template <EuclideanDomain T>
Matrix<T> cofactor(const SolutionSet<T>& ss, const SolutionParameter<T>& p) {
    const std::size_t free = ss.n - ss.t;
    if (p.T3.rows() != free || p.T3.cols() != ss.t || p.T4.rows() != free || p.T4.cols() != free)
        throw DimensionMismatch("cofactor: parameter blocks must be " + std::to_string(free) + "x" +
                                std::to_string(ss.t) + " and " + std::to_string(free) + "x" + std::to_string(free));
    const Matrix<T> middle =
        block_compose<T>({{Matrix<T>::identity(ss.t), Matrix<T>(ss.t, free)}, {p.T3, p.T4}});
    return ss.Q * middle * ss.Qinv;
}

template <EuclideanDomain T>
Divisibility<T> left_divides(const Matrix<T>& d, const Matrix<T>& a) {
    require_same_square(d, a, "left_divides");
    const auto cert = certify(d, a);
    if (!cert.solvable) return {};
    return {true, particular_solution(build_solution_set(cert))};
}

template <EuclideanDomain T>
Divisibility<T> right_divides(const Matrix<T>& x, const Matrix<T>& n) {
    require_same_square(x, n, "right_divides");
    auto r = left_divides(x.transpose(), n.transpose());
    if (r.witness) r.witness = r.witness->transpose();
    return r;
}

template <EuclideanDomain T>
bool mutually_associate(const Matrix<T>& m1, const Matrix<T>& m2) {
    require_same_square(m1, m2, "mutually_associate");
    return left_divides(m1, m2).holds && left_divides(m2, m1).holds;
}

template <EuclideanDomain T>
bool mutually_right_divisible(const Matrix<T>& m1, const Matrix<T>& m2) {
    require_same_square(m1, m2, "mutually_right_divisible");
    return right_divides(m1, m2).holds && right_divides(m2, m1).holds;
}

#define MATDIV_GCD_LCM_INSTANTIATE(T)                                                                    \
    template Matrix<T> left_gcd(const SolutionSet<T>&);                                                  \
    template Matrix<T> left_lcm(const SolutionSet<T>&);                                                  \
    template Matrix<T> lcm_projector(const SolutionSet<T>&);                                             \
    template GcdLcmPair<T> gcd_lcm(const SolutionSet<T>&);                                               \
    template Matrix<T> cofactor(const SolutionSet<T>&, const SolutionParameter<T>&);                     \
    template Divisibility<T> left_divides(const Matrix<T>&, const Matrix<T>&);                           \
    template Divisibility<T> right_divides(const Matrix<T>&, const Matrix<T>&);                          \
    template bool mutually_associate(const Matrix<T>&, const Matrix<T>&);                                \
    template bool mutually_right_divisible(const Matrix<T>&, const Matrix<T>&);

MATDIV_GCD_LCM_INSTANTIATE(Integer)
MATDIV_GCD_LCM_INSTANTIATE(PolyQ)

} // namespace matdiv
