#include "matdiv/verify.hpp"

#include "matdiv/gcd_lcm.hpp"
#include "matdiv/oracle.hpp"

namespace matdiv {
namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Integer random_scalar(std::mt19937_64& rng, long bound, const Integer*) {
    return Integer(draw(rng, -bound, bound));
}

PolyQ random_scalar(std::mt19937_64& rng, long bound, const PolyQ*) {
    return PolyQ{Rational(draw(rng, -bound, bound)), Rational(draw(rng, -bound, bound))};
}

template <EuclideanDomain T>
T random_scalar(std::mt19937_64& rng, long bound) {
    return random_scalar(rng, bound, static_cast<const T*>(nullptr));
}

template <EuclideanDomain T>
Matrix<T> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<T>(rng, bound);
    return m;
}

// Product of random transvections and swaps.
template <EuclideanDomain T>
Matrix<T> random_unimodular(std::mt19937_64& rng, std::size_t n) {
    Matrix<T> m = Matrix<T>::identity(n);
    if (n < 2) return m;
    for (int step = 0; step < 6; ++step) {
        const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const T q = random_scalar<T>(rng, 1);
        for (std::size_t c = 0; c < n; ++c) m(i, c) = m(i, c) + q * m(j, c);
        if (draw(rng, 0, 3) == 0) m.swap_rows(i, j);
    }
    return m;
}

class Recorder {
public:
    explicit Recorder(std::string label) : label_(std::move(label)) {}

    bool check(const std::string& name, bool passed, std::string detail) {
        results_.push_back({label_ + ":" + name, passed, std::move(detail)});
        return passed;
    }

    std::vector<CheckResult> take() && { return std::move(results_); }

private:
    std::string label_;
    std::vector<CheckResult> results_;
};

std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

} // namespace

template <EuclideanDomain T>
std::vector<CheckResult> check_instance(const Matrix<T>& b, const Matrix<T>& a, std::mt19937_64& rng,
                                        unsigned samples, const std::string& label) {
    Recorder rec(label);
    const auto cert = certify(b, a);
    const auto va = smith_violation(a, cert.snfA);
    const auto vb = smith_violation(b, cert.snfB);
    rec.check("snf-invariants-A", !va, va.value_or("P*A*Q = E, transforms invertible, divisibility chain"));
    rec.check("snf-invariants-B", !vb, vb.value_or("V*B*U = Phi, transforms invertible, divisibility chain"));

    const bool augmented = check_solvable_augmented(b, a);
    const auto x_hnf = hnf_solve(b, a);
    const bool hnf_ok = x_hnf.has_value() && b * *x_hnf == a;
    std::string verdict = cert.solvable ? "solvable" : "unsolvable";
    verdict += " (n=" + std::to_string(cert.n) + ", k=" + std::to_string(cert.k) + ", t=" + std::to_string(cert.t);
    if (cert.failing_cell) verdict += ", fails at " + cell(cert.failing_cell->first, cert.failing_cell->second);
    verdict += "); augmented " + std::string(augmented ? "solvable" : "unsolvable") + "; hnf " +
               (x_hnf ? (hnf_ok ? "solvable" : "wrong solution") : "unsolvable");
    rec.check("solvability-agreement", cert.solvable == augmented && x_hnf.has_value() == cert.solvable &&
                                           (!x_hnf || hnf_ok),
              verdict);
    if (!cert.solvable) return std::move(rec).take();

    const auto ss = build_solution_set(cert);
    const auto pair = gcd_lcm(ss);
    rec.check("gcd-is-solution", b * pair.F == a, "B*F = A");
    rec.check("lcm-is-solution", b * pair.N == a, "B*N = A");

    const std::size_t free = ss.n - ss.t;
    unsigned divided = 0, projected = 0;
    for (unsigned s = 0; s < samples; ++s) {
        const SolutionParameter<T> p{random_matrix<T>(rng, free, ss.t, 2), random_matrix<T>(rng, free, free, 2)};
        const Matrix<T> x = general_solution(ss, p);
        if (b * x == a && pair.F * cofactor(ss, p) == x) ++divided;
        if (pair.K * x == pair.N) ++projected;
    }
    rec.check("gcd-divides-solutions", divided == samples,
              std::to_string(divided) + "/" + std::to_string(samples) + " sampled X = F*M with the cofactor M");
    rec.check("lcm-projector", projected == samples,
              std::to_string(projected) + "/" + std::to_string(samples) + " sampled X satisfy K*X = N");

    rec.check("hnf-solution-in-coset", x_hnf && recover_parameter(ss, *x_hnf).has_value(),
              "Uinv*X_hnf*Q matches [M1 0; M2 0] on its top t rows");
    rec.check("gcd-column-module",
              column_module<T>({pair.N, annihilator_generators(cert.snfB)}) == column_module<T>({pair.F}),
              "columns of N plus generators of Ann_r(B) span the columns of F");
    return std::move(rec).take();
}

template <EuclideanDomain T>
std::vector<CheckResult> run_battery(const Matrix<T>& b, const Matrix<T>& a, const BatteryOptions& options) {
    std::mt19937_64 rng(options.seed);
    auto results = check_instance(b, a, rng, options.samples, "instance");
    const auto base = certify(b, a);
    std::optional<GcdLcmPair<T>> base_pair;
    if (base.solvable) base_pair = gcd_lcm(build_solution_set(base));

    const std::size_t n = a.rows();
    for (unsigned trial = 1; trial <= options.trials; ++trial) {
        const std::string label = "trial-" + std::to_string(trial);
        const Matrix<T> g = random_unimodular<T>(rng, n);
        const Matrix<T> w = random_unimodular<T>(rng, n);
        const Matrix<T> b2 = g * b;
        const Matrix<T> a2 = g * a * w;
        auto part = check_instance(b2, a2, rng, options.samples, label);
        results.insert(results.end(), part.begin(), part.end());

        Recorder rec(label);
        const auto cert = certify(b2, a2);
        rec.check("perturbation-preserves-solvability", cert.solvable == base.solvable,
                  "G*B*X = G*A*W is solvable iff B*X = A is");
        if (cert.solvable && base_pair) {
            const auto pair = gcd_lcm(build_solution_set(cert));
            rec.check("gcd-associate", mutually_associate(pair.F, base_pair->F),
                      "left g.c.d.s agree up to right associates (mutual left divisibility)");
            rec.check("lcm-associate", mutually_right_divisible(pair.N, Matrix<T>(base_pair->N * w)),
                      "l.c.m. agrees with N*W up to mutual right divisibility");
        }
        auto extra = std::move(rec).take();
        results.insert(results.end(), extra.begin(), extra.end());
    }
    return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    for (const auto& r : results) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.name;
        out += ' ';
        out += r.detail;
        out += '\n';
    }
    return out;
}

template std::vector<CheckResult> check_instance(const Matrix<Integer>&, const Matrix<Integer>&, std::mt19937_64&,
                                                 unsigned, const std::string&);
template std::vector<CheckResult> check_instance(const Matrix<PolyQ>&, const Matrix<PolyQ>&, std::mt19937_64&,
                                                 unsigned, const std::string&);
template std::vector<CheckResult> run_battery(const Matrix<Integer>&, const Matrix<Integer>&, const BatteryOptions&);
template std::vector<CheckResult> run_battery(const Matrix<PolyQ>&, const Matrix<PolyQ>&, const BatteryOptions&);

} // namespace matdiv
