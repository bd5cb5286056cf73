// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes. Tolerances (instance counts, bounds, time
// limits) are fixed constants below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "matdiv/gcd_lcm.hpp"
#include "matdiv/oracle.hpp"
#include "support.hpp"

using namespace matdiv;
using namespace matdiv::testing;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGoldenSeconds = 1.0;
constexpr double kIntegerIdentitySeconds = 60.0;
constexpr double kPolynomialSeconds = 120.0;
constexpr int kIdentityInstances = 200;
constexpr int kAgreementPairs = 200;
constexpr int kModuleInstances = 50;
constexpr int kExhaustiveInstances = 20;
constexpr int kPolynomialInstances = 50;
constexpr int kSamplesPerInstance = 5;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every smith() call made by any criterion is checked here.
struct SmithAudit {
    long calls = 0;
    long violations = 0;
    std::string first;

    template <class T>
    void record(const Matrix<T>& a, const SmithDecomposition<T>& sd) {
        ++calls;
        if (const auto v = smith_violation(a, sd)) {
            if (violations++ == 0) first = *v + " on a " + a.shape() + " input";
        }
    }
};

SmithAudit audit;

// Tally of per-instance outcomes with the first failure kept for the report.
struct Tally {
    int total = 0;
    int passed = 0;
    std::string first_failure;

    void add(bool ok, const std::string& what) {
        ++total;
        if (ok) ++passed;
        else if (first_failure.empty()) first_failure = what;
    }
    bool all() const { return total > 0 && passed == total; }
    std::string summary() const {
        std::string s = std::to_string(passed) + "/" + std::to_string(total);
        if (!first_failure.empty()) s += "; first failure: " + first_failure;
        return s;
    }
};

template <class T>
Matrix<T> random_coefficients(Rng& rng, std::size_t rows, std::size_t cols);

template <>
Matrix<Integer> random_coefficients<Integer>(Rng& rng, std::size_t rows, std::size_t cols) {
    return random_int_matrix(rng, rows, cols, -5, 5);
}

template <>
Matrix<PolyQ> random_coefficients<PolyQ>(Rng& rng, std::size_t rows, std::size_t cols) {
    return random_poly_matrix(rng, rows, cols, 2, 3);
}

// Square B drawn from the coefficient distribution, rank deficient about a
// third of the time.
template <class T>
Matrix<T> random_b(Rng& rng, std::size_t n) {
    auto b = random_coefficients<T>(rng, n, n);
    if (uniform(rng, 0, 2) == 0) b = degrade_rank(rng, b);
    return b;
}

// One instance of the g.c.d./l.c.m. identities with A := B*C.
template <class T>
std::string identity_instance(Rng& rng, std::size_t n) {
    const auto b = random_b<T>(rng, n);
    const auto a = b * random_coefficients<T>(rng, n, n);
    const auto cert = certify(b, a);
    if (!cert.solvable) return "product instance reported unsolvable";
    const auto ss = build_solution_set(cert);
    const auto pair = gcd_lcm(ss);
    if (b * pair.F != a) return "B*F != A";
    if (b * pair.N != a) return "B*N != A";
    for (int s = 0; s < kSamplesPerInstance; ++s) {
        const std::size_t free = ss.n - ss.t;
        const SolutionParameter<T> p{random_matrix<T>(rng, free, ss.t, 3), random_matrix<T>(rng, free, free, 3)};
        const auto x = general_solution(ss, p);
        if (b * x != a) return "B*X(p) != A";
        if (pair.F * cofactor(ss, p) != x) return "F*M(p) != X(p)";
        if (pair.K * x != pair.N) return "K*X(p) != N";
    }
    return {};
}

template <class T>
Tally identity_suite(Rng& rng, int instances, std::size_t n_min, std::size_t n_max) {
    Tally tally;
    for (int i = 0; i < instances; ++i) {
        const auto n = static_cast<std::size_t>(uniform(rng, static_cast<long>(n_min), static_cast<long>(n_max)));
        const auto failure = identity_instance<T>(rng, n);
        tally.add(failure.empty(), "instance " + std::to_string(i) + " (n=" + std::to_string(n) + "): " + failure);
    }
    return tally;
}

// Random (B, A) pairs with A drawn independently of B. A third of the Bs
// are unimodular so that both outcomes occur.
template <class T>
Tally agreement_suite(Rng& rng, int pairs, std::size_t n_min, std::size_t n_max, int& solvable_count) {
    Tally tally;
    solvable_count = 0;
    for (int i = 0; i < pairs; ++i) {
        const auto n = static_cast<std::size_t>(uniform(rng, static_cast<long>(n_min), static_cast<long>(n_max)));
        const auto b = uniform(rng, 0, 2) == 0 ? random_unimodular<T>(rng, n) : random_b<T>(rng, n);
        const auto a = random_coefficients<T>(rng, n, n);
        const bool by_certificate = certify(b, a).solvable;
        const bool by_augmented = check_solvable_augmented(b, a);
        const auto by_hermite = hnf_solve(b, a);
        const bool witness_ok = !by_hermite || b * *by_hermite == a;
        const bool ok = by_certificate == by_augmented && by_certificate == by_hermite.has_value() && witness_ok;
        if (by_certificate) ++solvable_count;
        tally.add(ok, "pair " + std::to_string(i) + ": certify=" + std::to_string(by_certificate) +
                          " augmented=" + std::to_string(by_augmented) +
                          " hermite=" + std::to_string(by_hermite.has_value()));
    }
    return tally;
}

struct Report {
    int failed = 0;

    void line(int id, const std::string& title, bool ok, const std::string& detail) {
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail << "\n" << std::flush;
    }
};

std::string seconds_text(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << " s";
    return os.str();
}

template <class T>
std::string join(const std::vector<T>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + RingTraits<T>::format(xs[i]);
    return s + ")";
}

} // namespace

int main() {
    set_smith_observer<Integer>([](const Matrix<Integer>& a, const SmithDecomposition<Integer>& sd) { audit.record(a, sd); });
    set_smith_observer<PolyQ>([](const Matrix<PolyQ>& a, const SmithDecomposition<PolyQ>& sd) { audit.record(a, sd); });

    Report report;
    const IMat a_star = worked_A();
    const IMat b_star = worked_B();

    {
        const auto start = Clock::now();
        const auto sa = smith(a_star);
        const auto sb = smith(b_star);
        const double elapsed = seconds_since(start);
        const std::vector<Integer> want_a{1, 2, 6};
        const std::vector<Integer> want_b{1, 1, 2, 4, 12};
        const bool ok = sa.inv_factors == want_a && sb.inv_factors == want_b && elapsed < kGoldenSeconds;
        report.line(1, "worked example Smith forms", ok,
                    "A " + join(sa.inv_factors) + ", B " + join(sb.inv_factors) + ", " + seconds_text(elapsed) +
                        " (limit " + seconds_text(kGoldenSeconds) + ")");
    }

    {
        const auto cert = certify(b_star, a_star);
        const bool augmented = check_solvable_augmented(b_star, a_star);
        const auto x = hnf_solve(b_star, a_star);
        const bool ok = cert.solvable && cert.k == 3 && cert.t == 5 && augmented && x && b_star * *x == a_star;
        report.line(2, "worked example solvability", ok,
                    "certify=" + std::to_string(cert.solvable) + " k=" + std::to_string(cert.k) +
                        " t=" + std::to_string(cert.t) + " augmented=" + std::to_string(augmented) +
                        " hermite=" + std::to_string(x.has_value()));
    }

    {
        const auto start = Clock::now();
        const auto ss = build_solution_set(certify(b_star, a_star));
        const auto f = left_gcd(ss);
        const auto n = left_lcm(ss);
        const double elapsed = seconds_since(start);
        const bool solutions = b_star * f == a_star && b_star * n == a_star;
        const bool f_assoc = mutually_associate(f, worked_F());
        const bool n_assoc = mutually_associate(n, worked_N());
        const bool ok = solutions && f_assoc && n_assoc && elapsed < kGoldenSeconds;
        report.line(3, "worked example g.c.d. and l.c.m.", ok,
                    "B*F=A and B*N=A: " + std::to_string(solutions) + ", F~F*: " + std::to_string(f_assoc) +
                        ", N~N*: " + std::to_string(n_assoc) + ", " + seconds_text(elapsed));
    }

    {
        Rng rng(4001);
        const auto start = Clock::now();
        const auto tally = identity_suite<Integer>(rng, kIdentityInstances, 2, 6);
        const double elapsed = seconds_since(start);
        report.line(4, "integer g.c.d./l.c.m. identities", tally.all() && elapsed < kIntegerIdentitySeconds,
                    tally.summary() + " instances, " + std::to_string(kSamplesPerInstance) + " parameters each, " +
                        seconds_text(elapsed) + " (limit " + seconds_text(kIntegerIdentitySeconds) + ")");
    }

    {
        Rng rng(5001);
        int solvable = 0;
        const auto tally = agreement_suite<Integer>(rng, kAgreementPairs, 2, 6, solvable);
        report.line(5, "integer solvability agreement", tally.all(),
                    tally.summary() + " pairs agree (" + std::to_string(solvable) + " solvable)");
    }

    {
        Rng rng(6001);
        Tally tally;
        for (int i = 0; i < kModuleInstances; ++i) {
            const auto n = static_cast<std::size_t>(uniform(rng, 2, 6));
            const auto b = random_b<Integer>(rng, n);
            const auto a = b * random_coefficients<Integer>(rng, n, n);
            const auto cert = certify(b, a);
            const auto ss = build_solution_set(cert);
            const auto lhs = column_module<Integer>({left_lcm(ss), annihilator_generators(cert.snfB)});
            const auto rhs = column_module<Integer>({left_gcd(ss)});
            tally.add(lhs == rhs, "instance " + std::to_string(i));
        }
        report.line(6, "column module of N and Ann_r(B) equals that of F", tally.all(), tally.summary());
    }

    {
        Rng rng(7001);
        Tally tally;
        long found = 0;
        int attempts = 0;
        while (tally.total < kExhaustiveInstances && attempts++ < 10000) {
            IMat b = random_int_matrix(rng, 2, 2, -2, 2);
            if (uniform(rng, 0, 1) == 0) b = degrade_rank(rng, b);
            const IMat a = random_int_matrix(rng, 2, 2, -2, 2);
            const auto cert = certify(b, a);
            if (!cert.solvable) continue;
            const auto ss = build_solution_set(cert);
            const auto all = exhaustive_solutions(b, a, 2);
            if (all.empty()) continue;
            found += static_cast<long>(all.size());
            bool ok = true;
            for (const auto& x : all) {
                const auto p = recover_parameter(ss, x);
                ok = ok && p && general_solution(ss, *p) == x;
            }
            tally.add(ok, "instance " + std::to_string(tally.total));
        }
        report.line(7, "exhaustive solutions lie in the coset", tally.all() && tally.total == kExhaustiveInstances,
                    tally.summary() + " instances, " + std::to_string(found) + " solutions with entries in [-2,2]");
    }

    {
        Rng rng(8001);
        const auto start = Clock::now();
        const auto identities = identity_suite<PolyQ>(rng, kPolynomialInstances, 2, 3);
        int solvable = 0;
        const auto agreement = agreement_suite<PolyQ>(rng, kPolynomialInstances, 2, 3, solvable);
        const double elapsed = seconds_since(start);
        const bool ok = identities.all() && agreement.all() && elapsed < kPolynomialSeconds;
        report.line(8, "Q[x] identities and solvability agreement", ok,
                    "identities " + identities.summary() + ", agreement " + agreement.summary() + " (" +
                        std::to_string(solvable) + " solvable), " + seconds_text(elapsed) + " (limit " +
                        seconds_text(kPolynomialSeconds) + ")");
    }

    report.line(9, "Smith decomposition invariants on every call", audit.violations == 0 && audit.calls > 0,
                std::to_string(audit.calls) + " decompositions, " + std::to_string(audit.violations) + " violations" +
                    (audit.first.empty() ? "" : "; first: " + audit.first));

    std::cout << (report.failed == 0 ? "all criteria passed" : std::to_string(report.failed) + " criteria failed") << "\n";
    return report.failed == 0 ? 0 : 1;
}
