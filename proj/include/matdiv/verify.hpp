#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matdiv/domains.hpp"
#include "matdiv/matrix.hpp"

namespace matdiv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct BatteryOptions {
    unsigned trials = 0;             ///< randomized perturbations after the instance itself
    std::uint64_t seed = kDefaultSeed;
    unsigned samples = 5;            ///< random solution parameters per instance
};

/// Cross-checks one instance B*X = A: Smith invariants, three-way
/// solvability agreement, and, when solvable, the g.c.d./l.c.m. identities
/// and the column-module and coset oracles. Names are prefixed with
/// `label` and a colon.
template <EuclideanDomain T>
std::vector<CheckResult> check_instance(const Matrix<T>& b, const Matrix<T>& a, std::mt19937_64& rng,
                                        unsigned samples, const std::string& label);

/// check_instance on (B, A), then on `trials` perturbations (G*B, G*A*W)
/// with random unimodular G, W, comparing each perturbed g.c.d. and l.c.m.
/// with the original ones.
template <EuclideanDomain T>
std::vector<CheckResult> run_battery(const Matrix<T>& b, const Matrix<T>& a, const BatteryOptions& options);

/// "PASS|FAIL <name> <detail>" per line.
std::string format_report(const std::vector<CheckResult>& results);

extern template std::vector<CheckResult> check_instance(const Matrix<Integer>&, const Matrix<Integer>&,
                                                        std::mt19937_64&, unsigned, const std::string&);
extern template std::vector<CheckResult> check_instance(const Matrix<PolyQ>&, const Matrix<PolyQ>&,
                                                        std::mt19937_64&, unsigned, const std::string&);
extern template std::vector<CheckResult> run_battery(const Matrix<Integer>&, const Matrix<Integer>&,
                                                     const BatteryOptions&);
extern template std::vector<CheckResult> run_battery(const Matrix<PolyQ>&, const Matrix<PolyQ>&,
                                                     const BatteryOptions&);

} // namespace matdiv
