// verify.hpp
// Acceptance criteria 1-12 as runnable checks, grouped into the suites of
// `ppz verify`. Each check returns its measured values alongside pass/fail.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppz/kernels.hpp"
#include "ppz/zetazeros.hpp"

namespace ppz {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    nlohmann::ordered_json measured;
};

struct VerifyOptions {
    // Adds the x = 10^8 column to criterion 1.
    bool full = false;
    // Needed by criteria 8, 9, 11, 12; ConfigError when absent.
    const ZeroSet* zeros = nullptr;
    std::uint64_t seed = 20240611;
};

// "table1", "constants", "kernels", "identity", "zeros", "paircorr", "all".
const std::vector<std::string>& suite_names();
// Criterion ids run by a suite. ConfigError for an unknown name.
std::vector<int> suite_criteria(const std::string& suite);
bool suite_needs_zeros(const std::string& suite);

CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& options);

nlohmann::ordered_json to_json(const CriterionResult& result);

// Independent oracle for M^lambda(z) on -1 < Re z < 1 (Fejer) or
// -3 < Re z < 1 (Jackson): direct quadrature of
// (1/pi) int_0^inf E_hat(lambda, t) t^{-z} dt using the trigonometric form of
// E_hat, a power series on [0, 1], Gauss-Legendre panels on [1, 200] and an
// asymptotic expansion beyond.
std::complex<double> mellin_by_quadrature(KernelType type, double lambda, std::complex<double> arg);

// Reference pair-count table: rows 2r, columns
// x = 10^3 .. 10^8.
struct PairTableRow {
    std::uint64_t two_r;
    std::uint64_t counts[6];
    std::uint64_t ratio_num;
    std::uint64_t ratio_den;
};
const std::vector<PairTableRow>& reference_pair_table();
// round(2 C_2 li2(x)) row of the same table.
const std::vector<std::uint64_t>& reference_l2_row();

}  // namespace ppz
