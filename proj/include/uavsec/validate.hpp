#pragma once

#include <cstdint>
#include <ostream>

namespace uavsec {

enum class ValidateSuite { all, specfun, distributions, sop };

/// Runs the self-check suites and prints one line per check plus the
/// adjudication blocks (the serving-SNR CDF normalization constant and the
/// ball/cap recombination weights, each against Monte Carlo). Returns 0 when
/// every hard assertion holds, 1 otherwise; adjudication discrepancies are
/// reported, not failed.
int run_validate(ValidateSuite suite, std::uint64_t seed, std::ostream& out);

}  // namespace uavsec
