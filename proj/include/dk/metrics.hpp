#pragma once

#include <vector>

#include "dk/poly.hpp"

namespace dk {

/// Optimal pairing of computed roots against ground truth.
struct MatchReport {
    std::vector<int> assignment;  // computed index -> truth index, a bijection
    double mean_error = 0.0;
    double max_error = 0.0;
    // residual slot for callers that also evaluate the polynomial;
    // match_roots itself leaves it at zero
    double max_residual = 0.0;
};

/// Minimum-total-distance assignment between computed and truth (exact
/// O(n^3) augmenting-path algorithm, not greedy). mean_error is the mean of
/// the matched distances, max_error their maximum.
/// Throws std::invalid_argument on a length mismatch or empty input.
MatchReport match_roots(const RootSet& computed, const RootSet& truth);

/// True iff every root modulus is at most r * (1 + slack).
bool enclosure_check(const RootSet& truth, double r, double slack);

}  // namespace dk
