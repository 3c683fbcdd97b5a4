#pragma once

// Cross-checks of the formula bank against the oracle and against each
// other, grouped into scopes.  Used by the `verify` command and by the
// acceptance suite.

#include <optional>
#include <string>
#include <vector>

#include "qqueens/enumerator.hpp"
#include "qqueens/quasipoly.hpp"

namespace qq {

class CountCache;

struct Check {
    std::string claim;
    /// Which stated result the claim comes from, in words.
    std::string locus;
    bool passed = false;
    std::string detail;
    /// Informational entries record known disagreements between two printed
    /// forms; they never affect the exit status.
    bool informational = false;
};

struct VerifyOptions {
    int n_max = 8;
    CountCache* cache = nullptr;
    SearchOptions search;
};

inline const std::vector<std::string>& verify_scopes() {
    static const std::vector<std::string> s{"tables",      "audit", "assembly", "gamma",
                                            "periodicity", "gamma5-sign", "types", "all"};
    return s;
}

/// Throws InvalidArgument for an unknown scope.
std::vector<Check> run_verify(const std::string& scope, const VerifyOptions& opts);
bool all_passed(const std::vector<Check>& checks);

/// Oracle samples u(q;n) for n = lo..hi.
std::vector<Sample> oracle_samples(const MoveSet& moves, int q, int lo, int hi, CountCache* cache = nullptr,
                                   const SearchOptions& search = {});

/// Fits oracle samples n = 1..n_hi with degree 2q and the smallest period
/// up to max_period.
PeriodFit fit_oracle(const MoveSet& moves, int q, int n_hi, int max_period, CountCache* cache = nullptr,
                     const SearchOptions& search = {});

/// Smallest n_hi for which n = 1..n_hi gives every residue class modulo
/// each period up to max_period the degree+2 samples fit needs.
int samples_needed(int degree, int max_period);

/// Outcome of comparing the two printed signs of the (-1)^n n term of u(3;n)
/// with the fitted oracle value, for Q^{12} and Q^{22}.
struct Gamma5Arbitration {
    struct Row {
        int h = 0, k = 0;
        Rational fitted;           // alternating part of the n^1 coefficient
        Rational coefficient_thm;  // from the gamma5 periodic-term statement
        Rational table;            // from the three-piece table
    };
    std::vector<Row> rows;
    bool theorem_matches = false;
    bool table_matches = false;
    /// "table", "theorem", "both" or "neither".
    std::string supported;
    std::string summary() const;
};

Gamma5Arbitration arbitrate_gamma5(CountCache* cache = nullptr, const SearchOptions& search = {});

nlohmann::json to_json(const Check& c);

}  // namespace qq
