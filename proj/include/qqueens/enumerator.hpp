#pragma once

// Exhaustive counting: nonattacking placements, and lattice points of
// constrained placement patterns.  These are the ground truth every closed
// form in the library is checked against.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qqueens/core.hpp"
#include "qqueens/error.hpp"
#include "qqueens/numeric.hpp"

namespace qq {

class CountCache;

/// Row i is a bitset over the n^2 squares (index (y-1)*n + (x-1)) with the
/// squares attacked from square i, i itself included.
class AttackTable {
public:
    AttackTable(const MoveSet& moves, int n);

    int board_size() const noexcept { return n_; }
    int squares() const noexcept { return n_ * n_; }
    std::size_t words() const noexcept { return words_; }
    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
    }
    bool attacks(int i, int j) const {
        return (row(i)[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
    }
    int index(Square s) const noexcept { return (s.y - 1) * n_ + (s.x - 1); }
    Square square(int i) const noexcept { return {i % n_ + 1, i / n_ + 1}; }

private:
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// z_j - z_i is an integer multiple of slope (zero included).
struct Collinear {
    int i;
    int j;
    Move slope;
};

/// z_i = z_j.
struct Equal {
    int i;
    int j;
};

using Constraint = std::variant<Collinear, Equal>;

/// Linear constraints on kappa labelled pieces (1-based, i < j).
class ConstraintPattern {
public:
    ConstraintPattern(int kappa, std::vector<Constraint> constraints);

    int kappa() const noexcept { return kappa_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

    /// Applies a permutation of the piece labels (perm[old-1] = new label).
    ConstraintPattern relabel(const std::vector<int>& perm) const;

private:
    int kappa_;
    std::vector<Constraint> constraints_;
};

struct CountRecord {
    MoveSet moves;
    int q;
    int n;
    BigInt count;
};

struct SearchOptions {
    /// Maximum number of partial placements visited before giving up.
    std::uint64_t node_limit = 1'000'000'000ULL;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string what, std::uint64_t nodes, std::vector<CountRecord> completed = {})
        : Error(std::move(what)), nodes_(nodes), completed_(std::move(completed)) {}
    std::uint64_t nodes() const noexcept { return nodes_; }
    /// Counts finished before the budget ran out (sequence only).
    const std::vector<CountRecord>& completed() const noexcept { return completed_; }
    std::optional<int> last_completed_n() const {
        if (completed_.empty()) return std::nullopt;
        return completed_.back().n;
    }

private:
    std::uint64_t nodes_;
    std::vector<CountRecord> completed_;
};

/// Number of q-subsets of [n]^2 with no two squares attacking.
BigInt count_unlabelled(const MoveSet& moves, int q, int n, const SearchOptions& opts = {});

/// Ordered nonattacking q-tuples, enumerated directly (not q! * unlabelled).
BigInt count_labelled(const MoveSet& moves, int q, int n, const SearchOptions& opts = {});

/// Ordered pairs on a common line of the given slope, coincident pairs included.
BigInt alpha_pairs(Move slope, int n);
/// Ordered triples on a common line of the given slope.
BigInt beta_triples(Move slope, int n);

/// Ordered kappa-tuples of squares (repetition allowed) satisfying every
/// constraint.  Free pieces outside the pattern are not counted here.
BigInt count_pattern(const ConstraintPattern& pattern, int n);

/// count_unlabelled for n_lo..n_hi, reading and writing the cache if given.
std::vector<CountRecord> sequence(const MoveSet& moves, int q, int n_lo, int n_hi,
                                  CountCache* cache = nullptr, const SearchOptions& opts = {});

}  // namespace qq
