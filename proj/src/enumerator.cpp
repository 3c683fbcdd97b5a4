#include "qqueens/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qqueens/cache.hpp"

namespace qq {

AttackTable::AttackTable(const MoveSet& moves, int n)
    : n_(n), words_((static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0) + 63) / 64) {
    if (n < 0) throw InvalidArgument("board size must be nonnegative");
    const int sq = n * n;
    bits_.assign(static_cast<std::size_t>(sq) * words_, 0);
    for (int i = 0; i < sq; ++i) {
        const Square a = square(i);
        std::uint64_t* r = bits_.data() + static_cast<std::size_t>(i) * words_;
        for (int j = 0; j < sq; ++j)
            if (qq::attacks(moves, a, square(j))) r[j / 64] |= std::uint64_t{1} << (j % 64);
    }
}

ConstraintPattern::ConstraintPattern(int kappa, std::vector<Constraint> constraints)
    : kappa_(kappa), constraints_(std::move(constraints)) {
    if (kappa_ < 1) throw InvalidArgument("a pattern needs at least one piece");
    if (constraints_.empty()) throw InvalidArgument("a pattern needs at least one constraint");
    for (const auto& c : constraints_) {
        const auto [i, j] = std::visit([](const auto& x) { return std::pair{x.i, x.j}; }, c);
        if (i < 1 || j > kappa_ || i >= j)
            throw InvalidArgument("pattern constraint indices must satisfy 1 <= i < j <= kappa");
    }
}

ConstraintPattern ConstraintPattern::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != kappa_) throw InvalidArgument("permutation size mismatch");
    std::vector<Constraint> out;
    for (const auto& c : constraints_) {
        if (const auto* col = std::get_if<Collinear>(&c)) {
            int a = perm[static_cast<std::size_t>(col->i - 1)];
            int b = perm[static_cast<std::size_t>(col->j - 1)];
            // a line relation is symmetric, so swapping ends keeps the slope
            out.push_back(Collinear{std::min(a, b), std::max(a, b), col->slope});
        } else {
            const auto& eq = std::get<Equal>(c);
            int a = perm[static_cast<std::size_t>(eq.i - 1)];
            int b = perm[static_cast<std::size_t>(eq.j - 1)];
            out.push_back(Equal{std::min(a, b), std::max(a, b)});
        }
    }
    return ConstraintPattern(kappa_, std::move(out));
}

// --------------------------------------------------------------- placements

namespace {

class PlacementSearch {
public:
    PlacementSearch(const AttackTable& table, int q, bool ordered, const SearchOptions& opts)
        : t_(table), q_(q), ordered_(ordered), limit_(opts.node_limit),
          levels_(static_cast<std::size_t>(q), std::vector<std::uint64_t>(table.words(), 0)) {}

    std::uint64_t run() {
        auto& all = levels_[0];
        const int sq = t_.squares();
        for (int i = 0; i < sq; ++i) all[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
        return recurse(0, 0);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    // levels_[depth] holds the squares still legal for piece depth+1.  For
    // unordered counting only squares above the last one chosen are kept.
    std::uint64_t recurse(int depth, std::size_t first_word) {
        const auto& cand = levels_[static_cast<std::size_t>(depth)];
        const std::size_t words = t_.words();
        if (depth == q_ - 1) {
            std::uint64_t c = 0;
            for (std::size_t w = first_word; w < words; ++w) c += static_cast<std::uint64_t>(std::popcount(cand[w]));
            return c;
        }
        std::uint64_t total = 0;
        auto& next = levels_[static_cast<std::size_t>(depth) + 1];
        for (std::size_t w = first_word; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const int s = static_cast<int>(w * 64) + b;
                if (++nodes_ > limit_)
                    throw BudgetExceeded("search budget of " + std::to_string(limit_) +
                                             " partial placements exceeded",
                                         nodes_);
                const auto row = t_.row(s);
                std::size_t start = 0;
                if (!ordered_) {
                    start = w;
                    const std::uint64_t above = b == 63 ? 0 : ~std::uint64_t{0} << (b + 1);
                    next[w] = cand[w] & ~row[w] & above;
                    for (std::size_t v = w + 1; v < words; ++v) next[v] = cand[v] & ~row[v];
                } else {
                    for (std::size_t v = 0; v < words; ++v) next[v] = cand[v] & ~row[v];
                }
                total += recurse(depth + 1, start);
            }
        }
        return total;
    }

    const AttackTable& t_;
    int q_;
    bool ordered_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::uint64_t>> levels_;
};

BigInt to_big(std::uint64_t v) {
    BigInt z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return z;
}

std::uint64_t run_search(const MoveSet& moves, int q, int n, bool ordered, const SearchOptions& opts) {
    if (q < 1) throw InvalidArgument("q must be at least 1");
    if (n < 0) throw InvalidArgument("board size must be nonnegative");
    if (n == 0) return 0;
    const AttackTable table(moves, n);
    PlacementSearch search(table, q, ordered, opts);
    return search.run();
}

}  // namespace

BigInt count_unlabelled(const MoveSet& moves, int q, int n, const SearchOptions& opts) {
    return to_big(run_search(moves, q, n, false, opts));
}

BigInt count_labelled(const MoveSet& moves, int q, int n, const SearchOptions& opts) {
    return to_big(run_search(moves, q, n, true, opts));
}

// -------------------------------------------------------------------- lines

namespace {

// Lengths of the maximal lines of a slope that meet the board.
std::vector<std::uint64_t> line_lengths(Move slope, int n) {
    std::vector<std::uint64_t> lens;
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x) {
            if (on_board({x - slope.c(), y - slope.d()}, n)) continue;  // not a line start
            std::uint64_t l = 0;
            for (Square s{x, y}; on_board(s, n); s = {s.x + slope.c(), s.y + slope.d()}) ++l;
            lens.push_back(l);
        }
    return lens;
}

}  // namespace

BigInt alpha_pairs(Move slope, int n) {
    if (n < 0) throw InvalidArgument("board size must be nonnegative");
    BigInt total = 0;
    for (auto l : line_lengths(slope, n)) total += to_big(l * l);
    return total;
}

BigInt beta_triples(Move slope, int n) {
    if (n < 0) throw InvalidArgument("board size must be nonnegative");
    BigInt total = 0;
    for (auto l : line_lengths(slope, n)) total += to_big(l * l * l);
    return total;
}

// ------------------------------------------------------------------ patterns

namespace {

struct Link {
    std::size_t earlier;  // position in the component order
    bool equal;
    Move slope;
};

// One connected component of the constraint graph, pieces in BFS order so
// every piece after the first is tied to an earlier one.
class ComponentCounter {
public:
    ComponentCounter(std::vector<std::vector<Link>> links, int n)
        : links_(std::move(links)), n_(n), pos_(links_.size()) {}

    std::uint64_t count() { return place(0); }

private:
    bool satisfied(std::size_t t, Square s) const {
        for (const auto& l : links_[t]) {
            const Square o = pos_[l.earlier];
            if (l.equal ? !(o == s) : !along(l.slope, s.x - o.x, s.y - o.y)) return false;
        }
        return true;
    }

    template <typename F>
    void candidates(std::size_t t, F&& visit) const {
        if (t == 0) {
            for (int y = 1; y <= n_; ++y)
                for (int x = 1; x <= n_; ++x) visit(Square{x, y});
            return;
        }
        const auto& ls = links_[t];
        const auto eq = std::find_if(ls.begin(), ls.end(), [](const Link& l) { return l.equal; });
        if (eq != ls.end()) {
            visit(pos_[eq->earlier]);
            return;
        }
        const Link& l = ls.front();
        const Square o = pos_[l.earlier];
        const int c = l.slope.c(), d = l.slope.d();
        Square s = o;
        while (on_board({s.x - c, s.y - d}, n_)) s = {s.x - c, s.y - d};
        for (; on_board(s, n_); s = {s.x + c, s.y + d}) visit(s);
    }

    std::uint64_t place(std::size_t t) {
        std::uint64_t total = 0;
        const bool last = t + 1 == links_.size();
        candidates(t, [&](Square s) {
            if (!satisfied(t, s)) return;
            if (last) {
                ++total;
            } else {
                pos_[t] = s;
                total += place(t + 1);
            }
        });
        return total;
    }

    std::vector<std::vector<Link>> links_;
    int n_;
    std::vector<Square> pos_;
};

}  // namespace

BigInt count_pattern(const ConstraintPattern& pattern, int n) {
    if (n < 0) throw InvalidArgument("board size must be nonnegative");
    const int kappa = pattern.kappa();
    if (n == 0) return 0;

    struct Edge {
        int other;
        bool equal;
        Move slope;
    };
    std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(kappa));
    for (const auto& c : pattern.constraints()) {
        if (const auto* col = std::get_if<Collinear>(&c)) {
            adj[static_cast<std::size_t>(col->i - 1)].push_back({col->j - 1, false, col->slope});
            adj[static_cast<std::size_t>(col->j - 1)].push_back({col->i - 1, false, col->slope});
        } else {
            const auto& eq = std::get<Equal>(c);
            adj[static_cast<std::size_t>(eq.i - 1)].push_back({eq.j - 1, true, Move::make(1, 0)});
            adj[static_cast<std::size_t>(eq.j - 1)].push_back({eq.i - 1, true, Move::make(1, 0)});
        }
    }

    BigInt total = 1;
    std::vector<int> order_pos(static_cast<std::size_t>(kappa), -1);
    for (int root = 0; root < kappa; ++root) {
        if (order_pos[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<int> order{root};
        order_pos[static_cast<std::size_t>(root)] = 0;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (const auto& e : adj[static_cast<std::size_t>(order[head])])
                if (order_pos[static_cast<std::size_t>(e.other)] < 0) {
                    order_pos[static_cast<std::size_t>(e.other)] = static_cast<int>(order.size());
                    order.push_back(e.other);
                }
        if (order.size() == 1) {
            total *= n * n;  // unconstrained piece
            continue;
        }
        std::vector<std::vector<Link>> links(order.size());
        for (std::size_t t = 0; t < order.size(); ++t)
            for (const auto& e : adj[static_cast<std::size_t>(order[t])]) {
                const auto p = static_cast<std::size_t>(order_pos[static_cast<std::size_t>(e.other)]);
                if (p < t) links[t].push_back({p, e.equal, e.slope});
            }
        ComponentCounter counter(std::move(links), n);
        total *= to_big(counter.count());
    }
    return total;
}

// ----------------------------------------------------------------- sequence

std::vector<CountRecord> sequence(const MoveSet& moves, int q, int n_lo, int n_hi, CountCache* cache,
                                  const SearchOptions& opts) {
    if (n_lo > n_hi) throw InvalidArgument("empty n range");
    if (n_lo < 0) throw InvalidArgument("board size must be nonnegative");
    std::vector<CountRecord> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (cache) {
            if (auto hit = cache->lookup(moves, q, n)) {
                out.push_back({moves, q, n, *hit});
                continue;
            }
        }
        BigInt c;
        try {
            c = count_unlabelled(moves, q, n, opts);
        } catch (const BudgetExceeded& e) {
            throw BudgetExceeded(std::string(e.what()) + " at n=" + std::to_string(n), e.nodes(), out);
        }
        CountRecord rec{moves, q, n, c};
        if (cache) cache->store(rec);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace qq
