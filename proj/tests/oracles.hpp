#pragma once

// Deliberately naive reference implementations, sharing no code with the
// library beyond the value types.  Small n only.

#include <cstdlib>
#include <random>
#include <vector>

#include "qqueens/core.hpp"
#include "qqueens/enumerator.hpp"
#include "qqueens/numeric.hpp"

namespace oracle {

using qq::BigInt;

struct Sq {
    int x, y;
};

// b - a = t*(c,d) for some integer t, found by trying every t.
inline bool multiple_of(int dx, int dy, int c, int d, int n) {
    for (int t = -2 * n; t <= 2 * n; ++t)
        if (dx == t * c && dy == t * d) return true;
    return false;
}

inline bool attacks(const std::vector<std::pair<int, int>>& moves, Sq a, Sq b, int n) {
    for (auto [c, d] : moves)
        if (multiple_of(b.x - a.x, b.y - a.y, c, d, n)) return true;
    return false;
}

inline std::vector<std::pair<int, int>> raw(const qq::MoveSet& m) {
    std::vector<std::pair<int, int>> out;
    for (auto mv : m) out.emplace_back(mv.c(), mv.d());
    return out;
}

inline std::vector<Sq> board(int n) {
    std::vector<Sq> b;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) b.push_back({x, y});
    return b;
}

// Every q-subset of squares, by increasing index, checking all pairs at the end.
inline long count_subsets(const qq::MoveSet& ms, int q, int n) {
    const auto moves = raw(ms);
    const auto b = board(n);
    const int N = static_cast<int>(b.size());
    long total = 0;
    std::vector<int> idx(static_cast<std::size_t>(q));
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == q) {
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    if (attacks(moves, b[idx[i]], b[idx[j]], n)) return;
            ++total;
            return;
        }
        for (int s = start; s < N; ++s) {
            idx[static_cast<std::size_t>(depth)] = s;
            self(self, depth + 1, s + 1);
        }
    };
    if (n > 0) rec(rec, 0, 0);
    return total;
}

// Every ordered q-tuple, repetition allowed (coincident squares attack).
inline long count_tuples(const qq::MoveSet& ms, int q, int n) {
    const auto moves = raw(ms);
    const auto b = board(n);
    const int N = static_cast<int>(b.size());
    long total = 0;
    std::vector<int> idx(static_cast<std::size_t>(q));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == q) {
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    if (i != j && attacks(moves, b[idx[i]], b[idx[j]], n)) return;
            ++total;
            return;
        }
        for (int s = 0; s < N; ++s) {
            idx[static_cast<std::size_t>(depth)] = s;
            self(self, depth + 1);
        }
    };
    if (n > 0) rec(rec, 0);
    return total;
}

// All kappa-tuples of squares, tested against every constraint.
inline long count_pattern(const qq::ConstraintPattern& p, int n) {
    const auto b = board(n);
    const int N = static_cast<int>(b.size());
    const int kappa = p.kappa();
    long total = 0;
    std::vector<int> idx(static_cast<std::size_t>(kappa));
    auto ok = [&]() {
        for (const auto& c : p.constraints()) {
            if (const auto* col = std::get_if<qq::Collinear>(&c)) {
                const Sq a = b[idx[col->i - 1]], z = b[idx[col->j - 1]];
                if (!multiple_of(z.x - a.x, z.y - a.y, col->slope.c(), col->slope.d(), n)) return false;
            } else {
                const auto& e = std::get<qq::Equal>(c);
                if (idx[e.i - 1] != idx[e.j - 1]) return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == kappa) {
            total += ok() ? 1 : 0;
            return;
        }
        for (int s = 0; s < N; ++s) {
            idx[static_cast<std::size_t>(depth)] = s;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return total;
}

// Chess rules for the queen, rook and bishop, written from scratch.
inline bool chess_queen(Sq a, Sq b) {
    return a.x == b.x || a.y == b.y || std::abs(a.x - b.x) == std::abs(a.y - b.y);
}

// ------------------------------------------------------------- generators

inline int gcd(int a, int b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline qq::Move random_move(std::mt19937& rng, int span = 3) {
    std::uniform_int_distribution<int> u(-span, span);
    for (;;) {
        int c = u(rng), d = u(rng);
        if ((c || d) && gcd(c, d) == 1) return qq::Move::make(c, d);
    }
}

inline qq::MoveSet random_moveset(std::mt19937& rng, int max_size = 3, int span = 3) {
    std::uniform_int_distribution<int> sz(1, max_size);
    const int want = sz(rng);
    std::vector<qq::Move> ms;
    while (static_cast<int>(ms.size()) < want) {
        auto m = random_move(rng, span);
        bool dup = false;
        for (auto x : ms) dup = dup || x == m;
        if (!dup) ms.push_back(m);
    }
    return qq::MoveSet(ms);
}

}  // namespace oracle
