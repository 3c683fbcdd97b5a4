#pragma once

// Boards, basic moves, pieces and the attack relation.
//
// Squares are 1-based: the n x n board is [n]^2 with [n] = {1,...,n}.
// A move (c,d) is stored primitive (gcd(|c|,|d|) = 1) and with canonical
// sign (c > 0, or c = 0 and d = 1) so that two parallel moves compare equal.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qq {

class Move {
public:
    /// Throws InvalidArgument for (0,0) or a non-primitive vector.
    /// The sign is normalized, so make(-1,1) == make(1,-1).
    static Move make(int c, int d);

    int c() const noexcept { return c_; }
    int d() const noexcept { return d_; }

    std::string str() const;

    auto operator<=>(const Move&) const = default;

private:
    Move(int c, int d) : c_(c), d_(d) {}
    int c_;
    int d_;
};

/// (min(|c|,|d|), max(|c|,|d|)).
std::pair<int, int> chat_dhat(Move m);

/// Nonempty set of pairwise non-parallel basic moves, kept sorted.
class MoveSet {
public:
    explicit MoveSet(std::vector<Move> moves);
    MoveSet(std::initializer_list<Move> moves) : MoveSet(std::vector<Move>(moves)) {}

    std::size_t size() const noexcept { return moves_.size(); }
    auto begin() const noexcept { return moves_.begin(); }
    auto end() const noexcept { return moves_.end(); }
    const Move& operator[](std::size_t i) const { return moves_[i]; }
    const std::vector<Move>& moves() const noexcept { return moves_; }
    bool contains(Move m) const;

    /// "[[c,d],...]" in sorted order; used as the cache key.
    std::string json() const;

    bool operator==(const MoveSet&) const = default;

private:
    std::vector<Move> moves_;
};

struct PartialQueenSpec {
    int h = 0;  // number of orthogonal moves: 0, 1 (horizontal) or 2
    int k = 0;  // number of diagonal moves: 0, 1 (slope +1) or 2

    /// Validates h,k in {0,1,2} and h+k >= 1.
    static PartialQueenSpec make(int h, int k);
};

MoveSet partial_queen(PartialQueenSpec spec);
MoveSet partial_queen(int h, int k);

struct Square {
    int x = 1;
    int y = 1;
    bool operator==(const Square&) const = default;
};

bool on_board(Square s, int n) noexcept;

/// Labelled pieces P_1..P_q on an n x n board.
class Placement {
public:
    Placement(int board_size, std::vector<Square> squares);
    int board_size() const noexcept { return n_; }
    const std::vector<Square>& squares() const noexcept { return squares_; }
    std::size_t size() const noexcept { return squares_.size(); }

    /// True when no two pieces attack (coincident pieces attack).
    bool nonattacking(const MoveSet& moves) const;

private:
    int n_;
    std::vector<Square> squares_;
};

/// b - a is an integer multiple (zero included) of some move.
bool attacks(const MoveSet& moves, Square a, Square b) noexcept;

/// Displacement (dx,dy) is a multiple of m.  Primitive m makes the integer
/// condition automatic once the cross product vanishes.
inline bool along(Move m, int dx, int dy) noexcept {
    return static_cast<long long>(dx) * m.d() == static_cast<long long>(dy) * m.c();
}

// JSON: a move set is [[c,d],...]; a partial-queen spec is {"h":..,"k":..}.
void to_json(nlohmann::json& j, const Move& m);
void to_json(nlohmann::json& j, const MoveSet& ms);
void to_json(nlohmann::json& j, const PartialQueenSpec& s);
Move move_from_json(const nlohmann::json& j);
MoveSet moveset_from_json(const nlohmann::json& j);
PartialQueenSpec spec_from_json(const nlohmann::json& j);

/// Parses the text form accepted on the command line, e.g. "[[1,0],[1,2]]".
MoveSet parse_moveset(const std::string& text);

}  // namespace qq
