#include "qqueens/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qqueens/error.hpp"

namespace qq {

Move Move::make(int c, int d) {
    if (c == 0 && d == 0)
        throw InvalidArgument("move (0,0) is not a move");
    if (std::gcd(std::abs(c), std::abs(d)) != 1)
        throw InvalidArgument("move (" + std::to_string(c) + "," + std::to_string(d) +
                              ") is not in lowest terms");
    if (c < 0 || (c == 0 && d < 0)) {
        c = -c;
        d = -d;
    }
    return Move(c, d);
}

std::string Move::str() const {
    return "(" + std::to_string(c_) + "," + std::to_string(d_) + ")";
}

std::pair<int, int> chat_dhat(Move m) {
    const int a = std::abs(m.c());
    const int b = std::abs(m.d());
    return {std::min(a, b), std::max(a, b)};
}

MoveSet::MoveSet(std::vector<Move> moves) : moves_(std::move(moves)) {
    if (moves_.empty())
        throw InvalidArgument("a move set must be nonempty");
    std::sort(moves_.begin(), moves_.end());
    if (std::adjacent_find(moves_.begin(), moves_.end()) != moves_.end())
        throw InvalidArgument("move set contains parallel moves");
}

bool MoveSet::contains(Move m) const {
    return std::binary_search(moves_.begin(), moves_.end(), m);
}

std::string MoveSet::json() const {
    nlohmann::json j = *this;
    return j.dump();
}

PartialQueenSpec PartialQueenSpec::make(int h, int k) {
    if (h < 0 || h > 2 || k < 0 || k > 2)
        throw InvalidArgument("partial queen needs h,k in {0,1,2}");
    if (h + k < 1)
        throw InvalidArgument("partial queen needs h+k >= 1");
    return PartialQueenSpec{h, k};
}

MoveSet partial_queen(PartialQueenSpec spec) {
    spec = PartialQueenSpec::make(spec.h, spec.k);
    std::vector<Move> moves;
    if (spec.h >= 1) moves.push_back(Move::make(1, 0));
    if (spec.h == 2) moves.push_back(Move::make(0, 1));
    if (spec.k >= 1) moves.push_back(Move::make(1, 1));
    if (spec.k == 2) moves.push_back(Move::make(1, -1));
    return MoveSet(std::move(moves));
}

MoveSet partial_queen(int h, int k) { return partial_queen(PartialQueenSpec{h, k}); }

bool on_board(Square s, int n) noexcept {
    return s.x >= 1 && s.x <= n && s.y >= 1 && s.y <= n;
}

Placement::Placement(int board_size, std::vector<Square> squares)
    : n_(board_size), squares_(std::move(squares)) {
    if (squares_.empty())
        throw InvalidArgument("a placement needs at least one piece");
    for (Square s : squares_)
        if (!on_board(s, n_))
            throw InvalidArgument("square off the board");
}

bool Placement::nonattacking(const MoveSet& moves) const {
    for (std::size_t i = 0; i < squares_.size(); ++i)
        for (std::size_t j = i + 1; j < squares_.size(); ++j)
            if (attacks(moves, squares_[i], squares_[j])) return false;
    return true;
}

bool attacks(const MoveSet& moves, Square a, Square b) noexcept {
    const int dx = b.x - a.x;
    const int dy = b.y - a.y;
    for (Move m : moves)
        if (along(m, dx, dy)) return true;
    return false;
}

void to_json(nlohmann::json& j, const Move& m) { j = nlohmann::json::array({m.c(), m.d()}); }

void to_json(nlohmann::json& j, const MoveSet& ms) {
    j = nlohmann::json::array();
    for (Move m : ms) j.push_back(m);
}

void to_json(nlohmann::json& j, const PartialQueenSpec& s) { j = {{"h", s.h}, {"k", s.k}}; }

Move move_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InvalidArgument("a move is a pair [c,d] of integers");
    return Move::make(j[0].get<int>(), j[1].get<int>());
}

MoveSet moveset_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw InvalidArgument("a move set is a JSON array of [c,d] pairs");
    std::vector<Move> moves;
    for (const auto& e : j) moves.push_back(move_from_json(e));
    return MoveSet(std::move(moves));
}

PartialQueenSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("k"))
        throw InvalidArgument("a partial queen is {\"h\":int,\"k\":int}");
    return PartialQueenSpec::make(j.at("h").get<int>(), j.at("k").get<int>());
}

MoveSet parse_moveset(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("cannot parse move list: ") + e.what());
    }
    return moveset_from_json(j);
}

}  // namespace qq
