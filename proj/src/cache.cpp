#include "qqueens/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace qq {

CountCache::CountCache(std::string path, Warn warn) : path_(std::move(path)), warn_(std::move(warn)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            CountRecord rec = decode(line);
            const BigInt bound = 0;
            if (rec.count < bound) throw InvalidArgument("negative count");
            entries_.emplace(Key{rec.moves.json(), rec.q, rec.n}, rec.count);
        } catch (const std::exception& e) {
            ++skipped_;
            if (warn_) warn_(path_ + ":" + std::to_string(lineno) + ": skipping corrupt cache line (" + e.what() + ")");
        }
    }
}

std::optional<BigInt> CountCache::lookup(const MoveSet& moves, int q, int n) const {
    std::shared_lock lock(mu_);
    auto it = entries_.find(Key{moves.json(), q, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::store(const CountRecord& rec) {
    std::unique_lock lock(mu_);
    auto [it, inserted] = entries_.emplace(Key{rec.moves.json(), rec.q, rec.n}, rec.count);
    if (!inserted) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        if (warn_) warn_("cannot append to cache file " + path_);
        return;
    }
    out << encode(rec) << '\n';
}

std::size_t CountCache::size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
}

std::string CountCache::encode(const CountRecord& rec) {
    nlohmann::json j;
    j["moves"] = rec.moves;
    j["q"] = rec.q;
    j["n"] = rec.n;
    j["count"] = to_string(rec.count);
    return j.dump();
}

CountRecord CountCache::decode(const std::string& line) {
    try {
        const auto j = nlohmann::json::parse(line);
        MoveSet moves = moveset_from_json(j.at("moves"));
        const int q = j.at("q").get<int>();
        const int n = j.at("n").get<int>();
        if (q < 1 || n < 0) throw InvalidArgument("q or n out of range");
        return CountRecord{std::move(moves), q, n, parse_bigint(j.at("count").get<std::string>())};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(e.what());
    }
}

}  // namespace qq
