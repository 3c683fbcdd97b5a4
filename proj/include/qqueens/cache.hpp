#pragma once

// Append-only JSON-lines store of oracle counts, one record per line:
//   {"moves":[[c,d],...],"q":3,"n":12,"count":"123456"}
// Keyed by (canonical move set, q, n).  Lines that fail to parse are skipped
// with a warning and never trusted.

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "qqueens/enumerator.hpp"

namespace qq {

/// Name of the environment variable that overrides the cache location.
inline constexpr const char* kCacheEnvVar = "QQUEENS_CACHE";

class CountCache {
public:
    using Warn = std::function<void(const std::string&)>;

    /// Loads existing records from path (a missing file is an empty cache).
    explicit CountCache(std::string path, Warn warn = {});

    std::optional<BigInt> lookup(const MoveSet& moves, int q, int n) const;
    /// Appends the record to the file unless an equal key is already present.
    void store(const CountRecord& rec);

    std::size_t size() const;
    const std::string& path() const noexcept { return path_; }
    std::size_t skipped_lines() const noexcept { return skipped_; }

    /// One line, no trailing newline.
    static std::string encode(const CountRecord& rec);
    /// Throws InvalidArgument for malformed lines.
    static CountRecord decode(const std::string& line);

private:
    using Key = std::tuple<std::string, int, int>;

    std::string path_;
    Warn warn_;
    std::size_t skipped_ = 0;
    mutable std::shared_mutex mu_;
    std::map<Key, BigInt> entries_;
};

}  // namespace qq
