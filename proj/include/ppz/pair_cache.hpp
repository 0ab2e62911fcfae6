// pair_cache.hpp
// On-disk cache of prime-pair counts: cache_dir/pairs/<limit>/<two_r>.csv,
// header "two_r,x,count", rows sorted by x. Writes go to a temporary file that
// is renamed into place.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppz/sieve.hpp"

namespace ppz {

std::filesystem::path pair_cache_path(const std::filesystem::path& cache_dir, std::uint64_t limit,
                                      std::uint64_t two_r);

// Renders records exactly as stored on disk.
std::string format_pair_records(std::span<const PairCountRecord> records);

// Parses the CSV form; throws ParseError with the offending line number.
std::vector<PairCountRecord> parse_pair_records(const std::string& text);

// nullopt when the file is absent.
std::optional<std::vector<PairCountRecord>> read_pair_cache(const std::filesystem::path& cache_dir,
                                                            std::uint64_t limit,
                                                            std::uint64_t two_r);

// Merges records with whatever is cached (same x must agree), then rewrites
// the file atomically. Returns the merged list.
std::vector<PairCountRecord> write_pair_cache(const std::filesystem::path& cache_dir,
                                              std::uint64_t limit, std::uint64_t two_r,
                                              std::span<const PairCountRecord> records);

}  // namespace ppz
