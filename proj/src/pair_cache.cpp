#include "ppz/pair_cache.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ppz/errors.hpp"

namespace ppz {

namespace fs = std::filesystem;

fs::path pair_cache_path(const fs::path& cache_dir, std::uint64_t limit, std::uint64_t two_r) {
    return cache_dir / "pairs" / std::to_string(limit) / (std::to_string(two_r) + ".csv");
}

std::string format_pair_records(std::span<const PairCountRecord> records) {
    std::string out = "two_r,x,count\n";
    for (const auto& r : records)
        out += std::to_string(r.two_r) + "," + std::to_string(r.upto) + "," + std::to_string(r.count) + "\n";
    return out;
}

std::vector<PairCountRecord> parse_pair_records(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::int64_t line_no = 0;
    std::vector<PairCountRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line != "two_r,x,count") throw ParseError("pair cache: bad header", line_no);
            continue;
        }
        if (line.empty()) continue;
        PairCountRecord r;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        if (!(row >> r.two_r >> c1 >> r.upto >> c2 >> r.count) || c1 != ',' || c2 != ',')
            throw ParseError("pair cache: malformed row '" + line + "'", line_no);
        out.push_back(r);
    }
    if (line_no == 0) throw ParseError("pair cache: empty file", 1);
    return out;
}

std::optional<std::vector<PairCountRecord>> read_pair_cache(const fs::path& cache_dir,
                                                            std::uint64_t limit,
                                                            std::uint64_t two_r) {
    const fs::path p = pair_cache_path(cache_dir, limit, two_r);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pair_records(buf.str());
}

std::vector<PairCountRecord> write_pair_cache(const fs::path& cache_dir, std::uint64_t limit,
                                              std::uint64_t two_r,
                                              std::span<const PairCountRecord> records) {
    std::map<std::uint64_t, PairCountRecord> merged;
    if (auto existing = read_pair_cache(cache_dir, limit, two_r))
        for (const auto& r : *existing) merged[r.upto] = r;
    for (const auto& r : records) {
        if (r.two_r != two_r) throw DomainError("pair cache: record two_r does not match file key");
        auto it = merged.find(r.upto);
        if (it != merged.end() && it->second.count != r.count)
            throw Error("pair cache: cached count disagrees for x=" + std::to_string(r.upto));
        merged[r.upto] = r;
    }
    std::vector<PairCountRecord> out;
    out.reserve(merged.size());
    for (const auto& kv : merged) out.push_back(kv.second);

    const fs::path target = pair_cache_path(cache_dir, limit, two_r);
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw CapacityError("pair cache: cannot create " + target.parent_path().string());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) throw CapacityError("pair cache: cannot write " + tmp.string());
        o << format_pair_records(out);
        if (!o) throw CapacityError("pair cache: write failed for " + tmp.string());
    }
    fs::rename(tmp, target, ec);
    if (ec) throw CapacityError("pair cache: rename failed for " + target.string());
    return out;
}

}  // namespace ppz
