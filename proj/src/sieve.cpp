#include "ppz/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <new>
#include <string>

#include "ppz/errors.hpp"
#include "ppz/parallel.hpp"
#include "ppz/summation.hpp"

namespace ppz {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t bound) {
    std::vector<char> composite(bound + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return out;
}

// 64 bits starting at bit position pos (may straddle two words).
inline std::uint64_t bits_at(std::span<const std::uint64_t> words, std::uint64_t pos) {
    const std::uint64_t q = pos >> 6;
    const unsigned s = pos & 63;
    if (s == 0) return words[q];
    const std::uint64_t hi = q + 1 < words.size() ? words[q + 1] : 0;
    return (words[q] >> s) | (hi << (64 - s));
}

inline std::uint64_t low_mask(unsigned nbits) {
    return nbits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nbits) - 1);
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t limit, std::uint64_t segment_size, unsigned threads) {
    if (limit < 2 || limit > kMaxSieveLimit)
        throw CapacityError("build_prime_table: limit " + std::to_string(limit) +
                            " outside supported range [2, 2^40]");
    if (segment_size < kMinSegmentSize)
        throw DomainError("build_prime_table: segment_size must be >= 1024");

    PrimeTable t;
    t.limit_ = limit;
    t.segment_size_ = segment_size;

    const std::uint64_t n_bits = limit / 2 + 1;  // indices 0 .. limit/2
    const std::uint64_t n_words = (n_bits + 63) / 64 + 1;
    try {
        t.bits_.assign(n_words, 0);
    } catch (const std::bad_alloc&) {
        throw CapacityError("build_prime_table: cannot allocate bit array for limit " +
                            std::to_string(limit));
    }

    const std::uint64_t root = isqrt(limit);
    const std::vector<std::uint64_t> base = small_primes(root);

    const std::uint64_t seg_bits = std::max<std::uint64_t>(64, (segment_size / 2) / 64 * 64);
    const auto n_segments = static_cast<std::int64_t>((n_bits + seg_bits - 1) / seg_bits);

    parallel_for_blocks(
        n_segments,
        [&](std::int64_t seg) {
            const std::uint64_t b0 = static_cast<std::uint64_t>(seg) * seg_bits;
            const std::uint64_t b1 = std::min(n_bits, b0 + seg_bits);
            const std::uint64_t w0 = b0 / 64;
            const std::uint64_t w1 = (b1 + 63) / 64;
            for (std::uint64_t w = w0; w < w1; ++w) t.bits_[w] = ~std::uint64_t{0};
            if (b1 % 64 != 0) t.bits_[w1 - 1] &= low_mask(b1 % 64);

            const std::uint64_t lo = 2 * b0 + 1;
            const std::uint64_t hi = 2 * (b1 - 1) + 1;
            for (std::uint64_t p : base) {
                if (p == 2) continue;
                if (p * p > hi) break;
                std::uint64_t start = p * p;
                if (start < lo) {
                    start = (lo + p - 1) / p * p;
                    if ((start & 1) == 0) start += p;
                }
                for (std::uint64_t n = start; n <= hi; n += 2 * p) {
                    const std::uint64_t i = n >> 1;
                    t.bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
                }
            }
            if (seg == 0) t.bits_[0] &= ~std::uint64_t{1};  // 1 is not prime
        },
        threads);

    // Bits above limit inside the last real word: n = 2i+1 > limit.
    const std::uint64_t top = (limit - 1) / 2;  // largest index with 2i+1 <= limit
    for (std::uint64_t i = top + 1; i < n_bits; ++i) t.bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));

    for (std::uint64_t p : base) {
        if (p > limit / p) break;
        const double lp = std::log(static_cast<double>(p));
        for (std::uint64_t v = p * p;; v *= p) {
            t.higher_powers_.emplace_back(v, lp);
            if (v > limit / p) break;
        }
    }
    std::sort(t.higher_powers_.begin(), t.higher_powers_.end());
    return t;
}

double PrimeTable::von_mangoldt(std::uint64_t n) const {
    if (n == 0) throw DomainError("von_mangoldt: n must be >= 1");
    if (n > limit_) throw CapacityError("von_mangoldt: n exceeds table limit");
    if (is_prime(n)) return std::log(static_cast<double>(n));
    auto it = std::lower_bound(higher_powers_.begin(), higher_powers_.end(),
                               std::pair<std::uint64_t, double>{n, -1.0});
    if (it != higher_powers_.end() && it->first == n) return it->second;
    return 0.0;
}

std::uint64_t PrimeTable::prime_count(std::uint64_t upto) const {
    if (upto > limit_) throw CapacityError("prime_count: x exceeds table limit");
    if (upto < 2) return 0;
    std::uint64_t count = 1;  // the prime 2
    if (upto < 3) return count;
    const std::uint64_t last = (upto - 1) / 2;
    const std::uint64_t full = last / 64;
    for (std::uint64_t w = 0; w < full; ++w) count += std::popcount(bits_[w]);
    count += std::popcount(bits_[full] & low_mask(static_cast<unsigned>(last % 64) + 1));
    return count;
}

std::vector<std::uint64_t> PrimeTable::primes_up_to(std::uint64_t upto) const {
    std::vector<std::uint64_t> out;
    for_each_prime(2, upto, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

void PrimeTable::for_each_prime(std::uint64_t lo, std::uint64_t hi,
                                const std::function<void(std::uint64_t)>& fn) const {
    if (hi > limit_) throw CapacityError("for_each_prime: range exceeds table limit");
    if (hi < 2 || lo > hi) return;
    if (lo <= 2) fn(2);
    if (hi < 3) return;
    const std::uint64_t i0 = std::max<std::uint64_t>(lo, 3) / 2;
    const std::uint64_t i1 = (hi - 1) / 2;
    if (i0 > i1) return;
    for (std::uint64_t w = i0 >> 6; w <= (i1 >> 6); ++w) {
        std::uint64_t word = bits_[w];
        if (w == (i0 >> 6)) word &= ~low_mask(static_cast<unsigned>(i0 & 63));
        if (w == (i1 >> 6)) word &= low_mask(static_cast<unsigned>(i1 & 63) + 1);
        while (word) {
            const unsigned b = std::countr_zero(word);
            word &= word - 1;
            fn(2 * (w * 64 + b) + 1);
        }
    }
}

void PrimeTable::for_each_prime_power(
    std::uint64_t upto, const std::function<void(std::uint64_t, double)>& fn) const {
    if (upto > limit_) throw CapacityError("for_each_prime_power: x exceeds table limit");
    std::size_t j = 0;
    for_each_prime(2, upto, [&](std::uint64_t p) {
        while (j < higher_powers_.size() && higher_powers_[j].first < p) {
            fn(higher_powers_[j].first, higher_powers_[j].second);
            ++j;
        }
        fn(p, std::log(static_cast<double>(p)));
    });
    while (j < higher_powers_.size() && higher_powers_[j].first <= upto) {
        fn(higher_powers_[j].first, higher_powers_[j].second);
        ++j;
    }
}

// Starting points n <= x of pairs (n, n + two_r) where one member is 2 or a
// higher prime power. All remaining pairs are odd-prime pairs.
std::vector<std::uint64_t> PrimeTable::special_pair_starts(std::uint64_t two_r,
                                                           std::uint64_t upto) const {
    std::vector<std::uint64_t> out;
    auto consider = [&](std::uint64_t m) {
        if (m <= upto && von_mangoldt(m + two_r) != 0.0) out.push_back(m);
        if (m > two_r) {
            const std::uint64_t n = m - two_r;
            if (n <= upto && n != 2 && is_prime(n)) out.push_back(n);
        }
    };
    if (limit_ >= 2) consider(2);
    for (const auto& hp : higher_powers_) {
        if (hp.first > upto + two_r) break;
        consider(hp.first);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void PrimeTable::for_each_lambda_pair(
    std::uint64_t two_r, std::uint64_t upto,
    const std::function<void(std::uint64_t, double, double)>& fn) const {
    if (two_r % 2 != 0) throw DomainError("lambda pair sum: two_r must be even");
    if (upto + two_r > limit_)
        throw CapacityError("lambda pair sum: x + two_r = " + std::to_string(upto + two_r) +
                            " exceeds table limit " + std::to_string(limit_));
    if (two_r == 0) {
        for_each_prime_power(upto, [&](std::uint64_t n, double l) { fn(n, l, l); });
        return;
    }
    const std::vector<std::uint64_t> specials = special_pair_starts(two_r, upto);
    std::size_t j = 0;
    auto emit_special = [&](std::uint64_t n) {
        fn(n, von_mangoldt(n), von_mangoldt(n + two_r));
    };
    if (upto >= 3) {
        const std::uint64_t shift = two_r / 2;
        const std::uint64_t last = (upto - 1) / 2;
        for (std::uint64_t w = 0; w <= (last >> 6); ++w) {
            std::uint64_t word = bits_[w] & bits_at(bits_, w * 64 + shift);
            if (w == (last >> 6)) word &= low_mask(static_cast<unsigned>(last & 63) + 1);
            while (word) {
                const unsigned b = std::countr_zero(word);
                word &= word - 1;
                const std::uint64_t n = 2 * (w * 64 + b) + 1;
                while (j < specials.size() && specials[j] < n) emit_special(specials[j++]);
                fn(n, std::log(static_cast<double>(n)), std::log(static_cast<double>(n + two_r)));
            }
        }
    }
    while (j < specials.size()) emit_special(specials[j++]);
}

double von_mangoldt(std::uint64_t n) {
    if (n == 0) throw DomainError("von_mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    std::uint64_t p = 0;
    if (n % 2 == 0) {
        p = 2;
    } else {
        for (std::uint64_t d = 3; d <= n / d; d += 2) {
            if (n % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) return std::log(static_cast<double>(n));
    }
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::vector<std::vector<PairCountRecord>> count_prime_pairs_batch(
    const PrimeTable& table, std::span<const std::uint64_t> two_rs,
    std::span<const std::uint64_t> checkpoints) {
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw DomainError("count_prime_pairs: checkpoints must be ascending");
    std::uint64_t max_two_r = 0;
    for (std::uint64_t d : two_rs) {
        if (d == 0 || d % 2 != 0)
            throw DomainError("count_prime_pairs: two_r must be even and positive, got " +
                              std::to_string(d));
        max_two_r = std::max(max_two_r, d);
    }
    const std::uint64_t max_x = checkpoints.empty() ? 0 : checkpoints.back();
    if (max_x + max_two_r > table.limit())
        throw CapacityError("count_prime_pairs: checkpoint " + std::to_string(max_x) + " + two_r " +
                            std::to_string(max_two_r) + " exceeds table limit " +
                            std::to_string(table.limit()));

    const auto words = table.odd_bits();
    std::vector<std::vector<PairCountRecord>> out(two_rs.size());
    std::vector<std::uint64_t> running(two_rs.size(), 0);

    // Word-aligned sweep; each checkpoint closes at bit index (x-1)/2.
    std::uint64_t w = 0;
    for (std::uint64_t upto : checkpoints) {
        if (upto < 3) {
            for (std::size_t k = 0; k < two_rs.size(); ++k) out[k].push_back({two_rs[k], upto, 0});
            continue;
        }
        const std::uint64_t last = (upto - 1) / 2;
        const std::uint64_t full = last >> 6;
        for (; w < full; ++w) {
            const std::uint64_t base = words[w];
            for (std::size_t k = 0; k < two_rs.size(); ++k)
                running[k] += std::popcount(base & bits_at(words, w * 64 + two_rs[k] / 2));
        }
        const std::uint64_t tail_mask = low_mask(static_cast<unsigned>(last & 63) + 1);
        for (std::size_t k = 0; k < two_rs.size(); ++k) {
            const std::uint64_t partial = std::popcount(
                words[full] & bits_at(words, full * 64 + two_rs[k] / 2) & tail_mask);
            out[k].push_back({two_rs[k], upto, running[k] + partial});
        }
    }
    return out;
}

std::vector<PairCountRecord> count_prime_pairs(const PrimeTable& table, std::uint64_t two_r,
                                               std::span<const std::uint64_t> checkpoints) {
    const std::uint64_t one[1] = {two_r};
    return std::move(count_prime_pairs_batch(table, one, checkpoints).front());
}

double psi_2r(const PrimeTable& table, std::uint64_t two_r, std::uint64_t upto) {
    CompensatedSum acc;
    table.for_each_lambda_pair(two_r, upto, [&](std::uint64_t, double a, double b) { acc.add(a * b); });
    return acc.value();
}

}  // namespace ppz
