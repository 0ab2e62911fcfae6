// sieve.hpp
// Segmented odd-only sieve, von Mangoldt values, prime-pair counts and
// Lambda-weighted pair sums.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ppz {

inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kMinSegmentSize = std::uint64_t{1} << 10;
inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 18;

// Primality of every n in [2, limit], one bit per odd number.
// Immutable after build(); safe to share between threads.
class PrimeTable {
public:
    // Throws CapacityError for limit outside [2, 2^40] or when the bit array
    // cannot be allocated, DomainError for segment_size < 2^10.
    static PrimeTable build(std::uint64_t limit,
                            std::uint64_t segment_size = kDefaultSegmentSize,
                            unsigned threads = 0);

    std::uint64_t limit() const { return limit_; }
    std::uint64_t segment_size() const { return segment_size_; }

    // False outside [2, limit].
    bool is_prime(std::uint64_t n) const {
        if (n > limit_ || n < 2) return false;
        if ((n & 1) == 0) return n == 2;
        const std::uint64_t i = n >> 1;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    // Lambda(n) for 1 <= n <= limit, from primality plus the sparse list of
    // higher prime powers. Throws DomainError for n == 0, CapacityError above
    // limit.
    double von_mangoldt(std::uint64_t n) const;

    // pi(x) for x <= limit.
    std::uint64_t prime_count(std::uint64_t upto) const;

    std::vector<std::uint64_t> primes_up_to(std::uint64_t upto) const;

    // Calls fn(p) for every prime p in [lo, hi], ascending.
    void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                        const std::function<void(std::uint64_t)>& fn) const;

    // Calls fn(n, Lambda(n)) for every prime power n <= x, ascending.
    void for_each_prime_power(std::uint64_t upto,
                              const std::function<void(std::uint64_t, double)>& fn) const;

    // Calls fn(n, Lambda(n), Lambda(n + two_r)) for every n <= x with both
    // values nonzero, ascending in n. two_r must be even and >= 0 (two_r == 0
    // visits prime powers with Lambda(n)^2); x + two_r <= limit.
    void for_each_lambda_pair(std::uint64_t two_r, std::uint64_t upto,
                              const std::function<void(std::uint64_t, double, double)>& fn) const;

    // p^k with k >= 2, p prime, p^k <= limit; sorted by value, paired with
    // log p.
    std::span<const std::pair<std::uint64_t, double>> higher_prime_powers() const {
        return higher_powers_;
    }

    // Raw odd-only bit array: bit i is set iff 2i+1 is prime. One trailing
    // zero word of padding.
    std::span<const std::uint64_t> odd_bits() const { return bits_; }

    bool operator==(const PrimeTable& other) const {
        return limit_ == other.limit_ && bits_ == other.bits_;
    }

private:
    std::uint64_t limit_ = 0;
    std::uint64_t segment_size_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::pair<std::uint64_t, double>> higher_powers_;

    std::vector<std::uint64_t> special_pair_starts(std::uint64_t two_r, std::uint64_t upto) const;
};

// Lambda(n) without a table: strips the smallest prime factor found by trial
// division. Throws DomainError for n == 0.
double von_mangoldt(std::uint64_t n);

struct PairCountRecord {
    std::uint64_t two_r = 0;
    std::uint64_t upto = 0;
    std::uint64_t count = 0;
    bool operator==(const PairCountRecord&) const = default;
};

// #{p <= x : p and p + two_r prime} at each checkpoint.
// Throws DomainError for odd or non-positive two_r or unsorted checkpoints,
// CapacityError when max(checkpoints) + two_r > table.limit().
std::vector<PairCountRecord> count_prime_pairs(const PrimeTable& table, std::uint64_t two_r,
                                               std::span<const std::uint64_t> checkpoints);

// Same counts for several differences in one pass over the table; result[i]
// belongs to two_rs[i].
std::vector<std::vector<PairCountRecord>> count_prime_pairs_batch(
    const PrimeTable& table, std::span<const std::uint64_t> two_rs,
    std::span<const std::uint64_t> checkpoints);

// psi_{2r}(x) = sum_{n <= x} Lambda(n) Lambda(n + two_r), compensated.
double psi_2r(const PrimeTable& table, std::uint64_t two_r, std::uint64_t upto);

}  // namespace ppz
