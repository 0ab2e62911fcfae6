#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "ppz/errors.hpp"
#include "ppz/pair_cache.hpp"
#include "ppz/parallel.hpp"
#include "ppz/sieve.hpp"

using namespace ppz;

TEST_CASE("prime counts at powers of ten") {
    const auto table = PrimeTable::build(1'000'000);
    CHECK(table.prime_count(10) == 4);
    CHECK(table.prime_count(1000) == 168);
    CHECK(table.prime_count(100000) == 9592);
    CHECK(table.prime_count(1000000) == 78498);
    CHECK(table.is_prime(2));
    CHECK_FALSE(table.is_prime(1));
    CHECK_FALSE(table.is_prime(1'000'001));
}

TEST_CASE("primality agrees with a byte sieve on random limits") {
    oracle::Gen gen(101);
    for (int trial = 0; trial < 12; ++trial) {
        const std::uint64_t limit = gen.integer(2, 200'000);
        const auto seg = std::uint64_t{1} << gen.integer(10, 14);
        const auto table = PrimeTable::build(limit, seg, static_cast<unsigned>(gen.integer(1, 4)));
        const auto is = oracle::sieve(limit);
        bool same = true;
        for (std::uint64_t n = 0; n <= limit + 3; ++n)
            if (table.is_prime(n) != (n <= limit && is[n])) same = false;
        CHECK(same);
    }
}

TEST_CASE("the bit array does not depend on segment size or thread count") {
    const auto ref = PrimeTable::build(3'000'000, kMinSegmentSize, 1);
    for (std::uint64_t seg : {std::uint64_t{1} << 12, std::uint64_t{1} << 16, kDefaultSegmentSize})
        for (unsigned threads : {1u, 2u, 5u}) CHECK(PrimeTable::build(3'000'000, seg, threads) == ref);
}

TEST_CASE("von Mangoldt values") {
    const auto table = PrimeTable::build(1000);
    CHECK(table.von_mangoldt(1) == 0.0);
    CHECK(table.von_mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(table.von_mangoldt(9) == doctest::Approx(std::log(3.0)));
    CHECK(table.von_mangoldt(12) == 0.0);
    CHECK(table.von_mangoldt(997) == doctest::Approx(std::log(997.0)));
    const auto is = oracle::sieve(1000);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        CHECK(table.von_mangoldt(n) == oracle::lambda_from_sieve(is, n));
        CHECK(von_mangoldt(n) == oracle::lambda_from_sieve(is, n));
    }
    CHECK_THROWS_AS(table.von_mangoldt(0), DomainError);
    CHECK_THROWS_AS(table.von_mangoldt(1001), CapacityError);
}

TEST_CASE("reference pair counts at 10^3 and 10^4") {
    const auto table = PrimeTable::build(10'210);
    const std::uint64_t xs[] = {1000, 10000};
    CHECK(count_prime_pairs(table, 2, xs)[0].count == 35);
    CHECK(count_prime_pairs(table, 2, xs)[1].count == 205);
    CHECK(count_prime_pairs(table, 6, xs)[0].count == 74);
    CHECK(count_prime_pairs(table, 6, xs)[1].count == 411);
    CHECK(count_prime_pairs(table, 210, xs)[0].count == 107);
    CHECK(count_prime_pairs(table, 210, xs)[1].count == 641);
}

TEST_CASE("pair counts agree with brute force for random differences and checkpoints") {
    const std::uint64_t limit = 300'000;
    const auto table = PrimeTable::build(limit);
    const auto is = oracle::sieve(limit);
    oracle::Gen gen(202);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t two_r = gen.even(2, 400);
        std::vector<std::uint64_t> xs;
        std::uint64_t upto = 0;
        for (int i = 0; i < 4; ++i) xs.push_back(upto += gen.integer(1, (limit - 400) / 4));
        const auto got = count_prime_pairs(table, two_r, xs);
        for (std::size_t i = 0; i < xs.size(); ++i) CHECK(got[i].count == oracle::pair_count(is, two_r, xs[i]));
    }
}

TEST_CASE("batch counting equals one-at-a-time counting") {
    const auto table = PrimeTable::build(1'000'300);
    const std::vector<std::uint64_t> two_rs = {2, 4, 30, 210, 256};
    const std::vector<std::uint64_t> xs = {10, 999, 65536, 1'000'000};
    const auto batch = count_prime_pairs_batch(table, two_rs, xs);
    for (std::size_t i = 0; i < two_rs.size(); ++i) CHECK(batch[i] == count_prime_pairs(table, two_rs[i], xs));
}

TEST_CASE("pair counting rejects bad input") {
    const auto table = PrimeTable::build(1000);
    const std::uint64_t ok[] = {100};
    const std::uint64_t big[] = {999};
    const std::uint64_t unsorted[] = {100, 50};
    CHECK_THROWS_AS(count_prime_pairs(table, 3, ok), DomainError);
    CHECK_THROWS_AS(count_prime_pairs(table, 0, ok), DomainError);
    CHECK_THROWS_AS(count_prime_pairs(table, 2, big), CapacityError);
    CHECK_THROWS_AS(count_prime_pairs(table, 2, unsorted), DomainError);
    CHECK_THROWS_AS(PrimeTable::build(1), CapacityError);
    CHECK_THROWS_AS(PrimeTable::build(1000, 64), DomainError);
}

TEST_CASE("lambda pairs visit exactly the nonzero products") {
    const std::uint64_t limit = 20'000;
    const auto table = PrimeTable::build(limit);
    const auto is = oracle::sieve(limit);
    for (std::uint64_t two_r : {0u, 2u, 6u, 14u, 64u}) {
        const std::uint64_t upto = limit - 64;
        std::vector<std::uint64_t> seen;
        bool values_ok = true;
        table.for_each_lambda_pair(two_r, upto, [&](std::uint64_t n, double a, double b) {
            seen.push_back(n);
            if (a != oracle::lambda_from_sieve(is, n) || b != oracle::lambda_from_sieve(is, n + two_r))
                values_ok = false;
        });
        std::vector<std::uint64_t> expected;
        for (std::uint64_t n = 1; n <= upto; ++n)
            if (oracle::lambda_from_sieve(is, n) != 0.0 && oracle::lambda_from_sieve(is, n + two_r) != 0.0)
                expected.push_back(n);
        CHECK(values_ok);
        CHECK(seen == expected);
    }
}

TEST_CASE("psi_2r matches a direct sum") {
    const auto table = PrimeTable::build(5000);
    const auto is = oracle::sieve(5000);
    double direct = 0.0;
    for (std::uint64_t n = 1; n <= 4000; ++n)
        direct += oracle::lambda_from_sieve(is, n) * oracle::lambda_from_sieve(is, n + 4);
    CHECK(psi_2r(table, 4, 4000) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("pair cache round trip and merge") {
    const auto dir = std::filesystem::temp_directory_path() / "ppz_cache_test";
    std::filesystem::remove_all(dir);
    CHECK_FALSE(read_pair_cache(dir, 1000, 2).has_value());
    const std::vector<PairCountRecord> first = {{2, 1000, 35}};
    const std::vector<PairCountRecord> second = {{2, 100, 8}};
    write_pair_cache(dir, 1000, 2, first);
    const auto merged = write_pair_cache(dir, 1000, 2, second);
    REQUIRE(merged.size() == 2);
    CHECK(merged[0].upto == 100);
    CHECK(*read_pair_cache(dir, 1000, 2) == merged);
    CHECK(pair_cache_path(dir, 1000, 2) == dir / "pairs" / "1000" / "2.csv");
    const std::vector<PairCountRecord> conflict = {{2, 1000, 36}};
    CHECK_THROWS_AS(write_pair_cache(dir, 1000, 2, conflict), Error);
    CHECK(format_pair_records(merged) == "two_r,x,count\n2,100,8\n2,1000,35\n");
    CHECK_THROWS_AS(parse_pair_records("two_r,x,count\n2,abc,3\n"), ParseError);
    std::filesystem::remove_all(dir);
}
