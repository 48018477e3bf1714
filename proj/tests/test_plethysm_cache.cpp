#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "autopos/plethysm_cache.hpp"

using namespace autopos;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
    std::random_device rd;
    auto dir = std::filesystem::temp_directory_path() / ("autopos_test_" + tag + "_" + std::to_string(rd()));
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_SUITE("plethysm_cache") {

TEST_CASE("entry serialization round trip") {
    PlethysmCacheEntry e{Partition({2, 1}), Partition({1, 1}), plethysm(Partition({2, 1}), Partition({1, 1}))};
    const std::string text = e.serialize();
    CHECK(text == "plethysm-cache v1\n[2,1] [1,1]\n[2,1,1,1,1]\t1\n[2,2,1,1]\t1\n[3,2,1]\t1\n");
    auto back = PlethysmCacheEntry::parse(text);
    REQUIRE(back);
    CHECK(back->lhs == e.lhs);
    CHECK(back->rhs == e.rhs);
    CHECK(back->constituents == e.constituents);
}

TEST_CASE("malformed entries are rejected") {
    CHECK_FALSE(PlethysmCacheEntry::parse("plethysm-cache v2\n[1] [1]\n[1]\t1\n"));
    CHECK_FALSE(PlethysmCacheEntry::parse("plethysm-cache v1\n[1] [1]\n[2]\t1\n"));
    CHECK_FALSE(PlethysmCacheEntry::parse("plethysm-cache v1\n[2] [1]\n[2]\t0\n"));
    CHECK_FALSE(PlethysmCacheEntry::parse("plethysm-cache v1\n[2] [1]\n[2]\t1\n[1,1]\t1\n"));
    CHECK_FALSE(PlethysmCacheEntry::parse("plethysm-cache v1\n[2] [1]\n[2] 1\n"));
    CHECK(PlethysmCacheEntry::parse("plethysm-cache v1\n[2] [1]\n[1,1]\t1\n[2]\t1\n"));
}

TEST_CASE("store, load and hits") {
    const auto dir = fresh_dir("cache");
    PlethysmCache cache(dir);
    const Partition lambda{2, 2};
    const Partition mu{2};
    CHECK(cache.path_for(lambda, mu).filename() == "pleth_2-2_2.txt");
    CHECK_FALSE(cache.load(lambda, mu));

    bool hit = true;
    PlethysmOptions opts;
    const Decomposition cold = cached_plethysm(lambda, mu, opts, &cache, &hit);
    CHECK_FALSE(hit);
    CHECK(std::filesystem::exists(cache.path_for(lambda, mu)));
    const Decomposition warm = cached_plethysm(lambda, mu, opts, &cache, &hit);
    CHECK(hit);
    CHECK(warm == cold);
    CHECK(warm == plethysm(lambda, mu));

    opts.max_height = 2;
    const Decomposition restricted = cached_plethysm(lambda, mu, opts, &cache, &hit);
    CHECK(hit);
    CHECK(restricted == restrict_height(cold, 2));

    {
        std::ofstream corrupt(cache.path_for(lambda, mu), std::ios::trunc);
        corrupt << "garbage\n";
    }
    CHECK_FALSE(cache.load(lambda, mu));
    opts.max_height = 0;
    CHECK(cached_plethysm(lambda, mu, opts, &cache, &hit) == cold);
    CHECK_FALSE(hit);
    CHECK(cache.load(lambda, mu) == cold);

    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        CHECK(entry.path().filename().string().find(".tmp.") == std::string::npos);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("restricted misses are not stored") {
    const auto dir = fresh_dir("restricted");
    PlethysmCache cache(dir);
    PlethysmOptions opts;
    opts.max_height = 2;
    cached_plethysm(Partition({3}), Partition({2}), opts, &cache);
    CHECK_FALSE(std::filesystem::exists(cache.path_for(Partition({3}), Partition({2}))));
    std::filesystem::remove_all(dir);
}

}
