#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/io.hpp"
#include "routelab/rng.hpp"

using namespace routelab;

TEST_CASE("rng: same seed reproduces the byte stream, different seeds diverge") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t x = a.next_u64();
        all_equal = all_equal && (x == b.next_u64());
        any_diff = any_diff || (x != c.next_u64());
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("rng: uniform01 stays in [0,1) and has a sane mean") {
    Rng rng(1);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("rng: uniform_int covers [0,n) without bias at small n") {
    Rng rng(2);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_int(7)];
    for (const int c : counts) CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("rng: exponential and normal have unit-scale moments") {
    Rng rng(3);
    double esum = 0.0, nsum = 0.0, nsq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        esum += rng.exponential();
        const double z = rng.normal();
        nsum += z;
        nsq += z * z;
    }
    CHECK(esum / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(nsum / n == doctest::Approx(0.0).epsilon(0.02));
    CHECK(nsq / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("rng: derive_seed separates streams and indices") {
    const std::uint64_t base = derive_seed(7, "stream");
    CHECK(base == derive_seed(7, "stream"));
    CHECK(base != derive_seed(8, "stream"));
    CHECK(base != derive_seed(7, "other"));
    CHECK(derive_seed(7, "stream", 1) != derive_seed(7, "stream", 2));
    CHECK(derive_seed(7, "stream", 1, 2) != derive_seed(7, "stream", 2, 1));
}

TEST_CASE("io: format_double round-trips exactly and uses plain decimal forms") {
    for (const double x : {0.0, 1.0, -1.5, 0.1, 1.0 / 3.0, 1e-12, 123456789.123456}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.55) == "0.55");
    CHECK(format_double(-2.0) == "-2");
}

TEST_CASE("io: fnv1a64 digest matches the published reference values") {
    // reference vectors for the 64-bit FNV-1a offset/prime
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("io: csv builder and reader agree, comments are skipped") {
    CsvBuilder csv;
    csv.comment("header comment");
    csv.row({"a", "b", "c"});
    csv.row({"1", "2.5", ""});
    const std::string path = (std::filesystem::temp_directory_path() / "routelab_csv_test.csv").string();
    write_text_file(path, csv.str());
    const auto rows = read_csv(path);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
    CHECK(rows[1] == std::vector<std::string>{"1", "2.5", ""});
    std::remove(path.c_str());
}

TEST_CASE("io: text file round-trip") {
    const std::string path = (std::filesystem::temp_directory_path() / "routelab_io_test.txt").string();
    const std::string content = "line1\nline2\n";
    write_text_file(path, content);
    CHECK(read_text_file(path) == content);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file(path), InvalidInput);
}
