#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "splinedict/errors.hpp"
#include "splinedict/partition.hpp"
#include "splinedict/signalio.hpp"

using namespace splinedict;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

struct FileGuard {
    fs::path path;
    ~FileGuard() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

} // namespace

TEST_CASE("chirp values at exactly representable points") {
    CHECK(chirp(0.0) == doctest::Approx(1.0));
    CHECK(chirp(0.5) == doctest::Approx(std::cos(kPi / 2.0)).epsilon(1e-12));
    CHECK(chirp(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(chirp(2.0) == doctest::Approx(1.0).epsilon(1e-12));

    SampledSignal sig = gen_chirp(2049);
    CHECK(sig.c == 0.0);
    CHECK(sig.d == 8.0);
    CHECK(sig.values.size() == 2049);
    CHECK(sig.values.front() == doctest::Approx(1.0));
    CHECK(sig.values.back() == doctest::Approx(chirp(8.0)).epsilon(1e-12));
    CHECK(sig.grid().front() == 0.0);
    CHECK(sig.grid().back() == 8.0);
}

TEST_CASE("piecewise constant phase lookup puts breakpoints on the right piece") {
    PiecewiseConstantPhase phase{{1.0, 2.0}, {0.1, 0.2, 0.3}};
    CHECK(phase.value(0.5) == 0.1);
    CHECK(phase.value(1.0) == 0.2);
    CHECK(phase.value(1.5) == 0.2);
    CHECK(phase.value(2.0) == 0.3);
    CHECK(phase.value(3.0) == 0.3);
}

TEST_CASE("a zero phase gives a plain cosine") {
    PiecewiseConstantPhase zero{{}, {0.0}};
    SampledSignal sig = gen_phased_cosine(129, zero, 0.0, 1.0);
    const std::vector<double> grid = sig.grid();
    for (std::size_t i = 0; i < sig.values.size(); ++i)
        CHECK(sig.values[i] == doctest::Approx(std::cos(8.0 * kPi * grid[i])).epsilon(1e-12));
}

TEST_CASE("a phase jump of pi flips the sign of the second half") {
    PiecewiseConstantPhase flat{{}, {0.0}};
    PiecewiseConstantPhase jump{{0.5}, {0.0, kPi}};
    SampledSignal a = gen_phased_cosine(257, flat, 0.0, 1.0);
    SampledSignal b = gen_phased_cosine(257, jump, 0.0, 1.0);
    const std::vector<double> grid = a.grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.5)
            CHECK(b.values[i] == doctest::Approx(a.values[i]).epsilon(1e-12));
        else
            CHECK(b.values[i] == doctest::Approx(-a.values[i]).epsilon(1e-9));
    }
}

TEST_CASE("phase levels and breakpoints are validated") {
    PiecewiseConstantPhase bad{{0.5}, {0.0}};
    try {
        gen_phased_cosine(64, bad, 0.0, 1.0);
        FAIL("expected a count error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_count);
    }
    try {
        random_phase(0.0, 1.0, 0, 7);
        FAIL("expected a count error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_count);
    }
}

TEST_CASE("seeded phases are reproducible and seed-sensitive") {
    PiecewiseConstantPhase p1 = random_phase(0.0, 4.0, 8, 42);
    PiecewiseConstantPhase p2 = random_phase(0.0, 4.0, 8, 42);
    PiecewiseConstantPhase p3 = random_phase(0.0, 4.0, 8, 43);
    CHECK(p1.breakpoints == p2.breakpoints);
    CHECK(p1.levels == p2.levels);
    CHECK(p1.breakpoints != p3.breakpoints);
    REQUIRE(p1.breakpoints.size() == 7);
    REQUIRE(p1.levels.size() == 8);
    for (double b : p1.breakpoints) {
        CHECK(b > 0.0);
        CHECK(b < 4.0);
    }
    for (std::size_t i = 1; i < p1.breakpoints.size(); ++i)
        CHECK(p1.breakpoints[i] >= p1.breakpoints[i - 1]);
    for (double l : p1.levels) {
        CHECK(l >= 0.0);
        CHECK(l < 2.0 * kPi);
    }

    SampledSignal s1 = gen_phased_cosine(513, 42);
    SampledSignal s2 = gen_phased_cosine(513, 42);
    SampledSignal s3 = gen_phased_cosine(513, 43);
    CHECK(s1.values == s2.values);
    CHECK(s1.values != s3.values);
    CHECK(s1.c == 0.0);
    CHECK(s1.d == 4.0);
}

TEST_CASE("signal files load with the expected grid step") {
    FileGuard g{temp_file("sigio_vals.txt")};
    {
        std::ofstream os(g.path);
        for (int i = 0; i < 513; ++i)
            os << (i * 0.001) << "\n";
    }
    SampledSignal sig = load_signal(g.path, 0.0, 1.0);
    CHECK(sig.values.size() == 513);
    CHECK(sig.h() == doctest::Approx(1.0 / 512.0).epsilon(1e-15));
    CHECK(sig.values[10] == doctest::Approx(0.010).epsilon(1e-12));
}

TEST_CASE("signal files tolerate blank lines and surrounding whitespace") {
    FileGuard g{temp_file("sigio_ws.txt")};
    {
        std::ofstream os(g.path);
        os << "  1.5 \n\n\t-2.25\r\n3\n\n";
        for (int i = 0; i < 4; ++i)
            os << i << "\n";
    }
    SampledSignal sig = load_signal(g.path, 0.0, 1.0);
    REQUIRE(sig.values.size() == 7);
    CHECK(sig.values[0] == 1.5);
    CHECK(sig.values[1] == -2.25);
    CHECK(sig.values[2] == 3.0);
    CHECK(sig.values[6] == 3.0);
}

TEST_CASE("signal parse errors carry the line number") {
    FileGuard g{temp_file("sigio_bad.txt")};
    {
        std::ofstream os(g.path);
        os << "1.0\n2.0\nnot-a-number\n4.0\n5.0\n6.0\n";
    }
    try {
        load_signal(g.path, 0.0, 1.0);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }
}

TEST_CASE("missing and empty signal files are reported distinctly") {
    try {
        load_signal(temp_file("sigio_does_not_exist.txt"), 0.0, 1.0);
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::io_failure);
    }

    FileGuard g{temp_file("sigio_empty.txt")};
    {
        std::ofstream os(g.path);
    }
    try {
        load_signal(g.path, 0.0, 1.0);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("signal save and load round-trips bit-exactly") {
    SampledSignal orig = gen_phased_cosine(257, 9);
    FileGuard g{temp_file("sigio_round.txt")};
    save_signal(orig, g.path);
    SampledSignal back = load_signal(g.path, orig.c, orig.d);
    REQUIRE(back.values.size() == orig.values.size());
    for (std::size_t i = 0; i < orig.values.size(); ++i)
        CHECK(back.values[i] == orig.values[i]);
}

TEST_CASE("partition save and load round-trips bit-exactly") {
    Partition p({0.0, 0.1, 0.30000000000000004, 0.7, 1.0});
    FileGuard g{temp_file("sigio_partition.json")};
    save_partition(p, g.path);
    Partition back = load_partition(g.path);
    CHECK(back.points() == p.points());

    nlohmann::json j = load_json(g.path);
    CHECK(j.at("c").get<double>() == 0.0);
    CHECK(j.at("d").get<double>() == 1.0);
    CHECK(j.at("points").size() == 5);
}

TEST_CASE("malformed partition files are rejected") {
    FileGuard g{temp_file("sigio_badpart.json")};
    save_json(nlohmann::json{{"c", 0.0}, {"d", 1.0}}, g.path);
    try {
        load_partition(g.path);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("decomposition serialization keeps the selection and the log") {
    AtomicDecomposition dec;
    dec.gamma = {4, 1, 9};
    dec.coeffs = {0.5, -1.25, 3.0};
    dec.residual_norm = 0.125;
    dec.stage_log.oomp_atoms = 3;
    dec.stage_log.oomp_residual = 0.25;
    dec.stage_log.oomp_residual_history = {1.0, 0.5, 0.3, 0.25};
    dec.stage_log.total_swaps = 2;
    dec.stage_log.total_pruned = 1;
    dec.stage_log.refine_rounds = 2;

    nlohmann::json j = decomposition_to_json(dec, "dict.json");
    CHECK(j.at("k").get<std::size_t>() == 3);
    CHECK(j.at("atoms").size() == 3);
    CHECK(j.at("atoms")[0].get<std::size_t>() == 4);
    CHECK(j.at("coefficients")[1].get<double>() == -1.25);
    CHECK(j.at("residual_norm").get<double>() == 0.125);
    CHECK(j.at("dictionary").get<std::string>() == "dict.json");
    CHECK(j.at("stage_log").at("total_swaps").get<std::size_t>() == 2);
    CHECK(j.at("stage_log").at("total_pruned").get<std::size_t>() == 1);
    CHECK(j.at("stage_log").at("refine_rounds").get<std::size_t>() == 2);
    CHECK(j.at("stage_log").at("oomp_residual_history").size() == 4);

    FileGuard g{temp_file("sigio_dec.json")};
    save_decomposition(dec, g.path);
    nlohmann::json back = load_json(g.path);
    CHECK(back.at("k").get<std::size_t>() == 3);
    CHECK_FALSE(back.contains("dictionary"));
}

TEST_CASE("reconstruction table lists one row per sample") {
    std::vector<double> grid = {0.0, 0.5, 1.0};
    std::vector<double> f = {1.0, 2.0, 3.0};
    std::vector<double> approx = {1.0, 1.5, 3.5};
    std::ostringstream os;
    write_reconstruction_csv(grid, f, approx, os);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "x,signal,approximation,residual");
    REQUIRE(std::getline(is, line));
    CHECK(line == "0,1,1,0");
    REQUIRE(std::getline(is, line));
    CHECK(line == "0.5,2,1.5,0.5");
    REQUIRE(std::getline(is, line));
    CHECK(line == "1,3,3.5,-0.5");
    CHECK_FALSE(std::getline(is, line));
}
