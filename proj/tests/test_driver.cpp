#include "gkf/driver.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace gkf;
namespace fs = std::filesystem;

namespace {

struct Table {
    std::vector<std::size_t> dims, betti, ranks;
    std::int64_t euler;
};

Table table_of(const CohomologyReport& r)
{
    Table t{{}, {}, {}, r.euler_from_dims};
    for (const auto& x : r.rows) {
        t.dims.push_back(x.dim);
        t.betti.push_back(x.betti);
        t.ranks.push_back(x.rank_out);
    }
    return t;
}

BuildOptions quiet(int min_gen = 3)
{
    BuildOptions o;
    o.min_gen = min_gen;
    return o;
}

fs::path fresh_dir(const std::string& name)
{
    const auto p = fs::temp_directory_path() / ("gkf-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const char* cli = std::getenv("GKF_CLI");
    if (!cli) return {-1, ""};
    const std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* p = ::popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    const int st = ::pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

} // namespace

TEST(Cohomology, WeightTwo)
{
    const auto t = table_of(betti(build_relative_complex(2, 2, quiet())));
    EXPECT_EQ(t.dims, (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_EQ(t.betti, (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_EQ(t.euler, 1);
}

TEST(Cohomology, WeightFour)
{
    const auto t = table_of(betti(build_relative_complex(2, 4, quiet())));
    EXPECT_EQ(t.dims, (std::vector<std::size_t>{0, 0, 0, 1, 3}));
    EXPECT_EQ(t.ranks[3], 1u);
    EXPECT_EQ(t.betti, (std::vector<std::size_t>{0, 0, 0, 0, 2}));
    EXPECT_EQ(t.euler, 2);
}

TEST(Cohomology, WeightSix)
{
    for (int min_gen : {3, 2}) {
        const auto t = table_of(betti(build_relative_complex(2, 6, quiet(min_gen))));
        EXPECT_EQ(t.dims, (std::vector<std::size_t>{0, 0, 1, 1, 0, 4, 4}));
        EXPECT_EQ(t.ranks[2], 1u);
        EXPECT_EQ(t.ranks[5], 4u);
        EXPECT_EQ(t.betti, (std::vector<std::size_t>(7, 0)));
        EXPECT_EQ(t.euler, 0);
    }
}

TEST(Cohomology, RestrictedCoboundarySquaresToZero)
{
    const auto rc = build_relative_complex(2, 6, quiet());
    for (std::size_t m = 0; m + 1 < rc.d.size(); ++m) EXPECT_TRUE((rc.d[m + 1] * rc.d[m]).is_zero());
}

TEST(Cohomology, OddWeightIsZero)
{
    for (int w : {1, 3, 5}) {
        const auto r = betti(build_relative_complex(2, w, quiet()));
        for (const auto& x : r.rows) EXPECT_EQ(x.dim, 0u);
        EXPECT_EQ(r.euler_from_dims, 0);
    }
}

TEST(Cohomology, RankOne)
{
    EXPECT_EQ(dim_generators(1, 3), 4u);
    const auto r = betti(build_relative_complex(1, 6, quiet()));
    EXPECT_EQ(r.rows.at(6).slice_dim, 0u);
    EXPECT_EQ(r.rows.at(6).dim, 0u);
}

TEST(Cache, RoundTripGivesSameReport)
{
    const auto dir = fresh_dir("cache");
    BuildOptions o = quiet();
    o.cache_dir = dir;
    const auto first = build_relative_complex(2, 4, o);
    for (const auto& d : first.degrees) EXPECT_FALSE(d.from_cache);
    const auto second = build_relative_complex(2, 4, o);
    EXPECT_TRUE(second.degrees.at(4).from_cache);
    EXPECT_EQ(report_json(betti(first)), report_json(betti(second)));
    fs::remove_all(dir);
}

TEST(Cache, CorruptFileIsRejected)
{
    const auto dir = fresh_dir("corrupt");
    BuildOptions o = quiet();
    o.cache_dir = dir;
    build_relative_complex(2, 4, o);
    const CacheKey key{2, 4, 4, 3};
    {
        std::ofstream os(dir / key.file_name());
        os << key.header(4845, 1) << "\nnot a vector\n";
    }
    EXPECT_THROW(build_relative_complex(2, 4, o), CacheError);
    {
        std::ofstream os(dir / key.file_name());
        os << "gkf-invariant-basis n=2 w=4 m=4 min_gen=3 version=0 slice_dim=4845 vectors=0\n";
    }
    EXPECT_THROW(build_relative_complex(2, 4, o), CacheError);
    fs::remove_all(dir);
}

TEST(Cache, FlagOverridesEnvironment)
{
    ::setenv("GKF_CACHE", "/tmp/from-env", 1);
    EXPECT_EQ(resolve_cache_dir(std::string("/tmp/from-flag")), fs::path("/tmp/from-flag"));
    EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
    ::unsetenv("GKF_CACHE");
    EXPECT_FALSE(resolve_cache_dir(std::nullopt));
}

TEST(Output, JsonAndText)
{
    const auto r = betti(build_relative_complex(2, 2, quiet()));
    const auto j = report_json(r);
    EXPECT_EQ(j["degrees"][2]["betti"], 1);
    EXPECT_EQ(j["euler_from_betti"], 1);
    std::ostringstream os;
    print_report_text(os, r);
    EXPECT_NE(os.str().find("Euler characteristic 1"), std::string::npos);
}

TEST(Output, EmitBases)
{
    const auto dir = fresh_dir("emit");
    emit_bases(dir, build_relative_complex(2, 4, quiet()));
    EXPECT_TRUE(fs::exists(dir / "basis-n2-w4-m4.txt"));
    EXPECT_TRUE(fs::exists(dir / "d-n2-w4-m3.txt"));
    fs::remove_all(dir);
}

TEST(Cli, TensorListsTwelveTerms)
{
    const auto r = run_cli("tensor --n 2 3,1 4,0");
    if (r.status == -1) GTEST_SKIP() << "GKF_CLI not set";
    EXPECT_EQ(r.status, 0) << r.out;
    const auto line = r.out.substr(0, r.out.find('\n'));
    EXPECT_EQ(std::count(line.begin(), line.end(), '+'), 11) << line;
    const auto dim = weyl_dim({3, 1}, 2) * weyl_dim({4, 0}, 2);
    EXPECT_NE(r.out.find("dimension " + std::to_string(dim)), std::string::npos) << r.out;
}

TEST(Cli, SliceDims)
{
    const auto r = run_cli("slice-dims --n 2 --weight 6");
    if (r.status == -1) GTEST_SKIP() << "GKF_CLI not set";
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("C^4|_6  dim 176890"), std::string::npos) << r.out;
}

TEST(Cli, Cohomology)
{
    const auto r = run_cli("cohomology --n 2 --weight 4 --quiet --format json");
    if (r.status == -1) GTEST_SKIP() << "GKF_CLI not set";
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["degrees"][4]["betti"], 2);
}

TEST(Cli, OddWeightAndBanner)
{
    const auto strict = run_cli("cohomology --weight 3 --strict --quiet");
    if (strict.status == -1) GTEST_SKIP() << "GKF_CLI not set";
    EXPECT_NE(strict.status, 0);
    EXPECT_EQ(run_cli("cohomology --weight 3 --quiet").status, 0);
    EXPECT_NE(run_cli("slice-dims --weight 8").out.find("unvalidated"), std::string::npos);
}
