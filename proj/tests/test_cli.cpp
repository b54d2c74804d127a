#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(VXE_TEST_DATA_DIR) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = vxe::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char* name_;
};

fs::path scratch_file(const std::string& name)
{
    fs::path dir = fs::temp_directory_path() / ("vxe_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Cli, EnergyCsvOnK2)
{
    auto r = call({"energy", "--input", data("k2.edges"), "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header, row0, row1, total;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    std::getline(lines, total);
    EXPECT_EQ(header, "vertex,degree,energy");
    EXPECT_EQ(row0, "0,1,1.0");
    EXPECT_EQ(row1, "1,1,1.0");
    EXPECT_EQ(total, "total,,2.0");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, EnergyJsonSchema)
{
    auto r = call({"energy", "--input", data("k23_pendant.edges"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["graph"]["n"], 6);
    EXPECT_EQ(doc["graph"]["m"], 7);
    ASSERT_EQ(doc["vertices"].size(), 6u);
    EXPECT_EQ(doc["vertices"][3]["degree"], 1);
    EXPECT_NEAR(doc["vertices"][3]["energy"].get<double>(), 0.845, 1e-3);
    EXPECT_TRUE(doc["global"].contains("energy"));
    EXPECT_TRUE(doc["global"]["bounds"].contains("mcclelland"));
    EXPECT_TRUE(doc["global"]["bounds"]["bipartite"].is_object());
}

TEST(Cli, NumbersHaveTwelveSignificantDigits)
{
    auto r = call({"energy", "--input", data("k23_pendant.edges"), "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0.796750730318"), std::string::npos);
    EXPECT_NE(r.out.find("1.46284538113"), std::string::npos);
}

TEST(Cli, FamilyCompleteFour)
{
    auto r = call({"family", "--spec", "complete:4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["vertices"].size(), 4u);
    for (const auto& v : doc["vertices"]) {
        EXPECT_DOUBLE_EQ(v["closed_form"].get<double>(), 1.5);
        EXPECT_NEAR(v["energy"].get<double>(), 1.5, 1e-8);
    }
    EXPECT_LT(doc["global"]["max_deviation"].get<double>(), 1e-8);
    EXPECT_EQ(doc["global"]["family"], "complete:4");
}

TEST(Cli, FamilyCirculantHasNoClosedForm)
{
    auto r = call({"family", "--spec", "circulant:17:1,4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["global"]["closed_form_available"], false);
    EXPECT_TRUE(doc["vertices"][0]["closed_form"].is_null());
    EXPECT_NEAR(doc["vertices"][0]["energy"].get<double>(), 1.6, 5e-2);
}

TEST(Cli, LimitTree)
{
    auto r = call({"limit", "--model", "tree:3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    double closed = doc["global"]["closed_form"].get<double>();
    double quad = doc["global"]["quadrature"].get<double>();
    EXPECT_NEAR(closed, quad, 1e-7);
    EXPECT_NEAR(closed, 1.52546929238, 1e-10);
}

TEST(Cli, LimitTruncationTable)
{
    auto r = call({"limit", "--model", "semiline:2", "--truncate", "4,8", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["global"]["quadrature"].is_null());
    ASSERT_EQ(doc["global"]["truncation"].size(), 2u);
    EXPECT_EQ(doc["global"]["truncation"][1]["size"], 8);
}

TEST(Cli, MomentsTable)
{
    auto r = call({"moments", "--input", data("k23_pendant.edges"), "--vertex", "5", "--k", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    const auto& rows = doc["global"]["moments"];
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[2]["closed_walks"], 4);
    EXPECT_NEAR(rows[4]["spectral_moment"].get<double>(), rows[4]["closed_walks"].get<double>(), 1e-8);
}

TEST(Cli, BoundsSingleVertex)
{
    auto r = call({"bounds", "--input", data("k2.edges"), "--vertex", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["vertices"].size(), 1u);
    EXPECT_EQ(doc["vertices"][0]["vertex"], 1);
    EXPECT_EQ(doc["vertices"][0]["sandwich_holds"], true);
    EXPECT_DOUBLE_EQ(doc["vertices"][0]["upper"]["km"].get<double>(), 1.0);
}

TEST(Cli, ClassifyCriteria)
{
    auto r = call({"classify", "--input", data("k23_pendant.edges"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& c : doc["global"]["criteria"]) {
        if (c["criterion"] == "pendant_vertices") {
            found = true;
            EXPECT_EQ(c["holds"], true);
            EXPECT_EQ(c["confirmed"], true);
        }
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(doc["vertices"][3]["hypoenergetic"], true);
}

TEST(Cli, SplitOnBipartiteGraph)
{
    auto r = call({"split", "--input", data("k23_pendant.edges"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["global"]["first"].get<double>(), doc["global"]["second"].get<double>(), 1e-8);
}

TEST(Cli, TableFormatIsDefault)
{
    auto r = call({"energy", "--input", data("k2.edges")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("graph: n=2 m=1", 0), 0u);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(call({}).code, 1);
    EXPECT_EQ(call({"frobnicate"}).code, 1);
    EXPECT_EQ(call({"energy"}).code, 1);
    EXPECT_EQ(call({"energy", "--input", data("k2.edges"), "--format", "xml"}).code, 1);
    EXPECT_EQ(call({"moments", "--input", data("k2.edges"), "--vertex", "0"}).code, 1);
    EXPECT_EQ(call({"family", "--spec", "petersen:10"}).code, 1);
    EXPECT_EQ(call({"limit", "--model", "tree:2"}).code, 1);
    EXPECT_EQ(call({"--help"}).code, 0);

    auto missing = call({"energy", "--input", data("does_not_exist.edges")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_FALSE(missing.err.empty());
    EXPECT_TRUE(missing.out.empty());
    EXPECT_EQ(call({"energy", "--input", data("malformed.edges")}).code, 2);

    EXPECT_EQ(call({"split", "--input", data("triangle.edges")}).code, 3);
    EXPECT_EQ(call({"bounds", "--input", data("k2.edges"), "--vertex", "7"}).code, 3);
    EXPECT_EQ(call({"moments", "--input", data("k2.edges"), "--vertex", "0", "--k", "40"}).code, 3);
    EXPECT_EQ(call({"limit", "--model", "line", "--truncate", "5000"}).code, 3);
}

TEST(Cli, EigensolverCapOverride)
{
    {
        ScopedEnv cap("VXE_EIG_CAP", "1");
        EXPECT_EQ(call({"energy", "--input", data("k2.edges")}).code, 3);
    }
    {
        ScopedEnv cap("VXE_EIG_CAP", "2");
        EXPECT_EQ(call({"energy", "--input", data("k2.edges")}).code, 0);
    }
    {
        // P_3 needs a cap of at least 3.
        ScopedEnv cap("VXE_EIG_CAP", "2");
        EXPECT_EQ(call({"limit", "--model", "line", "--truncate", "1"}).code, 3);
    }
    {
        ScopedEnv cap("VXE_EIG_CAP", "3");
        EXPECT_EQ(call({"limit", "--model", "line", "--truncate", "1"}).code, 0);
    }
    for (const char* bad : {"0", "-5", "abc", "12x", ""}) {
        ScopedEnv cap("VXE_EIG_CAP", bad);
        EXPECT_EQ(call({"energy", "--input", data("k2.edges")}).code, 1) << bad;
    }
}

TEST(Cli, Deterministic)
{
    for (const char* format : {"table", "json", "csv"}) {
        std::vector<std::string> args{"classify", "--input", data("k23_pendant.edges"), "--format", format};
        auto a = call(args);
        auto b = call(args);
        ASSERT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << format;
    }
}

TEST(Cli, EmitGraphRoundTrip)
{
    fs::path file = scratch_file("friendship3.edges");
    auto family = call({"family", "--spec", "friendship:3", "--emit-graph", file.string(), "--format", "json"});
    ASSERT_EQ(family.code, 0) << family.err;
    auto energy = call({"energy", "--input", file.string(), "--format", "json"});
    ASSERT_EQ(energy.code, 0) << energy.err;

    auto a = nlohmann::json::parse(family.out)["vertices"];
    auto b = nlohmann::json::parse(energy.out)["vertices"];
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_NEAR(a[i]["energy"].get<double>(), b[i]["energy"].get<double>(), 1e-8);
    fs::remove_all(file.parent_path());

    EXPECT_EQ(call({"family", "--spec", "cycle:5", "--emit-graph", "/nonexistent/dir/x.edges"}).code, 2);
}
