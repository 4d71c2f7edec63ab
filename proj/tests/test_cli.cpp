#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "whitetet/cli.hpp"

using namespace whitetet;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string> &args)
{
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

} // namespace

TEST_CASE("classify: motivating example T(1,1,5)")
{
    const Json j = run_json({"classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "1", "1", "5",
                             "--json"});
    CHECK(j["schema_version"] == 1);
    CHECK(j["empty"] == true);
    CHECK(j["clean"] == true);
    CHECK(j["volume6"] == 5);
    CHECK(j["canonical_form"]["a"] == 1);
    CHECK(j["canonical_form"]["b"] == 1);
    CHECK(j["canonical_form"]["c"] == 5);
    CHECK(j["canonical_form"]["d"] == 4);
    CHECK(j["plane"] == "x=1");
    CHECK(j["interior_points"].size() == 4);
    CHECK(j["map"]["matrix"].size() == 3);
}

TEST_CASE("classify: clean but not empty")
{
    const Json j = run_json({"classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "2", "3", "7",
                             "--json", "--oracle"});
    CHECK(j["empty"] == false);
    CHECK(j["clean"] == true);
    CHECK(j["plane"].is_null());
    CHECK(j["oracle_checked"] == true);
}

TEST_CASE("classify: not clean")
{
    const Json j = run_json({"classify", "0", "0", "0", "2", "0", "0", "0", "1", "0", "0", "0", "1",
                             "--json", "--oracle"});
    CHECK(j["clean"] == false);
    CHECK(j["empty"] == false);
    CHECK(j["canonical_form"].is_null());
}

TEST_CASE("classify: negative coordinates and text output")
{
    const Run r = run({"classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "1", "1", "-2",
                       "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.find("empty: true") != std::string::npos);
    CHECK(r.out.find("form: a=1 b=1 c=2 d=1") != std::string::npos);
    CHECK(r.out.find("oracle: agrees") != std::string::npos);
}

TEST_CASE("classify: input errors exit with 2")
{
    CHECK(run({"classify", "0", "0", "0", "1", "0", "0", "2", "0", "0", "0", "0", "1"}).code ==
          exit_code::usage);
    CHECK(run({"classify", "0", "0", "0"}).code == exit_code::usage);
    CHECK(run({"classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "1", "1", "x"}).code ==
          exit_code::usage);
    CHECK(run({}).code == exit_code::usage);
    CHECK(run({"bogus"}).code == exit_code::usage);
}

TEST_CASE("classify and normalize from a vertex file")
{
    const std::string path = "whitetet_test_vertices.txt";
    {
        std::ofstream f(path);
        f << "# sheared T(1,1,2)\n0 0 0\n1 0 0\n\n0 1 0\n5 3 2\n";
    }
    const Json j = run_json({"normalize", "--file", path, "--json", "--check"});
    CHECK(j["canonical_form"]["a"] == 1);
    CHECK(j["canonical_form"]["b"] == 1);
    CHECK(j["canonical_form"]["c"] == 2);
    CHECK(j["checked"] == true);

    CHECK(run({"classify", "--file", path, "0", "0", "0", "1", "0", "0", "0", "1", "0", "1", "1",
               "2"})
              .code == exit_code::usage);
    CHECK(run({"classify", "--file", "does-not-exist.txt"}).code == exit_code::usage);
    std::remove(path.c_str());
}

TEST_CASE("normalize")
{
    const Json j = run_json({"normalize", "0", "0", "0", "1", "0", "0", "0", "1", "0", "1", "1",
                             "2", "--json"});
    CHECK(j["canonical_form"]["c"] == 2);
    CHECK(j["map"]["matrix"] == Json::parse("[[1,0,0],[0,1,0],[0,0,1]]"));

    // Sheared copy of T(1,2,5): (x, y, z) -> (x + 2y, y + z, z).
    const Json s = run_json({"normalize", "0", "0", "0", "1", "0", "0", "2", "1", "0", "5", "7",
                             "5", "--json", "--check"});
    CHECK(s["canonical_form"]["c"] == 5);

    const Run bad = run({"normalize", "0", "0", "0", "2", "0", "0", "0", "1", "0", "0", "0", "1"});
    CHECK(bad.code == exit_code::usage);
    CHECK(bad.err.find("not normalizable (non-clean)") != std::string::npos);
}

TEST_CASE("enumerate")
{
    const Json c2 = run_json({"enumerate", "2", "--json"});
    CHECK(c2["count"] == 1);
    CHECK(c2["forms"][0]["a"] == 1);
    CHECK(c2["forms"][0]["b"] == 1);

    const Run c3 = run({"enumerate", "3", "--csv"});
    CHECK(c3.out == "a,b,c,d,clauses\n1,1,3,2,a=1;b=1\n1,2,3,1,a=1;d=1\n2,1,3,1,b=1;d=1\n");

    const Json c1 = run_json({"enumerate", "1", "--json"});
    CHECK(c1["forms"][0]["a"] == 0);
    CHECK(c1["forms"][0]["clauses"] == Json::parse("[\"c=1\"]"));

    CHECK(run({"enumerate", "0"}).code == exit_code::usage);
    CHECK(run({"enumerate", "3", "--csv", "--json"}).code == exit_code::usage);
}

TEST_CASE("points")
{
    const Run r = run({"points", "3", "4", "7", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,x,y,z\n1,1,1,1\n2,1,2,2\n3,2,2,3\n4,2,3,4\n5,3,3,5\n6,3,4,6\n");
    CHECK(run({"points", "2", "1", "4"}).code == exit_code::usage);
}

TEST_CASE("verify")
{
    const Run white = run({"verify", "--suite", "white", "--max-c", "6"});
    CHECK(white.code == 0);
    CHECK(white.out.find("suite white (max_c=6)") != std::string::npos);

    const Json j = run_json({"verify", "--suite", "normalize", "--max-c", "6", "--trials", "20",
                             "--seed", "3", "--json"});
    CHECK(j["ok"] == true);
    CHECK(j["reports"][0]["trials"] == 20);
    CHECK(j["reports"][0]["seed"] == 3);

    CHECK(run({"verify", "--suite", "nope"}).code == exit_code::usage);
    CHECK(run({"verify", "--suite", "white", "--csv"}).code == exit_code::usage);
    CHECK(run({"verify", "--suite", "fn", "--max-c", "2"}).code == exit_code::usage);
    CHECK(run({"verify", "--suite", "all", "--suite", "fn"}).code == exit_code::usage);
    CHECK(run({"verify", "--suite", "normalize", "--trials", "0"}).code == exit_code::usage);
}

TEST_CASE("output is byte-stable")
{
    const std::vector<std::string> args{"verify", "--suite", "coplanar", "--suite", "normalize",
                                        "--max-c", "8", "--trials", "30", "--json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> cls{"classify", "0", "0", "0", "1", "0", "0", "0", "1", "0",
                                       "3", "4", "7", "--json"};
    CHECK(run(cls).out == run(cls).out);
}
