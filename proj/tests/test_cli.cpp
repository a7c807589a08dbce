#include "doctest.h"

#include "orthofix/cli.hpp"
#include "orthofix/corpus.hpp"
#include "orthofix/space_io.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace orthofix;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("orthofix_cli_" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path / name) << text;
        return path / name;
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "orthofix");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }
} // namespace

TEST_CASE("commands on the five-point file")
{
    TempDir dir;
    const auto file = dir.write("five.json", space_to_json(five_point_space(), five_point_map())).string();

    auto r = run({"verify", file});
    CHECK(r.code == exit_success);
    CHECK(contains(r.out, "O_w-set-only"));
    CHECK(contains(r.out, "preserving: true"));
    CHECK(contains(r.out, "generalized k = 2/3"));
    CHECK(contains(r.out, "holds (finite space)"));

    r = run({"verify", file, "--mode", "O1", "--json"});
    CHECK(r.code == exit_success);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "verify");
    CHECK(j["ok"] == true);
    CHECK(j["hypotheses"]["mode"] == "O1");

    r = run({"solve", file, "--start", "0", "--eps", "1/1000"});
    CHECK(r.code == exit_success);
    CHECK(contains(r.out, "fixed point: 0"));

    r = run({"solve", file, "--start", "4", "--allow-any-start", "--json"});
    CHECK(r.code == exit_success);
    const auto s = nlohmann::json::parse(r.out);
    CHECK(s["iterate_labels"] == nlohmann::json::array({"4", "2", "1", "0"}));
    CHECK(s["applications"] == 3);
    CHECK(s["certified"] == false);

    r = run({"solve", file, "--start", "4"});
    CHECK(r.code == exit_input_error);
    CHECK(contains(r.err, "not a weak orthogonal element"));

    r = run({"solve", file, "--start", "4", "--allow-any-start", "--max-iter", "1"});
    CHECK(r.code == exit_check_failed);

    r = run({"solve", file, "--k", "1/2"});
    CHECK(r.code == exit_input_error);
    r = run({"solve", file, "--trust-k"});
    CHECK(r.code == exit_input_error);

    r = run({"estimate-k", file, "--kind", "banach_perp"});
    CHECK(r.code == exit_check_failed);
    CHECK(contains(r.out, "inadmissible, minimal k = 2, witness (3,4)"));
    r = run({"estimate-k", file});
    CHECK(r.code == exit_success);
    r = run({"estimate-k", file, "--kind", "bogus"});
    CHECK(r.code == exit_input_error);

    r = run({"classify", file, "--json"});
    CHECK(r.code == exit_success);
    CHECK(nlohmann::json::parse(r.out)["weak_elements"] == nlohmann::json::array({0}));
}

TEST_CASE("bad input files exit with 2 and name the field")
{
    TempDir dir;
    auto r = run({"verify", (dir.path / "missing.json").string()});
    CHECK(r.code == exit_input_error);
    const auto tri = dir.write("tri.json", R"({"points":["a","b","c"],"metric":[[0,1,5],[1,0,1],[5,1,0]],"relation":[]})");
    r = run({"classify", tri.string()});
    CHECK(r.code == exit_input_error);
    CHECK(contains(r.err, "triangle"));
    const auto nomap = dir.write("nomap.json", R"({"points":["a","b"],"metric":[[0,1],[1,0]],"relation":[[0,0],[0,1]]})");
    CHECK(run({"classify", nomap.string()}).code == exit_success);
    CHECK(run({"verify", nomap.string()}).code == exit_input_error);
    CHECK(run({"frobnicate"}).code == exit_input_error);
    CHECK(run({}).code == exit_input_error);
    CHECK(run({"--help"}).code == exit_success);
}

TEST_CASE("corpus and audit")
{
    auto r = run({"corpus"});
    CHECK(r.code == exit_success);
    r = run({"corpus", "--list"});
    CHECK(contains(r.out, "five-point"));
    CHECK(contains(r.out, "r2-counterexample"));
    r = run({"corpus", "--case", "rational-product", "--json"});
    CHECK(r.code == exit_success);
    CHECK(nlohmann::json::parse(r.out)["ok"] == true);
    CHECK(run({"corpus", "--case", "nope"}).code == exit_input_error);
    CHECK(run({"corpus", "--case", "five-point", "--list"}).code == exit_input_error);

    const auto a = run({"audit", "--seed", "42", "--trials", "20", "--json"});
    CHECK(a.code == exit_success);
    CHECK(a.out == run({"audit", "--seed", "42", "--trials", "20", "--json"}).out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["hypotheses_satisfied"] == 20);
    CHECK(j["failures"].empty());
    CHECK(run({"audit", "--max-points", "9"}).code == exit_input_error);
    CHECK(run({"audit", "--density", "2/1"}).code == exit_input_error);
    CHECK(run({"audit", "--trials", "5", "--seed", "1", "--max-points", "4", "--density", "1/3"}).code == exit_success);
}
