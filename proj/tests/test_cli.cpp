#include "catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "crystal/catalog.hpp"
#include "crystal/cgf.hpp"
#include "crystal/cli.hpp"

#include "fixtures.hpp"

using namespace crystal;
using nlohmann::json;

namespace {

const std::string kData = CRYSTAL_DATA_DIR;
const std::string kSphere = kData + "/sphere4.cgf";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir()
{
    const auto dir = std::filesystem::temp_directory_path() / "crystal_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = temp_dir() / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

// Independent leaf walk of a JSON value: path -> leaf.
void leaves(const json& j, const std::string& path, std::map<std::string, json>& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) {
            leaves(v, path.empty() ? k : path + "." + k, out);
        }
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            leaves(j[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out[path] = j;
    }
}

void require_same_information(const std::vector<std::string>& args)
{
    INFO(args.front());
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    auto text_args = args;
    text_args.insert(text_args.end(), {"--format", "text"});
    const auto as_json = run(json_args);
    const auto as_text = run(text_args);
    REQUIRE(as_json.code == as_text.code);

    std::map<std::string, json> expected;
    leaves(json::parse(as_json.out), "", expected);
    std::map<std::string, std::string> got;
    std::istringstream lines(as_text.out);
    for (std::string line; std::getline(lines, line);) {
        const auto at = line.find(": ");
        REQUIRE(at != std::string::npos);
        got[line.substr(0, at)] = line.substr(at + 2);
    }
    REQUIRE(got.size() == expected.size());
    for (const auto& [path, leaf] : expected) {
        INFO(path);
        REQUIRE(got.count(path) == 1);
        if (leaf.is_string()) {
            CHECK(got[path] == leaf.get<std::string>());
        } else {
            CHECK(json::parse(got[path]) == leaf);
        }
    }
}

} // namespace

TEST_CASE("genus of the sphere")
{
    const auto r = run({"genus", kSphere});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["regular_genus_times_two"] == 0);
    CHECK(j["rho_by_permutation"].size() == 12);
    CHECK(j["classification"].is_null());

    const auto ranked = json::parse(run({"genus", kSphere, "--rank", "0", "--jobs", "3"}).out);
    CHECK(ranked["classification"]["kind"] == "Simple");
    CHECK(ranked["certificate"]["genus"] == 0);
}

TEST_CASE("verify the sphere")
{
    const auto r = run({"verify", kSphere, "--rank", "0", "--betti", "1,0,0,0,1"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    for (const char* name : {"gagliardi_relation", "dehn_sommerville", "vertex_identity", "rho_identity",
                             "linear_system", "h_vector_sum", "novik_swartz"}) {
        INFO(name);
        CHECK(j["checks"][name]["pass"] == true);
    }
    CHECK(run({"verify", kSphere}).code == 0);
}

TEST_CASE("verify reports failing checks with exit 1")
{
    const auto path = write_temp("uncontracted.cgf", to_cgf(fixtures::uncontracted4()));
    const auto r = run({"verify", path});
    CHECK(r.code == 1);
    const auto j = json::parse(r.out);
    CHECK(j["all_pass"] == false);
    CHECK(j["checks"]["vertex_identity"]["pass"] == false);

    const auto three = write_temp("sphere3.cgf", to_cgf(sphere(3)));
    const auto d3 = run({"verify", three});
    CHECK(d3.code == 2);
    CHECK(d3.err.find("UnsupportedDimension") != std::string::npos);
}

TEST_CASE("check exit codes")
{
    const auto inconsistent = run({"check", kSphere, "--rank", "1"});
    CHECK(inconsistent.code == 2);
    CHECK(inconsistent.err.find("RankInconsistent") != std::string::npos);
    CHECK(std::count(inconsistent.err.begin(), inconsistent.err.end(), '\n') == 1);

    const auto ok = run({"check", kSphere, "--rank", "0"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["certificate"]["genus"] == 0);

    const auto none = write_temp("none.cgf", to_cgf(fixtures::no_weak_order8()));
    const auto failed = run({"check", none, "--rank", "0"});
    CHECK(failed.code == 1);
    const auto j = json::parse(failed.out);
    CHECK(j["classification"]["kind"] == "None");
    CHECK(j["certificate"].is_null());

    CHECK(run({"check", kSphere}).code == 2);
}

TEST_CASE("text and json carry the same information")
{
    const auto split = write_temp("split.cgf", to_cgf(fixtures::split4()));
    require_same_information({"info", kSphere, "--betti", "1,0,0,0,1", "--rank", "0"});
    require_same_information({"info", split});
    require_same_information({"genus", split, "--rank", "0"});
    require_same_information({"check", split, "--rank", "0"});
    require_same_information({"verify", split});
    require_same_information({"verify-catalog", kData + "/catalog.json"});
}

TEST_CASE("info")
{
    const auto j = json::parse(run({"info", kSphere}).out);
    CHECK(j["vertices"] == 2);
    CHECK(j["dim"] == 4);
    CHECK(j["f_vector"] == json::array({5, 10, 10, 5, 2}));
    CHECK(j["euler_characteristic"] == 2);
    CHECK(j["orientable"] == true);
    CHECK(j["residue_counts"].size() == 32);
    CHECK(j["residue_counts"]["{0,1,2,3,4}"] == 1);
}

TEST_CASE("sum writes the connected sum")
{
    const auto split = write_temp("split_sum.cgf", to_cgf(fixtures::split4()));
    const auto r = run({"sum", split, kSphere, "--v1", "2"});
    REQUIRE(r.code == 0);
    CHECK(parse_cgf(r.out) == connected_sum(fixtures::split4(), 2, sphere(4), 0));

    const auto target = (temp_dir() / "out.cgf").string();
    REQUIRE(run({"sum", split, split, "-o", target}).code == 0);
    CHECK(load_cgf(target) == connected_sum(fixtures::split4(), 0, fixtures::split4(), 0));

    CHECK(run({"sum", split, kSphere, "--v1", "9"}).code == 2);
}

TEST_CASE("enumerate")
{
    const auto two = run({"enumerate", "--vertices", "2"});
    REQUIRE(two.code == 0);
    CHECK(two.out == to_cgf(sphere(4)));

    const auto lines = run({"enumerate", "--vertices", "4", "--format", "json"});
    REQUIRE(lines.code == 0);
    std::istringstream in(lines.out);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line); ++count) {
        const auto j = json::parse(line);
        CHECK(j["vertices"] == 4);
        CHECK(j["contracted"] == true);
    }
    SearchConfig four;
    four.vertices = 4;
    CHECK(count == enumerate_all(four).size());

    const auto serial = run({"enumerate", "--vertices", "6", "--jobs", "1"});
    const auto parallel = run({"enumerate", "--vertices", "6", "--jobs", "4"});
    CHECK(serial.out == parallel.out);
    const auto capped = run({"enumerate", "--vertices", "6", "--max", "2"});
    CHECK(capped.code == 0);
    CHECK(serial.out.substr(0, capped.out.size()) == capped.out);

    CHECK(run({"enumerate", "--vertices", "3"}).code == 2);
    CHECK(run({"enumerate", "--vertices", "2", "--dim", "2"}).code == 2);
    CHECK(run({"enumerate", "--vertices", "2", "--dim", "2", "--allow-nonspherical"}).code == 0);
}

TEST_CASE("verify-catalog")
{
    const auto r = run({"verify-catalog", kData + "/catalog.json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["rows"].size() == 8);

    const auto bad = write_temp("bad.json", R"({"rows": [{"name": "x", "chi": 2, "rank_m": 0, "known_genus": 3}]})");
    CHECK(run({"verify-catalog", bad}).code == 1);
}

TEST_CASE("random")
{
    const auto r = run({"random", "--dim", "4", "--vertices", "10", "--seed", "7"});
    REQUIRE(r.code == 0);
    CHECK(parse_cgf(r.out) == random_colored_graph(4, 10, 7));
    CHECK(run({"random", "--dim", "4", "--vertices", "10"}).code == 2);
    CHECK(run({"random", "--dim", "4", "--vertices", "9", "--seed", "1"}).code == 2);
}

TEST_CASE("input errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"genus", kSphere, "--no-such-flag"}).code == 2);
    CHECK(run({"genus", kSphere, "--format", "yaml"}).code == 2);
    CHECK(run({"genus", kSphere, "--jobs", "0"}).code == 2);
    CHECK(run({"genus", (temp_dir() / "missing.cgf").string()}).code == 2);

    const auto bad_betti = run({"info", kSphere, "--betti", "1,0,0"});
    CHECK(bad_betti.code == 2);
    CHECK(bad_betti.err.find("ConfigInvalid") != std::string::npos);
    CHECK(run({"info", kSphere, "--betti", "1,x,0,0,1"}).code == 2);
    CHECK(run({"info", kSphere, "--betti", "1,-1,0,0,1"}).code == 2);
    CHECK(run({"verify", kSphere, "--betti", "1,1,0,0,1"}).code == 2);

    const auto malformed = write_temp("malformed.cgf", "cgf 1\ndim 4\nvertices 2\ncolor 0: 1\n");
    const auto parsed = run({"info", malformed});
    CHECK(parsed.code == 2);
    CHECK(parsed.err.find("ParseError") != std::string::npos);
    const auto fixed = write_temp("fixed.cgf", "cgf 1\ndim 2\nvertices 2\ncolor 0: 0 1\ncolor 1: 1 0\ncolor 2: 1 0\n");
    CHECK(run({"info", fixed}).err.find("FixedPoint") != std::string::npos);
}

TEST_CASE("help exits 0")
{
    const auto r = run({"genus", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--rank") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}
