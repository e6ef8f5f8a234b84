#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hamgraph/cli.hpp"

using namespace hamgraph;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/hamgraph_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& bytes) const {
        std::ofstream f(path, std::ios::binary);
        f << bytes;
    }
    std::string read() const {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

} // namespace

TEST_CASE("info") {
    auto r = run_cli({"info", "-q", "2", "-n", "3", "-d", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "vertices 8\nedges 16\ndegree 4\ngirth 3\n");
}

TEST_CASE("robustness output format") {
    auto r = run_cli({"robustness", "-q", "2", "-n", "4", "-d", "3", "--coloring", "coord:1,2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "16/40\n");
}

TEST_CASE("excluded parameters exit with validation code") {
    auto r = run_cli({"chromatic", "-q", "2", "-n", "2", "-d", "2"});
    CHECK(r.exit_code == cli::exit_validation);
    CHECK(r.err.find("excluded") != std::string::npos);
}

TEST_CASE("unknown command") {
    auto r = run_cli({"frobnicate"});
    CHECK(r.exit_code == cli::exit_unknown_command);
}

TEST_CASE("malformed flags") {
    CHECK(run_cli({"info", "-q", "2", "-n", "3"}).exit_code == cli::exit_validation);
    CHECK(run_cli({"info", "-q", "two", "-n", "3", "-d", "2"}).exit_code == cli::exit_validation);
    CHECK(run_cli({"enumerate", "-q", "2", "-n", "3", "-d", "2"}).exit_code == cli::exit_validation);
}

TEST_CASE("export") {
    auto r = run_cli({"export", "-q", "2", "-n", "3", "-d", "2", "--format", "dimacs"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("p edge 8 16\n", 0) == 0);
    auto bad = run_cli({"export", "-q", "2", "-n", "3", "-d", "2", "--format", "gexf"});
    CHECK(bad.exit_code == cli::exit_validation);
}

TEST_CASE("construct and read back") {
    auto r = run_cli({"construct", "--name", "figure2:4"});
    CHECK(r.exit_code == 0);
    auto coloring = read_coloring(r.out);
    CHECK(coloring.params == GraphParams(2, 3, 2));
    CHECK(coloring.k == 4);
}

TEST_CASE("coloring file round trip through the CLI") {
    TempFile file("coloring.json");
    auto make = run_cli({"color-make", "-q", "2", "-n", "4", "-d", "3", "--coloring", "coord:1,3",
                         "-o", file.path});
    REQUIRE(make.exit_code == 0);
    auto verify = run_cli({"color-verify", "-q", "2", "-n", "4", "-d", "3", "--coloring",
                           "file:" + file.path});
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("proper true") != std::string::npos);
    CHECK(verify.out.find("even true") != std::string::npos);

    auto mismatched = run_cli({"color-verify", "-q", "2", "-n", "5", "-d", "4", "--coloring",
                               "file:" + file.path});
    CHECK(mismatched.exit_code == cli::exit_validation);
}

TEST_CASE("color-verify reports uneven colorings") {
    auto r = run_cli({"color-verify", "-q", "2", "-n", "4", "-d", "3", "--coloring",
                      "construct:h243:1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("proper true") != std::string::npos);
    CHECK(r.out.find("even false") != std::string::npos);
    CHECK(r.out.find("class-sizes 4 3 4 5") != std::string::npos);
}

TEST_CASE("transitions and generator commands") {
    auto t = run_cli({"transitions", "-q", "2", "-n", "3", "-d", "2", "--coloring", "coord:2,3"});
    CHECK(t.exit_code == 0);
    auto j = nlohmann::json::parse(t.out);
    CHECK(j["edges"].size() == 8);
    CHECK(j["robustness"] == "1/2");

    auto gen = run_cli({"generator", "-q", "2", "-n", "3", "-d", "2", "--coloring", "coord:2,3"});
    CHECK(gen.out == "generator 110 101\n");
    auto notgen = run_cli({"generator", "-q", "2", "-n", "5", "-d", "4", "--coloring",
                           "construct:swapped254"});
    CHECK(notgen.out == "not-generated\n");

    auto tiles = run_cli({"tiling", "-q", "2", "-n", "3", "-d", "2", "--coloring", "coord:2,3"});
    CHECK(tiles.out == "tiles\n");
    auto check = run_cli({"maxrobust-check", "-q", "2", "-n", "4", "-d", "3", "--coloring",
                          "construct:parity:4:1"});
    CHECK(check.out ==
          "two-element-generator true\nrobustness-maximal true\ntiles-in-4cycles true\n");
}

TEST_CASE("propagate command") {
    auto ok = run_cli({"propagate", "-q", "2", "-n", "5", "-d", "4", "--v", "01111", "--w", "10111"});
    CHECK(ok.exit_code == 0);
    auto coloring = read_coloring(ok.out);
    CHECK(coloring.k == 4);

    auto contra =
        run_cli({"propagate", "-q", "2", "-n", "5", "-d", "4", "--v", "11111", "--w", "11110"});
    CHECK(contra.exit_code == 0);
    CHECK(contra.out.rfind("contradiction ", 0) == 0);

    auto bad = run_cli({"propagate", "-q", "2", "-n", "5", "-d", "4", "--v", "00001", "--w", "11110"});
    CHECK(bad.exit_code == cli::exit_validation);
}

TEST_CASE("bounds command with certificates") {
    auto plain = run_cli({"bounds", "-q", "2", "-n", "6", "-d", "4"});
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("lower 6") != std::string::npos);
    CHECK(plain.out.find("upper 8") != std::string::npos);
    CHECK(plain.out.find("exact none") != std::string::npos);

    TempFile clique("clique.json");
    auto code = mds_clique(GraphParams(3, 3, 2));
    REQUIRE(code.has_value());
    nlohmann::json cert;
    cert["q"] = 3;
    cert["n"] = 3;
    cert["d"] = 2;
    cert["vertices"] = *code;
    clique.write(cert.dump());
    auto with_cert = run_cli({"bounds", "-q", "3", "-n", "3", "-d", "2", "--clique", clique.path,
                              "--json"});
    REQUIRE(with_cert.exit_code == 0);
    auto j = nlohmann::json::parse(with_cert.out);
    CHECK(j["exact"] == 9);

    TempFile bogus("bogus.json");
    bogus.write(R"({"q":3,"n":3,"d":2,"vertices":[0,1,2,3]})"); // 0,1 at distance 1: not a clique
    auto invalid = run_cli({"bounds", "-q", "3", "-n", "3", "-d", "2", "--clique", bogus.path});
    CHECK(invalid.exit_code == cli::exit_validation);
}

TEST_CASE("chromatic and alpha commands") {
    auto chi = run_cli({"chromatic", "-q", "2", "-n", "3", "-d", "2"});
    CHECK(chi.exit_code == 0);
    CHECK(chi.out == "chi 4\nstatus proven\n");

    TempFile witness("alpha.json");
    auto alpha = run_cli({"alpha", "-q", "2", "-n", "4", "-d", "3", "--witness", witness.path});
    CHECK(alpha.exit_code == 0);
    CHECK(alpha.out == "alpha 5\nstatus proven\n");
    auto j = nlohmann::json::parse(witness.read());
    CHECK(j["vertices"].size() == 5);

    auto omega = run_cli({"omega", "-q", "2", "-n", "4", "-d", "3"});
    CHECK(omega.out == "omega 2\nstatus proven\n");
}

TEST_CASE("budget exhaustion exits with code 3") {
    auto r = run_cli({"enumerate", "-q", "2", "-n", "4", "-d", "3", "-k", "4", "--budget-seconds",
                      "0.0"});
    CHECK(r.exit_code == cli::exit_budget);
    CHECK(r.out.find("status budget-exhausted") != std::string::npos);
}

TEST_CASE("enumerate output") {
    auto r = run_cli({"enumerate", "-q", "2", "-n", "3", "-d", "2", "-k", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count 9") != std::string::npos);
    std::size_t partitions = 0;
    std::istringstream stream(r.out);
    std::string line;
    while (std::getline(stream, line))
        if (line.rfind("partition ", 0) == 0) ++partitions;
    CHECK(partitions == 9);
}

TEST_CASE("sweep output") {
    auto chi = run_cli({"sweep", "--q", "2", "--n", "3..6", "--d", "n-1", "--quantity", "chi"});
    CHECK(chi.exit_code == 0);
    std::istringstream stream(chi.out);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "q,n,d,quantity,value,status,provenance");
    int rows = 0;
    while (std::getline(stream, line)) {
        CHECK(line.find(",proven,") != std::string::npos);
        CHECK(line.find("chi,4,") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 4);

    auto alpha = run_cli({"sweep", "--q", "2", "--n", "4", "--d", "2..4", "--quantity", "alpha"});
    CHECK(alpha.exit_code == 0);
    CHECK(alpha.out.find("2,4,2,alpha,2,exact") != std::string::npos);
    CHECK(alpha.out.find("2,4,3,alpha,5,exact") != std::string::npos);
    CHECK(alpha.out.find("2,4,4,alpha,,\"excluded: ") != std::string::npos);

    auto ternary = run_cli({"sweep", "--q", "3", "--n", "2..4", "--d", "n-1", "--quantity", "chi"});
    std::istringstream ts(ternary.out);
    std::getline(ts, line);
    while (std::getline(ts, line)) CHECK(line.find("chi,9,") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> cases[] = {
        {"info", "-q", "3", "-n", "3", "-d", "2"},
        {"enumerate", "-q", "2", "-n", "3", "-d", "2", "-k", "4"},
        {"transitions", "-q", "2", "-n", "4", "-d", "3", "--coloring", "coord:1,2"},
        {"sweep", "--q", "2", "--n", "3..5", "--d", "n-1", "--quantity", "alpha"},
    };
    for (const auto& args : cases) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}
