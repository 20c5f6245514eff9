#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(SIGROOTS_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("sigroots_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path order_corpus(int order) {
    fs::path file = scratch("corpus" + std::to_string(order)) / "graphs.g6";
    const std::string cmd = std::string(G6GEN) + " " + std::to_string(order) + " --connected-only --out " +
                            file.string() + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    return file;
}

std::size_t line_count(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

}  // namespace

TEST_CASE("builtin survey writes the three outputs") {
    fs::path out = scratch("builtin");
    REQUIRE(run("survey --builtin-order 6 --connected-only --out " + out.string()) == 0);
    const std::string records = slurp(out / "records.csv");
    CHECK(records.rfind("#sigma-roots-v1\ngraph_id,n,e,chi,sigma,", 0) == 0);
    CHECK(line_count(records) == 2 + 112);
    CHECK(slurp(out / "roots.csv").rfind("#sigma-roots-v1\ngraph_id,re,im\n", 0) == 0);
    const std::string summary = slurp(out / "summary.txt");
    CHECK(summary.find("total: 112\n") != std::string::npos);
    CHECK(summary.find("nonreal: 0\n") != std::string::npos);
}

TEST_CASE("worker count does not change the outputs") {
    fs::path corpus = order_corpus(7);
    fs::path a = scratch("w1"), b = scratch("w3");
    REQUIRE(run("survey --input " + corpus.string() + " --workers 1 --out " + a.string()) == 0);
    REQUIRE(run("survey --input " + corpus.string() + " --workers 3 --out " + b.string()) == 0);
    for (const char* name : {"records.csv", "roots.csv", "summary.txt"}) CHECK(slurp(a / name) == slurp(b / name));
    CHECK(line_count(slurp(a / "records.csv")) == 2 + 853);
}

TEST_CASE("input errors exit with status 2") {
    fs::path dir = scratch("errors");
    CHECK(run("survey --input " + (dir / "missing.g6").string() + " --out " + dir.string()) == 2);
    CHECK(run("survey --builtin-order 8 --out " + dir.string()) == 2);
    CHECK(run("survey --out " + dir.string()) == 2);
    CHECK(run("survey --builtin-order 5 --residual 0 --out " + dir.string()) == 2);

    {
        std::ofstream bad(dir / "bad.g6");
        bad << "D?{\nbad!\nCF\n";
    }
    CHECK(run("survey --input " + (dir / "bad.g6").string() + " --out " + (dir / "bad").string()) == 2);
    CHECK(slurp(dir / "bad" / "summary.txt").find("errors: 1\n") != std::string::npos);

    CHECK(run("survey --input " + (dir / "bad.g6").string() + " --expect-count 2 --out " + dir.string()) == 2);
    CHECK(run("nonsense") == 2);
}

TEST_CASE("figure1 writes an svg") {
    fs::path out = scratch("figure1");
    REQUIRE(run("figure1 --out " + out.string()) == 0);
    const std::string svg = slurp(out / "figure1.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("a large run resumes from its checkpoint") {
    fs::path corpus = order_corpus(7);
    fs::path full = scratch("full");
    REQUIRE(run("survey --input " + corpus.string() + " --out " + full.string()) == 0);

    // Survey the first part, then extend the same file and rerun.
    fs::path dir = scratch("resume");
    fs::path growing = dir / "growing.g6";
    std::ifstream in(corpus);
    std::string head, tail, line;
    for (int i = 0; std::getline(in, line); ++i) (i < 500 ? head : tail) += line + "\n";
    { std::ofstream(growing) << head; }
    REQUIRE(run("survey --large --input " + growing.string() + " --out " + (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "checkpoint.txt"));
    { std::ofstream(growing, std::ios::app) << tail; }
    REQUIRE(run("survey --large --input " + growing.string() + " --out " + (dir / "out").string()) == 0);

    for (const char* name : {"records.csv", "roots.csv", "summary.txt"})
        CHECK(slurp(dir / "out" / name) == slurp(full / name));
}

TEST_CASE("report commands run") {
    fs::path out = scratch("reports");
    CHECK(run("hfamily --n-min 1 --n-max 6 --out " + out.string()) == 0);
    CHECK(run("stirling-trend --n-max 12") == 0);
    CHECK(run("monotonicity --trials 20 --n-max 6") == 0);
    CHECK(run("identities") == 0);
    CHECK(run("stirling-trend --n-max 99") == 2);
}
