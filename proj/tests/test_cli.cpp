#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("CUBICLAT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "CUBICLAT_CLI not set");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("verify runs clean") {
    const RunResult r = run("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(r.output.find("65 component rows verified") != std::string::npos);

    const RunResult one = run("verify --family c8-c38");
    CHECK(one.exit_code == 0);
}

TEST_CASE("report to stdout and to file") {
    const RunResult md = run("report --family c18-c14 --format markdown");
    CHECK(md.exit_code == 0);
    CHECK(md.output.find("| tau |") != std::string::npos);

    const std::string path = "cli_report_test.json";
    const RunResult js = run("report --family c8-c26 --format json --out " + path);
    CHECK(js.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("\"family\": \"c8-c26\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("query subcommands") {
    const RunResult cls = run("classify c18-c14 --tau 10");
    CHECK(cls.exit_code == 0);
    CHECK(cls.output.find("status=nonempty d=72") != std::string::npos);

    const RunResult sv = run("shortvec c18-c26 --tau 21 --bound 2");
    CHECK(sv.exit_code == 0);
    CHECK(sv.output.find("(1 1 -1)") != std::string::npos);

    const RunResult ov = run("overlattices c8-c38 --tau -1");
    CHECK(ov.exit_code == 0);
    CHECK(ov.output.find("n=3 x'=1 y'=2 rejected") != std::string::npos);
    CHECK(ov.output.find("irreducible=yes") != std::string::npos);

    const RunResult br = run("brauer c18-c14 --tau 5 --k 3");
    CHECK(br.exit_code == 0);
    CHECK(br.output.find("b2=trivial witness=W(0,4,-7)") != std::string::npos);

    const RunResult fam = run("families");
    CHECK(fam.exit_code == 0);
    CHECK(fam.output.find("c18-c38") != std::string::npos);
}

TEST_CASE("config file families are visible") {
    const std::string path = "cli_families_test.cfg";
    {
        std::ofstream out(path);
        out << "family demo\n  g12 4\n  g22 10\n  g13 6\n  g33 18\nend\n";
    }
    const RunResult r = run("--config " + path + " classify demo --tau 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("status=nonempty d=84") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("classify").exit_code == 2);                 // missing args
    CHECK(run("report --family nope").exit_code == 2);     // unknown family
    CHECK(run("report --family c8-c26 --format yaml").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);               // unknown subcommand
    CHECK(run("classify c18-c14 --tau 99").exit_code == 2);  // out of range
}
