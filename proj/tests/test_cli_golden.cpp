#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path() {
    const char* p = std::getenv("SOERGEL_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SOERGEL_CLI must point at the binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("qnum rendering") {
    CHECK(run("qnum --n 4 --color X").out == "X^2*Y - 2*X\n");
    CHECK(run("qnum --n 0 --color Y").out == "0\n");
    CHECK(run("qnum --n 4 --color X --realization b2").out == "0\n");
    CHECK(run("qbinom --m 4 --n 2 --color X").out == "X^2*Y^2 - 3*X*Y + 2\n");
    CHECK(run("qnum --n 3 --color X --realization h2").out == "t\n");
}

TEST_CASE("avalue worked examples") {
    RunResult r = run("avalue --word sts --target s");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["numerator"] == "X");
    CHECK(j["denominator_roots"] == nlohmann::json::array({"s", "t", "sts"}));
    CHECK(j["matches_closed_form"] == true);

    j = nlohmann::json::parse(run("avalue --word ss --target e").out);
    CHECK(j["numerator"] == "0");
    CHECK(j["matches_closed_form"] == true);

    j = nlohmann::json::parse(run("avalue --word s --target e").out);
    CHECK(j["numerator"] == "1");
    CHECK(j["denominator_roots"] == nlohmann::json::array({"s"}));
}

TEST_CASE("exit codes") {
    CHECK(run("qnum --color X").exit_code == 2);                 // missing --n
    CHECK(run("verify nosuchsuite").exit_code == 2);             // bad suite
    CHECK(run("qnum --n 2 --color Q").exit_code == 2);           // bad color
    CHECK(run("qnum --n 2 --color X --realization nope").exit_code == 2);
    CHECK(run("avalue --word sssssssssss --target e").exit_code == 2); // guard
    CHECK(run("verify quantum --max-n 6 --max-binom 3").exit_code == 0);
    CHECK(run("verify morphism --realization a2 --trials 2 --oracle-trials 1").exit_code == 0);
}

TEST_CASE("negative control reports the assumption witness") {
    RunResult r = run("verify morphism --realization m4-degenerate --trials 1 --json");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "fail");
    bool witness = false;
    for (const auto& f : j["failures"])
        if (f["case"].get<std::string>().rfind("assumption-witness k=2", 0) == 0 &&
            f["actual"] == "2")
            witness = true;
    CHECK(witness);
}

TEST_CASE("reports are byte-deterministic") {
    std::string a = run("verify assumption --json").out;
    std::string b = run("verify assumption --json").out;
    CHECK(a == b);
    CHECK(!a.empty());

    std::string c = run("verify morphism --realization b2 --trials 3 --oracle-trials 2 --seed 7 --json").out;
    std::string d = run("verify morphism --realization b2 --trials 3 --oracle-trials 2 --seed 7 --json").out;
    CHECK(c == d);
}

TEST_CASE("member command") {
    // (0, 1) over the word (s) is the image of delta (x) 1 - 1 (x) delta.
    std::string good_path = "cli_member_good.json";
    {
        std::ofstream f(good_path);
        f << R"({"word":"s","components":{"1":{"num":[[[0,0],1]],"den":[]}}})";
    }
    CHECK(run("member --realization a2 --input " + good_path).exit_code == 0);

    // (1/alpha_s, -1/alpha_s) is not in B_s over the integers.
    std::string bad_path = "cli_member_bad.json";
    {
        std::ofstream f(bad_path);
        f << R"({"word":"s","components":{)"
          << R"("0":{"num":[[[0,0],1]],"den":["s"]},)"
          << R"("1":{"num":[[[0,0],-1]],"den":["s"]}}})";
    }
    RunResult r = run("member --realization a2 --input " + bad_path + " --json");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.out)["member"] == false);

    // Membership needs the certificate.
    CHECK(run("member --realization m4-degenerate --input " + good_path).exit_code == 2);
    std::remove(good_path.c_str());
    std::remove(bad_path.c_str());
}
