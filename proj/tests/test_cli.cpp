#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "lflab/json_io.hpp"

using lflab::Json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LFLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path tmpdir() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / "lflab-cli-test";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string write_config(const std::string& name, const Json& j) {
    fs::path p = tmpdir() / name;
    std::ofstream out(p);
    out << j.dump() << "\n";
    return p.string();
}

Json tower_config(long long p, long long e, long long f, long long t, long long b) {
    Json one{{"v", 0}, {"prec", nullptr}, {"coeffs", {1}}};
    Json beta{{"v", -b}, {"prec", nullptr}, {"coeffs", {1}}};
    return Json{{"p", p},     {"kappa", p},  {"e", e},    {"f", f},   {"t", t},
                {"b", b},     {"gamma", one}, {"mu", one}, {"beta", beta}};
}

}  // namespace

TEST_CASE("build reports valuations and the different") {
    std::string cfg = write_config("build.json", tower_config(3, 2, 1, 1, 1));
    auto r = run("build --config " + cfg);
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("valuations").at("v_M_x").get<long long>() == -2);
    CHECK(rep.at("valuations").at("v_M_y").get<long long>() == 3);
    CHECK(rep.at("different_exponent").get<long long>() == 7);
    CHECK(rep.at("different_matches_formula").get<bool>());
}

TEST_CASE("build rejects invalid parameters with exit 2") {
    // t = e = 2 violates gcd(t, e) = 1
    std::string cfg = write_config("bad.json", tower_config(5, 2, 1, 2, 3));
    CHECK(run("build --config " + cfg).exit_code == 2);
    // unknown key
    Json j = tower_config(3, 2, 1, 1, 1);
    j["bogus"] = 1;
    CHECK(run("build --config " + write_config("bad2.json", j)).exit_code == 2);
    // missing config file
    CHECK(run("build --config " + (tmpdir() / "nope.json").string()).exit_code == 2);
}

TEST_CASE("ramify reports the Serre and Artin numbers") {
    for (long long p : {3, 5, 7}) {
        // x^p - px = p over Q_p: e = p-1, f = t = 1, b = -1
        Json cfg{{"p", p},      {"e", p - 1}, {"f", 1},      {"t", 1},
                 {"b", -1},     {"char_K", 0}, {"vK_p", 1}};
        std::string path = write_config("ram.json", cfg);
        auto r = run("ramify --config " + path);
        CHECK(r.exit_code == 0);
        Json rep = Json::parse(r.out);
        CHECK(rep.at("ell").at("num").get<long long>() == 1);
        CHECK(rep.at("ell").at("den").get<long long>() == p - 1);
        auto ra = run("ramify --convention artin --config " + path);
        Json repa = Json::parse(ra.out);
        CHECK(repa.at("ram_number_reported").at("num").get<long long>() == p);
        CHECK(repa.at("ram_number_reported").at("den").get<long long>() == p - 1);
    }
}

TEST_CASE("hopf and scaffold and orders pass on a sample tower") {
    std::string cfg = write_config("t53.json", tower_config(5, 2, 1, 1, 3));
    auto rh = run("hopf --config " + cfg);
    CHECK(rh.exit_code == 0);
    CHECK(Json::parse(rh.out).at("pass").get<bool>());
    auto rs = run("scaffold --config " + cfg);
    CHECK(rs.exit_code == 0);
    Json srep = Json::parse(rs.out);
    CHECK(srep.at("pass").get<bool>());
    CHECK(srep.at("a_table") == Json({0, 3, 1, 4, 2}));
    auto ro = run("orders --n-range -2..6 --config " + cfg);
    CHECK(ro.exit_code == 0);
    CHECK(Json::parse(ro.out).at("pass").get<bool>());
}

TEST_CASE("classify round trip") {
    Json alpha{{"v", 1}, {"prec", nullptr}, {"coeffs", {1}}};  // alpha = pi: e=2,f=1,t=1
    Json beta{{"v", -3}, {"prec", nullptr}, {"coeffs", {1}}};
    Json cfg{{"p", 5}, {"kappa", 5}, {"alpha", alpha}, {"beta", beta}, {"d", 2}};
    auto r = run("classify --config " + write_config("cls.json", cfg));
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("e").get<long long>() == 2);
    CHECK(rep.at("f").get<long long>() == 1);
    CHECK(rep.at("t").get<long long>() == 1);
    CHECK(rep.at("b").get<long long>() == 3);
}

TEST_CASE("sweep is persistent and resumable") {
    fs::path out = tmpdir() / "sweep.jsonl";
    fs::remove(out);
    auto r1 = run("sweep --p 3 --n-range 0..2 --out " + out.string());
    CHECK(r1.exit_code == 0);
    Json s1 = Json::parse(r1.out);
    CHECK(s1.at("pass").get<bool>());
    CHECK(s1.at("written").get<long long>() > 0);
    auto r2 = run("sweep --p 3 --n-range 0..2 --out " + out.string());
    Json s2 = Json::parse(r2.out);
    CHECK(s2.at("written").get<long long>() == 0);
    CHECK(s2.at("skipped").get<long long>() == s1.at("written").get<long long>());
}
