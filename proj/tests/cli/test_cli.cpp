#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "toeplab/errors.hpp"
#include "toeplab_cli/app.hpp"
#include "toeplab_cli/complex_literal.hpp"
#include "toeplab_cli/reports.hpp"

using namespace toeplab;
using namespace toeplab::cli;
namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "toeplab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json parse(const std::string& text) { return Json::parse(text); }

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "toeplab_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("1") == Complex(1, 0));
    CHECK(parse_complex("-2.5") == Complex(-2.5, 0));
    CHECK(parse_complex("1+0i") == Complex(1, 0));
    CHECK(parse_complex("0.5-2i") == Complex(0.5, -2));
    CHECK(parse_complex("3i") == Complex(0, 3));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("1e-3+2E+1i") == Complex(1e-3, 20));
    CHECK(parse_complex("-1e-3-1e-2i") == Complex(-1e-3, -1e-2));
    CHECK(parse_complex(" 2 ") == Complex(2, 0));
    for (const char* bad : {"", "abc", "1+", "1+2", "1+2j", "1++2i", "i1", "1e", "nan", "inf", "1,2"}) {
        CHECK_THROWS_AS(parse_complex(bad), InvalidInput);
    }
    const auto list = parse_complex_list("1+0i,1-1i,0.25");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == Complex(1, -1));
    CHECK_THROWS_AS(parse_complex_list("1,,2"), InvalidInput);

    for (Complex z : {Complex(0.1, -0.3), Complex(-1e-300, 7), Complex(1.0 / 3, 2.0 / 3), Complex(0, -0.0)}) {
        CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK(format_complex({1, 0}) == "1+0i");
    CHECK(format_complex({0.5, -2}) == "0.5-2i");
}

TEST_CASE("commutator command") {
    const auto r = invoke({"commutator", "--eps", "0.5"});
    REQUIRE(r.code == kExitOk);
    const auto j = parse(r.out);
    CHECK(j["tool"] == "toeplab");
    CHECK(j["report"] == "commutator");
    CHECK(j["config"]["eps"] == 0.5);
    CHECK(j["config"]["h"] == 0.01);
    const auto& res = j["result"];
    const double norm = res["norm"].get<double>();
    CHECK(norm > 1.480278);
    CHECK(norm < 1.520833);
    CHECK(res["sandwich_ok"] == true);
    CHECK(res["univalence_status"] == "univalent_certified");
    CHECK(res["matrix"].size() == 3);
    CHECK(res["matrix"][0][1][0].get<double>() == doctest::Approx(0.5 + 0.125 / 3));
    CHECK(res["matrix"][0][1][1].get<double>() == 0.0);

    const auto zero = parse(invoke({"commutator", "--eps", "0"}).out);
    CHECK(zero["result"]["norm"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));

    const auto a = parse(invoke({"commutator", "--eps", "0.3"}).out)["result"];
    const auto b = parse(invoke({"commutator", "--coeffs", "1,0.3,0.03"}).out)["result"];
    CHECK(a["norm"].get<double>() == doctest::Approx(b["norm"].get<double>()).epsilon(1e-14));
    CHECK(a["area"].get<double>() == doctest::Approx(b["area"].get<double>()).epsilon(1e-14));
}

TEST_CASE("univalence handling") {
    const auto loose = invoke({"commutator", "--eps", "1.5"});
    CHECK(loose.code == kExitOk);
    CHECK(parse(loose.out)["result"]["univalence_status"] == "rejected");
    CHECK(parse(loose.out)["result"]["warnings"].size() == 1);
    CHECK(invoke({"commutator", "--eps", "1.5", "--strict"}).code == kExitUnivalence);
    CHECK(invoke({"bergman", "--eps", "1.5", "--strict"}).code == kExitUnivalence);
    CHECK(invoke({"spectral", "--eps", "1.5", "--strict"}).code == kExitUnivalence);
    CHECK(invoke({"commutator", "--eps", "0.5", "--strict"}).code == kExitOk);
}

TEST_CASE("bad flags exit with 2") {
    CHECK(invoke({}).code == kExitBadFlags);
    CHECK(invoke({"frobnicate"}).code == kExitBadFlags);
    CHECK(invoke({"commutator"}).code == kExitBadFlags);
    CHECK(invoke({"commutator", "--eps", "0.5", "--coeffs", "1"}).code == kExitBadFlags);
    CHECK(invoke({"commutator", "--eps", "abc"}).code == kExitBadFlags);
    CHECK(invoke({"commutator", "--eps", "-1"}).code == kExitBadFlags);
    CHECK(invoke({"commutator", "--coeffs", "0,0"}).code == kExitBadFlags);
    CHECK(invoke({"commutator", "--eps", "0.5", "--bogus"}).code == kExitBadFlags);
    CHECK(invoke({"sweep", "--eps-min", "0.5", "--eps-max", "0.4"}).code == kExitBadFlags);
    CHECK(invoke({"sweep", "--eps-max", "1.0"}).code == kExitBadFlags);
    CHECK(invoke({"sweep", "--steps", "1"}).code == kExitBadFlags);
    CHECK(invoke({"spectral"}).code == kExitBadFlags);
    CHECK(invoke({"spectral", "--domain", "hexagon:1"}).code == kExitBadFlags);
    CHECK(invoke({"spectral", "--domain", "disc:1", "--h", "0"}).code == kExitBadFlags);
    CHECK(invoke({"polydisc", "--coeffs", "1+0x"}).code == kExitBadFlags);
    CHECK(invoke({"polydisc", "--coeffs", "1", "--mc-samples", "10"}).code == kExitBadFlags);
    CHECK(invoke({"bergman", "--eps", "0.3", "--max-dim", "10"}).code == kExitBadFlags);
    CHECK(invoke({"commutator", "--eps", "0.3", "--with-spectral"}).code == kExitBadFlags);
    CHECK(invoke({"--help"}).code == kExitOk);
    CHECK(invoke({"--version"}).code == kExitOk);
}

TEST_CASE("sweep outputs") {
    const auto dir = scratch_dir();
    const auto csv = dir / "sweep.csv", svg = dir / "sweep.svg", json = dir / "sweep.json";
    const auto r = invoke({"sweep", "--csv", csv.string(), "--svg", svg.string(), "--json", json.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());

    std::istringstream lines(slurp(csv));
    std::string line;
    std::getline(lines, line);
    CHECK(line == "eps,khavinson_lower,commutator_norm,putnam_upper,area,perimeter");
    std::getline(lines, line);
    CHECK(line == "0,1,1,1,3.1415926535897931,6.2831853071795862");
    int rows = 1;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 50);

    const std::string picture = slurp(svg);
    CHECK(count(picture, "<polyline") == 3);
    CHECK(picture.find("<svg") == 0);
    CHECK(picture.find("Putnam upper bound") != std::string::npos);
    CHECK(picture.find("Khavinson lower bound") != std::string::npos);

    CHECK(parse(slurp(json))["result"]["rows"].size() == 50);

    const auto stdout_csv = invoke({"sweep", "--steps", "5"});
    CHECK(count(stdout_csv.out, "\n") == 6);

    CHECK(invoke({"sweep", "--csv", (dir / "missing" / "x.csv").string()}).code == kExitIo);
    CHECK(invoke({"commutator", "--eps", "0.1", "--json", (dir / "missing" / "x.json").string()}).code == kExitIo);
}

TEST_CASE("bergman command") {
    const auto one = parse(invoke({"bergman", "--coeffs", "1"}).out)["result"];
    CHECK(one["norm"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(one["margin_vs_conjecture"].get<double>()) <= 1e-8);
    CHECK(one["lambda_lower"].is_null());

    const auto two = parse(invoke({"bergman", "--coeffs", "2"}).out)["result"];
    CHECK(two["norm"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));

    const auto chain = invoke({"bergman", "--eps", "0.3", "--with-spectral", "--h", "0.02"});
    REQUIRE(chain.code == kExitOk);
    const auto c = parse(chain.out)["result"];
    CHECK(c["torsion_lower"].get<double>() <= c["norm"].get<double>());
    CHECK(c["norm"].get<double>() <= c["putnam"].get<double>());
    CHECK(c["chain_ok"] == true);

    const auto fail = invoke({"bergman", "--eps", "0.5", "--tol", "1e-30", "--max-dim", "128"});
    CHECK(fail.code == kExitConvergence);
    const auto diag = parse(fail.err);
    CHECK(diag["error"] == "convergence");
    CHECK(diag.contains("previous"));
    CHECK(diag.contains("last"));
}

TEST_CASE("spectral command") {
    const auto r = invoke({"spectral", "--domain", "disc:1", "--h", "0.02"});
    REQUIRE(r.code == kExitOk);
    const auto j = parse(r.out)["result"];
    CHECK(j["lambda"].get<double>() == doctest::Approx(5.7832).epsilon(0.02));
    CHECK(j["rho"].get<double>() == doctest::Approx(M_PI / 2).epsilon(0.02));
    CHECK(j["payne_rayner"]["holds"] == true);
    CHECK(j["faber_krahn"]["sharp_constant_holds"] == true);
    CHECK(j["saint_venant"]["sharp_constant_holds"] == true);

    const auto m = invoke({"spectral", "--eps", "0.3", "--h", "0.05"});
    REQUIRE(m.code == kExitOk);
    CHECK(parse(m.out)["result"]["rho_exact"].is_null());

    CHECK(invoke({"spectral", "--domain", "disc:1", "--h", "0.9"}).code == kExitResolution);
}

TEST_CASE("polydisc command") {
    const auto one = parse(invoke({"polydisc", "--coeffs", "1+0i", "--mc-samples", "100000"}).out)["result"];
    CHECK(one["lower"] == 0.5);
    CHECK(one["upper"] == 1.0);
    const auto two = parse(invoke({"polydisc", "--coeffs", "1+0i,1+0i", "--mc-samples", "1000000", "--seed", "7"}).out)["result"];
    CHECK(two["lower"] == 0.75);
    CHECK(two["upper"] == 4.0);
    CHECK(two["moment_verification"]["relative_errors"]["numerator"].get<double>() <= 0.005);
    CHECK(two["moment_verification"]["relative_errors"]["denominator"].get<double>() <= 0.005);
    CHECK(two["a"][1][0] == 1.0);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"commutator", "--coeffs", "1,0.2-0.1i,0.05i"},
             {"bergman", "--eps", "0.4"},
             {"polydisc", "--coeffs", "1+0i,0.5-0.5i", "--mc-samples", "200000", "--seed", "3"},
             {"sweep", "--steps", "7"},
             {"spectral", "--domain", "ellipse:2,1", "--h", "0.05"}}) {
        const auto a = invoke(args), b = invoke(args);
        CHECK(a.code == kExitOk);
        CHECK(a.out == b.out);
    }
}
