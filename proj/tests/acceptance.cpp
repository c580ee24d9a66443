// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
//   acceptance <path-to-weylsheaf-cli>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "weylsheaf/verify.hpp"

using namespace weylsheaf;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
    double seconds;
};

Outcome combine(std::initializer_list<verify::CheckResult> rs) {
    Outcome o{true, {}, 0};
    for (const auto& r : rs) {
        o.passed = o.passed && r.passed;
        o.seconds += r.seconds;
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += r.detail;
    }
    return o;
}

verify::CheckResult fixture(const std::string& name, const std::function<std::string()>& body) {
    return verify::run_check(name, [&](bool& ok) {
        const std::string err = body();
        ok = err.empty();
        return ok ? std::string("fixtures") : err;
    });
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    char buf[1 << 16];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    verify::Options o;  // rank <= 8, classical rank <= 12, bounds 3e6 / 2e4

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"positive root counts", [&] {
             return combine({verify::root_counts(o), fixture("F4/E8", [] {
                                 std::string e;
                                 if (RootSystem(parse_cartan_type("F4")).positive_count() != 24) e += "F4 ";
                                 if (RootSystem(parse_cartan_type("E8")).positive_count() != 120) e += "E8 ";
                                 return e;
                             })});
         }},
        {"order formula soundness", [&] { return combine({verify::order_formula_soundness(o)}); }},
        {"relative type fixtures", [&] { return combine({verify::relative_types(o)}); }},
        {"cuspidal set sizes", [&] { return combine({verify::cuspidal_sets(o)}); }},
        {"parametrization totals", [&] { return combine({verify::parameter_counts(o)}); }},
        {"involutions and stability", [&] { return combine({verify::involution_stability(o)}); }},
        {"normalizer complement", [&] { return combine({verify::normalizer_complements(o)}); }},
        {"irreducible character counts", [&] {
             return combine({verify::class_counts(o), fixture("F4/E6/E7/D4", [] {
                                 std::string e;
                                 for (auto [t, n] : std::vector<std::pair<const char*, std::uint64_t>>{
                                          {"F4", 25}, {"E6", 25}, {"E7", 60}, {"D4", 13}})
                                     if (irr_count(parse_cartan_type(t)) != n) e += std::string(t) + " ";
                                 if (group_order(parse_cartan_type("E7")) > verify::Options{}.bounds.enumeration)
                                     e += "E7 outside brute-force range";
                                 return e;
                             })});
         }},
        {"M(G) fixtures and character tables", [&] { return combine({verify::m_sets(o)}); }},
        {"deterministic E8 enumeration", [&] {
             return combine({verify::run_check("two runs byte-identical", [&](bool& ok) {
                 if (argc < 2) {
                     ok = false;
                     return std::string("no CLI path given");
                 }
                 const std::string cmd = std::string(argv[1]) + " enumerate E8 --format json";
                 int s1 = 0, s2 = 0;
                 const auto a = capture(cmd, s1);
                 const auto b = capture(cmd, s2);
                 ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
                 return ok ? std::to_string(a.size()) + " bytes" : std::string("outputs differ or command failed");
             })});
         }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome r = criteria[i].second();
        if (!r.passed) ++failed;
        std::printf("%s  %2zu  %-36s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
