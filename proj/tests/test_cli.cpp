#include <string>

#include "doctest.h"
#include "mh/cli.hpp"
#include "mh/galois.hpp"

using namespace mh;

namespace {

std::string fixture(const std::string& name) { return std::string(MH_FIXTURES_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
    try {
        parse_config(text, "t.json");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("config parsing: named and explicit data") {
    auto s = load_config(fixture("sweedler.json"));
    CHECK(s.datum.G->order() == 2);
    CHECK(s.effective_modulus() == 2);
    CHECK(s.parsed_samples(2).size() == 2);

    auto c = load_config(fixture("type_iv_c16xc4.json"));
    CHECK(c.datum.G->order() == 64);
    CHECK(c.datum.d == 2);
    CHECK(c.datum.n == 8);
    REQUIRE(c.sigma.has_value());
    CHECK(is_cocycle(*c.datum.G, *c.sigma));
    // sigma(g, h)^{-1} sigma(h, g) = i^{-2}: g = x^2 and h the C4 generator
    int h = 1;  // mixed radix (0, 1)
    CHECK(mod(-pairing(*c.sigma, c.datum.g, h), 4) == 2);

    auto v = parse_config(R"({"datum": {"kind": "simple_pointed", "q": [1, 4], "mu": "1", "d": 2, "N": 4}})");
    CHECK(v.datum.mu == Cyclo(1));
    CHECK(v.samples == std::vector<std::string>{"0", "1", "-1", "z"});
}

TEST_CASE("config errors name the line or the field") {
    CHECK(error_of("{\n \"datum\": {\n").find("t.json:3:") == 0);
    CHECK(error_of(R"({"modulus": 4})").find("t.json: (root).datum: missing") == 0);
    CHECK(error_of(R"({"datum": {"kind": "taft", "N": 4}})").find("datum.q: missing") != std::string::npos);
    CHECK(error_of(R"({"datum": {"kind": "taft", "N": "4", "q": [1, 4]}})").find("datum.N: expected an integer") !=
          std::string::npos);
    CHECK(error_of(R"({"datum": {"kind": "lattice"}})").find("datum.kind: unknown kind") != std::string::npos);
    CHECK(error_of(R"({"datum": {"kind": "sweedler"}, "modulus": 1})").find("modulus: must be >= 2") !=
          std::string::npos);
    CHECK(error_of(R"({"datum": {"kind": "sweedler"}, "schema_version": 7})").find("schema_version") !=
          std::string::npos);
    // chi(g) = 1 is rejected by the datum validation and reported under "datum"
    CHECK(error_of(R"({"datum": {"kind": "abelian", "factors": [4], "g": [1],
                                 "chi": {"modulus": 4, "on_generators": [0]}}})")
              .find("datum: chi(g)") != std::string::npos);
    CHECK(error_of(R"({"datum": {"kind": "abelian", "factors": [2, 2], "g": [1, 0],
                                 "chi": {"modulus": 2, "on_generators": [1, 0]}},
                       "cocycle": {"modulus": 2, "values": [[0,0,0,0],[0,1,0,0],[0,0,0,0],[0,0,0,0]]}})")
              .find("cocycle: not a 2-cocycle") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    auto cfg = load_config(fixture("generalized_taft_c2xc2.json"));
    for (const char* cmd : {"classify", "cohomology", "gal", "bigal", "predict", "verify"}) {
        auto a = run_command(cmd, cfg, {});
        auto b = run_command(cmd, cfg, {});
        CHECK(a.report.dump() == b.report.dump());
        CHECK(render_text(a.report) == render_text(b.report));
        CHECK(a.report["schema_version"] == kSchemaVersion);
        CHECK(a.report["surrogate"] == std::string(kSurrogateRule));
    }
}

TEST_CASE("command outcomes") {
    auto sw = load_config(fixture("sweedler.json"));
    auto g = run_command("gal", sw, {});
    CHECK(g.ok);
    CHECK(g.report["count"] == 4);
    RunOptions opt;
    opt.samples = std::vector<std::string>{"0", "1", "-1"};
    opt.modulus = 4;
    auto g4 = run_command("gal", sw, opt);
    CHECK(g4.report["modulus"] == 4);
    CHECK(g4.report["count"] == 6);  // |H^2(C2, mu_4)| = 2 classes times 3 samples

    auto t4 = load_config(fixture("taft_4.json"));
    auto p = run_command("predict", t4, {});
    auto b = run_command("bigal", t4, {});
    CHECK(p.ok);
    CHECK(b.ok);
    CHECK(p.report["prediction"]["bigal"]["finite_order"] == b.report["gamma"]["order"]);

    auto iv = load_config(fixture("type_iv_c16xc4.json"));
    auto c = run_command("classify", iv, {});
    CHECK(c.report["type"] == "IV");
    CHECK(c.report["cocycle"]["companion_isomorphic"] == false);
    CHECK(c.report["cocycle"]["gamma_partners"] == 0);

    // the surrogate obstruction makes verify fail on this datum
    auto gt = run_command("verify", load_config(fixture("generalized_taft_c2xc2.json")), {});
    CHECK_FALSE(gt.ok);
    CHECK_THROWS_AS(run_command("frobnicate", sw, {}), ConfigError);
}

TEST_CASE("shipped fixtures meet their expectations") {
    auto r = run_examples(MH_FIXTURES_DIR, {});
    CHECK(r.ok);
    CHECK(r.report["fixtures"].size() >= 10);
}
