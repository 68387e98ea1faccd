#include "mh/config.hpp"

#include <fstream>
#include <sstream>

#include "mh/special.hpp"

namespace mh {

namespace {

struct Ctx {
    std::string source;
    [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
        throw ConfigError(source + ": " + path + ": " + msg);
    }
};

const Json& field(const Ctx& c, const Json& obj, const std::string& path, const std::string& key) {
    if (!obj.is_object()) c.fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) c.fail(path + "." + key, "missing");
    return *it;
}

i64 as_int(const Ctx& c, const Json& v, const std::string& path) {
    if (!v.is_number_integer()) c.fail(path, "expected an integer");
    return v.get<i64>();
}

std::vector<i64> as_int_list(const Ctx& c, const Json& v, const std::string& path) {
    if (!v.is_array()) c.fail(path, "expected an array of integers");
    std::vector<i64> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(c, v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

i64 int_field(const Ctx& c, const Json& obj, const std::string& path, const std::string& key) {
    return as_int(c, field(c, obj, path, key), path + "." + key);
}

RootOfUnity root_field(const Ctx& c, const Json& obj, const std::string& path, const std::string& key) {
    auto v = as_int_list(c, field(c, obj, path, key), path + "." + key);
    if (v.size() != 2 || v[1] < 1) c.fail(path + "." + key, "expected [exponent, order] with order >= 1");
    return {mod(v[0], v[1]), v[1]};
}

Cyclo scalar_field(const Ctx& c, const Json& obj, const std::string& path, const std::string& key, int root_mod) {
    auto it = obj.find(key);
    if (it == obj.end()) return Cyclo(0);
    std::string p = path + "." + key;
    try {
        if (it->is_number_integer()) return Cyclo(it->get<long>());
        if (it->is_string()) return Cyclo::parse(it->get<std::string>(), root_mod);
        if (it->is_object()) {
            int m = (int)int_field(c, *it, p, "root_modulus");
            if (m < 1) c.fail(p + ".root_modulus", "must be >= 1");
            const Json& val = field(c, *it, p, "value");
            if (!val.is_string()) c.fail(p + ".value", "expected a string");
            return Cyclo::parse(val.get<std::string>(), m);
        }
    } catch (const std::invalid_argument& e) {
        c.fail(p, e.what());
    }
    c.fail(p, "expected an integer, a string, or {value, root_modulus}");
}

int element_from_exponents(const Ctx& c, const std::vector<i64>& factors, const std::vector<i64>& e,
                           const std::string& path) {
    if (e.size() != factors.size()) c.fail(path, "expected " + std::to_string(factors.size()) + " exponents");
    i64 idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + mod(e[i], factors[i]);
    return (int)idx;
}

std::vector<i64> exponents_of(const std::vector<i64>& factors, int idx) {
    std::vector<i64> e(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        e[i] = idx % factors[i];
        idx = (int)(idx / factors[i]);
    }
    return e;
}

Character abelian_character(const Ctx& c, const std::vector<i64>& factors, const Json& chi, const std::string& path) {
    i64 M = int_field(c, chi, path, "modulus");
    if (M < 1) c.fail(path + ".modulus", "must be >= 1");
    auto on = as_int_list(c, field(c, chi, path, "on_generators"), path + ".on_generators");
    if (on.size() != factors.size()) c.fail(path + ".on_generators", "one exponent per factor expected");
    for (std::size_t i = 0; i < on.size(); ++i)
        if (mod(on[i] * factors[i], M) != 0)
            c.fail(path + ".on_generators[" + std::to_string(i) + "]",
                   "chi(generator)^" + std::to_string(factors[i]) + " != 1");
    i64 n = 1;
    for (auto f : factors) n *= f;
    Character chr{M, std::vector<i64>((std::size_t)n)};
    for (int h = 0; h < n; ++h) {
        auto e = exponents_of(factors, h);
        i64 s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * on[i];
        chr.exps[h] = mod(s, M);
    }
    return chr;
}

GroupDatum parse_datum(const Ctx& c, const Json& j, std::vector<i64>& factors_out) {
    const std::string p = "datum";
    const Json& kindv = field(c, j, p, "kind");
    if (!kindv.is_string()) c.fail(p + ".kind", "expected a string");
    std::string kind = kindv.get<std::string>();
    try {
        if (kind == "taft") {
            auto N = int_field(c, j, p, "N");
            factors_out = {N};
            return taft(N, root_field(c, j, p, "q"));
        }
        if (kind == "sweedler") {
            factors_out = {2};
            return taft(2, {1, 2});
        }
        if (kind == "simple_pointed") {
            auto q = root_field(c, j, p, "q");
            auto N = int_field(c, j, p, "N");
            factors_out = {N};
            return simple_pointed(q, scalar_field(c, j, p, "mu", (int)q.mod), int_field(c, j, p, "d"), N);
        }
        if (kind == "generalized_taft") {
            auto N = int_field(c, j, p, "N"), m = int_field(c, j, p, "m");
            factors_out.assign((std::size_t)(m + 1), N);
            return generalized_taft(N, m, root_field(c, j, p, "q"));
        }
        if (kind == "cyclic") {
            auto q = root_field(c, j, p, "q");
            auto cd = make_cyclic_datum(int_field(c, j, p, "d"), int_field(c, j, p, "n"), int_field(c, j, p, "N"),
                                        j.contains("alpha") ? int_field(c, j, p, "alpha") : 1, q);
            factors_out = {cd.N};
            return realize(cd, scalar_field(c, j, p, "mu", (int)q.mod));
        }
        if (kind == "abelian") {
            auto factors = as_int_list(c, field(c, j, p, "factors"), p + ".factors");
            if (factors.empty()) c.fail(p + ".factors", "at least one factor expected");
            i64 order = 1;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (factors[i] < 2) c.fail(p + ".factors[" + std::to_string(i) + "]", "must be >= 2");
                order *= factors[i];
                if (order > 4096) c.fail(p + ".factors", "group order exceeds 4096");
            }
            auto G = std::make_shared<const FiniteGroup>(FiniteGroup::from_factors(factors));
            int g = element_from_exponents(c, factors, as_int_list(c, field(c, j, p, "g"), p + ".g"), p + ".g");
            auto chi = abelian_character(c, factors, field(c, j, p, "chi"), p + ".chi");
            factors_out = factors;
            return make_datum(G, g, chi, scalar_field(c, j, p, "mu", (int)chi.M));
        }
        if (kind == "cayley") {
            const Json& t = field(c, j, p, "table");
            if (!t.is_array() || t.empty()) c.fail(p + ".table", "expected a square array");
            std::vector<std::vector<int>> T;
            for (std::size_t r = 0; r < t.size(); ++r) {
                auto row = as_int_list(c, t[r], p + ".table[" + std::to_string(r) + "]");
                if (row.size() != t.size()) c.fail(p + ".table[" + std::to_string(r) + "]", "row length differs");
                T.emplace_back(row.begin(), row.end());
            }
            GroupPtr G;
            try {
                G = std::make_shared<const FiniteGroup>(FiniteGroup::from_cayley(T));
            } catch (const std::exception& e) {
                c.fail(p + ".table", e.what());
            }
            const auto& rl = G->relabel();
            auto g_in = int_field(c, j, p, "g");
            if (g_in < 0 || g_in >= G->order()) c.fail(p + ".g", "element index out of range");
            const Json& chi = field(c, j, p, "chi");
            i64 M = int_field(c, chi, p + ".chi", "modulus");
            auto vals = as_int_list(c, field(c, chi, p + ".chi", "values"), p + ".chi.values");
            if ((int)vals.size() != G->order()) c.fail(p + ".chi.values", "one exponent per element expected");
            Character chr{M, std::vector<i64>(vals.size())};
            for (std::size_t h = 0; h < vals.size(); ++h) chr.exps[rl[h]] = mod(vals[h], M);
            if (!chr.is_valid(*G)) c.fail(p + ".chi", "not a group morphism");
            return make_datum(G, rl[g_in], chr, scalar_field(c, j, p, "mu", (int)M));
        }
    } catch (const DatumError& e) {
        c.fail(p, e.what());
    }
    c.fail(p + ".kind", "unknown kind '" + kind +
                            "' (taft, sweedler, simple_pointed, generalized_taft, cyclic, abelian, cayley)");
}

Cocycle parse_cocycle(const Ctx& c, const Json& j, const GroupDatum& D, const std::vector<i64>& factors) {
    const std::string p = "cocycle";
    i64 M = int_field(c, j, p, "modulus");
    if (M < 1) c.fail(p + ".modulus", "must be >= 1");
    int n = D.G->order();
    Cocycle s = Cocycle::trivial(n, M);
    if (j.contains("bilinear")) {
        if (factors.empty()) c.fail(p + ".bilinear", "needs an abelian presentation");
        const Json& B = j["bilinear"];
        std::size_t r = factors.size();
        if (!B.is_array() || B.size() != r) c.fail(p + ".bilinear", "expected an r x r array");
        std::vector<std::vector<i64>> b;
        for (std::size_t i = 0; i < r; ++i) {
            b.push_back(as_int_list(c, B[i], p + ".bilinear[" + std::to_string(i) + "]"));
            if (b.back().size() != r) c.fail(p + ".bilinear[" + std::to_string(i) + "]", "row length differs");
        }
        // sigma(x, y) = sum b_ij x_i y_j
        for (int a = 0; a < n; ++a)
            for (int bb = 0; bb < n; ++bb) {
                auto ea = exponents_of(factors, a), eb = exponents_of(factors, bb);
                i64 v = 0;
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t k = 0; k < r; ++k) v += b[i][k] * ea[i] * eb[k];
                s.at(a, bb) = mod(v, M);
            }
    } else if (j.contains("values")) {
        const Json& V = j["values"];
        if (!V.is_array() || (int)V.size() != n) c.fail(p + ".values", "expected an |G| x |G| array");
        const auto& rl = D.G->relabel();
        for (int a = 0; a < n; ++a) {
            auto row = as_int_list(c, V[a], p + ".values[" + std::to_string(a) + "]");
            if ((int)row.size() != n) c.fail(p + ".values[" + std::to_string(a) + "]", "row length differs");
            for (int bb = 0; bb < n; ++bb) s.at(rl[a], rl[bb]) = mod(row[bb], M);
        }
    } else {
        c.fail(p, "expected 'bilinear' or 'values'");
    }
    if (!is_normalized(s)) c.fail(p, "not normalized (sigma(1, h) and sigma(h, 1) must vanish)");
    if (!is_cocycle(*D.G, s)) c.fail(p, "not a 2-cocycle");
    return s;
}

}  // namespace

std::vector<Cyclo> RunConfig::parsed_samples(i64 M) const {
    std::vector<Cyclo> out;
    for (const auto& s : samples) {
        try {
            out.push_back(Cyclo::parse(s, (int)M));
        } catch (const std::exception& e) {
            throw ConfigError(source + ": samples: " + e.what());
        }
    }
    return out;
}

std::vector<std::string> split_samples(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    Ctx c{source};
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte offset -> line:column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object()) c.fail("(root)", "expected an object");
    RunConfig R;
    R.source = source;
    if (j.contains("schema_version") && as_int(c, j["schema_version"], "schema_version") != kSchemaVersion)
        c.fail("schema_version", "unsupported (expected " + std::to_string(kSchemaVersion) + ")");
    if (j.contains("name")) {
        if (!j["name"].is_string()) c.fail("name", "expected a string");
        R.name = j["name"].get<std::string>();
    }
    if (j.contains("description")) {
        if (!j["description"].is_string()) c.fail("description", "expected a string");
        R.description = j["description"].get<std::string>();
    }
    R.datum = parse_datum(c, field(c, j, "(root)", "datum"), R.factors);
    if (j.contains("modulus")) {
        i64 M = as_int(c, j["modulus"], "modulus");
        if (M < 2) c.fail("modulus", "must be >= 2");
        R.modulus = M;
    }
    if (j.contains("samples")) {
        const Json& s = j["samples"];
        if (!s.is_array()) c.fail("samples", "expected an array of strings");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].is_string())
                R.samples.push_back(s[i].get<std::string>());
            else if (s[i].is_number_integer())
                R.samples.push_back(std::to_string(s[i].get<i64>()));
            else
                c.fail("samples[" + std::to_string(i) + "]", "expected a string or an integer");
        }
    } else {
        R.samples = {"0", "1", "-1", "z"};
    }
    if (j.contains("caps")) {
        const Json& caps = j["caps"];
        if (caps.contains("kappa")) {
            R.kappa_cap = (int)as_int(c, caps["kappa"], "caps.kappa");
            if (R.kappa_cap < 1) c.fail("caps.kappa", "must be >= 1");
        }
    }
    if (j.contains("cocycle")) R.sigma = parse_cocycle(c, j["cocycle"], R.datum, R.factors);
    if (j.contains("expect")) {
        if (!j["expect"].is_object()) c.fail("expect", "expected an object");
        R.expect = j["expect"];
    }
    return R;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace mh
