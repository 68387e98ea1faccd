#include "mh/datum.hpp"

#include "mh/linalg.hpp"

namespace mh {

bool GroupDatum::chi_pow_trivial(i64 e) const {
    for (int h = 0; h < G->order(); ++h)
        if (mod(chi(h) * e, chi.M) != 0) return false;
    return true;
}

GroupDatum make_datum(GroupPtr G, int g, const Character& chi, const Cyclo& mu) {
    if (!G) throw DatumError("group: missing");
    if (g < 0 || g >= G->order()) throw DatumError("g: element index out of range");
    if (!G->is_central(g)) throw DatumError("g central: g is not central in G");
    if (!chi.is_valid(*G)) throw DatumError("chi: not a character of G");
    GroupDatum D;
    D.G = G;
    D.g = g;
    D.chi = chi;
    D.mu = mu;
    if (mod(chi(g), chi.M) == 0) throw DatumError("chi(g) != 1: chi(g) is trivial");
    D.d = additive_order(chi(g), chi.M);
    D.n = G->element_order(g);
    D.m = chi.order();
    if (!mu.is_zero()) {
        if (D.n == D.d) throw DatumError("mu = 0 if o(g) = o(chi(g)): mu is nonzero with o(g) = o(chi(g))");
        if (!D.chi_pow_trivial(D.d)) throw DatumError("mu != 0 implies chi^d = 1: chi^d is nontrivial");
    }
    return D;
}

std::string type_name(DatumType t) {
    static const char* names[] = {"", "I", "II", "III", "IV", "V", "VI"};
    return names[(int)t];
}

i64 default_modulus(const GroupDatum& D) { return lcm(D.G->exponent(), D.chi.M); }

bool is_symmetric_extension_witness(const GroupDatum& D, const Cocycle& s) {
    const auto& G = *D.G;
    if (s.n != G.order() || !is_cocycle(G, s)) return false;
    i64 L = lcm(s.M, D.chi.M);
    Cocycle t = s.lifted(L);
    int gd = D.gd();
    for (int h = 0; h < G.order(); ++h)
        if (pairing(t, gd, h) != mod(D.d * D.chi_exp(h, L), L)) return false;
    return true;
}

namespace {

// alternating bicharacters B with B(g^d, .) = d chi, assembled as sum_{i>j} b_ij x_j y_i
std::optional<Cocycle> bicharacter_witness(const GroupDatum& D, i64 L) {
    const FiniteGroup& G = *D.G;
    const auto& v = *G.abelian();
    int r = (int)v.factors.size();
    const auto& x = v.exps[D.gd()];
    struct Var {
        int i, j;
        i64 scale;
    };
    std::vector<Var> vars;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < i; ++j) vars.push_back({i, j, L / gcd(gcd(v.factors[i], v.factors[j]), L)});
    std::vector<std::vector<i64>> A;
    std::vector<i64> b;
    for (int k = 0; k < r; ++k) {
        std::vector<i64> row(vars.size(), 0);
        for (std::size_t t = 0; t < vars.size(); ++t) {
            const auto& w = vars[t];
            if (w.i == k) row[t] = mod(row[t] + w.scale * x[w.j], L);
            if (w.j == k) row[t] = mod(row[t] - w.scale * x[w.i], L);
        }
        A.push_back(row);
        b.push_back(mod(D.d * D.chi_exp(v.gens[k], L), L));
    }
    if (vars.empty()) {
        for (auto e : b)
            if (e != 0) return std::nullopt;
        return Cocycle::trivial(G.order(), L);
    }
    auto sol = solve_linear_mod(A, (int)vars.size(), b, L);
    if (!sol) return std::nullopt;
    std::vector<i64> a(r, 0);
    std::vector<std::vector<i64>> B(r, std::vector<i64>(r, 0));
    for (std::size_t t = 0; t < vars.size(); ++t) B[vars[t].i][vars[t].j] = mod(sol->x[t] * vars[t].scale, L);
    return abelian_cocycle_assemble(G, L, a, B);
}

std::optional<Cocycle> cochain_witness(const GroupDatum& D, i64 L) {
    const FiniteGroup& G = *D.G;
    int n = G.order();
    if (n > kDenseCohomologyCap)
        throw CapError("classify_type: nonabelian group of order " + std::to_string(n) +
                       " exceeds the cochain search cap " + std::to_string(kDenseCohomologyCap));
    int m = n - 1;
    auto var = [&](int a, int b) { return (a - 1) * m + (b - 1); };
    auto A = cocycle_equations(G, L);
    std::vector<i64> b(A.size(), 0);
    int gd = D.gd();
    for (int h = 1; h < n; ++h) {
        if (h == gd) continue;
        std::vector<i64> row(m * m, 0);
        row[var(gd, h)] += 1;
        row[var(h, gd)] -= 1;
        A.push_back(row);
        b.push_back(mod(D.d * D.chi_exp(h, L), L));
    }
    auto sol = solve_linear_mod(A, m * m, b, L);
    if (!sol) return std::nullopt;
    return Cocycle::from_vector(n, L, sol->x);
}

}  // namespace

TypeResult classify_type(const GroupDatum& D, i64 M) {
    TypeResult r;
    if (!D.mu.is_zero()) {
        r.type = DatumType::VI;
        return r;
    }
    bool chid = D.chi_pow_trivial(D.d);
    if (D.d == D.n) {
        r.type = chid ? DatumType::I : DatumType::II;
        return r;
    }
    if (chid) {
        r.type = DatumType::III;
        return r;
    }
    const FiniteGroup& G = *D.G;
    i64 L = lcm(G.is_abelian() ? G.exponent() : (i64)G.order(), D.chi.M);
    if (M > 0) L = lcm(L, M);
    r.search_modulus = L;
    std::optional<Cocycle> w;
    if (D.gd() == 0) {
        r.search_engine = "none (g^d = 1)";
    } else if (G.is_abelian()) {
        r.search_engine = "bicharacter";
        w = bicharacter_witness(D, L);
    } else {
        r.search_engine = "cochain";
        w = cochain_witness(D, L);
    }
    if (w) {
        if (!is_symmetric_extension_witness(D, *w)) throw std::logic_error("classify_type: witness fails its identity");
        r.type = DatumType::V;
        r.witness = w;
    } else {
        r.type = DatumType::IV;
    }
    return r;
}

Character twisted_character(const GroupDatum& D, const Cocycle& s) {
    i64 L = lcm(D.chi.M, s.M);
    Cocycle t = s.lifted(L);
    Character c;
    c.M = L;
    c.exps.resize(D.G->order());
    for (int h = 0; h < D.G->order(); ++h) c.exps[h] = mod(D.chi_exp(h, L) - pairing(t, D.g, h), L);
    return c;
}

GroupDatum companion_datum(const GroupDatum& D, const Cocycle& s) {
    auto t = classify_type(D).type;
    if (t != DatumType::III && t != DatumType::IV)
        throw DatumError("companion_datum: datum has type " + type_name(t) + ", expected III or IV");
    if (!is_cocycle(*D.G, s)) throw DatumError("companion_datum: sigma is not a cocycle");
    return make_datum(D.G, D.g, twisted_character(D, s), Cyclo(0));
}

GroupDatum companion_datum_scalar(const GroupDatum& D, const Cocycle& s, const Cyclo& a) {
    auto t = classify_type(D).type;
    if (t != DatumType::III) throw DatumError("companion_datum_scalar: datum has type " + type_name(t) + ", expected III");
    if (a.is_zero()) throw DatumError("companion_datum_scalar: a must be nonzero");
    if (!is_cocycle(*D.G, s)) throw DatumError("companion_datum_scalar: sigma is not a cocycle");
    int gd = D.gd();
    for (int h = 0; h < D.G->order(); ++h)
        if (pairing(s, gd, h) != 0) throw DatumError("companion_datum_scalar: sigma does not commute with g^d");
    i64 e = epsilon_sum(*D.G, s, D.g, D.d);
    Cyclo mu = -a * Cyclo::root((int)s.M, -e);
    return make_datum(D.G, D.g, twisted_character(D, s), mu);
}

std::optional<DatumIsomorphism> datum_isomorphic(const GroupDatum& D1, const GroupDatum& D2, i64 root_modulus,
                                                 const std::vector<Cyclo>& samples) {
    if (D1.G->order() != D2.G->order() || D1.d != D2.d || D1.n != D2.n) return std::nullopt;
    if (D1.mu.is_zero() != D2.mu.is_zero()) return std::nullopt;
    auto fs = isomorphisms(*D1.G, *D2.G, D1.g, D2.g, &D1.chi, &D2.chi, 1);
    if (fs.empty()) return std::nullopt;
    DatumIsomorphism iso;
    iso.f = fs.front();
    if (D1.mu.is_zero()) {
        iso.delta = Cyclo(1);
        return iso;
    }
    i64 L = lcm(D1.mu.modulus(), D2.mu.modulus());
    if (root_modulus > 0) L = lcm(L, root_modulus);
    L *= D1.d;
    std::vector<Cyclo> cands;
    for (i64 e = 0; e < L; ++e) cands.push_back(Cyclo::root((int)L, e));
    cands.insert(cands.end(), samples.begin(), samples.end());
    for (const auto& delta : cands) {
        if (delta.is_zero()) continue;
        if (delta.pow(D1.d) * D2.mu == D1.mu) {
            iso.delta = delta;
            return iso;
        }
    }
    return std::nullopt;
}

GroupDatum reduce_type_v(const GroupDatum& D, const Cocycle& w) {
    auto t = classify_type(D).type;
    if (t != DatumType::V) throw DatumError("reduce: datum has type " + type_name(t) + ", expected V");
    if (!is_symmetric_extension_witness(D, w)) throw DatumError("reduce: witness fails chi^d = B_sigma(g^d, .)");
    GroupDatum R = make_datum(D.G, D.g, twisted_character(D, w), Cyclo(0));
    if (classify_type(R).type != DatumType::III) throw std::logic_error("reduce: result is not of type III");
    return R;
}

GroupDatum reduce_type_vi(const GroupDatum& D) {
    if (D.mu.is_zero()) throw DatumError("reduce: datum has mu = 0, expected type VI");
    GroupDatum R = make_datum(D.G, D.g, D.chi, Cyclo(0));
    if (classify_type(R).type != DatumType::III) throw std::logic_error("reduce: result is not of type III");
    return R;
}

}  // namespace mh
