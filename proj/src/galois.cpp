#include "mh/galois.hpp"

#include <algorithm>

namespace mh {

const char* const kSurrogateRule =
    "k* is replaced by mu_M; k*/(k*)^t is instantiated as mu_M/mu_M^t = Z/gcd(M,t); the additive factor k is "
    "kept symbolic and sampled";

bool GaloisEnumeration::all_verified() const {
    for (const auto& r : reps)
        if (!r.verified()) return false;
    return !bridge || bridge->ok();
}

int GaloisEnumeration::exact_kappa_count() const {
    int c = 0;
    for (const auto& r : reps)
        if (r.kappa.status == GaloisCheck::Bijective) ++c;
    return c;
}

i64 root_order(const Cyclo& z) {
    if (z.is_zero()) return 0;
    i64 L = lcm(2, z.modulus());
    auto e = z.root_exponent((int)L);
    return e ? additive_order(*e, L) : 0;
}

namespace {

GaloisRepresentative make_rep(const HopfAlgebraRep& H, const std::string& branch, std::vector<i64> coords,
                              const Cocycle& s, const Cyclo& a, int cap) {
    GaloisRepresentative r;
    r.branch = branch;
    r.coords = std::move(coords);
    r.sigma = s;
    r.a = a;
    r.galois_condition = galois_condition(H.D, s, a);
    r.confluent = confluence_check(H.D, s, a).confluent;
    if (r.galois_condition) {
        auto Z = build_comodule_algebra(H, s, a);
        r.kappa = verify_galois_right(Z, H, cap);
    } else {
        r.kappa.status = GaloisCheck::NotBijective;
        r.kappa.reason = "the Galois condition fails";
    }
    return r;
}

Cocycle add_lifted(const Cocycle& x, const Cocycle& y) {
    i64 L = lcm(x.M, y.M);
    return x.lifted(L) + y.lifted(L);
}

}  // namespace

BridgeReport type_vi_bridge(const GroupDatum& D, int kappa_cap) {
    BridgeReport b;
    GroupDatum R = reduce_type_vi(D);
    auto Hr = build_hopf_algebra(R);
    auto Hl = build_hopf_algebra(D);
    auto Z = build_comodule_algebra(Hr, Cocycle::trivial(D.G->order(), 1), -D.mu);
    std::vector<int> id(D.G->order());
    for (int h = 0; h < D.G->order(); ++h) id[h] = h;
    attach_left_coaction(Z, Hl, id);
    b.description = "A_{1,-mu}(G_red): left A(G), right A(G_red)";
    b.right = verify_galois_right(Z, Hr, kappa_cap);
    b.left = verify_galois_left(Z, Hl, kappa_cap);
    b.bicomodule = verify_bicomodule(Z, Hl, Hr) && verify_right_comodule_algebra(Z, Hr).ok() &&
                   verify_left_comodule_algebra(Z, Hl).ok();
    return b;
}

std::vector<GaloisBranch> galois_branches(const GroupDatum& D, i64 M) {
    auto tr = classify_type(D, M);
    GroupDatum R = tr.type == DatumType::VI ? reduce_type_vi(D) : D;
    auto H2 = CohomologyGroup::compute(R.G, 0, 0, M);
    switch (tr.type) {
        case DatumType::I:
            return {{"H2 x k", "H^2", H2, true}};
        case DatumType::II:
        case DatumType::IV:
            return {{"a=0", "H^2", H2, false}};
        default: {
            int gd = R.gd();
            return {{"a=0", "H^2", H2, false},
                    {"a!=0", "H^2_{g^d,g^d}", CohomologyGroup::compute(R.G, gd, gd, M), false}};
        }
    }
}

GaloisEnumeration enumerate_galois(const GroupDatum& D, i64 M, const std::vector<Cyclo>& samples, int kappa_cap) {
    GaloisEnumeration E;
    E.M = M;
    for (const auto& a : samples)
        if (std::find(E.samples.begin(), E.samples.end(), a) == E.samples.end()) E.samples.push_back(a);
    auto tr = classify_type(D, M);
    E.type = tr.type;
    E.enumerated = D;
    if (E.type == DatumType::VI) {
        E.bridge = type_vi_bridge(D, kappa_cap);
        E.enumerated = reduce_type_vi(D);
    }
    if (E.type == DatumType::V) {
        if (!tr.witness) throw std::logic_error("enumerate_galois: type V without witness");
        E.witness = tr.witness;
    }
    const GroupDatum& R = E.enumerated;
    auto H = build_hopf_algebra(R);
    E.branches = galois_branches(D, M);
    for (const auto& br : E.branches)
        for (const auto& c : br.H.all_classes()) {
            Cocycle s = br.H.representative(c);
            if (br.tag == "H2 x k") {
                for (const auto& a : E.samples) E.reps.push_back(make_rep(H, br.tag, c, s, a, kappa_cap));
            } else if (br.tag == "a=0") {
                E.reps.push_back(make_rep(H, br.tag, c, s, 0, kappa_cap));
            } else {
                if (E.type == DatumType::V) s = add_lifted(*E.witness, s);
                E.reps.push_back(make_rep(H, br.tag, c, s, 1, kappa_cap));
            }
        }
    return E;
}

std::optional<std::vector<i64>> coboundary_preimage(const FiniteGroup& G, const Cocycle& sigma, const Cocycle& tau,
                                                    i64 L, const std::vector<std::pair<int, i64>>& fixed) {
    int n = G.order();
    std::vector<i64> mu(n, 0);
    if (n == 1) return mu;
    Cocycle s = sigma.lifted(L), t = tau.lifted(L);
    // unknowns mu(h), h != 1: mu(x) + mu(y) - mu(xy) = s(x,y) - t(x,y)
    std::vector<std::vector<i64>> A;
    std::vector<i64> rhs;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            std::vector<i64> row(n - 1, 0);
            row[x - 1] += 1;
            row[y - 1] += 1;
            int xy = G.mul(x, y);
            if (xy != 0) row[xy - 1] -= 1;
            for (auto& v : row) v = mod(v, L);
            A.push_back(row);
            rhs.push_back(mod(s(x, y) - t(x, y), L));
        }
    for (auto [h, e] : fixed) {
        if (h == 0) {
            if (mod(e, L) != 0) return std::nullopt;
            continue;
        }
        std::vector<i64> row(n - 1, 0);
        row[h - 1] = 1;
        A.push_back(row);
        rhs.push_back(mod(e, L));
    }
    auto sol = solve_linear_mod(A, n - 1, rhs, L);
    if (!sol) return std::nullopt;
    for (int h = 1; h < n; ++h) mu[h] = mod(sol->x[h - 1], L);
    if (!(coboundary(G, mu, L) == s - t)) throw std::logic_error("coboundary_preimage: solver returned a non-solution");
    return mu;
}

namespace {

struct IsoSetup {
    i64 L = 1;
    i64 r_exp = 0;  // b/a = zeta_L^{r_exp}
    bool scalar_branch = false;
};

std::optional<IsoSetup> iso_setup(const GroupDatum& D, const Cocycle& s, const Cyclo& a, const Cocycle& t,
                                  const Cyclo& b) {
    if (a.is_zero() != b.is_zero()) return std::nullopt;
    IsoSetup st;
    st.L = lcm(s.M, t.M);
    if (!a.is_zero()) {
        Cyclo r = b / a;
        i64 o = root_order(r);
        if (o == 0) return std::nullopt;  // outside the surrogate
        st.L = lcm(st.L, o);
        st.r_exp = *r.root_exponent((int)st.L);
        st.scalar_branch = true;
        if (D.gd() == 0 && st.r_exp != 0) return std::nullopt;  // g^d = 1 forces b = a
    }
    return st;
}

std::vector<SVec> diagonal_map(const ComoduleAlgebra& Z2, const std::vector<i64>& mu, i64 L, const Cyclo& lambda,
                               int g) {
    int n = Z2.D.G->order(), d = (int)Z2.D.d;
    const auto& rs = Z2.rs;
    SVec fx = unit_vec(rs.index(0, 1));
    add_term(fx, rs.index(g, 0), lambda);
    std::vector<SVec> pw(d);
    pw[0] = unit_vec(0);
    for (int i = 1; i < d; ++i) pw[i] = Z2.alg.mul(pw[i - 1], fx);
    std::vector<SVec> f(Z2.dim());
    for (int h = 0; h < n; ++h) {
        SVec th{{rs.index(h, 0), Cyclo::root((int)L, mu[h])}};
        for (int i = 0; i < d; ++i) f[rs.index(h, i)] = Z2.alg.mul(th, pw[i]);
    }
    return f;
}

bool check_iso(const ComoduleAlgebra& Z1, const ComoduleAlgebra& Z2, const std::vector<SVec>& f, int dimA) {
    return is_algebra_map(Z1.alg, Z2.alg, f) && is_right_colinear(Z1, Z2, f, dimA) && is_bijective(f, Z2.dim());
}

}  // namespace

std::optional<GaloisIsoWitness> galois_isomorphic(const HopfAlgebraRep& H, const Cocycle& sigma, const Cyclo& a,
                                                  const Cocycle& tau, const Cyclo& b, bool verify) {
    const GroupDatum& D = H.D;
    const FiniteGroup& G = *D.G;
    auto st = iso_setup(D, sigma, a, tau, b);
    if (!st) return std::nullopt;
    i64 L = st->L;
    std::vector<std::pair<int, i64>> fixed;
    if (st->scalar_branch && D.gd() != 0) fixed.emplace_back(D.gd(), st->r_exp);
    auto mu = coboundary_preimage(G, sigma, tau, L, fixed);
    if (!mu) return std::nullopt;
    GaloisIsoWitness w;
    w.L = L;
    w.mu = *mu;
    if (verify) {
        auto Z1 = build_comodule_algebra(H, sigma, a);
        auto Z2 = build_comodule_algebra(H, tau, b);
        w.verified = check_iso(Z1, Z2, diagonal_map(Z2, w.mu, L, 0, D.g), H.dim());
        if (!w.verified) throw std::logic_error("galois_isomorphic: witness fails the isomorphism check");
    }
    return w;
}

std::optional<BruteForceIso> brute_force_colinear_iso(const HopfAlgebraRep& H, const Cocycle& sigma, const Cyclo& a,
                                                      const Cocycle& tau, const Cyclo& b,
                                                      const std::vector<Cyclo>& lambda_samples) {
    const GroupDatum& D = H.D;
    int n = D.G->order();
    if (H.dim() > kBruteForceDimCap)
        throw CapError("brute_force_colinear_iso: dimension " + std::to_string(H.dim()) + " exceeds the search cap " +
                       std::to_string(kBruteForceDimCap));
    // the modulus only depends on the scalars, so a mismatch of branches still gets searched
    i64 L = lcm(sigma.M, tau.M);
    if (!a.is_zero() && !b.is_zero()) {
        i64 o = root_order(b / a);
        if (o > 0) L = lcm(L, o);
    }
    double space = 1;
    for (int i = 1; i < n; ++i) space *= (double)L;
    if (space * (double)lambda_samples.size() > 2e6)
        throw CapError("brute_force_colinear_iso: search space exceeds 2e6 candidates");
    auto Z1 = build_comodule_algebra(H, sigma, a);
    auto Z2 = build_comodule_algebra(H, tau, b);
    if (!Z1.confluent || !Z2.confluent)
        throw std::invalid_argument("brute_force_colinear_iso: both presentations must be confluent");
    std::vector<i64> mu(n, 0);
    while (true) {
        for (const auto& lam : lambda_samples) {
            auto f = diagonal_map(Z2, mu, L, lam, D.g);
            if (check_iso(Z1, Z2, f, H.dim())) return BruteForceIso{mu, L, lam};
        }
        int k = 1;
        while (k < n && ++mu[k] == L) mu[k++] = 0;
        if (k >= n) break;
    }
    return std::nullopt;
}

CohomologyGroup homotopy_classes(const GroupDatum& D, i64 M) { return CohomologyGroup::compute(D.G, 0, 0, M); }

}  // namespace mh
