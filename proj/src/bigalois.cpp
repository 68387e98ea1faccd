#include "mh/bigalois.hpp"

#include <algorithm>
#include <set>

namespace mh {

namespace {

// B_s(g, h) lifted to Z/L
i64 pairing_in(const Cocycle& s, int g, int h, i64 L) { return mod(pairing(s, g, h) * (L / s.M), L); }

bool member_of(const GroupDatum& D, const GroupAutomorphism& u, const Cocycle& s) {
    i64 L = lcm(D.chi.M, s.M);
    for (int h = 0; h < D.G->order(); ++h)
        if (D.chi_exp(u(h), L) != mod(D.chi_exp(h, L) - pairing_in(s, D.g, h, L), L)) return false;
    return true;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

}  // namespace

GammaGroup::GammaGroup(const GroupDatum& D, i64 M) : D_(D), M_(M) {
    H_ = CohomologyGroup::compute(D.G, 0, D.g, M);
    aut_ = automorphisms_fixing(*D.G, D.g, nullptr);
    auto classes = H_.all_classes();
    for (const auto& u : aut_)
        for (const auto& c : classes) {
            Cocycle rep = H_.representative(c);
            if (!member(u, rep)) continue;
            GammaElement x{u, c, rep, epsilon_sum(*D.G, rep, D.g, D.d)};
            index_[x] = (int)elems_.size();
            elems_.push_back(std::move(x));
        }
}

bool GammaGroup::member(const GroupAutomorphism& u, const Cocycle& s) const { return member_of(D_, u, s); }

GammaElement GammaGroup::make(const GroupAutomorphism& u, const Cocycle& s) const {
    GammaElement x;
    x.u = u;
    x.cls = H_.canonicalize(s.M == M_ ? s : s.lifted(M_));
    x.rep = H_.representative(x.cls);
    x.eps = epsilon_sum(*D_.G, x.rep, D_.g, D_.d);
    return x;
}

GammaElement GammaGroup::identity() const {
    return make(identity_automorphism(*D_.G), Cocycle::trivial(D_.G->order(), M_));
}

GammaElement GammaGroup::mul(const GammaElement& x, const GammaElement& y) const {
    return make(compose(x.u, y.u), pullback(x.rep, y.u.perm) + y.rep);
}

GammaElement GammaGroup::inverse(const GammaElement& x) const {
    auto ui = mh::inverse(x.u);
    return make(ui, -pullback(x.rep, ui.perm));
}

int GammaGroup::index_of(const GammaElement& x) const {
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
}

std::vector<GammaElement> GammaGroup::generators() const {
    std::vector<GammaElement> gens;
    std::set<GammaElement> sub{identity()};
    for (const auto& x : elems_) {
        if (sub.count(x)) continue;
        gens.push_back(x);
        std::vector<GammaElement> frontier(sub.begin(), sub.end());
        while (!frontier.empty()) {
            std::vector<GammaElement> next;
            for (const auto& y : frontier)
                for (const auto& s : gens) {
                    auto z = mul(y, s);
                    if (sub.insert(z).second) next.push_back(z);
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

bool GammaGroup::is_abelian() const {
    auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(mul(gens[i], gens[j]) == mul(gens[j], gens[i]))) return false;
    return true;
}

int GammaGroup::aut_component_size() const {
    std::set<GroupAutomorphism> us;
    for (const auto& x : elems_) us.insert(x.u);
    return (int)us.size();
}

std::vector<i64> abelian_invariants_from_orders(const std::vector<i64>& element_orders) {
    std::map<i64, int> order_count;
    for (i64 o : element_orders) ++order_count[o];
    // per prime p: N_k = #{x : x^{p^k} = 1} = p^{sum_i min(e_i, k)}
    std::set<i64> primes;
    for (auto [o, c] : order_count)
        for (i64 p = 2, r = o; r > 1; ++p)
            while (r % p == 0) primes.insert(p), r /= p;
    std::vector<i64> cyclic;
    for (i64 p : primes) {
        auto count_dividing = [&](i64 q) {
            i64 c = 0;
            for (auto [o, k] : order_count)
                if (q % o == 0) c += k;
            return c;
        };
        i64 prev = 1, pk = 1;
        std::vector<int> at_least;  // at_least[k-1]: number of e_i >= k
        for (;;) {
            pk *= p;
            i64 Nk = count_dividing(pk);
            if (Nk == prev) break;
            i64 r = Nk / prev;
            int t = 0;
            while (r > 1) r /= p, ++t;
            at_least.push_back(t);
            prev = Nk;
        }
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            i64 q = 1;
            for (std::size_t j = 0; j <= k; ++j) q *= p;
            for (int t = 0; t < exact; ++t) cyclic.push_back(q);
        }
    }
    return invariant_factors(cyclic);
}

std::vector<i64> abelian_invariants(const GammaGroup& Gam) {
    if (!Gam.is_abelian()) throw std::invalid_argument("abelian_invariants: Gamma is not abelian");
    auto e = Gam.identity();
    std::vector<i64> orders;
    for (const auto& x : Gam.elements()) {
        i64 o = 1;
        for (auto y = x; !(y == e); y = Gam.mul(y, x)) ++o;
        orders.push_back(o);
    }
    return abelian_invariants_from_orders(orders);
}

std::vector<GroupAutomorphism> gamma_partners(const GroupDatum& D, const Cocycle& s) {
    std::vector<GroupAutomorphism> out;
    for (const auto& u : automorphisms_fixing(*D.G, D.g, nullptr))
        if (member_of(D, u, s)) out.push_back(u);
    return out;
}

GroupAutomorphism extend_to_gamma(const GroupDatum& D, const Cocycle& s) {
    if (D.d != D.n || !D.mu.is_zero()) throw DatumError("extend_to_gamma: needs d = o(g) and mu = 0");
    const FiniteGroup& G = *D.G;
    i64 L = lcm(D.chi.M, s.M);
    i64 cg = D.chi_exp(D.g, L);
    GroupAutomorphism u;
    u.perm.resize(G.order());
    for (int h = 0; h < G.order(); ++h) {
        // chi(g)^j = sigma(g,h)^{-1} sigma(h,g)
        i64 target = mod(-pairing_in(s, D.g, h, L), L);
        int j = -1;
        for (i64 t = 0; t < D.d; ++t)
            if (mod(t * cg, L) == target) {
                j = (int)t;
                break;
            }
        if (j < 0) throw std::invalid_argument("extend_to_gamma: B_sigma(g, h) is not a power of chi(g)");
        u.perm[h] = G.mul(G.pow(D.g, j), h);
    }
    if (!is_automorphism(G, u.perm)) throw std::logic_error("extend_to_gamma: map is not an automorphism");
    if (!member_of(D, u, s)) throw std::logic_error("extend_to_gamma: (u, sigma) is not in Gamma");
    return u;
}

bool BiGaloisRep::ok() const {
    auto fine = [](const GaloisCheck& c) {
        return c.status != GaloisCheck::NotBijective && c.status != GaloisCheck::DimensionMismatch;
    };
    return Z.confluent && fine(right) && fine(left) && left_comodule_algebra && bicomodule;
}

BiGaloisRep make_bigalois(const HopfAlgebraRep& H, const GammaElement& x, const Cyclo& a, int kappa_cap) {
    const GroupDatum& D = H.D;
    if (!a.is_zero() && !(D.d == D.n && D.chi_pow_trivial(D.d) && D.mu.is_zero()))
        throw std::invalid_argument("make_bigalois: a != 0 needs a datum of type I");
    BiGaloisRep r;
    r.gamma = x;
    r.a = a;
    r.Z = build_comodule_algebra(H, x.rep, a);
    if (!r.Z.confluent) throw std::logic_error("make_bigalois: presentation is not confluent");
    attach_left_coaction(r.Z, H, x.u.perm);
    r.right = verify_galois_right(r.Z, H, kappa_cap);
    r.left = verify_galois_left(r.Z, H, kappa_cap);
    r.left_comodule_algebra = verify_left_comodule_algebra(r.Z, H).ok() && verify_right_comodule_algebra(r.Z, H).ok();
    r.bicomodule = verify_bicomodule(r.Z, H, H);
    return r;
}

std::optional<BiGaloisIsoWitness> bigalois_isomorphic(const HopfAlgebraRep& H, const GammaElement& x, const Cyclo& a,
                                                      const GammaElement& y, const Cyclo& b, bool verify) {
    const GroupDatum& D = H.D;
    if (!(x.u == y.u) || a.is_zero() != b.is_zero()) return std::nullopt;
    i64 L = lcm(x.rep.M, y.rep.M);
    std::vector<std::pair<int, i64>> fixed{{D.g, 0}};
    if (!a.is_zero()) {
        Cyclo r = b / a;
        i64 o = root_order(r);
        if (o == 0) return std::nullopt;
        L = lcm(L, o);
        fixed.emplace_back(D.gd(), *r.root_exponent((int)L));
    }
    auto mu = coboundary_preimage(*D.G, x.rep, y.rep, L, fixed);
    if (!mu) return std::nullopt;
    BiGaloisIsoWitness w{*mu, L, false};
    if (verify) {
        auto Z1 = build_comodule_algebra(H, x.rep, a);
        auto Z2 = build_comodule_algebra(H, y.rep, b);
        attach_left_coaction(Z1, H, x.u.perm);
        attach_left_coaction(Z2, H, y.u.perm);
        std::vector<SVec> f(Z2.dim());
        for (int h = 0; h < D.G->order(); ++h)
            for (int i = 0; i < D.d; ++i)
                f[Z2.rs.index(h, i)] = SVec{{Z2.rs.index(h, i), Cyclo::root((int)L, w.mu[h])}};
        w.verified = is_algebra_map(Z1.alg, Z2.alg, f) && is_right_colinear(Z1, Z2, f, H.dim()) &&
                     is_left_colinear(Z1, Z2, f, H.dim()) && is_bijective(f, Z2.dim());
        if (!w.verified) throw std::logic_error("bigalois_isomorphic: witness fails the bicolinearity check");
    }
    return w;
}

ComposedIndex cotensor_compose(const GammaGroup& Gam, const GammaElement& x, const Cyclo& a, const GammaElement& y,
                               const Cyclo& b) {
    // with a != 0 only in type I, g^d = 1 and eps is constant on classes
    return {Gam.mul(x, y), Cyclo::root((int)y.rep.M, y.eps) * a + b};
}

CotensorReport cotensor_algebra(const HopfAlgebraRep& H, const GammaGroup& Gam, const BiGaloisRep& Z1,
                                const BiGaloisRep& Z2) {
    const GroupDatum& D = H.D;
    const auto& A1 = Z1.Z;
    const auto& A2 = Z2.Z;
    int d1 = A1.dim(), d2 = A2.dim(), dA = H.dim();
    CotensorReport R;
    R.ambient_dim = d1 * d2;
    if (R.ambient_dim > kCotensorAmbientCap)
        throw CapError("cotensor_algebra: ambient dimension " + std::to_string(R.ambient_dim) + " exceeds the cap " +
                       std::to_string(kCotensorAmbientCap));
    if (!A1.confluent || !A2.confluent || !A1.has_left() || !A2.has_left())
        throw std::invalid_argument("cotensor_algebra: needs confluent bicomodule algebras");

    // kernel of z1 (x) z2 -> alpha1(z1) (x) z2 - z1 (x) beta2(z2), keys (z1' dA + a) d2 + z2
    std::map<int, std::pair<SVec, SVec>> piv;  // pivot -> (reduced image, column combination)
    std::vector<SVec> kernel;
    for (int z1 = 0; z1 < d1; ++z1)
        for (int z2 = 0; z2 < d2; ++z2) {
            SVec v, comb{{z1 * d2 + z2, Cyclo(1)}};
            for (const auto& [k, c] : A1.right[z1]) add_term(v, k * d2 + z2, c);
            for (const auto& [k, c] : A2.left[z2]) add_term(v, (z1 * dA + k / d2) * d2 + k % d2, -c);
            while (!v.empty()) {
                auto [p, c] = *v.rbegin();
                auto it = piv.find(p);
                if (it == piv.end()) {
                    Cyclo inv = Cyclo(1) / c;
                    piv[p] = {scaled(v, inv), scaled(comb, inv)};
                    break;
                }
                Cyclo cc = c;
                axpy(v, -cc, it->second.first);
                axpy(comb, -cc, it->second.second);
            }
            if (v.empty()) kernel.push_back(std::move(comb));
        }
    R.kernel_dim = (int)kernel.size();
    SparseEchelon K;
    for (const auto& k : kernel) K.insert(k);

    R.closed_under_product = true;
    for (std::size_t i = 0; i < kernel.size() && R.closed_under_product; ++i)
        for (std::size_t j = 0; j < kernel.size(); ++j)
            if (!K.reduce(tensor_mul(A1.alg, A2.alg, kernel[i], kernel[j])).empty()) {
                R.closed_under_product = false;
                break;
            }

    // the composed object and gamma into Z1 (x) Z2
    R.index = cotensor_compose(Gam, Z1.gamma, Z1.a, Z2.gamma, Z2.a);
    const auto& v = Z2.gamma.u;
    Cocycle nu = pullback(Z1.gamma.rep, v.perm) + Z2.gamma.rep;
    auto Z = build_comodule_algebra(H, nu, R.index.c);
    attach_left_coaction(Z, H, compose(Z1.gamma.u, v).perm);
    const auto &rs1 = A1.rs, &rs2 = A2.rs;
    int n = D.G->order(), d = (int)D.d;
    SVec gx = unit_vec(rs2.index(0, 1));
    add_term(gx, rs1.index(0, 1) * d2 + rs2.index(D.g, 0), Cyclo(1));
    std::vector<SVec> xp(d);
    xp[0] = unit_vec(0);
    for (int i = 1; i < d; ++i) xp[i] = tensor_mul(A1.alg, A2.alg, xp[i - 1], gx);
    std::vector<SVec> f(Z.dim());
    for (int h = 0; h < n; ++h) {
        SVec th = unit_vec(rs1.index(v(h), 0) * d2 + rs2.index(h, 0));
        for (int i = 0; i < d; ++i) f[Z.rs.index(h, i)] = tensor_mul(A1.alg, A2.alg, th, xp[i]);
    }

    R.gamma_algebra_map = f[0] == unit_vec(0);
    for (int i = 0; i < Z.dim() && R.gamma_algebra_map; ++i)
        for (int j = 0; j < Z.dim(); ++j)
            if (tensor_mul(A1.alg, A2.alg, f[i], f[j]) != apply_images(f, Z.alg.prod(i, j))) {
                R.gamma_algebra_map = false;
                break;
            }
    R.gamma_in_kernel = std::all_of(f.begin(), f.end(), [&](const SVec& x) { return K.reduce(x).empty(); });
    R.gamma_bijective = sparse_rank(f) == Z.dim() && Z.dim() == R.kernel_dim;

    int d12 = d1 * d2;
    R.gamma_left_colinear = R.gamma_right_colinear = true;
    for (int b = 0; b < Z.dim(); ++b) {
        SVec l1, l2, r1, r2;
        for (const auto& [k, c] : f[b]) {
            int z1 = k / d2, z2 = k % d2;
            for (const auto& [k1, e] : A1.left[z1]) add_term(l1, (k1 / d1) * d12 + (k1 % d1) * d2 + z2, c * e);
            for (const auto& [k2, e] : A2.right[z2]) add_term(r1, (z1 * d2 + k2 / dA) * dA + k2 % dA, c * e);
        }
        for (const auto& [k, e] : Z.left[b])
            for (const auto& [w, c] : f[k % Z.dim()]) add_term(l2, (k / Z.dim()) * d12 + w, c * e);
        for (const auto& [k, e] : Z.right[b])
            for (const auto& [w, c] : f[k / dA]) add_term(r2, w * dA + k % dA, c * e);
        if (l1 != l2) R.gamma_left_colinear = false;
        if (r1 != r2) R.gamma_right_colinear = false;
    }
    GammaElement raw{compose(Z1.gamma.u, v), {}, nu, epsilon_sum(*D.G, nu, D.g, D.d)};
    R.matches_index = bigalois_isomorphic(H, raw, R.index.c, R.index.gamma, R.index.c).has_value();
    return R;
}

CompanionMapReport verify_companion_gamma_map(const GammaGroup& source, const GammaGroup& target, const Cocycle& sigma) {
    if (source.modulus() != target.modulus()) throw std::invalid_argument("companion map: moduli differ");
    Cocycle s = sigma.M == target.modulus() ? sigma : sigma.lifted(target.modulus());
    CompanionMapReport R;
    R.source_order = source.order();
    R.target_order = target.order();
    auto phi = [&](const GammaElement& x) { return target.make(x.u, -pullback(s, x.u.perm) + s + x.rep); };
    std::vector<GammaElement> img;
    R.well_defined = true;
    for (const auto& x : source.elements()) {
        auto y = phi(x);
        if (target.index_of(y) < 0) R.well_defined = false;
        img.push_back(y);
    }
    std::set<GammaElement> distinct(img.begin(), img.end());
    R.injective = distinct.size() == img.size();
    R.surjective = R.well_defined && (int)distinct.size() == target.order();
    R.homomorphism = true;
    const auto& el = source.elements();
    auto xs = el.size() * el.size() <= 4096 ? el : source.generators();
    for (const auto& x : xs) {
        for (const auto& y : el)
            if (!(phi(source.mul(x, y)) == target.mul(phi(x), phi(y)))) {
                R.homomorphism = false;
                break;
            }
        if (!R.homomorphism) break;
    }
    return R;
}

bool BiGalReport::all_verified() const {
    for (const auto& r : generators)
        if (!r.ok()) return false;
    if (bridge && !bridge->ok()) return false;
    if (companion_map && !companion_map->ok()) return false;
    return cotensor_ok;
}

BiGalReport bigalois_group(const GroupDatum& D, i64 M, const std::vector<Cyclo>& samples, int kappa_cap) {
    BiGalReport R;
    auto tr = classify_type(D, M);
    R.type = tr.type;
    R.M = M;
    for (const auto& a : samples)
        if (std::find(R.samples.begin(), R.samples.end(), a) == R.samples.end()) R.samples.push_back(a);
    GroupDatum W = D;
    R.computed_on = "G";
    if (R.type == DatumType::VI) {
        W = reduce_type_vi(D);
        R.computed_on = "G_red";
        R.bridge = type_vi_bridge(D, kappa_cap);
        R.gamma = GammaGroup(D, M);
        R.reduced_gamma = GammaGroup(W, M);
    } else if (R.type == DatumType::V) {
        const Cocycle& w = *tr.witness;
        R.M = lcm(M, w.M);
        W = reduce_type_v(D, w);
        R.computed_on = "G_sigma";
        R.gamma = GammaGroup(D, R.M);
        R.reduced_gamma = GammaGroup(W, R.M);
        R.companion_map = verify_companion_gamma_map(*R.reduced_gamma, R.gamma, w);
        // A_{sigma^{-1},0}(G_sigma): left A(G), right A(G_sigma)
        auto Hr = build_hopf_algebra(W);
        auto Hl = build_hopf_algebra(D);
        auto Z = build_comodule_algebra(Hr, -w, Cyclo(0));
        attach_left_coaction(Z, Hl, identity_perm(D.G->order()));
        BridgeReport b;
        b.description = "A_{sigma^-1,0}(G_sigma): left A(G), right A(G_sigma)";
        b.right = verify_galois_right(Z, Hr, kappa_cap);
        b.left = verify_galois_left(Z, Hl, kappa_cap);
        b.bicomodule = Z.confluent && verify_bicomodule(Z, Hl, Hr) && verify_right_comodule_algebra(Z, Hr).ok() &&
                       verify_left_comodule_algebra(Z, Hl).ok();
        R.bridge = b;
    } else {
        R.gamma = GammaGroup(D, M);
    }
    const GammaGroup& Gam = R.reduced_gamma ? *R.reduced_gamma : R.gamma;
    auto H = build_hopf_algebra(W);
    for (const auto& x : Gam.generators()) R.generators.push_back(make_bigalois(H, x, Cyclo(0), kappa_cap));
    if (R.type == DatumType::I) {
        R.scalar_factor = true;
        for (const auto& a : R.samples)
            if (!a.is_zero()) R.generators.push_back(make_bigalois(H, Gam.identity(), a, kappa_cap));
    }
    for (const auto& z1 : R.generators)
        for (const auto& z2 : R.generators) {
            if (z1.Z.dim() * z2.Z.dim() > kCotensorAmbientCap) continue;
            ++R.cotensor_checked;
            if (!cotensor_algebra(H, Gam, z1, z2).ok()) R.cotensor_ok = false;
        }
    return R;
}

}  // namespace mh
