#include "doctest.h"
#include "mh/bigalois.hpp"
#include "mh/special.hpp"

using namespace mh;

namespace {

GroupPtr grp(std::vector<i64> f) { return std::make_shared<const FiniteGroup>(FiniteGroup::from_factors(f)); }

GammaElement perturbed(const GammaGroup& Gam, const GammaElement& x, const std::vector<i64>& mu) {
    GammaElement y = x;
    y.rep = x.rep + coboundary(Gam.datum().group(), mu, x.rep.M);
    return y;
}

}  // namespace

TEST_CASE("Taft at M = N: Gamma is cyclic of order N with trivial automorphism part") {
    for (i64 N : {2, 3, 4, 5}) {
        GammaGroup Gam(taft(N, {1, N}), N);
        CHECK(Gam.order() == N);
        CHECK(Gam.aut_component_size() == 1);
        CHECK(abelian_invariants(Gam) == std::vector<i64>{N});
    }
}

TEST_CASE("Gamma group law") {
    // C4 x C2, g = (1,0), chi(g) = -1: Aut_g is nontrivial
    auto G = grp({4, 2});
    const auto& v = *G->abelian();
    auto D = make_datum(G, v.gens[0], Character::from_generators(*G, 2, {1, 0}), 0);
    GammaGroup Gam(D, 4);
    REQUIRE(Gam.order() > 1);
    auto e = Gam.identity();
    CHECK(Gam.index_of(e) >= 0);
    const auto& el = Gam.elements();
    for (const auto& x : el) {
        CHECK(Gam.mul(x, e) == x);
        CHECK(Gam.mul(e, x) == x);
        CHECK(Gam.mul(x, Gam.inverse(x)) == e);
        CHECK(Gam.mul(Gam.inverse(x), x) == e);
        for (const auto& y : el) {
            auto xy = Gam.mul(x, y);
            CHECK(Gam.index_of(xy) >= 0);
            for (const auto& z : el) CHECK(Gam.mul(xy, z) == Gam.mul(x, Gam.mul(y, z)));
        }
    }
}

TEST_CASE("Gamma membership does not depend on the representative") {
    auto D = generalized_taft(2, 1, {1, 2});
    GammaGroup Gam(D, 2);
    int n = D.G->order();
    for (const auto& x : Gam.elements())
        for (int t = 1; t < n; ++t) {
            std::vector<i64> mu(n, 0);
            mu[t] = 1;
            auto y = perturbed(Gam, x, mu);
            CHECK(Gam.member(y.u, y.rep));
            CHECK((t == D.g || Gam.make(y.u, y.rep).cls == x.cls));
        }
}

TEST_CASE("C16 x C4 with g = x^2: the bicharacter admits no Gamma partner") {
    auto G = grp({16, 4});
    const auto& v = *G->abelian();
    int g = G->pow(v.gens[0], 2);
    auto D = make_datum(G, g, Character::from_generators(*G, 4, {1, 0}), 0);
    // sigma(x^a h^b, x^a' h^b') = i^{a b'}
    std::vector<std::vector<i64>> b(2, std::vector<i64>(2, 0));
    b[1][0] = 1;
    Cocycle s = abelian_cocycle_assemble(*G, 4, {0, 0}, b);
    REQUIRE(is_cocycle(*G, s));
    // sigma(g,h)^{-1} sigma(h,g) = i^{-2} for h the C4 generator
    CHECK(mod(-pairing(s, g, v.gens[1]), 4) == 2);
    CHECK(gamma_partners(D, s).empty());
    CHECK(gamma_partners(D, Cocycle::trivial(G->order(), 4)).size() >= 1);
}

TEST_CASE("extend_to_gamma") {
    auto S = taft(2, {1, 2});
    CHECK(extend_to_gamma(S, Cocycle::trivial(2, 2)) == identity_automorphism(*S.G));
    auto H2 = CohomologyGroup::compute(S.G, 0, 0, 2);
    for (const auto& c : H2.all_classes()) CHECK(extend_to_gamma(S, H2.representative(c)).perm == std::vector<int>{0, 1});

    // C2 x C2 with a pairing: u(h) = g h
    auto D = generalized_taft(2, 1, {1, 2});
    auto HD = CohomologyGroup::compute(D.G, 0, 0, 2);
    auto HA = build_hopf_algebra(D);
    GammaGroup Gam(D, 2);
    bool moved = false;
    for (const auto& c : HD.all_classes()) {
        Cocycle s = HD.representative(c);
        auto u = extend_to_gamma(D, s);
        if (!(u == identity_automorphism(*D.G))) moved = true;
        // every Galois class extends to a biGalois object
        auto r = make_bigalois(HA, Gam.make(u, s), Cyclo(0));
        CHECK(r.ok());
        CHECK(r.left.ok());
    }
    CHECK(moved);
    CHECK_THROWS_AS(extend_to_gamma(simple_pointed({1, 4}, 0, 2, 4), Cocycle::trivial(4, 4)), DatumError);
}

TEST_CASE("make_bigalois: identity object, Sweedler scalar, type III rejection") {
    auto S = taft(2, {1, 2});
    auto H = build_hopf_algebra(S);
    GammaGroup Gam(S, 2);
    auto id = make_bigalois(H, Gam.identity(), 0);
    CHECK(id.ok());
    CHECK(id.right.ok());
    CHECK(id.left.ok());
    CHECK(id.Z.alg.table == H.alg.table);
    for (const auto& x : Gam.elements()) {
        auto r = make_bigalois(H, x, 1);
        CHECK(r.ok());
        CHECK(r.left.ok());
    }
    auto T = simple_pointed({1, 4}, 0, 2, 4);
    auto HT = build_hopf_algebra(T);
    GammaGroup GT(T, 4);
    CHECK_THROWS_AS(make_bigalois(HT, GT.identity(), 1), std::invalid_argument);
}

TEST_CASE("bigalois_isomorphic") {
    auto D = generalized_taft(2, 1, {1, 2});
    auto H = build_hopf_algebra(D);
    GammaGroup Gam(D, 2);
    int n = D.G->order();
    const auto& el = Gam.elements();
    for (const auto& x : el) {
        auto w = bigalois_isomorphic(H, x, 0, x, 0);
        REQUIRE(w.has_value());
        CHECK(w->verified);
        for (int t = 1; t < n; ++t) {
            if (t == D.g) continue;
            std::vector<i64> mu(n, 0);
            mu[t] = 1;
            CHECK(bigalois_isomorphic(H, perturbed(Gam, x, mu), 0, x, 0).has_value());
        }
        for (const auto& y : el)
            if (!(x == y)) CHECK_FALSE(bigalois_isomorphic(H, x, 0, y, 0).has_value());
    }
}

TEST_CASE("cotensor: index-level and algebra-level composition agree") {
    for (i64 N : {2, 3}) {
        auto D = taft(N, {1, N});
        auto H = build_hopf_algebra(D);
        GammaGroup Gam(D, N);
        std::vector<BiGaloisRep> reps;
        for (const auto& x : Gam.elements())
            for (const Cyclo& a : {Cyclo(0), Cyclo(1)}) reps.push_back(make_bigalois(H, x, a));
        for (const auto& z1 : reps)
            for (const auto& z2 : reps) {
                auto R = cotensor_algebra(H, Gam, z1, z2);
                CHECK(R.kernel_dim == H.dim());
                CHECK(R.ok());
                CHECK(R.index.gamma == Gam.mul(z1.gamma, z2.gamma));
                CHECK(R.index.c == Cyclo::root((int)N, z2.gamma.eps) * z1.a + z2.a);
            }
        // composing with the identity object changes nothing
        auto e = make_bigalois(H, Gam.identity(), 0);
        for (const auto& z : reps) {
            auto R = cotensor_algebra(H, Gam, z, e);
            CHECK(R.index.gamma == z.gamma);
            CHECK(R.index.c == z.a);
        }
    }
}

TEST_CASE("Taft(3): the scalar part follows c = eps(tau) a + b with a nontrivial twist") {
    auto D = taft(3, {1, 3});
    GammaGroup Gam(D, 3);
    bool twisted = false;
    for (const auto& x : Gam.elements())
        if (x.eps != 0) twisted = true;
    CHECK(twisted);
}

TEST_CASE("bigalois_group: type V goes through the companion datum") {
    auto G = grp({4, 4});
    const auto& v = *G->abelian();
    auto D = make_datum(G, v.gens[0], Character::from_generators(*G, 4, {2, 3}), 0);
    auto R = bigalois_group(D, 4, {});
    CHECK(R.type == DatumType::V);
    CHECK(R.computed_on == "G_sigma");
    REQUIRE(R.companion_map.has_value());
    CHECK(R.companion_map->ok());
    CHECK(R.companion_map->source_order == R.gamma.order());
    REQUIRE(R.bridge.has_value());
    CHECK(R.bridge->ok());
    CHECK(R.all_verified());
}

TEST_CASE("bigalois_group: type VI goes through the reduced datum") {
    auto D = simple_pointed({1, 4}, 1, 2, 4);
    auto R = bigalois_group(D, 4, {});
    CHECK(R.type == DatumType::VI);
    CHECK(R.computed_on == "G_red");
    REQUIRE(R.bridge.has_value());
    CHECK(R.bridge->right.ok());
    CHECK(R.bridge->left.ok());
    CHECK(R.all_verified());
    CHECK(R.gamma.order() == R.reduced_gamma->order());
}

TEST_CASE("bigalois_group: Taft carries the scalar factor") {
    auto R = bigalois_group(taft(3, {1, 3}), 3, {Cyclo(0), Cyclo(1), Cyclo(-1)});
    CHECK(R.type == DatumType::I);
    CHECK(R.scalar_factor);
    CHECK(R.gamma.order() == 3);
    CHECK(R.cotensor_checked > 0);
    CHECK(R.all_verified());
}
