#include "doctest.h"
#include "mh/galois.hpp"
#include "mh/special.hpp"

using namespace mh;

namespace {

std::vector<Cyclo> samples(i64 M) {
    std::vector<Cyclo> s{Cyclo(0), Cyclo(1), Cyclo(-1)};
    if (M > 2) s.push_back(Cyclo::root((int)M, 1));
    return s;
}

int count_branch(const GaloisEnumeration& E, const std::string& b) {
    int c = 0;
    for (const auto& r : E.reps)
        if (r.branch == b) ++c;
    return c;
}

}  // namespace

TEST_CASE("Sweedler: two classes times the sampled scalar") {
    auto E = enumerate_galois(taft(2, {1, 2}), 2, {Cyclo(0), Cyclo(1)});
    CHECK(E.type == DatumType::I);
    CHECK(E.branches.size() == 1);
    CHECK(E.branches[0].H.order() == 2);
    CHECK(E.reps.size() == 4);
    CHECK(E.all_verified());
    CHECK(E.exact_kappa_count() == 4);
}

TEST_CASE("type II cyclic datum: a single a = 0 branch with |H^2(C4, mu_4)| classes") {
    auto E = enumerate_galois(realize(make_cyclic_datum(2, 2, 4, 1, {1, 4})), 4, samples(4));
    CHECK(E.type == DatumType::II);
    CHECK(E.branches.size() == 1);
    CHECK(E.reps.size() == 4);
    CHECK(E.all_verified());
}

TEST_CASE("type III simple-pointed base: two branches") {
    auto E = enumerate_galois(simple_pointed({1, 4}, 0, 2, 4), 4, samples(4));
    CHECK(E.type == DatumType::III);
    REQUIRE(E.branches.size() == 2);
    CHECK(count_branch(E, "a=0") == 4);
    // Z/4 x Z/gcd(4, Nd/n = 2)
    CHECK(E.branches[1].H.invariant_factors() == std::vector<i64>{2, 4});
    CHECK(count_branch(E, "a!=0") == 8);
    CHECK(E.all_verified());
}

TEST_CASE("type VI goes through the reduced datum and its bridge") {
    auto D = simple_pointed({1, 4}, 1, 2, 4);
    auto E = enumerate_galois(D, 4, samples(4));
    CHECK(E.type == DatumType::VI);
    REQUIRE(E.bridge.has_value());
    CHECK(E.bridge->right.ok());
    CHECK(E.bridge->left.ok());
    CHECK(E.bridge->bicomodule);
    CHECK(E.branches.size() == 2);
    CHECK(E.all_verified());
    CHECK(homotopy_classes(D, 4).order() == homotopy_classes(reduce_type_vi(D), 4).order());
}

TEST_CASE("galois_isomorphic witnesses") {
    auto D = taft(2, {1, 2});
    auto H = build_hopf_algebra(D);
    auto H2 = CohomologyGroup::compute(D.G, 0, 0, 4);
    auto s = H2.representative(H2.all_classes().back());
    auto w = galois_isomorphic(H, s, 1, s, 1);
    REQUIRE(w.has_value());
    CHECK(w->verified);
    for (auto m : w->mu) CHECK(m == 0);
    // sigma vs d(mu) sigma
    auto t = s + coboundary(*D.G, {0, 1}, 4);
    auto w2 = galois_isomorphic(H, t, 1, s, 1);
    REQUIRE(w2.has_value());
    CHECK(w2->verified);
    // distinct classes
    auto s0 = H2.representative(H2.all_classes().front());
    CHECK_FALSE(galois_isomorphic(H, s0, 1, s, 1).has_value());
    CHECK(homotopy_classes(D, 2).order() == 2);
    CHECK(homotopy_classes(taft(3, {1, 3}), 2).order() == 1);
}

TEST_CASE("brute force forces lambda = 0 and separates the Sweedler classes") {
    auto D = taft(2, {1, 2});
    auto H = build_hopf_algebra(D);
    auto E = enumerate_galois(D, 2, samples(2));
    for (const auto& r1 : E.reps)
        for (const auto& r2 : E.reps) {
            auto bf = brute_force_colinear_iso(H, r1.sigma, r1.a, r2.sigma, r2.a, samples(2));
            auto cr = galois_isomorphic(H, r1.sigma, r1.a, r2.sigma, r2.a);
            CHECK(bf.has_value() == cr.has_value());
            if (bf) CHECK(bf->lambda.is_zero());
            bool same = r1.coords == r2.coords && r1.a == r2.a;
            CHECK(bf.has_value() == same);
        }
}

TEST_CASE("enumeration completeness for |G| d <= 8") {
    struct Case {
        GroupDatum D;
        i64 M;
    };
    std::vector<Case> cases{{taft(2, {1, 2}), 2},
                            {taft(2, {1, 2}), 4},
                            {realize(make_cyclic_datum(2, 2, 4, 1, {1, 4})), 2},
                            {simple_pointed({1, 4}, 0, 2, 4), 2},
                            {simple_pointed({1, 4}, 0, 2, 4), 4},
                            {generalized_taft(2, 1, {1, 2}), 2}};
    for (const auto& c : cases) {
        auto E = enumerate_galois(c.D, c.M, samples(c.M));
        REQUIRE(E.all_verified());
        auto H = build_hopf_algebra(c.D);
        auto H2 = CohomologyGroup::compute(c.D.G, 0, 0, c.M);
        for (const auto& cls : H2.all_classes()) {
            auto s = H2.representative(cls);
            for (const auto& a : samples(c.M)) {
                if (!galois_condition(c.D, s, a)) continue;
                int hits = 0;
                for (const auto& r : E.reps) {
                    auto cr = galois_isomorphic(H, s, a, r.sigma, r.a, false);
                    auto bf = brute_force_colinear_iso(H, s, a, r.sigma, r.a, {Cyclo(0), Cyclo(1)});
                    CHECK(cr.has_value() == bf.has_value());
                    if (cr) ++hits;
                }
                CHECK_MESSAGE(hits == 1, "type " << type_name(E.type) << " M=" << c.M << " a=" << a.str());
            }
        }
    }
}
