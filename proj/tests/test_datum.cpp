#include "doctest.h"
#include "mh/datum.hpp"
#include "mh/special.hpp"

using namespace mh;

namespace {

GroupPtr grp(std::vector<i64> f) { return std::make_shared<const FiniteGroup>(FiniteGroup::from_factors(f)); }

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const DatumError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("datum validation names the failing invariant") {
    auto D = taft(4, {1, 4});
    CHECK(D.d == 4);
    CHECK(D.n == 4);
    CHECK(D.m == 4);
    auto G = grp({4});
    CHECK(error_of([&] { make_datum(G, 1, Character::from_generators(*G, 4, {0}), 0); }).find("chi(g)") == 0);
    CHECK(error_of([&] { make_datum(G, 7, Character::from_generators(*G, 4, {1}), 0); }).find("g:") == 0);
    // mu != 0 with d = n
    CHECK(error_of([&] { make_datum(G, 1, Character::from_generators(*G, 4, {1}), 1); }).find("mu = 0") == 0);
    // mu != 0 with chi^d != 1: C8, g = z^2, chi(z) = i gives chi(g) = -1, d = 2, chi^2 != 1
    auto G8 = grp({8});
    CHECK(error_of([&] { make_datum(G8, 2, Character::from_generators(*G8, 4, {1}), 1); }).find("mu != 0") == 0);
}

TEST_CASE("named data have the expected types") {
    CHECK(classify_type(taft(2, {1, 2})).type == DatumType::I);
    CHECK(classify_type(taft(3, {1, 3})).type == DatumType::I);
    CHECK(classify_type(generalized_taft(2, 1, {1, 2})).type == DatumType::I);
    CHECK(classify_type(simple_pointed({1, 4}, 0, 2, 4)).type == DatumType::III);
    auto vi = simple_pointed({1, 4}, 1, 2, 4);
    CHECK(classify_type(vi).type == DatumType::VI);
    CHECK(classify_type(reduce_type_vi(vi)).type == DatumType::III);
    CHECK_THROWS_AS(taft(4, {1, 2}), DatumError);
    CHECK_THROWS_AS(make_cyclic_datum(2, 4, 8, 2, {1, 4}), DatumError);  // gcd(alpha, d) != 1
}

TEST_CASE("cyclic type table agrees with classify_type for N <= 12") {
    int count = 0;
    for (i64 N = 2; N <= 12; ++N)
        for (i64 n : divisors(N))
            for (i64 d : divisors(n)) {
                if (n <= 1 || d <= 1) continue;
                for (i64 alpha : divisors(N / n)) {
                    if (gcd(alpha, d) != 1) continue;
                    i64 oq = N * d / (alpha * n);
                    for (i64 e = 1; e < oq; ++e) {
                        if (gcd(e, oq) != 1) continue;
                        auto c = make_cyclic_datum(d, n, N, alpha, {e, oq});
                        auto D = realize(c);
                        CHECK(classify_type(D).type == cyclic_type_from_table(c));
                        auto back = cyclic_normal_form(D);
                        CHECK(back.alpha == alpha);
                        CHECK(datum_isomorphic(D, realize(back)).has_value());
                        ++count;
                    }
                }
            }
    CHECK(count > 100);
}

TEST_CASE("a C6 datum with g of order 3 has a cyclic normal form") {
    auto G = grp({6});
    auto D = make_datum(G, 2, Character::from_generators(*G, 6, {1}), 0);
    auto c = cyclic_normal_form(D);
    CHECK(c.n == 3);
    CHECK(c.N == 6);
    CHECK(datum_isomorphic(D, realize(c)).has_value());
}

TEST_CASE("unit subgroups") {
    CHECK(unit_subgroup(12, {4}) == std::vector<i64>{1, 5});
    CHECK(unit_subgroup(7, {7}) == std::vector<i64>{1});
    CHECK(unit_subgroup(1, {}) == std::vector<i64>{1});
    CHECK(unit_subgroup(9, {}).size() == 6);
    CHECK_THROWS(unit_subgroup(12, {5}));
}

TEST_CASE("type V detection and reduction on C4 x C4") {
    // g = (1,0), chi(g) = -1, chi(h) = i^{-1}: chi^2 nontrivial, g^2 != 1
    auto G = grp({4, 4});
    const auto& v = *G->abelian();
    auto D = make_datum(G, v.gens[0], Character::from_generators(*G, 4, {2, 3}), 0);
    auto t = classify_type(D);
    REQUIRE(t.type == DatumType::V);
    REQUIRE(t.witness.has_value());
    CHECK(is_symmetric_extension_witness(D, *t.witness));
    auto R = reduce_type_v(D, *t.witness);
    CHECK(classify_type(R).type == DatumType::III);
}

TEST_CASE("type IV on C16 x C4 with g = x^2") {
    auto G = grp({16, 4});
    const auto& v = *G->abelian();
    int g = G->pow(v.gens[0], 2);
    auto D = make_datum(G, g, Character::from_generators(*G, 4, {1, 0}), 0);
    CHECK(D.d == 2);
    CHECK(D.n == 8);
    CHECK(D.m == 4);
    CHECK(classify_type(D).type == DatumType::IV);
}

TEST_CASE("nonabelian classification uses the cochain search") {
    // modular group of order 16: r^8 = s^2 = 1, s r s^{-1} = r^5; element r^i s^j has index i + 8j
    std::vector<std::vector<int>> T(16, std::vector<int>(16));
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            int i = a % 8, j = a / 8, k = b % 8, l = b / 8;
            T[a][b] = (i + k * (j ? 5 : 1)) % 8 + 8 * ((j + l) % 2);
        }
    GroupPtr G = std::make_shared<const FiniteGroup>(FiniteGroup::from_cayley(T));
    REQUIRE(!G->is_abelian());
    REQUIRE(G->is_central(2));
    std::vector<i64> ex(16);
    for (int a = 0; a < 16; ++a) ex[a] = (a % 8) % 4;
    Character chi{4, ex};
    REQUIRE(chi.is_valid(*G));
    auto D = make_datum(G, 2, chi, 0);  // g = r^2, chi(g) = -1
    CHECK(D.d == 2);
    CHECK(D.n == 4);
    auto t = classify_type(D);
    CHECK(t.search_engine == "cochain");
    CHECK((t.type == DatumType::IV || t.type == DatumType::V));
    if (t.witness) CHECK(is_symmetric_extension_witness(D, *t.witness));
    MESSAGE("modular group datum classified as type " << type_name(t.type));
    CHECK_THROWS_AS(make_datum(G, 1, chi, 0), DatumError);  // r is not central
}
