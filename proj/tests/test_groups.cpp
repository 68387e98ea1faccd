#include "doctest.h"
#include "mh/groups.hpp"
#include "oracles.hpp"

using namespace mh;

TEST_CASE("build_group from factors") {
    auto K = FiniteGroup::from_factors({2, 2});
    CHECK(K.order() == 4);
    CHECK(K.is_abelian());
    for (int x = 1; x < 4; ++x) CHECK(K.element_order(x) == 2);
    auto G = FiniteGroup::from_factors({16, 4});
    CHECK(G.order() == 64);
    CHECK(G.abelian()->factors == std::vector<i64>{16, 4});
    CHECK(G.exponent() == 16);
    auto C6 = FiniteGroup::from_factors({6});
    CHECK(C6.element_order(0) == 1);
    CHECK(C6.element_order(1) == 6);
    // g = z^{N/n} in C_N has order n
    auto C12 = FiniteGroup::from_factors({12});
    CHECK(C12.element_order(C12.pow(1, 12 / 4)) == 4);
}

TEST_CASE("build_group from Cayley tables") {
    auto S3 = FiniteGroup::from_cayley(oracle::s3_table());
    CHECK(S3.order() == 6);
    CHECK_FALSE(S3.is_abelian());
    CHECK_FALSE(S3.abelian().has_value());
    CHECK(S3.is_central(0));
    int transpositions = 0;
    for (int x = 0; x < 6; ++x)
        if (S3.element_order(x) == 2) {
            ++transpositions;
            CHECK_FALSE(S3.is_central(x));
        }
    CHECK(transpositions == 3);

    // abelian structure of a relabelled C4 x C2 via SNF of the relation lattice
    auto A = FiniteGroup::from_factors({4, 2});
    std::vector<int> perm{3, 0, 5, 1, 7, 2, 6, 4};  // identity lands at input index 3
    std::vector<std::vector<int>> T(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) T[perm[a]][perm[b]] = perm[A.mul(a, b)];
    auto B = FiniteGroup::from_cayley(T);
    REQUIRE(B.abelian());
    CHECK(B.abelian()->factors == std::vector<i64>{2, 4});
    CHECK(B.relabel()[3] == 0);

    CHECK_THROWS(FiniteGroup::from_cayley({{0, 1}, {0, 1}}));
    CHECK_THROWS(FiniteGroup::from_cayley({{1, 0}, {0, 0}}));
    // Latin square without associativity
    CHECK_THROWS(FiniteGroup::from_cayley({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}));
}

TEST_CASE("characters") {
    auto G = FiniteGroup::from_factors({4, 2});
    auto chi = Character::from_generators(G, 4, {1, 2});
    CHECK(chi.is_valid(G));
    CHECK(chi.order() == 4);
    CHECK_THROWS(Character::from_generators(G, 4, {1, 1}));
}

TEST_CASE("automorphisms: matrix parameterization vs brute force") {
    for (auto f : std::vector<std::vector<i64>>{{2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {8}, {2, 2, 2}}) {
        auto G = FiniteGroup::from_factors(f);
        auto A = automorphisms_fixing(G, 0);
        CHECK((int)A.size() == oracle::count_automorphisms_by_permutation(G));
        CHECK(A.size() == automorphisms_backtrack(G).size());
        for (auto& u : A) CHECK(is_automorphism(G, u.perm));
    }
    for (auto f : std::vector<std::vector<i64>>{{4, 4}, {16}, {2, 8}, {4, 2, 2}}) {
        auto G = FiniteGroup::from_factors(f);
        CHECK(automorphisms_fixing(G, 0).size() == automorphisms_backtrack(G).size());
    }
    auto S3 = FiniteGroup::from_cayley(oracle::s3_table());
    CHECK(automorphisms_fixing(S3, 0).size() == 6);
    auto D4 = FiniteGroup::from_cayley(oracle::dihedral_table(4));
    CHECK((int)automorphisms_fixing(D4, 0).size() == oracle::count_automorphisms_by_permutation(D4));
}

TEST_CASE("automorphisms fixing g and chi") {
    auto C4 = FiniteGroup::from_factors({4});
    CHECK(automorphisms_fixing(C4, 0).size() == 2);
    auto faithful = Character::from_generators(C4, 4, {1});
    CHECK(automorphisms_fixing(C4, 1, &faithful).size() == 1);
    auto G = FiniteGroup::from_factors({4, 4});
    auto chi = Character::from_generators(G, 4, {1, 0});
    int g = G.abelian()->element({2, 0});
    auto Ag = automorphisms_fixing(G, g);
    auto Agchi = automorphisms_fixing(G, g, &chi);
    CHECK(Agchi.size() < Ag.size());
    for (auto& u : Agchi) CHECK(std::binary_search(Ag.begin(), Ag.end(), u));
    for (auto& u : Ag) {
        CHECK(compose(u, inverse(u)) == identity_automorphism(G));
        CHECK(u(g) == g);
    }
}

TEST_CASE("isomorphisms respecting g and chi") {
    auto G = FiniteGroup::from_factors({4, 2});
    auto chi = Character::from_generators(G, 4, {1, 2});
    int g = G.abelian()->element({2, 0});
    auto isos = isomorphisms(G, G, g, g, &chi, &chi);
    CHECK(!isos.empty());
    CHECK(isomorphisms(G, FiniteGroup::from_factors({8}), 0, 0).empty());
}
