#include <random>
#include <set>

#include "doctest.h"
#include "mh/linalg.hpp"

using namespace mh;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
    IntMatrix A((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) A(i, j) = rows[i][j];
    return A;
}

void check_snf(const IntMatrix& A) {
    auto f = smith_normal_form(A);
    CHECK(f.U * A * f.V == f.D);
    CHECK(f.U * f.Uinv == IntMatrix::identity(A.rows));
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    for (int i = 0; i < f.D.rows; ++i)
        for (int j = 0; j < f.D.cols; ++j)
            if (i != j) CHECK(f.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < f.diag.size(); ++i) {
        if (f.diag[i] == 0) CHECK(f.diag[i + 1] == 0);
        else CHECK(f.diag[i + 1] % f.diag[i] == 0);
    }
}

// all x in (Z/M)^n with A x = b
std::vector<std::vector<i64>> brute_solutions(const std::vector<std::vector<i64>>& A, int n,
                                              const std::vector<i64>& b, i64 M) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> x(n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t r = 0; r < A.size() && ok; ++r) {
            i64 s = 0;
            for (int j = 0; j < n; ++j) s += A[r][j] * x[j];
            ok = mod(s - b[r], M) == 0;
        }
        if (ok) out.push_back(x);
        int p = n - 1;
        while (p >= 0 && ++x[p] == M) x[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

std::set<std::vector<i64>> span_mod(const std::vector<std::vector<i64>>& gens, int n, i64 M) {
    std::set<std::vector<i64>> S{std::vector<i64>(n, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        auto cur = S;
        for (const auto& s : cur)
            for (const auto& g : gens) {
                std::vector<i64> t(n);
                for (int i = 0; i < n; ++i) t[i] = mod(s[i] + g[i], M);
                if (S.insert(t).second) grew = true;
            }
    }
    return S;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.diag == std::vector<mpz_class>{0, 0});
    auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.diag == std::vector<mpz_class>{1, 1, 1});
    auto f = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(f.diag == std::vector<mpz_class>{1, 6});
    check_snf(mat({{2, 0}, {0, 3}}));
    check_snf(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    auto g = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(g.diag == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("smith normal form random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix A(r, c);
        for (auto& x : A.a) x = (long)(rng() % 13) - 6;
        check_snf(A);
    }
}

TEST_CASE("invariant factors of products of cyclic groups") {
    CHECK(invariant_factors({2, 3}) == std::vector<i64>{6});
    CHECK(invariant_factors({2, 4}) == std::vector<i64>{2, 4});
    CHECK(invariant_factors({1, 1}).empty());
    CHECK(invariant_factors({4, 6, 1}) == std::vector<i64>{2, 12});
}

TEST_CASE("solve_linear_mod examples") {
    auto s0 = solve_linear_mod({{0, 0}}, 2, {0}, 5);
    REQUIRE(s0);
    CHECK(s0->x == std::vector<i64>{0, 0});
    CHECK(span_mod(s0->kernel, 2, 5).size() == 25);
    CHECK_FALSE(solve_linear_mod({{2}}, 1, {1}, 4));
    auto s = solve_linear_mod({{2}}, 1, {2}, 4);
    REQUIRE(s);
    CHECK(mod(2 * s->x[0], 4) == 2);
    CHECK(span_mod(s->kernel, 1, 4) == std::set<std::vector<i64>>{{0}, {2}});
}

TEST_CASE("solve_linear_mod agrees with exhaustive search") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        i64 M = 2 + rng() % 11;
        int n = 1 + rng() % 3, r = 1 + rng() % 3;
        if (n * std::log2((double)M) > 12) n = 2;
        std::vector<std::vector<i64>> A(r, std::vector<i64>(n));
        for (auto& row : A)
            for (auto& x : row) x = rng() % M;
        std::vector<i64> b(r);
        for (auto& x : b) x = rng() % M;
        if (trial % 2 == 0) {
            // force a solvable system half of the time
            std::vector<i64> x0(n);
            for (auto& x : x0) x = rng() % M;
            for (int i = 0; i < r; ++i) {
                i64 s = 0;
                for (int j = 0; j < n; ++j) s += A[i][j] * x0[j];
                b[i] = mod(s, M);
            }
        }
        auto brute = brute_solutions(A, n, b, M);
        auto sol = solve_linear_mod(A, n, b, M);
        CHECK(sol.has_value() == !brute.empty());
        if (!sol) continue;
        auto hom = brute_solutions(A, n, std::vector<i64>(r, 0), M);
        auto K = span_mod(sol->kernel, n, M);
        CHECK(K == std::set<std::vector<i64>>(hom.begin(), hom.end()));
        std::set<std::vector<i64>> all;
        for (const auto& k : K) {
            std::vector<i64> t(n);
            for (int i = 0; i < n; ++i) t[i] = mod(sol->x[i] + k[i], M);
            all.insert(t);
        }
        CHECK(all == std::set<std::vector<i64>>(brute.begin(), brute.end()));
    }
}

TEST_CASE("ModSolver kernel coordinates") {
    ModSolver s({{2, 4, 6}, {1, 1, 0}}, 3, 8);
    i64 ord = 1;
    for (auto o : s.kernel_orders()) ord *= o;
    auto hom = brute_solutions({{2, 4, 6}, {1, 1, 0}}, 3, {0, 0}, 8);
    CHECK(ord == (i64)hom.size());
    for (const auto& x : hom) {
        auto w = s.kernel_coords(x);
        std::vector<i64> back(3, 0);
        for (std::size_t t = 0; t < w.size(); ++t)
            for (int i = 0; i < 3; ++i) back[i] = mod(back[i] + w[t] * s.kernel_basis()[t][i], 8);
        CHECK(back == x);
    }
}

TEST_CASE("subquotient examples") {
    auto triv = subquotient_invariants(4, 1, {{1}}, {{1}});
    CHECK(triv.invariants().empty());
    auto q = subquotient_invariants(2, 2, {{1, 0}, {0, 1}}, {{1, 1}});
    CHECK(q.invariants() == std::vector<i64>{2});
    CHECK(q.canonicalize({1, 0}) == q.canonicalize({0, 1}));
    CHECK(q.canonicalize({1, 1}) == q.canonicalize({0, 0}));
    CHECK(q.canonicalize({1, 0}) != q.canonicalize({0, 0}));
    auto h = subquotient_invariants(4, 1, {{1}}, {{2}});
    CHECK(h.invariants() == std::vector<i64>{2});
    CHECK_THROWS(subquotient_invariants(4, 1, {{2}}, {{1}}));
}

TEST_CASE("subquotient agrees with coset enumeration") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        i64 M = 2 + rng() % 7;
        int n = 1 + rng() % 3;
        std::vector<std::vector<i64>> Z(1 + rng() % 3, std::vector<i64>(n)), B;
        for (auto& z : Z)
            for (auto& x : z) x = rng() % M;
        // B: random combinations of Z
        for (int k = 0; k < (int)(rng() % 3); ++k) {
            std::vector<i64> b(n, 0);
            for (const auto& z : Z) {
                i64 c = rng() % M;
                for (int i = 0; i < n; ++i) b[i] = mod(b[i] + c * z[i], M);
            }
            B.push_back(b);
        }
        auto S = subquotient_invariants(M, n, Z, B);
        auto Zs = span_mod(Z, n, M), Bs = span_mod(B, n, M);
        CHECK(S.order() == mpz_class((long)(Zs.size() / Bs.size())));
        // canonicalizer: equal iff same coset
        std::vector<std::vector<i64>> zl(Zs.begin(), Zs.end());
        for (std::size_t i = 0; i < zl.size(); ++i)
            for (std::size_t j = 0; j < zl.size(); j += 3) {
                std::vector<i64> d(n);
                for (int t = 0; t < n; ++t) d[t] = mod(zl[i][t] - zl[j][t], M);
                CHECK((S.canonicalize(zl[i]) == S.canonicalize(zl[j])) == (Bs.count(d) > 0));
            }
        for (const auto& c : S.all_coords()) CHECK(S.canonicalize(S.lift(c)) == c);
    }
}

TEST_CASE("cyclotomic arithmetic") {
    CHECK(Cyclo::root(4, 1) * Cyclo::root(4, 1) == Cyclo(-1));
    CHECK((Cyclo(1) + Cyclo::root(3, 1) + Cyclo::root(3, 2)).is_zero());
    CHECK(Cyclo::root(7, 1).inverse() == Cyclo::root(7, 6));
    CHECK(Cyclo::root(12, 3) == Cyclo::root(4, 1));
    CHECK(Cyclo::root(2, 1) == Cyclo(-1));
    CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
    CHECK(Cyclo::parse("-z^3", 8) == -Cyclo::root(8, 3));
    CHECK(Cyclo::parse("3/4", 5) == Cyclo::rational(mpq_class(3, 4)));
    CHECK(Cyclo::root(8, 3).root_exponent(8) == std::optional<i64>(3));
    CHECK(Cyclo(-1).root_exponent(4) == std::optional<i64>(2));
    CHECK_FALSE(Cyclo(2).root_exponent(4));
    CHECK_THROWS(Cyclo().inverse());

    std::mt19937 rng(3);
    for (int M : {1, 3, 4, 5, 8, 12}) {
        auto rnd = [&]() {
            Cyclo x;
            for (int i = 0; i < M; ++i)
                x += Cyclo::root(M, i) * Cyclo::rational(mpq_class((long)(rng() % 7) - 3, 1 + rng() % 3));
            return x;
        };
        for (int t = 0; t < 20; ++t) {
            Cyclo a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
            i64 e1 = rng() % 30, e2 = rng() % 30;
            CHECK(Cyclo::root(M, e1) * Cyclo::root(M, e2) == Cyclo::root(M, e1 + e2));
        }
    }
}

TEST_CASE("cyclotomic rank") {
    CycloMatrix I(3, std::vector<Cyclo>(3));
    for (int i = 0; i < 3; ++i) I[i][i] = Cyclo(1);
    CHECK(is_invertible(I));
    I[1] = std::vector<Cyclo>(3);
    CHECK_FALSE(is_invertible(I));
    Cyclo z = Cyclo::root(4, 1);
    CHECK(is_invertible({{z, Cyclo()}, {Cyclo(), Cyclo(1) - z}}));
    // rank-1 matrix over Q(zeta_3)
    Cyclo w = Cyclo::root(3, 1);
    CHECK(matrix_rank_cyclo({{Cyclo(1), w}, {w, w * w}}) == 1);
    CHECK(matrix_rank_cyclo({{Cyclo(1), w, Cyclo(2)}, {w, w * w, Cyclo(1)}}) == 2);
    auto ns = nullspace_cyclo({{Cyclo(1), w}}, 2);
    REQUIRE(ns.size() == 1);
    CHECK((ns[0][0] + w * ns[0][1]).is_zero());
}
