// Brute-force reference computations shared by the unit tests and the acceptance binary.
#ifndef MH_TESTS_ORACLES_HPP
#define MH_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mh/cohomology.hpp"
#include "mh/groups.hpp"

namespace oracle {

using mh::i64;

// Cayley table of S3 as permutations of {0,1,2}, identity first.
inline std::vector<std::vector<int>> s3_table() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> T(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            T[a][b] = (int)(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return T;
}

// Cayley table of the dihedral group of order 2k: r^i s^j -> index i + k*j.
inline std::vector<std::vector<int>> dihedral_table(int k) {
    int n = 2 * k;
    std::vector<std::vector<int>> T(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int i1 = a % k, j1 = a / k, i2 = b % k, j2 = b / k;
            int i = j1 ? (i1 - i2 + k) % k : (i1 + i2) % k;
            T[a][b] = i + k * ((j1 + j2) % 2);
        }
    return T;
}

// Number of automorphisms by trying every permutation fixing the identity.
inline int count_automorphisms_by_permutation(const mh::FiniteGroup& G) {
    int n = G.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int cnt = 0;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) ok = p[G.mul(a, b)] == G.mul(p[a], p[b]);
        cnt += ok;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return cnt;
}

// Order profile of a finite abelian group: #{x : t x = 0} for t = 1..exponent.
// Two finite abelian groups are isomorphic iff their profiles agree.
inline std::vector<i64> profile_from_invariants(const std::vector<i64>& inv, i64 upto) {
    std::vector<i64> out;
    for (i64 t = 1; t <= upto; ++t) {
        i64 c = 1;
        for (auto d : inv) c *= std::gcd(t, d);
        out.push_back(c);
    }
    return out;
}


// Exhaustive H^2_{g1,g2}(G, mu_M): every normalized cochain is tested.
struct ExhaustiveH2 {
    std::vector<std::vector<i64>> Z;   // cocycle vectors (entries a,b != 1)
    std::set<std::vector<i64>> B;      // admissible coboundaries
    i64 classes = 0;
    std::vector<i64> profile;          // #{classes x : t x = 0}, t = 1..exponent bound
};

inline std::vector<i64> vec_sub(const std::vector<i64>& a, const std::vector<i64>& b, i64 M) {
    std::vector<i64> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mh::mod(a[i] - b[i], M);
    return r;
}

inline ExhaustiveH2 exhaustive_h2(const mh::FiniteGroup& G, int g1, int g2, i64 M, i64 profile_upto) {
    int n = G.order(), m = n - 1, nv = m * m;
    ExhaustiveH2 out;
    std::vector<i64> v(nv, 0);
    for (;;) {
        auto s = mh::Cocycle::from_vector(n, M, v);
        bool ok = mh::is_cocycle(G, s);
        for (int h = 0; h < n && ok; ++h) ok = mh::pairing(s, g1, h) == 0;
        if (ok) out.Z.push_back(v);
        int p = nv - 1;
        while (p >= 0 && ++v[p] == M) v[p--] = 0;
        if (p < 0) break;
    }
    std::vector<i64> mu(n, 0);
    for (;;) {
        out.B.insert(mh::coboundary(G, mu, M).to_vector());
        int p = n - 1;
        while (p >= 1 && (p == g2 || ++mu[p] == M)) {
            if (p != g2) mu[p] = 0;
            --p;
        }
        if (p < 1) break;
    }
    out.classes = (i64)(out.Z.size() / out.B.size());
    for (i64 t = 1; t <= profile_upto; ++t) {
        i64 cnt = 0;
        for (const auto& z : out.Z) {
            std::vector<i64> tz(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) tz[i] = mh::mod(t * z[i], M);
            cnt += out.B.count(tz);
        }
        out.profile.push_back(cnt / (i64)out.B.size());
    }
    return out;
}

// |H^2(C_N, mu_M)| from the parameterization by the column c(y^i, y), i = 1..N-1.
inline i64 cyclic_h2_order_by_column(int N, i64 M) {
    auto G = mh::FiniteGroup::from_factors({N});
    auto build = [&](const std::vector<i64>& col) {
        // c(a, y^{k+1}) = c(a, y^k) + c(a y^k, y) - c(y^k, y)
        mh::Cocycle s = mh::Cocycle::trivial(N, M);
        auto cy = [&](int a) { return a == 0 ? 0 : col[a - 1]; };
        for (int a = 0; a < N; ++a) s.at(a, 1 % N) = cy(a);
        for (int a = 0; a < N; ++a)
            for (int k = 1; k + 1 < N; ++k) s.at(a, (k + 1) % N) = mh::mod(s(a, k) + cy((a + k) % N) - cy(k), M);
        for (int a = 0; a < N; ++a) s.at(a, 0) = 0;
        return s;
    };
    std::set<std::vector<i64>> Z, B;
    std::vector<i64> col(N - 1, 0);
    for (;;) {
        auto s = build(col);
        if (mh::is_normalized(s) && mh::is_cocycle(G, s)) Z.insert(s.c);
        int p = N - 2;
        while (p >= 0 && ++col[p] == M) col[p--] = 0;
        if (p < 0) break;
    }
    std::vector<i64> mu(N, 0);
    for (;;) {
        B.insert(mh::coboundary(G, mu, M).c);
        int p = N - 1;
        while (p >= 1 && ++mu[p] == M) mu[p--] = 0;
        if (p < 1) break;
    }
    return (i64)(Z.size() / B.size());
}

}  // namespace oracle

#endif
