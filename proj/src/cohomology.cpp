#include "mh/cohomology.hpp"

#include <stdexcept>

namespace mh {

Cocycle Cocycle::trivial(int n, i64 M) {
    Cocycle s;
    s.n = n;
    s.M = M;
    s.c.assign((std::size_t)n * n, 0);
    return s;
}

Cocycle Cocycle::operator+(const Cocycle& o) const {
    if (n != o.n || M != o.M) throw std::invalid_argument("cocycle shape mismatch");
    Cocycle r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = mod(c[i] + o.c[i], M);
    return r;
}

Cocycle Cocycle::operator-() const {
    Cocycle r = *this;
    for (auto& x : r.c) x = mod(-x, M);
    return r;
}

Cocycle Cocycle::operator-(const Cocycle& o) const { return *this + (-o); }

Cocycle Cocycle::scaled(i64 k) const {
    Cocycle r = *this;
    for (auto& x : r.c) x = mod(x * k, M);
    return r;
}

Cocycle Cocycle::lifted(i64 L) const {
    if (L % M != 0) throw std::invalid_argument("cocycle lift: modulus must divide target");
    Cocycle r = *this;
    r.M = L;
    for (auto& x : r.c) x *= L / M;
    return r;
}

std::vector<i64> Cocycle::to_vector() const {
    std::vector<i64> v;
    v.reserve((std::size_t)(n - 1) * (n - 1));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) v.push_back((*this)(a, b));
    return v;
}

Cocycle Cocycle::from_vector(int n, i64 M, const std::vector<i64>& v) {
    Cocycle s = trivial(n, M);
    std::size_t k = 0;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) s.at(a, b) = mod(v[k++], M);
    return s;
}

bool is_normalized(const Cocycle& s) {
    for (int a = 0; a < s.n; ++a)
        if (s(0, a) != 0 || s(a, 0) != 0) return false;
    return true;
}

bool is_cocycle(const FiniteGroup& G, const Cocycle& s) {
    int n = G.order();
    if (s.n != n) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.mul(a, b);
            for (int x = 0; x < n; ++x)
                if (mod(s(a, b) + s(ab, x) - s(b, x) - s(a, G.mul(b, x)), s.M) != 0) return false;
        }
    return true;
}

Cocycle coboundary(const FiniteGroup& G, const std::vector<i64>& mu, i64 M) {
    int n = G.order();
    if ((int)mu.size() != n || mod(mu[0], M) != 0) throw std::invalid_argument("coboundary: need mu(1) = 1");
    Cocycle s = Cocycle::trivial(n, M);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.at(a, b) = mod(mu[a] + mu[b] - mu[G.mul(a, b)], M);
    return s;
}

Cocycle pullback(const Cocycle& s, const std::vector<int>& u) {
    Cocycle r = s;
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b) r.at(a, b) = s(u[a], u[b]);
    return r;
}

i64 pairing(const Cocycle& s, int a, int h) { return mod(s(a, h) - s(h, a), s.M); }

i64 epsilon_sum(const FiniteGroup& G, const Cocycle& s, int g, i64 count) {
    i64 acc = 0;
    int gi = g;
    for (i64 i = 1; i < count; ++i) {
        acc += s(g, gi);
        gi = G.mul(gi, g);
    }
    return mod(acc, s.M);
}

// ------------------------------------------------------------ H^2 engines

std::vector<i64> CohomologyGroup::invariant_factors(const std::vector<i64>& o) { return mh::invariant_factors(o); }

i64 CohomologyGroup::order() const {
    i64 r = 1;
    for (auto x : orders_) r *= x;
    return r;
}

std::vector<std::vector<i64>> cocycle_equations(const FiniteGroup& G, i64 M) {
    int n = G.order(), m = n - 1, nv = m * m;
    auto var = [&](int a, int b) { return (a - 1) * m + (b - 1); };
    std::vector<std::vector<i64>> eqs;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int x = 1; x < n; ++x) {
                std::vector<i64> row(nv, 0);
                int ab = G.mul(a, b), bx = G.mul(b, x);
                row[var(a, b)] += 1;
                if (ab != 0) row[var(ab, x)] += 1;
                row[var(b, x)] -= 1;
                if (bx != 0) row[var(a, bx)] -= 1;
                bool nz = false;
                for (auto v : row)
                    if (mod(v, M)) { nz = true; break; }
                if (nz) eqs.push_back(std::move(row));
            }
    return eqs;
}

CohomologyGroup CohomologyGroup::compute(GroupPtr Gp, int g1, int g2, i64 M, const std::string& engine) {
    const FiniteGroup& G = *Gp;
    int n = G.order();
    if (M < 2) throw std::invalid_argument("cohomology modulus must be at least 2");
    if (!G.is_central(g1) || !G.is_central(g2)) throw std::invalid_argument("cohomology: basepoints must be central");
    CohomologyGroup H;
    H.G_ = Gp;
    H.M_ = M;
    H.g1_ = g1;
    H.g2_ = g2;
    std::string eng = engine;
    if (eng == "auto") {
        if (n <= kDenseCohomologyCap) eng = "dense";
        else if (G.abelian() && g1 == 0 && g2 == 0) eng = "structured";
        else
            throw CapError("cohomology: |G| = " + std::to_string(n) + " exceeds the dense cap " +
                           std::to_string(kDenseCohomologyCap) + " and no structured path applies");
    }
    H.engine_ = eng;
    if (eng == "dense") {
        if (n > 2 * kDenseCohomologyCap) throw CapError("cohomology: group too large for the dense engine");
        int m = n - 1;
        int nv = m * m;
        auto var = [&](int a, int b) { return (a - 1) * m + (b - 1); };
        auto eqs = cocycle_equations(G, M);
        if (g1 != 0)
            for (int h = 1; h < n; ++h) {
                if (h == g1) continue;
                std::vector<i64> row(nv, 0);
                row[var(g1, h)] += 1;
                row[var(h, g1)] -= 1;
                eqs.push_back(std::move(row));
            }
        ModSolver Z(eqs, nv, M);
        std::vector<std::vector<i64>> Bg;
        for (int t = 1; t < n; ++t) {
            if (t == g2) continue;
            std::vector<i64> mu(n, 0);
            mu[t] = 1;
            Bg.push_back(coboundary(G, mu, M).to_vector());
        }
        H.dense_ = std::make_shared<AbelianGroupStructure>(M, nv, Z.kernel(), Bg);
        H.orders_ = H.dense_->invariants();
    } else if (eng == "structured") {
        if (!G.abelian() || g1 != 0 || g2 != 0)
            throw std::invalid_argument("structured engine covers H^2 of abelian groups only");
        const auto& f = G.abelian()->factors;
        int r = (int)f.size();
        for (int i = 0; i < r; ++i) {
            i64 o = gcd(f[i], M);
            if (o > 1) {
                H.slots_.push_back({0, i, i, 1});
                H.orders_.push_back(o);
            }
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < i; ++j) {
                i64 o = gcd(gcd(f[i], f[j]), M);
                if (o > 1) {
                    H.slots_.push_back({1, i, j, M / o});
                    H.orders_.push_back(o);
                }
            }
    } else {
        throw std::invalid_argument("unknown cohomology engine: " + eng);
    }
    return H;
}

bool CohomologyGroup::contains(const Cocycle& s0) const {
    if (s0.n != G_->order() || M_ % s0.M != 0) return false;
    Cocycle s = s0.M == M_ ? s0 : s0.lifted(M_);
    if (!is_normalized(s) || !is_cocycle(*G_, s)) return false;
    for (int h = 0; h < G_->order(); ++h)
        if (pairing(s, g1_, h) != 0) return false;
    return true;
}

std::vector<i64> CohomologyGroup::canonicalize(const Cocycle& s0) const {
    if (s0.n != G_->order() || M_ % s0.M != 0) throw std::invalid_argument("canonicalize: cocycle shape mismatch");
    Cocycle s = s0.M == M_ ? s0 : s0.lifted(M_);
    if (dense_) return dense_->canonicalize(s.to_vector());
    const auto& v = *G_->abelian();
    std::vector<i64> out;
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        const auto& sl = slots_[k];
        if (sl.kind == 0) {
            int e = v.gens[sl.i];
            i64 acc = 0;
            int ek = 0;
            for (i64 t = 0; t < v.factors[sl.i]; ++t) {
                acc += s(e, ek);
                ek = G_->mul(ek, e);
            }
            out.push_back(mod(acc, orders_[k]));
        } else {
            i64 B = pairing(s, v.gens[sl.j], v.gens[sl.i]);
            if (B % sl.scale != 0) throw std::logic_error("pairing value outside the expected subgroup");
            out.push_back(mod(B / sl.scale, orders_[k]));
        }
    }
    return out;
}

Cocycle CohomologyGroup::representative(const std::vector<i64>& coords) const {
    if (coords.size() != orders_.size()) throw std::invalid_argument("representative: coordinate length mismatch");
    int n = G_->order();
    if (dense_) return Cocycle::from_vector(n, M_, dense_->lift(coords));
    const auto& f = G_->abelian()->factors;
    std::vector<i64> a(f.size(), 0);
    std::vector<std::vector<i64>> b(f.size(), std::vector<i64>(f.size(), 0));
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        const auto& sl = slots_[k];
        i64 w = mod(coords[k], orders_[k]);
        if (sl.kind == 0) a[sl.i] = w;
        else b[sl.i][sl.j] = w * sl.scale;
    }
    return abelian_cocycle_assemble(*G_, M_, a, b);
}

std::vector<std::vector<i64>> CohomologyGroup::all_classes() const {
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur(orders_.size(), 0);
    for (;;) {
        out.push_back(cur);
        int p = (int)cur.size() - 1;
        while (p >= 0 && ++cur[p] == orders_[p]) cur[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

std::vector<i64> CohomologyGroup::add(const std::vector<i64>& x, const std::vector<i64>& y) const {
    std::vector<i64> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i] + y[i], orders_[i]);
    return r;
}

std::vector<i64> CohomologyGroup::neg(const std::vector<i64>& x) const {
    std::vector<i64> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(-x[i], orders_[i]);
    return r;
}

Cocycle abelian_cocycle_assemble(const FiniteGroup& G, i64 M, const std::vector<i64>& a,
                                 const std::vector<std::vector<i64>>& b) {
    if (!G.abelian()) throw std::invalid_argument("assembly needs an abelian group");
    const auto& v = *G.abelian();
    std::size_t r = v.factors.size();
    if (a.size() != r || b.size() != r) throw std::invalid_argument("assembly: parameter shape mismatch");
    for (std::size_t i = 0; i < r; ++i) {
        if (b[i].size() != r) throw std::invalid_argument("assembly: bicharacter matrix is not square");
        for (std::size_t j = 0; j < r; ++j) {
            if (j >= i && mod(b[i][j], M) != 0)
                throw std::invalid_argument("assembly: bicharacter support must be strictly lower triangular");
            if (j < i && (mod(b[i][j] * v.factors[i], M) != 0 || mod(b[i][j] * v.factors[j], M) != 0))
                throw std::invalid_argument("assembly: bicharacter entry not well defined on the factors");
        }
    }
    int n = G.order();
    Cocycle s = Cocycle::trivial(n, M);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            i64 acc = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (v.exps[x][i] + v.exps[y][i] >= v.factors[i]) acc += a[i];
                for (std::size_t j = 0; j < i; ++j) acc += b[i][j] * v.exps[x][j] * v.exps[y][i];
            }
            s.at(x, y) = mod(acc, M);
        }
    return s;
}

Cocycle cyclic_standard_cocycle(const FiniteGroup& G, int y, i64 a, i64 M) {
    int N = G.order();
    if (G.element_order(y) != N) throw std::invalid_argument("cyclic_standard_cocycle: y does not generate G");
    std::vector<int> log(N);
    int p = 0;
    for (int i = 0; i < N; ++i) {
        log[p] = i;
        p = G.mul(p, y);
    }
    Cocycle s = Cocycle::trivial(N, M);
    for (int u = 0; u < N; ++u)
        for (int w = 0; w < N; ++w) s.at(u, w) = log[u] + log[w] >= N ? mod(a, M) : 0;
    return s;
}

ProductGroup direct_product(const FiniteGroup& G1, const FiniteGroup& G2) {
    int n1 = G1.order(), n2 = G2.order();
    std::vector<std::vector<int>> T(n1 * n2, std::vector<int>(n1 * n2));
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    T[a1 * n2 + a2][b1 * n2 + b2] = G1.mul(a1, b1) * n2 + G2.mul(a2, b2);
    ProductGroup P;
    P.G = std::make_shared<const FiniteGroup>(FiniteGroup::from_cayley(T));
    P.n1 = n1;
    P.n2 = n2;
    return P;
}

YamazakiDecomposition::Parts YamazakiDecomposition::forward(const Cocycle& s) const {
    Cocycle c1 = Cocycle::trivial(n1, M), c2 = Cocycle::trivial(n2, M);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) c1.at(a, b) = s(P.embed1(a), P.embed1(b));
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b) c2.at(a, b) = s(P.embed2(a), P.embed2(b));
    std::vector<i64> B;
    for (int x1 = 1; x1 < n1; ++x1)
        for (int x2 = 1; x2 < n2; ++x2) B.push_back(pairing(s, P.embed1(x1), P.embed2(x2)));
    return {first.canonicalize(c1), second.canonicalize(c2), pairings.canonicalize(B)};
}

Cocycle YamazakiDecomposition::backward(const Parts& p) const {
    Cocycle c1 = first.representative(p.first), c2 = second.representative(p.second);
    auto B = pairings.lift(p.pairing);
    auto Bv = [&](int x1, int x2) -> i64 {
        if (x1 == 0 || x2 == 0) return 0;
        return B[(std::size_t)(x1 - 1) * (n2 - 1) + (x2 - 1)];
    };
    Cocycle s = Cocycle::trivial(n1 * n2, M);
    for (int x1 = 0; x1 < n1; ++x1)
        for (int x2 = 0; x2 < n2; ++x2)
            for (int y1 = 0; y1 < n1; ++y1)
                for (int y2 = 0; y2 < n2; ++y2)
                    s.at(P.pair(x1, x2), P.pair(y1, y2)) = mod(c1(x1, y1) + c2(x2, y2) + Bv(x1, y2), M);
    return s;
}

YamazakiDecomposition yamazaki_decompose(const FiniteGroup& G1, const FiniteGroup& G2, int g, int h, i64 M) {
    YamazakiDecomposition Y;
    Y.P = direct_product(G1, G2);
    Y.n1 = G1.order();
    Y.n2 = G2.order();
    Y.M = M;
    auto G1p = std::make_shared<const FiniteGroup>(G1);
    auto G2p = std::make_shared<const FiniteGroup>(G2);
    Y.whole = CohomologyGroup::compute(Y.P.G, Y.P.embed1(g), Y.P.embed1(h), M);
    Y.first = CohomologyGroup::compute(G1p, g, h, M);
    Y.second = CohomologyGroup::compute(G2p, 0, 0, M);
    // bimultiplicative B: G1 x G2 -> Z/M with B(g, .) = 0
    int m1 = Y.n1 - 1, m2 = Y.n2 - 1, nv = m1 * m2;
    auto var = [&](int x1, int x2) { return (x1 - 1) * m2 + (x2 - 1); };
    std::vector<std::vector<i64>> eqs;
    auto add = [&](std::vector<i64>& row, int x1, int x2, i64 c) {
        if (x1 != 0 && x2 != 0) row[var(x1, x2)] += c;
    };
    for (int x1 = 1; x1 < Y.n1; ++x1)
        for (int y1 = 1; y1 < Y.n1; ++y1)
            for (int x2 = 1; x2 < Y.n2; ++x2) {
                std::vector<i64> row(nv, 0);
                add(row, G1.mul(x1, y1), x2, 1);
                add(row, x1, x2, -1);
                add(row, y1, x2, -1);
                eqs.push_back(row);
            }
    for (int x1 = 1; x1 < Y.n1; ++x1)
        for (int x2 = 1; x2 < Y.n2; ++x2)
            for (int y2 = 1; y2 < Y.n2; ++y2) {
                std::vector<i64> row(nv, 0);
                add(row, x1, G2.mul(x2, y2), 1);
                add(row, x1, x2, -1);
                add(row, x1, y2, -1);
                eqs.push_back(row);
            }
    if (g != 0)
        for (int x2 = 1; x2 < Y.n2; ++x2) {
            std::vector<i64> row(nv, 0);
            add(row, g, x2, 1);
            eqs.push_back(row);
        }
    if (nv == 0) {
        Y.pairings = AbelianGroupStructure(M, 0, {}, {});
    } else {
        ModSolver S(eqs, nv, M);
        Y.pairings = AbelianGroupStructure(M, nv, S.kernel(), {});
    }
    return Y;
}

}  // namespace mh
