#include "mh/groups.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mh/linalg.hpp"

namespace mh {

int AbelianView::element(const std::vector<i64>& e) const {
    i64 idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx += mod(e[i], factors[i]) * strides[i];
    return element_of_index[idx];
}

int FiniteGroup::pow(int a, i64 k) const {
    k = mod(k, ord_[a]);
    int r = 0;
    for (i64 i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool FiniteGroup::is_central(int e) const {
    for (int h = 0; h < n_; ++h)
        if (mul(e, h) != mul(h, e)) return false;
    return true;
}

i64 FiniteGroup::exponent() const {
    i64 e = 1;
    for (int x = 0; x < n_; ++x) e = lcm(e, ord_[x]);
    return e;
}

std::string FiniteGroup::label(int e) const {
    if (!view_) return std::to_string(e);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < view_->factors.size(); ++i) os << (i ? "," : "") << view_->exps[e][i];
    os << ")";
    return os.str();
}

const std::vector<std::vector<int>> FiniteGroup::cayley() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
    std::vector<char> in(n_, 0);
    std::vector<int> q{0};
    in[0] = 1;
    for (std::size_t k = 0; k < q.size(); ++k)
        for (int s : gens) {
            int y = mul(q[k], s);
            if (!in[y]) {
                in[y] = 1;
                q.push_back(y);
            }
        }
    std::sort(q.begin(), q.end());
    return q;
}

std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    std::vector<int> H{0};
    while ((int)H.size() < n_) {
        int best = -1;
        for (int x = 0; x < n_; ++x) {
            if (std::binary_search(H.begin(), H.end(), x)) continue;
            if (best < 0 || ord_[x] > ord_[best]) best = x;
        }
        gens.push_back(best);
        H = generated(gens);
    }
    return gens;
}

void FiniteGroup::finish() {
    // identity at 0, associativity, inverses
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("group: index 0 is not the identity");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int ab = mul(a, b);
            for (int c = 0; c < n_; ++c)
                if (mul(ab, c) != mul(a, mul(b, c))) throw std::invalid_argument("group: table is not associative");
        }
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) throw std::invalid_argument("group: inverse is not two-sided");
                inv_[a] = b;
            }
    for (int a = 0; a < n_; ++a)
        if (inv_[a] < 0) throw std::invalid_argument("group: missing inverse");
    ord_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        ord_[a] = k;
    }
    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }
}

FiniteGroup FiniteGroup::from_factors(const std::vector<i64>& factors) {
    FiniteGroup G;
    std::vector<i64> f;
    for (auto x : factors) {
        if (x < 1) throw std::invalid_argument("group: factor must be positive");
        if (x > 1) f.push_back(x);
    }
    i64 n = 1;
    for (auto x : f) n *= x;
    if (n > 4096) throw CapError("group order exceeds 4096");
    G.n_ = (int)n;
    AbelianView v;
    v.factors = f;
    v.strides.assign(f.size(), 1);
    for (int i = (int)f.size() - 2; i >= 0; --i) v.strides[i] = v.strides[i + 1] * f[i + 1];
    v.exps.assign(n, std::vector<i64>(f.size(), 0));
    for (i64 x = 0; x < n; ++x)
        for (std::size_t i = 0; i < f.size(); ++i) v.exps[x][i] = (x / v.strides[i]) % f[i];
    v.element_of_index.resize(n);
    for (i64 x = 0; x < n; ++x) v.element_of_index[x] = (int)x;
    for (std::size_t i = 0; i < f.size(); ++i) v.gens.push_back((int)v.strides[i]);
    G.mul_.resize((std::size_t)n * n);
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b) {
            i64 idx = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                idx += ((v.exps[a][i] + v.exps[b][i]) % f[i]) * v.strides[i];
            G.mul_[a * n + b] = (int)idx;
        }
    G.relabel_.resize(n);
    for (i64 x = 0; x < n; ++x) G.relabel_[x] = (int)x;
    if (n <= 64) {
        G.finish();
    } else {
        // direct product of cyclic groups: skip the cubic associativity scan
        G.inv_.resize(n);
        G.ord_.resize(n);
        for (i64 a = 0; a < n; ++a) {
            std::vector<i64> e(f.size());
            i64 o = 1;
            for (std::size_t i = 0; i < f.size(); ++i) {
                e[i] = mod(-v.exps[a][i], f[i]);
                o = lcm(o, f[i] / gcd(v.exps[a][i], f[i]));
            }
            G.inv_[a] = v.element(e);
            G.ord_[a] = (int)o;
        }
        G.abelian_ = true;
    }
    G.view_ = std::move(v);
    return G;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& T) {
    int n = (int)T.size();
    if (n == 0) throw std::invalid_argument("group: empty table");
    if (n > 4096) throw CapError("group order exceeds 4096");
    for (const auto& row : T) {
        if ((int)row.size() != n) throw std::invalid_argument("group: table is not square");
        std::vector<char> seen(n, 0);
        for (int x : row) {
            if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("group: table is not a Latin square");
            seen[x] = 1;
        }
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = T[a][b] == b && T[b][a] == b;
        if (ok) e = a;
    }
    if (e < 0) throw std::invalid_argument("group: no identity element");
    std::vector<int> rl(n);
    for (int x = 0; x < n; ++x) rl[x] = x;
    std::swap(rl[0], rl[e]);  // rl: input -> internal (a transposition, so self-inverse)
    FiniteGroup G;
    G.n_ = n;
    G.mul_.resize((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.mul_[(std::size_t)rl[a] * n + rl[b]] = rl[T[a][b]];
    G.relabel_ = rl;
    G.finish();
    if (G.abelian_) {
        // Z^n / <e_x + e_s - e_{xs}> via Smith normal form
        auto S = G.generating_set();
        IntMatrix R(n, n * (int)S.size() + 1);
        int col = 0;
        for (int x = 0; x < n; ++x)
            for (int s : S) {
                R(x, col) += 1;
                R(s, col) += 1;
                R(G.mul(x, s), col) -= 1;
                ++col;
            }
        R(0, col) = 1;
        auto f = smith_normal_form(R);
        AbelianView v;
        std::vector<int> pos;
        for (int i = 0; i < (int)f.diag.size(); ++i)
            if (f.diag[i] != 1) {
                if (f.diag[i] == 0) throw std::logic_error("abelian structure: free part");
                pos.push_back(i);
                v.factors.push_back(f.diag[i].get_si());
            }
        v.exps.assign(n, std::vector<i64>(pos.size(), 0));
        for (int x = 0; x < n; ++x)
            for (std::size_t k = 0; k < pos.size(); ++k) {
                mpz_class r = f.U(pos[k], x) % v.factors[k];
                v.exps[x][k] = mod(r.get_si(), v.factors[k]);
            }
        v.strides.assign(pos.size(), 1);
        for (int i = (int)pos.size() - 2; i >= 0; --i) v.strides[i] = v.strides[i + 1] * v.factors[i + 1];
        v.element_of_index.assign(n, -1);
        for (int x = 0; x < n; ++x) {
            i64 idx = 0;
            for (std::size_t k = 0; k < pos.size(); ++k) idx += v.exps[x][k] * v.strides[k];
            if (v.element_of_index[idx] >= 0) throw std::logic_error("abelian structure not injective");
            v.element_of_index[idx] = x;
        }
        for (std::size_t k = 0; k < pos.size(); ++k) {
            std::vector<i64> e(pos.size(), 0);
            e[k] = 1;
            v.gens.push_back(v.element(e));
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (std::size_t k = 0; k < pos.size(); ++k)
                    if (v.exps[G.mul(a, b)][k] != (v.exps[a][k] + v.exps[b][k]) % v.factors[k])
                        throw std::logic_error("abelian structure not additive");
        G.view_ = std::move(v);
    }
    return G;
}

// ---------------------------------------------------------------- characters

Character Character::from_generators(const FiniteGroup& G, i64 M, const std::vector<i64>& on_gens) {
    if (!G.abelian()) throw std::invalid_argument("character by generator values needs an abelian group");
    const auto& v = *G.abelian();
    if (on_gens.size() != v.factors.size())
        throw std::invalid_argument("character: expected one exponent per cyclic factor");
    Character c;
    c.M = M;
    for (std::size_t i = 0; i < v.factors.size(); ++i)
        if (mod(on_gens[i] * v.factors[i], M) != 0)
            throw std::invalid_argument("character: value on generator " + std::to_string(i) +
                                        " has order not dividing the factor");
    c.exps.resize(G.order());
    for (int x = 0; x < G.order(); ++x) {
        i64 s = 0;
        for (std::size_t i = 0; i < v.factors.size(); ++i) s += v.exps[x][i] * on_gens[i];
        c.exps[x] = mod(s, M);
    }
    return c;
}

Character Character::trivial(const FiniteGroup& G, i64 M) {
    Character c;
    c.M = M;
    c.exps.assign(G.order(), 0);
    return c;
}

Character Character::lifted(i64 L) const {
    if (L % M != 0) throw std::invalid_argument("character lift: modulus must divide target");
    Character c;
    c.M = L;
    for (auto e : exps) c.exps.push_back(e * (L / M));
    return c;
}

i64 Character::order() const {
    i64 o = 1;
    for (auto e : exps) o = lcm(o, additive_order(e, M));
    return o;
}

bool Character::is_valid(const FiniteGroup& G) const {
    if ((int)exps.size() != G.order() || exps[0] != 0) return false;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (exps[G.mul(a, b)] != mod(exps[a] + exps[b], M)) return false;
    return true;
}

// ------------------------------------------------------------- automorphisms

GroupAutomorphism identity_automorphism(const FiniteGroup& G) {
    GroupAutomorphism u;
    u.perm.resize(G.order());
    for (int i = 0; i < G.order(); ++i) u.perm[i] = i;
    return u;
}

GroupAutomorphism compose(const GroupAutomorphism& u, const GroupAutomorphism& v) {
    GroupAutomorphism w;
    w.perm.resize(v.perm.size());
    for (std::size_t i = 0; i < v.perm.size(); ++i) w.perm[i] = u.perm[v.perm[i]];
    return w;
}

GroupAutomorphism inverse(const GroupAutomorphism& u) {
    GroupAutomorphism w;
    w.perm.resize(u.perm.size());
    for (std::size_t i = 0; i < u.perm.size(); ++i) w.perm[u.perm[i]] = (int)i;
    return w;
}

bool is_automorphism(const FiniteGroup& G, const std::vector<int>& p) {
    int n = G.order();
    if ((int)p.size() != n || p[0] != 0) return false;
    std::vector<char> seen(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p[G.mul(a, b)] != G.mul(p[a], p[b])) return false;
    return true;
}

namespace {

// extend generator images to a homomorphism; empty on inconsistency
std::vector<int> extend_hom(const FiniteGroup& G1, const FiniteGroup& G2, const std::vector<int>& gens,
                            const std::vector<int>& imgs) {
    std::vector<int> f(G1.order(), -1);
    f[0] = 0;
    std::vector<int> q{0};
    for (std::size_t k = 0; k < q.size(); ++k) {
        int x = q[k];
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int y = G1.mul(x, gens[j]);
            int fy = G2.mul(f[x], imgs[j]);
            if (f[y] < 0) {
                f[y] = fy;
                q.push_back(y);
            } else if (f[y] != fy) {
                return {};
            }
        }
    }
    return f;
}

bool bijective(const std::vector<int>& f, int n) {
    std::vector<char> seen(n, 0);
    for (int x : f) {
        if (x < 0 || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

void backtrack_isos(const FiniteGroup& G1, const FiniteGroup& G2, const std::vector<int>& gens,
                    const std::function<bool(const std::vector<int>&)>& accept, int limit,
                    std::vector<std::vector<int>>& out, int g1, int g2) {
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (int y = 0; y < G2.order(); ++y)
            if (G2.element_order(y) == G1.element_order(gens[j])) cands[j].push_back(y);
    std::vector<int> imgs(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (limit > 0 && (int)out.size() >= limit) return;
        if (j == gens.size()) {
            auto f = extend_hom(G1, G2, gens, imgs);
            if (f.empty() || !bijective(f, G2.order())) return;
            if (g1 >= 0 && f[g1] != g2) return;
            if (accept(f)) out.push_back(f);
            return;
        }
        for (int y : cands[j]) {
            imgs[j] = y;
            rec(j + 1);
        }
    };
    rec(0);
}

}  // namespace

std::vector<GroupAutomorphism> automorphisms_backtrack(const FiniteGroup& G) {
    std::vector<std::vector<int>> maps;
    backtrack_isos(G, G, G.generating_set(), [](const std::vector<int>&) { return true; }, 0, maps, -1, -1);
    std::vector<GroupAutomorphism> out;
    for (auto& m : maps) out.push_back({m});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupAutomorphism> automorphisms_fixing(const FiniteGroup& G, int g, const Character* chi,
                                                    int nonabelian_cap) {
    if (!G.is_central(g)) throw std::invalid_argument("automorphisms_fixing: g is not central");
    std::vector<GroupAutomorphism> out;
    auto keep = [&](const std::vector<int>& p) {
        if (p[g] != g) return false;
        if (chi)
            for (int h = 0; h < G.order(); ++h)
                if ((*chi)(p[h]) != (*chi)(h)) return false;
        return true;
    };
    if (G.abelian()) {
        // endomorphism matrices: column j = image of generator j, entry (i,j) in
        // (N_i / gcd(N_i, N_j)) Z / N_i
        const auto& v = *G.abelian();
        int r = (int)v.factors.size();
        std::vector<std::pair<int, int>> slots;
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) slots.push_back({i, j});
        std::vector<std::vector<i64>> img(r, std::vector<i64>(r, 0));
        std::function<void(std::size_t)> rec = [&](std::size_t s) {
            if (s == slots.size()) {
                std::vector<int> p(G.order());
                std::vector<i64> e(r);
                for (int x = 0; x < G.order(); ++x) {
                    for (int i = 0; i < r; ++i) {
                        i64 acc = 0;
                        for (int j = 0; j < r; ++j) acc += img[i][j] * v.exps[x][j];
                        e[i] = acc;
                    }
                    p[x] = v.element(e);
                }
                if (bijective(p, G.order()) && keep(p)) out.push_back({p});
                return;
            }
            auto [i, j] = slots[s];
            i64 step = v.factors[i] / gcd(v.factors[i], v.factors[j]);
            for (i64 a = 0; a < v.factors[i]; a += step) {
                img[i][j] = a;
                rec(s + 1);
            }
        };
        rec(0);
        // prune early would be faster; the groups in use have at most a few thousand endomorphisms
    } else {
        if (G.order() > nonabelian_cap)
            throw CapError("automorphisms_fixing: nonabelian group of order " + std::to_string(G.order()) +
                           " exceeds cap " + std::to_string(nonabelian_cap));
        for (auto& u : automorphisms_backtrack(G))
            if (keep(u.perm)) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> isomorphisms(const FiniteGroup& G1, const FiniteGroup& G2, int g1, int g2,
                                           const Character* chi1, const Character* chi2, int limit) {
    std::vector<std::vector<int>> out;
    if (G1.order() != G2.order() || G1.is_abelian() != G2.is_abelian()) return out;
    if (G1.abelian() && G2.abelian() && G1.abelian()->factors != G2.abelian()->factors) return out;
    if (G1.element_order(g1) != G2.element_order(g2)) return out;
    auto accept = [&](const std::vector<int>& f) {
        if (chi1 && chi2) {
            i64 L = lcm(chi1->M, chi2->M);
            for (int h = 0; h < G1.order(); ++h)
                if ((*chi2)(f[h]) * (L / chi2->M) % L != (*chi1)(h) * (L / chi1->M) % L) return false;
        }
        return true;
    };
    // the generating set is seeded with g1 so its image is pinned early
    std::vector<int> gens{g1};
    auto H = G1.generated(gens);
    while ((int)H.size() < G1.order()) {
        int best = -1;
        for (int x = 0; x < G1.order(); ++x)
            if (!std::binary_search(H.begin(), H.end(), x) && (best < 0 || G1.element_order(x) > G1.element_order(best)))
                best = x;
        gens.push_back(best);
        H = G1.generated(gens);
    }
    if (g1 == 0) gens.erase(gens.begin());
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (int y = 0; y < G2.order(); ++y) {
            if (G2.element_order(y) != G1.element_order(gens[j])) continue;
            if (gens[j] == g1 && y != g2) continue;
            if (chi1 && chi2) {
                i64 L = lcm(chi1->M, chi2->M);
                if ((*chi2)(y) * (L / chi2->M) % L != (*chi1)(gens[j]) * (L / chi1->M) % L) continue;
            }
            cands[j].push_back(y);
        }
    std::vector<int> imgs(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (limit > 0 && (int)out.size() >= limit) return;
        if (j == gens.size()) {
            auto f = extend_hom(G1, G2, gens, imgs);
            if (f.empty() || !bijective(f, G2.order()) || f[g1] != g2) return;
            if (accept(f)) out.push_back(f);
            return;
        }
        for (int y : cands[j]) {
            imgs[j] = y;
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mh
