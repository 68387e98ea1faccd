#ifndef MH_COHOMOLOGY_HPP
#define MH_COHOMOLOGY_HPP

#include <memory>
#include <string>
#include <vector>

#include "mh/groups.hpp"
#include "mh/linalg.hpp"

namespace mh {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// sigma(a, b) = zeta_M^{c(a, b)}
struct Cocycle {
    int n = 0;
    i64 M = 1;
    std::vector<i64> c;

    static Cocycle trivial(int n, i64 M);
    i64 operator()(int a, int b) const { return c[(std::size_t)a * n + b]; }
    i64& at(int a, int b) { return c[(std::size_t)a * n + b]; }
    Cocycle operator+(const Cocycle& o) const;
    Cocycle operator-(const Cocycle& o) const;
    Cocycle operator-() const;
    Cocycle scaled(i64 k) const;
    Cocycle lifted(i64 L) const;
    bool operator==(const Cocycle& o) const { return n == o.n && M == o.M && c == o.c; }
    bool operator<(const Cocycle& o) const { return c < o.c; }
    // entries (a, b) with a, b != 1, row-major
    std::vector<i64> to_vector() const;
    static Cocycle from_vector(int n, i64 M, const std::vector<i64>& v);
};

bool is_normalized(const Cocycle& s);
bool is_cocycle(const FiniteGroup& G, const Cocycle& s);
// d(mu)(a, b) = mu(a) + mu(b) - mu(ab); mu(1) must be 0
Cocycle coboundary(const FiniteGroup& G, const std::vector<i64>& mu, i64 M);
// (sigma o (u x u))(a, b) = sigma(u(a), u(b))
Cocycle pullback(const Cocycle& s, const std::vector<int>& u);
// B_sigma(a, h) = sigma(a, h) - sigma(h, a)
i64 pairing(const Cocycle& s, int a, int h);
// sum_{i=1}^{count-1} sigma(g, g^i)
i64 epsilon_sum(const FiniteGroup& G, const Cocycle& s, int g, i64 count);

// Rows of the normalized cocycle identity over Z/M; unknowns c(a, b), a, b != 1, row-major.
std::vector<std::vector<i64>> cocycle_equations(const FiniteGroup& G, i64 M);

// H^2_{g1,g2}(G, mu_M) = Z^2_{g1} / B^2_{g2}
class CohomologyGroup {
public:
    CohomologyGroup() = default;
    static CohomologyGroup compute(GroupPtr G, int g1, int g2, i64 M, const std::string& engine = "auto");

    const FiniteGroup& group() const { return *G_; }
    GroupPtr group_ptr() const { return G_; }
    i64 modulus() const { return M_; }
    int g1() const { return g1_; }
    int g2() const { return g2_; }
    const std::string& engine() const { return engine_; }
    // orders of the coordinate positions (each > 1)
    const std::vector<i64>& orders() const { return orders_; }
    std::vector<i64> invariant_factors() const { return invariant_factors(orders_); }
    i64 order() const;
    bool contains(const Cocycle& s) const;  // s in Z^2_{g1}
    std::vector<i64> canonicalize(const Cocycle& s) const;
    Cocycle representative(const std::vector<i64>& coords) const;
    std::vector<std::vector<i64>> all_classes() const;
    std::vector<i64> add(const std::vector<i64>& x, const std::vector<i64>& y) const;
    std::vector<i64> neg(const std::vector<i64>& x) const;

private:
    static std::vector<i64> invariant_factors(const std::vector<i64>& o);
    GroupPtr G_;
    i64 M_ = 1;
    int g1_ = 0, g2_ = 0;
    std::string engine_;
    std::vector<i64> orders_;
    std::shared_ptr<AbelianGroupStructure> dense_;
    // structured engine data: positions -> (kind, i, j, scale)
    struct Slot {
        int kind;  // 0 cyclic factor i, 1 bicharacter (i > j)
        int i, j;
        i64 scale;
    };
    std::vector<Slot> slots_;
};

// Dense cap: (|G|-1)^3 cocycle equations
constexpr int kDenseCohomologyCap = 16;

// c(x, y) = sum_i a_i [x_i + y_i >= N_i] + sum_{i > j} b_ij x_j y_i  on prod Z/N_i
Cocycle abelian_cocycle_assemble(const FiniteGroup& G, i64 M, const std::vector<i64>& a,
                                 const std::vector<std::vector<i64>>& b);
// f_a(y^i, y^j) = a if i + j >= N, cyclic group with generator y
Cocycle cyclic_standard_cocycle(const FiniteGroup& G, int y, i64 a, i64 M);

// Direct product G1 x G2, element (x1, x2) at index x1 * |G2| + x2.
struct ProductGroup {
    GroupPtr G;
    int n1 = 0, n2 = 0;
    int embed1(int x1) const { return x1 * n2; }
    int embed2(int x2) const { return x2; }
    int pair(int x1, int x2) const { return x1 * n2 + x2; }
};
ProductGroup direct_product(const FiniteGroup& G1, const FiniteGroup& G2);

// H^2_{g,h}(G1 x G2) ~ H^2_{g,h}(G1) x H^2(G2) x Pairings(G1/<g> x G2)
struct YamazakiDecomposition {
    ProductGroup P;
    CohomologyGroup whole, first, second;
    AbelianGroupStructure pairings;  // vectors of B(x1, x2), x1 in G1\{1}, x2 in G2\{1}
    int n1 = 0, n2 = 0;
    i64 M = 1;

    struct Parts {
        std::vector<i64> first, second, pairing;
        bool operator==(const Parts& o) const {
            return first == o.first && second == o.second && pairing == o.pairing;
        }
    };
    Parts forward(const Cocycle& s) const;
    Cocycle backward(const Parts& p) const;
};
YamazakiDecomposition yamazaki_decompose(const FiniteGroup& G1, const FiniteGroup& G2, int g, int h, i64 M);

}  // namespace mh

#endif
