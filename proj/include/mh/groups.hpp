#ifndef MH_GROUPS_HPP
#define MH_GROUPS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mh/numtheory.hpp"

namespace mh {

// Exponent-vector view of an abelian group as prod Z/factors[i].
struct AbelianView {
    std::vector<i64> factors;             // invariant factors, each > 1
    std::vector<int> gens;                // generator element per factor
    std::vector<std::vector<i64>> exps;   // per element
    std::vector<i64> strides;             // mixed-radix index of an exponent vector
    std::vector<int> element_of_index;    // mixed-radix index -> element
    int element(const std::vector<i64>& e) const;
};

class FiniteGroup {
public:
    // prod Z/N_i; element index is mixed radix with the last factor fastest
    static FiniteGroup from_factors(const std::vector<i64>& factors);
    // identity is relabelled to index 0 if needed (see relabel())
    static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table);

    int order() const { return n_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[(std::size_t)a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, i64 k) const;
    int element_order(int e) const { return ord_[e]; }
    bool is_central(int e) const;
    bool is_abelian() const { return abelian_; }
    const std::optional<AbelianView>& abelian() const { return view_; }
    i64 exponent() const;
    // input index -> internal index (identity moved to 0)
    const std::vector<int>& relabel() const { return relabel_; }
    std::string label(int e) const;
    const std::vector<std::vector<int>> cayley() const;

    // subgroup generated by the given elements, sorted
    std::vector<int> generated(const std::vector<int>& gens) const;
    // small generating set (greedy by element order)
    std::vector<int> generating_set() const;

private:
    void finish();
    int n_ = 0;
    std::vector<int> mul_, inv_, ord_;
    bool abelian_ = false;
    std::optional<AbelianView> view_;
    std::vector<int> relabel_;
};

// h -> zeta_M^{exps[h]}
struct Character {
    i64 M = 1;
    std::vector<i64> exps;

    static Character from_generators(const FiniteGroup& G, i64 M, const std::vector<i64>& on_gens);
    static Character trivial(const FiniteGroup& G, i64 M);
    i64 operator()(int h) const { return exps[h]; }
    Character lifted(i64 L) const;  // same values in Z/L, M | L
    i64 order() const;              // order in the character group
    bool is_valid(const FiniteGroup& G) const;
};

struct GroupAutomorphism {
    std::vector<int> perm;
    int operator()(int h) const { return perm[h]; }
    bool operator==(const GroupAutomorphism& o) const { return perm == o.perm; }
    bool operator<(const GroupAutomorphism& o) const { return perm < o.perm; }
};

GroupAutomorphism identity_automorphism(const FiniteGroup& G);
GroupAutomorphism compose(const GroupAutomorphism& u, const GroupAutomorphism& v);  // u after v
GroupAutomorphism inverse(const GroupAutomorphism& u);
bool is_automorphism(const FiniteGroup& G, const std::vector<int>& perm);

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Aut_g(G), optionally intersected with {u : chi o u = chi}; sorted by permutation.
std::vector<GroupAutomorphism> automorphisms_fixing(const FiniteGroup& G, int g,
                                                    const Character* chi = nullptr,
                                                    int nonabelian_cap = 24);
// all automorphisms by generator-image backtracking (any group)
std::vector<GroupAutomorphism> automorphisms_backtrack(const FiniteGroup& G);

// Group isomorphisms f: G1 -> G2 (as element maps) with f(g1) = g2 and, if given, chi2 o f = chi1.
// Stops after `limit` results when limit > 0.
std::vector<std::vector<int>> isomorphisms(const FiniteGroup& G1, const FiniteGroup& G2, int g1,
                                           int g2, const Character* chi1 = nullptr,
                                           const Character* chi2 = nullptr, int limit = 0);

}  // namespace mh

#endif
