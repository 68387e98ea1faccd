#ifndef MH_COMODULE_HPP
#define MH_COMODULE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mh/algebra.hpp"
#include "mh/cohomology.hpp"
#include "mh/datum.hpp"

namespace mh {

// Rewriting system on words in T_h (h in G) and X:
//   T_a T_b -> sigma(a,b) T_ab,  T_1 -> 1,  X T_h -> chi(h) T_h X + psi(h) T_gh,  X^d -> xd.
// Normal forms T_h X^i (0 <= i < d) are indexed h * d + i.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(GroupPtr G, int g, int d, std::vector<Cyclo> chi, std::vector<Cyclo> sigma,
                  std::vector<Cyclo> psi, SVec xd);

    int order() const { return n_; }
    int d() const { return d_; }
    int dim() const { return n_ * d_; }
    int index(int h, int i) const { return h * d_ + i; }

    SVec times_T(const SVec& v, int k) const;
    SVec times_X(const SVec& v) const;
    // word symbols: k >= 0 is T_k, -1 is X
    SVec normal_form(const std::vector<int>& word) const;
    // one rewriting step of the given rule at position pos
    std::vector<std::pair<Cyclo, std::vector<int>>> step(const std::vector<int>& word, int pos, char rule) const;

    Algebra algebra(const std::vector<std::string>& labels) const;

    const Cyclo& sigma(int a, int b) const { return sigma_[(std::size_t)a * n_ + b]; }
    const Cyclo& chi(int h) const { return chi_[h]; }
    Cyclo psi(int h) const { return psi_.empty() ? Cyclo(0) : psi_[h]; }
    const SVec& xd() const { return xd_; }

private:
    GroupPtr G_;
    int g_ = 0, d_ = 1, n_ = 0;
    std::vector<Cyclo> chi_, sigma_, psi_;
    SVec xd_;
    std::vector<std::vector<SVec>> xit_;  // X^i T_k in normal form
};

struct CheckReport {
    std::vector<std::pair<std::string, bool>> items;
    void add(const std::string& name, bool ok) { items.emplace_back(name, ok); }
    bool ok() const;
    std::string failures() const;
};

struct HopfAlgebraRep {
    GroupDatum D;
    RewriteSystem rs;
    Algebra alg;
    std::vector<SVec> coproduct;  // keys i * dim + j
    std::vector<Cyclo> counit;
    std::vector<SVec> antipode;

    int dim() const { return alg.dim; }
    int index(int h, int i) const { return rs.index(h, i); }
};

HopfAlgebraRep build_hopf_algebra(const GroupDatum& D);
// associativity is checked only up to assoc_cap
CheckReport verify_hopf_axioms(const HopfAlgebraRep& H, int assoc_cap = 32);

// Right A(G)-comodule algebra A_{sigma,a,psi}(G), basis T_h X^i; optional left coaction.
struct ComoduleAlgebra {
    GroupDatum D;
    Cocycle sigma;
    Cyclo a;
    std::vector<Cyclo> psi;  // empty means psi = 0
    RewriteSystem rs;
    Algebra alg;
    std::vector<SVec> right;  // alpha(b), keys z * dimA + a
    std::vector<SVec> left;   // beta(b), keys a' * dimZ + z; empty when absent
    std::vector<int> left_u;  // beta(T_h) = u(h) (x) T_h
    // A non-confluent presentation collapses: alg is then the quotient of the normal-form span
    // by the ideal its ambiguities generate, and rs indices no longer address alg.
    bool confluent = true;
    int presented_dim = 0;  // |G| d

    int dim() const { return alg.dim; }
    bool has_left() const { return !left.empty(); }
};

constexpr int kQuotientDimCap = 64;
ComoduleAlgebra build_comodule_algebra(const HopfAlgebraRep& H, const Cocycle& sigma, const Cyclo& a,
                                       const std::vector<Cyclo>& psi = {});
// beta(X) = 1 (x) X + x (x) T_g, beta(T_h) = u(h) (x) T_h with x, u(h) in Hleft
void attach_left_coaction(ComoduleAlgebra& Z, const HopfAlgebraRep& Hleft, const std::vector<int>& u);

CheckReport verify_right_comodule_algebra(const ComoduleAlgebra& Z, const HopfAlgebraRep& H, int assoc_cap = 32);
CheckReport verify_left_comodule_algebra(const ComoduleAlgebra& Z, const HopfAlgebraRep& Hleft, int assoc_cap = 32);
bool verify_bicomodule(const ComoduleAlgebra& Z, const HopfAlgebraRep& Hleft, const HopfAlgebraRep& Hright);

struct GaloisCheck {
    enum Status { Bijective, NotBijective, DimensionMismatch, Capped } status = Capped;
    int rank = 0, size = 0;
    std::string reason;
    bool ok() const { return status == Bijective; }
};
constexpr int kKappaDimCap = 16;
// kappa_r(z (x) w) = (z (x) 1) alpha(w), tested for exact invertibility
GaloisCheck verify_galois_right(const ComoduleAlgebra& Z, const HopfAlgebraRep& H, int dim_cap = kKappaDimCap);
// kappa_l(z (x) w) = beta(z) (1 (x) w)
GaloisCheck verify_galois_left(const ComoduleAlgebra& Z, const HopfAlgebraRep& Hleft, int dim_cap = kKappaDimCap);

struct ConfluenceReport {
    bool confluent = true;
    int checked = 0;
    std::vector<std::string> failures;
};
// Above ttt_cap the T T T overlaps are resolved on cocycle exponents instead of normal forms.
ConfluenceReport confluence_check(const GroupDatum& D, const Cocycle& sigma, const Cyclo& a,
                                  const std::vector<Cyclo>& psi = {}, int ttt_cap = 16);

// a sigma(g^d, h) = a chi(h)^d sigma(h, g^d) for all h
bool galois_condition(const GroupDatum& D, const Cocycle& sigma, const Cyclo& a);

// psi(h) = psi(g) (sigma(g,h) - chi(h) sigma(h,g)) sigma(g,g)^{-1} (1 - chi(g))^{-1}
std::vector<Cyclo> psi_from_value(const GroupDatum& D, const Cocycle& sigma, const Cyclo& psi_g);

struct PsiReport {
    bool product_rule = true;   // psi(h1 h2) expansion
    bool determined_by_g = true;  // psi(h) from psi(g)
    bool power_rule = true;     // a(...) = psi(h) psi(gh) ... psi(g^{d-1} h)
    bool factor_identity = true;  // product over i of (sigma(g,g^i h) - chi(g^i h) sigma(g^i h, g))
    bool ok() const { return product_rule && determined_by_g && power_rule && factor_identity; }
};
PsiReport psi_conditions(const GroupDatum& D, const Cocycle& sigma, const Cyclo& a, const std::vector<Cyclo>& psi);
// the factor identity alone, for one h
bool factor_identity_holds(const GroupDatum& D, const Cocycle& sigma, int h);

struct PsiNormalization {
    Cyclo a_prime, lambda;
    bool iso_verified = false;  // X -> X + lambda T_g, T_h -> T_h is a colinear algebra isomorphism
    std::string detail;
};
PsiNormalization normalize_psi(const HopfAlgebraRep& H, const Cocycle& sigma, const Cyclo& a,
                               const std::vector<Cyclo>& psi);

// linear maps given by basis images
bool is_algebra_map(const Algebra& S, const Algebra& T, const std::vector<SVec>& f);
bool is_right_colinear(const ComoduleAlgebra& S, const ComoduleAlgebra& T, const std::vector<SVec>& f, int dimA);
bool is_left_colinear(const ComoduleAlgebra& S, const ComoduleAlgebra& T, const std::vector<SVec>& f, int dimA);
bool is_bijective(const std::vector<SVec>& f, int dim_target);

struct HopfAutomorphismReport {
    std::vector<GroupAutomorphism> aut_g_chi;
    std::string scalar_factor;   // "mu_M" (surrogate of k^*) or "mu_d"
    i64 scalar_order = 0;
    int verified = 0, failed = 0;
    bool non_root_rejected = true;  // type VI: r outside mu_d does not give a Hopf map
};
HopfAutomorphismReport hopf_automorphism_group(const HopfAlgebraRep& H, i64 M);
// h x^i -> r^i u(h) x^i
std::vector<SVec> hopf_map_images(const HopfAlgebraRep& H, const GroupAutomorphism& u, const Cyclo& r);
bool is_hopf_map(const HopfAlgebraRep& H, const std::vector<SVec>& f);

}  // namespace mh

#endif
