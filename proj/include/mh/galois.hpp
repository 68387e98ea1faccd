#ifndef MH_GALOIS_HPP
#define MH_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mh/comodule.hpp"

namespace mh {

extern const char* const kSurrogateRule;  // printed in every report

struct GaloisRepresentative {
    std::string branch;         // "a=0", "a!=0", or "H2 x k" (type I)
    std::vector<i64> coords;    // class coordinates in the branch cohomology group
    Cocycle sigma;              // cocycle the object is built from
    Cyclo a;
    bool galois_condition = false;
    bool confluent = false;
    GaloisCheck kappa;          // exact kappa_r test (or Capped)
    bool verified() const { return galois_condition && confluent && kappa.status != GaloisCheck::NotBijective &&
                                   kappa.status != GaloisCheck::DimensionMismatch; }
};

struct GaloisBranch {
    std::string tag;
    std::string cohomology;  // "H^2" or "H^2_{g^d,g^d}"
    CohomologyGroup H;
    bool scalar_parameter = false;  // type I: "x k", instantiated by the samples
};

struct BridgeReport {
    std::string description;
    GaloisCheck right, left;
    bool bicomodule = false;
    bool ok() const { return right.status != GaloisCheck::NotBijective && left.status != GaloisCheck::NotBijective &&
                             right.status != GaloisCheck::DimensionMismatch &&
                             left.status != GaloisCheck::DimensionMismatch && bicomodule; }
};

struct GaloisEnumeration {
    DatumType type = DatumType::I;
    i64 M = 0;
    std::vector<Cyclo> samples;  // deduplicated
    GroupDatum enumerated;  // the datum itself, or G_red for type VI
    std::optional<BridgeReport> bridge;
    std::optional<Cocycle> witness;  // type V
    std::vector<GaloisBranch> branches;
    std::vector<GaloisRepresentative> reps;
    bool all_verified() const;
    int exact_kappa_count() const;  // representatives with an uncapped kappa_r test
};

// the branch structure alone, without building representatives
std::vector<GaloisBranch> galois_branches(const GroupDatum& D, i64 M);

GaloisEnumeration enumerate_galois(const GroupDatum& D, i64 M, const std::vector<Cyclo>& samples,
                                   int kappa_cap = kKappaDimCap);

// A_{1,-mu}(G_red) as an A(G)-A(G_red)-bicomodule algebra, with both Galois maps tested.
BridgeReport type_vi_bridge(const GroupDatum& D, int kappa_cap = kKappaDimCap);

struct GaloisIsoWitness {
    std::vector<i64> mu;  // exponents mod L, mu(1) = 0
    i64 L = 1;
    bool verified = false;  // f(X) = X, f(T_h) = mu(h) T_h checked as a colinear algebra isomorphism
};
// sigma = d(mu) tau and b = a mu(g^d), with mu valued in mu_L, L = lcm(moduli, o(b/a)).
std::optional<GaloisIsoWitness> galois_isomorphic(const HopfAlgebraRep& H, const Cocycle& sigma, const Cyclo& a,
                                                  const Cocycle& tau, const Cyclo& b, bool verify = true);

// mu with d(mu) = s - t (mod L), mu(1) = 0 and mu(h) = e for each (h, e) in fixed
std::optional<std::vector<i64>> coboundary_preimage(const FiniteGroup& G, const Cocycle& s, const Cocycle& t, i64 L,
                                                    const std::vector<std::pair<int, i64>>& fixed = {});

struct BruteForceIso {
    std::vector<i64> mu;
    i64 L = 1;
    Cyclo lambda;
};
constexpr int kBruteForceDimCap = 16;
// exhaustive over mu: G -> mu_L and lambda in the samples; L as in galois_isomorphic
std::optional<BruteForceIso> brute_force_colinear_iso(const HopfAlgebraRep& H, const Cocycle& sigma, const Cyclo& a,
                                                      const Cocycle& tau, const Cyclo& b,
                                                      const std::vector<Cyclo>& lambda_samples);

// H^2(G, mu_M); the classes of Galois objects up to homotopy
CohomologyGroup homotopy_classes(const GroupDatum& D, i64 M);

// order of a root of unity among the samples, or 0 if it is not one
i64 root_order(const Cyclo& z);

}  // namespace mh

#endif
