#ifndef MH_ALGEBRA_HPP
#define MH_ALGEBRA_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mh/cyclo.hpp"

namespace mh {

// Sparse vector over Q(zeta): basis index -> nonzero coefficient.
using SVec = std::map<int, Cyclo>;

void add_term(SVec& y, int k, const Cyclo& c);
void axpy(SVec& y, const Cyclo& a, const SVec& x);  // y += a x
SVec scaled(const SVec& x, const Cyclo& a);
SVec unit_vec(int k);
std::string svec_str(const SVec& v, const std::vector<std::string>& labels);

// Finite-dimensional algebra by structure constants; basis element 0 is the unit.
struct Algebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<SVec> table;  // b_i b_j at i * dim + j

    const SVec& prod(int i, int j) const { return table[(std::size_t)i * dim + j]; }
    SVec mul(const SVec& a, const SVec& b) const;
};

// Elements of U (x) V are keyed i * dimV + j.
SVec tensor(const SVec& u, const SVec& v, int dimV);
SVec tensor_mul(const Algebra& A, const Algebra& B, const SVec& x, const SVec& y);

// Linear map given on a basis.
using LinMap = std::function<SVec(int)>;
SVec apply(const LinMap& f, const SVec& x);
SVec apply_images(const std::vector<SVec>& images, const SVec& x);
// (f (x) g)(x) where x lives in U (x) V (keys i * dimV + j) and g lands in a space of dimension dimOutV
SVec apply_tensor(const SVec& x, int dimV, const LinMap& f, const LinMap& g, int dimOutV);
LinMap identity_map();

// Subspace kept in echelon form; a row's pivot is its largest column, with coefficient 1.
class SparseEchelon {
public:
    // returns false if v already lies in the span
    bool insert(SVec v);
    // v minus its component along the span, with no pivot columns left
    SVec reduce(SVec v) const;
    int dim() const { return (int)rows_.size(); }
    bool is_pivot(int col) const { return rows_.count(col) > 0; }

private:
    std::map<int, SVec> rows_;
};

// Rank of a sparse family of vectors (incremental echelon form).
int sparse_rank(const std::vector<SVec>& rows);

// A / I where I is the two-sided ideal generated by `seeds`, `gens` generating A as an algebra.
// The quotient basis is the non-pivot subset `kept` of A's basis.
struct QuotientAlgebra {
    Algebra alg;
    std::vector<int> kept;       // quotient basis index -> basis index of A
    std::vector<int> position;   // basis index of A -> quotient index or -1
    SparseEchelon ideal;
    SVec project(const SVec& v) const;  // A -> A / I in quotient coordinates
};
QuotientAlgebra quotient_by_ideal(const Algebra& A, const std::vector<SVec>& seeds, const std::vector<int>& gens);

}  // namespace mh

#endif
