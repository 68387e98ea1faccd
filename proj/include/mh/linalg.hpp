#ifndef MH_LINALG_HPP
#define MH_LINALG_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "mh/cyclo.hpp"
#include "mh/numtheory.hpp"

namespace mh {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
    static IntMatrix identity(int n);
    mpz_class& operator()(int i, int j) { return a[(std::size_t)i * cols + j]; }
    const mpz_class& operator()(int i, int j) const { return a[(std::size_t)i * cols + j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

struct SmithForm {
    IntMatrix D, U, V;  // U * A * V == D
    IntMatrix Uinv;
    std::vector<mpz_class> diag;  // nonnegative, d_i | d_{i+1}, zeros last
};

SmithForm smith_normal_form(const IntMatrix& A);
mpz_class determinant(const IntMatrix& A);  // Bareiss, square only

// Invariant factors (>1) of the group prod Z/orders[i].
std::vector<i64> invariant_factors(const std::vector<i64>& orders);

// Diagonalization of an integer matrix over Z/M: P A V = diag(d_0, ..., d_{r-1}, 0...),
// each d_t a divisor of M. Row operations are recorded for replay on a right-hand side.
class ModSolver {
public:
    ModSolver(std::vector<std::vector<i64>> A, int cols, i64 M);

    i64 modulus() const { return M_; }
    int cols() const { return cols_; }
    std::optional<std::vector<i64>> solve(const std::vector<i64>& b) const;
    // generators of {x : A x = 0 mod M}
    std::vector<std::vector<i64>> kernel() const;
    // kernel as a product of cyclic groups: x = sum_t w_t * kernel_gen(t), w_t in Z/orders[t]
    const std::vector<i64>& kernel_orders() const { return korders_; }
    const std::vector<std::vector<i64>>& kernel_basis() const { return kbasis_; }
    // coordinates w of a kernel element x (x must lie in the kernel)
    std::vector<i64> kernel_coords(const std::vector<i64>& x) const;
    // V and its inverse (columns operations), both cols x cols
    std::vector<i64> apply_Vinv(const std::vector<i64>& x) const;

private:
    struct RowOp {
        int kind;  // 0 swap, 1 combine, 2 scale
        int i, j;
        i64 a, b, c, d;
    };
    i64 M_;
    int rows_, cols_;
    std::vector<i64> diag_;  // length cols_, 0 for free columns
    std::vector<RowOp> ops_;
    std::vector<std::vector<i64>> V_, Vinv_;  // row-major cols x cols
    std::vector<i64> korders_;
    std::vector<std::vector<i64>> kbasis_;
    std::vector<int> kcol_;  // column t of V behind each kernel generator
};

struct ModSolution {
    std::vector<i64> x;
    std::vector<std::vector<i64>> kernel;
};
std::optional<ModSolution> solve_linear_mod(const std::vector<std::vector<i64>>& A, int cols,
                                            const std::vector<i64>& b, i64 M);

// Z/B for subgroups B <= Z <= (Z/M)^n.
class AbelianGroupStructure {
public:
    AbelianGroupStructure() = default;
    AbelianGroupStructure(i64 M, int n, const std::vector<std::vector<i64>>& Z,
                          const std::vector<std::vector<i64>>& B);

    const std::vector<i64>& invariants() const { return inv_; }
    mpz_class order() const;
    std::size_t rank() const { return inv_.size(); }
    // coordinates in prod Z/inv_i; throws if x not in Z
    std::vector<i64> canonicalize(const std::vector<i64>& x) const;
    bool contains(const std::vector<i64>& x) const;
    // a member vector with the given coordinates
    std::vector<i64> lift(const std::vector<i64>& coords) const;
    const std::vector<std::vector<i64>>& basis() const { return basis_; }
    // every coordinate tuple, lexicographic
    std::vector<std::vector<i64>> all_coords() const;

private:
    i64 M_ = 1;
    int n_ = 0;
    std::shared_ptr<ModSolver> zsolver_;  // kernel-style solver for membership in Z
    std::vector<i64> zorders_;
    std::vector<std::vector<i64>> zgens_;
    IntMatrix Vinv_;  // SNF column transform inverse for the relation lattice
    std::vector<int> keep_;  // SNF positions with invariant > 1
    std::vector<i64> inv_;
    std::vector<std::vector<i64>> basis_;
    std::vector<std::vector<i64>> zgen_coords_;  // map Z-coordinates -> generators
};

AbelianGroupStructure subquotient_invariants(i64 M, int n, const std::vector<std::vector<i64>>& Z,
                                             const std::vector<std::vector<i64>>& B);

// Exact rank over Q(zeta), fraction-free elimination. Rows are dense.
using CycloMatrix = std::vector<std::vector<Cyclo>>;
int matrix_rank_cyclo(CycloMatrix A);
bool is_invertible(const CycloMatrix& A);

// Field RREF: returns pivot columns; A is reduced in place.
std::vector<int> rref_cyclo(CycloMatrix& A);
// Basis of the null space {x : A x = 0}.
std::vector<std::vector<Cyclo>> nullspace_cyclo(const CycloMatrix& A, int cols);

}  // namespace mh

#endif
