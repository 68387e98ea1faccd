#include "mh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mh {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix R(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const mpz_class& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) R(i, j) += x * o(k, j);
        }
    return R;
}

namespace {

// elementary operations that keep U, Uinv, V in sync with A
struct SnfState {
    IntMatrix A, U, Uinv, V;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols; ++c) std::swap(A(i, c), A(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv(r, i), Uinv(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows; ++r) std::swap(A(r, i), A(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
    }
    // row_i += q * row_j
    void add_row(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int c = 0; c < A.cols; ++c) A(i, c) += q * A(j, c);
        for (int c = 0; c < U.cols; ++c) U(i, c) += q * U(j, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv(r, j) -= q * Uinv(r, i);
    }
    // col_i += q * col_j
    void add_col(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < A.rows; ++r) A(r, i) += q * A(r, j);
        for (int r = 0; r < V.rows; ++r) V(r, i) += q * V(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < A.cols; ++c) A(i, c) = -A(i, c);
        for (int c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv(r, i) = -Uinv(r, i);
    }
};

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A0) {
    SnfState s{A0, IntMatrix::identity(A0.rows), IntMatrix::identity(A0.rows),
               IntMatrix::identity(A0.cols)};
    IntMatrix& A = s.A;
    int r = A.rows, c = A.cols;
    int lim = std::min(r, c);
    for (int t = 0; t < lim; ++t) {
        // smallest nonzero entry of the trailing block
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (A(i, j) == 0) continue;
                mpz_class v = abs(A(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < r; ++i) {
                if (A(i, t) == 0) continue;
                s.add_row(i, t, -fdiv(A(i, t), A(t, t)));
                if (A(i, t) != 0) {
                    s.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (A(t, j) == 0) continue;
                s.add_col(j, t, -fdiv(A(t, j), A(t, t)));
                if (A(t, j) != 0) {
                    s.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility of the trailing block by the pivot
            int bad = -1;
            for (int i = t + 1; i < r && bad < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            s.add_row(t, bad, 1);
        }
        if (A(t, t) < 0) s.negate_row(t);
    }
    SmithForm out;
    out.D = s.A;
    out.U = s.U;
    out.V = s.V;
    out.Uinv = s.Uinv;
    for (int t = 0; t < lim; ++t) out.diag.push_back(abs(s.A(t, t)));
    if ((long)r * c <= 4096 && !(out.U * A0 * out.V == out.D))
        throw std::logic_error("smith_normal_form: UAV != D");
    return out;
}

mpz_class determinant(const IntMatrix& A0) {
    if (A0.rows != A0.cols) throw std::invalid_argument("determinant of non-square matrix");
    IntMatrix A = A0;
    int n = A.rows;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && A(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(A(p, j), A(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = A(k, k) * A(i, j) - A(i, k) * A(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                A(i, j) = v;
            }
            A(i, k) = 0;
        }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

std::vector<i64> invariant_factors(const std::vector<i64>& orders) {
    int n = (int)orders.size();
    IntMatrix D(n, n);
    for (int i = 0; i < n; ++i) D(i, i) = orders[i];
    auto f = smith_normal_form(D);
    std::vector<i64> out;
    for (auto& d : f.diag)
        if (d != 1) out.push_back(d.get_si());
    return out;
}

// ---------------------------------------------------------------- ModSolver

ModSolver::ModSolver(std::vector<std::vector<i64>> W, int cols, i64 M)
    : M_(M), rows_((int)W.size()), cols_(cols) {
    if (M < 1) throw std::invalid_argument("modulus must be positive");
    if (M > (i64(1) << 30)) throw std::invalid_argument("modulus too large for the mod-M engine");
    for (auto& row : W) {
        if ((int)row.size() != cols) throw std::invalid_argument("ragged matrix");
        for (auto& x : row) x = mod(x, M);
    }
    V_.assign(cols, std::vector<i64>(cols, 0));
    Vinv_.assign(cols, std::vector<i64>(cols, 0));
    for (int i = 0; i < cols; ++i) V_[i][i] = Vinv_[i][i] = 1 % M;
    diag_.assign(cols, 0);

    auto row_combine = [&](int i, int j, i64 a, i64 b, i64 c, i64 d) {
        // r_i <- a r_i + b r_j ; r_j <- c r_i + d r_j
        auto& ri = W[i];
        auto& rj = W[j];
        for (int k = 0; k < cols; ++k) {
            i64 x = ri[k], y = rj[k];
            if (x == 0 && y == 0) continue;
            ri[k] = mod(a * x % M + b * y % M, M);
            rj[k] = mod(c * x % M + d * y % M, M);
        }
        ops_.push_back({1, i, j, a, b, c, d});
    };
    auto col_combine = [&](int i, int j, i64 a, i64 b, i64 c, i64 d) {
        // col_i <- a col_i + b col_j ; col_j <- c col_i + d col_j   (det = ad - bc unit)
        for (int r = 0; r < rows_; ++r) {
            i64 x = W[r][i], y = W[r][j];
            if (x == 0 && y == 0) continue;
            W[r][i] = mod(a * x % M + b * y % M, M);
            W[r][j] = mod(c * x % M + d * y % M, M);
        }
        for (int r = 0; r < cols_; ++r) {
            i64 x = V_[r][i], y = V_[r][j];
            V_[r][i] = mod(a * x % M + b * y % M, M);
            V_[r][j] = mod(c * x % M + d * y % M, M);
        }
        // V' = V E with E = [[a, c], [b, d]] on (i, j); Vinv' = E^{-1} Vinv
        i64 det = mod(a * d % M - b * c % M, M);
        i64 di = M == 1 ? 0 : inv_mod(det, M);
        i64 f00 = mod(d * di % M, M), f01 = mod(-c * di % M, M);
        i64 f10 = mod(-b * di % M, M), f11 = mod(a * di % M, M);
        auto& ri = Vinv_[i];
        auto& rj = Vinv_[j];
        for (int k = 0; k < cols_; ++k) {
            i64 x = ri[k], y = rj[k];
            ri[k] = mod(f00 * x % M + f01 * y % M, M);
            rj[k] = mod(f10 * x % M + f11 * y % M, M);
        }
    };
    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(W[i], W[j]);
        ops_.push_back({0, i, j, 0, 0, 0, 0});
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        col_combine(i, j, 0, 1, 1, 0);
    };
    auto scale_row = [&](int i, i64 u) {
        for (auto& x : W[i]) x = mod(x * u % M, M);
        ops_.push_back({2, i, i, u, 0, 0, 0});
    };

    int lim = std::min(rows_, cols_);
    int t = 0;
    for (; t < lim; ++t) {
        int pi = -1, pj = -1;
        i64 best = M + 1;
        for (int j = t; j < cols_ && best != 1; ++j)
            for (int i = t; i < rows_; ++i) {
                i64 v = W[i][j];
                if (v == 0) continue;
                i64 g = gcd(v, M);
                if (g < best) {
                    best = g;
                    pi = i;
                    pj = j;
                    if (g == 1) break;
                }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        for (;;) {
            // normalize pivot to gcd(p, M)
            i64 p = W[t][t];
            i64 g = gcd(p, M);
            if (p != g) {
                i64 mg = M / g;
                i64 u = mg == 1 ? 1 : inv_mod(p / g, mg);
                while (gcd(u, M) != 1) u += mg;
                scale_row(t, u);
            }
            bool dirty = false;
            for (int i = t + 1; i < rows_; ++i) {
                i64 b = W[i][t];
                if (b == 0) continue;
                i64 a = W[t][t];
                if (b % a == 0) {
                    row_combine(i, t, 1, mod(-(b / a), M), 0, 1);
                } else {
                    i64 s, tt;
                    i64 h = xgcd(a, b, s, tt);
                    // new_t = s r_t + tt r_i ; new_i = -b/h r_t + a/h r_i
                    row_combine(t, i, mod(s, M), mod(tt, M), mod(-(b / h), M), mod(a / h, M));
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols_; ++j) {
                i64 b = W[t][j];
                if (b == 0) continue;
                i64 a = W[t][t];
                if (b % a == 0) {
                    col_combine(j, t, 1, mod(-(b / a), M), 0, 1);
                } else {
                    i64 s, tt;
                    i64 h = xgcd(a, b, s, tt);
                    col_combine(t, j, mod(s, M), mod(tt, M), mod(-(b / h), M), mod(a / h, M));
                    dirty = true;
                }
            }
            if (!dirty) {
                bool clean = true;
                for (int i = t + 1; i < rows_ && clean; ++i)
                    if (W[i][t] != 0) clean = false;
                if (clean) break;
            }
        }
        diag_[t] = W[t][t];
    }
    // kernel description
    for (int c = 0; c < cols_; ++c) {
        i64 d = diag_[c];
        i64 order = d == 0 ? M : d;  // y_c in (M/d) Z / M has order d
        if (order == 1) continue;
        i64 step = d == 0 ? 1 : M / d;
        std::vector<i64> gen(cols_);
        for (int r = 0; r < cols_; ++r) gen[r] = mod(V_[r][c] * step % M, M);
        korders_.push_back(order);
        kbasis_.push_back(gen);
        kcol_.push_back(c);
    }
}

std::vector<i64> ModSolver::apply_Vinv(const std::vector<i64>& x) const {
    std::vector<i64> y(cols_, 0);
    for (int r = 0; r < cols_; ++r) {
        i64 acc = 0;
        for (int k = 0; k < cols_; ++k)
            if (Vinv_[r][k] && x[k]) acc = (acc + Vinv_[r][k] * x[k]) % M_;
        y[r] = mod((i64)acc, M_);
    }
    return y;
}

std::optional<std::vector<i64>> ModSolver::solve(const std::vector<i64>& b0) const {
    if ((int)b0.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    std::vector<i64> b(b0.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = mod(b0[i], M_);
    for (const auto& op : ops_) {
        if (op.kind == 0) {
            std::swap(b[op.i], b[op.j]);
        } else if (op.kind == 2) {
            b[op.i] = mod(b[op.i] * op.a % M_, M_);
        } else {
            i64 x = b[op.i], y = b[op.j];
            b[op.i] = mod(op.a * x % M_ + op.b * y % M_, M_);
            b[op.j] = mod(op.c * x % M_ + op.d * y % M_, M_);
        }
    }
    std::vector<i64> y(cols_, 0);
    for (int r = 0; r < rows_; ++r) {
        i64 d = r < cols_ ? diag_[r] : 0;
        if (d == 0) {
            if (b[r] != 0) return std::nullopt;
            continue;
        }
        if (b[r] % d != 0) return std::nullopt;
        y[r] = b[r] / d;
    }
    std::vector<i64> x(cols_, 0);
    for (int r = 0; r < cols_; ++r) {
        i64 acc = 0;
        for (int k = 0; k < cols_; ++k)
            if (V_[r][k] && y[k]) acc = (acc + V_[r][k] * y[k]) % M_;
        x[r] = mod((i64)acc, M_);
    }
    return x;
}

std::vector<std::vector<i64>> ModSolver::kernel() const { return kbasis_; }

std::vector<i64> ModSolver::kernel_coords(const std::vector<i64>& x) const {
    auto y = apply_Vinv(x);
    std::vector<i64> w;
    for (std::size_t k = 0; k < kcol_.size(); ++k) {
        int c = kcol_[k];
        i64 d = diag_[c];
        i64 step = d == 0 ? 1 : M_ / d;
        if (y[c] % step != 0) throw std::invalid_argument("vector not in kernel");
        w.push_back(y[c] / step);
    }
    return w;
}

std::optional<ModSolution> solve_linear_mod(const std::vector<std::vector<i64>>& A, int cols,
                                            const std::vector<i64>& b, i64 M) {
    ModSolver s(A, cols, M);
    auto x = s.solve(b);
    if (!x) return std::nullopt;
    return ModSolution{*x, s.kernel()};
}

// ------------------------------------------------------- subquotient engine

AbelianGroupStructure::AbelianGroupStructure(i64 M, int n, const std::vector<std::vector<i64>>& Z,
                                             const std::vector<std::vector<i64>>& B)
    : M_(M), n_(n), zgens_(Z) {
    int k = (int)Z.size();
    // G: n x k with the Z generators as columns
    std::vector<std::vector<i64>> G(n, std::vector<i64>(k, 0));
    for (int j = 0; j < k; ++j) {
        if ((int)Z[j].size() != n) throw std::invalid_argument("generator length mismatch");
        for (int i = 0; i < n; ++i) G[i][j] = mod(Z[j][i], M);
    }
    zsolver_ = std::make_shared<ModSolver>(G, k, M);
    // relation lattice in Z^k: lifted kernel, M e_i, and preimages of B
    std::vector<std::vector<i64>> rels = zsolver_->kernel();
    for (int i = 0; i < k; ++i) {
        std::vector<i64> e(k, 0);
        e[i] = M;
        rels.push_back(e);
    }
    for (const auto& b : B) {
        auto c = zsolver_->solve(b);
        if (!c) throw std::invalid_argument("B is not contained in Z");
        rels.push_back(*c);
    }
    IntMatrix R(k, (int)rels.size());
    for (int j = 0; j < (int)rels.size(); ++j)
        for (int i = 0; i < k; ++i) R(i, j) = rels[j][i];
    auto f = smith_normal_form(R);
    const IntMatrix& Uinv = f.Uinv;
    Vinv_ = f.U;  // coordinate map c -> U c
    for (int i = 0; i < k; ++i) {
        mpz_class d = i < (int)f.diag.size() ? f.diag[i] : mpz_class(0);
        if (d == 0) throw std::logic_error("relation lattice not full rank");
        if (d != 1) {
            keep_.push_back(i);
            inv_.push_back(d.get_si());
        }
    }
    // basis: x = G * Uinv e_i
    for (int idx : keep_) {
        std::vector<i64> x(n, 0);
        for (int j = 0; j < k; ++j) {
            i64 cj = mod(mpz_class(Uinv(j, idx) % M).get_si(), M);
            if (!cj) continue;
            for (int r = 0; r < n; ++r) x[r] = mod(x[r] + cj * G[r][j] % M, M);
        }
        basis_.push_back(x);
    }
}

mpz_class AbelianGroupStructure::order() const {
    mpz_class o = 1;
    for (auto d : inv_) o *= d;
    return o;
}

bool AbelianGroupStructure::contains(const std::vector<i64>& x) const {
    return zsolver_->solve(x).has_value();
}

std::vector<i64> AbelianGroupStructure::canonicalize(const std::vector<i64>& x) const {
    auto c = zsolver_->solve(x);
    if (!c) throw std::invalid_argument("element not in Z");
    std::vector<i64> out;
    for (std::size_t t = 0; t < keep_.size(); ++t) {
        int row = keep_[t];
        mpz_class acc = 0;
        for (int j = 0; j < Vinv_.cols; ++j) acc += Vinv_(row, j) * (*c)[j];
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), (unsigned long)inv_[t]);
        out.push_back(r.get_si());
    }
    return out;
}

std::vector<i64> AbelianGroupStructure::lift(const std::vector<i64>& coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate length mismatch");
    std::vector<i64> x(n_, 0);
    for (std::size_t t = 0; t < basis_.size(); ++t) {
        i64 w = mod(coords[t], inv_[t]);
        if (!w) continue;
        for (int r = 0; r < n_; ++r) x[r] = mod(x[r] + w * basis_[t][r] % M_, M_);
    }
    return x;
}

std::vector<std::vector<i64>> AbelianGroupStructure::all_coords() const {
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur(inv_.size(), 0);
    for (;;) {
        out.push_back(cur);
        int p = (int)cur.size() - 1;
        while (p >= 0 && ++cur[p] == inv_[p]) cur[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

AbelianGroupStructure subquotient_invariants(i64 M, int n, const std::vector<std::vector<i64>>& Z,
                                             const std::vector<std::vector<i64>>& B) {
    return AbelianGroupStructure(M, n, Z, B);
}

// --------------------------------------------------------- cyclotomic rank

int matrix_rank_cyclo(CycloMatrix A) {
    int r = (int)A.size();
    if (r == 0) return 0;
    int c = (int)A[0].size();
    int rank = 0;
    Cyclo prev(1);
    for (int k = 0; k < c && rank < r; ++k) {
        int p = rank;
        while (p < r && A[p][k].is_zero()) ++p;
        if (p == r) continue;
        std::swap(A[p], A[rank]);
        Cyclo pinv = prev.inverse();
        for (int i = rank + 1; i < r; ++i) {
            if (A[i][k].is_zero()) {
                // rows without a leading entry still scale by pivot/prev
                if (!(A[rank][k] * pinv).is_one())
                    for (int j = k + 1; j < c; ++j)
                        if (!A[i][j].is_zero()) A[i][j] = A[rank][k] * A[i][j] * pinv;
                continue;
            }
            for (int j = k + 1; j < c; ++j) {
                Cyclo v = A[rank][k] * A[i][j];
                if (!A[rank][j].is_zero()) v -= A[i][k] * A[rank][j];
                if (!v.is_zero()) v *= pinv;
                A[i][j] = v;
            }
            A[i][k] = Cyclo();
        }
        prev = A[rank][k];
        ++rank;
    }
    return rank;
}

bool is_invertible(const CycloMatrix& A) {
    int n = (int)A.size();
    for (const auto& row : A)
        if ((int)row.size() != n) return false;
    return matrix_rank_cyclo(A) == n;
}

std::vector<int> rref_cyclo(CycloMatrix& A) {
    std::vector<int> piv;
    int r = (int)A.size();
    if (r == 0) return piv;
    int c = (int)A[0].size();
    int row = 0;
    for (int k = 0; k < c && row < r; ++k) {
        int p = row;
        while (p < r && A[p][k].is_zero()) ++p;
        if (p == r) continue;
        std::swap(A[p], A[row]);
        Cyclo inv = A[row][k].inverse();
        for (int j = k; j < c; ++j)
            if (!A[row][j].is_zero()) A[row][j] *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == row || A[i][k].is_zero()) continue;
            Cyclo f = A[i][k];
            for (int j = k; j < c; ++j)
                if (!A[row][j].is_zero()) A[i][j] -= f * A[row][j];
        }
        piv.push_back(k);
        ++row;
    }
    return piv;
}

std::vector<std::vector<Cyclo>> nullspace_cyclo(const CycloMatrix& A0, int cols) {
    CycloMatrix A = A0;
    auto piv = rref_cyclo(A);
    std::vector<int> is_piv(cols, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = (int)i;
    std::vector<std::vector<Cyclo>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f] >= 0) continue;
        std::vector<Cyclo> v(cols);
        v[f] = Cyclo(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A[i][f];
        out.push_back(v);
    }
    return out;
}

}  // namespace mh
