#include "mh/algebra.hpp"

#include <limits>
#include <sstream>

namespace mh {

void add_term(SVec& y, int k, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = y.find(k);
    if (it == y.end()) {
        y.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) y.erase(it);
}

void axpy(SVec& y, const Cyclo& a, const SVec& x) {
    if (a.is_zero()) return;
    bool one = a.is_one();
    for (const auto& [k, c] : x) add_term(y, k, one ? c : a * c);
}

SVec scaled(const SVec& x, const Cyclo& a) {
    SVec y;
    axpy(y, a, x);
    return y;
}

SVec unit_vec(int k) { return SVec{{k, Cyclo(1)}}; }

std::string svec_str(const SVec& v, const std::vector<std::string>& labels) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << (k < (int)labels.size() ? labels[k] : std::to_string(k));
    }
    return os.str();
}

SVec Algebra::mul(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) axpy(out, ca * cb, prod(i, j));
    return out;
}

SVec tensor(const SVec& u, const SVec& v, int dimV) {
    SVec out;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) add_term(out, i * dimV + j, a * b);
    return out;
}

SVec tensor_mul(const Algebra& A, const Algebra& B, const SVec& x, const SVec& y) {
    SVec out;
    int dB = B.dim;
    for (const auto& [k1, c1] : x) {
        int i1 = k1 / dB, j1 = k1 % dB;
        for (const auto& [k2, c2] : y) {
            int i2 = k2 / dB, j2 = k2 % dB;
            const SVec& p = A.prod(i1, i2);
            const SVec& q = B.prod(j1, j2);
            if (p.empty() || q.empty()) continue;
            Cyclo c = c1 * c2;
            for (const auto& [a, ca] : p)
                for (const auto& [b, cb] : q) add_term(out, a * dB + b, c * ca * cb);
        }
    }
    return out;
}

SVec apply(const LinMap& f, const SVec& x) {
    SVec out;
    for (const auto& [k, c] : x) axpy(out, c, f(k));
    return out;
}

SVec apply_images(const std::vector<SVec>& images, const SVec& x) {
    SVec out;
    for (const auto& [k, c] : x) axpy(out, c, images[k]);
    return out;
}

SVec apply_tensor(const SVec& x, int dimV, const LinMap& f, const LinMap& g, int dimOutV) {
    SVec out;
    for (const auto& [k, c] : x) {
        SVec fi = f(k / dimV), gj = g(k % dimV);
        for (const auto& [a, ca] : fi)
            for (const auto& [b, cb] : gj) add_term(out, a * dimOutV + b, c * ca * cb);
    }
    return out;
}

LinMap identity_map() {
    return [](int k) { return unit_vec(k); };
}

bool SparseEchelon::insert(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Cyclo inv = v.rbegin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    int col = v.rbegin()->first;
    rows_.emplace(col, std::move(v));
    return true;
}

SVec SparseEchelon::reduce(SVec v) const {
    // the pivot is the largest column, so a decreasing sweep never revisits a column
    int bound = std::numeric_limits<int>::max();
    while (true) {
        auto it = v.lower_bound(bound);
        if (it == v.begin()) break;
        --it;
        int col = it->first;
        auto row = rows_.find(col);
        if (row != rows_.end()) axpy(v, -it->second, row->second);
        bound = col;
    }
    return v;
}

int sparse_rank(const std::vector<SVec>& rows) {
    SparseEchelon E;
    for (const auto& r : rows) E.insert(r);
    return E.dim();
}

SVec QuotientAlgebra::project(const SVec& v) const {
    SVec out;
    for (const auto& [k, c] : ideal.reduce(v)) add_term(out, position[k], c);
    return out;
}

QuotientAlgebra quotient_by_ideal(const Algebra& A, const std::vector<SVec>& seeds, const std::vector<int>& gens) {
    QuotientAlgebra Q;
    std::vector<SVec> work;
    for (const auto& s : seeds) {
        SVec r = Q.ideal.reduce(s);
        if (!r.empty() && Q.ideal.insert(r)) work.push_back(std::move(r));
    }
    while (!work.empty()) {
        SVec w = std::move(work.back());
        work.pop_back();
        for (int gidx : gens) {
            SVec gv = unit_vec(gidx);
            for (SVec p : {A.mul(gv, w), A.mul(w, gv)}) {
                p = Q.ideal.reduce(std::move(p));
                if (!p.empty() && Q.ideal.insert(p)) work.push_back(std::move(p));
            }
        }
    }
    Q.position.assign(A.dim, -1);
    for (int i = 0; i < A.dim; ++i)
        if (!Q.ideal.is_pivot(i)) {
            Q.position[i] = (int)Q.kept.size();
            Q.kept.push_back(i);
        }
    int qd = (int)Q.kept.size();
    Q.alg.dim = qd;
    for (int i : Q.kept) Q.alg.labels.push_back(i < (int)A.labels.size() ? A.labels[i] : std::to_string(i));
    Q.alg.table.resize((std::size_t)qd * qd);
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j) Q.alg.table[(std::size_t)i * qd + j] = Q.project(A.prod(Q.kept[i], Q.kept[j]));
    return Q;
}

}  // namespace mh
