#include "mh/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mh {

namespace {

std::vector<i64> poly_divide_exact(std::vector<i64> num, const std::vector<i64>& den) {
    // den monic
    int dn = (int)den.size() - 1;
    int nn = (int)num.size() - 1;
    std::vector<i64> q(nn - dn + 1, 0);
    for (int k = nn - dn; k >= 0; --k) {
        i64 t = num[k + dn];
        q[k] = t;
        if (t != 0)
            for (int j = 0; j <= dn; ++j) num[k + j] -= t * den[j];
    }
    for (int j = 0; j < dn; ++j)
        if (num[j] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

}  // namespace

std::vector<i64> cyclotomic_polynomial(int M) {
    static std::map<int, std::vector<i64>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return it->second;
    }
    std::vector<i64> p(M + 1, 0);
    p[0] = -1;
    p[M] = 1;
    for (int d = 1; d < M; ++d)
        if (M % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lk(mu);
    cache[M] = p;
    return p;
}

const CycloField& CycloField::get(int M) {
    static std::map<int, std::unique_ptr<CycloField>> cache;
    static std::mutex mu;
    if (M < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return *it->second;
    }
    auto f = std::make_unique<CycloField>();
    f->M = M;
    f->Phi = cyclotomic_polynomial(M);
    f->phi = (int)f->Phi.size() - 1;
    int R = std::max(M, 2 * f->phi);
    f->red.assign(R, std::vector<i64>(f->phi, 0));
    for (int j = 0; j < R; ++j) {
        if (j < f->phi) {
            f->red[j][j] = 1;
            continue;
        }
        std::vector<i64> v(f->phi + 1, 0);
        for (int i = 0; i < f->phi; ++i) v[i + 1] = f->red[j - 1][i];
        i64 t = v[f->phi];
        for (int i = 0; i <= f->phi; ++i) v[i] -= t * f->Phi[i];
        for (int i = 0; i < f->phi; ++i) f->red[j][i] = v[i];
    }
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[M];
    if (!slot) slot = std::move(f);
    return *slot;
}

Cyclo::Cyclo(long v) {
    if (v != 0) c_.assign(1, mpz_class(v));
}

Cyclo Cyclo::rational(const mpq_class& q) {
    Cyclo r;
    if (q != 0) {
        r.c_.assign(1, q.get_num());
        r.den_ = q.get_den();
    }
    return r;
}

Cyclo Cyclo::root(int M, i64 e) {
    const auto& F = CycloField::get(M);
    Cyclo r;
    r.M_ = M;
    const auto& v = F.red[mod(e, M)];
    r.c_.resize(F.phi);
    for (int i = 0; i < F.phi; ++i) r.c_[i] = v[i];
    r.normalize();
    return r;
}

Cyclo Cyclo::from_coeffs(int M, const std::vector<mpq_class>& coeffs) {
    const auto& F = CycloField::get(M);
    Cyclo r;
    r.M_ = M;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Cyclo t = root(M, (i64)i);
        t *= rational(coeffs[i]);
        r += t;
    }
    (void)F;
    return r;
}

void Cyclo::normalize() {
    bool zero = true;
    for (auto& x : c_)
        if (x != 0) { zero = false; break; }
    if (zero) {
        c_.clear();
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : c_) x = -x;
    }
    mpz_class g = den_;
    for (auto& x : c_) {
        if (g == 1) break;
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g != 1) {
        den_ /= g;
        for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::is_one() const { return is_rational() && !c_.empty() && c_[0] == 1 && den_ == 1; }

mpq_class Cyclo::rational_value() const {
    if (!is_rational()) throw std::logic_error("not rational");
    if (c_.empty()) return 0;
    mpq_class q(c_[0], den_);
    q.canonicalize();
    return q;
}

std::vector<mpq_class> Cyclo::coeffs() const {
    int phi = CycloField::get(M_).phi;
    std::vector<mpq_class> out(phi, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[i] = mpq_class(c_[i], den_);
        out[i].canonicalize();
    }
    return out;
}

Cyclo Cyclo::lifted(int L) const {
    if (L == M_) return *this;
    if (L % M_ != 0) throw std::invalid_argument("lift target must be a multiple");
    const auto& F = CycloField::get(L);
    Cyclo r;
    r.M_ = L;
    if (c_.empty()) return r;
    r.c_.assign(F.phi, 0);
    int step = L / M_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& v = F.red[(i * step) % L];
        for (int k = 0; k < F.phi; ++k)
            if (v[k] != 0) r.c_[k] += c_[i] * v[k];
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

void Cyclo::align(Cyclo& o) {
    if (M_ == o.M_) return;
    int L = (int)lcm(M_, o.M_);
    if (M_ != L) *this = lifted(L);
    if (o.M_ != L) o = o.lifted(L);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty() && (M_ == o.M_ || M_ == 1)) {
        *this = o;
        return *this;
    }
    Cyclo b = o;
    if (M_ != b.M_) {
        if (b.is_rational() && b.M_ == 1) {
            b.M_ = M_;
        } else {
            align(b);
        }
    }
    int phi = CycloField::get(M_).phi;
    if (c_.empty()) c_.assign(phi, 0);
    if ((int)c_.size() < phi) c_.resize(phi, 0);
    if (den_ == b.den_) {
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    } else {
        for (auto& x : c_) x *= b.den_;
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i] * den_;
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (c_.empty()) {
        if (o.M_ > M_ && o.M_ % M_ == 0) M_ = o.M_;
        return *this;
    }
    if (o.c_.empty()) {
        *this = Cyclo();
        return *this;
    }
    if (o.is_rational()) {
        for (auto& x : c_) x *= o.c_[0];
        den_ *= o.den_;
        if (o.M_ != 1 && o.M_ != M_) *this = lifted((int)lcm(M_, o.M_));
        normalize();
        return *this;
    }
    if (is_rational()) {
        mpz_class s = c_[0], dd = den_;
        int keepM = M_;
        *this = o;
        for (auto& x : c_) x *= s;
        den_ *= dd;
        if (keepM != 1 && keepM != M_) *this = lifted((int)lcm(M_, keepM));
        normalize();
        return *this;
    }
    Cyclo b = o;
    align(b);
    const auto& F = CycloField::get(M_);
    int phi = F.phi;
    std::vector<mpz_class> p(2 * phi, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) p[i + j] += c_[i] * b.c_[j];
    }
    std::vector<mpz_class> r(phi, 0);
    for (int i = 0; i < phi; ++i) r[i] = p[i];
    for (int j = phi; j < 2 * phi; ++j) {
        if (p[j] == 0) continue;
        const auto& v = F.red[j];
        for (int k = 0; k < phi; ++k)
            if (v[k] != 0) r[k] += p[j] * v[k];
    }
    c_ = std::move(r);
    den_ *= b.den_;
    normalize();
    return *this;
}

Cyclo Cyclo::conjugate(i64 k) const {
    if (c_.empty() || M_ <= 2) return *this;
    const auto& F = CycloField::get(M_);
    Cyclo r;
    r.M_ = M_;
    r.c_.assign(F.phi, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& v = F.red[mod((i64)i * k, M_)];
        for (int t = 0; t < F.phi; ++t)
            if (v[t] != 0) r.c_[t] += c_[i] * v[t];
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

Cyclo Cyclo::inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of zero");
    if (is_rational()) {
        Cyclo r;
        r.M_ = M_;
        r.c_.assign(1, den_);
        r.den_ = c_[0];
        r.normalize();
        return r;
    }
    // product of the nontrivial conjugates; a * prod = norm (rational)
    Cyclo prod(1);
    for (i64 k = 2; k < M_; ++k)
        if (gcd(k, M_) == 1) prod *= conjugate(k);
    Cyclo nrm = *this * prod;
    if (!nrm.is_rational()) throw std::logic_error("norm not rational");
    return prod * nrm.inverse();
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

Cyclo Cyclo::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::optional<i64> Cyclo::root_exponent(int L) const {
    if (c_.empty() || den_ != 1) return std::nullopt;
    int K = M_ == 1 ? L : (int)lcm(M_, L);
    Cyclo v = lifted(K);
    const auto& F = CycloField::get(K);
    for (int e = 0; e < K; ++e) {
        bool eq = true;
        for (int i = 0; i < F.phi && eq; ++i) {
            mpz_class ci = i < (int)v.c_.size() ? v.c_[i] : mpz_class(0);
            if (ci != F.red[e][i]) eq = false;
        }
        if (eq) {
            if (K == L) return e;
            if ((i64)e * L % K != 0) return std::nullopt;
            return (i64)e * L / K;
        }
    }
    return std::nullopt;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
    if (a.is_rational() && b.is_rational()) return a.den_ == b.den_ && a.c_[0] == b.c_[0];
    if (a.is_rational() != b.is_rational() && a.M_ == b.M_) return false;
    Cyclo x = a, y = b;
    x.align(y);
    if (x.den_ != y.den_) return false;
    std::size_t n = std::max(x.c_.size(), y.c_.size());
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class xi = i < x.c_.size() ? x.c_[i] : mpz_class(0);
        mpz_class yi = i < y.c_.size() ? y.c_[i] : mpz_class(0);
        if (xi != yi) return false;
    }
    return true;
}

std::string Cyclo::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class q(c_[i], den_);
        q.canonicalize();
        bool neg = q < 0;
        if (neg) q = -q;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << q.get_str();
        } else {
            if (q != 1) os << q.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Cyclo Cyclo::parse(const std::string& raw, int M) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ') s += ch;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    Cyclo r;
    if (!s.empty() && (s[0] == 'z' || s[0] == 'Z')) {
        i64 e = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw std::invalid_argument("bad root syntax: " + raw);
            e = std::stoll(s.substr(2));
        }
        r = Cyclo::root(M, e);
    } else {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar: " + raw);
        q.canonicalize();
        r = Cyclo::rational(q);
    }
    return neg ? -r : r;
}

}  // namespace mh
