#include "eqp/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace eqp {

namespace {

using Poly = std::vector<mpq_class>;  // coefficient of x^j at [j]

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Exact division of polynomials over Q; remainder must vanish.
Poly div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        trim(num);
    }
    assert(num.empty());
    return q;
}

/// n-th cyclotomic polynomial via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly pd = cyclotomic_poly(d, memo);
        num = div_exact(std::move(num), pd);
    }
    memo[n] = num;
    return num;
}

}  // namespace

CycField::CycField(int p_) : p(p_), order(4 * p_) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and >= 3");
    std::map<int, Poly> memo;
    phi = cyclotomic_poly(order, memo);
    degree = static_cast<int>(phi.size()) - 1;

    red.assign(order, std::vector<mpq_class>(degree, mpq_class(0)));
    for (int e = 0; e < degree; ++e) red[e][e] = 1;
    if (degree < order) {
        // x^degree = -(lower part of phi)  (phi is monic)
        for (int j = 0; j < degree; ++j) red[degree][j] = -phi[j];
        for (int e = degree + 1; e < order; ++e) {
            // shift red[e-1] by one and fold the top power back in
            const auto& prev = red[e - 1];
            auto& cur = red[e];
            mpq_class top = prev[degree - 1];
            for (int j = degree - 1; j >= 1; --j) cur[j] = prev[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (int j = 0; j < degree; ++j) cur[j] += top * red[degree][j];
        }
    }
}

const CycField& CycField::get(int p) {
    static std::mutex mx;
    static std::map<int, const CycField*> registry;
    std::lock_guard<std::mutex> lock(mx);
    auto it = registry.find(p);
    if (it == registry.end()) it = registry.emplace(p, new CycField(p)).first;
    return *it->second;
}

Cyc::Cyc(const CycField& F, const mpq_class& r) : F_(&F), c_(F.degree) { c_[0] = r; }

Cyc Cyc::zeta(const CycField& F, long e) {
    long n = F.order;
    long r = ((e % n) + n) % n;
    Cyc out(F);
    out.c_ = F.red[r];
    return out;
}

Cyc Cyc::q(const CycField& F, long e) { return zeta(F, 4 * e); }

// zeta^2 is the square root of q with (q^{1/2})^p = -1; the p-th-root branch
// q^{(p+1)/2} breaks the central pairing values at the p-th power carry.
Cyc Cyc::q_half(const CycField& F, long e) { return zeta(F, 2 * e); }

Cyc Cyc::i(const CycField& F) { return zeta(F, F.p); }

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    assert(F_ == o.F_);
    Cyc out(*F_);
    for (int j = 0; j < F_->degree; ++j) out.c_[j] = c_[j] + o.c_[j];
    return out;
}

Cyc Cyc::operator-(const Cyc& o) const {
    assert(F_ == o.F_);
    Cyc out(*F_);
    for (int j = 0; j < F_->degree; ++j) out.c_[j] = c_[j] - o.c_[j];
    return out;
}

Cyc Cyc::operator-() const {
    Cyc out(*F_);
    for (int j = 0; j < F_->degree; ++j) out.c_[j] = -c_[j];
    return out;
}

Cyc Cyc::operator*(const mpq_class& r) const {
    Cyc out(*F_);
    if (r == 0) return out;
    for (int j = 0; j < F_->degree; ++j) out.c_[j] = c_[j] * r;
    return out;
}

Cyc Cyc::operator*(const Cyc& o) const {
    assert(F_ == o.F_);
    const int d = F_->degree;
    // single-term fast path (q-powers and rationals are ubiquitous)
    int na = 0, nb = 0, ia = -1, ib = -1;
    for (int j = 0; j < d && na < 2; ++j)
        if (c_[j] != 0) { ++na; ia = j; }
    for (int j = 0; j < d && nb < 2; ++j)
        if (o.c_[j] != 0) { ++nb; ib = j; }
    if (na == 0 || nb == 0) return Cyc(*F_);
    if (na == 1 || nb == 1) {
        const Cyc& many = (na == 1) ? o : *this;
        int shift = (na == 1) ? ia : ib;
        mpq_class scale = (na == 1) ? c_[ia] : o.c_[ib];
        Cyc out(*F_);
        for (int j = 0; j < d; ++j) {
            if (many.c_[j] == 0) continue;
            const auto& r = F_->red[j + shift];  // j + shift < 2*degree <= order
            mpq_class cc = many.c_[j] * scale;
            for (int t = 0; t < d; ++t)
                if (r[t] != 0) out.c_[t] += cc * r[t];
        }
        return out;
    }
    std::vector<mpq_class> buf(2 * d - 1, mpq_class(0));
    for (int a = 0; a < d; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < d; ++b) {
            if (o.c_[b] == 0) continue;
            buf[a + b] += c_[a] * o.c_[b];
        }
    }
    Cyc out(*F_);
    for (int e = 0; e < static_cast<int>(buf.size()); ++e) {
        if (buf[e] == 0) continue;
        if (e < d) {
            out.c_[e] += buf[e];
        } else {
            const auto& r = F_->red[e];
            for (int t = 0; t < d; ++t)
                if (r[t] != 0) out.c_[t] += buf[e] * r[t];
        }
    }
    return out;
}

Cyc Cyc::conj() const {
    Cyc out(*F_);
    out.c_[0] = c_[0];
    for (int j = 1; j < F_->degree; ++j) {
        if (c_[j] == 0) continue;
        const auto& r = F_->red[F_->order - j];
        for (int t = 0; t < F_->degree; ++t)
            if (r[t] != 0) out.c_[t] += c_[j] * r[t];
    }
    return out;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    // extended Euclid in Q[x] against phi: u*this + v*phi = 1
    Poly r0 = F_->phi;
    Poly r1(c_.begin(), c_.end());
    trim(r1);
    Poly s0{}, s1{mpq_class(1)};  // coefficients of `this` in r0, r1
    while (true) {
        if (r1.size() == 1) break;
        // r0 = q*r1 + r2
        Poly q;
        Poly rem = r0;
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, mpq_class(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            trim(rem);
        }
        // s2 = s0 - q*s1
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), mpq_class(0));
        for (size_t a = 0; a < q.size(); ++a) {
            if (q[a] == 0) continue;
            for (size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        assert(!r1.empty());  // gcd(this, phi) must be a unit
    }
    mpq_class unit = r1[0];
    Cyc out(*F_);
    for (size_t j = 0; j < s1.size() && j < static_cast<size_t>(F_->degree); ++j)
        out.c_[j] = s1[j] / unit;
    // s1 may exceed the basis degree; fold it in via multiplication identity check
    if (s1.size() > static_cast<size_t>(F_->degree)) {
        Cyc acc(*F_);
        for (size_t j = 0; j < s1.size(); ++j) {
            if (s1[j] == 0) continue;
            acc += Cyc::zeta(*F_, static_cast<long>(j)) * (s1[j] / unit);
        }
        out = acc;
    }
    return out;
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc acc = Cyc::one(*F_);
    Cyc base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

int Cyc::cmp(const Cyc& o) const {
    assert(F_ == o.F_);
    for (int j = 0; j < F_->degree; ++j) {
        int c = ::cmp(c_[j], o.c_[j]);
        if (c != 0) return c;
    }
    return 0;
}

std::complex<double> Cyc::embed() const {
    std::complex<double> out(0.0, 0.0);
    for (int j = 0; j < F_->degree; ++j) {
        if (c_[j] == 0) continue;
        double ang = 2.0 * std::numbers::pi * j / F_->order;
        out += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return out;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = F_->degree - 1; j >= 0; --j) {
        if (c_[j] == 0) continue;
        mpq_class a = c_[j];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (j == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "w";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

namespace {

struct QTables {
    std::vector<Cyc> fact, fact_inv;
};

const QTables& q_tables(const CycField& F) {
    static std::mutex mx;
    static std::map<const CycField*, QTables> tables;
    std::lock_guard<std::mutex> lock(mx);
    auto it = tables.find(&F);
    if (it == tables.end()) {
        QTables t;
        t.fact.reserve(F.p);
        t.fact.push_back(Cyc::one(F));
        for (long n = 1; n < F.p; ++n) t.fact.push_back(t.fact.back() * q_int(F, n));
        for (long n = 0; n < F.p; ++n) t.fact_inv.push_back(t.fact[n].inverse());
        it = tables.emplace(&F, std::move(t)).first;
    }
    return it->second;
}

}  // namespace

Cyc q_int(const CycField& F, long n) {
    Cyc num = Cyc::q(F, n) - Cyc::q(F, -n);
    Cyc den = Cyc::q(F, 1) - Cyc::q(F, -1);
    return num * den.inverse();
}

Cyc q_fact(const CycField& F, long n) {
    if (n < 0 || n >= F.p) throw std::domain_error("q_fact: n must lie in [0, p-1]");
    return q_tables(F).fact[n];
}

Cyc q_fact_inv(const CycField& F, long n) {
    if (n < 0 || n >= F.p) throw std::domain_error("q_fact_inv: n must lie in [0, p-1]");
    return q_tables(F).fact_inv[n];
}

Cyc q_binom(const CycField& F, long n, long m, int sign) {
    if (m < 0 || m > n || n >= F.p) throw std::domain_error("q_binom: need 0 <= m <= n <= p-1");
    long e = m * (m - n);
    Cyc phase = (sign >= 0) ? Cyc::q(F, e) : Cyc::q(F, -e);
    return phase * q_fact(F, n) * q_fact_inv(F, n - m) * q_fact_inv(F, m);
}

}  // namespace eqp
