#include "eqp/algebra_a.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace eqp {

bool amono_mul(const CycField& F, AMonomial x, AMonomial y, AMonomial& out, Cyc& coeff) {
    if (x.n + y.n >= F.p || x.m + y.m >= F.p) return false;  // eta^p = 0
    out = AMonomial{x.n + y.n, x.m + y.m, (x.k + y.k) % F.p};
    // move eta+^{y.n} and eta-^{y.m} through eta-^{x.m} delta^{x.k}
    long e = 2L * x.m * y.n - 2L * x.k * (y.n + y.m);
    coeff = Cyc::q(F, e);
    return true;
}

AElement AElement::monomial(const CycField& F, AMonomial mono, const ParamScalar& coeff) {
    AElement out(F);
    out.add_term(mono, coeff);
    return out;
}

AElement AElement::monomial(const CycField& F, AMonomial mono) {
    return monomial(F, mono, ParamScalar::one(F));
}

AElement AElement::delta(const CycField& F, int e) {
    int k = ((e % F.p) + F.p) % F.p;
    return monomial(F, {0, 0, k});
}

ParamScalar AElement::coeff(AMonomial mono) const {
    auto it = t_.find(mono);
    return it == t_.end() ? ParamScalar::zero(*F_) : it->second;
}

void AElement::add_term(AMonomial mono, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AElement AElement::operator+(const AElement& o) const {
    assert(F_ == o.F_);
    AElement out = *this;
    for (const auto& [mono, c] : o.t_) out.add_term(mono, c);
    return out;
}

AElement AElement::operator-(const AElement& o) const {
    assert(F_ == o.F_);
    AElement out = *this;
    for (const auto& [mono, c] : o.t_) out.add_term(mono, -c);
    return out;
}

AElement AElement::operator-() const {
    AElement out(*F_);
    for (const auto& [mono, c] : t_) out.t_[mono] = -c;
    return out;
}

AElement AElement::operator*(const AElement& o) const {
    assert(F_ == o.F_);
    AElement out(*F_);
    for (const auto& [x, cx] : t_)
        for (const auto& [y, cy] : o.t_) {
            AMonomial mono;
            Cyc f(*F_);
            if (!amono_mul(*F_, x, y, mono, f)) continue;
            out.add_term(mono, cx * cy * f);
        }
    return out;
}

AElement AElement::operator*(const ParamScalar& s) const {
    AElement out(*F_);
    for (const auto& [mono, c] : t_) out.add_term(mono, c * s);
    return out;
}

AElement AElement::operator*(const Cyc& c) const {
    return *this * ParamScalar::from_cyc(c);
}

AElement AElement::pow(int e) const {
    AElement acc = unit(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

bool AElement::operator==(const AElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

ATensor AElement::coproduct() const {
    const CycField& F = *F_;
    ATensor out(F);
    for (const auto& [mono, c] : t_) {
        // Delta(eta+^n): sum_t [n t]_+ eta+^{n-t} delta^t (x) eta+^t
        ATensor dp(F);
        for (int t = 0; t <= mono.n; ++t)
            dp.add_term({mono.n - t, 0, t % F.p}, {t, 0, 0},
                        ParamScalar::from_cyc(q_binom(F, mono.n, t, +1)));
        // Delta(eta-^m): sum_s [m s]_- eta-^{m-s} delta^{-s} (x) eta-^s
        ATensor dm(F);
        for (int s = 0; s <= mono.m; ++s)
            dm.add_term({0, mono.m - s, ((-s) % F.p + F.p) % F.p}, {0, s, 0},
                        ParamScalar::from_cyc(q_binom(F, mono.m, s, -1)));
        // Delta(delta^k) = delta^k (x) delta^k
        ATensor dd(F);
        dd.add_term({0, 0, mono.k}, {0, 0, mono.k}, ParamScalar::one(F));
        out += dp * dm * dd * c;
    }
    return out;
}

ParamScalar AElement::counit() const {
    ParamScalar out(*F_);
    for (const auto& [mono, c] : t_)
        if (mono.n == 0 && mono.m == 0) out += c;  // eps(delta) = 1, eps(eta) = 0
    return out;
}

AElement AElement::antipode() const {
    const CycField& F = *F_;
    const int p = F.p;
    AElement s_eta_p = -(AElement::delta(F, p - 1) * eta_plus(F));  // -delta^{-1} eta+
    AElement s_eta_m = -(AElement::delta(F, 1) * eta_minus(F));     // -delta eta-
    AElement out(F);
    for (const auto& [mono, c] : t_) {
        // S is anti-multiplicative: S(delta)^k S(eta-)^m S(eta+)^n
        AElement term = AElement::delta(F, -mono.k);
        term *= s_eta_m.pow(mono.m);
        term *= s_eta_p.pow(mono.n);
        out += term * c;
    }
    return out;
}

AElement AElement::star() const {
    const CycField& F = *F_;
    AElement out(F);
    for (const auto& [mono, c] : t_) {
        // (eta+^n eta-^m delta^k)^* = delta^k eta-^m eta+^n, generators fixed
        AElement term = AElement::delta(F, mono.k);
        term *= AElement::monomial(F, {0, mono.m, 0});
        term *= AElement::monomial(F, {mono.n, 0, 0});
        out += term * c.conj();
    }
    return out;
}

std::string AElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (mono.n > 0) { os << "*eta+"; if (mono.n > 1) os << "^" << mono.n; }
        if (mono.m > 0) { os << "*eta-"; if (mono.m > 1) os << "^" << mono.m; }
        if (mono.k > 0) { os << "*delta"; if (mono.k > 1) os << "^" << mono.k; }
    }
    return os.str();
}

ATensor ATensor::outer(const AElement& x, const AElement& y) {
    ATensor out(x.field());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term(a, b, ca * cb);
    return out;
}

ATensor ATensor::unit(const CycField& F) {
    ATensor out(F);
    out.add_term({0, 0, 0}, {0, 0, 0}, ParamScalar::one(F));
    return out;
}

void ATensor::add_term(AMonomial a, AMonomial b, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = t_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ATensor ATensor::operator+(const ATensor& o) const {
    assert(F_ == o.F_);
    ATensor out = *this;
    for (const auto& [key, c] : o.t_) out.add_term(key.first, key.second, c);
    return out;
}

ATensor ATensor::operator-(const ATensor& o) const {
    assert(F_ == o.F_);
    ATensor out = *this;
    for (const auto& [key, c] : o.t_) out.add_term(key.first, key.second, -c);
    return out;
}

ATensor ATensor::operator*(const ATensor& o) const {
    assert(F_ == o.F_);
    ATensor out(*F_);
    for (const auto& [x, cx] : t_)
        for (const auto& [y, cy] : o.t_) {
            AMonomial left, right;
            Cyc fl(*F_), fr(*F_);
            if (!amono_mul(*F_, x.first, y.first, left, fl)) continue;
            if (!amono_mul(*F_, x.second, y.second, right, fr)) continue;
            out.add_term(left, right, cx * cy * (fl * fr));
        }
    return out;
}

ATensor ATensor::operator*(const ParamScalar& s) const {
    ATensor out(*F_);
    for (const auto& [key, c] : t_) out.add_term(key.first, key.second, c * s);
    return out;
}

ATensor ATensor::pow(int e) const {
    ATensor acc = unit(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

bool ATensor::operator==(const ATensor& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

AElement ATensor::contract_mul() const {
    AElement out(*F_);
    for (const auto& [key, c] : t_) {
        AMonomial mono;
        Cyc f(*F_);
        if (!amono_mul(*F_, key.first, key.second, mono, f)) continue;
        out.add_term(mono, c * f);
    }
    return out;
}

AElement ATensor::apply_counit_left() const {
    AElement out(*F_);
    for (const auto& [key, c] : t_)
        if (key.first.n == 0 && key.first.m == 0) out.add_term(key.second, c);
    return out;
}

AElement ATensor::apply_counit_right() const {
    AElement out(*F_);
    for (const auto& [key, c] : t_)
        if (key.second.n == 0 && key.second.m == 0) out.add_term(key.first, c);
    return out;
}

ATensor ATensor::map_left(AElement (AElement::*op)() const) const {
    ATensor out(*F_);
    for (const auto& [key, c] : t_) {
        AElement img = (AElement::monomial(*F_, key.first).*op)();
        for (const auto& [mono, cc] : img.terms()) out.add_term(mono, key.second, c * cc);
    }
    return out;
}

ATensor ATensor::map_right(AElement (AElement::*op)() const) const {
    ATensor out(*F_);
    for (const auto& [key, c] : t_) {
        AElement img = (AElement::monomial(*F_, key.second).*op)();
        for (const auto& [mono, cc] : img.terms()) out.add_term(key.first, mono, c * cc);
    }
    return out;
}

AElement zeta_idempotent(const CycField& F, long m) {
    AElement out(F);
    mpq_class inv_p(1, F.p);
    for (int n = 0; n < F.p; ++n)
        out.add_term({0, 0, n}, ParamScalar::from_cyc(Cyc::q(F, -static_cast<long>(n) * m) * inv_p));
    return out;
}

EBasisVector basis_e_pm(const CycField& F, int n, int m, int sign) {
    const int p = F.p;
    const int n0 = (p - 1) / 2;
    bool in_range = (n >= 0 && n < n0 && m >= 0 && m <= 2 * n0) ||
                    (n == n0 && m >= 0 && m <= n0);
    if (!in_range) throw std::domain_error("basis_e_pm: index outside the independence range");
    if (sign < 0 && n == n0 && m == n0)
        throw std::domain_error("basis_e_pm: e^-_{n0,n0} vanishes identically");
    AElement num = AElement::monomial(F, {p - 1 - n, p - 1 - m, 0});
    AElement low = AElement::monomial(F, {n, m, 0});
    num = (sign >= 0) ? num + low : num - low;
    Cyc norm_sq = Cyc::q(F, 2 * n + 1) + Cyc::q(F, -(2 * n + 1));
    // self-paired diagonal vector: the two numerator terms coincide, so the
    // numerator doubles and the normalizer squares to 4 instead of 2
    if (n == n0 && m == n0) norm_sq = Cyc(F, 4);
    return EBasisVector{num, norm_sq};
}

}  // namespace eqp
