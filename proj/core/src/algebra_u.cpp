#include "eqp/algebra_u.hpp"

#include <cassert>
#include <sstream>

namespace eqp {

namespace {

/// Normal-ordered product of two PBW monomials.  p_{+-} commute with each
/// other, kappa^k p+^n = q^{kn} p+^n kappa^k, kappa^k p-^m = q^{-km} p-^m kappa^k,
/// p_{+-}^p carries into the central P_{+-}.
void umono_mul(const CycField& F, UMonomial x, UMonomial y, UMonomial& out, Cyc& coeff) {
    coeff = Cyc::q(F, static_cast<long>(x.k) * y.n - static_cast<long>(x.k) * y.m);
    out.t = x.t + y.t;
    out.s = x.s + y.s;
    out.n = x.n + y.n;
    out.m = x.m + y.m;
    if (out.n >= F.p) { out.n -= F.p; out.t += 1; }
    if (out.m >= F.p) { out.m -= F.p; out.s += 1; }
    out.k = (x.k + y.k) % F.p;
}

}  // namespace

UElement UElement::monomial(const CycField& F, UMonomial mono) {
    return monomial(F, mono, ParamScalar::one(F));
}

UElement UElement::monomial(const CycField& F, UMonomial mono, const ParamScalar& c) {
    UElement out(F);
    out.add_term(mono, c);
    return out;
}

UElement UElement::kappa(const CycField& F, int e) {
    int k = ((e % F.p) + F.p) % F.p;
    return monomial(F, {0, 0, 0, 0, k});
}

void UElement::add_term(UMonomial mono, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

UElement UElement::operator+(const UElement& o) const {
    assert(F_ == o.F_);
    UElement out = *this;
    for (const auto& [mono, c] : o.t_) out.add_term(mono, c);
    return out;
}

UElement UElement::operator-(const UElement& o) const {
    assert(F_ == o.F_);
    UElement out = *this;
    for (const auto& [mono, c] : o.t_) out.add_term(mono, -c);
    return out;
}

UElement UElement::operator-() const {
    UElement out(*F_);
    for (const auto& [mono, c] : t_) out.t_[mono] = -c;
    return out;
}

UElement UElement::operator*(const UElement& o) const {
    assert(F_ == o.F_);
    UElement out(*F_);
    for (const auto& [x, cx] : t_)
        for (const auto& [y, cy] : o.t_) {
            UMonomial mono;
            Cyc f(*F_);
            umono_mul(*F_, x, y, mono, f);
            out.add_term(mono, cx * cy * f);
        }
    return out;
}

UElement UElement::operator*(const ParamScalar& s) const {
    UElement out(*F_);
    for (const auto& [mono, c] : t_) out.add_term(mono, c * s);
    return out;
}

UElement UElement::operator*(const Cyc& c) const { return *this * ParamScalar::from_cyc(c); }

UElement UElement::pow(int e) const {
    UElement acc = unit(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

bool UElement::operator==(const UElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

UTensor UElement::coproduct() const {
    const CycField& F = *F_;
    // generator coproducts
    UTensor dP_plus = UTensor::outer(P_plus(F), unit(F)) + UTensor::outer(unit(F), P_plus(F));
    UTensor dP_minus = UTensor::outer(P_minus(F), unit(F)) + UTensor::outer(unit(F), P_minus(F));
    UTensor dp_plus = UTensor::outer(p_plus(F), kappa(F)) + UTensor::outer(kappa(F, -1), p_plus(F));
    UTensor dp_minus = UTensor::outer(p_minus(F), kappa(F)) + UTensor::outer(kappa(F, -1), p_minus(F));
    UTensor dkappa = UTensor::outer(kappa(F), kappa(F));
    UTensor out(F);
    for (const auto& [mono, c] : t_) {
        UTensor term = dP_plus.pow(mono.t);
        term *= dP_minus.pow(mono.s);
        term *= dp_plus.pow(mono.n);
        term *= dp_minus.pow(mono.m);
        term *= dkappa.pow(mono.k);
        out += term * c;
    }
    return out;
}

ParamScalar UElement::counit() const {
    ParamScalar out(*F_);
    for (const auto& [mono, c] : t_)
        if (mono.t == 0 && mono.s == 0 && mono.n == 0 && mono.m == 0) out += c;
    return out;
}

UElement UElement::antipode() const {
    const CycField& F = *F_;
    UElement s_pp = p_plus(F) * (-Cyc::q(F, 1));
    UElement s_pm = p_minus(F) * (-Cyc::q(F, -1));
    UElement out(F);
    for (const auto& [mono, c] : t_) {
        // anti-multiplicative: S(kappa)^k S(p-)^m S(p+)^n S(P-)^s S(P+)^t
        UElement term = kappa(F, -mono.k);
        term *= s_pm.pow(mono.m);
        term *= s_pp.pow(mono.n);
        term *= P_minus(F).pow(mono.s) * Cyc(F, mpq_class(mono.s % 2 == 0 ? 1 : -1));
        term *= P_plus(F).pow(mono.t) * Cyc(F, mpq_class(mono.t % 2 == 0 ? 1 : -1));
        out += term * c;
    }
    return out;
}

UElement UElement::star() const {
    const CycField& F = *F_;
    UElement out(F);
    for (const auto& [mono, c] : t_) {
        // all generators are self-adjoint; reverse the word and reorder
        UElement term = kappa(F, mono.k);
        term *= monomial(F, {0, 0, 0, mono.m, 0});
        term *= monomial(F, {0, 0, mono.n, 0, 0});
        term *= monomial(F, {0, mono.s, 0, 0, 0});
        term *= monomial(F, {mono.t, 0, 0, 0, 0});
        out += term * c.conj();
    }
    return out;
}

std::string UElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (mono.t > 0) { os << "*P+"; if (mono.t > 1) os << "^" << mono.t; }
        if (mono.s > 0) { os << "*P-"; if (mono.s > 1) os << "^" << mono.s; }
        if (mono.n > 0) { os << "*p+"; if (mono.n > 1) os << "^" << mono.n; }
        if (mono.m > 0) { os << "*p-"; if (mono.m > 1) os << "^" << mono.m; }
        if (mono.k > 0) { os << "*kappa"; if (mono.k > 1) os << "^" << mono.k; }
    }
    return os.str();
}

UTensor UTensor::outer(const UElement& x, const UElement& y) {
    UTensor out(x.field());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term(a, b, ca * cb);
    return out;
}

UTensor UTensor::unit(const CycField& F) {
    UTensor out(F);
    out.add_term({}, {}, ParamScalar::one(F));
    return out;
}

void UTensor::add_term(UMonomial a, UMonomial b, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = t_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

UTensor UTensor::operator+(const UTensor& o) const {
    assert(F_ == o.F_);
    UTensor out = *this;
    for (const auto& [key, c] : o.t_) out.add_term(key.first, key.second, c);
    return out;
}

UTensor UTensor::operator-(const UTensor& o) const {
    assert(F_ == o.F_);
    UTensor out = *this;
    for (const auto& [key, c] : o.t_) out.add_term(key.first, key.second, -c);
    return out;
}

UTensor UTensor::operator*(const UTensor& o) const {
    assert(F_ == o.F_);
    UTensor out(*F_);
    for (const auto& [x, cx] : t_)
        for (const auto& [y, cy] : o.t_) {
            UMonomial left, right;
            Cyc fl(*F_), fr(*F_);
            // componentwise products (standard, unbraided tensor square)
            UElement l = UElement::monomial(*F_, x.first) * UElement::monomial(*F_, y.first);
            UElement r = UElement::monomial(*F_, x.second) * UElement::monomial(*F_, y.second);
            for (const auto& [lm, lc] : l.terms())
                for (const auto& [rm, rc] : r.terms())
                    out.add_term(lm, rm, cx * cy * lc * rc);
        }
    return out;
}

UTensor UTensor::operator*(const ParamScalar& s) const {
    UTensor out(*F_);
    for (const auto& [key, c] : t_) out.add_term(key.first, key.second, c * s);
    return out;
}

UTensor UTensor::pow(int e) const {
    UTensor acc = unit(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

bool UTensor::operator==(const UTensor& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

UElement UTensor::contract_mul() const {
    UElement out(*F_);
    for (const auto& [key, c] : t_)
        out += UElement::monomial(*F_, key.first, c) * UElement::monomial(*F_, key.second);
    return out;
}

UElement UTensor::apply_counit_left() const {
    UElement out(*F_);
    for (const auto& [key, c] : t_) {
        const UMonomial& l = key.first;
        if (l.t == 0 && l.s == 0 && l.n == 0 && l.m == 0) out.add_term(key.second, c);
    }
    return out;
}

UElement UTensor::apply_counit_right() const {
    UElement out(*F_);
    for (const auto& [key, c] : t_) {
        const UMonomial& r = key.second;
        if (r.t == 0 && r.s == 0 && r.n == 0 && r.m == 0) out.add_term(key.first, c);
    }
    return out;
}

UElement epsilon_ops(const CycField& F, int sign) {
    UElement p = (sign >= 0) ? UElement::p_plus(F) : UElement::p_minus(F);
    Cyc c = -Cyc::q_half(F, sign >= 0 ? -1 : 1);
    return p * UElement::kappa(F, -1) * c;
}

}  // namespace eqp
