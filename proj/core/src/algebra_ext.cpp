#include "eqp/algebra_ext.hpp"

#include <cassert>
#include <sstream>

namespace eqp {

namespace {

mpq_class binom(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return mpq_class(b);
}

}  // namespace

EElement::EElement(const AElement& a) : F_(&a.field()) {
    for (const auto& [mono, c] : a.terms()) {
        EMonomial e;
        e.a = mono;
        e.u = ParamScalar::zero(*F_);
        e.v = ParamScalar::zero(*F_);
        t_[e] = c;
    }
}

EElement EElement::z(const CycField& F, int sign, int power) {
    EMonomial e;
    e.u = ParamScalar::zero(F);
    e.v = ParamScalar::zero(F);
    (sign >= 0 ? e.za : e.zb) = power;
    return monomial(F, e, ParamScalar::one(F));
}

EElement EElement::exp_z(const CycField& F, const ParamScalar& u, const ParamScalar& v) {
    EMonomial e;
    e.u = u;
    e.v = v;
    return monomial(F, e, ParamScalar::one(F));
}

EElement EElement::monomial(const CycField& F, const EMonomial& mono, const ParamScalar& coeff) {
    EElement out(F);
    out.add_term(mono, coeff);
    return out;
}

bool EElement::is_pure_z() const {
    for (const auto& [mono, c] : t_)
        if (mono.a != AMonomial{}) return false;
    return true;
}

bool EElement::is_reduced() const {
    for (const auto& [mono, c] : t_)
        if (!mono.z_trivial()) return false;
    return true;
}

AElement EElement::reduced_part() const {
    AElement out(*F_);
    for (const auto& [mono, c] : t_)
        if (mono.z_trivial()) out.add_term(mono.a, c);
    return out;
}

void EElement::add_term(const EMonomial& mono, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

EElement EElement::operator+(const EElement& o) const {
    assert(F_ == o.F_);
    EElement out = *this;
    for (const auto& [mono, c] : o.t_) out.add_term(mono, c);
    return out;
}

EElement EElement::operator-(const EElement& o) const {
    assert(F_ == o.F_);
    EElement out = *this;
    for (const auto& [mono, c] : o.t_) out.add_term(mono, -c);
    return out;
}

EElement EElement::operator-() const {
    EElement out(*F_);
    for (const auto& [mono, c] : t_) out.t_[mono] = -c;
    return out;
}

EElement EElement::operator*(const EElement& o) const {
    assert(F_ == o.F_);
    EElement out(*F_);
    for (const auto& [x, cx] : t_)
        for (const auto& [y, cy] : o.t_) {
            AMonomial am;
            Cyc f(*F_);
            if (!amono_mul(*F_, x.a, y.a, am, f)) continue;
            EMonomial mono;
            mono.a = am;
            mono.za = x.za + y.za;
            mono.zb = x.zb + y.zb;
            mono.u = x.u + y.u;
            mono.v = x.v + y.v;
            out.add_term(mono, cx * cy * f);
        }
    return out;
}

EElement EElement::operator*(const ParamScalar& s) const {
    EElement out(*F_);
    for (const auto& [mono, c] : t_) out.add_term(mono, c * s);
    return out;
}

EElement EElement::operator*(const Cyc& c) const { return *this * ParamScalar::from_cyc(c); }

EElement EElement::pow(int e) const {
    EElement acc = unit(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

bool EElement::operator==(const EElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
}

ATensor b_plus_minus(const CycField& F, int sign) {
    const int p = F.p;
    ATensor out(F);
    Cyc sgn = Cyc(F, mpq_class((p + 1) / 2 % 2 == 0 ? 1 : -1));
    for (int n = 1; n <= p - 1; ++n) {
        long e = (sign >= 0) ? static_cast<long>(n) * n : -static_cast<long>(n) * n;
        Cyc c = sgn * Cyc::q(F, e) * q_fact_inv(F, p - n) * q_fact_inv(F, n);
        AMonomial left = (sign >= 0) ? AMonomial{p - n, 0, n % p}
                                     : AMonomial{0, p - n, (p - n % p) % p};
        AMonomial right = (sign >= 0) ? AMonomial{n, 0, 0} : AMonomial{0, n, 0};
        out.add_term(left, right, ParamScalar::from_cyc(c));
    }
    return out;
}

namespace {

/// Substitutes z -> z (x) 1 + 1 (x) z in a pure function of z.
ETensor sub_z(const EElement& f) {
    const CycField& F = f.field();
    ETensor out(F);
    for (const auto& [mono, c] : f.terms()) {
        assert(mono.a == AMonomial{});
        for (int j = 0; j <= mono.za; ++j)
            for (int l = 0; l <= mono.zb; ++l) {
                EMonomial left, right;
                left.za = j;
                left.zb = l;
                left.u = mono.u;
                left.v = mono.v;
                right.za = mono.za - j;
                right.zb = mono.zb - l;
                right.u = mono.u;
                right.v = mono.v;
                out.add_term(left, right,
                             c * Cyc(F, binom(mono.za, j) * binom(mono.zb, l)));
            }
    }
    return out;
}

}  // namespace

ETensor EElement::coproduct() const {
    const CycField& F = *F_;
    ETensor bp = ETensor::lift(b_plus_minus(F, +1));
    ETensor bm = ETensor::lift(b_plus_minus(F, -1));
    ETensor bpbm = bp * bm;
    ETensor out(F);
    for (const auto& [mono, c] : t_) {
        EMonomial zpart;
        zpart.za = mono.za;
        zpart.zb = mono.zb;
        zpart.u = mono.u;
        zpart.v = mono.v;
        EElement f = EElement::monomial(F, zpart, ParamScalar::one(F));
        ETensor dz = sub_z(f);
        EElement fp = f.d_dz(+1), fm = f.d_dz(-1);
        if (!fp.is_zero()) dz += sub_z(fp) * bp;
        if (!fm.is_zero()) dz += sub_z(fm) * bm;
        EElement fpm = fp.d_dz(-1);
        if (!fpm.is_zero()) dz += sub_z(fpm) * bpbm;
        ETensor da = ETensor::lift(AElement::monomial(F, mono.a).coproduct());
        out += da * dz * c;
    }
    return out;
}

ParamScalar EElement::counit() const {
    ParamScalar out(*F_);
    for (const auto& [mono, c] : t_)
        if (mono.za == 0 && mono.zb == 0 && mono.a.n == 0 && mono.a.m == 0) out += c;
    return out;
}

EElement EElement::antipode() const {
    const CycField& F = *F_;
    EElement out(F);
    for (const auto& [mono, c] : t_) {
        AElement sa = AElement::monomial(F, mono.a).antipode();
        EMonomial z;
        z.za = mono.za;
        z.zb = mono.zb;
        z.u = -mono.u;
        z.v = -mono.v;
        Cyc sgn = Cyc(F, mpq_class((mono.za + mono.zb) % 2 == 0 ? 1 : -1));
        out += EElement(sa) * EElement::monomial(F, z, c * sgn);
    }
    return out;
}

EElement EElement::star() const {
    const CycField& F = *F_;
    EElement out(F);
    for (const auto& [mono, c] : t_) {
        AElement sa = AElement::monomial(F, mono.a).star();
        EMonomial z;
        z.za = mono.za;
        z.zb = mono.zb;
        z.u = mono.u.conj();
        z.v = mono.v.conj();
        out += EElement(sa) * EElement::monomial(F, z, c.conj());
    }
    return out;
}

EElement EElement::d_dz(int sign) const {
    const CycField& F = *F_;
    EElement out(F);
    for (const auto& [mono, c] : t_) {
        int deg = (sign >= 0) ? mono.za : mono.zb;
        const ParamScalar& expc = (sign >= 0) ? mono.u : mono.v;
        if (deg > 0) {
            EMonomial d = mono;
            (sign >= 0 ? d.za : d.zb) = deg - 1;
            out.add_term(d, c * Cyc(F, mpq_class(deg)));
        }
        if (!expc.is_zero()) out.add_term(mono, c * expc);
    }
    return out;
}

EElement EElement::rename_params(const std::map<Param, Param>& table) const {
    EElement out(*F_);
    for (const auto& [mono, c] : t_) {
        EMonomial m = mono;
        m.u = mono.u.rename(table);
        m.v = mono.v.rename(table);
        out.add_term(m, c.rename(table));
    }
    return out;
}

EElement EElement::subst_params(const std::map<Param, mpq_class>& values) const {
    EElement out(*F_);
    for (const auto& [mono, c] : t_) {
        EMonomial m = mono;
        m.u = mono.u.subst(values);
        m.v = mono.v.subst(values);
        out.add_term(m, c.subst(values));
    }
    return out;
}

std::string EElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (mono.a.n > 0) { os << "*eta+"; if (mono.a.n > 1) os << "^" << mono.a.n; }
        if (mono.a.m > 0) { os << "*eta-"; if (mono.a.m > 1) os << "^" << mono.a.m; }
        if (mono.a.k > 0) { os << "*delta"; if (mono.a.k > 1) os << "^" << mono.a.k; }
        if (mono.za > 0) { os << "*z+"; if (mono.za > 1) os << "^" << mono.za; }
        if (mono.zb > 0) { os << "*z-"; if (mono.zb > 1) os << "^" << mono.zb; }
        if (!mono.u.is_zero() || !mono.v.is_zero()) {
            os << "*exp(";
            bool need_plus = false;
            if (!mono.u.is_zero()) {
                os << "(" << mono.u.str() << ")*z+";
                need_plus = true;
            }
            if (!mono.v.is_zero()) {
                if (need_plus) os << " + ";
                os << "(" << mono.v.str() << ")*z-";
            }
            os << ")";
        }
    }
    return os.str();
}

ETensor ETensor::outer(const EElement& x, const EElement& y) {
    ETensor out(x.field());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term(a, b, ca * cb);
    return out;
}

ETensor ETensor::unit(const CycField& F) {
    return outer(EElement::unit(F), EElement::unit(F));
}

ETensor ETensor::lift(const ATensor& t) {
    ETensor out(t.field());
    for (const auto& [key, c] : t.terms()) {
        EMonomial a, b;
        a.a = key.first;
        a.u = ParamScalar::zero(t.field());
        a.v = a.u;
        b.a = key.second;
        b.u = a.u;
        b.v = a.u;
        out.add_term(a, b, c);
    }
    return out;
}

void ETensor::add_term(const EMonomial& a, const EMonomial& b, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = t_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ETensor ETensor::operator+(const ETensor& o) const {
    assert(F_ == o.F_);
    ETensor out = *this;
    for (const auto& [key, c] : o.t_) out.add_term(key.first, key.second, c);
    return out;
}

ETensor ETensor::operator-(const ETensor& o) const {
    assert(F_ == o.F_);
    ETensor out = *this;
    for (const auto& [key, c] : o.t_) out.add_term(key.first, key.second, -c);
    return out;
}

ETensor ETensor::operator*(const ETensor& o) const {
    assert(F_ == o.F_);
    ETensor out(*F_);
    for (const auto& [x, cx] : t_)
        for (const auto& [y, cy] : o.t_) {
            AMonomial la, ra;
            Cyc fl(*F_), fr(*F_);
            if (!amono_mul(*F_, x.first.a, y.first.a, la, fl)) continue;
            if (!amono_mul(*F_, x.second.a, y.second.a, ra, fr)) continue;
            EMonomial left, right;
            left.a = la;
            left.za = x.first.za + y.first.za;
            left.zb = x.first.zb + y.first.zb;
            left.u = x.first.u + y.first.u;
            left.v = x.first.v + y.first.v;
            right.a = ra;
            right.za = x.second.za + y.second.za;
            right.zb = x.second.zb + y.second.zb;
            right.u = x.second.u + y.second.u;
            right.v = x.second.v + y.second.v;
            out.add_term(left, right, cx * cy * (fl * fr));
        }
    return out;
}

ETensor ETensor::operator*(const ParamScalar& s) const {
    ETensor out(*F_);
    for (const auto& [key, c] : t_) out.add_term(key.first, key.second, c * s);
    return out;
}

ETensor ETensor::pow(int e) const {
    ETensor acc = unit(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

bool ETensor::operator==(const ETensor& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b) {
        if (!(a->first.first == b->first.first)) return false;
        if (!(a->first.second == b->first.second)) return false;
        if (a->second != b->second) return false;
    }
    return true;
}

EElement ETensor::contract_mul() const {
    EElement out(*F_);
    for (const auto& [key, c] : t_) {
        EElement prod = EElement::monomial(*F_, key.first, c) *
                        EElement::monomial(*F_, key.second, ParamScalar::one(*F_));
        out += prod;
    }
    return out;
}

EElement ETensor::apply_counit_left() const {
    EElement out(*F_);
    for (const auto& [key, c] : t_) {
        const EMonomial& l = key.first;
        if (l.za == 0 && l.zb == 0 && l.a.n == 0 && l.a.m == 0)
            out.add_term(key.second, c);
    }
    return out;
}

EElement ETensor::apply_counit_right() const {
    EElement out(*F_);
    for (const auto& [key, c] : t_) {
        const EMonomial& r = key.second;
        if (r.za == 0 && r.zb == 0 && r.a.n == 0 && r.a.m == 0)
            out.add_term(key.first, c);
    }
    return out;
}

ETensor ETensor::map_both_star() const {
    ETensor out(*F_);
    for (const auto& [key, c] : t_) {
        EElement l = EElement::monomial(*F_, key.first, ParamScalar::one(*F_)).star();
        EElement r = EElement::monomial(*F_, key.second, ParamScalar::one(*F_)).star();
        out += outer(l, r) * c;
    }
    return out;
}

}  // namespace eqp
