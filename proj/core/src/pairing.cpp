#include "eqp/pairing.hpp"

#include <mutex>

namespace eqp {

namespace {

enum { GP_PLUS, GP_MINUS, GSMALL_PLUS, GSMALL_MINUS, GKAPPA };

// leftmost generator of the PBW word, or -1 when the word is empty
int peel(UMonomial& w) {
    if (w.t > 0) { --w.t; return GP_PLUS; }
    if (w.s > 0) { --w.s; return GP_MINUS; }
    if (w.n > 0) { --w.n; return GSMALL_PLUS; }
    if (w.m > 0) { --w.m; return GSMALL_MINUS; }
    if (w.k > 0) { --w.k; return GKAPPA; }
    return -1;
}

}  // namespace

ParamScalar Pairing::gen_pair(int which, const EMonomial& m) const {
    const AMonomial& a = m.a;
    switch (which) {
        case GKAPPA:
            if (a.n == 0 && a.m == 0 && m.za == 0 && m.zb == 0)
                return ParamScalar::from_cyc(Cyc::q(F_, a.k));
            return ParamScalar::zero(F_);
        case GSMALL_PLUS:
            if (a.n == 1 && a.m == 0 && m.za == 0 && m.zb == 0)
                return ParamScalar::from_cyc(Cyc::i(F_) * Cyc::q_half(F_, 1) * Cyc::q(F_, a.k));
            return ParamScalar::zero(F_);
        case GSMALL_MINUS:
            if (a.n == 0 && a.m == 1 && m.za == 0 && m.zb == 0)
                return ParamScalar::from_cyc(Cyc::i(F_) * Cyc::q_half(F_, -1) * Cyc::q(F_, a.k));
            return ParamScalar::zero(F_);
        case GP_PLUS:
            if (a.n != 0 || a.m != 0) return ParamScalar::zero(F_);
            if (m.za == 1 && m.zb == 0) return ParamScalar::from_cyc(Cyc::i(F_));
            if (m.za == 0 && m.zb == 0) return m.u * Cyc::i(F_);
            return ParamScalar::zero(F_);
        case GP_MINUS:
            if (a.n != 0 || a.m != 0) return ParamScalar::zero(F_);
            if (m.za == 0 && m.zb == 1) return ParamScalar::from_cyc(Cyc::i(F_));
            if (m.za == 0 && m.zb == 0) return m.v * Cyc::i(F_);
            return ParamScalar::zero(F_);
    }
    return ParamScalar::zero(F_);
}

ParamScalar Pairing::pair_mono(const UMonomial& w, const EMonomial& mono) {
    if (w.word_length() == 0) {
        bool hit = mono.a.n == 0 && mono.a.m == 0 && mono.za == 0 && mono.zb == 0;
        return hit ? ParamScalar::one(F_) : ParamScalar::zero(F_);
    }
    auto key = std::make_pair(w, mono);
    {
        std::shared_lock lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    UMonomial rest = w;
    int g = peel(rest);
    ETensor d = EElement::monomial(F_, mono, ParamScalar::one(F_)).coproduct();
    ParamScalar acc(F_);
    for (const auto& [legs, c] : d.terms()) {
        ParamScalar gp = gen_pair(g, legs.first);
        if (gp.is_zero()) continue;
        ParamScalar tail = pair_mono(rest, legs.second);
        if (tail.is_zero()) continue;
        acc += c * gp * tail;
    }
    {
        std::unique_lock lk(mu_);
        memo_.emplace(key, acc);
    }
    return acc;
}

ParamScalar Pairing::pair(const UElement& x, const EElement& f) {
    ParamScalar acc(F_);
    for (const auto& [w, cx] : x.terms())
        for (const auto& [mono, cf] : f.terms()) {
            ParamScalar v = pair_mono(w, mono);
            if (!v.is_zero()) acc += cx * cf * v;
        }
    return acc;
}

EElement Pairing::conv_right(const EElement& f, const UElement& x) {
    ETensor d = f.coproduct();
    EElement out(F_);
    for (const auto& [legs, c] : d.terms()) {
        ParamScalar v(F_);
        for (const auto& [w, cx] : x.terms()) {
            ParamScalar pv = pair_mono(w, legs.first);
            if (!pv.is_zero()) v += cx * pv;
        }
        if (!v.is_zero()) out.add_term(legs.second, c * v);
    }
    return out;
}

EElement Pairing::conv_left(const EElement& f, const UElement& x) {
    ETensor d = f.coproduct();
    EElement out(F_);
    for (const auto& [legs, c] : d.terms()) {
        ParamScalar v(F_);
        for (const auto& [w, cx] : x.terms()) {
            ParamScalar pv = pair_mono(w, legs.second);
            if (!pv.is_zero()) v += cx * pv;
        }
        if (!v.is_zero()) out.add_term(legs.first, c * v);
    }
    return out;
}

Cyc pair_closed(const CycField& F, const UMonomial& w,
                int tp, int sp, int np, int mp, int kp) {
    if (w.t != tp || w.s != sp || w.n != np || w.m != mp) return Cyc::zero(F);
    if (((w.k + w.n + w.m) % F.p) != kp % F.p) return Cyc::zero(F);
    mpq_class ord(1);
    for (int j = 2; j <= w.t; ++j) ord *= j;
    for (int j = 2; j <= w.s; ++j) ord *= j;
    return Cyc::i(F).pow(w.n + w.m + w.t + w.s) * Cyc::q_half(F, w.n - w.m) *
           Cyc::q(F, -static_cast<long>(w.n) * w.m) * Cyc(F, ord) *
           q_fact(F, w.n) * q_fact(F, w.m);
}

}  // namespace eqp
