#include "eqp/integral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eqp {

int DeltaSymbol::cmp(const DeltaSymbol& o) const {
    if (degenerate != o.degenerate) return degenerate < o.degenerate ? -1 : 1;
    if (args.size() != o.args.size()) return args.size() < o.args.size() ? -1 : 1;
    for (size_t j = 0; j < args.size(); ++j) {
        int c = args[j].cmp(o.args[j]);
        if (c != 0) return c;
    }
    return 0;
}

DistValue DistValue::scalar(const ParamScalar& c) {
    DistValue out(c.field());
    out.add_part({}, c);
    return out;
}

bool DistValue::has_degenerate() const {
    for (const auto& [d, c] : t_)
        if (d.degenerate > 0) return true;
    return false;
}

ParamScalar DistValue::scalar_part() const {
    auto it = t_.find(DeltaSymbol{});
    return it == t_.end() ? ParamScalar::zero(*F_) : it->second;
}

void DistValue::add_part(const DeltaSymbol& d, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

DistValue DistValue::operator+(const DistValue& o) const {
    DistValue out = *this;
    if (out.F_ == nullptr) out.F_ = o.F_;
    for (const auto& [d, c] : o.t_) out.add_part(d, c);
    return out;
}

DistValue DistValue::operator-(const DistValue& o) const {
    DistValue out = *this;
    if (out.F_ == nullptr) out.F_ = o.F_;
    for (const auto& [d, c] : o.t_) out.add_part(d, -c);
    return out;
}

DistValue DistValue::operator*(const ParamScalar& s) const {
    DistValue out(*F_);
    for (const auto& [d, c] : t_) {
        ParamScalar v = c * s;
        // coefficients live modulo the delta arguments
        for (const auto& g : d.args) v = ParamScalar::reduce_mod(v, g);
        out.add_part(d, v);
    }
    return out;
}

bool DistValue::operator==(const DistValue& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
        if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
}

std::string DistValue::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        int tp = d.two_pi_power();
        if (tp == 1) os << "*2pi";
        else if (tp > 1) os << "*(2pi)^" << tp;
        for (const auto& g : d.args) os << "*delta(" << g.str() << ")";
        if (d.degenerate == 1) os << "*delta(0)";
        else if (d.degenerate > 1) os << "*delta(0)^" << d.degenerate;
    }
    return os.str();
}

ParamScalar canonical_delta_arg(const ParamScalar& g) {
    ParamScalar n = -g;
    return g.cmp(n) >= 0 ? g : n;
}

ParamScalar integral_reduced(const AElement& x) {
    const CycField& F = x.field();
    ParamScalar out(F);
    for (const auto& [mono, c] : x.terms())
        if (mono.n == F.p - 1 && mono.m == F.p - 1 && mono.k == 0)
            out += c * Cyc::q(F, -1);
    return out;
}

ParamScalar integral_S(const AElement& x) {
    const CycField& F = x.field();
    ParamScalar out(F);
    for (const auto& [mono, c] : x.terms()) {
        if (mono.n != 0 || mono.m != 0)
            throw std::domain_error("integral_S: element is not in the circle subalgebra");
        if (mono.k == 0) out += c;
    }
    return out;
}

namespace {

/// Integrates z^a exp(u z) over one coordinate.  Returns false when the term
/// vanishes; otherwise appends a delta argument or bumps the degenerate count.
bool integrate_direction(const CycField& F, int a, const ParamScalar& u, DeltaSymbol& sym) {
    if (a > 0) return false;  // a z-derivative, integrates to zero
    if (u.is_zero()) {
        sym.degenerate += 1;
        return true;
    }
    ParamScalar arg = u * (-Cyc::i(F));
    if (arg.conj() != arg)
        throw std::domain_error("integral_C: exponent is not purely oscillatory");
    sym.args.push_back(canonical_delta_arg(arg));
    return true;
}

bool z_part_integral(const CycField& F, const EMonomial& m, DeltaSymbol& sym) {
    if (!integrate_direction(F, m.za, m.u, sym)) return false;
    if (!integrate_direction(F, m.zb, m.v, sym)) return false;
    std::sort(sym.args.begin(), sym.args.end(),
              [](const ParamScalar& a, const ParamScalar& b) { return a.cmp(b) < 0; });
    return true;
}

ParamScalar reduce_coeff(ParamScalar c, const DeltaSymbol& sym) {
    for (const auto& g : sym.args) c = ParamScalar::reduce_mod(c, g);
    return c;
}

}  // namespace

DistValue integral_C(const EElement& f) {
    const CycField& F = f.field();
    DistValue out(F);
    for (const auto& [m, c] : f.terms()) {
        if (m.a != AMonomial{})
            throw std::domain_error("integral_C: element is not a pure function of z");
        DeltaSymbol sym;
        if (!z_part_integral(F, m, sym)) continue;
        out.add_part(sym, reduce_coeff(c, sym));
    }
    return out;
}

DistValue integral_E(const EElement& Fel) {
    const CycField& F = Fel.field();
    DistValue out(F);
    for (const auto& [m, c] : Fel.terms()) {
        if (m.a.n != F.p - 1 || m.a.m != F.p - 1 || m.a.k != 0) continue;
        DeltaSymbol sym;
        if (!z_part_integral(F, m, sym)) continue;
        out.add_part(sym, reduce_coeff(c * Cyc::q(F, -1), sym));
    }
    return out;
}

ParamScalar herm_reduced(const AElement& a, const AElement& b) {
    return integral_reduced(a * b.star());
}

ParamScalar herm_S(const AElement& a, const AElement& b) {
    return integral_S(a.star() * b);
}

DistValue herm_E(const EElement& F, const EElement& G) { return integral_E(F * G.star()); }

std::vector<std::vector<ParamScalar>> gram_matrix(const CycField& F, GramSpace space) {
    std::vector<AElement> basis;
    if (space == GramSpace::SO) {
        for (int n = 0; n < F.p; ++n) basis.push_back(AElement::delta(F, n));
    } else {
        for (int n = 0; n < F.p; ++n)
            for (int m = 0; m < F.p; ++m) basis.push_back(AElement::monomial(F, {n, m, 0}));
    }
    size_t N = basis.size();
    std::vector<std::vector<ParamScalar>> G(N, std::vector<ParamScalar>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            G[i][j] = space == GramSpace::SO ? herm_S(basis[i], basis[j])
                                             : herm_reduced(basis[i], basis[j]);
    return G;
}

Signature gram_signature(const CycField& F, GramSpace space) {
    auto G = gram_matrix(F, space);
    const int p = F.p;
    size_t N = G.size();
    auto partner = [&](size_t i) -> size_t {
        if (space == GramSpace::SO) return (p - static_cast<int>(i)) % p;
        int n = static_cast<int>(i) / p, m = static_cast<int>(i) % p;
        return static_cast<size_t>((p - 1 - n) * p + (p - 1 - m));
    };
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            if (!G[i][j].is_zero() && j != partner(i))
                throw std::logic_error("gram_signature: unexpected sparsity pattern");
    Signature sig;
    for (size_t i = 0; i < N; ++i) {
        size_t j = partner(i);
        if (i < j) {
            if (G[i][j].is_zero()) sig.zero += 2;
            else { sig.pos += 1; sig.neg += 1; }  // anti-diagonal 2x2 block
        } else if (i == j) {
            if (G[i][i].is_zero()) { sig.zero += 1; continue; }
            std::complex<double> v = G[i][i].constant_part().embed();
            if (std::abs(v.imag()) > 1e-9)
                throw std::logic_error("gram_signature: non-real diagonal entry");
            if (v.real() > 0) sig.pos += 1;
            else sig.neg += 1;
        }
    }
    return sig;
}

namespace {

using Row = std::map<int, Cyc>;

void reduce_row(Row& r, const std::map<int, Row>& pivots) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = r.begin(); it != r.end(); ++it) {
            auto pv = pivots.find(it->first);
            if (pv == pivots.end()) continue;
            Cyc f = it->second;
            for (const auto& [col, coef] : pv->second) {
                auto [slot, fresh] = r.emplace(col, Cyc::zero(coef.field()));
                slot->second -= f * coef;
                if (slot->second.is_zero()) r.erase(slot);
            }
            changed = true;
            break;
        }
    }
}

}  // namespace

FunctionalSpace invariant_functional_space(const CycField& F) {
    const int p = F.p;
    const int N = p * p * p;
    auto idx = [&](const AMonomial& m) { return (m.n * p + m.m) * p + m.k; };

    std::map<int, Row> pivots;  // pivot column -> normalized reduced row
    auto insert_row = [&](Row r) {
        reduce_row(r, pivots);
        if (r.empty()) return;
        int pc = r.begin()->first;
        Cyc inv = r.begin()->second.inverse();
        for (auto& [col, coef] : r) coef *= inv;
        for (auto& [col, prow] : pivots) {
            auto hit = prow.find(pc);
            if (hit == prow.end()) continue;
            Cyc f = hit->second;
            for (const auto& [c2, coef] : r) {
                auto [slot, fresh] = prow.emplace(c2, Cyc::zero(F));
                slot->second -= f * coef;
                if (slot->second.is_zero()) prow.erase(slot);
            }
        }
        pivots.emplace(pc, std::move(r));
    };

    for (int n = 0; n < p; ++n)
        for (int m = 0; m < p; ++m)
            for (int k = 0; k < p; ++k) {
                AMonomial a{n, m, k};
                ATensor d = AElement::monomial(F, a).coproduct();
                std::map<AMonomial, Row> left, right;
                for (const auto& [legs, c] : d.terms()) {
                    Cyc cc = c.constant_part();
                    left[legs.first].emplace(idx(legs.second), Cyc::zero(F)).first->second += cc;
                    right[legs.second].emplace(idx(legs.first), Cyc::zero(F)).first->second += cc;
                }
                for (auto* side : {&left, &right})
                    for (auto& [leg, row] : *side) {
                        Row r;
                        for (const auto& [col, coef] : row)
                            if (!coef.is_zero()) r[col] = coef;
                        auto slot = r.emplace(idx(a), Cyc::zero(F)).first;
                        if (leg == AMonomial{}) slot->second -= Cyc::one(F);
                        if (slot->second.is_zero()) r.erase(slot);
                        if (!r.empty()) insert_row(std::move(r));
                    }
            }

    FunctionalSpace out;
    out.dimension = N - static_cast<int>(pivots.size());
    if (out.dimension >= 1) {
        // one spanning solution: set the first free variable to 1
        int free_col = -1;
        for (int c = 0; c < N && free_col < 0; ++c)
            if (!pivots.count(c)) free_col = c;
        std::vector<Cyc> x(N, Cyc::zero(F));
        x[free_col] = Cyc::one(F);
        for (const auto& [pc, row] : pivots) {
            auto hit = row.find(free_col);
            if (hit != row.end()) x[pc] = -hit->second;
        }
        for (int n = 0; n < p; ++n)
            for (int m = 0; m < p; ++m)
                for (int k = 0; k < p; ++k)
                    if (!x[idx({n, m, k})].is_zero()) out.basis[{n, m, k}] = x[idx({n, m, k})];
    }
    return out;
}

}  // namespace eqp
