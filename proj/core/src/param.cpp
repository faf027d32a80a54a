#include "eqp/param.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace eqp {

const char* param_name(Param p) {
    switch (p) {
        case Param::LambdaPlus: return "lambda+";
        case Param::LambdaMinus: return "lambda-";
        case Param::LambdaPlusPrime: return "lambda+'";
        case Param::LambdaMinusPrime: return "lambda-'";
        case Param::ChiPlus: return "chi+";
        case Param::ChiMinus: return "chi-";
    }
    return "?";
}

std::optional<Param> param_from_name(const std::string& s) {
    for (int j = 0; j < kNumParams; ++j)
        if (s == param_name(static_cast<Param>(j))) return static_cast<Param>(j);
    return std::nullopt;
}

ParamScalar ParamScalar::from_cyc(const Cyc& c) {
    ParamScalar out(c.field());
    if (!c.is_zero()) out.t_[ParamExpo{}] = c;
    return out;
}

ParamScalar ParamScalar::param(const CycField& F, Param p, int e) {
    ParamScalar out(F);
    if (e < 0) throw std::domain_error("negative parameter exponent");
    ParamExpo ex{};
    ex[static_cast<int>(p)] = e;
    out.t_[ex] = Cyc::one(F);
    return out;
}

bool ParamScalar::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == ParamExpo{});
}

Cyc ParamScalar::constant_part() const {
    auto it = t_.find(ParamExpo{});
    return it == t_.end() ? Cyc::zero(*F_) : it->second;
}

void ParamScalar::add_term(const ParamExpo& e, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
    assert(F_ == nullptr || o.F_ == nullptr || F_ == o.F_);
    ParamScalar out = *this;
    if (out.F_ == nullptr) out.F_ = o.F_;
    for (const auto& [e, c] : o.t_) out.add_term(e, c);
    return out;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
    assert(F_ == nullptr || o.F_ == nullptr || F_ == o.F_);
    ParamScalar out = *this;
    if (out.F_ == nullptr) out.F_ = o.F_;
    for (const auto& [e, c] : o.t_) out.add_term(e, -c);
    return out;
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar out(*F_);
    for (const auto& [e, c] : t_) out.t_[e] = -c;
    return out;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
    assert(F_ == nullptr || o.F_ == nullptr || F_ == o.F_);
    ParamScalar out;
    out.F_ = F_ ? F_ : o.F_;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            ParamExpo e;
            for (int j = 0; j < kNumParams; ++j) e[j] = e1[j] + e2[j];
            out.add_term(e, c1 * c2);
        }
    return out;
}

ParamScalar ParamScalar::operator*(const Cyc& c) const {
    ParamScalar out(*F_);
    if (c.is_zero()) return out;
    for (const auto& [e, a] : t_) out.add_term(e, a * c);
    return out;
}

ParamScalar ParamScalar::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of a ParamScalar");
    ParamScalar acc = one(*F_);
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

ParamScalar ParamScalar::conj() const {
    ParamScalar out(*F_);
    for (const auto& [e, c] : t_) out.t_[e] = c.conj();
    return out;
}

ParamScalar ParamScalar::rename(const std::map<Param, Param>& table) const {
    ParamScalar out(*F_);
    for (const auto& [e, c] : t_) {
        ParamExpo ne{};
        for (int j = 0; j < kNumParams; ++j) {
            auto it = table.find(static_cast<Param>(j));
            int target = it == table.end() ? j : static_cast<int>(it->second);
            ne[target] += e[j];
        }
        out.add_term(ne, c);
    }
    return out;
}

ParamScalar ParamScalar::subst(const std::map<Param, mpq_class>& values) const {
    ParamScalar out(*F_);
    for (const auto& [e, c] : t_) {
        Cyc coeff = c;
        ParamExpo ne{};
        for (int j = 0; j < kNumParams; ++j) {
            auto it = values.find(static_cast<Param>(j));
            if (it == values.end()) {
                ne[j] = e[j];
            } else {
                mpq_class v(1);
                for (int r = 0; r < e[j]; ++r) v *= it->second;
                coeff = coeff * v;
            }
        }
        out.add_term(ne, coeff);
    }
    return out;
}

int ParamScalar::cmp(const ParamScalar& o) const {
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end() && b != o.t_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first ? -1 : 1;
        int c = a->second.cmp(b->second);
        if (c != 0) return c;
    }
    if (a != t_.end()) return 1;
    if (b != o.t_.end()) return -1;
    return 0;
}

std::complex<double> ParamScalar::embed(const std::map<Param, double>& assignment) const {
    std::complex<double> out(0.0, 0.0);
    for (const auto& [e, c] : t_) {
        double v = 1.0;
        for (int j = 0; j < kNumParams; ++j) {
            if (e[j] == 0) continue;
            auto it = assignment.find(static_cast<Param>(j));
            if (it == assignment.end())
                throw std::invalid_argument(std::string("unassigned parameter ") +
                                            param_name(static_cast<Param>(j)));
            for (int r = 0; r < e[j]; ++r) v *= it->second;
        }
        out += c.embed() * v;
    }
    return out;
}

ParamScalar ParamScalar::reduce_mod(const ParamScalar& c, const ParamScalar& g) {
    if (g.is_zero()) return c;
    // leading term of g under the map order
    const auto& lead = *g.t_.rbegin();
    ParamScalar r = c;
    bool changed = true;
    while (changed && !r.is_zero()) {
        changed = false;
        for (auto it = r.t_.rbegin(); it != r.t_.rend(); ++it) {
            bool divisible = true;
            for (int j = 0; j < kNumParams; ++j)
                if (it->first[j] < lead.first[j]) { divisible = false; break; }
            if (!divisible) continue;
            ParamExpo qe;
            for (int j = 0; j < kNumParams; ++j) qe[j] = it->first[j] - lead.first[j];
            ParamScalar quot(*c.F_);
            quot.t_[qe] = it->second * lead.second.inverse();
            r = r - quot * g;
            changed = true;
            break;
        }
    }
    return r;
}

std::string ParamScalar::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int j = 0; j < kNumParams; ++j) {
            if (e[j] == 0) continue;
            os << "*" << param_name(static_cast<Param>(j));
            if (e[j] > 1) os << "^" << e[j];
        }
    }
    return os.str();
}

}  // namespace eqp
