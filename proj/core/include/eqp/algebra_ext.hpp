#pragma once

#include <map>
#include <string>
#include <utility>

#include "eqp/algebra_a.hpp"

namespace eqp {

/// Monomial of the full group algebra: reduced part times
/// z+^za z-^zb exp(u z+ + v z-) with polynomial exponent coefficients.
struct EMonomial {
    AMonomial a;
    int za = 0, zb = 0;
    ParamScalar u, v;  // attached to a field; zero means no exponential

    int cmp(const EMonomial& o) const {
        if (a != o.a) return a < o.a ? -1 : 1;
        if (za != o.za) return za < o.za ? -1 : 1;
        if (zb != o.zb) return zb < o.zb ? -1 : 1;
        int c = u.cmp(o.u);
        if (c != 0) return c;
        return v.cmp(o.v);
    }
    bool operator<(const EMonomial& o) const { return cmp(o) < 0; }
    bool operator==(const EMonomial& o) const { return cmp(o) == 0; }
    bool z_trivial() const { return za == 0 && zb == 0 && u.is_zero() && v.is_zero(); }
};

class ETensor;

/// Element of A(E_q(1,1)) = reduced algebra times exponential-polynomials in z.
class EElement {
public:
    EElement() : F_(nullptr) {}
    explicit EElement(const CycField& F) : F_(&F) {}
    /// Embeds a reduced element.
    EElement(const AElement& a);  // NOLINT(google-explicit-constructor)

    static EElement zero(const CycField& F) { return EElement(F); }
    static EElement unit(const CycField& F) { return EElement(AElement::unit(F)); }
    static EElement z(const CycField& F, int sign, int power = 1);
    /// exp(u z+ + v z-)
    static EElement exp_z(const CycField& F, const ParamScalar& u, const ParamScalar& v);
    static EElement monomial(const CycField& F, const EMonomial& mono,
                             const ParamScalar& coeff);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<EMonomial, ParamScalar>& terms() const { return t_; }
    /// True when every monomial has trivial reduced part (a pure function of z).
    bool is_pure_z() const;
    /// True when no z dependence at all; then this converts back to AElement.
    bool is_reduced() const;
    AElement reduced_part() const;

    EElement operator+(const EElement& o) const;
    EElement operator-(const EElement& o) const;
    EElement operator-() const;
    EElement operator*(const EElement& o) const;
    EElement operator*(const ParamScalar& s) const;
    EElement operator*(const Cyc& c) const;
    EElement& operator+=(const EElement& o) { return *this = *this + o; }
    EElement& operator-=(const EElement& o) { return *this = *this - o; }
    EElement& operator*=(const EElement& o) { return *this = *this * o; }
    EElement pow(int e) const;

    bool operator==(const EElement& o) const;
    bool operator!=(const EElement& o) const { return !(*this == o); }

    ETensor coproduct() const;
    ParamScalar counit() const;
    EElement antipode() const;
    EElement star() const;

    /// Formal derivative with respect to z+ (sign > 0) or z- (sign < 0).
    EElement d_dz(int sign) const;

    /// Renames parameters in coefficients and exponent polynomials.
    EElement rename_params(const std::map<Param, Param>& table) const;
    EElement subst_params(const std::map<Param, mpq_class>& values) const;

    std::string str() const;

    void add_term(const EMonomial& mono, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<EMonomial, ParamScalar> t_;
};

/// B_{+-} tensors from the coproduct of z (square-nilpotent correction terms).
ATensor b_plus_minus(const CycField& F, int sign);

/// Element of the tensor square of the full group algebra.
class ETensor {
public:
    ETensor() : F_(nullptr) {}
    explicit ETensor(const CycField& F) : F_(&F) {}

    static ETensor outer(const EElement& x, const EElement& y);
    static ETensor unit(const CycField& F);
    static ETensor lift(const ATensor& t);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<EMonomial, EMonomial>, ParamScalar>& terms() const {
        return t_;
    }

    ETensor operator+(const ETensor& o) const;
    ETensor operator-(const ETensor& o) const;
    ETensor operator*(const ETensor& o) const;
    ETensor operator*(const ParamScalar& s) const;
    ETensor& operator+=(const ETensor& o) { return *this = *this + o; }
    ETensor& operator*=(const ETensor& o) { return *this = *this * o; }
    ETensor pow(int e) const;

    bool operator==(const ETensor& o) const;
    bool operator!=(const ETensor& o) const { return !(*this == o); }

    EElement contract_mul() const;
    EElement apply_counit_left() const;
    EElement apply_counit_right() const;
    ETensor map_both_star() const;

    void add_term(const EMonomial& a, const EMonomial& b, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<std::pair<EMonomial, EMonomial>, ParamScalar> t_;
};

}  // namespace eqp
