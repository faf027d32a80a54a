#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "eqp/param.hpp"

namespace eqp {

/// Normal-ordered monomial eta+^n eta-^m delta^k, exponents in [0, p-1].
struct AMonomial {
    int n = 0, m = 0, k = 0;
    auto operator<=>(const AMonomial&) const = default;
};

class ATensor;

/// Element of the p^3-dimensional reduced quantum Poincare group algebra.
class AElement {
public:
    AElement() : F_(nullptr) {}
    explicit AElement(const CycField& F) : F_(&F) {}

    static AElement zero(const CycField& F) { return AElement(F); }
    static AElement unit(const CycField& F) { return monomial(F, {0, 0, 0}); }
    static AElement monomial(const CycField& F, AMonomial mono,
                             const ParamScalar& coeff);
    static AElement monomial(const CycField& F, AMonomial mono);
    static AElement eta_plus(const CycField& F) { return monomial(F, {1, 0, 0}); }
    static AElement eta_minus(const CycField& F) { return monomial(F, {0, 1, 0}); }
    static AElement delta(const CycField& F, int e = 1);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<AMonomial, ParamScalar>& terms() const { return t_; }
    ParamScalar coeff(AMonomial mono) const;

    AElement operator+(const AElement& o) const;
    AElement operator-(const AElement& o) const;
    AElement operator-() const;
    AElement operator*(const AElement& o) const;  // normal-ordered product
    AElement operator*(const ParamScalar& s) const;
    AElement operator*(const Cyc& c) const;
    AElement& operator+=(const AElement& o) { return *this = *this + o; }
    AElement& operator-=(const AElement& o) { return *this = *this - o; }
    AElement& operator*=(const AElement& o) { return *this = *this * o; }

    AElement pow(int e) const;

    bool operator==(const AElement& o) const;
    bool operator!=(const AElement& o) const { return !(*this == o); }

    ATensor coproduct() const;
    ParamScalar counit() const;
    AElement antipode() const;
    AElement star() const;

    std::string str() const;

    void add_term(AMonomial mono, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<AMonomial, ParamScalar> t_;
};

/// Element of A tensor A with componentwise multiplication.
class ATensor {
public:
    ATensor() : F_(nullptr) {}
    explicit ATensor(const CycField& F) : F_(&F) {}

    static ATensor outer(const AElement& x, const AElement& y);
    static ATensor unit(const CycField& F);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<AMonomial, AMonomial>, ParamScalar>& terms() const {
        return t_;
    }

    ATensor operator+(const ATensor& o) const;
    ATensor operator-(const ATensor& o) const;
    ATensor operator*(const ATensor& o) const;
    ATensor operator*(const ParamScalar& s) const;
    ATensor& operator+=(const ATensor& o) { return *this = *this + o; }
    ATensor& operator*=(const ATensor& o) { return *this = *this * o; }
    ATensor pow(int e) const;

    bool operator==(const ATensor& o) const;
    bool operator!=(const ATensor& o) const { return !(*this == o); }

    /// Multiply the two legs together (mu of the Hopf axioms).
    AElement contract_mul() const;
    /// Apply counit to the left / right leg.
    AElement apply_counit_left() const;
    AElement apply_counit_right() const;
    /// Apply antipode / star to one leg.
    ATensor map_left(AElement (AElement::*op)() const) const;
    ATensor map_right(AElement (AElement::*op)() const) const;

    void add_term(AMonomial a, AMonomial b, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<std::pair<AMonomial, AMonomial>, ParamScalar> t_;
};

/// Product coefficient and resulting monomial for a normal-ordered product;
/// returns false when the product vanishes (eta power overflow).
bool amono_mul(const CycField& F, AMonomial x, AMonomial y, AMonomial& out, Cyc& coeff);

/// The orthogonal idempotents zeta(m) = (1/p) sum_n q^{-nm} delta^n.
AElement zeta_idempotent(const CycField& F, long m);

/// Basis vector data for the coset space: unnormalized numerator and the
/// square of the normalizer (a real cyclotomic number).
struct EBasisVector {
    AElement numerator;
    Cyc normalizer_sq;
};

/// e^{sign}_{nm}; (n, m) must lie in the independence range.
EBasisVector basis_e_pm(const CycField& F, int n, int m, int sign);

}  // namespace eqp
