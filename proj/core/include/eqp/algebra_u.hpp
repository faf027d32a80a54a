#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "eqp/param.hpp"

namespace eqp {

/// PBW monomial P+^t P-^s p+^n p-^m kappa^k with n, m, k in [0, p-1].
struct UMonomial {
    int t = 0, s = 0, n = 0, m = 0, k = 0;
    auto operator<=>(const UMonomial&) const = default;
    int word_length() const { return t + s + n + m + k; }
};

class UTensor;

/// Element of the dual quantum algebra in PBW normal form.
class UElement {
public:
    UElement() : F_(nullptr) {}
    explicit UElement(const CycField& F) : F_(&F) {}

    static UElement zero(const CycField& F) { return UElement(F); }
    static UElement unit(const CycField& F) { return monomial(F, {}); }
    static UElement monomial(const CycField& F, UMonomial mono);
    static UElement monomial(const CycField& F, UMonomial mono, const ParamScalar& c);
    static UElement p_plus(const CycField& F) { return monomial(F, {0, 0, 1, 0, 0}); }
    static UElement p_minus(const CycField& F) { return monomial(F, {0, 0, 0, 1, 0}); }
    static UElement kappa(const CycField& F, int e = 1);
    static UElement P_plus(const CycField& F) { return monomial(F, {1, 0, 0, 0, 0}); }
    static UElement P_minus(const CycField& F) { return monomial(F, {0, 1, 0, 0, 0}); }

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<UMonomial, ParamScalar>& terms() const { return t_; }

    UElement operator+(const UElement& o) const;
    UElement operator-(const UElement& o) const;
    UElement operator-() const;
    UElement operator*(const UElement& o) const;
    UElement operator*(const ParamScalar& s) const;
    UElement operator*(const Cyc& c) const;
    UElement& operator+=(const UElement& o) { return *this = *this + o; }
    UElement& operator-=(const UElement& o) { return *this = *this - o; }
    UElement& operator*=(const UElement& o) { return *this = *this * o; }
    UElement pow(int e) const;

    bool operator==(const UElement& o) const;
    bool operator!=(const UElement& o) const { return !(*this == o); }

    UTensor coproduct() const;
    ParamScalar counit() const;
    UElement antipode() const;
    UElement star() const;

    std::string str() const;

    void add_term(UMonomial mono, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<UMonomial, ParamScalar> t_;
};

class UTensor {
public:
    UTensor() : F_(nullptr) {}
    explicit UTensor(const CycField& F) : F_(&F) {}

    static UTensor outer(const UElement& x, const UElement& y);
    static UTensor unit(const CycField& F);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<UMonomial, UMonomial>, ParamScalar>& terms() const {
        return t_;
    }

    UTensor operator+(const UTensor& o) const;
    UTensor operator-(const UTensor& o) const;
    UTensor operator*(const UTensor& o) const;
    UTensor operator*(const ParamScalar& s) const;
    UTensor& operator+=(const UTensor& o) { return *this = *this + o; }
    UTensor& operator*=(const UTensor& o) { return *this = *this * o; }
    UTensor pow(int e) const;

    bool operator==(const UTensor& o) const;
    bool operator!=(const UTensor& o) const { return !(*this == o); }

    UElement contract_mul() const;
    UElement apply_counit_left() const;
    UElement apply_counit_right() const;

    void add_term(UMonomial a, UMonomial b, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<std::pair<UMonomial, UMonomial>, ParamScalar> t_;
};

/// epsilon_{+-} = -q^{∓1/2} p_{+-} kappa^{-1}.
UElement epsilon_ops(const CycField& F, int sign);

}  // namespace eqp
