#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqp/algebra_ext.hpp"

namespace eqp {

/// Product of Dirac delta symbols; the empty product is an ordinary scalar.
/// `degenerate` counts flagged delta(0) factors from integrating a constant.
/// Each delta factor carries one power of 2*pi, kept symbolic.
struct DeltaSymbol {
    std::vector<ParamScalar> args;  // canonicalized, sorted
    int degenerate = 0;

    int cmp(const DeltaSymbol& o) const;
    bool operator<(const DeltaSymbol& o) const { return cmp(o) < 0; }
    bool operator==(const DeltaSymbol& o) const { return cmp(o) == 0; }
    int two_pi_power() const { return static_cast<int>(args.size()) + degenerate; }
};

/// Value of a distributional integral: finite sum of delta products with
/// polynomial coefficients.
class DistValue {
public:
    DistValue() : F_(nullptr) {}
    explicit DistValue(const CycField& F) : F_(&F) {}

    static DistValue scalar(const ParamScalar& c);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    bool has_degenerate() const;
    const std::map<DeltaSymbol, ParamScalar>& parts() const { return t_; }
    /// Coefficient of the empty delta product.
    ParamScalar scalar_part() const;

    DistValue operator+(const DistValue& o) const;
    DistValue operator-(const DistValue& o) const;
    DistValue operator*(const ParamScalar& s) const;
    DistValue& operator+=(const DistValue& o) { return *this = *this + o; }

    bool operator==(const DistValue& o) const;
    bool operator!=(const DistValue& o) const { return !(*this == o); }

    std::string str() const;

    void add_part(const DeltaSymbol& d, const ParamScalar& c);

private:
    const CycField* F_;
    std::map<DeltaSymbol, ParamScalar> t_;
};

/// Sign-canonical form of a delta argument, delta(-x) = delta(x).
ParamScalar canonical_delta_arg(const ParamScalar& g);

/// The bi-invariant integral on the reduced algebra: picks the coefficient of
/// eta+^{p-1} eta-^{p-1} and multiplies by q^{-1}.
ParamScalar integral_reduced(const AElement& x);

/// Integral over the circle subalgebra; rejects elements containing eta.
ParamScalar integral_S(const AElement& x);

/// Formal plane integral of a pure function of z (exponential-polynomial).
/// Oscillatory exponentials produce 2*pi*delta factors; integrating a bare
/// constant produces a flagged degenerate factor; terms carrying positive
/// powers of z integrate to zero (they are z-derivatives).  Throws on
/// exponents with a nonzero real part.
DistValue integral_C(const EElement& f);

/// Invariant integral on the full group algebra: factorizes each term into
/// the reduced integral times the plane integral.
DistValue integral_E(const EElement& F);

/// (a, b) = I(a b*)
ParamScalar herm_reduced(const AElement& a, const AElement& b);
/// (a, b)_S = I_S(a* b)
ParamScalar herm_S(const AElement& a, const AElement& b);
/// (F, G)_E = I_E(F G*)
DistValue herm_E(const EElement& F, const EElement& G);

enum class GramSpace { SO, M };

struct Signature {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};

/// Gram matrix of the Hermitian form on the monomial basis of the space:
/// delta^0..delta^{p-1} under the S form, or eta+^n eta-^m under the reduced
/// form.  Entries are parameter-free.
std::vector<std::vector<ParamScalar>> gram_matrix(const CycField& F, GramSpace space);

/// Exact signature via the block structure of the Gram matrix; asserts the
/// sparsity pattern (each basis vector pairs with exactly one other) first.
Signature gram_signature(const CycField& F, GramSpace space);

/// Solution space of the two-sided invariance equations for a linear
/// functional on the reduced algebra.
struct FunctionalSpace {
    int dimension;
    /// A spanning functional when dimension >= 1, values on monomials.
    std::map<AMonomial, Cyc> basis;
};

FunctionalSpace invariant_functional_space(const CycField& F);

}  // namespace eqp
