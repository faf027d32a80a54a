#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "eqp/cyclotomic.hpp"

namespace eqp {

/// The declared commuting real parameters.  Primed lambdas exist for
/// two-point computations (orthogonality of matrix elements).
enum class Param : int {
    LambdaPlus = 0,
    LambdaMinus,
    LambdaPlusPrime,
    LambdaMinusPrime,
    ChiPlus,
    ChiMinus,
};

inline constexpr int kNumParams = 6;

const char* param_name(Param p);
std::optional<Param> param_from_name(const std::string& s);

using ParamExpo = std::array<int, kNumParams>;

/// Polynomial in the declared real parameters with Cyc coefficients.
class ParamScalar {
public:
    ParamScalar() : F_(nullptr) {}
    explicit ParamScalar(const CycField& F) : F_(&F) {}

    static ParamScalar zero(const CycField& F) { return ParamScalar(F); }
    static ParamScalar one(const CycField& F) { return from_cyc(Cyc::one(F)); }
    static ParamScalar from_cyc(const Cyc& c);
    static ParamScalar param(const CycField& F, Param p, int e = 1);

    const CycField& field() const { return *F_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;  // no parameter dependence
    /// Constant term as a Cyc (the whole value when is_constant()).
    Cyc constant_part() const;
    size_t num_terms() const { return t_.size(); }
    const std::map<ParamExpo, Cyc>& terms() const { return t_; }

    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator-() const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar operator*(const Cyc& c) const;
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

    ParamScalar pow(int e) const;

    /// Antilinear conjugation: conjugates coefficients, fixes parameters.
    ParamScalar conj() const;

    /// Renames parameters (e.g. primed -> unprimed); merges coefficients.
    ParamScalar rename(const std::map<Param, Param>& table) const;

    /// Substitutes rational values for a subset of parameters.
    ParamScalar subst(const std::map<Param, mpq_class>& values) const;

    bool operator==(const ParamScalar& o) const { return cmp(o) == 0; }
    bool operator!=(const ParamScalar& o) const { return cmp(o) != 0; }
    int cmp(const ParamScalar& o) const;

    /// Numeric evaluation; every occurring parameter must be assigned.
    std::complex<double> embed(const std::map<Param, double>& assignment) const;

    /// Reduction of `c` modulo the single polynomial `g` (used by the
    /// distributional integral to kill multiples of a delta argument).
    static ParamScalar reduce_mod(const ParamScalar& c, const ParamScalar& g);

    std::string str() const;

private:
    const CycField* F_;
    std::map<ParamExpo, Cyc> t_;  // zero coefficients never stored

    void add_term(const ParamExpo& e, const Cyc& c);
};

inline ParamScalar operator*(const Cyc& c, const ParamScalar& a) { return a * c; }

}  // namespace eqp
