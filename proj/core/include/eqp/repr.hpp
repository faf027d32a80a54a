#pragma once

#include <string>
#include <vector>

#include "eqp/integral.hpp"
#include "eqp/pairing.hpp"

namespace eqp {

/// p x p matrix acting on the delta-power basis of the circle subalgebra:
/// M delta^n = sum_m e[m][n] delta^m.
class RepMatrix {
public:
    RepMatrix() : F_(nullptr) {}
    RepMatrix(const CycField& F, int dim);

    static RepMatrix identity(const CycField& F, int dim);

    const CycField& field() const { return *F_; }
    int dim() const { return static_cast<int>(e_.size()); }
    ParamScalar& at(int r, int c) { return e_[r][c]; }
    const ParamScalar& at(int r, int c) const { return e_[r][c]; }

    RepMatrix operator+(const RepMatrix& o) const;
    RepMatrix operator*(const RepMatrix& o) const;
    RepMatrix operator*(const ParamScalar& s) const;
    RepMatrix pow(int n) const;
    bool operator==(const RepMatrix& o) const;
    bool operator!=(const RepMatrix& o) const { return !(*this == o); }

private:
    const CycField* F_;
    std::vector<std::vector<ParamScalar>> e_;
};

/// Images of the five dual-algebra generators in a p-dimensional
/// representation on the circle subalgebra.
struct LRep {
    RepMatrix p_plus, p_minus, kappa, P_plus, P_minus;
    std::vector<int> basis;  // delta powers labelling the module basis
};

/// The principal series with symbolic real parameters lambda+-: p+- act as
/// scaled cyclic shifts, kappa as diag(q^m), P+- as lambda+-^p times identity.
LRep rep_L(const CycField& F);

/// The one-dimensional weight representation on the span of delta^m,
/// embedded at slot (m, m): p+- vanish, kappa has eigenvalue q^m.
LRep rep_L_weight(const CycField& F, int m);

/// Evaluates a dual-algebra element in the representation.
RepMatrix rep_eval(const LRep& L, const UElement& x);

/// p x p matrix with entries in the full group algebra.
class EMatrix {
public:
    EMatrix() : F_(nullptr) {}
    EMatrix(const CycField& F, int dim);

    static EMatrix identity(const CycField& F, int dim);
    /// Diagonal matrix s * Id.
    static EMatrix scalar(const CycField& F, int dim, const EElement& s);

    const CycField& field() const { return *F_; }
    int dim() const { return static_cast<int>(e_.size()); }
    EElement& at(int r, int c) { return e_[r][c]; }
    const EElement& at(int r, int c) const { return e_[r][c]; }

    EMatrix operator+(const EMatrix& o) const;
    EMatrix operator*(const EMatrix& o) const;
    EMatrix operator*(const ParamScalar& s) const;
    EMatrix pow(int n) const;
    bool operator==(const EMatrix& o) const;
    bool operator!=(const EMatrix& o) const { return !(*this == o); }

private:
    const CycField* F_;
    std::vector<std::vector<EElement>> e_;
};

/// Truncated q-exponential: sum_{m<p} q^{sign m(m-1)/2}/[m]! x^m.
EElement cutoff_qexp(const EElement& x, int sign);
EMatrix cutoff_qexp(const EMatrix& x, int sign);

/// Truncated Hahn-Exton q-Bessel function of order m at an algebra argument.
EElement qbessel_cut(int m, const EElement& x);

/// Matrix of the universal element evaluated in the representation L: entry
/// (m, n) is the coefficient of delta^m in the image of delta^n, extracted
/// with the extended circle form.
EMatrix universal_T_rep(const CycField& F, const LRep& L);

/// D-matrix of the symbolic principal series (universal_T_rep at rep_L).
const EMatrix& dmatrix(const CycField& F);

/// Two-branch closed form for the (m, n) matrix element; the upper limit of
/// the sum whose factorial index would reach [p] is capped one step short.
EElement dmatrix_closed(const CycField& F, int m, int n);

/// First-column closed form in terms of the truncated q-Bessel function.
EElement dmatrix_special(const CycField& F, int m);

struct CheckReport {
    bool pass = true;
    std::string detail;
    void fail(const std::string& msg);
};

/// Entrywise coproduct identity: each matrix element comultiplies into the
/// row-times-column sum of matrix elements.
CheckReport addition_theorem_check(const CycField& F);

/// The star-product column sums of the D-matrix reproduce the circle form.
CheckReport unitarity_sums_check(const CycField& F);

/// Right-action shift recurrences on the first column, with wraparound,
/// the Casimir eigenvalue, the weight eigenvalue and the central eigenvalues.
CheckReport recurrence_check(const CycField& F, Pairing& pr);

/// Joint eigenfunction of the twisted momenta at symbolic chi parameters.
EElement plane_wave(const CycField& F);
CheckReport plane_wave_check(const CycField& F, Pairing& pr);

struct OrthReport {
    bool pass = true;
    DistValue value;
    /// Coincidence-slice coefficient divided by sum_k 1/([k]![p-1-k]!)^2.
    ParamScalar lambda_power;
    std::string detail;
};

/// Pairs first-column matrix elements at independent primed and unprimed
/// parameters under the invariant form and analyses the distributional output.
OrthReport orthogonality_discrete(const CycField& F, int n, int m);

}  // namespace eqp
