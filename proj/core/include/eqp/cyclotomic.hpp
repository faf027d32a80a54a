#pragma once

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eqp {

/// Shared immutable context for the cyclotomic field Q(zeta) with zeta a
/// primitive 4p-th root of unity, p odd.  The field contains q = zeta^4
/// (a primitive p-th root), i = zeta^p and the square root zeta^2 of q.
class CycField {
public:
    /// Registry lookup; contexts are built once and never destroyed.
    static const CycField& get(int p);

    int p;        ///< ambient odd order, q^p = 1
    int order;    ///< 4p
    int degree;   ///< phi(4p), degree of the field over Q

    /// 4p-th cyclotomic polynomial, monic, coefficient of x^j at phi[j].
    std::vector<mpq_class> phi;

    /// red[e] = x^e reduced mod phi, for e in [0, 4p); vectors of length `degree`.
    std::vector<std::vector<mpq_class>> red;

    CycField(const CycField&) = delete;
    CycField& operator=(const CycField&) = delete;

private:
    explicit CycField(int p_);
};

/// Exact element of Q(zeta_{4p}), stored in the reduced power basis.
class Cyc {
public:
    Cyc() : F_(nullptr) {}
    explicit Cyc(const CycField& F) : F_(&F), c_(F.degree) {}
    Cyc(const CycField& F, const mpq_class& r);

    static Cyc zero(const CycField& F) { return Cyc(F); }
    static Cyc one(const CycField& F) { return Cyc(F, 1); }
    /// zeta^e, any integer e.
    static Cyc zeta(const CycField& F, long e);
    /// q^e with q = zeta^4.
    static Cyc q(const CycField& F, long e);
    /// q^{e/2} using the square root zeta^2, whose p-th power is -1.
    static Cyc q_half(const CycField& F, long e);
    /// The order-4 root with positive imaginary embedding: zeta^p.
    static Cyc i(const CycField& F);

    const CycField& field() const { return *F_; }
    bool is_zero() const;
    bool is_rational() const;
    /// Rational part; valid only when is_rational().
    mpq_class rational() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc operator*(const mpq_class& r) const;

    /// Multiplicative inverse; aborts on zero.
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }

    /// Field automorphism zeta -> zeta^{-1} (complex conjugation under embedding).
    Cyc conj() const;

    Cyc pow(long e) const;

    bool operator==(const Cyc& o) const { return cmp(o) == 0; }
    bool operator!=(const Cyc& o) const { return cmp(o) != 0; }
    /// Total order on canonical representations (for use as map key).
    int cmp(const Cyc& o) const;

    /// Numeric embedding zeta -> exp(2 pi i / 4p).
    std::complex<double> embed() const;

    /// Canonical text form as a polynomial in `w` (= zeta), highest power first.
    std::string str() const;

    const std::vector<mpq_class>& coeffs() const { return c_; }

private:
    const CycField* F_;
    std::vector<mpq_class> c_;  // length degree when attached to a field
};

inline Cyc operator*(const mpq_class& r, const Cyc& a) { return a * r; }

/// q-number [n] = (q^n - q^{-n}) / (q - q^{-1}).
Cyc q_int(const CycField& F, long n);

/// q-factorial [n]! for 0 <= n <= p-1; rejects n >= p (where [p]! = 0).
Cyc q_fact(const CycField& F, long n);

/// 1/[n]! for 0 <= n <= p-1.
Cyc q_fact_inv(const CycField& F, long n);

/// Signed q-binomial q^{±m(m-n)} [n]! / ([n-m]![m]!), 0 <= m <= n <= p-1.
Cyc q_binom(const CycField& F, long n, long m, int sign);

}  // namespace eqp
