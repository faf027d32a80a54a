#pragma once

#include <map>
#include <shared_mutex>
#include <utility>

#include "eqp/algebra_ext.hpp"
#include "eqp/algebra_u.hpp"

namespace eqp {

/// Nondegenerate Hopf pairing between the dual algebra and the group algebra.
/// Values on PBW words are computed by peeling one generator at a time against
/// the coproduct of the right argument; results are memoized per field.
class Pairing {
public:
    explicit Pairing(const CycField& F) : F_(F) {}

    const CycField& field() const { return F_; }

    ParamScalar pair(const UElement& x, const EElement& f);
    ParamScalar pair_mono(const UMonomial& w, const EMonomial& mono);

    /// (pair x id) applied to the coproduct: sum <x, f_(1)> f_(2).
    EElement conv_right(const EElement& f, const UElement& x);
    /// (id x pair) applied to the coproduct: sum f_(1) <x, f_(2)>.
    EElement conv_left(const EElement& f, const UElement& x);

    /// Right regular action of the dual algebra on functions.
    EElement right_rep(const UElement& x, const EElement& f) { return conv_right(f, x); }

private:
    /// Value on a single generator against one monomial.
    ParamScalar gen_pair(int which, const EMonomial& m) const;

    const CycField& F_;
    std::map<std::pair<UMonomial, EMonomial>, ParamScalar> memo_;
    std::shared_mutex mu_;
};

/// Closed-form pairing value against the basis function
/// z+^tp z-^sp eta+^np eta-^mp zeta(kp): nonzero only when the exponents of
/// the two sides match and kp = k + n + m mod p, where it equals
/// i^{n+m+t+s} q^{(n-m)/2 - nm} t! s! [n]! [m]!.
Cyc pair_closed(const CycField& F, const UMonomial& w,
                int tp, int sp, int np, int mp, int kp);

}  // namespace eqp
