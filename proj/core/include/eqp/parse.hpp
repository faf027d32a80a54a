#pragma once

#include <stdexcept>
#include <string>

#include "eqp/algebra_ext.hpp"
#include "eqp/algebra_u.hpp"

namespace eqp {

/// Raised on malformed input; `pos` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

/// Parses a group-algebra expression over the generators eta+, eta-, delta,
/// z+, z- with scalars (rationals, i, q, q^(1/2), w), parameter symbols and
/// the function forms exp(...), qexp+(...), qexp-(...), qbessel(m, ...),
/// zeta(m).  Dual-algebra generators are rejected.
EElement parse_a(const CycField& F, const std::string& src);

/// Parses a dual-algebra expression over p+, p-, P+, P-, kappa with the same
/// scalar vocabulary.  Group-algebra generators are rejected.
UElement parse_u(const CycField& F, const std::string& src);

/// Canonical text forms; both parse back to equal elements.
std::string render(const EElement& f);
std::string render(const UElement& x);

}  // namespace eqp
