#include "eqp/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "eqp/repr.hpp"

namespace eqp {

namespace {

enum class Tok { Num, Name, Plus, Minus, Star, Caret, LParen, RParen, Comma, Prime, End };

struct Token {
    Tok kind;
    std::string text;
    mpq_class num;
    size_t pos;
};

bool takes_sign(const std::string& base) {
    return base == "eta" || base == "p" || base == "P" || base == "z" ||
           base == "lambda" || base == "chi" || base == "qexp";
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t j = 0;
    while (j < src.size()) {
        char c = src[j];
        if (std::isspace(static_cast<unsigned char>(c))) { ++j; continue; }
        size_t start = j;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t e = j;
            while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
            std::string digits = src.substr(j, e - j);
            mpq_class val(digits);
            if (e < src.size() && src[e] == '/' && e + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[e + 1]))) {
                size_t d = e + 1;
                while (d < src.size() && std::isdigit(static_cast<unsigned char>(src[d]))) ++d;
                val = mpq_class(digits + "/" + src.substr(e + 1, d - e - 1));
                val.canonicalize();
                e = d;
            }
            out.push_back({Tok::Num, src.substr(j, e - j), val, start});
            j = e;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t e = j;
            while (e < src.size() && std::isalpha(static_cast<unsigned char>(src[e]))) ++e;
            std::string name = src.substr(j, e - j);
            if (e < src.size() && (src[e] == '+' || src[e] == '-') && takes_sign(name)) {
                name += src[e];
                ++e;
                if (e < src.size() && src[e] == '\'' &&
                    (name == "lambda+" || name == "lambda-")) {
                    name += '\'';
                    ++e;
                }
            }
            out.push_back({Tok::Name, name, 0, start});
            j = e;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", j);
        }
        out.push_back({k, std::string(1, c), 0, start});
        ++j;
    }
    out.push_back({Tok::End, "", 0, src.size()});
    return out;
}

struct ATraits {
    using Elem = EElement;
    static constexpr bool kIsA = true;
    static std::optional<Elem> generator(const CycField& F, const std::string& n) {
        if (n == "eta+") return EElement(AElement::eta_plus(F));
        if (n == "eta-") return EElement(AElement::eta_minus(F));
        if (n == "delta") return EElement(AElement::delta(F));
        if (n == "z+") return EElement::z(F, 1);
        if (n == "z-") return EElement::z(F, -1);
        return std::nullopt;
    }
    static bool other_side(const std::string& n) {
        return n == "p+" || n == "p-" || n == "P+" || n == "P-" || n == "kappa";
    }
};

struct UTraits {
    using Elem = UElement;
    static constexpr bool kIsA = false;
    static std::optional<Elem> generator(const CycField& F, const std::string& n) {
        if (n == "p+") return UElement::p_plus(F);
        if (n == "p-") return UElement::p_minus(F);
        if (n == "P+") return UElement::P_plus(F);
        if (n == "P-") return UElement::P_minus(F);
        if (n == "kappa") return UElement::kappa(F);
        return std::nullopt;
    }
    static bool other_side(const std::string& n) {
        return n == "eta+" || n == "eta-" || n == "delta" || n == "z+" || n == "z-" ||
               n == "exp" || n == "qexp+" || n == "qexp-" || n == "qbessel" || n == "zeta";
    }
};

template <class Tr>
class Parser {
public:
    using Elem = typename Tr::Elem;

    Parser(const CycField& F, const std::string& src) : F_(F), toks_(lex(src)) {}

    Elem run() {
        Elem out = expr();
        expect(Tok::End, "trailing input");
        return out;
    }

private:
    const Token& cur() const { return toks_[j_]; }
    void advance() { ++j_; }
    void expect(Tok k, const char* what) {
        if (cur().kind != k) throw ParseError(what, cur().pos);
        if (k != Tok::End) advance();
    }

    static Elem scalar(const CycField& F, const Cyc& c) {
        if constexpr (Tr::kIsA)
            return EElement::unit(F) * c;
        else
            return UElement::unit(F) * ParamScalar::from_cyc(c);
    }

    Elem expr() {
        bool neg = false;
        if (cur().kind == Tok::Plus) advance();
        else if (cur().kind == Tok::Minus) { neg = true; advance(); }
        Elem acc = term();
        if (neg) acc = -acc;
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            bool sub = cur().kind == Tok::Minus;
            advance();
            Elem t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor() const {
        return cur().kind == Tok::Num || cur().kind == Tok::Name ||
               cur().kind == Tok::LParen;
    }

    Elem term() {
        Elem acc = factor();
        for (;;) {
            if (cur().kind == Tok::Star) {
                advance();
                acc *= factor();
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    // literal classification for atoms that admit fractional or negative powers
    enum Lit { kNone, kQ, kW, kI };

    Elem factor() {
        auto [val, lit] = atom();
        if (cur().kind != Tok::Caret) return val;
        size_t at = cur().pos;
        advance();
        auto [num, den] = exponent();
        if (den == 2) {
            if (lit != kQ) throw ParseError("half-integer power needs base q", at);
            return scalar(F_, Cyc::q_half(F_, num));
        }
        if (num < 0) {
            switch (lit) {
                case kQ: return scalar(F_, Cyc::q(F_, num));
                case kW: return scalar(F_, Cyc::zeta(F_, num));
                case kI: return scalar(F_, Cyc::zeta(F_, static_cast<long>(F_.p) * num));
                default: throw ParseError("negative power of a non-invertible atom", at);
            }
        }
        return val.pow(static_cast<int>(num));
    }

    // integer or half-integer exponent, optionally parenthesised and signed
    std::pair<long, long> exponent() {
        bool paren = false;
        if (cur().kind == Tok::LParen) { paren = true; advance(); }
        long sign = 1;
        if (cur().kind == Tok::Minus) { sign = -1; advance(); }
        if (cur().kind != Tok::Num) throw ParseError("expected exponent", cur().pos);
        mpq_class v = cur().num;
        size_t at = cur().pos;
        advance();
        if (paren) expect(Tok::RParen, "expected ')' after exponent");
        long den = v.get_den().get_si();
        if (den != 1 && den != 2) throw ParseError("unsupported exponent denominator", at);
        return {sign * v.get_num().get_si(), den};
    }

    long int_arg() {
        long sign = 1;
        if (cur().kind == Tok::Minus) { sign = -1; advance(); }
        if (cur().kind != Tok::Num || cur().num.get_den() != 1)
            throw ParseError("expected integer argument", cur().pos);
        long v = cur().num.get_num().get_si();
        advance();
        return sign * v;
    }

    std::pair<Elem, Lit> atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Num: {
                advance();
                return {scalar(F_, Cyc(F_, t.num)), kNone};
            }
            case Tok::LParen: {
                advance();
                Elem v = expr();
                expect(Tok::RParen, "expected ')'");
                return {v, kNone};
            }
            case Tok::Name:
                return name_atom();
            default:
                throw ParseError("expected an operand", t.pos);
        }
    }

    std::pair<Elem, Lit> name_atom() {
        const Token t = cur();
        advance();
        if (t.text == "q") return {scalar(F_, Cyc::q(F_, 1)), kQ};
        if (t.text == "w") return {scalar(F_, Cyc::zeta(F_, 1)), kW};
        if (t.text == "i") return {scalar(F_, Cyc::i(F_)), kI};
        if (auto p = param_from_name(t.text)) {
            ParamScalar s = ParamScalar::param(F_, *p);
            if constexpr (Tr::kIsA)
                return {EElement::unit(F_) * s, kNone};
            else
                return {UElement::unit(F_) * s, kNone};
        }
        if (auto g = Tr::generator(F_, t.text)) return {*g, kNone};
        if constexpr (Tr::kIsA) {
            if (t.text == "exp") return {exp_call(t.pos), kNone};
            if (t.text == "qexp+" || t.text == "qexp-") {
                expect(Tok::LParen, "expected '('");
                EElement arg = expr();
                expect(Tok::RParen, "expected ')'");
                return {cutoff_qexp(arg, t.text == "qexp+" ? 1 : -1), kNone};
            }
            if (t.text == "qbessel") {
                expect(Tok::LParen, "expected '('");
                long m = int_arg();
                expect(Tok::Comma, "expected ','");
                EElement arg = expr();
                expect(Tok::RParen, "expected ')'");
                return {qbessel_cut(static_cast<int>(m), arg), kNone};
            }
            if (t.text == "zeta") {
                expect(Tok::LParen, "expected '('");
                long m = int_arg();
                expect(Tok::RParen, "expected ')'");
                return {EElement(zeta_idempotent(F_, m)), kNone};
            }
        }
        if (Tr::other_side(t.text))
            throw ParseError("'" + t.text + "' belongs to the other algebra side", t.pos);
        throw ParseError("unknown name '" + t.text + "'", t.pos);
    }

    EElement exp_call(size_t at) {
        expect(Tok::LParen, "expected '('");
        EElement arg = [&] {
            if constexpr (Tr::kIsA) return expr();
            else return EElement();
        }();
        expect(Tok::RParen, "expected ')'");
        ParamScalar u = ParamScalar::zero(F_), v = ParamScalar::zero(F_);
        for (const auto& [mono, c] : arg.terms()) {
            bool plus = mono.a == AMonomial{} && mono.za == 1 && mono.zb == 0;
            bool minus = mono.a == AMonomial{} && mono.za == 0 && mono.zb == 1;
            if (!mono.u.is_zero() || !mono.v.is_zero() || (!plus && !minus))
                throw ParseError("exp argument must be linear in z+ and z-", at);
            (plus ? u : v) += c;
        }
        return EElement::exp_z(F_, u, v);
    }

    const CycField& F_;
    std::vector<Token> toks_;
    size_t j_ = 0;
};

}  // namespace

EElement parse_a(const CycField& F, const std::string& src) {
    return Parser<ATraits>(F, src).run();
}

UElement parse_u(const CycField& F, const std::string& src) {
    return Parser<UTraits>(F, src).run();
}

std::string render(const EElement& f) { return f.str(); }
std::string render(const UElement& x) { return x.str(); }

}  // namespace eqp
