#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqp/parse.hpp"
#include "eqp/repr.hpp"
#include "eqp/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_odd(int p) {
    if (p < 3 || p % 2 == 0)
        throw UsageError("p must be an odd integer >= 3: the construction lives at "
                         "odd roots of unity q^p = 1");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file '" + path + "'");
    os << text;
}

mpq_class parse_rational(const std::string& s) {
    try {
        mpq_class v(s);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError("'" + s + "' is not a rational number");
    }
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(int p, const std::string& suite, uint64_t seed,
               const std::string& format, const std::string& output) {
    require_odd(p);
    std::vector<eqp::CheckResult> results = eqp::run_suite(p, suite, seed);
    bool all_pass = true;
    std::ostringstream os;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            arr.push_back({{"assertion_id", r.id},
                           {"paper_anchor", r.anchor},
                           {"status", r.pass ? "pass" : "fail"},
                           {"detail", r.detail}});
        }
        ordered_json doc = {{"p", p}, {"suite", suite}, {"seed", seed},
                            {"results", arr}};
        os << doc.dump(2) << "\n";
    } else {
        os << "assertion_id,paper_anchor,status,detail\n";
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            os << r.id << "," << r.anchor << "," << (r.pass ? "pass" : "fail")
               << "," << csv_escape(r.detail) << "\n";
        }
    }
    emit(os.str(), output);
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---- export ---------------------------------------------------------------

std::string export_gram(const eqp::CycField& F, eqp::GramSpace space,
                        const std::string& format) {
    auto G = eqp::gram_matrix(F, space);
    std::ostringstream os;
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& row : G) {
            ordered_json r = ordered_json::array();
            for (const auto& e : row) r.push_back(e.str());
            rows.push_back(r);
        }
        os << ordered_json{{"p", F.p},
                           {"space", space == eqp::GramSpace::SO ? "so" : "m"},
                           {"gram", rows}}
                  .dump(2)
           << "\n";
    } else {
        for (const auto& row : G) {
            for (size_t j = 0; j < row.size(); ++j)
                os << (j ? "," : "") << csv_escape(row[j].str());
            os << "\n";
        }
    }
    return os.str();
}

std::string export_pairing(const eqp::CycField& F, const std::string& format) {
    eqp::Pairing pr(F);
    const int p = F.p;
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    if (format == "csv") os << "n,m,k,n2,m2,k2,value\n";
    for (int n = 0; n < p; ++n)
        for (int m = 0; m < p; ++m)
            for (int k = 0; k < p; ++k)
                for (int n2 = 0; n2 < p; ++n2)
                    for (int m2 = 0; m2 < p; ++m2)
                        for (int k2 = 0; k2 < p; ++k2) {
                            eqp::ParamScalar v = pr.pair_mono(
                                {0, 0, n, m, k},
                                eqp::EMonomial{{n2, m2, k2}, 0, 0,
                                               eqp::ParamScalar::zero(F),
                                               eqp::ParamScalar::zero(F)});
                            std::string val =
                                v.is_zero() ? "0" : v.constant_part().str();
                            if (format == "csv")
                                os << n << "," << m << "," << k << "," << n2 << ","
                                   << m2 << "," << k2 << "," << csv_escape(val)
                                   << "\n";
                            else
                                arr.push_back({{"n", n}, {"m", m}, {"k", k},
                                               {"n2", n2}, {"m2", m2}, {"k2", k2},
                                               {"value", val}});
                        }
    if (format == "json")
        os << ordered_json{{"p", F.p}, {"pairing", arr}}.dump(2) << "\n";
    return os.str();
}

std::string export_dmatrix(const eqp::CycField& F, const std::string& format,
                           const std::optional<mpq_class>& lp,
                           const std::optional<mpq_class>& lm) {
    const eqp::EMatrix& D = eqp::dmatrix(F);
    const int p = F.p;
    std::ostringstream os;
    if (!lp && !lm) {
        if (format == "json") {
            ordered_json rows = ordered_json::array();
            for (int r = 0; r < p; ++r) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < p; ++c) row.push_back(eqp::render(D.at(r, c)));
                rows.push_back(row);
            }
            os << ordered_json{{"p", p}, {"dmatrix", rows}}.dump(2) << "\n";
        } else {
            os << "row,col,entry\n";
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c)
                    os << r << "," << c << "," << csv_escape(eqp::render(D.at(r, c)))
                       << "\n";
        }
        return os.str();
    }
    if (!lp || !lm)
        throw UsageError("numeric export needs both --lambda-plus and --lambda-minus");
    std::map<eqp::Param, mpq_class> assign = {{eqp::Param::LambdaPlus, *lp},
                                              {eqp::Param::LambdaMinus, *lm}};
    ordered_json arr = ordered_json::array();
    if (format == "csv") os << "row,col,n,m,k,za,zb,u_re,u_im,v_re,v_im,c_re,c_im\n";
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) {
            eqp::EElement e = D.at(r, c).subst_params(assign);
            for (const auto& [mono, coeff] : e.terms()) {
                std::complex<double> cv = coeff.embed({});
                std::complex<double> uv = mono.u.embed({});
                std::complex<double> vv = mono.v.embed({});
                if (format == "csv") {
                    os << r << "," << c << "," << mono.a.n << "," << mono.a.m << ","
                       << mono.a.k << "," << mono.za << "," << mono.zb << ","
                       << fmt_double(uv.real()) << "," << fmt_double(uv.imag()) << ","
                       << fmt_double(vv.real()) << "," << fmt_double(vv.imag()) << ","
                       << fmt_double(cv.real()) << "," << fmt_double(cv.imag())
                       << "\n";
                } else {
                    arr.push_back({{"row", r}, {"col", c},
                                   {"n", mono.a.n}, {"m", mono.a.m}, {"k", mono.a.k},
                                   {"za", mono.za}, {"zb", mono.zb},
                                   {"u", {uv.real(), uv.imag()}},
                                   {"v", {vv.real(), vv.imag()}},
                                   {"coeff", {cv.real(), cv.imag()}}});
                }
            }
        }
    if (format == "json")
        os << ordered_json{{"p", p},
                           {"lambda_plus", lp->get_str()},
                           {"lambda_minus", lm->get_str()},
                           {"terms", arr}}
                  .dump(2)
           << "\n";
    return os.str();
}

int cmd_export(int p, const std::string& kind, const std::string& format,
               const std::string& space, const std::string& lp_str,
               const std::string& lm_str, const std::string& output) {
    require_odd(p);
    const eqp::CycField& F = eqp::CycField::get(p);
    std::optional<mpq_class> lp, lm;
    if (!lp_str.empty()) lp = parse_rational(lp_str);
    if (!lm_str.empty()) lm = parse_rational(lm_str);
    std::string text;
    if (kind == "gram") {
        eqp::GramSpace sp = space == "so" ? eqp::GramSpace::SO : eqp::GramSpace::M;
        text = export_gram(F, sp, format);
    } else if (kind == "pairing") {
        text = export_pairing(F, format);
    } else if (kind == "dmatrix") {
        text = export_dmatrix(F, format, lp, lm);
    } else {
        throw UsageError("unknown export kind '" + kind + "'");
    }
    emit(text, output);
    return kExitOk;
}

// ---- parse ----------------------------------------------------------------

int cmd_parse(int p, const std::string& side, const std::string& expr,
              const std::string& output) {
    require_odd(p);
    const eqp::CycField& F = eqp::CycField::get(p);
    std::string rendered;
    try {
        if (side == "u") {
            eqp::UElement x = eqp::parse_u(F, expr);
            rendered = eqp::render(x);
            if (eqp::parse_u(F, rendered) != x)
                throw std::logic_error("round trip failed");
        } else {
            eqp::EElement f = eqp::parse_a(F, expr);
            rendered = eqp::render(f);
            if (eqp::parse_a(F, rendered) != f)
                throw std::logic_error("round trip failed");
        }
    } catch (const eqp::ParseError& e) {
        throw UsageError(e.what());
    }
    emit(rendered + "\n", output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the quantum Euclidean-Poincare "
                 "group at odd roots of unity"};
    app.require_subcommand(1);

    int p = 3;
    uint64_t seed = 0;
    std::string suite = "all", format = "json", output;
    std::string kind = "dmatrix", space = "m", lp_str, lm_str;
    std::string side = "a", expr;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--p", p, "odd ambient order");
    verify->add_option("--suite", suite, "hopf, duality, integral, forms, repr or all");
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--output", output, "write the report to a file");

    CLI::App* exp = app.add_subcommand("export", "export exact or numeric tables");
    exp->add_option("--kind", kind, "gram, dmatrix or pairing")
        ->check(CLI::IsMember({"gram", "dmatrix", "pairing"}));
    exp->add_option("--p", p, "odd ambient order");
    exp->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--space", space, "gram space: so or m")
        ->check(CLI::IsMember({"so", "m"}));
    exp->add_option("--lambda-plus", lp_str, "rational value for numeric evaluation");
    exp->add_option("--lambda-minus", lm_str, "rational value for numeric evaluation");
    exp->add_option("--output", output, "write the table to a file");

    CLI::App* parse = app.add_subcommand("parse", "parse and canonically render");
    parse->add_option("--p", p, "odd ambient order");
    parse->add_option("--side", side, "algebra side: a (group) or u (dual)")
        ->check(CLI::IsMember({"a", "u"}));
    parse->add_option("expr", expr, "expression text")->required();
    parse->add_option("--output", output, "write the rendered form to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(p, suite, seed, format, output);
        if (exp->parsed()) return cmd_export(p, kind, format, space, lp_str, lm_str, output);
        return cmd_parse(p, side, expr, output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
