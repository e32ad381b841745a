#include "pellfrac/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pellfrac/contfrac.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/families.hpp"
#include "pellfrac/integer.hpp"
#include "pellfrac/pell.hpp"
#include "pellfrac/quadfield.hpp"
#include "pellfrac/scan.hpp"

namespace pellfrac::cli {
namespace {

// Insertion order is kept so payloads render in the documented field order.
using json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    bool quiet = false;
};

std::string dec(const Int& v) { return v.get_str(); }

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw DomainError("not an integer: '" + s + "'");
    }
}

std::string join(const std::vector<Int>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += dec(v[i]);
    }
    return out;
}

json jints(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(dec(x));
    return a;
}

// Coefficients constant-first, each as a decimal string (always integral at
// this layer), plus the human rendering.
json jpoly(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

std::string norm_text(int norm) { return norm > 0 ? "+1" : "-1"; }

std::string unit_text(const FundamentalUnit& u) {
    std::string core = dec(u.a) + " + " + dec(u.b) + "*sqrt(D)";
    if (u.denom == 2) core = "(" + core + ")/2";
    return core + ", norm " + norm_text(u.norm);
}

json junit(const FundamentalUnit& u) {
    return json{{"a", dec(u.a)}, {"b", dec(u.b)}, {"denom", u.denom}, {"norm", u.norm}};
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void emit(const Options& opt, std::ostream& out, const json& payload,
          const std::vector<std::string>& lines, const std::string& summary) {
    if (opt.json) {
        out << payload.dump(2) << "\n";
        return;
    }
    if (!opt.quiet)
        for (const std::string& l : lines) out << l << "\n";
    if (!summary.empty()) out << summary << "\n";
}

int do_expand(const Options& opt, std::ostream& out, const std::string& f_str) {
    SurdExpansion e = expand_sqrt(parse_int(f_str));
    std::string line = "[" + dec(e.a0) + "; " + join(e.period, ",") + "]";
    json payload{{"command", "expand"},
                 {"f", dec(e.f)},
                 {"a0", dec(e.a0)},
                 {"period", jints(e.period)},
                 {"period_length", e.period_length},
                 {"half_index", e.half_index},
                 {"r", jints(e.r_seq)},
                 {"s", jints(e.s_seq)}};
    emit(opt, out, payload, {}, line);
    return 0;
}

int do_pell(const Options& opt, std::ostream& out, const std::string& f_str,
            unsigned rank, bool negative) {
    Int f = parse_int(f_str);
    PellSolution sol;
    if (negative) {
        auto neg = negative_fundamental(f);
        if (!neg)
            throw DomainError("X^2 - " + dec(f) +
                              "*Y^2 = -1 has no solution (the period is even)");
        sol = *neg;
    } else {
        sol = rank == 1 ? fundamental_solution(f) : nth_solution(f, rank);
    }
    std::string line = "c=" + dec(sol.X) + " h=" + dec(sol.Y);
    if (sol.sign < 0) line += " norm=-1";
    json payload{{"command", "pell"}, {"f", dec(sol.f)},   {"X", dec(sol.X)},
                 {"Y", dec(sol.Y)},   {"sign", sol.sign},  {"rank", sol.rank}};
    emit(opt, out, payload, {}, line);
    return 0;
}

int do_family_show(const Options& opt, std::ostream& out, const std::string& fam_str,
                   const std::string& f_str) {
    FamilyId fam = family_from_string(fam_str);
    Int f = parse_int(f_str);
    FamilyInstance inst = instantiate(fam, f);
    bool identity_ok = pell_identity_check(inst);
    Applicability ap = applicability(fam, f);

    std::string polys = "f(t) = " + inst.f_poly.to_string() + ";  X(t) = " +
                        inst.X_poly.to_string() + ";  Y(t) = " + inst.Y_poly.to_string();
    std::vector<std::string> lines;
    lines.push_back("family " + family_name(fam) + " at f=" + dec(f) + ": c=" +
                    dec(inst.c) + " h=" + dec(inst.h));
    lines.push_back(polys);
    lines.push_back("identity X(t)^2 - f(t)*Y(t)^2 = 1: " +
                    std::string(identity_ok ? "pass" : "FAIL"));
    lines.push_back("covered: " + yesno(ap.covered) + " (" + ap.case_label + ")");

    json payload{{"command", "family_show"},
                 {"family", family_name(fam)},
                 {"f", dec(f)},
                 {"c", dec(inst.c)},
                 {"h", dec(inst.h)},
                 {"f_poly", jpoly(inst.f_poly)},
                 {"X_poly", jpoly(inst.X_poly)},
                 {"Y_poly", jpoly(inst.Y_poly)},
                 {"identity_ok", identity_ok},
                 {"covered", ap.covered},
                 {"case", ap.case_label}};
    if (ap.covered) {
        PredictedPattern pat = predicted_pattern(fam, f);
        lines.push_back("predicted lead: " + pat.lead.to_string());
        std::string per;
        for (std::size_t i = 0; i < pat.periodic.size(); ++i) {
            if (i) per += ", ";
            per += pat.periodic[i].to_string();
        }
        lines.push_back("predicted period: " + per);
        json jper = json::array();
        for (const IntPolynomial& q : pat.periodic) jper.push_back(jpoly(q));
        payload["pattern"] = json{{"lead", jpoly(pat.lead)}, {"periodic", jper}};
    }
    if (opt.json)
        out << payload.dump(2) << "\n";
    else if (opt.quiet)
        out << polys << "\n";
    else
        for (const std::string& l : lines) out << l << "\n";
    return identity_ok ? 0 : 2;
}

int do_family_verify(const Options& opt, std::ostream& out, const std::string& fam_str,
                     const std::string& f_str, std::uint64_t t_max) {
    FamilyId fam = family_from_string(fam_str);
    Int f = parse_int(f_str);
    std::uint64_t pass = 0, fail = 0;
    json results = json::array();
    std::vector<std::string> lines;
    for (std::uint64_t t = 0; t <= t_max; ++t) {
        VerifyReport rep = verify_at(fam, f, Int(t));
        bool ok = rep.all_ok();
        (ok ? pass : fail)++;
        std::string line = "t=" + std::to_string(t) + ": " + (ok ? "PASS" : "FAIL") +
                           "  f(t)=" + dec(rep.f_t) + " X=" + dec(rep.X_t) +
                           " Y=" + dec(rep.Y_t);
        if (!rep.covered)
            line += "  (not covered: pattern unchecked)";
        else if (!ok)
            line += "  [pattern=" + yesno(rep.pattern_ok) +
                    " fundamental=" + yesno(rep.fundamental_ok) +
                    " identity=" + yesno(rep.identity_ok) + "]";
        lines.push_back(line);
        results.push_back(json{{"t", std::to_string(t)},
                               {"f_t", dec(rep.f_t)},
                               {"X", dec(rep.X_t)},
                               {"Y", dec(rep.Y_t)},
                               {"covered", rep.covered},
                               {"pattern_ok", rep.pattern_ok},
                               {"fundamental_ok", rep.fundamental_ok},
                               {"identity_ok", rep.identity_ok},
                               {"ok", ok}});
    }
    std::string summary = "checked " + std::to_string(t_max + 1) + " values of t: " +
                          std::to_string(pass) + " pass, " + std::to_string(fail) +
                          " fail";
    json payload{{"command", "family_verify"}, {"family", family_name(fam)},
                 {"f", dec(f)},                {"t_max", std::to_string(t_max)},
                 {"results", results},         {"pass_count", std::to_string(pass)},
                 {"fail_count", std::to_string(fail)}};
    emit(opt, out, payload, lines, summary);
    return fail == 0 ? 0 : 2;
}

int do_unit(const Options& opt, std::ostream& out, const std::string& d_str) {
    FundamentalUnit u = fundamental_unit(parse_int(d_str));
    json payload{{"command", "unit"}, {"D", dec(u.D)},     {"a", dec(u.a)},
                 {"b", dec(u.b)},     {"denom", u.denom},  {"norm", u.norm}};
    emit(opt, out, payload, {}, unit_text(u));
    return 0;
}

int do_unit_from_family(const Options& opt, std::ostream& out,
                        const std::string& fam_str, const std::string& f_str,
                        const std::string& t_str) {
    FamilyId fam = family_from_string(fam_str);
    UnitFromFamily r = unit_from_family(fam, parse_int(f_str), parse_int(t_str));
    std::vector<std::string> lines{"D = " + dec(r.D),
                                   "family unit: " + unit_text(r.unit),
                                   "cf unit:     " + unit_text(r.cf_unit)};
    std::string summary = "covered=" + yesno(r.covered) + " agrees=" + yesno(r.agrees) +
                          " consistent=" + yesno(r.consistent);
    json payload{{"command", "unit_from_family"},
                 {"family", family_name(r.family)},
                 {"f", dec(r.f)},
                 {"t", dec(r.t)},
                 {"D", dec(r.D)},
                 {"unit", junit(r.unit)},
                 {"cf_unit", junit(r.cf_unit)},
                 {"covered", r.covered},
                 {"agrees", r.agrees},
                 {"consistent", r.consistent}};
    emit(opt, out, payload, lines, summary);
    return r.consistent ? 0 : 2;
}

IntPolynomial parse_poly(const std::string& spec) {
    std::vector<Int> coeffs;
    std::string tok;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == ',') {
            if (tok.empty()) throw DomainError("empty coefficient in --poly");
            coeffs.push_back(parse_int(tok));
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(spec[i]))) {
            tok += spec[i];
        }
    }
    return IntPolynomial::from_ints(coeffs);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError("--range expects LO:HI, got '" + spec + "'");
    Int lo = parse_int(spec.substr(0, colon));
    Int hi = parse_int(spec.substr(colon + 1));
    if (lo < 0 || hi < lo) throw DomainError("--range needs 0 <= LO <= HI");
    if (!fits_u64(hi)) throw DomainError("--range endpoint too large");
    return {to_u64(lo), to_u64(hi)};
}

int do_scan(const Options& opt, std::ostream& out, const std::string& poly_str,
            const std::string& range_str, const std::string& filter_str,
            const std::string& csv, std::uint64_t sieve_bound, std::uint64_t seed) {
    ScanSpec spec;
    spec.poly = parse_poly(poly_str);
    std::tie(spec.t_lo, spec.t_hi) = parse_range(range_str);
    spec.filter = filter_from_string(filter_str);
    spec.sieve_bound = sieve_bound;
    spec.seed = seed;
    if (!csv.empty()) spec.csv_path = csv;

    ScanReport rep = density_scan(spec);

    std::vector<std::string> lines;
    lines.push_back("poly: " + spec.poly.to_string());
    lines.push_back("range: [" + std::to_string(spec.t_lo) + ", " +
                    std::to_string(spec.t_hi) + "]  filter: " +
                    filter_name(spec.filter) + "  sieve bound: " +
                    std::to_string(spec.sieve_bound));
    std::string summary = "squarefree: " + std::to_string(rep.squarefree_count) +
                          " / " + std::to_string(rep.total);
    std::string extra;
    if (rep.largest_squarefree_t)
        extra = "largest squarefree t: " + std::to_string(*rep.largest_squarefree_t);
    std::string fails;
    for (std::size_t i = 0; i < rep.first_failures.size(); ++i) {
        if (i) fails += ", ";
        fails += "t=" + std::to_string(rep.first_failures[i].first) + " (p=" +
                 dec(rep.first_failures[i].second) + ")";
    }

    json jfails = json::array();
    for (const auto& [t, p] : rep.first_failures)
        jfails.push_back(json{{"t", std::to_string(t)}, {"witness", dec(p)}});
    json payload{{"command", "scan"},
                 {"poly", jpoly(spec.poly)},
                 {"t_lo", std::to_string(spec.t_lo)},
                 {"t_hi", std::to_string(spec.t_hi)},
                 {"filter", filter_name(spec.filter)},
                 {"sieve_bound", std::to_string(spec.sieve_bound)},
                 {"seed", std::to_string(spec.seed)},
                 {"total", std::to_string(rep.total)},
                 {"squarefree_count", std::to_string(rep.squarefree_count)},
                 {"largest_squarefree_t",
                  rep.largest_squarefree_t
                      ? json(std::to_string(*rep.largest_squarefree_t))
                      : json(nullptr)},
                 {"first_failures", jfails}};
    if (spec.csv_path) payload["csv_path"] = *spec.csv_path;

    if (!opt.json && !opt.quiet) {
        for (const std::string& l : lines) out << l << "\n";
    }
    if (opt.json) {
        out << payload.dump(2) << "\n";
    } else {
        out << summary << "\n";
        if (!opt.quiet) {
            if (!extra.empty()) out << extra << "\n";
            if (!fails.empty()) out << "first non-squarefree: " << fails << "\n";
            if (spec.csv_path) out << "csv written: " << *spec.csv_path << "\n";
        }
    }
    return 0;
}

int do_lemmas(const Options& opt, std::ostream& out, const std::string& f_str) {
    IdentityReport rep = identity_report(parse_int(f_str));
    std::vector<std::string> lines;
    std::size_t applicable = 0;
    json jlines = json::array();
    for (const IdentityLine& l : rep.lines) {
        std::string status = !l.applicable ? "n/a " : (l.pass ? "pass" : "FAIL");
        if (l.applicable) ++applicable;
        lines.push_back(status + "  " + l.id + ": " + l.detail);
        jlines.push_back(json{{"id", l.id},
                              {"applicable", l.applicable},
                              {"pass", l.pass},
                              {"detail", l.detail}});
    }
    std::string summary =
        rep.all_pass
            ? "all identities hold for f=" + dec(rep.f) + " (" +
                  std::to_string(applicable) + " applicable)"
            : "identity FAILURES for f=" + dec(rep.f) + " (see lines above)";
    json payload{{"command", "lemmas"},
                 {"f", dec(rep.f)},
                 {"all_pass", rep.all_pass},
                 {"lines", jlines}};
    emit(opt, out, payload, lines, summary);
    return rep.all_pass ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact continued fractions of sqrt(f), Pell solutions, polynomial "
                 "families, fundamental units, and squarefree density scans"};
    app.name("pellfrac");
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON payload instead of text");
    app.add_flag("--quiet", opt.quiet, "print only the one-line summary");

    std::string f_str, d_str, fam_str, t_str;
    unsigned rank = 1;
    bool negative = false;
    std::uint64_t t_max = 0;
    std::string poly_str, range_str, csv, filter_str = "all";
    std::uint64_t sieve_bound = 10000, seed = 1;

    CLI::App* c_expand = app.add_subcommand("expand", "continued fraction of sqrt(F)");
    c_expand->fallthrough();
    c_expand->add_option("F", f_str, "radicand, not a perfect square")->required();

    CLI::App* c_pell = app.add_subcommand("pell", "smallest solution of X^2 - F*Y^2 = 1");
    c_pell->fallthrough();
    c_pell->add_option("F", f_str)->required();
    CLI::Option* o_rank =
        c_pell->add_option("--rank", rank, "k-th solution instead of the first")
            ->check(CLI::PositiveNumber);
    c_pell->add_flag("--negative", negative, "smallest solution of X^2 - F*Y^2 = -1")
        ->excludes(o_rank);

    CLI::App* c_family = app.add_subcommand("family", "polynomial Pell families F1..F5");
    c_family->fallthrough();
    c_family->require_subcommand(1);
    CLI::App* c_show = c_family->add_subcommand("show", "instantiated polynomials and "
                                                        "predicted expansion pattern");
    c_show->fallthrough();
    c_show->add_option("FAM", fam_str, "one of F1..F5")->required();
    c_show->add_option("F", f_str)->required();
    CLI::App* c_verify = c_family->add_subcommand("verify", "check the prediction "
                                                            "pointwise for t = 0..N");
    c_verify->fallthrough();
    c_verify->add_option("FAM", fam_str, "one of F1..F5")->required();
    c_verify->add_option("F", f_str)->required();
    c_verify->add_option("--t-max", t_max, "largest t to verify")->required();

    CLI::App* c_unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt(D))");
    c_unit->fallthrough();
    c_unit->add_option("D", d_str, "squarefree D >= 2");
    CLI::App* c_ufrom = c_unit->add_subcommand(
        "from-family", "unit of Q(sqrt(f(T))) read off a family, cross-checked");
    c_ufrom->fallthrough();
    c_ufrom->add_option("FAM", fam_str, "one of F1..F5")->required();
    c_ufrom->add_option("F", f_str)->required();
    c_ufrom->add_option("T", t_str)->required();

    CLI::App* c_scan = app.add_subcommand("scan", "squarefree density of poly(t) over a range");
    c_scan->fallthrough();
    c_scan->add_option("--poly", poly_str, "coefficients, constant first, comma-separated")
        ->required();
    c_scan->add_option("--range", range_str, "inclusive t range LO:HI")->required();
    c_scan->add_option("--filter", filter_str, "t subset: all|even|odd|mod4");
    c_scan->add_option("--csv", csv, "write one row per t to this file");
    c_scan->add_option("--sieve-bound", sieve_bound, "largest prime sieved before factoring");
    c_scan->add_option("--seed", seed, "factorization seed (result is seed-independent)");

    CLI::App* c_lemmas = app.add_subcommand("lemmas", "identity catalogue for sqrt(F)");
    c_lemmas->fallthrough();
    c_lemmas->add_option("F", f_str)->required();

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);

        if (*c_expand) return do_expand(opt, out, f_str);
        if (*c_pell) return do_pell(opt, out, f_str, rank, negative);
        if (*c_show) return do_family_show(opt, out, fam_str, f_str);
        if (*c_verify) return do_family_verify(opt, out, fam_str, f_str, t_max);
        if (*c_ufrom) return do_unit_from_family(opt, out, fam_str, f_str, t_str);
        if (*c_unit) {
            if (d_str.empty()) throw DomainError("unit: missing D (or 'from-family ...')");
            return do_unit(opt, out, d_str);
        }
        if (*c_scan)
            return do_scan(opt, out, poly_str, range_str, filter_str, csv, sieve_bound, seed);
        if (*c_lemmas) return do_lemmas(opt, out, f_str);
        err << "error: no subcommand\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pellfrac::cli
