// lamin -- construction, spectra, exact polynomials, extremal search, and
// claim verification for unicyclic graphs and their complements.
//
// Exit codes: 0 success / all claims hold, 1 verification failure,
// 2 usage error, 3 internal error (convergence or bound).
#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamin/canonical.hpp"
#include "lamin/charpoly.hpp"
#include "lamin/eigen.hpp"
#include "lamin/enumerate.hpp"
#include "lamin/families.hpp"
#include "lamin/graph.hpp"
#include "lamin/graph6.hpp"
#include "lamin/intpoly.hpp"
#include "lamin/sturm.hpp"
#include "lamin/verify.hpp"

namespace {

using lamin::Graph;
using lamin::Int;
using lamin::IntPoly;
using lamin::Rat;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kDefaultMaxN = 11;

struct Config {
    double tol = 1e-10;
    double gap_tol = 1e-7;
    int threads = 1;
    std::string format = "json";
    std::uint64_t seed = 0;
    int max_n = kDefaultMaxN;
};

/// Floating-point values always print with 15 significant digits.
std::string num15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

json doubles15(const std::vector<double>& xs) {
    json a = json::array();
    for (double x : xs) a.push_back(num15(x));
    return a;
}

/// Exact decimal string of a rational whose denominator divides 10^k
/// (always the case for bisection endpoints); otherwise "num/den".
std::string rat_decimal(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    Int d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return num.str() + "/" + den.str();
    const int k = std::max(twos, fives);
    Int v = num * (boost::multiprecision::pow(Int(10), static_cast<unsigned>(k)) / den);
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string digits = v.str();
    if (static_cast<int>(digits.size()) <= k)
        digits.insert(0, std::string(static_cast<size_t>(k) + 1 - digits.size(), '0'));
    digits.insert(digits.size() - static_cast<size_t>(k), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return (neg ? "-" : "") + digits;
}

json coeff_strings(const IntPoly& p) {
    json a = json::array();
    for (const Int& c : p.coeffs()) a.push_back(c.str());
    return a;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string stdin_token() {
    std::string tok;
    if (!(std::cin >> tok)) throw std::invalid_argument("no graph6 input on standard input");
    return tok;
}

Graph build_family(const std::string& family, long long n, long long p, long long q) {
    auto need = [&](long long v, const char* flag) {
        if (v < 0)
            throw std::invalid_argument("family '" + family + "' requires " + flag);
        return v;
    };
    if (family == "star") return lamin::star(static_cast<int>(need(n, "--n")));
    if (family == "cycle") return lamin::cycle(static_cast<int>(need(n, "--n")));
    if (family == "complete") return lamin::complete(static_cast<int>(need(n, "--n")));
    if (family == "s3") return lamin::s3(static_cast<int>(need(n, "--n"))).graph;
    if (family == "u") return lamin::u_pq(need(p, "--p"), need(q, "--q")).graph;
    if (family == "uprime") return lamin::u_prime(need(p, "--p")).graph;
    throw std::invalid_argument("unknown family '" + family + "'");
}

int cmd_construct(const std::string& family, long long n, long long p, long long q,
                  bool complement_flag) {
    Graph g = build_family(family, n, p, q);
    if (complement_flag) g = lamin::complement(g);
    std::cout << lamin::to_graph6(g) << "\n";
    return kExitOk;
}

int cmd_spectrum(const Config& cfg, std::string code, bool complement_flag) {
    if (code.empty()) code = stdin_token();
    Graph g = lamin::from_graph6(code);
    if (complement_flag) g = lamin::complement(g);
    const lamin::Spectrum sp = lamin::full_spectrum(g, cfg.tol, cfg.gap_tol);

    if (cfg.format == "json") {
        json out;
        out["command"] = "spectrum";
        out["graph6"] = code;
        out["complement"] = complement_flag;
        out["order"] = g.order();
        out["eigenvalues"] = doubles15(sp.eigenvalues);
        out["least"] = {{"value", num15(sp.least_value)},
                        {"vector", doubles15(sp.least_vector)},
                        {"multiplicity", sp.least_multiplicity},
                        {"residual", num15(sp.residual)}};
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::vector<std::string> ev, xv;
        for (double v : sp.eigenvalues) ev.push_back(num15(v));
        for (double v : sp.least_vector) xv.push_back(num15(v));
        std::cout << "graph6,complement,order,least_value,least_multiplicity,residual,"
                     "eigenvalues,least_vector\n";
        std::cout << csv_quote(code) << ',' << (complement_flag ? 1 : 0) << ',' << g.order()
                  << ',' << num15(sp.least_value) << ',' << sp.least_multiplicity << ','
                  << num15(sp.residual) << ',' << join(ev, ";") << ',' << join(xv, ";") << "\n";
    } else {
        std::vector<std::string> ev, xv;
        for (double v : sp.eigenvalues) ev.push_back(num15(v));
        for (double v : sp.least_vector) xv.push_back(num15(v));
        std::cout << "graph " << code << (complement_flag ? " (complemented)" : "") << ", order "
                  << g.order() << "\n";
        std::cout << "eigenvalues: " << join(ev, " ") << "\n";
        std::cout << "least value " << num15(sp.least_value) << ", multiplicity "
                  << sp.least_multiplicity << ", residual " << num15(sp.residual) << "\n";
        std::cout << "least vector: " << join(xv, " ") << "\n";
    }
    return kExitOk;
}

int cmd_poly(const Config& cfg, const std::string& which, long long p, long long q,
             std::string code, bool least_root_flag, const std::string& eval_at) {
    IntPoly poly;
    json params = json::object();
    if (which == "f") {
        if (p < 0 || q < 0) throw std::invalid_argument("poly f requires --p and --q");
        poly = lamin::paper_f(p, q);
        params["p"] = p;
        params["q"] = q;
    } else if (which == "g" || which == "gbar") {
        if (p < 0) throw std::invalid_argument("poly " + which + " requires --p");
        poly = which == "g" ? lamin::paper_g(p) : lamin::paper_g_bar(p);
        params["p"] = p;
    } else {  // charpoly-of-graph6
        if (code.empty()) code = stdin_token();
        poly = lamin::char_poly(lamin::from_graph6(code));
        params["graph6"] = code;
    }

    std::string eval_value;
    if (!eval_at.empty()) eval_value = poly.eval(Int(eval_at)).str();

    bool have_root = false;
    lamin::RootBracket bracket;
    if (least_root_flag) {
        bracket = lamin::least_real_root(poly);
        have_root = true;
    }

    if (cfg.format == "json") {
        json out;
        out["command"] = "poly";
        out["which"] = which;
        out["parameters"] = params;
        out["degree"] = poly.degree();
        out["coefficients"] = coeff_strings(poly);
        if (!eval_at.empty()) out["eval"] = {{"at", eval_at}, {"value", eval_value}};
        if (have_root)
            out["least_root"] = {{"lo", rat_decimal(bracket.lo)},
                                 {"hi", rat_decimal(bracket.hi)},
                                 {"midpoint", num15(bracket.midpoint())}};
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::vector<std::string> cs;
        for (const Int& c : poly.coeffs()) cs.push_back(c.str());
        std::cout << "which,p,q,graph6,degree,coefficients,eval_at,eval_value,"
                     "root_lo,root_hi,root_midpoint\n";
        std::cout << which << ',' << (params.contains("p") ? std::to_string(p) : "") << ','
                  << (params.contains("q") ? std::to_string(q) : "") << ','
                  << csv_quote(params.contains("graph6") ? code : "") << ',' << poly.degree()
                  << ',' << join(cs, ";") << ',' << eval_at << ',' << eval_value << ','
                  << (have_root ? rat_decimal(bracket.lo) : "") << ','
                  << (have_root ? rat_decimal(bracket.hi) : "") << ','
                  << (have_root ? num15(bracket.midpoint()) : "") << "\n";
    } else {
        std::cout << "polynomial " << which;
        if (params.contains("p")) std::cout << " p=" << p;
        if (params.contains("q")) std::cout << " q=" << q;
        if (params.contains("graph6")) std::cout << " graph6=" << code;
        std::cout << ", degree " << poly.degree() << "\n";
        std::cout << "coefficients (ascending): ";
        std::vector<std::string> cs;
        for (const Int& c : poly.coeffs()) cs.push_back(c.str());
        std::cout << join(cs, " ") << "\n";
        if (!eval_at.empty()) std::cout << "value at " << eval_at << ": " << eval_value << "\n";
        if (have_root)
            std::cout << "least root in (" << rat_decimal(bracket.lo) << ", "
                      << rat_decimal(bracket.hi) << "], midpoint " << num15(bracket.midpoint())
                      << "\n";
    }
    return kExitOk;
}

int cmd_search(const Config& cfg, int n, const std::string& objective) {
    if (n > cfg.max_n) {
        std::cerr << "error: search order " << n << " above the exhaustive bound " << cfg.max_n
                  << " (raise with --max-n)\n";
        return kExitInternal;
    }
    const lamin::SearchReport r = lamin::minimize(n, objective, cfg.tol, cfg.gap_tol, cfg.threads);

    if (cfg.format == "json") {
        json out;
        out["command"] = "search";
        out["n"] = r.n;
        out["objective"] = r.objective;
        out["class_size"] = r.class_size;
        out["min_value"] = num15(r.min_value);
        json ms = json::array();
        for (const auto& m : r.minimizers)
            ms.push_back({{"graph6", m.graph6}, {"canonical_form", m.canonical_form}});
        out["minimizers"] = ms;
        out["solver_tol"] = num15(r.solver_tol);
        out["gap_tol"] = num15(r.gap_tol);
        out["notes"] = r.notes;
        out["wall_time_seconds"] = num15(r.wall_time_seconds);
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "n,objective,class_size,min_value,graph6,canonical_form,solver_tol,"
                     "gap_tol,notes\n";
        for (const auto& m : r.minimizers)
            std::cout << r.n << ',' << r.objective << ',' << r.class_size << ','
                      << num15(r.min_value) << ',' << csv_quote(m.graph6) << ','
                      << m.canonical_form << ',' << num15(r.solver_tol) << ','
                      << num15(r.gap_tol) << ',' << csv_quote(r.notes) << "\n";
    } else {
        std::cout << "search n=" << r.n << " objective=" << r.objective << " over "
                  << r.class_size << " graphs\n";
        std::cout << "minimum " << num15(r.min_value) << " attained by:\n";
        for (const auto& m : r.minimizers)
            std::cout << "  " << m.graph6 << "  (canonical " << m.canonical_form << ")\n";
        if (!r.notes.empty()) std::cout << "notes: " << r.notes << "\n";
    }
    return kExitOk;
}

void emit_verdict(const Config& cfg, const lamin::Verdict& v, bool first) {
    if (cfg.format == "json") {
        json out;
        out["claim"] = v.claim_id;
        out["parameters"] = v.parameters;
        out["holds"] = v.holds;
        out["witnesses"] = v.witnesses;
        out["notes"] = v.notes;
        std::cout << out.dump() << "\n";  // one verdict per line
    } else if (cfg.format == "csv") {
        if (first) std::cout << "claim,n,holds,notes,witnesses\n";
        const auto it = v.parameters.find("n");
        std::cout << v.claim_id << ',' << (it != v.parameters.end() ? it->second : "") << ','
                  << (v.holds ? "true" : "false") << ',' << csv_quote(v.notes) << ','
                  << csv_quote(join(v.witnesses, " | ")) << "\n";
    } else {
        const auto it = v.parameters.find("n");
        std::cout << v.claim_id << (it != v.parameters.end() ? " n=" + it->second : "") << ": "
                  << (v.holds ? "HOLDS" : "FAILS") << "\n";
        if (!v.notes.empty()) std::cout << "  notes: " << v.notes << "\n";
        for (const auto& w : v.witnesses) std::cout << "  witness: " << w << "\n";
    }
}

struct ClaimPlan {
    std::string name;
    int lo = 0;
    int hi = 0;
};

int run_verify(const Config& cfg, const std::string& claim, const std::string& range,
               int trials) {
    const std::vector<std::string> known{"lemma2.1", "lemma2.2",   "lemma3.1", "lemma3.2",
                                         "lemma3.3", "theorem3.4", "remark-un"};
    auto default_range = [&](const std::string& c) -> std::pair<int, int> {
        if (c == "lemma2.1") return {13, 60};
        if (c == "lemma2.2") return {20, 60};
        if (c == "lemma3.1" || c == "lemma3.2") return {5, 10};
        if (c == "lemma3.3") return {5, 9};
        if (c == "theorem3.4") return {20, 40};
        return {6, std::min(kDefaultMaxN, cfg.max_n)};  // remark-un, desk bound
    };

    std::vector<ClaimPlan> plan;
    if (claim == "all") {
        if (!range.empty())
            throw std::invalid_argument("--n-range cannot be combined with 'all'");
        for (const auto& c : known) {
            auto [lo, hi] = default_range(c);
            plan.push_back({c, lo, hi});
        }
    } else {
        auto [lo, hi] = default_range(claim);
        if (!range.empty()) {
            const size_t colon = range.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("--n-range must look like a:b");
            lo = std::stoi(range.substr(0, colon));
            hi = std::stoi(range.substr(colon + 1));
            if (lo > hi) throw std::invalid_argument("--n-range must have a <= b");
        }
        plan.push_back({claim, lo, hi});
    }

    // exhaustive-scan claims respect the desk bound
    for (const auto& cp : plan) {
        if ((cp.name == "lemma3.3" || cp.name == "remark-un") && cp.hi > cfg.max_n) {
            std::cerr << "error: claim " << cp.name << " scans whole classes; n up to " << cp.hi
                      << " is above the exhaustive bound " << cfg.max_n
                      << " (raise with --max-n)\n";
            return kExitInternal;
        }
    }

    bool all_hold = true;
    bool first = true;
    for (const auto& cp : plan) {
        for (int n = cp.lo; n <= cp.hi; ++n) {
            lamin::Verdict v;
            if (cp.name == "lemma2.1") v = lamin::check_lemma_2_1(n, cfg.tol, cfg.gap_tol);
            else if (cp.name == "lemma2.2") v = lamin::check_lemma_2_2(n, cfg.tol, cfg.gap_tol);
            else if (cp.name == "lemma3.1") v = lamin::check_lemma_3_1(n, trials, cfg.seed);
            else if (cp.name == "lemma3.2") v = lamin::check_lemma_3_2(n, trials, cfg.seed);
            else if (cp.name == "lemma3.3")
                v = lamin::check_lemma_3_3(n, cfg.tol, cfg.gap_tol);
            else if (cp.name == "theorem3.4")
                v = lamin::check_theorem_3_4(n, cfg.tol, cfg.gap_tol, cfg.threads, cfg.max_n);
            else
                v = lamin::check_remark_minimizer_un(n, cfg.tol, cfg.gap_tol, cfg.threads);
            emit_verdict(cfg, v, first);
            first = false;
            if (!v.holds) all_hold = false;
        }
    }
    return all_hold ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    const unsigned hw = std::thread::hardware_concurrency();
    cfg.threads = hw == 0 ? 1 : static_cast<int>(hw);

    CLI::App app{"least-eigenvalue toolkit for unicyclic graphs and their complements"};
    app.require_subcommand(1);
    app.add_option("--tol", cfg.tol, "eigensolver residual tolerance")->capture_default_str();
    app.add_option("--gap-tol", cfg.gap_tol, "eigenvalue clustering tolerance")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker pool size")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    auto* max_n_opt =
        app.add_option("--max-n", cfg.max_n, "bound for exhaustive class scans")
            ->capture_default_str();

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named graph as graph6");
    construct->fallthrough();
    std::string family;
    long long opt_n = -1, opt_p = -1, opt_q = -1;
    bool construct_complement = false;
    construct->add_option("--family", family, "one of star|cycle|complete|s3|u|uprime")
        ->required()
        ->check(CLI::IsMember({"star", "cycle", "complete", "s3", "u", "uprime"}));
    construct->add_option("--n", opt_n, "order (star, cycle, complete, s3)");
    construct->add_option("--p", opt_p, "pendant-side parameter (u, uprime)");
    construct->add_option("--q", opt_q, "triangle-side parameter (u)");
    construct->add_flag("--complement", construct_complement, "emit the complement instead");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "full adjacency spectrum of a graph6 graph");
    spectrum->fallthrough();
    std::string spectrum_code;
    bool spectrum_complement = false;
    spectrum->add_option("graph6", spectrum_code, "graph6 code (stdin if omitted)");
    spectrum->add_flag("--complement", spectrum_complement, "analyze the complement instead");

    // poly
    auto* poly = app.add_subcommand("poly", "exact polynomials and certified least roots");
    poly->fallthrough();
    std::string which, poly_code, eval_at;
    bool least_root_flag = false;
    poly->add_option("which", which, "f | g | gbar | charpoly-of-graph6")
        ->required()
        ->check(CLI::IsMember({"f", "g", "gbar", "charpoly-of-graph6"}));
    poly->add_option("--p", opt_p, "parameter p");
    poly->add_option("--q", opt_q, "parameter q");
    poly->add_option("--graph6", poly_code, "graph6 code for charpoly-of-graph6");
    poly->add_flag("--least-root", least_root_flag, "include the certified least-root bracket");
    poly->add_option("--eval", eval_at, "evaluate exactly at this integer");

    // search
    auto* search = app.add_subcommand("search", "exhaustive minimization over unicyclic graphs");
    search->fallthrough();
    int search_n = 0;
    std::string objective = "lamin-complement";
    search->add_option("--n", search_n, "graph order")->required();
    search->add_option("--objective", objective, "lamin-direct | lamin-complement")
        ->check(CLI::IsMember({"lamin-direct", "lamin-complement"}))
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "check claims, streaming one verdict per order");
    verify->fallthrough();
    std::string claim, n_range;
    int trials = 10000;
    verify->add_option("claim", claim, "claim id or 'all'")
        ->required()
        ->check(CLI::IsMember({"lemma2.1", "lemma2.2", "lemma3.1", "lemma3.2", "lemma3.3",
                               "theorem3.4", "remark-un", "all"}));
    verify->add_option("--n-range", n_range, "inclusive order range a:b");
    verify->add_option("--trials", trials, "randomized trials per order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (max_n_opt->count() > 0 && cfg.max_n != kDefaultMaxN)
        std::cerr << "warning: exhaustive bound overridden to n <= " << cfg.max_n
                  << "; class size grows ~x2.9 per step\n";
    if (cfg.tol <= 0 || cfg.gap_tol < cfg.tol) {
        std::cerr << "error: need --tol > 0 and --gap-tol >= --tol\n";
        return kExitUsage;
    }
    if (cfg.threads < 1) {
        std::cerr << "error: --threads must be at least 1\n";
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(family, opt_n, opt_p, opt_q, construct_complement);
        if (spectrum->parsed()) return cmd_spectrum(cfg, spectrum_code, spectrum_complement);
        if (poly->parsed())
            return cmd_poly(cfg, which, opt_p, opt_q, poly_code, least_root_flag, eval_at);
        if (search->parsed()) return cmd_search(cfg, search_n, objective);
        if (verify->parsed()) return run_verify(cfg, claim, n_range, trials);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
