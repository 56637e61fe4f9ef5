// homlin: exact-arithmetic tables, characteristic polynomials, and identity
// verification for the homogenized Linial arrangement family and its Dowling
// generalizations.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homlin/arrangement.hpp"
#include "homlin/dowling.hpp"
#include "homlin/gamma.hpp"
#include "homlin/graph.hpp"
#include "homlin/permutation.hpp"
#include "homlin/routes.hpp"
#include "homlin/series.hpp"
#include "homlin/verify.hpp"

using json = nlohmann::ordered_json;
using namespace homlin;

namespace {

constexpr int kExitIdentityFailure = 1;
constexpr int kExitParameterError = 2;

struct GlobalOpts {
    std::string format = "json";
    bool force = false;
    int jobs = 1;
    int trunc = 6;
};

void emit(const json& j, const GlobalOpts& g) {
    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // csv: flatten {columns: [...], rows: [[...]]} produced by each command
    for (const auto& row : j.at("rows")) {
        bool first = true;
        for (const auto& cell : row) {
            if (!first) std::cout << ',';
            first = false;
            std::cout << (cell.is_string() ? cell.get<std::string>() : cell.dump());
        }
        std::cout << '\n';
    }
}

json poly_json(const IntPolynomial& p) { return json(p.to_decimal_strings()); }

void guard(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what + " (override with --force)");
}

// ---- table ----------------------------------------------------------------

int cmd_table(const std::string& family, int n_max, int m, const GlobalOpts& g) {
    json values = json::array();
    json rows = json::array();
    auto push = [&](int n, const Int& v) {
        values.push_back({{"n", n}, {"value", v.str()}});
        rows.push_back({std::to_string(n), v.str()});
    };
    if (family == "g") {
        guard(g.force ? n_max <= 7 : n_max <= 6, "g-table bounded to n <= 6");
        for (int n = 1; n <= n_max; ++n) push(n, genocchi(n));
    } else if (family == "h") {
        guard(g.force ? n_max <= 6 : n_max <= 4, "h-table bounded to n <= 4");
        for (int n = 0; n <= n_max; ++n) push(n, median_genocchi(n));
    } else if (family == "dperm" || family == "dcycle") {
        guard(g.force ? n_max <= 6 : n_max <= 4, "D-permutation tables bounded to n <= 4");
        PermFamily f = family == "dperm" ? PermFamily::dperm : PermFamily::dcycle;
        for (int n = 1; n <= n_max; ++n) {
            std::vector<int> ground(2 * n);
            for (int i = 0; i < 2 * n; ++i) ground[i] = i + 1;
            push(n, count_family(f, ground).count);
        }
    } else if (family == "labeled_dperm" || family == "labeled_dcycle") {
        guard(g.force ? n_max <= 4 : n_max <= 3, "labeled tables bounded to n <= 3");
        guard(m <= 6, "labeled tables bounded to m <= 6");
        PermFamily f =
            family == "labeled_dperm" ? PermFamily::labeled_dperm : PermFamily::labeled_dcycle;
        for (int n = 1; n <= n_max; ++n) {
            std::vector<int> ground(2 * n);
            for (int i = 0; i < 2 * n; ++i) ground[i] = i + 1;
            push(n, count_family(f, ground, m).count);
        }
    } else if (family == "rB") {
        guard(n_max <= 12, "rB table bounded to n <= 12");
        IntSeries s = rhs_bbd(std::max(n_max, 1));
        for (int n = 1; n <= n_max; ++n) push(n, s.coeff(n));
    } else if (family == "descent") {
        guard(g.force ? n_max <= 5 : n_max <= 4, "descent table bounded to n <= 4");
        for (int n = 1; n <= n_max; ++n) push(n, count_descent_class(n));
    } else {
        throw ParameterError("unknown table family: " + family +
                             " (g, h, dperm, dcycle, labeled_dperm, labeled_dcycle, rB, descent)");
    }
    emit(json{{"table", family}, {"m", m}, {"values", values}, {"rows", rows}}, g);
    return 0;
}

// ---- chi / mobius / regions -------------------------------------------------

int cmd_chi(const std::string& family, int n, int m, const std::string& route,
            const GlobalOpts& g) {
    ChiFamily fam = chi_family_from_string(family);
    if (route == "all") {
        auto routes = available_chi_routes(fam, n, m, g.force);
        if (routes.empty()) throw ParameterError("no route available for these parameters");
        json per_route = json::object();
        IntPolynomial first;
        bool agree = true;
        for (ChiRoute r : routes) {
            IntPolynomial chi = chi_by_route(fam, n, m, r, g.force);
            if (per_route.empty()) first = chi;
            else if (!(chi == first)) agree = false;
            per_route[to_string(r)] = poly_json(chi);
        }
        json rows = json::array();
        rows.push_back({family, std::to_string(n), std::to_string(m), agree ? "agree" : "DISAGREE"});
        emit(json{{"family", family},
                  {"n", n},
                  {"m", m},
                  {"routes", per_route},
                  {"agree", agree},
                  {"rows", rows}},
             g);
        return agree ? 0 : kExitIdentityFailure;
    }
    IntPolynomial chi = chi_by_route(fam, n, m, chi_route_from_string(route), g.force);
    json rows = json::array();
    rows.push_back(chi.to_decimal_strings());
    emit(json{{"family", family},
              {"n", n},
              {"m", m},
              {"route", route},
              {"length", chi_length(fam, n)},
              {"coefficients", poly_json(chi)},
              {"pretty", chi.to_string()},
              {"rows", rows}},
         g);
    return 0;
}

int cmd_mobius(const std::string& family, int n, int m, const GlobalOpts& g) {
    IntPolynomial chi =
        chi_by_route(chi_family_from_string(family), n, m, ChiRoute::poset_mobius, g.force);
    // mu(0,1) is the constant coefficient of the length-r polynomial
    Int mu = chi.coeff(0);
    json rows = json::array();
    rows.push_back({mu.str()});
    emit(json{{"family", family}, {"n", n}, {"m", m}, {"mobius", mu.str()}, {"rows", rows}}, g);
    return 0;
}

int cmd_regions(const std::string& family, int n, int m, const std::string& route,
                const GlobalOpts& g) {
    ChiFamily fam = chi_family_from_string(family);
    IntPolynomial chi = chi_by_route(fam, n, m, chi_route_from_string(route), g.force);
    Int regions = zaslavsky_regions(chi);
    json rows = json::array();
    rows.push_back({regions.str()});
    emit(json{{"family", family},
              {"n", n},
              {"m", m},
              {"route", route},
              {"regions", regions.str()},
              {"bounded_regions", zaslavsky_bounded_regions(chi).str()},
              {"rows", rows}},
         g);
    return 0;
}

// ---- series -----------------------------------------------------------------

int cmd_series(const std::string& name, int m, const GlobalOpts& g) {
    json coeffs = json::array();
    json rows = json::array();
    if (name == "bd" || name == "bbd") {
        IntSeries s = name == "bd" ? rhs_bd(g.trunc) : rhs_bbd(g.trunc);
        for (int k = 0; k <= g.trunc; ++k) {
            coeffs.push_back(poly_json(IntPolynomial(s.coeff(k))));
            rows.push_back({std::to_string(k), s.coeff(k).str()});
        }
    } else if (name == "char") {
        PolySeries s = rhs_char_series(m, g.trunc);
        for (int k = 0; k <= g.trunc; ++k) {
            coeffs.push_back(poly_json(s.coeff(k)));
            rows.push_back({std::to_string(k), s.coeff(k).to_string()});
        }
    } else {
        throw ParameterError("unknown series: " + name + " (bd, bbd, char)");
    }
    emit(json{{"series", name}, {"m", m}, {"trunc", g.trunc}, {"coefficients", coeffs}, {"rows", rows}},
         g);
    return 0;
}

// ---- verify -------------------------------------------------------------------

json report_json(const VerificationReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back({{"identity", it.identity},
                         {"params", it.params},
                         {"lhs", it.lhs},
                         {"rhs", it.rhs},
                         {"pass", it.pass},
                         {"criterion", it.criterion},
                         {"ms", it.ms}});
    return json{{"suite", rep.suite},
                {"bounds", rep.bounds},
                {"pass", rep.pass},
                {"total_ms", rep.total_ms},
                {"items", items}};
}

int cmd_verify(const std::string& suite, const GlobalOpts& g) {
    VerifyOptions opt;
    opt.force = g.force;
    opt.jobs = g.jobs;
    opt.trunc = g.trunc;
    std::vector<VerificationReport> reports;
    if (suite == "all") reports = run_all_suites(opt);
    else reports.push_back(run_suite(suite, opt));

    bool pass = true;
    json out = json::array();
    json rows = json::array();
    for (const auto& rep : reports) {
        pass = pass && rep.pass;
        out.push_back(report_json(rep));
        for (const auto& it : rep.items)
            rows.push_back({rep.suite, it.identity, it.params, it.lhs, it.rhs,
                            it.pass ? "pass" : "FAIL"});
    }
    emit(json{{"verify", suite}, {"pass", pass}, {"reports", out}, {"rows", rows}}, g);
    return pass ? 0 : kExitIdentityFailure;
}

// ---- psi / enumerate ----------------------------------------------------------

int cmd_psi(const std::string& file, const GlobalOpts& g) {
    IDForest tree;
    if (file.empty() || file == "-") {
        tree = IDForest::from_edge_list(std::cin);
    } else {
        std::ifstream in(file);
        if (!in) throw ParameterError("cannot open " + file);
        tree = IDForest::from_edge_list(in);
    }
    Permutation p = psi(tree);
    json rows = json::array();
    rows.push_back({p.to_string()});
    emit(json{{"cycle", p.to_string()},
              {"is_d_cycle", is_d_permutation(p) && p.cycle_count() == 1},
              {"rows", rows}},
         g);
    return 0;
}

int cmd_enumerate(const std::string& family, int n, int m, const std::string& ground_csv,
                  const GlobalOpts& g) {
    PermFamily f = perm_family_from_string(family);
    std::vector<int> ground;
    if (!ground_csv.empty()) {
        std::istringstream in(ground_csv);
        std::string tok;
        while (std::getline(in, tok, ',')) ground.push_back(std::stoi(tok));
    } else {
        for (int i = 1; i <= 2 * n; ++i) ground.push_back(i);
    }
    guard(g.force ? ground.size() <= 12 : ground.size() <= 10,
          "enumeration bounded to ground size 10");
    json perms = json::array();
    json rows = json::array();
    Int count = 0;
    if (f == PermFamily::labeled_dperm || f == PermFamily::labeled_dcycle) {
        if (!ground_csv.empty())
            throw ParameterError("labeled families require ground [2n]; use --n");
        enumerate_labeled_family(f, 2 * n, m, [&](const LabeledPermutation& lp) {
            perms.push_back(lp.to_string());
            rows.push_back({lp.to_string()});
            count += 1;
        });
    } else {
        enumerate_family(f, ground, [&](const Permutation& p) {
            perms.push_back(p.to_string());
            rows.push_back({p.to_string()});
            count += 1;
        });
    }
    emit(json{{"family", family},
              {"m", m},
              {"count", count.str()},
              {"permutations", perms},
              {"rows", rows}},
         g);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of homogenized Linial and Dowling arrangements"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--format", g.format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    bool csv = false;
    app.add_flag("--csv", csv, "Shorthand for --format csv");
    app.add_flag("--force", g.force, "Override tractability bounds / include optional items");
    app.add_option("--jobs", g.jobs, "Parallel suites for `verify all`")->check(CLI::PositiveNumber);
    app.add_option("--trunc", g.trunc, "Series truncation order")->check(CLI::PositiveNumber);

    std::string family = "typeA", route = "poset_mobius", suite = "all", series_name = "bd";
    std::string file, ground_csv;
    int n = 1, n_max = 4, m = 1;

    auto* t = app.add_subcommand("table", "Counting tables (g, h, dperm, dcycle, labeled_*, rB, descent)");
    t->add_option("--family", family, "Table family")->required();
    t->add_option("--n-max", n_max, "Largest n");
    t->add_option("--m", m, "Label modulus for labeled families");

    auto* c = app.add_subcommand("chi", "Characteristic polynomial by one route or `--route all`");
    c->add_option("--family", family, "braid, typeA, typeB, dowling");
    c->add_option("--n", n, "Family index n")->required();
    c->add_option("--m", m, "Dowling modulus");
    c->add_option("--route", route,
                  "poset_mobius, dperm_counts, id_forests, rational_arrangement, "
                  "finite_field_interpolation, all");

    auto* mo = app.add_subcommand("mobius", "mu(0,1) of the intersection lattice");
    mo->add_option("--family", family, "braid, typeA, typeB, dowling");
    mo->add_option("--n", n, "Family index n")->required();
    mo->add_option("--m", m, "Dowling modulus");

    auto* r = app.add_subcommand("regions", "Region counts via Zaslavsky");
    r->add_option("--family", family, "braid, typeA, typeB, dowling");
    r->add_option("--n", n, "Family index n")->required();
    r->add_option("--m", m, "Dowling modulus");
    r->add_option("--route", route, "chi route to use");

    auto* s = app.add_subcommand("series", "Generating series (bd, bbd, char)");
    s->add_option("name", series_name, "bd, bbd, or char")->required();
    s->add_option("--m", m, "Modulus for the char series");

    auto* v = app.add_subcommand("verify", "Run a verification suite (or `all`)");
    v->add_option("suite", suite, "Suite name or `all`");
    bool list_suites = false;
    v->add_flag("--list", list_suites, "List suite names");

    auto* p = app.add_subcommand("psi", "Apply the ID-tree -> D-cycle bijection to an edge list");
    p->add_option("--file", file, "Edge-list file ('-' or empty reads stdin)");

    auto* e = app.add_subcommand("enumerate", "Stream a permutation family");
    e->add_option("--family", family, "dumont, dumont_derangement, dperm, dcycle, labeled_dperm, labeled_dcycle, descent_class")->required();
    e->add_option("--n", n, "Ground is [2n]");
    e->add_option("--m", m, "Label modulus");
    e->add_option("--ground", ground_csv, "Explicit ground set, e.g. 1,2,4 (dperm/dcycle only)");

    CLI11_PARSE(app, argc, argv);
    if (csv) g.format = "csv";

    try {
        if (app.got_subcommand(t)) return cmd_table(family, n_max, m, g);
        if (app.got_subcommand(c)) return cmd_chi(family, n, m, route, g);
        if (app.got_subcommand(mo)) return cmd_mobius(family, n, m, g);
        if (app.got_subcommand(r)) return cmd_regions(family, n, m, route, g);
        if (app.got_subcommand(s)) return cmd_series(series_name, m, g);
        if (app.got_subcommand(v)) {
            if (list_suites) {
                for (const auto& name : suite_names()) std::cout << name << "\n";
                return 0;
            }
            return cmd_verify(suite, g);
        }
        if (app.got_subcommand(p)) return cmd_psi(file, g);
        if (app.got_subcommand(e)) return cmd_enumerate(family, n, m, ground_csv, g);
    } catch (const ParameterError& err) {
        std::cerr << "parameter error: " << err.what() << "\n";
        return kExitParameterError;
    } catch (const DomainError& err) {
        std::cerr << "domain error: " << err.what() << "\n";
        return kExitParameterError;
    } catch (const IntegrityError& err) {
        std::cerr << "integrity error: " << err.what() << "\n";
        return kExitIdentityFailure;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIdentityFailure;
    }
    return 0;
}
