#include "smoothdual/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "smoothdual/errors.hpp"
#include "smoothdual/json_io.hpp"
#include "smoothdual/retract.hpp"
#include "smoothdual/verify.hpp"

namespace smoothdual::cli {

namespace {

using json_io::Json;

struct Options {
    std::string component;
    std::string point;
    std::string param;
    std::string points;
    std::string sigma;
    std::string t;
    std::optional<double> q;
    std::optional<int> n;
    Limits limits;
};

// Inline JSON, or "@path" to read it from a file.
Json load(const std::string &text, const char *what)
{
    if (text.empty()) throw ValidationError(std::string("missing --") + what);
    std::string body = text;
    if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw ValidationError("cannot read " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const Json::parse_error &e) {
        throw ValidationError(std::string("malformed JSON in --") + what + ": " + e.what());
    }
}

Json error_report(const char *kind, const std::string &message)
{
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

Json cmd_strata(const Options &o)
{
    const Component c = json_io::component_from(load(o.component, "component"));
    Json strata = Json::array();
    for (const auto &s : enumerate_strata(c, o.limits)) strata.push_back(json_io::to_json(s));
    return Json{{"component", json_io::to_json(c)}, {"count", strata.size()}, {"strata", std::move(strata)}};
}

Json cmd_orbits(const Options &o)
{
    const Component c = json_io::component_from(load(o.component, "component"));
    Json orbits = Json::array();
    for (const auto &[orbit, stratum] : orbit_stratum_bijection(c, o.limits)) {
        Json item = json_io::to_json(orbit);
        item["cycle_type"] = stratum.cycle_type();
        orbits.push_back(std::move(item));
    }
    return Json{{"component", json_io::to_json(c)}, {"count", orbits.size()}, {"orbits", std::move(orbits)}};
}

Json cmd_hp(const Options &o)
{
    const Component c = json_io::component_from(load(o.component, "component"));
    const HpDims hp = component_hp(c, o.limits);
    return Json{{"hp0", hp.hp0}, {"hp1", hp.hp1}, {"lemma22", lemma22_dimension(c, o.limits)}};
}

Json numeric(const SymPoint &y, double q)
{
    Json blocks = Json::array();
    for (const auto &b : y.blocks()) {
        Json arr = Json::array();
        for (const auto &z : b) arr.push_back(json_io::to_json(to_complex(z, q)));
        blocks.push_back(std::move(arr));
    }
    return blocks;
}

Json cmd_project(const Options &o)
{
    const StratumPoint p = json_io::stratum_point_from(load(o.point, "point"));
    const SymPoint y = o.component.empty() ? project(p) : project(p, json_io::component_from(load(o.component, "component")));
    Json report{{"point", json_io::to_json(y)}};
    if (o.q) report["numeric"] = numeric(y, *o.q);
    return report;
}

Json cmd_fiber(const Options &o)
{
    const Component c = json_io::component_from(load(o.component, "component"));
    const SymPoint y = json_io::sym_point_from(load(o.point, "point"));
    Json pts = Json::array();
    for (const auto &p : fiber(y, c, o.limits)) pts.push_back(json_io::to_json(p));
    return Json{{"query", json_io::to_json(y)}, {"count", pts.size()}, {"fiber", std::move(pts)}};
}

Json cmd_retract(const Options &o, bool is_homotopy)
{
    if (o.param.empty() == o.point.empty()) throw ValidationError("give exactly one of --param or --point");
    std::optional<Rational> t;
    if (is_homotopy) {
        if (o.t.empty()) throw ValidationError("missing --t");
        t = json_io::rational_from(Json(o.t));
    }
    Json report;
    if (!o.param.empty()) {
        const LParameter phi = json_io::lparameter_from(load(o.param, "param"));
        const LParameter out = t ? homotopy(phi, *t) : temper_parameter(phi);
        report["param"] = json_io::to_json(out);
        report["tempered"] = is_tempered(out);
    } else {
        const StratumPoint p = json_io::stratum_point_from(load(o.point, "point"));
        report["point"] = json_io::to_json(t ? homotopy(p, *t) : temper_point(p));
    }
    if (t) report["t"] = t->str();
    return report;
}

Json cmd_symcoords(const Options &o)
{
    if (!o.n || *o.n < 1) throw ValidationError("--n must be a positive integer");
    if (o.points.empty() == o.sigma.empty()) throw ValidationError("give exactly one of --points or --sigma");
    auto read_list = [&](const std::string &text, const char *what) {
        const Json arr = load(text, what);
        if (!arr.is_array()) throw ValidationError(std::string("--") + what + " must be a JSON array");
        std::vector<Complex> out;
        for (const auto &x : arr) out.push_back(json_io::complex_from(x));
        if (static_cast<int>(out.size()) != *o.n)
            throw ValidationError(std::string("--") + what + " has " + std::to_string(out.size()) +
                                  " entries, expected " + std::to_string(*o.n));
        return out;
    };
    auto write_list = [](const std::vector<Complex> &zs) {
        Json arr = Json::array();
        for (const auto &z : zs) arr.push_back(json_io::to_json(z));
        return arr;
    };
    SymCoords s;
    Json report{{"n", *o.n}};
    if (!o.points.empty()) {
        s = to_sym_coords(read_list(o.points, "points"));
        report["sigma"] = write_list(s.sigma);
    } else {
        s.sigma = read_list(o.sigma, "sigma");
        report["sigma"] = write_list(s.sigma);
    }
    report["roots"] = write_list(from_sym_coords(s));
    return report;
}

Json cmd_verify(bool &all_passed)
{
    Json results = Json::array();
    all_passed = true;
    for (const auto &r : run_regressions()) {
        all_passed = all_passed && r.passed;
        results.push_back(Json{{"name", r.name}, {"example", r.example}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return Json{{"passed", all_passed}, {"results", std::move(results)}};
}

void add_limits(CLI::App *sub, Options &o)
{
    sub->add_option("--max-degree", o.limits.max_strata_degree, "size guard: sum of exponents for strata/orbits/hp");
    sub->add_option("--max-fiber-degree", o.limits.max_fiber_degree, "size guard: sum of exponents for fibers");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Geometric invariants of the smooth dual of GL(n): strata, orbits, HP, q-projection, tempering"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto *strata = app.add_subcommand("strata", "strata of the extended quotient of a component");
    auto *orbits = app.add_subcommand("orbits", "orbits of L-parameters over a component, paired with strata");
    auto *hp = app.add_subcommand("hp", "periodic cyclic homology dimensions of a component");
    auto *proj = app.add_subcommand("project", "q-projection of a stratum point");
    auto *fib = app.add_subcommand("fiber", "all stratum points over a point of the ordinary quotient");
    auto *temper = app.add_subcommand("temper", "tempering retraction of a parameter or stratum point");
    auto *homot = app.add_subcommand("homotopy", "retraction homotopy at time t");
    auto *sym = app.add_subcommand("symcoords", "elementary symmetric coordinates and their inverse");
    auto *ver = app.add_subcommand("verify", "run the worked-example regression suite");

    for (auto *sub : {strata, orbits, hp, fib}) {
        sub->add_option("--component", o.component, "component JSON or @file")->required();
        add_limits(sub, o);
    }
    proj->add_option("--component", o.component, "component JSON or @file (per-block q steps)");
    proj->add_option("--point", o.point, "stratum point JSON or @file")->required();
    proj->add_option("--q", o.q, "numeric q > 1 for evaluated output");
    fib->add_option("--point", o.point, "point JSON or @file")->required();
    for (auto *sub : {temper, homot}) {
        sub->add_option("--param", o.param, "L-parameter JSON or @file");
        sub->add_option("--point", o.point, "stratum point JSON or @file");
    }
    homot->add_option("--t", o.t, "time in [0,1] as p/r")->required();
    sym->add_option("--n", o.n, "number of points")->required();
    sym->add_option("--points", o.points, "JSON array of {re, im}");
    sym->add_option("--sigma", o.sigma, "JSON array of {re, im} elementary symmetric values");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << Json{{"usage", app.help()}}.dump(2) << '\n';
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << Json{{"usage", app.help("", CLI::AppFormatMode::All)}}.dump(2) << '\n';
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        out << error_report("usage", e.what()).dump(2) << '\n';
        return kValidationError;
    }

    try {
        Json report;
        int code = kOk;
        if (*strata)
            report = cmd_strata(o);
        else if (*orbits)
            report = cmd_orbits(o);
        else if (*hp)
            report = cmd_hp(o);
        else if (*proj)
            report = cmd_project(o);
        else if (*fib)
            report = cmd_fiber(o);
        else if (*temper)
            report = cmd_retract(o, false);
        else if (*homot)
            report = cmd_retract(o, true);
        else if (*sym)
            report = cmd_symcoords(o);
        else if (*ver) {
            bool passed = false;
            report = cmd_verify(passed);
            if (!passed) code = kRegressionFailure;
        }
        out << report.dump(2) << '\n';
        return code;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << '\n';
        out << error_report("validation", e.what()).dump(2) << '\n';
        return kValidationError;
    } catch (const LimitExceeded &e) {
        err << "refused: " << e.what() << '\n';
        out << error_report("limit", e.what()).dump(2) << '\n';
        return kLimitRefused;
    } catch (const ArithmeticOverflow &e) {
        err << "refused: " << e.what() << '\n';
        out << error_report("limit", e.what()).dump(2) << '\n';
        return kLimitRefused;
    } catch (const NumericalFailure &e) {
        err << "numerical failure: " << e.what() << '\n';
        out << error_report("numerical", e.what()).dump(2) << '\n';
        return kNumericalFailure;
    } catch (const std::domain_error &e) {
        err << "validation error: " << e.what() << '\n';
        out << error_report("validation", e.what()).dump(2) << '\n';
        return kValidationError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        out << error_report("internal", e.what()).dump(2) << '\n';
        return kRegressionFailure;
    }
}

} // namespace smoothdual::cli
