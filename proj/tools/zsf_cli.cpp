// Command-line front end: evaluate spherical functions and spectral
// densities, run the verification suites, emit plot-ready JSON/CSV tables.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zsf/bochner.hpp"
#include "zsf/errors.hpp"
#include "zsf/rankone.hpp"
#include "zsf/repsim.hpp"
#include "zsf/spectral.hpp"
#include "zsf/spherical.hpp"
#include "zsf/transforms.hpp"
#include "zsf/verify.hpp"

namespace {

using zsf::Complex;

// ---------- output tables -------------------------------------------------

// one table cell: double, long, or string
struct Cell {
    enum class Kind { Number, Integer, Text } kind;
    double num = 0.0;
    long long integer = 0;
    std::string text;

    static Cell number(double v) { return Cell{Kind::Number, v, 0, {}}; }
    static Cell integer_of(long long v) {
        return Cell{Kind::Integer, 0.0, v, {}};
    }
    static Cell text_of(std::string s) {
        return Cell{Kind::Text, 0.0, 0, std::move(s)};
    }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // meta, emitted in insertion order
    std::vector<std::pair<std::string, std::string>> meta;

    void meta_text(const std::string& k, const std::string& v) {
        meta.push_back({k, "\"" + v + "\""});
    }
    void meta_raw(const std::string& k, const std::string& v) {
        meta.push_back({k, v});
    }
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Number: return fmt_double(c.num);
        case Cell::Kind::Integer: return std::to_string(c.integer);
        case Cell::Kind::Text: return "\"" + c.text + "\"";
    }
    return "null";
}

void emit_json(const Table& t, std::ostream& os) {
    os << "{\"meta\":{";
    for (std::size_t i = 0; i < t.meta.size(); ++i) {
        if (i) os << ",";
        os << "\"" << t.meta[i].first << "\":" << t.meta[i].second;
    }
    os << "},\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) os << ",";
        os << "{";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) os << ",";
            os << "\"" << t.columns[c] << "\":" << cell_json(t.rows[r][c]);
        }
        os << "}";
    }
    os << "]}\n";
}

void emit_csv(const Table& t, std::ostream& os) {
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << t.columns[c];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ",";
            switch (row[c].kind) {
                case Cell::Kind::Number: os << fmt_double(row[c].num); break;
                case Cell::Kind::Integer: os << row[c].integer; break;
                case Cell::Kind::Text: os << row[c].text; break;
            }
        }
        os << "\n";
    }
}

void emit(const Table& t, const std::string& fmt) {
    if (fmt == "csv")
        emit_csv(t, std::cout);
    else
        emit_json(t, std::cout);
}

// ---------- argument parsing ----------------------------------------------

// complex literal: RE, IMi, RE+IMi, RE-IMi (e.g. "0.5", "1.0i", "0.3-0.4i")
Complex parse_complex(const std::string& s) {
    if (s.empty())
        throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                               "empty number");
    if (s.back() != 'i') return Complex(std::stod(s), 0.0);
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not an exponent sign or leading sign
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' &&
            body[k - 1] != 'E') {
            const double re = std::stod(body.substr(0, k));
            std::string im = body.substr(k);
            if (im == "+" || im == "-") im += "1";
            return Complex(re, std::stod(im));
        }
    }
    if (body.empty() || body == "+") return Complex(0.0, 1.0);
    if (body == "-") return Complex(0.0, -1.0);
    return Complex(0.0, std::stod(body));
}

// LIST of complex literals or START:STOP:STEP (real)
std::vector<Complex> parse_points(const std::string& s) {
    std::vector<Complex> out;
    const auto colons = std::count(s.begin(), s.end(), ':');
    if (colons == 2) {
        std::stringstream ss(s);
        std::string a, b, c;
        std::getline(ss, a, ':');
        std::getline(ss, b, ':');
        std::getline(ss, c, ':');
        const double start = std::stod(a), stop = std::stod(b),
                     step = std::stod(c);
        if (!(step > 0.0))
            throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                                   "range step must be > 0");
        for (double v = start; v <= stop + 1e-12; v += step)
            out.push_back(Complex(v, 0.0));
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.empty())
        throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                               "no points given");
    return out;
}

std::vector<double> parse_real_points(const std::string& s) {
    std::vector<double> out;
    for (const Complex& z : parse_points(s)) {
        if (z.imag() != 0.0)
            throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                                   "expected real values");
        out.push_back(z.real());
    }
    return out;
}

zsf::SpectralUnits parse_units(const std::string& u) {
    if (u == "rho") return zsf::SpectralUnits::RhoUnits;
    if (u == "alpha") return zsf::SpectralUnits::AlphaUnits;
    if (u == "geodesic") return zsf::SpectralUnits::GeodesicDual;
    throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                           "units must be rho|alpha|geodesic");
}

zsf::RankOneSpace parse_space(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                               "space must be P,Q");
    return zsf::RankOneSpace(std::stoi(s.substr(0, comma)),
                             std::stoi(s.substr(comma + 1)));
}

struct CommonArgs {
    std::string space = "1,0";
    std::string lambda = "0";
    std::string units = "rho";
    std::string out = "json";
    double tol = 1e-9;
    std::uint64_t seed = 12345;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--space", a.space, "root multiplicities P,Q");
    cmd->add_option("--lambda", a.lambda, "spectral parameter RE[+IMi]");
    cmd->add_option("--units", a.units, "lambda units: rho|alpha|geodesic");
    cmd->add_option("--out", a.out, "output format: json|csv");
    cmd->add_option("--tol", a.tol, "target absolute tolerance");
    cmd->add_option("--seed", a.seed, "seed for randomized checks");
}

void fill_meta(Table& t, const std::string& command, const CommonArgs& a,
               const zsf::RankOneSpace& sp, Complex lam) {
    t.meta_text("version", "0.1.0");
    t.meta_text("command", command);
    t.meta_raw("space", "[" + std::to_string(sp.p) + "," +
                            std::to_string(sp.q) + "]");
    t.meta_raw("lambda", "{\"re\":" + fmt_double(lam.real()) +
                             ",\"im\":" + fmt_double(lam.imag()) +
                             ",\"units\":\"" + a.units + "\"}");
    t.meta_raw("seed", std::to_string(a.seed));
}

// ---------- subcommand bodies ----------------------------------------------

int run_eval(const CommonArgs& a, const std::string& t_spec,
             const std::string& methods) {
    const zsf::RankOneSpace sp = parse_space(a.space);
    const zsf::SpectralParam lam{parse_complex(a.lambda),
                                 parse_units(a.units)};
    const std::vector<Complex> ts = parse_points(t_spec);

    bool want_bochner = methods == "all", want_series = methods == "all",
         want_oracle = methods == "all";
    if (methods != "all") {
        std::stringstream ss(methods);
        std::string m;
        while (std::getline(ss, m, ',')) {
            if (m == "bochner")
                want_bochner = true;
            else if (m == "series")
                want_series = true;
            else if (m == "oracle")
                want_oracle = true;
            else
                throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                                       "unknown method " + m);
        }
    }

    for (const Complex& t : ts)
        if (std::abs(t.imag()) >= zsf::kPi)
            throw zsf::DomainError(zsf::ErrorCode::OutsideTube,
                                   "t outside the tube |Im t| < pi");
    if (want_bochner && !lam.in_strip(sp))
        throw zsf::DomainError(zsf::ErrorCode::OutOfStrip,
                               "lambda outside |Re lambda| < rho");

    Table table;
    fill_meta(table, "eval", a, sp, lam.value);
    table.columns = {"t_re", "t_im", "value_re", "value_im", "method",
                     "abs_err"};

    std::optional<zsf::BochnerDensity> density;
    if (want_bochner) density.emplace(zsf::bochner_density(sp, lam));

    const bool oracle_ok = sp.q == 0;
    const bool series_ok =
        sp.q == 0 && lam.is_unitary(sp) &&
        std::abs(lam.geodesic_dual(sp)) > 1e-8;

    auto push = [&](Complex t, const zsf::SphericalValue& v) {
        table.rows.push_back({Cell::number(t.real()), Cell::number(t.imag()),
                              Cell::number(v.value.real()),
                              Cell::number(v.value.imag()),
                              Cell::text_of(zsf::phi_method_name(v.method)),
                              Cell::number(v.abs_err)});
    };

    for (const Complex& t : ts) {
        if (want_bochner) push(t, zsf::phi_via_bochner(*density, t, a.tol));
        if (want_series && series_ok && t.imag() == 0.0 && t.real() > 0.0)
            push(t, zsf::phi_hc_series(sp, lam, t.real(), 64, a.tol));
        if (want_oracle && oracle_ok && t.imag() == 0.0 && t.real() >= 0.0) {
            auto o = zsf::spherical_oracle(sp, lam, t.real(),
                                           std::min(a.tol, 1e-11));
            push(t, zsf::SphericalValue{o.value, zsf::PhiMethod::Oracle,
                                        o.abs_err});
        }
    }
    if (table.rows.empty())
        throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                               "no method applies to the requested points");
    emit(table, a.out);
    return 0;
}

int run_density(const CommonArgs& a, const std::string& u_spec) {
    const zsf::RankOneSpace sp = parse_space(a.space);
    const zsf::SpectralParam lam{parse_complex(a.lambda),
                                 parse_units(a.units)};
    const std::vector<double> us = parse_real_points(u_spec);
    auto density = zsf::bochner_density(sp, lam);

    Table table;
    fill_meta(table, "density", a, sp, lam.value);
    table.meta_raw("experimental", density.experimental() ? "true" : "false");
    table.meta_raw("normalization", fmt_double(density.normalization()));
    table.columns = {"upsilon", "m_re", "m_im"};
    for (double u : us) {
        const Complex v = density.value(u);
        table.rows.push_back({Cell::number(u), Cell::number(v.real()),
                              Cell::number(v.imag())});
    }
    emit(table, a.out);
    return 0;
}

int run_series(const CommonArgs& a, int terms) {
    const zsf::RankOneSpace sp = parse_space(a.space);
    const zsf::SpectralParam lam{parse_complex(a.lambda),
                                 parse_units(a.units)};
    auto ts = zsf::hc_series_terms(sp, lam, terms);

    Table table;
    fill_meta(table, "series", a, sp, lam.value);
    table.columns = {"k", "weyl_sign", "coeff_re", "coeff_im", "exponent"};
    for (const auto& t : ts)
        table.rows.push_back({Cell::integer_of(t.k),
                              Cell::integer_of(t.weyl_sign),
                              Cell::number(t.coefficient.real()),
                              Cell::number(t.coefficient.imag()),
                              Cell::number(t.exponent)});
    emit(table, a.out);
    return 0;
}

int run_transform(const CommonArgs& a, const std::string& which, double sigma,
                  const std::string& grid_spec) {
    const zsf::RankOneSpace sp = parse_space(a.space);
    if (!(sp == zsf::RankOneSpace::sl2r()))
        throw zsf::DomainError(zsf::ErrorCode::UnsupportedSpace,
                               "transforms are implemented for --space 1,0");
    auto f = zsf::truncated_gaussian(sigma);

    Table table;
    fill_meta(table, "transform-" + which, a, sp, Complex(0.0, 0.0));
    table.meta_raw("sigma", fmt_double(sigma));

    if (which == "abel") {
        const auto ts = parse_real_points(grid_spec);
        auto vals = zsf::abel_transform(f, ts);
        table.columns = {"t", "value"};
        for (std::size_t i = 0; i < ts.size(); ++i)
            table.rows.push_back(
                {Cell::number(ts[i]), Cell::number(vals[i])});
    } else if (which == "spherical") {
        const auto ls = parse_real_points(grid_spec);
        auto prof = zsf::spherical_transform(f, ls);
        table.columns = {"lambda", "value_re", "value_im"};
        for (std::size_t i = 0; i < ls.size(); ++i)
            table.rows.push_back({Cell::number(ls[i]),
                                  Cell::number(prof.values[i].real()),
                                  Cell::number(prof.values[i].imag())});
    } else if (which == "spectral-ff") {
        const auto us = parse_real_points(grid_spec);
        auto grid = zsf::symmetric_grid(16.0, 0.04);
        auto prof = zsf::spherical_transform(f, grid);
        auto vals = zsf::spectral_ff(prof, us);
        table.columns = {"upsilon", "value"};
        for (std::size_t i = 0; i < us.size(); ++i)
            table.rows.push_back(
                {Cell::number(us[i]), Cell::number(vals[i])});
    } else {
        throw zsf::DomainError(zsf::ErrorCode::InvalidArgument,
                               "transform kind: abel|spherical|spectral-ff");
    }
    emit(table, a.out);
    return 0;
}

int run_verify(const CommonArgs& a, const std::string& suite,
               double tol_scale) {
    zsf::VerifyOptions opt;
    opt.seed = a.seed;
    opt.tol_scale = tol_scale;

    std::vector<std::string> suites;
    if (suite == "all")
        suites = zsf::verify_suite_names();
    else
        suites.push_back(suite);

    Table table;
    table.meta_text("version", "0.1.0");
    table.meta_text("command", "verify");
    table.meta_text("suite", suite);
    table.meta_raw("seed", std::to_string(a.seed));
    table.meta_raw("tol_scale", fmt_double(tol_scale));
    table.columns = {"suite", "check", "defect", "tol", "pass"};

    bool all_pass = true;
    for (const auto& name : suites) {
        auto res = zsf::run_verify_suite(name, opt);
        all_pass = all_pass && res.all_pass();
        for (const auto& c : res.checks) {
            table.rows.push_back({Cell::text_of(res.name),
                                  Cell::text_of(c.name),
                                  Cell::number(c.defect), Cell::number(c.tol),
                                  Cell::text_of(c.pass ? "pass" : "FAIL")});
            std::fprintf(stderr, "[%s] %s/%s defect=%.3e tol=%.3e (%.2fs)%s%s\n",
                         c.pass ? "pass" : "FAIL", res.name.c_str(),
                         c.name.c_str(), c.defect, c.tol, c.seconds,
                         c.note.empty() ? "" : " ", c.note.c_str());
        }
    }
    emit(table, a.out);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zonal spherical functions on rank-one symmetric spaces"};
    app.require_subcommand(1);

    CommonArgs ev, de, se, tr, ve;
    std::string t_spec = "0:2:0.5", methods = "all", u_spec = "-10:10:0.5";
    std::string suite = "all", tr_kind, tr_grid = "0:4:0.25";
    int terms = 12;
    double sigma = 1.0, tol_scale = 1.0;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate phi_lambda");
    add_common(eval_cmd, ev);
    eval_cmd->add_option("--t", t_spec, "points: LIST or START:STOP:STEP");
    eval_cmd->add_option("--methods", methods,
                         "all or subset of bochner,series,oracle");

    auto* den_cmd = app.add_subcommand("density", "spectral density table");
    add_common(den_cmd, de);
    den_cmd->add_option("--upsilon", u_spec, "LIST or START:STOP:STEP");

    auto* ser_cmd = app.add_subcommand("series", "expansion coefficients");
    add_common(ser_cmd, se);
    ser_cmd->add_option("--terms", terms, "number of k-terms");

    auto* tr_cmd = app.add_subcommand("transform", "radial transforms");
    add_common(tr_cmd, tr);
    tr_cmd->add_option("kind", tr_kind, "abel|spherical|spectral-ff")
        ->required();
    tr_cmd->add_option("--sigma", sigma, "Gaussian width of the profile");
    tr_cmd->add_option("--grid", tr_grid, "output grid LIST or RANGE");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common(verify_cmd, ve);
    verify_cmd->add_option("suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--tol-scale", tol_scale,
                           "scale all tolerances (reported in output)");

    try {
        app.parse(argc, argv);
        if (eval_cmd->parsed()) return run_eval(ev, t_spec, methods);
        if (den_cmd->parsed()) return run_density(de, u_spec);
        if (ser_cmd->parsed()) return run_series(se, terms);
        if (tr_cmd->parsed()) return run_transform(tr, tr_kind, sigma, tr_grid);
        if (verify_cmd->parsed()) return run_verify(ve, suite, tol_scale);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const zsf::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zsf::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
