// bergman: command-line front end for the Hartogs-domain Bergman toolkit.
//
// Subcommands: kernel, project, threshold, lpnorm, schur, verify.
// Exit codes: 0 success, 2 contract violations (bad flags, exterior points),
// 3 numerical failures (poles, non-convergence, failed verification).
// Every randomized command reports its effective seed in the output header,
// and identical invocations produce byte-identical output.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergman/bergman.hpp"
#include "bergman/csv.hpp"
#include "bergman/parse.hpp"

namespace {

using namespace bergman;

struct OutputSink {
    std::string format = "json";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ContractViolation("cannot open output file '" + path + "'");
        f << text;
    }

    void emit(const Json& j, const CsvTable& t) const {
        if (format == "json") {
            write(j.dump(2) + "\n");
        } else {
            write(t.str());
        }
    }
};

std::string point_str(const CPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) s += ",";
        s += CsvTable::cell(p.coords[i].real());
        const double im = p.coords[i].imag();
        if (im != 0.0) s += (im > 0 ? "+" : "") + CsvTable::cell(im) + "i";
    }
    return s + ")";
}

DomainSpec parse_spec_arg(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ContractViolation(std::string("--spec is not valid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

// ---------------------------------------------------------------------------
// threshold

int cmd_threshold(int n, int k, const std::vector<std::string>& pexp, const OutputSink& out) {
    const ExponentInterval iv = critical_interval(n, k);
    Json j{{"command", "threshold"},
           {"n", n},
           {"k", k},
           {"p_low", {{"rational", iv.p_low.str()}, {"value", iv.p_low.value()}}},
           {"p_high", {{"rational", iv.p_high.str()}, {"value", iv.p_high.value()}}}};
    CsvTable t;
    t.header = {"n", "k", "p_low", "p_high", "p_low_value", "p_high_value", "pexp", "bounded"};
    if (pexp.empty()) {
        t.rows.push_back({CsvTable::cell(n), CsvTable::cell(k), iv.p_low.str(), iv.p_high.str(),
                          CsvTable::cell(iv.p_low.value()), CsvTable::cell(iv.p_high.value()), "", ""});
    } else {
        Json checks = Json::array();
        for (const auto& ps : pexp) {
            const Rational p = Rational::parse(ps);
            const bool bounded = is_bounded(p, n, k);
            checks.push_back({{"p", p.str()}, {"bounded", bounded}});
            t.rows.push_back({CsvTable::cell(n), CsvTable::cell(k), iv.p_low.str(), iv.p_high.str(),
                              CsvTable::cell(iv.p_low.value()), CsvTable::cell(iv.p_high.value()), p.str(),
                              bounded ? "true" : "false"});
        }
        j["pexp"] = checks;
    }
    out.emit(j, t);
    return 0;
}

// ---------------------------------------------------------------------------
// kernel

int cmd_kernel(const DomainSpec& spec, const CPoint& p, const CPoint& q, const std::string& method,
               double tol, const OutputSink& out) {
    Complex value;
    if (method == "closed") {
        value = kernel_closed(spec, p, q);
    } else if (method == "series") {
        value = kernel_series(spec, p, q, tol);
    } else if (method == "transform") {
        value = kernel_via_transform(spec, p, q);
    } else {
        throw ContractViolation("unknown kernel method '" + method + "'");
    }
    Json j{{"command", "kernel"}, {"spec", to_json(spec)}, {"p", to_json(p)},
           {"q", to_json(q)},     {"method", method},      {"value", {value.real(), value.imag()}}};
    CsvTable t;
    t.header = {"kind", "n", "k", "p", "q", "method", "value_re", "value_im"};
    t.rows.push_back({kind_name(spec.kind), CsvTable::cell(spec.n), CsvTable::cell(spec.k), point_str(p),
                      point_str(q), method, CsvTable::cell(value.real()), CsvTable::cell(value.imag())});
    out.emit(j, t);
    return 0;
}

// ---------------------------------------------------------------------------
// project

int cmd_project(const DomainSpec& spec, int cap, int radial, int angular, bool quad_check,
                const OutputSink& out) {
    const SeriesFunction exact = project_conj_monomial(spec);
    const auto& [index, coeff] = *exact.coeffs.begin();

    Json j{{"command", "project"}, {"spec", to_json(spec)}, {"series", to_json(exact)}};
    CsvTable t;
    t.header = {"alpha", "beta", "coeff_re", "coeff_im", "source"};
    std::string beta_str;
    for (std::size_t i = 0; i < index.beta.size(); ++i)
        beta_str += (i ? ";" : "") + std::to_string(index.beta[i]);
    t.rows.push_back({CsvTable::cell(index.alpha), beta_str, CsvTable::cell(coeff.real()),
                      CsvTable::cell(coeff.imag()), "exact"});

    if (quad_check) {
        const long long kn = static_cast<long long>(spec.k) * spec.n;
        if (cap <= 0) cap = static_cast<int>(3 * kn);
        const auto f = [kn](const CPoint& pt) { return ipow(std::conj(pt.base()), kn); };
        const SeriesFunction numeric = project_series(spec, f, cap, QuadratureRule(radial, angular));
        const Complex qc = numeric.coeffs.at(index);
        const double max_other = numeric.max_coeff_except(index);
        j["quadrature_check"] = {{"cap", cap},
                                 {"coeff", {qc.real(), qc.imag()}},
                                 {"max_other_coeff", max_other}};
        t.rows.push_back({CsvTable::cell(index.alpha), beta_str, CsvTable::cell(qc.real()),
                          CsvTable::cell(qc.imag()), "quadrature"});
    }
    out.emit(j, t);
    return 0;
}

// ---------------------------------------------------------------------------
// lpnorm

int cmd_lpnorm(const DomainSpec& spec, const std::vector<std::string>& pexp, std::uint64_t seed,
               std::size_t count, bool diagnose, const OutputSink& out) {
    if (pexp.empty()) throw ContractViolation("lpnorm requires at least one --pexp");
    Json rows = Json::array();
    CsvTable t;
    t.comments = {"seed=" + std::to_string(seed), "count=" + std::to_string(count)};
    t.header = {"p", "estimate", "std_error", "closed_form", "verdict", "diag_triggered"};
    const Rational p_high = critical_interval(spec.n, spec.k).p_high;
    for (const auto& ps : pexp) {
        const Rational p = Rational::parse(ps);
        const bool finite = p < p_high;  // exact rational comparison
        const auto est = mc_lp_norm(spec, p.value(), seed, count);
        const auto closed = lp_norm_closed(spec, p.value());
        std::string diag_cell;
        Json jrow{{"p", p.str()},
                  {"estimate", est.value.real()},
                  {"std_error", est.std_error},
                  {"verdict", finite ? "finite" : "divergent"}};
        if (closed) jrow["closed_form"] = *closed;
        if (diagnose) {
            const auto d = divergence_diagnostic(spec, p.value(), seed, count);
            jrow["diagnostic"] = {{"at_count", d.at_count.value.real()},
                                  {"at_4x_count", d.at_4x_count.value.real()},
                                  {"triggered", d.triggered}};
            diag_cell = d.triggered ? "true" : "false";
        }
        rows.push_back(jrow);
        t.rows.push_back({p.str(), CsvTable::cell(est.value.real()), CsvTable::cell(est.std_error),
                          closed ? CsvTable::cell(*closed) : std::string(), finite ? "finite" : "divergent",
                          diag_cell});
    }
    const Json j{{"command", "lpnorm"}, {"spec", to_json(spec)}, {"seed", seed},
                 {"count", count},      {"rows", rows}};
    out.emit(j, t);
    return 0;
}

// ---------------------------------------------------------------------------
// schur

CPoint grid_query(const DomainSpec& spec, double r, double frac) {
    CPoint q;
    q.coords.resize(spec.ambient_dim());
    q.coords[0] = {r, 0.0};
    const double rk = ipow(r, spec.k);
    for (int jj = 0; jj < spec.n; ++jj)
        q.coords[1 + jj] = {frac * rk / std::sqrt(static_cast<double>(spec.n)), 0.0};
    return q;
}

int cmd_schur(const DomainSpec& spec, std::vector<double> eps_list, std::uint64_t seed, std::size_t count,
              int grid, double zmax, const OutputSink& out) {
    if (eps_list.empty()) eps_list = {0.5};
    Json rows = Json::array();
    CsvTable t;
    t.comments = {"seed=" + std::to_string(seed), "count=" + std::to_string(count),
                  "grid=" + std::to_string(grid), "zmax=" + CsvTable::cell(zmax)};
    t.header = {"eps", "max_ratio", "std_error", "query", "eps_in_range", "verdict"};

    for (double eps : eps_list) {
        // sweep the query grid twice, at count and 2x count, on disjoint
        // substreams; the max ratio must be stable for a "stable" verdict
        double best = -1.0, best_se = 0.0, best2 = -1.0, best2_se = 0.0;
        CPoint best_q;
        std::uint64_t task = 0;
        for (int pass = 0; pass < 2; ++pass) {
            for (int iz = 0; iz < grid; ++iz) {
                for (int ifr = 0; ifr < grid; ++ifr) {
                    const double r = zmax * (iz + 1.0) / grid;
                    const double frac = 0.1 + 0.8 * ifr / std::max(1, grid - 1);
                    const CPoint q = grid_query(spec, r, frac);
                    const SchurRatio sr = schur_ratio(spec, eps, q, seed, (pass + 1) * count,
                                                      SchurWeight::Auto, ++task);
                    if (pass == 0 && sr.ratio > best) {
                        best = sr.ratio;
                        best_se = sr.std_error;
                        best_q = q;
                    } else if (pass == 1 && sr.ratio > best2) {
                        best2 = sr.ratio;
                        best2_se = sr.std_error;
                    }
                }
            }
        }
        const bool in_range = SchurWeightSpec{eps, spec}.in_range();
        const bool stable = std::abs(best2 - best) <= 3.0 * std::hypot(best_se, best2_se);
        rows.push_back({{"eps", eps},
                        {"max_ratio", best},
                        {"std_error", best_se},
                        {"max_ratio_2x", best2},
                        {"query", to_json(best_q)},
                        {"eps_in_range", in_range},
                        {"stable", stable}});
        t.rows.push_back({CsvTable::cell(eps), CsvTable::cell(best), CsvTable::cell(best_se),
                          point_str(best_q), in_range ? "true" : "false",
                          stable ? "stable" : "unstable"});
    }
    const Json j{{"command", "schur"}, {"spec", to_json(spec)}, {"seed", seed},
                 {"count", count},     {"grid", grid},          {"rows", rows}};
    out.emit(j, t);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

std::string fmt(double v) { return CsvTable::cell(v); }

void verify_domains(std::uint64_t seed, std::vector<CheckResult>& rs) {
    double worst = 0.0;
    bool inside = true;
    for (auto spec : {hartogs_polydisc(1, 1), hartogs_polydisc(2, 2), hartogs_ball(1, 2), hartogs_ball(2, 1)}) {
        SampleStream s(spec, seed);
        CPoint p;
        for (int i = 0; i < 2000; ++i) {
            s.next_into(p);
            inside = inside && contains(spec, p);
            const CPoint back = phi_inv(spec, phi(spec, p));
            for (std::size_t c = 0; c < p.dim(); ++c)
                worst = std::max(worst, std::abs(back.coords[c] - p.coords[c]));
        }
    }
    rs.push_back({"domains.phi-roundtrip", worst <= 1e-12, "max err " + fmt(worst)});
    rs.push_back({"domains.samples-interior", inside, "8000 points"});

    bool vol_ok = true;
    for (int n : {1, 2})
        for (int k : {1, 2})
            for (auto kind : {DomainKind::HartogsPolydisc, DomainKind::HartogsBall}) {
                const DomainSpec spec(kind, n, k);
                const DomainSpec box(DomainKind::Polydisc, 1 + n);
                SampleStream s(box, seed + 1);
                const int trials = 60000;
                int hits = 0;
                CPoint p;
                for (int i = 0; i < trials; ++i) {
                    s.next_into(p);
                    if (contains(spec, p)) ++hits;
                }
                const double phat = static_cast<double>(hits) / trials;
                const double se = volume(box) * std::sqrt(phat * (1 - phat) / trials);
                vol_ok = vol_ok && std::abs(volume(box) * phat - volume(spec)) <= 3.0 * se;
            }
    rs.push_back({"domains.volume-vs-rejection", vol_ok, "(n,k) in {1,2}^2, 3 sigma"});

    const auto a = sample(hartogs_ball(2, 1), seed, 64);
    const auto b = sample(hartogs_ball(2, 1), seed, 64);
    rs.push_back({"domains.stream-deterministic", a == b, "64 points"});
}

void verify_kernels(std::uint64_t seed, std::vector<CheckResult>& rs) {
    double worst_t = 0.0, worst_h = 0.0, worst_s = 0.0;
    bool positive = true;
    for (auto spec : {hartogs_polydisc(1, 1), hartogs_polydisc(2, 2), hartogs_ball(1, 2),
                      hartogs_ball(2, 1), hartogs_ball(2, 2)}) {
        SampleStream s(spec, seed + 7);
        CPoint p, q;
        for (int i = 0; i < 200; ++i) {
            s.next_into(p);
            s.next_into(q);
            const Complex closed = kernel_closed(spec, p, q);
            worst_t = std::max(worst_t,
                               std::abs(kernel_via_transform(spec, p, q) - closed) / std::abs(closed));
            worst_h = std::max(worst_h,
                               std::abs(closed - std::conj(kernel_closed(spec, q, p))) / std::abs(closed));
            const Complex diag = kernel_closed(spec, p, p);
            positive = positive && diag.real() > 0 && std::abs(diag.imag()) <= 1e-14 * std::abs(diag);
        }
        CPoint pp, qq;
        const Complex fiber_shrink = 0.7 * ipow(Complex(0.7), spec.k);
        for (int i = 0; i < 5; ++i) {
            s.next_into(pp);
            s.next_into(qq);
            // pull toward the center for fast series decay; the base shrinks
            // by 0.7 so the fiber must shrink by 0.7^k to stay inside, plus a
            // margin
            pp.coords[0] *= 0.7;
            qq.coords[0] *= 0.7;
            for (int j = 0; j < spec.n; ++j) {
                pp.coords[1 + j] *= fiber_shrink;
                qq.coords[1 + j] *= fiber_shrink;
            }
            const Complex closed = kernel_closed(spec, pp, qq);
            worst_s = std::max(worst_s,
                               std::abs(kernel_series(spec, pp, qq, 1e-8) - closed) / std::abs(closed));
        }
    }
    rs.push_back({"kernels.transformation-law", worst_t <= 1e-10, "max rel err " + fmt(worst_t)});
    rs.push_back({"kernels.hermitian-symmetry", worst_h <= 1e-12, "max rel err " + fmt(worst_h)});
    rs.push_back({"kernels.series-agreement", worst_s <= 1e-6, "max rel err " + fmt(worst_s)});
    rs.push_back({"kernels.diagonal-positive", positive, "1000 diagonal points"});
}

void verify_basis(std::uint64_t seed, std::vector<CheckResult>& rs) {
    Rng rng(seed + 3);
    double worst_z = 0.0, worst_n = 0.0;
    for (auto spec : {hartogs_polydisc(1, 2), hartogs_ball(2, 1)}) {
        const auto points = sample(spec, seed + 4, 50000);
        for (int trial = 0; trial < 10; ++trial) {
            MultiIndex a(0, std::vector<int>(spec.n, 0)), b = a;
            do {
                const auto draw = [&](MultiIndex& m) {
                    const int d = 2 + static_cast<int>(rng.uniform() * 4);
                    int s = 0;
                    for (int j = 0; j < spec.n; ++j) {
                        m.beta[j] = static_cast<int>(rng.uniform() * 3);
                        s += m.beta[j];
                    }
                    m.alpha = d - static_cast<long long>(spec.k) * (s + spec.n);
                };
                draw(a);
                draw(b);
            } while (a == b);
            std::vector<Complex> prod(points.size()), diag(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) {
                const Complex ea = eval_monomial(a, points[i]);
                prod[i] = ea * std::conj(eval_monomial(b, points[i]));
                diag[i] = ea * std::conj(ea);
            }
            const auto off = mean_and_std_error(prod);
            worst_z = std::max(worst_z, std::abs(off.mean) / off.std_error);
            const auto on = mean_and_std_error(diag);
            const double target = norm_sq(spec, a) / volume(spec);
            worst_n = std::max(worst_n, std::abs(on.mean.real() - target) / on.std_error);
        }
    }
    rs.push_back({"basis.orthogonality", worst_z <= 3.0, "max |z-score| " + fmt(worst_z) + " over 20 pairs"});
    rs.push_back({"basis.norms-vs-mc", worst_n <= 3.0, "max |z-score| " + fmt(worst_n) + " over 20 indices"});

    double gap = 0.0;
    for (auto spec : {hartogs_polydisc(1, 1), hartogs_ball(2, 1)}) {
        CPoint p;
        p.coords.resize(spec.ambient_dim());
        p.coords[0] = {0.55, 0.1};
        const double rk = ipow(std::abs(Complex(0.55, 0.1)), spec.k);
        for (int j = 0; j < spec.n; ++j) p.coords[1 + j] = {0.4 * rk / spec.n, 0.1 * rk / spec.n};
        double sum = 0.0;
        for (const auto& m : enumerate_basis(spec, 30))
            sum += std::norm(eval_monomial(m, p)) / norm_sq(spec, m);
        const double target = kernel_closed(spec, p, p).real();
        gap = std::max(gap, std::abs(sum - target) / target);
    }
    rs.push_back({"basis.parseval", gap <= 1e-3, "rel gap " + fmt(gap) + " at cap 30"});
}

void verify_integrate(std::uint64_t seed, std::vector<CheckResult>& rs) {
    double worst = 0.0;
    for (auto spec : {hartogs_polydisc(1, 1), hartogs_ball(1, 2), hartogs_ball(2, 1)}) {
        const QuadratureRule rule = spec.ambient_dim() >= 3 ? QuadratureRule(6, 12) : QuadratureRule(12, 24);
        const auto est = integrate_quad(spec, [](const CPoint&) { return Complex(1.0); }, rule);
        worst = std::max(worst, std::abs(est.value.real() - volume(spec)) / volume(spec));
    }
    rs.push_back({"integrate.volume-exact", worst <= 1e-13, "max rel err " + fmt(worst)});

    const DomainSpec omega = hartogs_polydisc(1, 1);
    const auto mc = integrate_mc(
        omega, [](const CPoint& p) { return Complex(std::norm(p.fiber(0))); }, seed + 6, 200000);
    const double target = kPi * kPi / 6.0;
    const bool ok = std::abs(mc.value.real() - target) <= 3.0 * mc.std_error;
    rs.push_back({"integrate.quad-vs-mc", ok,
                  "|w|^2: mc " + fmt(mc.value.real()) + " vs exact " + fmt(target)});
}

void verify_projection(std::uint64_t seed, std::vector<CheckResult>& rs) {
    double worst = 0.0, worst_other = 0.0;
    for (auto spec : {hartogs_polydisc(1, 1), hartogs_ball(1, 2)}) {
        const long long kn = static_cast<long long>(spec.k) * spec.n;
        const SeriesFunction numeric = project_series(
            spec, [kn](const CPoint& p) { return ipow(std::conj(p.base()), kn); },
            static_cast<int>(3 * kn), QuadratureRule(12, 48));
        const SeriesFunction exact = project_conj_monomial(spec);
        const auto& [m, c] = *exact.coeffs.begin();
        worst = std::max(worst, std::abs(numeric.coeffs.at(m) - c));
        worst_other = std::max(worst_other, numeric.max_coeff_except(m));
    }
    rs.push_back({"projection.conjugate-monomial", worst <= 1e-8 && worst_other <= 1e-8,
                  "coeff err " + fmt(worst) + ", spurious " + fmt(worst_other)});

    const DomainSpec omega = hartogs_polydisc(1, 1);
    const CPoint at{{0.5, 0.0}, {0.1, 0.0}};
    const auto rep = project_kernel(
        omega, [](const CPoint& p) { return ipow(p.base(), 2) * p.fiber(0); }, at, seed + 8, 200000);
    const bool ok = std::abs(rep.value - Complex(0.025)) <= 3.0 * rep.std_error;
    rs.push_back({"projection.reproducing", ok,
                  "P(z^2 w)(0.5,0.1) = " + fmt(rep.value.real()) + " +- " + fmt(rep.std_error)});
}

void verify_lp(std::uint64_t seed, std::vector<CheckResult>& rs) {
    const bool exact_ok = critical_interval(1, 1).p_low == Rational(4, 3) &&
                          critical_interval(1, 1).p_high == Rational(4);
    rs.push_back({"lp.interval-classical", exact_ok, "(4/3, 4) at n=k=1"});

    bool conj_ok = true, flip_ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) {
            const auto iv = critical_interval(n, k);
            conj_ok = conj_ok && Rational(1) / iv.p_low + Rational(1) / iv.p_high == Rational(1);
            for (int i = -3; i <= 3; ++i) {
                const Rational p = iv.p_high + Rational(i, 1000);
                flip_ok = flip_ok && (radial_lp_integral(p, n, k).has_value() == (p < iv.p_high));
            }
        }
    rs.push_back({"lp.hoelder-conjugate", conj_ok, "all n,k <= 6"});
    rs.push_back({"lp.radial-flip", flip_ok, "exact switch at p_high"});

    const auto est = mc_lp_norm(hartogs_polydisc(1, 1), 2.0, seed + 9, 200000);
    const bool mc_ok = std::abs(est.value.real() - kPi * kPi) <= 3.0 * est.std_error;
    rs.push_back({"lp.mc-norm-p2", mc_ok, "estimate " + fmt(est.value.real()) + " vs pi^2"});

    const CPoint q{{0.5, 0.0}, {0.1, 0.0}};
    const auto s1 = schur_ratio(hartogs_polydisc(1, 1), 0.5, q, seed + 10, 50000, SchurWeight::Auto, 1);
    const auto s2 = schur_ratio(hartogs_polydisc(1, 1), 0.5, q, seed + 10, 100000, SchurWeight::Auto, 2);
    const bool schur_ok = std::abs(s2.ratio - s1.ratio) <= 3.0 * std::hypot(s1.std_error, s2.std_error);
    rs.push_back({"lp.schur-stable", schur_ok,
                  "ratio " + fmt(s1.ratio) + " -> " + fmt(s2.ratio) + " under doubling"});
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<CheckResult> rs;
    const bool all = suite == "all";
    if (all || suite == "domains") verify_domains(seed, rs);
    if (all || suite == "kernels") verify_kernels(seed, rs);
    if (all || suite == "basis") verify_basis(seed, rs);
    if (all || suite == "integrate") verify_integrate(seed, rs);
    if (all || suite == "projection") verify_projection(seed, rs);
    if (all || suite == "lp") verify_lp(seed, rs);
    if (rs.empty()) throw ContractViolation("unknown suite '" + suite + "'");

    std::cout << "# seed=" << seed << "\n";
    int failures = 0;
    for (const auto& r : rs) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.name << "  (" << r.detail << ")\n";
        if (!r.ok) ++failures;
    }
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
              << " (" << rs.size() << " total)\n";
    return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernels, projections, and L^p thresholds on generalized Hartogs triangles"};
    app.require_subcommand(1);

    std::string spec_json, p_str, q_str, method = "closed", format = "json", out_path, suite = "all";
    std::vector<std::string> pexp;
    std::vector<double> eps_list;
    int n = 1, k = 1, cap = 0, radial = 12, angular = 48, grid = 5;
    double tol = 1e-8, zmax = 0.7;
    std::uint64_t seed = 0;
    std::size_t count = 200000;
    bool diagnose = false, quad_check = false;

    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
    };

    auto* kernel = app.add_subcommand("kernel", "Evaluate a Bergman kernel");
    kernel
        ->add_option("--spec", spec_json,
                     "Domain spec as JSON, e.g. {\"kind\":\"HartogsBall\",\"n\":1,\"k\":1}")
        ->required();
    kernel->add_option("--p", p_str, "First point, e.g. (0.5,0.1) or (0.5,0.1+0.2i)")->required();
    kernel->add_option("--q", q_str, "Second point")->required();
    kernel->add_option("--method", method, "closed (default), series, or transform");
    kernel->add_option("--tol", tol, "Series tolerance (method=series)");
    kernel->footer("CSV columns: kind,n,k,p,q,method,value_re,value_im");
    add_output(kernel);

    auto* project = app.add_subcommand("project", "Project the conjugate monomial conj(z)^{kn}");
    project->add_option("--spec", spec_json, "Domain spec as JSON")->required();
    project->add_option("--cap", cap, "Degree cap for the quadrature check (default 3kn)");
    project->add_option("--radial-order", radial, "Gauss-Legendre points per radius");
    project->add_option("--angular-order", angular, "Trapezoid points per angle");
    project->add_flag("--check", quad_check, "Also recover the coefficient by quadrature");
    project->footer("CSV columns: alpha,beta,coeff_re,coeff_im,source");
    add_output(project);

    auto* threshold = app.add_subcommand("threshold", "Print the sharp L^p boundedness interval");
    threshold->add_option("--n", n, "Fiber dimension")->required();
    threshold->add_option("--k", k, "Power parameter")->required();
    threshold->add_option("--pexp", pexp, "Exponent(s) to classify, decimal or a/b");
    threshold->footer("CSV columns: n,k,p_low,p_high,p_low_value,p_high_value,pexp,bounded");
    add_output(threshold);

    auto* lpnorm =
        app.add_subcommand("lpnorm", "Monte Carlo L^p integrals of the projected conjugate monomial");
    lpnorm->add_option("--spec", spec_json, "Domain spec as JSON")->required();
    lpnorm->add_option("--pexp", pexp, "Exponent(s), decimal or a/b")->required();
    lpnorm->add_option("--seed", seed, "Random seed (default 0)");
    lpnorm->add_option("--count", count, "Sample count per estimate");
    lpnorm->add_flag("--diagnose", diagnose, "Run the count-quadrupling divergence diagnostic");
    lpnorm->footer("CSV columns: p,estimate,std_error,closed_form,verdict,diag_triggered\n"
                   "CSV comments: seed, count");
    add_output(lpnorm);

    auto* schur = app.add_subcommand("schur", "Empirical Schur-test ratios over a query grid");
    schur->add_option("--spec", spec_json, "Domain spec as JSON")->required();
    schur->add_option("--eps", eps_list, "Weight exponent(s), each >= 0.5");
    schur->add_option("--seed", seed, "Random seed (default 0)");
    schur->add_option("--count", count, "Sample count per query");
    schur->add_option("--grid", grid, "Queries per axis (grid x grid)");
    schur->add_option("--zmax", zmax, "Largest base modulus in the query grid");
    schur->footer("CSV columns: eps,max_ratio,std_error,query,eps_in_range,verdict\n"
                  "CSV comments: seed, count, grid, zmax");
    add_output(schur);

    auto* verify = app.add_subcommand("verify", "Run the built-in invariant suites");
    verify->add_option("--suite", suite, "all, domains, kernels, basis, integrate, projection, lp");
    verify->add_option("--seed", seed, "Random seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: kind=contract msg=\"" << e.what() << "\"\n";
        return 2;
    }

    const OutputSink out{format, out_path};
    try {
        if (kernel->parsed())
            return cmd_kernel(parse_spec_arg(spec_json), parse_point(p_str), parse_point(q_str), method,
                              tol, out);
        if (project->parsed())
            return cmd_project(parse_spec_arg(spec_json), cap, radial, angular, quad_check, out);
        if (threshold->parsed()) return cmd_threshold(n, k, pexp, out);
        if (lpnorm->parsed()) return cmd_lpnorm(parse_spec_arg(spec_json), pexp, seed, count, diagnose, out);
        if (schur->parsed()) return cmd_schur(parse_spec_arg(spec_json), eps_list, seed, count, grid, zmax, out);
        if (verify->parsed()) return cmd_verify(suite, seed);
    } catch (const ContractViolation& e) {
        std::cerr << "error: kind=contract msg=\"" << e.what() << "\"\n";
        return 2;
    } catch (const PoleError& e) {
        std::cerr << "error: kind=pole msg=\"" << e.what() << "\"\n";
        return 3;
    } catch (const ConvergenceFailure& e) {
        std::cerr << "error: kind=convergence msg=\"" << e.what() << "\"\n";
        return 3;
    } catch (const EvaluationError& e) {
        std::cerr << "error: kind=evaluation msg=\"" << e.what() << "\"\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: kind=internal msg=\"" << e.what() << "\"\n";
        return 3;
    }
    return 0;
}
