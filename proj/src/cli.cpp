#include "pconf/cli.hpp"

#include "pconf/asymptotics.hpp"
#include "pconf/backlund.hpp"
#include "pconf/errors.hpp"
#include "pconf/fredholm.hpp"
#include "pconf/monodromy.hpp"
#include "pconf/series.hpp"
#include "pconf/umemura.hpp"
#include "pconf/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace pconf::cli {
namespace {

using json = nlohmann::ordered_json;

// -0 is printed as 0 so equal values serialize identically.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

json cjson(cplx z) { return json{{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

// %.17g keeps CSV output round-trippable and locale independent.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", clean(v));
    return buf;
}

double parse_real(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Runs f(0..n-1) on thread_count() workers; results stay in index order.
template <class T, class F>
std::vector<T> parallel_map(int n, F f) {
    std::vector<std::optional<T>> out(n);
    std::vector<std::exception_ptr> err(n);
    const int workers = std::max(1, std::min(thread_count(), n));
    auto work = [&](int w) {
        for (int i = w; i < n; i += workers) {
            try {
                out[i] = f(i);
            } catch (...) {
                err[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
    for (int i = 0; i < n; ++i)
        if (err[i]) std::rethrow_exception(err[i]);
    std::vector<T> res;
    res.reserve(n);
    for (auto& o : out) res.push_back(std::move(*o));
    return res;
}

}  // namespace

cplx parse_complex(const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex number");
    if (s.back() != 'i') return parse_real(s);
    s.pop_back();
    // split at the last sign that is not an exponent sign or the leading sign
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    double imv;
    if (im.empty() || im == "+") imv = 1.0;
    else if (im == "-") imv = -1.0;
    else imv = parse_real(im[0] == '+' ? im.substr(1) : im);
    return {re.empty() ? 0.0 : parse_real(re), imv};
}

std::vector<cplx> parse_grid(const std::string& s) {
    const auto a = s.find(':');
    if (a == std::string::npos) return {parse_complex(s)};
    const auto b = s.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("grid must be start:stop:count");
    const cplx lo = parse_complex(s.substr(0, a)), hi = parse_complex(s.substr(a + 1, b - a - 1));
    int count = 0;
    try {
        count = std::stoi(s.substr(b + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad grid count in '" + s + "'");
    }
    if (count < 1) throw std::invalid_argument("grid count must be >= 1");
    std::vector<cplx> g;
    for (int k = 0; k < count; ++k) g.push_back(count == 1 ? lo : lo + (hi - lo) * (static_cast<double>(k) / (count - 1)));
    return g;
}

std::pair<std::string, double> parse_tolerance(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("tolerance must be key=value");
    return {s.substr(0, eq), parse_real(s.substr(eq + 1))};
}

int thread_count() {
    const char* env = std::getenv("PCONF_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return std::clamp(n, 1, 256);
}

RunResult cmd_umemura(const RunConfig& cfg) {
    if (cfg.nMax < 0) throw std::invalid_argument("--n-max must be >= 0");
    const Rational m = parse_rational(cfg.m);
    UmemuraSequence seq(m);
    seq.extend(cfg.nMax);
    RunResult r;
    json polys = json::array(), origin = json::array();
    std::ostringstream csv;
    csv << "n,degree,s_n0,u_n0,coefficients\n";
    for (int n = -1; n <= cfg.nMax; ++n) {
        const RationalPoly p = seq.poly(n);
        json coeffs = json::array();
        std::string clist;
        for (const auto& c : p.coeffs()) {
            coeffs.push_back(c.get_str());
            clist += (clist.empty() ? "" : " ") + c.get_str();
        }
        polys.push_back({{"n", n}, {"degree", p.degree()}, {"coefficients", coeffs}});
        const Rational s0 = seq.at_zero(n);
        std::string u0 = "";
        if (n >= 0) {
            // u_n(0;m) is the ratio of origin values; throws HalfIntegerM when undefined
            u0 = un_zero_product(n, m).get_str();
            origin.push_back({{"n", n}, {"s_n0", s0.get_str()}, {"u_n0", u0}});
        } else {
            origin.push_back({{"n", n}, {"s_n0", s0.get_str()}, {"u_n0", nullptr}});
        }
        csv << n << ',' << p.degree() << ',' << s0.get_str() << ',' << u0 << ',' << clist << '\n';
    }
    if (cfg.format == Format::Json) {
        json out{{"command", "umemura"}, {"m", m.get_str()}, {"nMax", cfg.nMax}, {"polynomials", polys}, {"origin", origin}};
        r.output = dump(out);
    } else {
        r.output = csv.str();
    }
    return r;
}

RunResult cmd_confluence(const RunConfig& cfg) {
    if (cfg.js.empty()) throw std::invalid_argument("--j needs at least one value");
    for (int j : cfg.js)
        if (j < 1) throw std::invalid_argument("--j values must be >= 1");
    const Rational m = parse_rational(cfg.m);
    const auto zs = parse_grid(cfg.zGrid);
    const int jmax = *std::max_element(cfg.js.begin(), cfg.js.end());
    const RationalSolutionEvaluator ev(m, 2 * jmax + 1);
    const SeriesSolution U = d8_series(even_origin_limit(to_double(m)), cfg.seriesOrder);
    json rows = json::array(), trends = json::array();
    std::ostringstream csv;
    csv << "j,z_re,z_im,gap_even,gap_odd\n";
    for (cplx z : zs) {
        std::vector<double> idx, ge, go;
        for (int j : cfg.js) {
            json row{{"j", j}, {"z", cjson(z)}};
            try {
                const GapPair g = confluence_gap(ev, U, j, z);
                row["gapEven"] = g.even;
                row["gapOdd"] = g.odd;
                row["flag"] = nullptr;
                csv << j << ',' << num(z.real()) << ',' << num(z.imag()) << ',' << num(g.even) << ',' << num(g.odd) << '\n';
                idx.push_back(j);
                ge.push_back(g.even);
                go.push_back(g.odd);
            } catch (const PoleHit&) {
                row["gapEven"] = nullptr;
                row["gapOdd"] = nullptr;
                row["flag"] = "PoleHit";
                csv << j << ',' << num(z.real()) << ',' << num(z.imag()) << ",PoleHit,PoleHit\n";
            }
            rows.push_back(row);
        }
        json t{{"z", cjson(z)}};
        if (idx.size() >= 2) {
            const TrendReport te = fit_trend(idx, ge), to = fit_trend(idx, go);
            t["rateEven"] = te.rateEstimate;
            t["rateOdd"] = to.rateEstimate;
            t["pass"] = te.pass && to.pass;
        } else {
            t["rateEven"] = nullptr;
            t["rateOdd"] = nullptr;
            t["pass"] = false;
        }
        trends.push_back(t);
    }
    RunResult r;
    if (cfg.format == Format::Json)
        r.output = dump(json{{"command", "confluence"}, {"m", m.get_str()}, {"rows", rows}, {"trends", trends}});
    else
        r.output = csv.str();
    return r;
}

RunResult cmd_fredholm(const RunConfig& cfg) {
    FredholmConfig fc;
    fc.quadOrder = cfg.quadOrder;
    fc.seriesOrder = cfg.seriesOrder;
    fc.lambda = cfg.lambda.empty() ? lambda_of_m(parse_complex(cfg.m)) : parse_complex(cfg.lambda);
    const auto rs = parse_grid(cfg.rGrid);
    struct Row {
        cplx r;
        std::optional<cplx> series;
        cplx nystrom, sigma;
        double residual;
    };
    const auto rows = parallel_map<Row>(static_cast<int>(rs.size()), [&](int i) {
        const cplx r = rs[i];
        Row row{r, std::nullopt, 0.0, 0.0, 0.0};
        try {
            row.series = logdet_series(r, fc);
        } catch (const TruncationBudgetExceeded&) {
            // beyond the series budget only the quadrature column is reported
        }
        if (r != 0.0) {
            row.nystrom = logdet_nystrom(r, fc);
            const FredholmEval e = fredholm_eval(r, fc, FredholmMethod::Nystrom);
            row.sigma = e.sigma;
            row.residual = std::abs(sigma_form_residual(r, fc, FredholmMethod::Nystrom));
        }
        return row;
    });
    RunResult res;
    if (cfg.format == Format::Json) {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"r", cjson(row.r)},
                           {"logDetSeries", row.series ? cjson(*row.series) : json(nullptr)},
                           {"logDetNystrom", cjson(row.nystrom)},
                           {"sigma", cjson(row.sigma)},
                           {"sigmaFormResidual", row.residual}});
        res.output = dump(json{{"command", "fredholm"}, {"lambda", cjson(fc.lambda)}, {"quadOrder", fc.quadOrder}, {"rows", arr}});
    } else {
        std::ostringstream csv;
        csv << "r_re,r_im,logdet_series_re,logdet_series_im,logdet_nystrom_re,logdet_nystrom_im,sigma_re,sigma_im,"
               "sigma_form_residual\n";
        for (const auto& row : rows) {
            csv << num(row.r.real()) << ',' << num(row.r.imag()) << ',';
            if (row.series) csv << num(row.series->real()) << ',' << num(row.series->imag()) << ',';
            else csv << "NA,NA,";
            csv << num(row.nystrom.real()) << ',' << num(row.nystrom.imag()) << ',' << num(row.sigma.real()) << ','
                << num(row.sigma.imag()) << ',' << num(row.residual) << '\n';
        }
        res.output = csv.str();
    }
    return res;
}

RunResult cmd_monodromy(const RunConfig& cfg) {
    if (cfg.draws < 0) throw std::invalid_argument("--draws must be >= 0");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> strip(-0.5, 0.5), box(-2.0, 2.0);
    // draws are generated sequentially so the sample does not depend on the thread count
    std::vector<MonodromyData> data;
    int rejected = 0;
    while (static_cast<int>(data.size()) < cfg.draws) {
        const cplx mu(strip(rng), strip(rng)), eta(strip(rng), strip(rng)), t0(box(rng), box(rng)), ti(box(rng), box(rng));
        try {
            data.push_back(MonodromyData::from_thetas(t0, ti, mu, eta));
        } catch (const NonGeneric&) {
            ++rejected;
        }
    }
    struct Row {
        double d6, d8, cyclic, eigen;
    };
    const auto rows = parallel_map<Row>(static_cast<int>(data.size()), [&](int i) {
        const auto& d = data[i];
        const auto c = cyclic_residuals(d);
        const auto e = eigen_residuals(d);
        return Row{x_coords(d).residual, std::max(y_coords(d, 1).residual, y_coords(d, -1).residual),
                   std::max({c[0], c[1], cplus_agreement(d)}), std::max(e[0], e[1])};
    });
    const cplx m = parse_complex(cfg.m);
    const MonodromyData rd = rational_family_data(m);
    const CubicPoint x = x_coords(rd), y = y_coords(rd);
    const cplx q = std::exp(cplx(0.0, std::numbers::pi) * m), rt = std::sqrt(1.0 + q * q);
    RunResult res;
    if (cfg.format == Format::Json) {
        json arr = json::array();
        Row worst{0, 0, 0, 0};
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& d = data[i];
            const auto& w = rows[i];
            worst = {std::max(worst.d6, w.d6), std::max(worst.d8, w.d8), std::max(worst.cyclic, w.cyclic),
                     std::max(worst.eigen, w.eigen)};
            arr.push_back({{"index", i},
                           {"theta0", cjson(d.theta0)},
                           {"thetaInf", cjson(d.thetaInf)},
                           {"mu", cjson(d.mu)},
                           {"eta", cjson(d.eta)},
                           {"d6Residual", w.d6},
                           {"d8Residual", w.d8},
                           {"cyclicResidual", w.cyclic},
                           {"eigenResidual", w.eigen}});
        }
        json rational{{"m", cjson(m)},
                      {"x", {cjson(x.coords[0]), cjson(x.coords[1]), cjson(x.coords[2])}},
                      {"y", {cjson(y.coords[0]), cjson(y.coords[1]), cjson(y.coords[2])}},
                      {"yExpected", {cjson(cplx(0, 1) * q / rt), cjson(cplx(0, 1) / rt), cjson(0.0)}},
                      {"d6Residual", x.residual},
                      {"d8Residual", y.residual}};
        res.output = dump(json{{"command", "monodromy"},
                               {"seed", cfg.seed},
                               {"draws", arr},
                               {"rejected", rejected},
                               {"max", {{"d6Residual", worst.d6}, {"d8Residual", worst.d8},
                                        {"cyclicResidual", worst.cyclic}, {"eigenResidual", worst.eigen}}},
                               {"rational", rational}});
    } else {
        std::ostringstream csv;
        csv << "index,theta0_re,theta0_im,thetainf_re,thetainf_im,mu_re,mu_im,eta_re,eta_im,d6_residual,d8_residual,"
               "cyclic_residual,eigen_residual\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& d = data[i];
            const auto& w = rows[i];
            csv << i;
            for (cplx v : {d.theta0, d.thetaInf, d.mu, d.eta}) csv << ',' << num(v.real()) << ',' << num(v.imag());
            csv << ',' << num(w.d6) << ',' << num(w.d8) << ',' << num(w.cyclic) << ',' << num(w.eigen) << '\n';
        }
        res.output = csv.str();
    }
    return res;
}

RunResult cmd_verify(const RunConfig& cfg) {
    VerifyOptions opt;
    opt.only.insert(cfg.only.begin(), cfg.only.end());
    opt.tolerances = cfg.tolerances;
    const auto results = run_acceptance(opt);
    RunResult res;
    bool all = !results.empty();
    json arr = json::array();
    std::ostringstream csv, rep;
    csv << "id,module,name,pass,detail\n";
    for (const auto& r : results) {
        all = all && r.pass;
        rep << format_result(r) << '\n';
        arr.push_back({{"id", r.id}, {"module", r.module}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::string detail = r.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        csv << r.id << ',' << r.module << ',' << r.name << ',' << (r.pass ? "true" : "false") << ',' << detail << '\n';
    }
    rep << (all ? "ALL PASS" : "FAILURES PRESENT") << " (" << results.size() << " criteria)\n";
    res.report = rep.str();
    res.output = cfg.format == Format::Json ? dump(json{{"command", "verify"}, {"allPass", all}, {"criteria", arr}}) : csv.str();
    res.exitCode = all ? kExitOk : kExitIdentity;
    return res;
}

RunResult run(const RunConfig& cfg) {
    try {
        if (cfg.command == "umemura") return cmd_umemura(cfg);
        if (cfg.command == "confluence") return cmd_confluence(cfg);
        if (cfg.command == "fredholm") return cmd_fredholm(cfg);
        if (cfg.command == "monodromy") return cmd_monodromy(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        return {kExitUsage, "", "unknown command '" + cfg.command + "'\n"};
    } catch (const Error& e) {
        const int code = e.kind() == ErrorKind::IdentityFalsified ? kExitIdentity
                         : e.kind() == ErrorKind::NumericalBudget ? kExitBudget
                                                                  : kExitUsage;
        return {code, "", std::string(e.what()) + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
    }
}

}  // namespace pconf::cli
