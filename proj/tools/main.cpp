// Command-line surface for the Eisenstein / cubic Gauss sum toolkit.
#include <chrono>
#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zomega/analytic.hpp"
#include "zomega/cache.hpp"
#include "zomega/cubic_symbol.hpp"
#include "zomega/eisenstein.hpp"
#include "zomega/experiments.hpp"
#include "zomega/factor.hpp"
#include "zomega/gauss_sum.hpp"
#include "zomega/report.hpp"
#include "zomega/windows.hpp"

using namespace zomega;
using nlohmann::json;

namespace {

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

struct Ctx {
    std::string cache_path;
    std::string out_path;
    std::string format{"json"};
    std::unique_ptr<GaussCache> cache;

    GaussCache& disk() {
        if (!cache) cache = std::make_unique<GaussCache>(GaussCache::resolve_path(cache_path));
        return *cache;
    }

    GtildeCache gtcache() {
        return GtildeCache([this](const EisensteinInt& pi) {
            uint64_t p = uint64_t(pi.norm());
            GaussSumValue v = disk().get_or_compute(p);
            EisensteinInt canon = split_rational_prime(p).first;
            if (pi == canon) return v;
            v.value = std::conj(v.value);
            return v;
        });
    }

    void emit(ReportEnvelope& rep, double wall) {
        rep.wall_time = wall;
        std::cout << rep.to_json().dump(2) << "\n";
        if (!out_path.empty()) export_table(rep, format, out_path);
    }
};

GtildeCache local_cache() { return GtildeCache(); }

SieveSequence make_beta(const std::string& kind, double B, const std::string& b0,
                        GtildeCache& gc) {
    SieveSequence beta;
    if (kind == "singleton") {
        EisensteinInt b = parse_eisenstein(b0);
        beta.support.push_back({b, {1.0, 0.0}});
        return beta;
    }
    for (const EisensteinInt& b : squarefree_range(B)) {
        std::complex<double> v =
            kind == "witness" ? std::conj(gc.composite(b).value) : std::complex<double>{1.0, 0.0};
        beta.support.push_back({b, v});
    }
    return beta;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein-integer cubic Gauss sum toolkit"};
    app.require_subcommand(1);
    Ctx ctx;
    app.add_option("--cache", ctx.cache_path, "Gauss sum cache file");
    app.add_option("--out", ctx.out_path, "write the report to this file");
    app.add_option("--format", ctx.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- flag storage ----
    uint64_t p = 7, X = 1000;
    long long k = 1, ell = 0;
    double A = 64, B = 64, M = 1000, U = 10000, tol = 1e-9;
    int iters = 20000;
    long long Nmax = 10000, wq = 10, zq = 50;
    std::string a_str = "1", b_str = "1+3w", c_str = "1+3w", r_str = "1";
    std::string n1_str = "1", n2_str = "1", mode = "twisted", window = "sharp";
    std::string beta_kind = "witness", b0_str = "1+3w", Ns_str = "128,256,512,1024,2048";

    CLI::App* sc_split = app.add_subcommand("split", "split a rational prime p == 1 mod 3");
    sc_split->add_option("--p", p)->required();

    CLI::App* sc_symbol = app.add_subcommand("symbol", "cubic residue symbol (a/b)_3");
    sc_symbol->add_option("--a", a_str)->required();
    sc_symbol->add_option("--b", b_str)->required();

    CLI::App* sc_gauss = app.add_subcommand("gauss", "gtilde(c) for squarefree primary c");
    sc_gauss->add_option("--c", c_str)->required();

    CLI::App* sc_sp = app.add_subcommand("sp", "cubic exponential sum S_p");
    sc_sp->add_option("--p", p)->required();

    CLI::App* sc_kummer = app.add_subcommand("kummer", "Kummer angle histogram up to X");
    sc_kummer->add_option("--X", X)->required();

    CLI::App* sc_pat = app.add_subcommand("patterson", "bias partial sums vs main term");
    sc_pat->add_option("--X", X)->required();
    sc_pat->add_option("--window", window)->check(CLI::IsMember({"sharp", "bump"}));

    CLI::App* sc_pow = app.add_subcommand("powersum", "sum of gtilde^k over primary primes");
    sc_pow->add_option("--k", k)->required();
    sc_pow->add_option("--X", X)->required();

    CLI::App* sc_t1 = app.add_subcommand("type1", "Type-I sum vs smooth main term");
    sc_t1->add_option("--r", r_str);
    sc_t1->add_option("--ell", ell);
    sc_t1->add_option("--U", U)->required();

    CLI::App* sc_form = app.add_subcommand("sieve-form", "large sieve quadratic form");
    sc_form->add_option("--A", A)->required();
    sc_form->add_option("--B", B)->required();
    sc_form->add_option("--beta", beta_kind)->check(CLI::IsMember({"witness", "ones", "singleton"}));
    sc_form->add_option("--b0", b0_str);

    CLI::App* sc_norm = app.add_subcommand("sieve-norm", "large sieve operator norm");
    sc_norm->add_option("--A", A)->required();
    sc_norm->add_option("--B", B)->required();
    sc_norm->add_option("--iters", iters);
    sc_norm->add_option("--tol", tol);

    CLI::App* sc_sharp = app.add_subcommand("sharpness", "sharpness witness exponent fit");
    sc_sharp->add_option("--Ns", Ns_str, "comma-separated dyadic sizes");

    CLI::App* sc_corr = app.add_subcommand("corrected-sieve", "corrected vs uncorrected form");
    sc_corr->add_option("--A", A)->required();
    sc_corr->add_option("--B", B)->required();

    CLI::App* sc_pois = app.add_subcommand("poisson-check", "Poisson summation verifier");
    sc_pois->add_option("--mode", mode)->check(CLI::IsMember({"radial", "twisted"}));
    sc_pois->add_option("--n1", n1_str);
    sc_pois->add_option("--n2", n2_str);
    sc_pois->add_option("--M", M)->required();

    CLI::App* sc_comb = app.add_subcommand("comb-check", "combinatorial identity check");
    sc_comb->add_option("--Nmax", Nmax);
    sc_comb->add_option("--w", wq);
    sc_comb->add_option("--z", zq);

    CLI::App* sc_self = app.add_subcommand("selftest", "quick invariant suite");

    // let the global --cache/--out/--format flags appear after the subcommand
    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto wall = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    try {
        ReportEnvelope rep;
        if (*sc_split) {
            rep.command = "split";
            rep.params["p"] = p;
            auto [pi, pic] = split_rational_prime(p);
            rep.results["pi"] = pi.str();
            rep.results["conj"] = pic.str();
            rep.results["norm"] = double(pi.norm());
            rep.provenance.push_back("gcd(p, t - lambda) with t^2 == -3 mod p");
        } else if (*sc_symbol) {
            rep.command = "symbol";
            EisensteinInt a = parse_eisenstein(a_str), b = parse_eisenstein(b_str);
            rep.params["a"] = a.str();
            rep.params["b"] = b.str();
            rep.results["symbol"] = cubic_symbol(a, b).str();
            rep.provenance.push_back("reciprocity-and-supplements evaluation, no factoring");
        } else if (*sc_gauss) {
            rep.command = "gauss";
            EisensteinInt c = parse_eisenstein(c_str);
            rep.params["c"] = c.str();
            GaussSumValue v = gtilde(c);
            rep.results["gtilde"] = complex_json(v.value);
            rep.results["err_bound"] = v.err_bound;
            rep.provenance.push_back("twisted multiplicativity over the prime factorization");
        } else if (*sc_sp) {
            rep.command = "sp";
            rep.params["p"] = p;
            SpResult s = kummer_sum_Sp(p);
            rep.results["Sp"] = s.Sp;
            rep.results["err_bound"] = s.err_bound;
            rep.provenance.push_back("S_p = 1 + 6 sum over nonzero cubes of cos(2 pi k/p)");
        } else if (*sc_kummer) {
            rep.command = "kummer";
            rep.params["X"] = X;
            GtildeCache gc = ctx.gtcache();
            KummerHistogram h = kummer_histogram(X, gc);
            rep.results["counts"] = h.counts;
            rep.results["freq"] = h.freq;
            rep.results["total"] = h.total;
            json table = json::array();
            for (uint32_t q : primes_up_to(uint32_t(X))) {
                if (q % 3 != 1) continue;
                std::complex<double> g = gc.prime(split_rational_prime(q).first).value;
                double theta = std::arg(g) / (2 * 3.14159265358979323846);
                if (theta < 0) theta += 1.0;
                double c = g.real();
                int bin = c >= 0.5 ? 1 : (c >= -0.5 ? 2 : 3);
                table.push_back({{"p", q}, {"theta", theta}, {"cos", c}, {"interval", bin}});
            }
            rep.results["table"] = std::move(table);
            rep.provenance.push_back("cos(2 pi theta_p) = S_p/(2 sqrt p); ties go up");
        } else if (*sc_pat) {
            rep.command = "patterson";
            rep.params["X"] = X;
            rep.params["window"] = window;
            Window w = window == "sharp" ? Window::sharp(0, 1) : Window::bump(0.5, 1);
            GtildeCache gc = ctx.gtcache();
            json table = json::array();
            for (uint64_t Xi = 100; Xi <= X; Xi *= 10) {
                ExperimentReport r = patterson_sum(Xi, w, gc);
                table.push_back({{"X", Xi},
                                 {"observed", r.observed.real()},
                                 {"predicted", r.predicted},
                                 {"ratio", r.ratio}});
                if (Xi == X || Xi * 10 > X) {
                    rep.results["observed"] = r.observed.real();
                    rep.results["predicted"] = r.predicted;
                    rep.results["ratio"] = r.ratio;
                    rep.provenance.push_back(r.provenance);
                }
            }
            rep.results["table"] = std::move(table);
        } else if (*sc_pow) {
            rep.command = "powersum";
            rep.params["k"] = k;
            rep.params["X"] = X;
            GtildeCache gc = ctx.gtcache();
            ExperimentReport r = power_sum_k(k, X, Window::bump(0.5, 1), gc);
            rep.results["observed"] = complex_json(r.observed);
            rep.results["normalized"] = r.ratio;
            rep.provenance.push_back(r.provenance);
        } else if (*sc_t1) {
            rep.command = "type1";
            rep.params["r"] = r_str;
            rep.params["ell"] = ell;
            rep.params["U"] = U;
            GtildeCache gc = ctx.gtcache();
            ExperimentReport r = type1_sum(parse_eisenstein(r_str), ell, U, Window::bump(1, 2), gc);
            rep.results["observed"] = complex_json(r.observed);
            rep.results["predicted"] = r.predicted;
            rep.results["ratio"] = r.ratio;
            rep.provenance.push_back(r.provenance);
        } else if (*sc_form) {
            rep.command = "sieve-form";
            rep.params["A"] = A;
            rep.params["B"] = B;
            rep.params["beta"] = beta_kind;
            GtildeCache gc = local_cache();
            SieveSequence beta = make_beta(beta_kind, B, b0_str, gc);
            double v = large_sieve_form(A, B, beta);
            rep.results["value"] = v;
            rep.results["beta_norm_sq"] = beta.norm_sq();
            rep.results["normalized"] = v / beta.norm_sq();
            rep.provenance.push_back("sum over squarefree primary a in (A,2A] of |sum beta (b/a)_3|^2");
        } else if (*sc_norm) {
            rep.command = "sieve-norm";
            rep.params["A"] = A;
            rep.params["B"] = B;
            OperatorNormResult r = operator_norm(A, B, iters, tol);
            rep.results["norm"] = r.norm;
            rep.results["dim_a"] = r.dim_a;
            rep.results["dim_b"] = r.dim_b;
            rep.results["iters"] = r.iters;
            rep.results["rayleigh_tail"] =
                std::vector<double>(r.rayleigh.end() - std::min<size_t>(5, r.rayleigh.size()),
                                    r.rayleigh.end());
            rep.provenance.push_back("power iteration on the Gram form, deterministic start");
        } else if (*sc_sharp) {
            rep.command = "sharpness";
            std::vector<double> Ns;
            std::stringstream ss(Ns_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) Ns.push_back(std::stod(tok));
            GtildeCache gc = ctx.gtcache();
            SharpnessResult r = sharpness_probe(Ns, Window::bump(1, 2), gc);
            rep.params["Ns"] = Ns;
            rep.results["slope"] = r.slope;
            json table = json::array();
            for (size_t i = 0; i < r.log_ab.size(); ++i)
                table.push_back({{"log_ab", r.log_ab[i]}, {"log_value", r.log_value[i]}});
            rep.results["table"] = std::move(table);
            rep.provenance.push_back("witness beta = conj(gtilde) W; slope target 2/3");
        } else if (*sc_corr) {
            rep.command = "corrected-sieve";
            rep.params["A"] = A;
            rep.params["B"] = B;
            GtildeCache gc = ctx.gtcache();
            SieveSequence beta = make_beta("witness", B, b0_str, gc);
            CorrectedSieveResult r = corrected_sieve_sum(A, B, beta, Window::bump(0.5, 1), gc);
            rep.results["corrected"] = r.corrected;
            rep.results["uncorrected"] = r.uncorrected;
            rep.results["ratio"] = r.corrected / std::max(r.uncorrected, 1e-300);
            rep.provenance.push_back("correction subtracts the smooth gtilde main term inside |.|^2");
        } else if (*sc_pois) {
            rep.command = "poisson-check";
            rep.params["mode"] = mode;
            rep.params["M"] = M;
            PoissonCheck r;
            if (mode == "radial") {
                EisensteinInt q = parse_eisenstein(n1_str);
                rep.params["q"] = q.str();
                r = poisson_radial_check([](const EisensteinInt&) { return std::complex<double>(1.0, 0.0); },
                                         q, Window::bump(0.5, 1), M);
            } else {
                EisensteinInt n1 = parse_eisenstein(n1_str), n2 = parse_eisenstein(n2_str);
                rep.params["n1"] = n1.str();
                rep.params["n2"] = n2.str();
                r = poisson_twisted_check(n1, n2, Window::bump(0.5, 1), M);
            }
            rep.results["lhs"] = complex_json(r.lhs);
            rep.results["rhs"] = complex_json(r.rhs);
            rep.results["discrepancy"] = r.discrepancy;
            rep.results["K"] = double(r.K);
            rep.results["tail_bound"] = r.tail_bound;
            rep.provenance.push_back("dual side truncated via the measured Vddot decay constant");
        } else if (*sc_comb) {
            rep.command = "comb-check";
            rep.params["Nmax"] = Nmax;
            rep.params["w"] = wq;
            rep.params["z"] = zq;
            CombCheckResult r = comb_identity_check(Nmax, wq, zq);
            rep.results["checked"] = r.checked;
            rep.results["mismatches"] = r.mismatches;
            rep.provenance.push_back("exact rational coefficient comparison");
            if (r.mismatches != 0) {
                ctx.emit(rep, wall());
                return 1;
            }
        } else if (*sc_self) {
            rep.command = "selftest";
            int failures = 0;
            // symbol vs Euler oracle
            for (int t = 1; t <= 200; ++t) {
                EisensteinInt a{(t * 37) % 101 - 50, (t * t) % 61 - 30};
                EisensteinInt b = split_rational_prime(uint64_t(std::vector<int>{7, 13, 31, 61, 103}[t % 5])).first;
                if (!(cubic_symbol(a, b) == symbol_euler_prime(a, b))) ++failures;
            }
            // cube relation on squarefree primary N <= 500
            for (const EisensteinInt& c : enumerate_primary(1, 500, PrimaryPredicate::Squarefree)) {
                std::complex<double> lhs = std::pow(gtilde(c).value, 3);
                std::complex<double> rhs =
                    double(multiplicative_functions(c).mobius) * c.to_complex() /
                    std::sqrt(double(c.norm()));
                if (std::abs(lhs - rhs) > 1e-8) ++failures;
            }
            // S_p identity for small p
            for (uint32_t q : primes_up_to(200))
                if (q % 3 == 1) kummer_sum_Sp(q);  // throws on violation
            rep.results["failures"] = failures;
            rep.provenance.push_back("symbol oracle, cube relation, S_p identity");
            if (failures != 0) {
                ctx.emit(rep, wall());
                return 1;
            }
        }
        ctx.emit(rep, wall());
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
