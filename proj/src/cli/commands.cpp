#include "polymean/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "polymean/errors.hpp"
#include "polymean/expr.hpp"
#include "polymean/fourier.hpp"
#include "polymean/geometry.hpp"
#include "polymean/identity_engine.hpp"
#include "polymean/kernel.hpp"
#include "polymean/report.hpp"
#include "polymean/scan.hpp"

namespace polymean::cli {

namespace {

using nlohmann::ordered_json;

double parse_double(std::string_view text, const char* what) {
    const std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw ParameterError(std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

void apply_degree_cap_env() {
    const char* env = std::getenv("POLYMEAN_DEGREE_CAP");
    if (env == nullptr) {
        set_degree_cap(64);
        return;
    }
    const std::string s(env);
    char* end = nullptr;
    const long cap = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size() || cap < 1 || cap > 1 << 20) {
        throw ParameterError("POLYMEAN_DEGREE_CAP must be a positive integer, got '" + s + "'");
    }
    set_degree_cap(static_cast<int>(cap));
}

ordered_json terms_json(const SymPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"z", m.zPow},
                         {"zbar", m.zbarPow},
                         {"u", m.uPow},
                         {"R", m.rPow},
                         {"v", m.vPow},
                         {"coefficient", c.str()}});
    }
    return terms;
}

ordered_json poly_list(const std::vector<SymPoly>& polys) {
    ordered_json list = ordered_json::array();
    for (const auto& p : polys) list.push_back(p.str());
    return list;
}

ordered_json complex_json(std::complex<double> c) { return {{"re", c.real()}, {"im", c.imag()}}; }

struct IdentityFlags {
    int n = 0;
    int m = 0;
    int s = 0;
    int h = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "polygon vertex count")->required();
        cmd->add_option("--m", m, "zbar degree bound plus one")->required();
        cmd->add_option("--s", s, "vertex weight power")->required();
        cmd->add_option("--h", h, "z degree bound")->required();
    }

    ProblemParams params() const { return ProblemParams::create(n, m, s, h); }
};

ordered_json params_json(const ProblemParams& p) {
    return {{"n", p.n()}, {"m", p.m()}, {"s", p.s()}, {"h", p.h()}, {"q", p.q()}};
}

Verdict below(double value, double tolerance) {
    return value < tolerance ? Verdict::IdentityHolds : Verdict::IdentityViolated;
}

}  // namespace

FunctionSpec parse_function_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParameterError("function spec must look like kind:args, got '" + std::string(text) + "'");
    }
    const auto kind = text.substr(0, colon);
    const auto rest = text.substr(colon + 1);
    if (kind == "poly") return FunctionSpec::polynomial(parse_poly(rest));
    if (kind == "planewave") {
        const auto sep = rest.find(':');
        if (sep == std::string_view::npos) throw ParameterError("planewave spec is planewave:<direction>:<lambda>");
        return FunctionSpec::plane_wave(parse_double(rest.substr(0, sep), "direction"),
                                        parse_double(rest.substr(sep + 1), "lambda"));
    }
    if (kind == "j0") return FunctionSpec::bessel_j0(parse_double(rest, "lambda"));
    if (kind == "n0") return FunctionSpec::neumann_n0(parse_double(rest, "lambda"));
    throw ParameterError("unknown function kind '" + std::string(kind) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric checks of the regular-polygon mean-value identity", "polymean"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1, 1);

    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "seed for randomized grids")->capture_default_str();

    std::function<Report()> action;

    // verify
    IdentityFlags verifyFlags;
    std::string verifyPoly;
    bool rotated = false;
    auto* verify = app.add_subcommand("verify", "exact residual of the identity for a polynomial");
    verifyFlags.attach(verify);
    verify->add_option("--poly", verifyPoly, "polynomial in z and zbar")->required();
    verify->add_flag("--rotated", rotated, "check the rotated form with v = e^{i beta}");
    verify->add_option("--seed", seed, "seed echoed in the report");
    verify->callback([&] {
        action = [&] {
            const ProblemParams p = verifyFlags.params();
            const SymPoly f = parse_poly(verifyPoly);
            const SymPoly res = rotated ? rotated_residual(f, p) : residual(f, p);
            Report r{"verify", params_json(p)};
            r.params["rotated"] = rotated;
            r.verdict = res.is_zero() ? Verdict::IdentityHolds : Verdict::IdentityViolated;
            r.payload["poly"] = f.str();
            r.payload["admissible"] = is_admissible_form(f, p);
            r.payload["lhs"] = lhs_polygon(f, p).str();
            r.payload["rhs"] = rhs_derivative(f, p).str();
            r.payload["residual"] = res.str();
            r.payload["residualTerms"] = terms_json(res);
            if (rotated) r.payload["vOneMatchesResidual"] = substitute_v_one(res) == residual(f, p);
            return r;
        };
    });

    // kernel
    IdentityFlags kernelFlags;
    int boundZ = 0;
    int boundZbar = 0;
    auto* kernel = app.add_subcommand("kernel", "exact kernel of the residual map on a bounded monomial grid");
    kernelFlags.attach(kernel);
    kernel->add_option("--K", boundZ, "maximum z degree")->required();
    kernel->add_option("--L", boundZbar, "maximum zbar degree")->required();
    kernel->add_option("--seed", seed, "seed for the numeric rank cross-check");
    kernel->callback([&] {
        action = [&] {
            const ProblemParams p = kernelFlags.params();
            const Adjudication adj = adjudicate(p, boundZ, boundZbar);
            const KernelReport& k = adj.report;
            const std::size_t exactRank = k.gridDimension - k.kernelDimension;
            const std::size_t numericRank = numeric_residual_rank(p, boundZ, boundZbar, seed);
            Report r{"kernel", params_json(p)};
            r.params["K"] = boundZ;
            r.params["L"] = boundZbar;
            r.verdict = Verdict::Info;
            r.payload["gridDimension"] = k.gridDimension;
            r.payload["kernelDimension"] = k.kernelDimension;
            r.payload["kernelBasis"] = poly_list(k.kernelBasis);
            r.payload["form2Dimension"] = k.form2Dimension;
            r.payload["form2GridDimension"] = k.form2GridDimension;
            r.payload["form2Contained"] = k.form2Contained;
            r.payload["extraElements"] = poly_list(k.extraElements);
            r.payload["relation"] = adj.relation == KernelRelation::Equal              ? "equal"
                                    : adj.relation == KernelRelation::StrictlyContains ? "strictly-contains"
                                                                                       : "differs";
            r.payload["necessityDiscrepancy"] = adj.necessityDiscrepancy;
            r.payload["summary"] = adj.summary;
            r.payload["exactRank"] = exactRank;
            r.payload["numericRank"] = numericRank;
            r.payload["rankAgreement"] = exactRank == numericRank;
            return r;
        };
    });

    // fourier
    std::string fourierFunc;
    int fourierK = 0;
    double fourierRho = 1.0;
    int fourierN = kDefaultQuadrature;
    auto* fourier = app.add_subcommand("fourier", "angular Fourier coefficient f_k(rho)");
    fourier->add_option("--func", fourierFunc, "function spec")->required();
    fourier->add_option("--k", fourierK, "mode index")->required();
    fourier->add_option("--rho", fourierRho, "radius")->required();
    fourier->add_option("--N", fourierN, "quadrature nodes")->capture_default_str();
    fourier->callback([&] {
        action = [&] {
            const FunctionSpec spec = parse_function_spec(fourierFunc);
            Report r{"fourier", {{"func", spec.name()}, {"k", fourierK}, {"rho", fourierRho}, {"N", fourierN}}};
            r.payload["value"] = complex_json(fourier_mode(spec, fourierK, fourierRho, fourierN));
            return r;
        };
    });

    // scan
    IdentityFlags scanFlags;
    std::string scanFunc;
    double scanR = 1.0;
    int scanPoints = 64;
    int scanAlphas = 8;
    double scanTol = 1e-8;
    auto* scan = app.add_subcommand("scan", "numeric residual of the identity over a random grid");
    scan->add_option("--func", scanFunc, "function spec")->required();
    scanFlags.attach(scan);
    scan->add_option("--R", scanR, "circumradius")->capture_default_str();
    scan->add_option("--seed", seed, "grid seed");
    scan->add_option("--points", scanPoints, "grid centers")->capture_default_str();
    scan->add_option("--alphas", scanAlphas, "rotation angles per center")->capture_default_str();
    scan->add_option("--tol", scanTol, "tolerance for identity-holds")->capture_default_str();
    scan->callback([&] {
        action = [&] {
            const ProblemParams p = scanFlags.params();
            const FunctionSpec spec = parse_function_spec(scanFunc);
            const auto grid = default_scan_grid(seed, scanPoints, scanAlphas);
            const double worst = numeric_identity_scan(spec, p, scanR, grid);
            Report r{"scan", params_json(p)};
            r.params["func"] = spec.name();
            r.params["R"] = scanR;
            r.params["points"] = scanPoints;
            r.params["alphas"] = scanAlphas;
            r.verdict = below(worst, scanTol);
            r.payload["maxResidual"] = worst;
            r.payload["tolerance"] = scanTol;
            r.payload["gridSize"] = grid.size();
            r.payload["derivatives"] = spec.has_oracle() ? "oracle" : "finite-difference";
            return r;
        };
    });

    // threshold
    int thresholdN = 0;
    double thresholdR = 1.0;
    auto* threshold = app.add_subcommand("threshold", "host-disk radius threshold for a regular n-gon");
    threshold->add_option("--n", thresholdN, "polygon vertex count")->required();
    threshold->add_option("--R", thresholdR, "circumradius")->required();
    threshold->callback([&] {
        action = [&] {
            const DiskGeometry g = r_star(thresholdN, thresholdR);
            Report r{"threshold", {{"n", thresholdN}, {"R", thresholdR}}};
            r.payload["inradius"] = g.inradius;
            r.payload["rStar"] = g.rStar;
            r.payload["minDomainRadius"] = g.minDomainRadius;
            return r;
        };
    });

    // recursion
    std::string recursionFunc;
    int recursionJ = 0;
    double recursionRho = 0.5;
    int recursionN = kDefaultQuadrature;
    bool noHalf = false;
    double recursionTol = 1e-6;
    auto* recursion = app.add_subcommand("recursion", "x-derivative mode relations at one radius");
    recursion->add_option("--func", recursionFunc, "function spec")->required();
    recursion->add_option("--j", recursionJ, "mode index")->required();
    recursion->add_option("--rho", recursionRho, "radius")->required();
    recursion->add_option("--N", recursionN, "quadrature nodes")->capture_default_str();
    recursion->add_flag("--no-half", noHalf, "check the relation without the 1/2 factors");
    recursion->add_option("--tol", recursionTol, "tolerance for identity-holds")->capture_default_str();
    recursion->callback([&] {
        action = [&] {
            const FunctionSpec spec = parse_function_spec(recursionFunc);
            const auto convention = noHalf ? HalfFactor::Omitted : HalfFactor::Included;
            const RecursionResidual res = mode_recursion_residual(spec, recursionJ, recursionRho, convention, recursionN);
            Report r{"recursion", {{"func", spec.name()}, {"j", recursionJ}, {"rho", recursionRho}, {"N", recursionN}}};
            r.params["halfFactor"] = !noHalf;
            r.verdict = below(std::max(res.lower, res.upper), recursionTol);
            r.payload["lowerResidual"] = res.lower;
            r.payload["upperResidual"] = res.upper;
            r.payload["tolerance"] = recursionTol;
            return r;
        };
    });

    // odecheck
    std::string odeFunc;
    int odeK = 0;
    double odeLambda = 1.0;
    double rhoMin = 0.5;
    double rhoMax = 3.0;
    std::size_t samples = 501;
    int odeN = kDefaultQuadrature;
    double odeTol = 1e-8;
    auto* ode = app.add_subcommand("odecheck", "Bessel-equation residual of an extracted mode profile");
    ode->add_option("--func", odeFunc, "function spec")->required();
    ode->add_option("--k", odeK, "mode index")->required();
    ode->add_option("--lambda", odeLambda, "Helmholtz wavenumber")->capture_default_str();
    ode->add_option("--rho-min", rhoMin, "smallest radius")->capture_default_str();
    ode->add_option("--rho-max", rhoMax, "largest radius")->capture_default_str();
    ode->add_option("--samples", samples, "number of radii")->capture_default_str();
    ode->add_option("--N", odeN, "quadrature nodes")->capture_default_str();
    ode->add_option("--tol", odeTol, "tolerance for identity-holds")->capture_default_str();
    ode->callback([&] {
        action = [&] {
            const FunctionSpec spec = parse_function_spec(odeFunc);
            const ModeProfile profile = sample_mode(spec, odeK, uniform_radii(rhoMin, rhoMax, samples), odeN);
            const double worst = bessel_ode_residual(profile, odeLambda, odeK);
            Report r{"odecheck", {{"func", spec.name()}, {"k", odeK}, {"lambda", odeLambda}}};
            r.params["rhoMin"] = rhoMin;
            r.params["rhoMax"] = rhoMax;
            r.params["samples"] = samples;
            r.params["N"] = odeN;
            r.verdict = below(worst, odeTol);
            r.payload["maxResidual"] = worst;
            r.payload["tolerance"] = odeTol;
            return r;
        };
    });

    try {
        apply_degree_cap_env();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitHolds : kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        Report report = action();
        report.seed = seed;
        out << report.serialize();
        return report.verdict == Verdict::IdentityViolated ? kExitViolated : kExitHolds;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace polymean::cli
