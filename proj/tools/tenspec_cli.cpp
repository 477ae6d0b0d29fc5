// tenspec: command-line front end for the tensor spectral library.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tenspec/geometry.hpp"
#include "tenspec/invariants.hpp"
#include "tenspec/json_io.hpp"
#include "tenspec/spectra.hpp"

using namespace tenspec;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;

struct RunConfig {
    double tol_residual = 1e-8;
    double tol_singular = 1e-8;
    int samples = 0;
    std::uint64_t seed = 42;
    std::string parallel = "off";
    std::string out;

    SpectraConfig spectra() const
    {
        SpectraConfig cfg;
        cfg.tol_singular = tol_singular;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.tracker.parallel = parallel == "on";
        return cfg;
    }
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& rc, const Json& j)
{
    // serialise fully before writing so a failure never leaves partial output
    const std::string text = j.dump(2);
    if (rc.out.empty()) {
        std::cout << text << '\n';
    } else {
        write_json_file(rc.out, j);
    }
}

std::vector<Complex> parse_values(const std::string& text)
{
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse diagonal value '" + item + "'");
        }
        if (used != item.size())
            throw UsageError("cannot parse diagonal value '" + item + "'");
        out.emplace_back(v, 0.0);
    }
    return out;
}

// gen

struct GenArgs {
    std::string kind;
    int order = 3;
    int dim = 2;
    std::string values;
};

Json cmd_gen(const GenArgs& g, const RunConfig& rc)
{
    if (g.kind == "random" || g.kind == "symmetric")
        return to_json(random_tensor(g.order, g.dim, rc.seed, g.kind == "symmetric"));
    if (g.kind == "diagonal") {
        if (g.values.empty())
            throw UsageError("gen diagonal needs --values");
        const auto vals = parse_values(g.values);
        if (static_cast<int>(vals.size()) != g.dim)
            throw UsageError("--values must list --dim numbers");
        return to_json(Tensor::diagonal(g.order, vals));
    }
    const SingularSample s = singular_tensor(g.order, g.dim, rc.seed);
    Json j = to_json(s.tensor);
    j["witness"] = to_json(s.kernel_point);
    j["witness_residual"] = kernel_residual(s.tensor, s.kernel_point);
    return j;
}

// det / charpoly / eigen

Json cmd_det(const Tensor& t, const RunConfig& rc)
{
    const ResultantValue d = determinant_detailed(t);
    const double scale = determinant_scale(t);
    Json j;
    j["det"] = to_json(d.value);
    j["scale"] = scale;
    j["singular"] = std::abs(d.value) <= rc.tol_singular * scale;
    j["retries"] = d.retries;
    return j;
}

Json cmd_charpoly(const Tensor& t, const RunConfig& rc) { return to_json(echar_poly(t, rc.spectra())); }

Json cmd_eigen(const Tensor& t, const RunConfig& rc) { return to_json(eigenpairs(t, rc.spectra())); }

// disc-check

void require_symmetric(const Tensor& t)
{
    if (!is_symmetric(t, kSymmetryTol))
        throw UsageError("the discriminant check requires a symmetric tensor");
}

Json cmd_disc_check(const Tensor& t, const RunConfig& rc)
{
    require_symmetric(t);
    return to_json(discriminant_report(t, rc.spectra(), rc.samples));
}

// invariants

MatrixPair pair_of(const Tensor& t)
{
    if (t.order() != 3 || t.dim() != 2)
        throw UsageError("invariants needs an order-3 tensor of dimension 2");
    const auto slices = slice_matrices(t);
    try {
        return MatrixPair(slices[0], slices[1]);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("slices are not symmetric: ") + e.what());
    }
}

Json cmd_invariants(const Tensor& t, const RunConfig&)
{
    const MatrixPair pair = pair_of(t);
    Json j;
    j["formula"] = to_json(det_trace_formula(pair));
    Json conv = Json::array();
    for (const auto& r : det_trace_crosscheck(pair))
        conv.push_back(to_json(r));
    j["conventions"] = std::move(conv);
    return j;
}

// verify

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyArgs {
    bool disc = false;
    bool orthogonal = false;
};

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double max_coeff_deviation(const UniPoly& a, const UniPoly& b)
{
    const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    double worst = 0.0;
    for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k)
        worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return scale > 0.0 ? worst / scale : worst;
}

Json cmd_verify(const Tensor& t, const VerifyArgs& va, const RunConfig& rc, bool& all_pass)
{
    if (va.disc)
        require_symmetric(t);
    const SpectraConfig cfg = rc.spectra();
    std::vector<Check> checks;

    const EigenReport rep = eigenpairs(t, cfg);
    const long long expected = expected_eigen_count(t.order(), t.dim());
    const int classes = static_cast<int>(rep.classes.size());
    if (!rep.singular) {
        checks.push_back({"count_formula", classes == expected && rep.path_failures == 0,
                          std::to_string(classes) + " classes, expected " + std::to_string(expected) + ", " +
                              std::to_string(rep.path_failures) + " path failures"});
        checks.push_back({"e_pair_exists", rep.count(EigenKind::e_pair) >= 1,
                          std::to_string(rep.count(EigenKind::e_pair)) + " E-pair classes"});
    } else {
        checks.push_back({"zero_eigenvalue_class", rep.count(EigenKind::zero) >= 1,
                          std::to_string(rep.count(EigenKind::zero)) + " zero-eigenvalue classes, |Det|/scale " +
                              sci(std::abs(rep.det) / rep.det_scale)});
    }

    const CharPoly chi = echar_poly(t, cfg);
    {
        const Complex target = t.order() % 2 == 1 ? rep.det * rep.det : rep.det;
        const Complex c0 = chi.poly.coeff(0);
        if (rep.singular) {
            const double rel = std::abs(c0) / std::max(1.0, chi.poly.max_abs_coeff());
            checks.push_back({"constant_term", rel <= 1e-6, "|chi(0)| / max|c_k| " + sci(rel) + " (Det vanishes)"});
        } else {
            const double dev = std::abs(c0 - target) / std::abs(target);
            checks.push_back({"constant_term", dev <= 1e-6,
                              "chi(0) vs " + std::string(t.order() % 2 == 1 ? "Det^2" : "Det") + ": " + sci(dev)});
        }
    }

    {
        double worst = 0.0;
        for (const auto& c : rep.classes)
            worst = std::max(worst, c.residual);
        checks.push_back({"residuals", worst <= rc.tol_residual, "max residual " + sci(worst)});
    }

    checks.push_back({"isotropy_audit", rep.count(EigenKind::isotropic) == 0,
                      std::to_string(rep.count(EigenKind::isotropic)) + " isotropic classes"});

    if (va.orthogonal) {
        const CMatrix g = random_orthogonal(t.dim(), rc.seed);
        const CharPoly chi2 = echar_poly(mode_transform_all(t, g), cfg);
        const double dev = max_coeff_deviation(chi.poly, chi2.poly);
        checks.push_back({"orthogonal_invariance", dev <= 1e-6, "max coefficient deviation " + sci(dev)});
    }

    Json disc;
    if (va.disc) {
        const DiscriminantReport dr = discriminant_report(t, cfg, rc.samples);
        const Complex c = dr.expected_constant;
        double dev = 0.0;
        for (std::size_t i = 0; i < dr.direct.size(); ++i) {
            const Complex scaled = c * dr.closed[i];
            dev = std::max(dev, std::abs(dr.direct[i] - scaled) / std::max(std::abs(dr.direct[i]), std::abs(scaled)));
        }
        checks.push_back({"discriminant_factorization", dev <= 1e-6,
                          "direct vs " + sci(c.real()) + " * closed form: " + sci(dev) +
                              " (unscaled deviation " + sci(dr.max_rel_deviation) + ")"});
        disc = to_json(dr);
    }

    all_pass = true;
    Json jc = Json::array();
    for (const auto& c : checks) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all_pass = all_pass && c.pass;
        jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    Json j;
    j["pass"] = all_pass;
    j["checks"] = std::move(jc);
    j["eigen"] = to_json(rep);
    j["charpoly"] = to_json(chi);
    if (va.disc)
        j["discriminant"] = std::move(disc);
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral computations for complex tensors (eigenvectors, E-characteristic polynomial, determinant)"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--tol-residual", rc.tol_residual, "Residual bound used by verify")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-singular", rc.tol_singular, "Relative |Det| threshold for singularity")
        ->check(CLI::PositiveNumber);
    app.add_option("--samples", rc.samples, "Minimum lambda samples for the characteristic polynomial")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", rc.seed, "Seed for all random choices");
    app.add_option("--parallel", rc.parallel, "Track homotopy paths in parallel")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("-o,--out", rc.out, "Write JSON here instead of stdout");
    app.fallthrough();

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate a tensor");
    gen->add_option("kind", ga.kind, "random | symmetric | diagonal | singular")
        ->required()
        ->check(CLI::IsMember({"random", "symmetric", "diagonal", "singular"}));
    gen->add_option("--order", ga.order, "Tensor order m (>= 3)")->required();
    gen->add_option("--dim", ga.dim, "Dimension n+1 (>= 2)")->required();
    gen->add_option("--values", ga.values, "Comma separated diagonal entries");

    std::string input;
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Tensor JSON file")->required(); };
    auto* det = app.add_subcommand("det", "Determinant (resultant of T x^{m-1})");
    auto* charpoly = app.add_subcommand("charpoly", "E-characteristic polynomial");
    auto* eigen = app.add_subcommand("eigen", "Eigenvector classes and E-eigenvalues");
    auto* disc = app.add_subcommand("disc-check", "Compare both discriminant routes (symmetric tensors)");
    auto* inv = app.add_subcommand("invariants", "Trace formula audit for order-3 dimension-2 tensors");
    auto* verify = app.add_subcommand("verify", "Run every applicable property check");
    for (auto* sub : {det, charpoly, eigen, disc, inv, verify})
        add_input(sub);
    VerifyArgs va;
    verify->add_flag("--disc", va.disc, "Include the discriminant factorization (symmetric tensors)");
    verify->add_flag("--orthogonal", va.orthogonal, "Include the orthogonal invariance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            emit(rc, cmd_gen(ga, rc));
            return 0;
        }
        const Tensor t = read_tensor_file(input);
        if (det->parsed())
            emit(rc, cmd_det(t, rc));
        else if (charpoly->parsed())
            emit(rc, cmd_charpoly(t, rc));
        else if (eigen->parsed())
            emit(rc, cmd_eigen(t, rc));
        else if (disc->parsed())
            emit(rc, cmd_disc_check(t, rc));
        else if (inv->parsed())
            emit(rc, cmd_invariants(t, rc));
        else if (verify->parsed()) {
            bool ok = false;
            emit(rc, cmd_verify(t, va, rc, ok));
            return ok ? 0 : kExitCompute;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::domain_error& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kExitCompute;
    }
}
