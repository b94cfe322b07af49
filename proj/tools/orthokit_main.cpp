#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthokit/column_orth.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/io.hpp"
#include "orthokit/normal_pairs.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/range_orth.hpp"
#include "orthokit/rank1.hpp"
#include "orthokit/selftest.hpp"

namespace {

using namespace orthokit;
using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitOpen = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct Options {
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int radii = 32;
    int angles = 64;
    int trials = 1000;
    std::string out;
    std::string format = "json";
    bool row = false;

    ToleranceConfig cfg() const {
        ToleranceConfig c;
        c.rel_tol = tol;
        c.abs_tol = tol * 1e-2;
        c.rng_seed = seed;
        return c;
    }
    GridSpec grid() const {
        GridSpec g = GridSpec::defaults();
        if (radii != 32) {
            g.radii.clear();
            const double lo = std::log(1e-3), hi = std::log(10.0);
            for (int i = 0; i < radii; ++i)
                g.radii.push_back(std::exp(lo + (hi - lo) * i / std::max(radii - 1, 1)));
        }
        g.angles_per_radius = angles;
        return g;
    }
};

ordered_json report_header(const std::string& command, const Options& opt) {
    ordered_json j;
    j["tool"] = "orthokit";
    j["command"] = command;
    j["seed"] = opt.seed;
    j["tol"] = opt.tol;
    return j;
}

void emit(const ordered_json& j, const Options& opt) {
    const std::string text = j.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw OrthokitError("cannot write '" + opt.out + "'");
        f << text;
    }
}

int status_exit(OrthoStatus s) {
    switch (s) {
        case OrthoStatus::CertifiedOrthogonal: return kExitYes;
        case OrthoStatus::CertifiedNotOrthogonal: return kExitNo;
        default: return kExitOpen;
    }
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--tol", opt.tol, "relative tolerance (absolute = tol / 100)");
    cmd->add_option("--seed", opt.seed, "seed for randomized stages");
    cmd->add_option("--out", opt.out, "write the report here instead of stdout");
}

int run(int argc, char** argv) {
    CLI::App app{"Verification toolkit for operator orthogonality"};
    app.require_subcommand(1);
    Options opt;

    std::string path_a, path_b;
    std::vector<std::string> member_paths;
    std::string family;
    bool list_families_flag = false;

    auto* pyth = app.add_subcommand("check-pythagoras", "decide Pythagoras orthogonality");
    pyth->add_option("a", path_a, "matrix A (JSON)")->required();
    pyth->add_option("b", path_b, "matrix B (JSON)")->required();
    pyth->add_option("--radii", opt.radii, "radius count of the lambda grid");
    pyth->add_option("--angles", opt.angles, "angles per radius");
    add_common(pyth, opt);

    auto* col = app.add_subcommand("check-column", "decide column orthonormality of a family");
    col->add_option("members", member_paths, "member matrices (JSON)")->required();
    col->add_flag("--row", opt.row, "check rows instead (adjoint the inputs)");
    col->add_option("--trials", opt.trials, "coefficient identity trials");
    add_common(col, opt);

    auto* rng_cmd = app.add_subcommand("check-range", "decide range orthogonality A*B = 0");
    rng_cmd->add_option("a", path_a)->required();
    rng_cmd->add_option("b", path_b)->required();
    rng_cmd->add_option("--trials", opt.trials, "metric inequality trials");
    add_common(rng_cmd, opt);

    auto* nrm = app.add_subcommand("check-normal", "decide a commuting normal pair");
    nrm->add_option("a", path_a)->required();
    nrm->add_option("b", path_b)->required();
    add_common(nrm, opt);

    auto* rk1 = app.add_subcommand("check-rank1", "certificate against a rank-1 projection");
    rk1->add_option("a", path_a)->required();
    rk1->add_option("b", path_b)->required();
    add_common(rk1, opt);

    auto* gen = app.add_subcommand("gen", "generate a named example pair");
    gen->add_option("family", family, "family name (see --list)");
    gen->add_flag("--list", list_families_flag, "list family names");
    std::vector<std::string> params;
    gen->add_option("--param", params, "family parameter key=value");
    add_common(gen, opt);

    auto* sweep = app.add_subcommand("sweep", "defect profile CSV over the lambda grid");
    sweep->add_option("a", path_a)->required();
    sweep->add_option("b", path_b)->required();
    sweep->add_option("--radii", opt.radii);
    sweep->add_option("--angles", opt.angles);
    sweep->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(sweep, opt);

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    (void)self;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    auto load = [&](const std::string& path) { return load_matrix(path); };

    if (pyth->parsed()) {
        const ComplexMatrix a = load(path_a), b = load(path_b);
        OrthoQuery q{a, b, opt.cfg(), opt.grid()};
        const OrthoVerdict v = check_pythagoras(q);
        ordered_json j = report_header("check-pythagoras", opt);
        j["verdict"] = verdict_to_json(v);
        emit(j, opt);
        return status_exit(v.status);
    }
    if (col->parsed()) {
        ColumnFamily fam;
        fam.cfg = opt.cfg();
        for (const auto& p : member_paths) {
            ComplexMatrix m = load(p);
            fam.members.push_back(opt.row ? m.adjoint() : std::move(m));
        }
        const ColumnReport rep = check_column_orthonormal(fam);
        const CoefficientIdentityResult ident = coefficient_identity_test(fam, 2, opt.trials);
        ordered_json j = report_header("check-column", opt);
        j["status"] = to_string(rep.status);
        j["row_norm"] = rep.row_norm;
        j["common_unit_dim"] = rep.common_unit_dim;
        j["identity_worst_rel_err"] = ident.worst_rel_err;
        emit(j, opt);
        return status_exit(rep.status);
    }
    if (rng_cmd->parsed()) {
        const ComplexMatrix a = load(path_a), b = load(path_b);
        const bool orth = check_range_orthogonal(a, b, opt.cfg());
        RangeOrthQuery q{a, b, opt.trials, opt.cfg()};
        const MetricInequalityResult metric = metric_inequality_test(q);
        ordered_json j = report_header("check-range", opt);
        j["range_orthogonal"] = orth;
        j["metric_all_hold"] = metric.all_hold;
        j["metric_worst_slack"] = metric.worst_slack;
        emit(j, opt);
        return orth ? kExitYes : kExitNo;
    }
    if (nrm->parsed()) {
        const ComplexMatrix a = load(path_a), b = load(path_b);
        const OrthoVerdict v = check_normal_pair(a, b, opt.cfg());
        ordered_json j = report_header("check-normal", opt);
        j["verdict"] = verdict_to_json(v);
        emit(j, opt);
        return status_exit(v.status);
    }
    if (rk1->parsed()) {
        const ComplexMatrix a = load(path_a), b = load(path_b);
        const OrthoVerdict v = rank1_certify(a, b, opt.cfg());
        ordered_json j = report_header("check-rank1", opt);
        j["verdict"] = verdict_to_json(v);
        emit(j, opt);
        return status_exit(v.status);
    }
    if (gen->parsed()) {
        if (list_families_flag) {
            for (const auto& n : family_names()) std::cout << n << "\n";
            return kExitYes;
        }
        if (family.empty()) {
            std::cerr << "gen: a family name or --list is required\n";
            return kExitUsage;
        }
        FamilySpec spec;
        spec.name = family;
        for (const auto& kv : params) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                std::cerr << "gen: --param expects key=value, got '" << kv << "'\n";
                return kExitUsage;
            }
            spec.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
        const MatrixPair p = generate(spec);
        if (!opt.out.empty()) {
            std::filesystem::create_directories(opt.out);
            save_matrix((std::filesystem::path(opt.out) / "A.json").string(), p.a);
            save_matrix((std::filesystem::path(opt.out) / "B.json").string(), p.b);
        } else {
            ordered_json j = report_header("gen", opt);
            j["family"] = family;
            j["A"] = matrix_to_json(p.a);
            j["B"] = matrix_to_json(p.b);
            std::cout << j.dump(2) << "\n";
        }
        return kExitYes;
    }
    if (sweep->parsed()) {
        const ComplexMatrix a = load(path_a), b = load(path_b);
        const NormalizedPair np = normalize_pair(a, b);
        const DefectProfile prof = defect_profile(np.a, np.b, opt.grid());
        if (opt.format == "csv") {
            if (opt.out.empty()) {
                write_profile_csv(std::cout, prof);
            } else {
                std::ofstream f(opt.out);
                if (!f) throw OrthokitError("cannot write '" + opt.out + "'");
                write_profile_csv(f, prof);
            }
        } else {
            ordered_json j = report_header("sweep", opt);
            j["min_defect"] = prof.min_defect;
            j["max_abs_defect"] = prof.max_abs_defect;
            j["samples"] = prof.samples.size();
            emit(j, opt);
        }
        return kExitYes;
    }
    return print_acceptance(std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParamConstraintViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotNormal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOpen;
    } catch (const NotCommuting& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOpen;
    } catch (const OrthokitError& e) {
        // Covers unreadable/unparsable inputs and domain preconditions.
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    }
}
