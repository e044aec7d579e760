#include "dunkl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "dunkl/identities.hpp"
#include "dunkl/serialize.hpp"

namespace dunkl {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// config file: one "key = value" per line, '#' comments; flags override file
std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file \"" + path + "\"");
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("bad config line \"" + line + "\" (expected key = value)");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

struct SessionOptions {
    std::string group = "z2^2";
    std::string kappa = "1/2,1/2";
    std::string roots;  // explicit family: "a,b ; c,d ; ..." scalar entries
    int eps = -1;
};

GroupSpec group_spec_from(const SessionOptions& opt) {
    if (opt.group == "explicit") {
        if (opt.roots.empty()) throw config_error("group=explicit needs a roots list");
        GroupSpec spec;
        spec.family = GroupSpec::Family::explicit_roots;
        std::istringstream roots_in(opt.roots);
        std::string root_text;
        while (std::getline(roots_in, root_text, ';')) {
            std::vector<Scalar> root;
            std::istringstream entries(root_text);
            std::string entry;
            while (std::getline(entries, entry, ',')) {
                entry = trim(entry);
                if (!entry.empty()) root.push_back(Scalar::from_string(entry));
            }
            if (!root.empty()) spec.roots.push_back(std::move(root));
        }
        if (spec.roots.empty()) throw config_error("empty roots list");
        spec.dim = static_cast<int>(spec.roots[0].size());
        std::istringstream kappas(opt.kappa);
        std::string entry;
        while (std::getline(kappas, entry, ',')) {
            entry = trim(entry);
            if (!entry.empty()) spec.kappas.push_back(Scalar::from_string(entry));
        }
        return spec;
    }
    return parse_group_spec(opt.group, opt.kappa);
}

Setup session_from(const SessionOptions& opt) {
    if (opt.eps != 1 && opt.eps != -1) throw config_error("eps must be +1 or -1");
    return make_setup(group_spec_from(opt), opt.eps);
}

void merge_config(const CLI::App& cmd, const std::map<std::string, std::string>& cfg,
                  SessionOptions& opt) {
    auto take = [&](const char* flag, const char* key, auto& target) {
        auto it = cfg.find(key);
        if (it == cfg.end()) return;
        if (cmd.get_option(flag)->count() > 0) return;  // flags win
        std::istringstream in(it->second);
        in >> target;
        if (in.fail()) throw config_error(std::string("bad config value for ") + key);
    };
    auto take_string = [&](const char* flag, const char* key, std::string& target) {
        auto it = cfg.find(key);
        if (it == cfg.end()) return;
        if (cmd.get_option(flag)->count() > 0) return;
        target = it->second;
    };
    take_string("--group", "group", opt.group);
    take_string("--kappa", "kappa", opt.kappa);
    take_string("--roots", "roots", opt.roots);
    take("--eps", "eps", opt.eps);
}

int report_results(const std::vector<CheckResult>& results, std::ostream& out) {
    int failures = 0;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) out << "  -- " << r.detail;
        out << "\n";
        if (!r.pass) ++failures;
    }
    out << (failures == 0 ? "all " : "") << results.size() - failures << "/" << results.size()
        << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Dunkl-Dirac operator engine: monogenic bases and identity verification"};
    app.require_subcommand(1);

    SessionOptions opt;
    std::string config_path;

    // basis --------------------------------------------------------------
    auto* basis_cmd = app.add_subcommand("basis", "construct a certified monogenic basis");
    int degree = 0;
    std::string kind = "maxwell";
    std::string format = "json";
    std::string out_path;
    int eliminated = 0;
    for (auto* cmd : {basis_cmd}) {
        cmd->add_option("--group", opt.group, "group spec: z2^<d>, b2, or explicit");
        cmd->add_option("--kappa", opt.kappa, "comma-separated exact rational multiplicities");
        cmd->add_option("--roots", opt.roots, "explicit positive roots, ';'-separated vectors");
        cmd->add_option("--eps", opt.eps, "Clifford signature sign, +1 or -1");
        cmd->add_option("--config", config_path, "key = value config file; flags override");
    }
    basis_cmd->add_option("--degree", degree, "homogeneous degree n");
    basis_cmd->add_option("--kind", kind, "maxwell | ck | partial-z");
    basis_cmd->add_option("--format", format, "json | csv | latex");
    basis_cmd->add_option("--elim", eliminated,
                          "maxwell only: coordinate whose index is forced to zero (default d)");
    basis_cmd->add_option("--out", out_path, "write to file instead of stdout");

    // verify ---------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a named identity suite");
    std::string suite = "all";
    int max_degree = 5;
    verify_cmd->add_option("--group", opt.group, "group spec: z2^<d>, b2, or explicit");
    verify_cmd->add_option("--kappa", opt.kappa, "comma-separated exact rational multiplicities");
    verify_cmd->add_option("--roots", opt.roots, "explicit positive roots");
    verify_cmd->add_option("--eps", opt.eps, "Clifford signature sign, +1 or -1");
    verify_cmd->add_option("--config", config_path, "key = value config file; flags override");
    verify_cmd->add_option("--suite", suite,
                           "osp12 | laplace-symmetries | dirac-symmetries | kelvin | "
                           "projections | bases | section5-constants | all");
    verify_cmd->add_option("--max-degree", max_degree, "verify on inputs of degree <= N");

    // dims -----------------------------------------------------------------
    auto* dims_cmd = app.add_subcommand("dims", "monogenic dimension table with rank certificates");
    std::string degrees = "0..4";
    dims_cmd->add_option("--group", opt.group, "group spec");
    dims_cmd->add_option("--kappa", opt.kappa, "multiplicities");
    dims_cmd->add_option("--roots", opt.roots, "explicit positive roots");
    dims_cmd->add_option("--eps", opt.eps, "sign");
    dims_cmd->add_option("--config", config_path, "config file");
    dims_cmd->add_option("--degrees", degrees, "range a..b");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::map<std::string, std::string> cfg;
        if (!config_path.empty()) cfg = parse_config_file(config_path);

        if (app.got_subcommand(basis_cmd)) {
            merge_config(*basis_cmd, cfg, opt);
            if (auto it = cfg.find("degree"); it != cfg.end() && basis_cmd->get_option("--degree")->count() == 0)
                degree = std::stoi(it->second);
            if (auto it = cfg.find("kind"); it != cfg.end() && basis_cmd->get_option("--kind")->count() == 0)
                kind = it->second;
            if (auto it = cfg.find("format"); it != cfg.end() && basis_cmd->get_option("--format")->count() == 0)
                format = it->second;
            const Setup s = session_from(opt);
            BasisSet basis;
            if (kind == "maxwell") {
                basis = maxwell_basis(s, degree, eliminated);
            } else if (kind == "ck") {
                if (!s.group.is_z2()) throw config_error("CK requires Z2^d");
                basis = ck_basis(s, degree);
            } else if (kind == "partial-z") {
                if (!s.group.is_z2()) throw config_error("partial-z requires Z2^d");
                basis = partial_z_basis(s, degree);
            } else {
                throw config_error("unknown basis kind \"" + kind + "\"");
            }
            std::string text;
            if (format == "json")
                text = basis_to_json(s, basis);
            else if (format == "csv")
                text = basis_to_csv(s, basis);
            else if (format == "latex")
                text = basis_to_latex(s, basis);
            else
                throw config_error("unknown format \"" + format + "\"");
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw config_error("cannot write \"" + out_path + "\"");
                file << text;
            }
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            merge_config(*verify_cmd, cfg, opt);
            if (auto it = cfg.find("suite"); it != cfg.end() && verify_cmd->get_option("--suite")->count() == 0)
                suite = it->second;
            if (auto it = cfg.find("max-degree");
                it != cfg.end() && verify_cmd->get_option("--max-degree")->count() == 0)
                max_degree = std::stoi(it->second);
            const Setup s = session_from(opt);
            out << "suite " << suite << " on " << s.group.spec().str() << ", eps "
                << (s.eps > 0 ? "+1" : "-1") << ", inputs up to degree " << max_degree << "\n";
            return report_results(run_suite(s, suite, max_degree), out);
        }

        if (app.got_subcommand(dims_cmd)) {
            merge_config(*dims_cmd, cfg, opt);
            if (auto it = cfg.find("degrees"); it != cfg.end() && dims_cmd->get_option("--degrees")->count() == 0)
                degrees = it->second;
            const Setup s = session_from(opt);
            int lo = 0, hi = 0;
            const auto dots = degrees.find("..");
            if (dots == std::string::npos) {
                lo = hi = std::stoi(degrees);
            } else {
                lo = std::stoi(degrees.substr(0, dots));
                hi = std::stoi(degrees.substr(dots + 2));
            }
            out << "n\tdim M_n\trank\n";
            for (int n = lo; n <= hi; ++n) {
                const BasisSet basis = maxwell_basis(s, n);
                out << n << "\t" << monogenic_dimension(s, n) << "\t" << basis.rank << "\n";
            }
            return 0;
        }
    } catch (const config_error& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dunkl
