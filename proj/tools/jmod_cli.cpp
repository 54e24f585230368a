#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jmod/emit.hpp"
#include "jmod/geometric.hpp"
#include "jmod/jacquet.hpp"
#include "jmod/parse.hpp"
#include "jmod/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct ExprInput {
    std::string text;
    std::string file;

    // Reads and parses the expression; exits with code 2 on any failure.
    jmod::Expression load() const {
        std::string src = text;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot read file '" << file << "'\n";
                std::exit(kExitUsage);
            }
            std::stringstream ss;
            ss << in.rdbuf();
            src = ss.str();
        }
        if (src.empty()) {
            std::cerr << "error: no expression given (positional argument or --file)\n";
            std::exit(kExitUsage);
        }
        auto result = jmod::parse(src);
        if (auto* diag = std::get_if<jmod::Diagnostic>(&result)) {
            std::cerr << "parse error [" << diag->code << "] at " << diag->line << ":"
                      << diag->column << ": " << diag->message << "\n";
            std::exit(kExitUsage);
        }
        return std::get<jmod::Expression>(result);
    }
};

void add_expr_options(CLI::App* cmd, ExprInput& input) {
    cmd->add_option("expression", input.text, "expression text");
    cmd->add_option("--file", input.file, "read the expression from a file");
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            std::cerr << "error: malformed " << what << " list '" << text << "'\n";
            std::exit(kExitUsage);
        }
    }
    if (out.empty()) {
        std::cerr << "error: empty " << what << " list\n";
        std::exit(kExitUsage);
    }
    return out;
}

jmod::SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read config '" << path << "'\n";
        std::exit(kExitUsage);
    }
    jmod::SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                std::cerr << "error: bad config line " << lineno << "\n";
                std::exit(kExitUsage);
            }
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "max_b") cfg.max_b = std::stoi(val);
            else if (key == "max_r") cfg.max_r = std::stoi(val);
            else if (key == "dims") cfg.dims = parse_int_list(val, "dims");
            else if (key == "lines") cfg.lines = std::stoi(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "samples") cfg.samples = std::stoll(val);
            else if (key == "require_m_irr") cfg.require_m_irr = (val == "true" || val == "1");
            else {
                std::cerr << "error: unknown config key '" << key << "'\n";
                std::exit(kExitUsage);
            }
        } catch (const std::exception&) {
            std::cerr << "error: bad value for config key '" << key << "'\n";
            std::exit(kExitUsage);
        }
    }
    if (cfg.max_b < 0 || cfg.max_r < 1 || cfg.lines < 1 || cfg.dims.empty()) {
        std::cerr << "error: config bounds out of range\n";
        std::exit(kExitUsage);
    }
    return cfg;
}

void emit(const std::string& format, const std::string& text,
          const nlohmann::json& j) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacquet modules of products of Zelevinsky segment representations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    ExprInput check_in;
    auto* check = app.add_subcommand("check", "irreducibility and nesting checks");
    add_expr_options(check, check_in);

    ExprInput jac_in;
    int jac_l = -1;
    std::string jac_levi;
    auto* jacquet = app.add_subcommand("jacquet", "compute a Jacquet module");
    add_expr_options(jacquet, jac_in);
    jacquet->add_option("--l", jac_l, "maximal-Levi level");
    jacquet->add_option("--levi", jac_levi, "comma-separated composition");

    ExprInput mf_in;
    int mf_l = -1;
    bool mf_all = false;
    auto* multfree = app.add_subcommand("multfree", "multiplicity-freeness check");
    add_expr_options(multfree, mf_in);
    multfree->add_option("--l", mf_l, "single level to check");
    multfree->add_flag("--all-l", mf_all, "check every valid level");

    std::string sweep_config, sweep_mode = "theorem1";
    auto* sweep = app.add_subcommand("sweep", "run a verification sweep");
    sweep->add_option("--config", sweep_config, "flat key=value config file")
        ->required();
    sweep->add_option("--mode", sweep_mode, "sweep mode")
        ->check(CLI::IsMember({"theorem1", "consistency"}));

    std::string mat_rows, mat_cols;
    auto* matrices = app.add_subcommand("matrices", "enumerate margin matrices");
    matrices->add_option("--rows", mat_rows, "row sums")->required();
    matrices->add_option("--cols", mat_cols, "column sums")->required();

    ExprInput or_in;
    int or_l = -1;
    auto* oracle = app.add_subcommand("oracle", "cross-check against the cuspidal oracle");
    add_expr_options(oracle, or_in);
    oracle->add_option("--l", or_l, "maximal-Levi level")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) {
            jmod::Multisegment ms = check_in.load().multisegment();
            bool irr = jmod::is_irreducible(ms);
            bool mirr = jmod::in_m_irr(ms);
            std::ostringstream os;
            os << "irreducible: " << (irr ? "true" : "false") << "\n"
               << "m_irr: " << (mirr ? "true" : "false") << "\n";
            emit(format, os.str(), {{"irreducible", irr}, {"m_irr", mirr}});
            return kExitOk;
        }
        if (jacquet->parsed()) {
            jmod::Multisegment ms = jac_in.load().multisegment();
            if ((jac_l < 0) == jac_levi.empty()) {
                std::cerr << "error: give exactly one of --l and --levi\n";
                return kExitUsage;
            }
            if (!jac_levi.empty()) {
                jmod::Composition gamma(parse_int_list(jac_levi, "levi"));
                jmod::LeviSum sum = jmod::jacquet_levi(ms, gamma);
                emit(format, jmod::levi_sum_text(sum), jmod::levi_sum_json(sum));
            } else {
                jmod::FormalSum sum = jmod::jacquet_max_levi(ms, jac_l);
                emit(format, jmod::formal_sum_text(sum), jmod::formal_sum_json(sum));
            }
            return kExitOk;
        }
        if (multfree->parsed()) {
            jmod::Multisegment ms = mf_in.load().multisegment();
            int n = ms.total_size();
            std::vector<int> levels;
            if (mf_l >= 0)
                levels.push_back(mf_l);
            else
                for (int l = 1; l <= n - 1; ++l) levels.push_back(l);
            jmod::Verdict verdict;
            for (int l : levels) {
                ++verdict.checked;
                auto res = jmod::check_mult_free(ms, l);
                if (!res.mult_free) verdict.violations.push_back(*res.witness);
            }
            emit(format, jmod::verdict_text(verdict), jmod::verdict_json(verdict));
            return verdict.ok() ? kExitOk : kExitFalsified;
        }
        if (sweep->parsed()) {
            jmod::SweepConfig cfg = load_sweep_config(sweep_config);
            jmod::Verdict verdict = sweep_mode == "theorem1"
                                        ? jmod::sweep_theorem1(cfg)
                                        : jmod::sweep_consistency(cfg);
            emit(format, jmod::verdict_text(verdict), jmod::verdict_json(verdict));
            return verdict.ok() ? kExitOk : kExitFalsified;
        }
        if (matrices->parsed()) {
            jmod::Composition beta(parse_int_list(mat_rows, "rows"));
            jmod::Composition gamma(parse_int_list(mat_cols, "cols"));
            auto mats = jmod::enumerate_split_matrices(beta, gamma);
            std::ostringstream os;
            os << "count: " << mats.size() << "\n";
            for (const auto& m : mats) {
                for (const auto& row : m.entries) {
                    for (std::size_t j = 0; j < row.size(); ++j)
                        os << (j ? " " : "") << row[j];
                    os << "\n";
                }
                os << "\n";
            }
            emit(format, os.str(), jmod::matrices_json(mats));
            return kExitOk;
        }
        if (oracle->parsed()) {
            jmod::Multisegment ms = or_in.load().multisegment();
            jmod::FormalSum sum = jmod::jacquet_max_levi(ms, or_l);
            auto failures = jmod::check_sum_invariants(ms, or_l, sum);
            std::ostringstream os;
            os << "terms: " << sum.distinct_terms() << "\n"
               << "total multiplicity: " << sum.total_multiplicity() << "\n"
               << "invariant failures: " << failures.size() << "\n";
            for (const auto& f : failures) os << "  " << f << "\n";
            emit(format, os.str(),
                 {{"terms", sum.distinct_terms()},
                  {"total_multiplicity", sum.total_multiplicity()},
                  {"invariant_failures", failures}});
            return failures.empty() ? kExitOk : kExitFalsified;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
