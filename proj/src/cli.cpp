#include "orbitkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "orbitkit/arthur.hpp"
#include "orbitkit/collapse.hpp"
#include "orbitkit/conjecture.hpp"
#include "orbitkit/duality.hpp"
#include "orbitkit/induction.hpp"
#include "orbitkit/partition.hpp"

namespace orbitkit::cli {

namespace {

using nlohmann::json;

// key=value lines, '#' comments; keys look like "keylemma.max-size"
std::map<std::string, std::string> load_config() {
    std::map<std::string, std::string> config;
    const char* path = std::getenv("ORBITKIT_CONFIG");
    if (!path)
        return config;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty())
            config[key] = value;
    }
    return config;
}

void apply_config_int(const std::map<std::string, std::string>& config,
                      const std::string& key, int& target) {
    auto it = config.find(key);
    if (it == config.end())
        return;
    try {
        target = std::stoi(it->second);
    } catch (const std::exception&) {
        throw Error("config value for " + key + " is not an integer: " + it->second);
    }
}

json sweep_to_json(const SweepSummary& summary) {
    json j;
    j["cases_checked"] = summary.cases_checked;
    j["counterexamples"] = json::array();
    for (const SweepCounterexample& ce : summary.counterexamples) {
        j["counterexamples"].push_back({{"X", std::string(1, type_letter(ce.x))},
                                        {"p", to_string(ce.p)},
                                        {"b", ce.b},
                                        {"d", ce.d},
                                        {"lhs", to_string(ce.lhs)},
                                        {"rhs", to_string(ce.rhs)},
                                        {"kind", ce.kind}});
    }
    return j;
}

struct Options {
    bool json_output = false;
    std::string type_letter_arg = "A";
    bool oracle = false;
    int jobs = 1;
    int max_size = 14;
    int max_b = 5;
    int max_d = 3;
    int d_a = 1;
    int expected_dim = -1;
    bool show_p = false;
    bool show_p_a = false;
    bool show_hat = false;
    bool show_phi = false;
    std::string first_arg;
    std::string second_arg;
    std::vector<std::string> candidates;
};

ClassicalType parse_type(const std::string& s) {
    if (s.size() != 1)
        throw SyntaxError("type must be one of A, B, C, D", 0);
    return type_from_letter(s[0]);
}

int run_inner(CLI::App& app, Options& opt, std::ostream& out) {
    auto emit_partition = [&](const Partition& p) {
        if (opt.json_output)
            out << json{{"result", to_string(p)}}.dump() << '\n';
        else
            out << to_string(p) << '\n';
        return 0;
    };

    if (app.got_subcommand("transpose")) {
        return emit_partition(transpose(parse_partition(opt.first_arg)));
    }
    if (app.got_subcommand("collapse")) {
        Partition p = parse_partition(opt.first_arg);
        ClassicalType x = parse_type(opt.type_letter_arg);
        return emit_partition(opt.oracle ? collapse_oracle(p, x) : collapse(p, x));
    }
    if (app.got_subcommand("dbv")) {
        Partition p = parse_partition(opt.first_arg);
        return emit_partition(dbv(p, parse_type(opt.type_letter_arg)));
    }
    if (app.got_subcommand("dominates")) {
        bool result =
            dominates(parse_partition(opt.first_arg), parse_partition(opt.second_arg));
        if (opt.json_output)
            out << json{{"dominates", result}}.dump() << '\n';
        else
            out << (result ? "true" : "false") << '\n';
        return 0;
    }
    if (app.got_subcommand("induce")) {
        ClassicalType x = ClassicalType::A;
        LeviDatum levi = parse_levi(opt.first_arg, x);
        return emit_partition(induce_levi(levi, x));
    }
    if (app.got_subcommand("keylemma")) {
        SweepSummary summary = key_lemma_sweep(opt.max_size, opt.max_b, opt.max_d, opt.jobs);
        if (opt.json_output) {
            out << sweep_to_json(summary).dump() << '\n';
        } else {
            out << summary.counterexamples.size() << " counterexamples / "
                << summary.cases_checked << " cases\n";
            for (const SweepCounterexample& ce : summary.counterexamples)
                out << "  " << ce.kind << " X=" << type_letter(ce.x) << " p=" << to_string(ce.p)
                    << " b=" << ce.b << " d=" << ce.d << " lhs=" << to_string(ce.lhs)
                    << " rhs=" << to_string(ce.rhs) << '\n';
        }
        return summary.counterexamples.empty() ? 0 : 1;
    }
    if (app.got_subcommand("param")) {
        Parameter param = opt.expected_dim >= 0
                              ? parse_parameter(opt.first_arg, opt.expected_dim)
                              : parse_parameter(opt.first_arg);
        json j;
        j["canonical"] = to_string(param);
        j["ambient_dim"] = param.ambient_dim();
        std::ostringstream text;
        text << to_string(param) << '\n';
        if (opt.show_p) {
            Partition p = param.context() == ParamContext::Arthur ? p_of_psi(param)
                                                                  : p_of_phi(param);
            j["p"] = to_string(p);
            text << "p: " << to_string(p) << '\n';
        }
        if (opt.show_p_a) {
            Partition p = p_A_of_phi(param, opt.d_a);
            j["p_A"] = to_string(p);
            text << "p_A: " << to_string(p) << '\n';
        }
        if (opt.show_hat) {
            std::string h = to_string(hat(param));
            j["hat"] = h;
            text << "hat: " << h << '\n';
        }
        if (opt.show_phi) {
            std::string f = to_string(phi_of_psi(param));
            j["phi_psi"] = f;
            text << "phi_psi: " << f << '\n';
        }
        if (opt.json_output)
            out << j.dump() << '\n';
        else
            out << text.str();
        return 0;
    }
    if (app.got_subcommand("check")) {
        Parameter param = parse_parameter(opt.first_arg);
        ClassicalType x = parse_type(opt.type_letter_arg);
        Partition bound = param.context() == ParamContext::Arthur
                              ? bound_from_arthur(param, x)
                              : bound_from_dual_lparam(param, x);
        std::vector<Partition> candidates;
        for (const std::string& text : opt.candidates)
            candidates.push_back(parse_partition(text));
        BoundReport report = check_bound(candidates, bound);
        if (opt.json_output) {
            json j;
            j["bound"] = to_string(report.bound);
            j["all_satisfied"] = report.all_satisfied;
            j["candidates"] = json::array();
            for (const auto& [p, verdict] : report.candidates)
                j["candidates"].push_back(
                    {{"partition", to_string(p)}, {"verdict", verdict_name(verdict)}});
            out << j.dump() << '\n';
        } else {
            out << "bound: " << to_string(report.bound) << '\n';
            for (const auto& [p, verdict] : report.candidates)
                out << "  " << to_string(p) << ": " << verdict_name(verdict) << '\n';
        }
        return report.all_satisfied ? 0 : 1;
    }
    if (app.got_subcommand("examples")) {
        GoldenReport report = reproduce_paper_examples();
        if (opt.json_output) {
            json j;
            j["all_pass"] = report.all_pass;
            j["cases"] = json::array();
            for (const GoldenCase& c : report.cases)
                j["cases"].push_back({{"example_id", c.example_id},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"pass", c.pass}});
            out << j.dump() << '\n';
        } else {
            for (const GoldenCase& c : report.cases) {
                if (c.pass)
                    out << "PASS " << c.example_id << ": " << c.computed << '\n';
                else
                    out << "FAIL " << c.example_id << ": expected " << c.expected
                        << ", computed " << c.computed << '\n';
            }
        }
        return report.all_pass ? 0 : 1;
    }
    throw CLI::CallForHelp();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"partition-level nilpotent-orbit calculator"};
    app.require_subcommand(0, 1);
    Options opt;

    std::map<std::string, std::string> config;
    try {
        config = load_config();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", opt.type_letter_arg, "classical type A, B, C or D")
            ->required();
    };

    CLI::App* transpose_cmd = app.add_subcommand("transpose", "conjugate partition");
    transpose_cmd->add_option("partition", opt.first_arg, "partition, e.g. \"[5,3,1^3]\"")
        ->required();

    CLI::App* collapse_cmd = app.add_subcommand("collapse", "X-collapse of a partition");
    add_type(collapse_cmd);
    collapse_cmd->add_flag("--oracle", opt.oracle, "use the brute-force enumeration");
    collapse_cmd->add_option("partition", opt.first_arg, "partition")->required();

    CLI::App* dbv_cmd = app.add_subcommand("dbv", "Barbasch-Vogan dual of a partition");
    add_type(dbv_cmd);
    dbv_cmd->add_option("partition", opt.first_arg, "partition")->required();

    CLI::App* dom_cmd = app.add_subcommand("dominates", "dominance order test p >= q");
    dom_cmd->add_option("p", opt.first_arg, "left partition")->required();
    dom_cmd->add_option("q", opt.second_arg, "right partition")->required();

    CLI::App* induce_cmd = app.add_subcommand("induce", "induced orbit from a Levi datum");
    induce_cmd
        ->add_option("levi", opt.first_arg, "Levi datum, e.g. \"GL([2,1])*G([4,2,2,2]):C\"")
        ->required();

    CLI::App* keylemma_cmd =
        app.add_subcommand("keylemma", "induction-compatibility verification sweep");
    try {
        apply_config_int(config, "keylemma.max-size", opt.max_size);
        apply_config_int(config, "keylemma.max-b", opt.max_b);
        apply_config_int(config, "keylemma.max-d", opt.max_d);
        apply_config_int(config, "keylemma.jobs", opt.jobs);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    keylemma_cmd->add_option("--max-size", opt.max_size, "largest |p| to sweep");
    keylemma_cmd->add_option("--max-b", opt.max_b, "largest b");
    keylemma_cmd->add_option("--max-d", opt.max_d, "largest d");
    keylemma_cmd->add_option("--jobs", opt.jobs, "worker threads");

    CLI::App* param_cmd = app.add_subcommand("param", "parse and evaluate a parameter");
    param_cmd->add_option("--dim", opt.expected_dim, "required ambient dimension");
    param_cmd->add_option("--d-a", opt.d_a, "division-algebra degree for --p-a");
    param_cmd->add_flag("--p", opt.show_p, "print the associated partition");
    param_cmd->add_flag("--p-a", opt.show_p_a, "print the division-algebra partition");
    param_cmd->add_flag("--hat", opt.show_hat, "print the Deligne/Arthur swap");
    param_cmd->add_flag("--phi", opt.show_phi, "print the associated L-parameter");
    param_cmd->add_option("parameter", opt.first_arg, "parameter text")->required();

    CLI::App* check_cmd =
        app.add_subcommand("check", "compare candidate wavefront partitions to a bound");
    add_type(check_cmd);
    check_cmd->add_option("parameter", opt.first_arg, "parameter text")->required();
    check_cmd->allow_extras(); // candidate partitions follow the parameter

    app.add_subcommand("examples", "run the worked-example suite");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->add_flag("--json", opt.json_output, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        opt.candidates = check_cmd->remaining();
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return run_inner(app, opt, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace orbitkit::cli
