#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "kron/json_io.hpp"
#include "kron/kronecker.hpp"
#include "kron/reduced_kronecker.hpp"
#include "kron/stability_bounds.hpp"
#include "kron/verify.hpp"

namespace kron::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string out_file;
    std::array<std::string, 3> shapes;
    std::string method = "stable";
    std::string suite = "all";
    int verify_max_weight = -1;
};

std::vector<Partition> parse_all(const Options& o, std::size_t count)
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i < count; ++i) {
        try {
            out.push_back(parse_partition(o.shapes[i]));
        } catch (const InvalidPartition& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

void apply_env_cap()
{
    const char* env = std::getenv("KRON_MAX_WEIGHT");
    if (!env)
        return;
    int w = 0;
    std::istringstream is(env);
    if (!(is >> w) || !is.eof() || w < 0)
        throw UsageError(std::string("KRON_MAX_WEIGHT must be a non-negative integer, got '") + env + "'");
    set_max_weight(w);
}

// A command writes its text or JSON result and returns an exit code.
using Command = std::function<int(const Options&, std::ostream&)>;

void emit(const Options& o, std::ostream& os, const nlohmann::json& j, const std::string& text)
{
    if (o.json)
        os << j.dump(2) << '\n';
    else
        os << text << '\n';
}

int cmd_product(const Options& o, std::ostream& os)
{
    const auto p = parse_all(o, 2);
    if (p[0].weight() != p[1].weight())
        throw UsageError("product: |MU| and |NU| differ");
    const SchurExpansion f = kronecker_product(p[0], p[1]);
    emit(o, os, {{"mu", to_json(p[0])}, {"nu", to_json(p[1])}, {"product", to_json(f)}}, f.to_string());
    return kOk;
}

int cmd_coeff(const Options& o, std::ostream& os)
{
    const auto p = parse_all(o, 3);
    const Integer g = kronecker_coefficient(p[0], p[1], p[2]);
    emit(o, os, {{"lambda", to_json(p[0])}, {"mu", to_json(p[1])}, {"nu", to_json(p[2])}, {"coeff", g}},
         std::to_string(g));
    return kOk;
}

int cmd_reduced(const Options& o, std::ostream& os)
{
    const auto p = parse_all(o, 3);
    const Integer g = o.method == "littlewood" ? reduced_coefficient_littlewood(p[0], p[1], p[2])
                                                : reduced_coefficient(p[0], p[1], p[2]);
    emit(o, os,
         {{"alpha", to_json(p[0])},
          {"beta", to_json(p[1])},
          {"gamma", to_json(p[2])},
          {"method", o.method},
          {"reduced", g}},
         std::to_string(g));
    return kOk;
}

int cmd_support(const Options& o, std::ostream& os)
{
    const auto p = parse_all(o, 2);
    const SupportTable s = murnaghan_expansion(p[0], p[1]);
    std::ostringstream text;
    for (const auto& [gamma, c] : s.coefficients())
        text << format_partition(gamma) << ' ' << c << '\n';
    text << "terms=" << s.size() << " min_weight=" << s.min_weight() << " max_weight=" << s.max_weight()
         << " max_first_row=" << s.max_part(1);
    emit(o, os, to_json(s), text.str());
    return kOk;
}

int cmd_bounds(const Options& o, std::ostream& os)
{
    const auto p = parse_all(o, 3);
    const BoundReport r = compare_bounds(p[0], p[1], p[2]);
    std::ostringstream text;
    text << "reduced=" << r.reduced_value << " stab=" << r.stab_empirical << " N1=" << r.n1 << " N2=" << r.n2
         << " NB=" << r.nb << " NV=" << r.nv;
    for (const auto& v : r.violations())
        text << "\nviolation: " << v;
    emit(o, os, to_json(r), text.str());
    return r.consistent() ? kOk : kVerifyFailed;
}

int cmd_stab(const Options& o, std::ostream& os)
{
    const auto p = parse_all(o, 2);
    const int formula = stab_product(p[0], p[1]);
    const int empirical = stab_product_empirical(p[0], p[1]);
    emit(o, os, {{"alpha", to_json(p[0])}, {"beta", to_json(p[1])}, {"formula", formula}, {"empirical", empirical}},
         "formula=" + std::to_string(formula) + " empirical=" + std::to_string(empirical));
    return formula == empirical ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o, std::ostream& os)
{
    verify::Limits limits;
    if (o.verify_max_weight >= 0)
        limits = limits.clamped(o.verify_max_weight);
    const auto results = verify::run_suite(o.suite, limits);
    bool ok = true;
    std::ostringstream text;
    auto j = nlohmann::json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        j.push_back(to_json(r));
        text << (r.passed ? "PASS " : "FAIL ") << r.key << ": " << r.description << " [" << r.detail << "]\n";
    }
    std::size_t passed = 0;
    for (const auto& r : results)
        passed += r.passed;
    text << passed << "/" << results.size() << " passed";
    emit(o, os, {{"suite", o.suite}, {"passed", ok}, {"checks", j}}, text.str());
    return ok ? kOk : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kronecker and reduced Kronecker coefficients", "kron"};
    app.require_subcommand(1);
    Options o;
    Command chosen;

    auto add = [&](const std::string& name, const std::string& help, const std::vector<std::string>& shape_names,
                   Command cmd) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", o.json, "Print JSON instead of text");
        sub->add_option("--out", o.out_file, "Write output to FILE")->type_name("FILE");
        for (std::size_t i = 0; i < shape_names.size(); ++i)
            sub->add_option(shape_names[i], o.shapes[i], "Partition, e.g. 4,3,2 or [4,3,2] or []")
                ->required()
                ->allow_extra_args(false);
        sub->callback([&chosen, cmd] { chosen = cmd; });
        return sub;
    };

    add("product", "Kronecker product s_MU * s_NU", {"MU", "NU"}, cmd_product);
    add("coeff", "Kronecker coefficient g^LAMBDA_{MU,NU}", {"LAMBDA", "MU", "NU"}, cmd_coeff);
    add("reduced", "Reduced Kronecker coefficient", {"ALPHA", "BETA", "GAMMA"}, cmd_reduced)
        ->add_option("--method", o.method, "stable or littlewood")
        ->check(CLI::IsMember({"stable", "littlewood"}));
    add("support", "Stable expansion table of s_ALPHA[n] * s_BETA[n]", {"ALPHA", "BETA"}, cmd_support);
    add("bounds", "Stabilization bounds for a triple", {"ALPHA", "BETA", "GAMMA"}, cmd_bounds);
    add("stab", "stab(ALPHA, BETA) by closed form and from the support", {"ALPHA", "BETA"}, cmd_stab);
    CLI::App* v = add("verify", "Run the verification suites", {}, cmd_verify);
    v->add_option("--suite", o.suite, "intro, bounds, theorems or all")
        ->check(CLI::IsMember(verify::suite_names()));
    v->add_option("--max-weight", o.verify_max_weight, "Cap the exhaustive ranges at W")
        ->type_name("W")
        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "Run with --help for usage.\n";
        return kUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_file.empty()) {
        file.open(o.out_file);
        if (!file) {
            err << "cannot open " << o.out_file << " for writing\n";
            return kUsage;
        }
        sink = &file;
    }

    try {
        apply_env_cap();
        return chosen(o, *sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << " (raise KRON_MAX_WEIGHT to allow it)\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kVerifyFailed;
    }
}

} // namespace kron::cli
