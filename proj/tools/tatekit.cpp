#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tate/expr.hpp"
#include "tate/lambda.hpp"
#include "tate/oracle.hpp"
#include "tate/schur.hpp"
#include "tate/verify.hpp"

using json = nlohmann::json;
using namespace tate;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitBudgetExceeded = 2;
constexpr int kExitVerifyFailed = 3;

json object_json(const GradedTateObject& x) {
    json arr = json::array();
    for (const auto& [k, m] : x.multiplicities())
        arr.push_back({{"a", k.a}, {"w", k.w}, {"mult", m}});
    return arr;
}

json laurent_json(const Laurent& p) {
    json obj = json::object();
    for (const auto& [e, c] : p.coeffs())
        obj[std::to_string(e)] = c.convert_to<long long>();
    return obj;
}

json series_json(const TruncatedSeries& s) {
    json arr = json::array();
    for (int i = 0; i <= s.order(); ++i) arr.push_back(laurent_json(s.coeff(i)));
    return {{"order", s.order()}, {"coefficients", arr}};
}

json tpoly_json(const TPoly& p) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(laurent_json(c));
    return arr;
}

json rep_ring_json(const std::map<Partition, Laurent>& coeffs) {
    json obj = json::object();
    for (const auto& [p, c] : coeffs) obj[p.to_string()] = laurent_json(c);
    return obj;
}

struct Options {
    bool json_output = false;
    std::optional<std::string> file;
};

std::vector<std::string> gather_expressions(const std::string& inline_expr, const Options& opt) {
    if (!opt.file) return {inline_expr};
    std::ifstream in(*opt.file);
    if (!in) throw std::runtime_error("cannot open file: " + *opt.file);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

void emit(const Options& opt, const std::vector<json>& docs,
          const std::vector<std::string>& texts) {
    if (opt.json_output) {
        if (docs.size() == 1) std::cout << docs[0].dump(2) << "\n";
        else std::cout << json(docs).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < texts.size(); ++i) {
            if (texts.size() > 1 && i) std::cout << "\n";
            std::cout << texts[i];
        }
    }
}

std::string classification_text(const Classification& c) {
    auto idx = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("none");
    };
    std::string s;
    s += "d_plus: " + std::to_string(c.d_plus) + "\n";
    s += "d_minus: " + std::to_string(c.d_minus) + "\n";
    s += "evenly_finite: " + std::string(c.evenly_finite ? "true" : "false") + "\n";
    s += "oddly_finite: " + std::string(c.oddly_finite ? "true" : "false") + "\n";
    s += "alt_vanishing_index: " + idx(c.alt_vanishing_index) + "\n";
    s += "sym_vanishing_index: " + idx(c.sym_vanishing_index) + "\n";
    s += "kimura_dimension: " + std::to_string(c.kimura_dimension) + "\n";
    s += "square_vanishing_index: " + std::to_string(c.square_vanishing_index) + "\n";
    return s;
}

json classification_json(const Classification& c) {
    json j;
    j["d_plus"] = c.d_plus;
    j["d_minus"] = c.d_minus;
    j["evenly_finite"] = c.evenly_finite;
    j["oddly_finite"] = c.oddly_finite;
    j["alt_vanishing_index"] = c.alt_vanishing_index ? json(*c.alt_vanishing_index) : json(nullptr);
    j["sym_vanishing_index"] = c.sym_vanishing_index ? json(*c.sym_vanishing_index) : json(nullptr);
    j["kimura_dimension"] = c.kimura_dimension;
    j["square_vanishing_index"] = c.square_vanishing_index;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for weight-graded Tate objects: Schur functors, "
                 "vanishing, K0 classes, lambda-operations and zeta functions"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_output, "emit JSON instead of text");

    std::string expr_text, partition_text;
    int order = 16;
    if (const char* env = std::getenv("TATEKIT_ORDER")) order = std::atoi(env);
    int max_size = 4;
    bool rational = false, reduced = false;
    int budget_dim = 3, budget_size = 4, random_count = 100;
    unsigned seed = 1;

    auto add_file_opt = [&](CLI::App* cmd) {
        cmd->add_option("--file", opt.file,
                        "read expressions from a file, one per line (batch mode)");
    };

    auto* cmd_classify = app.add_subcommand("classify", "finite-dimensionality classification");
    cmd_classify->add_option("expr", expr_text, "object expression");
    add_file_opt(cmd_classify);

    auto* cmd_schur = app.add_subcommand("schur", "evaluate a Schur functor");
    cmd_schur->add_option("lambda", partition_text, "partition, e.g. [2,1]")->required();
    cmd_schur->add_option("expr", expr_text, "object expression");
    add_file_opt(cmd_schur);

    auto* cmd_vanish = app.add_subcommand("vanish-table", "vanishing verdicts for all |lambda| <= N");
    cmd_vanish->add_option("expr", expr_text, "object expression");
    cmd_vanish->add_option("--max", max_size, "maximal partition size")->capture_default_str();
    add_file_opt(cmd_vanish);

    auto* cmd_k0 = app.add_subcommand("k0", "class in K0 = Z[tau,tau^-1]");
    cmd_k0->add_option("expr", expr_text, "object expression");
    add_file_opt(cmd_k0);

    auto* cmd_lambda = app.add_subcommand("lambda", "lambda_t series of the K0 class");
    cmd_lambda->add_option("expr", expr_text, "object expression");
    cmd_lambda->add_option("--order", order, "truncation order")->capture_default_str();
    add_file_opt(cmd_lambda);

    auto* cmd_zeta = app.add_subcommand("zeta", "zeta function of the object");
    cmd_zeta->add_option("expr", expr_text, "object expression");
    cmd_zeta->add_option("--order", order, "truncation order")->capture_default_str();
    cmd_zeta->add_flag("--rational", rational, "emit the rational form u/v");
    cmd_zeta->add_flag("--reduced", reduced, "cancel common factors in the rational form");
    add_file_opt(cmd_zeta);

    auto* cmd_lsigma = app.add_subcommand("lambda-sigma", "representation-ring-valued lambda series");
    cmd_lsigma->add_option("expr", expr_text, "object expression");
    cmd_lsigma->add_option("--order", order, "truncation order")->capture_default_str();
    add_file_opt(cmd_lsigma);

    auto* cmd_verify = app.add_subcommand("verify", "cross-oracle and lambda-ring property suites");
    cmd_verify->add_option("--budget", budget_dim, "maximal object dimension for the oracle grid")
        ->capture_default_str();
    cmd_verify->add_option("--max-size", budget_size, "maximal |lambda| for the oracle grid")
        ->capture_default_str();
    cmd_verify->add_option("--count", random_count, "randomized cases per property")
        ->capture_default_str();
    cmd_verify->add_option("--order", order, "truncation order for series properties")
        ->capture_default_str();
    cmd_verify->add_option("--seed", seed, "random seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<json> docs;
        std::vector<std::string> texts;

        if (cmd_verify->parsed()) {
            OracleBudget budget{budget_dim < 4 ? 4 : budget_dim, budget_size < 5 ? 5 : budget_size};
            VerifyReport triple = verify_triple_agreement({0, 1, 2, 3}, {0, 1, 2}, budget_dim,
                                                          budget_size, budget);
            VerifyReport props = verify_lambda_ring_suite(random_count, 12, seed);
            json j;
            j["triple_agreement"] = {{"cases", triple.cases}, {"failures", triple.failures}};
            j["lambda_ring"] = {{"cases", props.cases}, {"failures", props.failures}};
            std::string t;
            t += "triple_agreement: " + std::to_string(triple.cases) + " cases, " +
                 std::to_string(triple.failures) + " failures\n";
            t += "lambda_ring: " + std::to_string(props.cases) + " cases, " +
                 std::to_string(props.failures) + " failures\n";
            for (const auto& m : triple.messages) t += "FAIL " + m + "\n";
            for (const auto& m : props.messages) t += "FAIL " + m + "\n";
            emit(opt, {j}, {t});
            return (triple.failures || props.failures) ? kExitVerifyFailed : kExitOk;
        }

        for (const std::string& text : gather_expressions(expr_text, opt)) {
            const GradedTateObject x = parse_object(text);
            if (cmd_classify->parsed()) {
                Classification c = classify(x);
                docs.push_back(classification_json(c));
                texts.push_back(classification_text(c));
            } else if (cmd_schur->parsed()) {
                const Partition lambda = parse_partition(partition_text);
                GradedTateObject s = schur_apply(lambda, x);
                docs.push_back({{"result", object_json(s)},
                                {"k0_class", laurent_json(k0_class(s))}});
                texts.push_back("S_" + lambda.to_string() + " = " + s.to_string() +
                                "\nk0_class: " + k0_class(s).to_string() + "\n");
            } else if (cmd_vanish->parsed()) {
                json rows = json::array();
                std::string t;
                for (int n = 1; n <= max_size; ++n)
                    for (const auto& lambda : partitions_of(n)) {
                        bool v = schur_vanishes(lambda, x);
                        rows.push_back({{"lambda", lambda.to_string()}, {"vanishes", v}});
                        t += lambda.to_string() + ": " + (v ? "zero" : "nonzero") + "\n";
                    }
                docs.push_back({{"table", rows}});
                texts.push_back(t);
            } else if (cmd_k0->parsed()) {
                Laurent c = k0_class(x);
                docs.push_back({{"k0_class", laurent_json(c)}});
                texts.push_back(c.to_string() + "\n");
            } else if (cmd_lambda->parsed()) {
                TruncatedSeries s = lambda_t(k0_class(x), order);
                docs.push_back(series_json(s));
                texts.push_back(s.to_string() + "\n");
            } else if (cmd_zeta->parsed()) {
                if (rational || reduced) {
                    RationalSeries r = zeta_rational(x);
                    if (reduced) r = reduce(r);
                    docs.push_back({{"numerator", tpoly_json(r.numerator)},
                                    {"denominator", tpoly_json(r.denominator)}});
                    texts.push_back("numerator: " + tpoly_to_string(r.numerator) +
                                    "\ndenominator: " + tpoly_to_string(r.denominator) + "\n");
                } else {
                    TruncatedSeries s = zeta(k0_class(x), order);
                    docs.push_back(series_json(s));
                    texts.push_back(s.to_string() + "\n");
                }
            } else if (cmd_lsigma->parsed()) {
                RepSeries s = lambda_sigma(x, order);
                json arr = json::array();
                std::string t;
                for (int n = 0; n <= s.order; ++n) {
                    arr.push_back(rep_ring_json(s.coeffs[static_cast<std::size_t>(n)]));
                    t += "t^" + std::to_string(n) + ":";
                    if (s.coeffs[static_cast<std::size_t>(n)].empty()) t += " 0";
                    for (const auto& [p, c] : s.coeffs[static_cast<std::size_t>(n)])
                        t += " (" + c.to_string() + ")*[V_" + p.to_string() + "]";
                    t += "\n";
                }
                docs.push_back({{"order", s.order}, {"coefficients", arr}});
                texts.push_back(t);
            }
        }
        emit(opt, docs, texts);
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    }
}
