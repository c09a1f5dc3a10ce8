// msl: exact Markov/Lagrange spectrum values, string-table verification,
// forced-window search, and Hausdorff-dimension bounds over {1,2}-sequences.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "msl/constants.hpp"
#include "msl/dimension.hpp"
#include "msl/lemmas.hpp"
#include "msl/spectra.hpp"

using namespace msl;
using nlohmann::json;

namespace {

Rational parse_tolerance(const std::string& text) {
    auto e = text.find_first_of("eE");
    if (e == std::string::npos) return rational_from_decimal(text);
    Rational mant = rational_from_decimal(text.substr(0, e));
    long exp = std::stol(text.substr(e + 1));
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp)));
    return exp >= 0 ? mant * Rational(p) : mant / Rational(p);
}

struct Report {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) {
        j["schema"] = 1;
        j["command"] = command;
        j["inputs"] = json::object();
        j["results"] = json::object();
        j["certified"] = true;
    }
    void finish(bool json_out, bool no_meta) {
        if (!no_meta) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            j["elapsed_ms"] = ms;
        }
        if (json_out) std::cout << j.dump(2) << "\n";
    }
};

json entry_to_json(const EntryReport& r) {
    return json{{"index", r.entry.index},
                {"string", r.entry.text},
                {"threshold", truncate_decimal(r.entry.threshold, 12)},
                {"direction", r.entry.lower_bound ? ">" : "<"},
                {"bound", r.bound_decimal},
                {"bound_exact", r.bound.to_string()},
                {"pass", r.pass}};
}

void print_entry(const EntryReport& r) {
    std::cout << "(" << r.entry.index << ") " << (r.pass ? "PASS" : "FAIL") << "  bound "
              << r.bound_decimal << (r.entry.lower_bound ? " > " : " < ")
              << truncate_decimal(r.entry.threshold, 12) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectrum values, mechanical table checks and dimension bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false, no_meta = false;
    app.add_flag("--json", json_out, "emit a JSON report on stdout");
    app.add_flag("--no-meta", no_meta, "omit timing metadata from reports");

    // constants show
    auto* constants_cmd = app.add_subcommand("constants", "named constants");
    auto* show = constants_cmd->add_subcommand("show", "print a named constant");
    std::string const_name = "f";
    int const_digits = 14;
    show->add_option("--name", const_name, "c_inf | C_inf | f | sigma")->required();
    show->add_option("--digits", const_digits, "certified decimal places");

    // spectra
    auto* spectra_cmd = app.add_subcommand("spectra", "two-sided functional values");
    auto* lam = spectra_cmd->add_subcommand("lambda", "lambda at one position");
    std::string seq_text;
    long pos = 0;
    int val_digits = 14;
    lam->add_option("--seq", seq_text, "sequence literal")->required();
    lam->add_option("--pos", pos, "position");
    lam->add_option("--digits", val_digits, "decimal places");
    auto* mar = spectra_cmd->add_subcommand("markov", "supremum with certificate");
    std::string mar_seq;
    int mar_digits = 14;
    mar->add_option("--seq", mar_seq, "sequence literal")->required();
    mar->add_option("--digits", mar_digits, "decimal places");
    auto* lag = spectra_cmd->add_subcommand("lagrange", "value of a purely periodic word");
    std::string lag_word;
    int lag_digits = 14;
    lag->add_option("--word", lag_word, "period in compact notation")->required();
    lag->add_option("--digits", lag_digits, "decimal places");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "mechanical checks");
    auto* lemmas_sub = verify_cmd->add_subcommand("lemmas", "string tables");
    std::string table = "f1";
    lemmas_sub->add_option("--table", table, "f1 | f2")->required();
    auto* window_sub = verify_cmd->add_subcommand("window", "forced-window search");
    std::string preset, constraints_file, range_text = "-16:16", floor_text;
    std::uint64_t guard_opt = 0;
    window_sub->add_option("--preset", preset, "lf4 | lf3p");
    window_sub->add_option("--constraints", constraints_file, "JSON constraint file");
    window_sub->add_option("--range", range_text, "lo:hi (default -16:16)");
    window_sub->add_option("--floor", floor_text, "override the lf4 floor (decimal)");
    window_sub->add_option("--node-guard", guard_opt, "node budget override");
    auto* chain_sub = verify_cmd->add_subcommand("chain", "minimality chain");
    auto* appendix_sub = verify_cmd->add_subcommand("appendix", "periodic family");
    int appendix_a = 2;
    appendix_sub->add_option("--a", appendix_a, "family index (>= 1)")->required();
    auto* closed_sub = verify_cmd->add_subcommand("closed-form", "closed form of f");
    int closed_digits = 40;
    closed_sub->add_option("--digits", closed_digits, "certified digits (>= 40)");

    // dimension
    auto* dim_cmd = app.add_subcommand("dimension", "Hausdorff-dimension bounds");
    auto* bounds_sub = dim_cmd->add_subcommand("bounds", "Palis-Takens bracket");
    std::string alphabet_text = "1_2;2_2", tol_text = "1e-9", csv_file;
    int dim_depth = 12;
    bounds_sub->add_option("--alphabet", alphabet_text, "words separated by ';'")->required();
    bounds_sub->add_option("--depth", dim_depth, "construction depth")->required();
    bounds_sub->add_option("--tol", tol_text, "exponent tolerance");
    bounds_sub->add_option("--csv", csv_file, "dump scale pairs to CSV");

    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show->parsed()) {
            Report rep("constants show");
            rep.j["inputs"] = {{"name", const_name}, {"digits", const_digits}};
            NamedConstant c = compute_constant(const_name, const_digits);
            rep.j["results"] = {{"decimal", c.decimal}, {"exact", c.value.to_string()}};
            if (!json_out) std::cout << c.name << " = " << c.decimal << "\n";
            rep.finish(json_out, no_meta);
            return 0;
        }
        if (lam->parsed()) {
            Report rep("spectra lambda");
            rep.j["inputs"] = {{"seq", seq_text}, {"pos", pos}};
            SpectrumValue v = lambda_at(parse_sequence(seq_text), pos);
            rep.j["results"] = {{"value_decimal", v.decimal(val_digits)},
                                {"exact", v.value.to_string()}};
            if (!json_out) std::cout << "lambda_" << pos << " = " << v.decimal(val_digits) << "\n";
            rep.finish(json_out, no_meta);
            return 0;
        }
        if (mar->parsed()) {
            Report rep("spectra markov");
            rep.j["inputs"] = {{"seq", mar_seq}, {"digits", mar_digits}};
            BiInfiniteSequence seq = parse_sequence(mar_seq);
            MarkovResult r = markov_value(seq);
            bool replay_ok = replay_certificate(seq, r);
            json cert{{"attained_in_limit", r.certificate.attained_in_limit},
                      {"attaining_position", r.certificate.attaining_position},
                      {"window", {r.certificate.window_lo, r.certificate.window_hi}},
                      {"replay_ok", replay_ok}};
            json phases = json::array();
            for (const auto& p : r.certificate.phases) {
                const char* approach =
                    p.approach == TailApproach::Pure      ? "pure"
                    : p.approach == TailApproach::Below   ? "below"
                    : p.approach == TailApproach::Above   ? "above"
                                                          : "alternating";
                phases.push_back(json{{"side", p.left_side ? "left" : "right"},
                                      {"phase", p.phase},
                                      {"periodic_value", p.periodic_value.decimal(mar_digits)},
                                      {"approach", approach},
                                      {"gap", truncate_decimal(p.gap, 20)}});
            }
            cert["phases"] = phases;
            rep.j["results"] = {{"value_decimal", r.value.decimal(mar_digits)},
                                {"exact", r.value.value.to_string()},
                                {"certificate", cert}};
            rep.j["certified"] = replay_ok;
            if (!json_out) {
                std::cout << "m = " << r.value.decimal(mar_digits);
                if (r.certificate.attained_in_limit)
                    std::cout << "  (attained in the limit)";
                else
                    std::cout << "  attained at " << r.certificate.attaining_position;
                std::cout << "  replay " << (replay_ok ? "ok" : "FAILED") << "\n";
            }
            rep.finish(json_out, no_meta);
            return replay_ok ? 0 : 1;
        }
        if (lag->parsed()) {
            Report rep("spectra lagrange");
            rep.j["inputs"] = {{"word", lag_word}};
            LagrangeResult r = lagrange_value(parse_compact(lag_word));
            rep.j["results"] = {{"value_decimal", r.value.decimal(lag_digits)},
                                {"exact", r.value.value.to_string()},
                                {"attaining_phase", r.attaining_phase}};
            if (!json_out)
                std::cout << "l = " << r.value.decimal(lag_digits) << "  phase " << r.attaining_phase
                          << "\n";
            rep.finish(json_out, no_meta);
            return 0;
        }
        if (lemmas_sub->parsed()) {
            Report rep("verify lemmas");
            rep.j["inputs"] = {{"table", table}};
            std::vector<EntryReport> rows;
            if (table == "f1")
                rows = verify_forbidden_table();
            else if (table == "f2")
                rows = verify_allowed_table();
            else
                throw CLI::ValidationError("--table must be f1 or f2");
            json arr = json::array();
            bool all = true;
            for (const auto& r : rows) {
                arr.push_back(entry_to_json(r));
                all = all && r.pass;
                if (!json_out) print_entry(r);
            }
            rep.j["results"] = {{"entries", arr}, {"all_pass", all}};
            rep.finish(json_out, no_meta);
            return all ? 0 : 1;
        }
        if (window_sub->parsed()) {
            Report rep("verify window");
            WindowConstraint c;
            if (preset == "lf4") {
                c = floor_text.empty() ? lf4_constraints()
                                       : lf4_constraints(rational_from_decimal(floor_text));
            } else if (preset == "lf3p") {
                c = lf3p_constraints();
            } else if (!constraints_file.empty()) {
                std::ifstream in(constraints_file);
                if (!in) throw std::runtime_error("cannot open " + constraints_file);
                json spec = json::parse(in);
                json assigned = spec.value("assigned", json::object());
                json caps = spec.value("caps", json::array());
                json floors = spec.value("floors", json::array());
                for (auto& [k, v] : assigned.items()) c.assigned[std::stol(k)] = v.get<int>();
                for (auto& it : caps)
                    c.lambda_caps.push_back({it[0].get<long>(), rational_from_decimal(it[1].get<std::string>())});
                for (auto& it : floors)
                    c.lambda_floors.push_back({it[0].get<long>(), rational_from_decimal(it[1].get<std::string>())});
            } else {
                throw CLI::ValidationError("need --preset or --constraints");
            }
            auto colon = range_text.find(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--range must be lo:hi");
            long lo = std::stol(range_text.substr(0, colon));
            long hi = std::stol(range_text.substr(colon + 1));
            rep.j["inputs"] = {{"preset", preset}, {"range", {lo, hi}}};

            SearchOutcome out = forced_window_search(c, lo, hi, guard_opt);
            json arr = json::array();
            for (const auto& w : out.survivors) arr.push_back(render_compact(w));
            rep.j["results"] = {{"survivors", arr}, {"nodes", out.nodes_explored}};

            bool pass = true;
            if (!preset.empty()) {
                const FiniteWord& W = forced_window_word();
                for (const auto& s : out.survivors) {
                    bool ok = false;
                    if (s.size() >= W.size()) {
                        FiniteWord tail_w(std::vector<int>(s.digits.end() - W.size(), s.digits.end()));
                        FiniteWord head_w(std::vector<int>(s.digits.begin(), s.digits.begin() + W.size()));
                        ok = tail_w == W || (preset == "lf4" && transpose(head_w) == W);
                    }
                    pass = pass && ok;
                }
                pass = pass && !out.survivors.empty();
                rep.j["results"]["window_forced"] = pass;
            }
            if (!json_out) {
                std::cout << out.survivors.size() << " survivors, " << out.nodes_explored
                          << " nodes\n";
                if (out.survivors.size() <= 16)
                    for (const auto& w : out.survivors) std::cout << "  " << render_compact(w) << "\n";
                if (!preset.empty())
                    std::cout << (pass ? "PASS" : "FAIL") << ": survivors match the forced window\n";
            }
            rep.finish(json_out, no_meta);
            return pass ? 0 : 1;
        }
        if (chain_sub->parsed()) {
            Report rep("verify chain");
            ChainReport r = verify_f_minimality_chain();
            json steps = json::array();
            bool all = r.final_equals_f && r.strictly_increasing;
            for (const auto& s : r.steps) {
                steps.push_back(json{{"word", s.word},
                                     {"bound", s.bound.decimal(18)},
                                     {"forcing", s.forcing},
                                     {"forcing_verified", s.forcing_verified}});
                all = all && s.forcing_verified;
                if (!json_out)
                    std::cout << (s.forcing ? "forced " : "       ") << s.bound.decimal(18) << "  "
                              << s.word << "\n";
            }
            rep.j["results"] = {{"steps", steps},
                                {"final", r.final_value.decimal(18)},
                                {"final_equals_f", r.final_equals_f},
                                {"strictly_increasing", r.strictly_increasing},
                                {"index_convention", "all cap positions are star-relative"}};
            if (!json_out)
                std::cout << (all ? "PASS" : "FAIL") << ": chain terminates at f = "
                          << r.final_value.decimal(18) << "\n";
            rep.finish(json_out, no_meta);
            return all ? 0 : 1;
        }
        if (appendix_sub->parsed()) {
            Report rep("verify appendix");
            rep.j["inputs"] = {{"a", appendix_a}};
            AppendixReport r = appendix_pa(appendix_a);
            rep.j["results"] = {{"lagrange", r.lagrange.decimal(20)},
                                {"markov_at_origin", r.markov_at_origin},
                                {"lambda_plus9", r.lambda_plus9.decimal(16)},
                                {"lambda_minus9", r.lambda_minus9.decimal(16)},
                                {"lambda_plus9_limit", appendix_lambda9_limit().decimal(16)},
                                {"lambda_minus9_limit", appendix_lambda_minus9_limit().decimal(16)}};
            if (!json_out)
                std::cout << "l(P_" << appendix_a << ") = " << r.lagrange.decimal(20)
                          << "  lambda_9 = " << r.lambda_plus9.decimal(16)
                          << "  lambda_-9 = " << r.lambda_minus9.decimal(16) << "\n";
            rep.finish(json_out, no_meta);
            return r.markov_at_origin ? 0 : 1;
        }
        if (closed_sub->parsed()) {
            Report rep("verify closed-form");
            rep.j["inputs"] = {{"digits", closed_digits}};
            ClosedFormReport r = verify_f_closed_form(closed_digits);
            bool pass = r.components_satisfy_quadratics && r.exact_equal;
            rep.j["results"] = {{"components_satisfy_quadratics", r.components_satisfy_quadratics},
                                {"exact_equal", r.exact_equal},
                                {"decimal", r.decimal}};
            if (!json_out)
                std::cout << (pass ? "PASS" : "FAIL") << ": f = " << r.decimal << "\n";
            rep.finish(json_out, no_meta);
            return pass ? 0 : 1;
        }
        if (bounds_sub->parsed()) {
            Report rep("dimension bounds");
            rep.j["inputs"] = {{"alphabet", alphabet_text}, {"depth", dim_depth}, {"tol", tol_text}};
            GaussCantorSpec spec = GaussCantorSpec::parse(alphabet_text);
            Rational tol = parse_tolerance(tol_text);
            if (!csv_file.empty()) {
                std::ofstream csv(csv_file);
                csv << "word,lambda_min,lambda_max\n";
                for (const auto& s : interval_scales(spec, dim_depth))
                    csv << render_compact(s.word) << "," << s.lambda_min.decimal(20) << ","
                        << s.lambda_max.decimal(20) << "\n";
            }
            DimensionBounds b = hd_bounds(spec, dim_depth, tol);
            rep.j["results"] = {
                {"alpha", {{"lo", truncate_decimal(b.alpha.lo, 15)}, {"hi", truncate_decimal(b.alpha.hi, 15)}, {"decimal", b.alpha.decimal}}},
                {"beta", {{"lo", truncate_decimal(b.beta.lo, 15)}, {"hi", truncate_decimal(b.beta.hi, 15)}, {"decimal", b.beta.decimal}}}};
            if (!json_out)
                std::cout << "alpha_" << dim_depth << " = " << b.alpha.decimal << "\nbeta_"
                          << dim_depth << "  = " << b.beta.decimal << "\n";
            rep.finish(json_out, no_meta);
            return 0;
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
