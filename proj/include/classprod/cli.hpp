/*
   Copyright 2026 The classprod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cli.hpp
 * @brief Command-line front end: configuration, dispatch and report output.
 *
 * Every command builds one Report holding a JSON document and a flat table
 * of the same values; --format picks json, csv or an aligned text table.
 * Reports never depend on the thread count.
 *
 * Exit codes: 0 success, 1 malformed input, 2 budget refusal, 3 a
 * reproduction or self-check mismatch.
 */

#ifndef CLASSPROD_CLI_HPP
#define CLASSPROD_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "canonical.hpp"
#include "field.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "suites.hpp"

namespace classprod::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMalformed = 1, kBudget = 2, kMismatch = 3 };

enum class Format { json, csv, table };

struct RunConfig {
    std::string command;
    std::string field = "2^1";
    std::size_t n = 2;
    GroupFamily group = GroupFamily::GL;
    std::string a, b;
    bool exact_only = false;
    bool bound_only = false;
    Format format = Format::json;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::uint64_t budget = kDefaultBudget;
    bool long_run = false;
    std::string suite = "all";
    std::uint64_t trials = 1000;
};

struct Report {
    Json doc = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    int exit_code = kOk;
};

/// Worker count from CLASSPROD_THREADS, else the hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("CLASSPROD_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

inline Json modulus_json(const Field& F) { return Json(F.modulus()); }

inline std::string modulus_literal(const Field& F) {
    std::string out;
    for (std::size_t i = 0; i < F.modulus().size(); ++i) out += (i ? "," : "") + std::to_string(F.modulus()[i]);
    return out;
}

inline std::string opt_string(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

inline Json opt_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

inline Mat parse_operand(const Field& F, const std::string& literal, std::size_t n, const char* name) {
    if (literal.empty()) throw std::invalid_argument(std::string("missing --") + name);
    Mat M = parse_matrix(F, literal);
    if (M.n() != n)
        throw std::invalid_argument(std::string("--") + name + " is " + std::to_string(M.n()) + "x" +
                                    std::to_string(M.n()) + " but --n is " + std::to_string(n));
    return M;
}

inline GroupSpec group_of(const RunConfig& cfg) {
    return GroupSpec::make(cfg.group, cfg.n, parse_field(cfg.field));
}

/// group, field and modulus, leading every group report
inline void put_group(Report& r, const GroupSpec& g) {
    r.doc["group"] = g.name();
    r.doc["family"] = to_string(g.family);
    r.doc["field"] = g.field.literal();
    r.doc["modulus"] = modulus_json(g.field);
    r.doc["n"] = g.n;
    r.doc["order"] = g.order;
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\";\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_field(const RunConfig& cfg) {
    const Field F = parse_field(cfg.field);
    Report r;
    r.doc["field"] = F.literal();
    r.doc["p"] = F.p();
    r.doc["m"] = F.m();
    r.doc["q"] = F.q();
    r.doc["modulus"] = detail::modulus_json(F);
    r.doc["generator"] = F.generator().v;
    std::uint32_t squares = 0;
    for (std::uint32_t x = 1; x < F.q(); ++x) squares += F.is_square(Felt{x}) ? 1 : 0;
    r.doc["nonzero_squares"] = squares;
    r.columns = {"field", "p", "m", "q", "modulus", "generator", "nonzero_squares"};
    r.rows = {{F.literal(), std::to_string(F.p()), std::to_string(F.m()), std::to_string(F.q()),
               detail::modulus_literal(F), std::to_string(F.generator().v), std::to_string(squares)}};
    return r;
}

inline Report cmd_canon(const RunConfig& cfg) {
    const Field F = parse_field(cfg.field);
    if (cfg.a.empty()) throw std::invalid_argument("missing --a");
    const Mat A = parse_matrix(F, cfg.a);
    const ClassId id = class_id(A);
    Report r;
    r.doc["field"] = F.literal();
    r.doc["modulus"] = detail::modulus_json(F);
    r.doc["n"] = A.n();
    r.doc["matrix"] = to_literal(A);
    r.doc["class_id"] = id.key();
    Json factors = Json::array();
    for (const auto& f : id.invariant_factors) {
        Json c = Json::array();
        for (Felt x : f.coeffs()) c.push_back(x.v);
        factors.push_back(c);
    }
    r.doc["invariant_factors"] = factors;
    r.doc["rational_canonical_form"] = to_literal(rational_canonical_form(id));
    r.columns = {"field", "matrix", "index", "invariant_factor", "degree"};
    for (std::size_t i = 0; i < id.invariant_factors.size(); ++i)
        r.rows.push_back({F.literal(), to_literal(A), std::to_string(i), to_literal(id.invariant_factors[i]),
                          std::to_string(id.invariant_factors[i].degree())});
    return r;
}

inline Report cmd_classes(const RunConfig& cfg) {
    const GroupSpec g = detail::group_of(cfg);
    const ClassTable t = ClassTable::compute(g, cfg.budget, cfg.threads);
    Report r;
    detail::put_group(r, g);
    r.doc["class_count"] = t.classes().size();
    Json cls = Json::array();
    r.columns = {"group", "index", "key", "size", "centralizer_order", "central", "representative"};
    for (std::size_t i = 0; i < t.classes().size(); ++i) {
        const auto& c = t.classes()[i];
        cls.push_back({{"index", i},
                       {"key", c.key},
                       {"size", c.size},
                       {"centralizer_order", c.centralizer_order},
                       {"central", c.central},
                       {"representative", to_literal(c.representative)}});
        r.rows.push_back({g.name(), std::to_string(i), c.key, std::to_string(c.size),
                          std::to_string(c.centralizer_order), c.central ? "true" : "false",
                          to_literal(c.representative)});
    }
    r.doc["classes"] = cls;
    return r;
}

inline Report cmd_eta(const RunConfig& cfg) {
    if (cfg.exact_only && cfg.bound_only) throw std::invalid_argument("--exact and --bound-only exclude each other");
    const GroupSpec g = detail::group_of(cfg);
    const Mat A = detail::parse_operand(g.field, cfg.a, g.n, "a");
    const Mat B = detail::parse_operand(g.field, cfg.b, g.n, "b");
    if (!g.contains(A) || !g.contains(B)) throw std::invalid_argument("operand is not an element of " + g.name());

    EtaReport rep;
    rep.class_a = class_id(A).key();
    rep.class_b = class_id(B).key();
    if (!cfg.bound_only) {
        const ClassTable t = ClassTable::compute(g, cfg.budget, cfg.threads);
        rep = eta_exact(t, A, B);
    }
    if (!cfg.exact_only) {
        if (is_central(A, g.family) || is_central(B, g.family)) {
            rep.bound_path = "central";
        } else {
            const EtaReport b = certified_lower_bound(A, B, g, cfg.seed);
            rep.lower_bound = b.lower_bound;
            rep.trace_set_size = b.trace_set_size;
            rep.bound_path = b.bound_path;
        }
    }

    Report r;
    detail::put_group(r, g);
    r.doc["a"] = to_literal(A);
    r.doc["b"] = to_literal(B);
    r.doc["eta_exact"] = detail::opt_json(rep.eta_exact);
    r.doc["lower_bound"] = detail::opt_json(rep.lower_bound);
    r.doc["bound_path"] = rep.bound_path;
    r.doc["trace_set_size"] = detail::opt_json(rep.trace_set_size);
    r.doc["class_a"] = rep.class_a;
    r.doc["class_b"] = rep.class_b;
    r.columns = {"group", "modulus", "a", "b", "eta_exact", "lower_bound", "bound_path", "trace_set_size",
                 "class_a", "class_b"};
    r.rows = {{g.name(), detail::modulus_literal(g.field), to_literal(A), to_literal(B),
               detail::opt_string(rep.eta_exact), detail::opt_string(rep.lower_bound), rep.bound_path,
               detail::opt_string(rep.trace_set_size), rep.class_a, rep.class_b}};
    return r;
}

inline Report cmd_bound(const RunConfig& cfg) {
    const GroupSpec g = detail::group_of(cfg);
    const Mat A = detail::parse_operand(g.field, cfg.a, g.n, "a");
    const Mat B = detail::parse_operand(g.field, cfg.b, g.n, "b");
    const Certificate c = certify(A, B, g, cfg.seed);
    const TraceSetReport& ts = c.traces;

    Report r;
    detail::put_group(r, g);
    r.doc["a"] = to_literal(A);
    r.doc["b"] = to_literal(B);
    r.doc["lemma_path"] = to_string(ts.lemma_path);
    r.doc["swapped"] = c.swapped;
    r.doc["family"] = family_name(ts.family, ts.fixed_x);
    r.doc["size"] = ts.size;
    r.doc["floor"] = ts.floor;
    r.doc["first_transform"] = to_literal(c.first_transform);
    r.doc["second_transform"] = to_literal(c.second_transform);
    Json traces = Json::array();
    for (Felt t : ts.traces) traces.push_back(t.v);
    r.doc["traces"] = traces;
    Json wit = Json::array();
    r.columns = {"group", "lemma_path", "swapped", "trace", "block", "group_element"};
    for (std::size_t i = 0; i < ts.witnesses.size(); ++i) {
        const auto& w = ts.witnesses[i];
        const std::string block = std::to_string(w.conjugator.a.v) + "," + std::to_string(w.conjugator.b.v) + ";" +
                                  std::to_string(w.conjugator.c.v) + "," + std::to_string(w.conjugator.d.v);
        wit.push_back({{"trace", w.trace.v}, {"block", block}, {"group_element", to_literal(c.group_conjugators[i])}});
        r.rows.push_back({g.name(), to_string(ts.lemma_path), c.swapped ? "true" : "false", std::to_string(w.trace.v),
                          block, to_literal(c.group_conjugators[i])});
    }
    r.doc["witnesses"] = wit;
    return r;
}

inline Report cmd_min_scan(const RunConfig& cfg) {
    const GroupSpec g = detail::group_of(cfg);
    const ClassTable t = ClassTable::compute(g, cfg.budget, cfg.threads);
    const MinScanResult res = min_scan(t, cfg.threads);
    const auto& cls = t.classes();

    Report r;
    detail::put_group(r, g);
    r.doc["class_count"] = cls.size();
    r.doc["noncentral_classes"] = t.noncentral_classes().size();
    r.doc["min"] = res.min;
    r.doc["argmin"] = {{"class_a", cls[res.argmin_a].key},
                       {"class_b", cls[res.argmin_b].key},
                       {"representative_a", to_literal(cls[res.argmin_a].representative)},
                       {"representative_b", to_literal(cls[res.argmin_b].representative)}};
    Json pairs = Json::array();
    r.columns = {"group", "class_a", "class_b", "eta"};
    for (const auto& e : res.table) {
        pairs.push_back({{"class_a", cls[e.class_a].key}, {"class_b", cls[e.class_b].key}, {"eta", e.eta}});
        r.rows.push_back({g.name(), cls[e.class_a].key, cls[e.class_b].key, std::to_string(e.eta)});
    }
    r.doc["pairs"] = pairs;
    return r;
}

inline Report cmd_verify(const RunConfig& cfg) {
    const Field F = parse_field(cfg.field);
    std::vector<std::string> names;
    if (cfg.suite == "all")
        names.assign(suite_names().begin(), suite_names().end());
    else
        names.push_back(cfg.suite);

    Report r;
    r.doc["field"] = F.literal();
    r.doc["modulus"] = detail::modulus_json(F);
    r.doc["seed"] = cfg.seed;
    r.doc["trials"] = cfg.trials;
    Json suites = Json::array();
    r.columns = {"field", "suite", "seed", "checked", "mismatches", "exhaustive", "first_mismatch"};
    for (const auto& name : names) {
        const SuiteResult s = run_suite(name, F, cfg.trials, cfg.seed);
        suites.push_back({{"suite", s.suite},
                          {"checked", s.checked},
                          {"mismatches", s.mismatches},
                          {"exhaustive", s.exhaustive},
                          {"first_mismatch", s.first_mismatch}});
        r.rows.push_back({F.literal(), s.suite, std::to_string(s.seed), std::to_string(s.checked),
                          std::to_string(s.mismatches), s.exhaustive ? "true" : "false", s.first_mismatch});
        if (s.mismatches) r.exit_code = kMismatch;
    }
    r.doc["suites"] = suites;
    return r;
}

struct ReproCheck {
    std::string name;
    std::uint64_t expected;
    std::function<std::uint64_t()> observe;
};

/// The published minima and the optimal pair over GF(4).
inline std::vector<ReproCheck> reproduction_checks(const RunConfig& cfg) {
    std::vector<ReproCheck> checks;
    auto min_of = [&cfg](GroupFamily fam, std::size_t n, std::uint32_t p, std::uint32_t m) {
        return [&cfg, fam, n, p, m] {
            const auto g = GroupSpec::make(fam, n, make_field(p, m));
            return min_scan(ClassTable::compute(g, cfg.budget, cfg.threads), cfg.threads).min;
        };
    };
    struct Q {
        std::uint32_t p, m;
    };
    std::vector<Q> qs{{3, 1}, {2, 2}, {5, 1}, {7, 1}};
    if (cfg.long_run) qs.insert(qs.end(), {{2, 3}, {3, 2}, {11, 1}, {13, 1}});
    for (auto [p, m] : qs) {
        std::uint32_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) q *= p;
        checks.push_back({"min GL(2," + std::to_string(q) + ")", q - 1, min_of(GroupFamily::GL, 2, p, m)});
    }
    checks.push_back({"min GL(3,3)", 4, min_of(GroupFamily::GL, 3, 3, 1)});
    for (GroupFamily fam : {GroupFamily::GL, GroupFamily::SL}) {
        checks.push_back({"eta " + to_string(fam) + "(2,4) [[1,1],[0,1]] x companion(x^2-wx+1)", 3, [&cfg, fam] {
                              const Field F = make_field(2, 2);
                              const auto g = GroupSpec::make(fam, 2, F);
                              const Felt w = find_w_irreducible(F);
                              const Mat A = parse_matrix(F, "1,1;0,1");
                              const Mat B = companion(Poly(F, {F.one(), F.neg(w), F.one()}));
                              return *eta_exact(ClassTable::compute(g, cfg.budget, cfg.threads), A, B).eta_exact;
                          }});
    }
    return checks;
}

inline Report cmd_reproduce(const RunConfig& cfg) {
    Report r;
    r.doc["long"] = cfg.long_run;
    Json rows = Json::array();
    r.columns = {"check", "expected", "observed", "status"};
    bool all = true;
    for (const auto& c : reproduction_checks(cfg)) {
        const std::uint64_t got = c.observe();
        const bool pass = got == c.expected;
        all = all && pass;
        rows.push_back({{"check", c.name}, {"expected", c.expected}, {"observed", got}, {"status", pass ? "PASS" : "FAIL"}});
        r.rows.push_back({c.name, std::to_string(c.expected), std::to_string(got), pass ? "PASS" : "FAIL"});
    }
    r.doc["checks"] = rows;
    r.doc["all_pass"] = all;
    if (!all) r.exit_code = kMismatch;
    return r;
}

inline Report run(const RunConfig& cfg) {
    if (cfg.command == "field") return cmd_field(cfg);
    if (cfg.command == "canon") return cmd_canon(cfg);
    if (cfg.command == "classes") return cmd_classes(cfg);
    if (cfg.command == "eta") return cmd_eta(cfg);
    if (cfg.command == "bound") return cmd_bound(cfg);
    if (cfg.command == "min-scan") return cmd_min_scan(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "reproduce") return cmd_reproduce(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

// ---------------------------------------------------------------------------
// Output

inline void write_report(const Report& r, Format format, std::ostream& out) {
    switch (format) {
        case Format::json: out << r.doc.dump(2) << '\n'; return;
        case Format::csv: {
            auto line = [&out](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << detail::csv_cell(cells[i]);
                out << '\n';
            };
            line(r.columns);
            for (const auto& row : r.rows) line(row);
            return;
        }
        case Format::table: {
            std::vector<std::size_t> width(r.columns.size());
            for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
            for (const auto& row : r.rows)
                for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
            auto line = [&](const std::vector<std::string>& cells) {
                std::string s;
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    s += cells[i];
                    if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
                }
                out << s << '\n';
            };
            line(r.columns);
            std::vector<std::string> rule;
            for (auto w : width) rule.emplace_back(w, '-');
            line(rule);
            for (const auto& row : r.rows) line(row);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Argument parsing

/// Builds the parser; `cfg` receives the parsed values.
inline void configure(CLI::App& app, RunConfig& cfg) {
    app.require_subcommand(1);
    cfg.threads = default_threads();

    auto field = [&](CLI::App* s) { s->add_option("--field", cfg.field, "field literal p^m")->required(); };
    auto group = [&](CLI::App* s) {
        field(s);
        s->add_option("--group", cfg.group, "GL or SL")
            ->required()
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, GroupFamily>{{"GL", GroupFamily::GL}, {"SL", GroupFamily::SL}}));
        s->add_option("--n", cfg.n, "matrix dimension")->required()->check(CLI::Range(2, 6));
        s->add_option("--budget", cfg.budget, "largest group order to enumerate");
    };
    auto operands = [&](CLI::App* s) {
        s->add_option("--a", cfg.a, "matrix literal, rows ';' entries ','")->required();
        s->add_option("--b", cfg.b, "matrix literal")->required();
    };

    CLI::App* f = app.add_subcommand("field", "field parameters and modulus");
    field(f);
    CLI::App* c = app.add_subcommand("canon", "invariant factors and rational canonical form");
    field(c);
    c->add_option("--a", cfg.a, "matrix literal")->required();
    group(app.add_subcommand("classes", "conjugacy classes of GL(n,q) or SL(n,q)"));
    CLI::App* e = app.add_subcommand("eta", "number of classes in the product of two classes");
    group(e);
    operands(e);
    e->add_flag("--exact", cfg.exact_only, "enumerate only");
    e->add_flag("--bound-only", cfg.bound_only, "certified lower bound only, no enumeration");
    CLI::App* b = app.add_subcommand("bound", "trace set with witnesses");
    group(b);
    operands(b);
    group(app.add_subcommand("min-scan", "minimum over pairs of non-central classes"));
    CLI::App* v = app.add_subcommand("verify", "closed-form and counting self-checks");
    field(v);
    v->add_option("--suite", cfg.suite, "fieldsize, xysoln, generalcase, main1, main2 or all")
        ->check(CLI::IsMember({"all", "fieldsize", "xysoln", "generalcase", "main1", "main2"}));
    v->add_option("--trials", cfg.trials, "random instances per suite");
    CLI::App* r = app.add_subcommand("reproduce", "known minima and the optimal GF(4) pair");
    r->add_flag("--long", cfg.long_run, "include q in {8, 9, 11, 13}");
    r->add_option("--budget", cfg.budget, "largest group order to enumerate");

    for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
        s->add_option("--format", cfg.format, "json, csv or table")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}}));
        s->add_option("--seed", cfg.seed, "seed for randomized steps");
        s->add_option("--threads", cfg.threads, "worker threads (default: CLASSPROD_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
        s->callback([&cfg, s] { cfg.command = s->get_name(); });
    }
}

/// Parses, runs and prints; returns the process exit code.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conjugacy class products in GL(n,q) and SL(n,q)", "classprod"};
    RunConfig cfg;
    configure(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kMalformed;
    }
    try {
        const Report r = run(cfg);
        write_report(r, cfg.format, out);
        return r.exit_code;
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    }
}

}  // namespace classprod::cli

#endif  // CLASSPROD_CLI_HPP
