#include "mzv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "mzv/linalg.hpp"
#include "mzv/numeric_zeta.hpp"
#include "mzv/operators.hpp"
#include "mzv/relations.hpp"

namespace mzv::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

// "(WORD)" -> WORD, for the operand of (1-tau)(...) and partial(n)(...)
std::string_view operand(std::string_view s, std::string_view whole) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("expected a parenthesised word in " + std::string(whole));
    return s.substr(1, s.size() - 2);
}

}  // namespace

Poly parse_element(std::string_view text) {
    const std::string_view s = trim(text);
    if (starts_with(s, "(1-tau)")) return one_minus_tau(Poly(parse_word(operand(s.substr(7), s))));
    if (starts_with(s, "partial(")) {
        const auto close = s.find(')');
        if (close == std::string_view::npos) throw std::invalid_argument("bad element: " + std::string(s));
        const std::string_view digits = s.substr(8, close - 8);
        int n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1)
            throw std::invalid_argument("bad derivation index in " + std::string(s));
        return partial(n, Poly(parse_word(operand(s.substr(close + 1), s))));
    }
    return Poly(parse_word(s));
}

json residual_terms(const Poly& p) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) terms.push_back({{"word", w.str()}, {"coeff", c.str()}});
    return terms;
}

json to_json(const VerdictReport& r) {
    json params = json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    return {{"claim", r.claim},
            {"params", params},
            {"cutoff", r.cutoff},
            {"verdict", std::string(verdict_name(r.verdict))},
            {"residual_terms", residual_terms(r.residual)},
            {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const TableReport& t) {
    json weights = json::array();
    for (const auto& c : t.columns) weights.push_back(c.weight);
    json rows = json::array();
    for (std::size_t row = 1; row <= table_rows; ++row) {
        json values = json::array();
        for (const auto& c : t.columns) {
            const auto& v = c.rows[row - 1];
            values.push_back(v ? json(*v) : json(nullptr));
        }
        rows.push_back({{"id", row}, {"label", std::string(table_row_label(row))}, {"values", values}});
    }
    json column_ms = json::array();
    for (const auto& c : t.columns) column_ms.push_back(c.elapsed_ms);
    return {{"max_weight", t.max_weight}, {"weights", weights},        {"rows", rows},
            {"consistent", t.consistent()}, {"column_elapsed_ms", column_ms}, {"elapsed_ms", t.elapsed_ms}};
}

std::string to_csv(const TableReport& t) {
    std::ostringstream os;
    os << "row,label";
    for (const auto& c : t.columns) os << ',' << c.weight;
    os << '\n';
    for (std::size_t row = 1; row <= table_rows; ++row) {
        os << row << ",\"" << table_row_label(row) << '"';
        for (const auto& c : t.columns) {
            os << ',';
            if (const auto& v = c.rows[row - 1]) os << *v;
        }
        os << '\n';
    }
    return os.str();
}

std::string to_markdown(const TableReport& t) {
    std::ostringstream os;
    os << "| wt |";
    for (const auto& c : t.columns) os << ' ' << c.weight << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
    os << '\n';
    for (std::size_t row = 1; row <= table_rows; ++row) {
        os << "| " << row << ". " << table_row_label(row) << " |";
        for (const auto& c : t.columns) {
            os << ' ';
            if (const auto& v = c.rows[row - 1]) os << *v;
            os << " |";
        }
        os << '\n';
    }
    return os.str();
}

namespace {

struct Outcome {
    std::string text;
    int code = ok;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Outcome run_table(const RunConfig& c) {
    if (c.max_weight < 3) throw std::invalid_argument("--max-weight must be >= 3");
    TableOptions options;
    options.min_weight = c.min_weight;
    options.max_weight = c.max_weight;
    options.cell_budget = c.budget;
    options.threads = c.threads;
    const TableReport t = build_table(options);
    Outcome o;
    switch (c.format) {
        case Format::json: o.text = dump(to_json(t)); break;
        case Format::csv: o.text = to_csv(t); break;
        case Format::md: o.text = to_markdown(t); break;
    }
    if (!t.consistent() || (c.strict && !t.complete())) o.code = falsified;
    return o;
}

Outcome run_rank(const RunConfig& c) {
    if (c.format != Format::json) throw std::invalid_argument("rank only supports --format json");
    const auto start = Clock::now();
    const FamilySpec spec = FamilySpec::parse(c.family);
    json j = {{"family", spec.str()}, {"weight", c.weight}};
    try {
        const RelationMatrix m(c.weight, generate(spec, c.weight));
        j["rank"] = echelon(m, Deadline(Clock::now() + c.budget)).rank();
        j["verdict"] = "verified";
    } catch (const BudgetExceeded&) {
        j["rank"] = nullptr;
        j["verdict"] = "skipped";
    }
    j["elapsed_ms"] = ms_since(start);
    return {dump(j), j["verdict"] == "skipped" && c.strict ? falsified : ok};
}

Outcome run_member(const RunConfig& c) {
    if (c.format != Format::json) throw std::invalid_argument("member only supports --format json");
    const auto start = Clock::now();
    const FamilySpec spec = FamilySpec::parse(c.family);
    const Poly element = parse_element(c.element);
    if (!element.is_homogeneous(static_cast<std::size_t>(c.weight)))
        throw std::invalid_argument("element is not homogeneous of weight " + std::to_string(c.weight));
    SparseRow row = RelationMatrix::coordinates(c.weight, element);
    VerdictReport r;
    r.claim = "member";
    r.params = {{"weight", c.weight}};
    r.cutoff = static_cast<std::size_t>(c.weight);
    try {
        const RelationMatrix m(c.weight, generate(spec, c.weight));
        echelon(m, Deadline(Clock::now() + c.budget)).reduce(row);
        r.residual = poly_of_row(c.weight, row);
        r.verdict = row.empty() ? Verdict::verified : Verdict::falsified;
    } catch (const BudgetExceeded&) {
        r.verdict = Verdict::skipped;
    }
    r.elapsed_ms = ms_since(start);
    json j = to_json(r);
    j["params"]["family"] = spec.str();
    j["params"]["element"] = c.element;
    if (r.verdict == Verdict::skipped)
        j["in_span"] = nullptr;
    else
        j["in_span"] = r.verified();
    const bool failed = r.verdict == Verdict::falsified || (r.verdict == Verdict::skipped && c.strict);
    return {dump(j), failed ? falsified : ok};
}

Outcome run_verify_theorem(const RunConfig& c) {
    if (c.format != Format::json) throw std::invalid_argument("verify-theorem only supports --format json");
    VerdictReport r;
    if (c.part == "i")
        r = verify_theorem_i(c.param, c.cutoff);
    else if (c.part == "ii")
        r = verify_theorem_ii(c.param, c.cutoff);
    else
        throw std::invalid_argument("--part must be i or ii");
    return {dump(to_json(r)), r.verified() ? ok : falsified};
}

Outcome run_conjecture(const RunConfig& c) {
    if (c.format != Format::json) throw std::invalid_argument("conjecture only supports --format json");
    const auto start = Clock::now();
    const auto verdicts = conjecture_scan(c.max_weight);
    json instances = json::array();
    Poly first_failure;
    bool all = true;
    for (const auto& v : verdicts) {
        instances.push_back({{"m", v.m},
                             {"n", v.n},
                             {"weight", v.weight},
                             {"verdict", v.in_span ? "verified" : "falsified"},
                             {"residual_terms", residual_terms(v.remainder)}});
        if (!v.in_span && all) first_failure = v.remainder;
        all = all && v.in_span;
    }
    json j = {{"claim", "conjecture"},
              {"params", {{"max_weight", c.max_weight}}},
              {"cutoff", c.max_weight},
              {"verdict", all ? "verified" : "falsified"},
              {"residual_terms", residual_terms(first_failure)},
              {"instances", instances},
              {"elapsed_ms", ms_since(start)}};
    return {dump(j), all ? ok : falsified};
}

Outcome run_numeric(const RunConfig& c) {
    if (c.format != Format::json) throw std::invalid_argument("numeric only supports --format json");
    const auto start = Clock::now();
    const Poly element = parse_element(c.element);
    if (!element.in_h0()) throw std::invalid_argument("numeric evaluation needs an admissible element");
    ZetaEvaluator zeta(c.terms);
    json words = json::array();
    for (const auto& [w, coeff] : element.terms()) {
        const ZetaApprox& z = zeta(w);
        words.push_back({{"word", w.str()},
                         {"composition", composition_str(composition_of_word(w))},
                         {"coeff", coeff.str()},
                         {"value", z.value},
                         {"truncated", z.truncated},
                         {"terms_used", z.terms_used},
                         {"tail_bound", z.tail_bound},
                         {"rounding_bound", z.rounding_bound}});
    }
    const ResidualReport r = zeta.residual(element);
    json j = {{"element", c.element},
              {"terms_used", c.terms},
              {"value", r.value},
              {"tail_bound", r.bound},
              {"within_bound", std::abs(r.value) <= r.bound},
              {"words", words},
              {"elapsed_ms", ms_since(start)}};
    return {dump(j), ok};
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, Outcome (*)(const RunConfig&)> commands = {
        {"table", run_table},         {"rank", run_rank},
        {"member", run_member},       {"verify-theorem", run_verify_theorem},
        {"conjecture", run_conjecture}, {"numeric", run_numeric},
    };
    const auto it = commands.find(config.command);
    if (it == commands.end()) {
        err << "unknown command: " << config.command << "\n";
        return usage;
    }
    Outcome o;
    try {
        o = it->second(config);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    if (config.out_path.empty()) {
        out << o.text;
    } else {
        std::ofstream file(config.out_path);
        if (!file) {
            err << "error: cannot write " << config.out_path << "\n";
            return usage;
        }
        file << o.text;
    }
    return o.code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (const char* env = std::getenv("MZV_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) config.threads = static_cast<unsigned>(n);
    }

    CLI::App app{"Exact computations with the duality and derivation relations of multiple zeta values", "mzv"};
    app.require_subcommand(1, 1);
    double budget_seconds = 60.0;
    const std::map<std::string, Format> formats = {{"json", Format::json}, {"csv", Format::csv}, {"md", Format::md}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "json, csv or md")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", config.out_path, "write the report to this file");
        sub->add_option("--budget", budget_seconds, "seconds allowed per exact rank computation")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", config.threads, "worker threads (default: MZV_THREADS or 1)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--strict", config.strict, "treat budget-skipped results as failures");
    };

    auto* table = app.add_subcommand("table", "ranks of the seven relation families per weight");
    table->add_option("--max-weight", config.max_weight)->required()->check(CLI::Range(3, 20));
    table->add_option("--min-weight", config.min_weight)->check(CLI::Range(3, 20));
    common(table);

    auto* rank = app.add_subcommand("rank", "rank of one relation family at one weight");
    rank->add_option("--family", config.family)->required();
    rank->add_option("--weight", config.weight)->required()->check(CLI::Range(3, 20));
    common(rank);

    auto* member = app.add_subcommand("member", "membership of an element in a relation span");
    member->add_option("--element", config.element)->required();
    member->add_option("--family", config.family)->required();
    member->add_option("--weight", config.weight)->required()->check(CLI::Range(3, 20));
    common(member);

    auto* theorem = app.add_subcommand("verify-theorem", "exact check of the generating-series identities");
    theorem->add_option("--part", config.part)->required()->check(CLI::IsMember({"i", "ii"}));
    theorem->add_option("--param", config.param)->required()->check(CLI::PositiveNumber);
    theorem->add_option("--cutoff", config.cutoff)->required()->check(CLI::Range(1, 40));
    common(theorem);

    auto* conjecture = app.add_subcommand("conjecture", "scan the k1 >= 3 duality sums against derivations");
    conjecture->add_option("--max-weight", config.max_weight)->required()->check(CLI::Range(6, 20));
    common(conjecture);

    auto* numeric = app.add_subcommand("numeric", "floating-point evaluation of Z on an element");
    numeric->add_option("--element", config.element)->required();
    numeric->add_option("--terms", config.terms)->check(CLI::Range(1, 200'000'000));
    common(numeric);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0));
    return run(config, out, err);
}

}  // namespace mzv::cli
