#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mzv/poly.hpp"
#include "mzv/verify.hpp"

namespace mzv::cli {

enum class Format { json, csv, md };

struct RunConfig {
    std::string command;
    int max_weight = 10;
    int min_weight = 3;
    int weight = 0;
    std::size_t cutoff = 12;
    int param = 1;
    std::string part = "i";
    std::string family = "derivation";
    std::string element;
    std::size_t terms = 1'000'000;
    Format format = Format::json;
    std::chrono::milliseconds budget{60'000};
    unsigned threads = 1;
    bool strict = false;
    std::string out_path;
};

enum ExitCode : int { ok = 0, falsified = 1, usage = 2 };

/*
 * Element micro-syntax: a word ("xxyxy"), a composition ("(2,3)"),
 * "(1-tau)(WORD)" or "partial(n)(WORD)". Throws std::invalid_argument.
 */
Poly parse_element(std::string_view text);

nlohmann::json residual_terms(const Poly& p);
nlohmann::json to_json(const VerdictReport& r);
nlohmann::json to_json(const TableReport& t);
std::string to_csv(const TableReport& t);
std::string to_markdown(const TableReport& t);

/// Runs one subcommand; the report goes to `out` (or config.out_path).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
