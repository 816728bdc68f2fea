#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "superhomology/graded_matrix.hpp"

namespace shom::cli {

using Params = std::map<std::string, std::string>;

// Bad flags, unknown keys or values a verb cannot accept. Exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value kinds checked before a verb runs.
enum class Kind { dims, count, flag, text, counts };

struct ParamSpec {
    std::string key;
    Kind kind;
    std::string fallback;  // empty means derived or unset
    std::string help;
};

const std::vector<std::string>& verbs();
const std::vector<ParamSpec>& verb_params(const std::string& verb);

// Keys every verb accepts besides its own parameters.
const std::vector<std::string>& global_keys();

struct TaskConfig {
    std::uint32_t p = 3;
    std::string verb;
    Params params;             // verb parameters after defaults are filled in
    std::size_t budget = 0;    // 0 keeps SUPERHOMOLOGY_BUDGET or the built-in default
    std::string output;        // report path, empty for stdout
    std::string dump;          // GradedMatrix dump path, empty for none
    int jobs = 1;              // report-suite only
};

// key=value lines; blank lines and lines starting with # are skipped.
Params parse_key_values(std::istream& in);

// Merges layers in order (later wins) and validates. The verb comes from the key "task".
TaskConfig make_config(const std::vector<Params>& layers);

// Typed accessors over validated parameters.
std::pair<std::size_t, std::size_t> param_dims(const Params& ps, const std::string& key);
long param_count(const Params& ps, const std::string& key);
bool param_flag(const Params& ps, const std::string& key);
std::vector<long> param_counts(const Params& ps, const std::string& key);

enum class Status { pass, fail, error };
std::string status_name(Status s);
Status status_from_name(const std::string& s);

struct ErrorInfo {
    std::string kind;  // usage, budget, internal
    std::string message;
    std::string object;       // budget only
    std::uint64_t dimension = 0;
    std::uint64_t cap = 0;
    bool operator==(const ErrorInfo&) const = default;
};

struct Report {
    std::string verb;
    std::uint32_t p = 0;
    Params params;
    Status status = Status::error;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> failures;
    std::optional<ErrorInfo> error;
    double seconds = 0;
    bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string emit(const Report& r);
Report parse_report(const std::string& text);

// Drops every "timing" member, recursively, for comparisons across runs.
nlohmann::json without_timing(nlohmann::json j);

using Dumps = std::vector<std::pair<std::string, GradedMatrix>>;

// Errors from the library become an error report; nothing escapes except std::bad_alloc.
Report run_task(const TaskConfig& config, Dumps* dumps = nullptr);

int exit_code(const Report& r);

// The configurations run by report-suite.
std::vector<TaskConfig> acceptance_suite();

}  // namespace shom::cli
