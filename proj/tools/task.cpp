#include "task.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <thread>

#include "superhomology/errors.hpp"
#include "verbs.hpp"

namespace shom::cli {

namespace {

using nlohmann::json;

const std::map<std::string, std::vector<ParamSpec>>& table() {
    static const std::map<std::string, std::vector<ParamSpec>> t = {
        {"cartier",
         {{"dims", Kind::dims, "1,1", "m,n for V = k^{m|n}"},
          {"n", Kind::count, "1", "source degree; the target is Ω_{pn}"},
          {"expect", Kind::counts, "", "expected H^t(Ω_{pn}) dims"}}},
        {"homotopy",
         {{"dims", Kind::dims, "1,1", "m,n for V = k^{m|n}"}, {"n", Kind::count, "1", "polynomial degree"}}},
        {"koszul-kernel",
         {{"dims", Kind::dims, "1,1", "m,n for V = k^{m|n}"},
          {"n", Kind::count, "", "polynomial degree (default p)"},
          {"expect", Kind::counts, "", "expected H^i(K_n) dims"}}},
        {"naturality",
         {{"dims", Kind::dims, "1,0", "source k^{m|n}"},
          {"target", Kind::dims, "", "target k^{m|n} (default: source)"},
          {"entries", Kind::text, "", "i,j,e;... exponents of e_ij (default γ_p(e_00))"},
          {"seed", Kind::count, "", "draw random morphisms with this seed instead"},
          {"count", Kind::count, "10", "number of random morphisms"},
          {"degree", Kind::count, "", "total degree of random morphisms (default p)"}}},
        {"lie-cohom",
         {{"preset", Kind::text, "two-dim", "two-dim, odd-abelian:<n>, even-abelian:<m>, gl:<m>:<n>"},
          {"lie", Kind::text, "", "path to a Lie superalgebra text file (overrides preset)"},
          {"max-degree", Kind::count, "4", "top cohomological degree"},
          {"expect", Kind::counts, "", "expected dims H^0.."},
          {"gamma-free", Kind::flag, "false", "fail if a nonzero S(g_0*(2)) cochain is a coboundary"}}},
        {"bar-ext",
         {{"preset", Kind::text, "two-dim", "Lie preset for V(g)"},
          {"lie", Kind::text, "", "path to a Lie superalgebra text file"},
          {"algebra", Kind::text, "", "truncated:<n> for k[x]/x^n instead of V(g)"},
          {"max-degree", Kind::count, "4", "top degree (at most 4)"},
          {"expect", Kind::counts, "", "expected dims H^0.."}}},
        {"e1", {{"dims", Kind::dims, "1,1", "m,n for V = k^{m|n}"}}},
        {"c1",
         {{"dims", Kind::dims, "1,1", "m,n for gl(m|n)"},
          {"transpose", Kind::flag, "false", "use the transposed variant"},
          {"lift", Kind::flag, "true", "also lift with the generic solver and compare classes"}}},
        {"e1-chainmap", {{"dims", Kind::dims, "1,1", "m,n for gl(m|n)"}}},
        {"schur",
         {{"dims", Kind::dims, "1,1", "m,n"},
          {"d", Kind::count, "2", "tensor degree"},
          {"max-triples", Kind::count, "200000", "associativity triples before sampling"},
          {"modules", Kind::flag, "false", "also check the actions on S, Λ, Γ, A"}}},
        {"bases",
         {{"algebra", Kind::text, "S", "S, Lambda, Gamma or A"},
          {"dims", Kind::dims, "1,1", "m,n"},
          {"d", Kind::count, "2", "degree"}}},
        {"report-suite", {}},
    };
    return t;
}

[[noreturn]] void bad(const std::string& key, const std::string& value, const std::string& why) {
    throw UsageError("invalid value '" + value + "' for " + key + ": " + why);
}

long to_count(const std::string& key, const std::string& v) {
    long x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) bad(key, v, "expected an integer");
    if (x < 0) bad(key, v, "expected a non-negative integer");
    return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void check_value(const ParamSpec& spec, const std::string& v) {
    switch (spec.kind) {
        case Kind::dims: {
            auto parts = split(v, ',');
            if (parts.size() != 2) bad(spec.key, v, "expected m,n");
            to_count(spec.key, parts[0]);
            to_count(spec.key, parts[1]);
            break;
        }
        case Kind::count: to_count(spec.key, v); break;
        case Kind::flag:
            if (v != "true" && v != "false") bad(spec.key, v, "expected true or false");
            break;
        case Kind::counts:
            for (const auto& x : split(v, ',')) to_count(spec.key, x);
            break;
        case Kind::text: break;
    }
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

json params_json(const Params& ps) {
    json j = json::object();
    for (const auto& [k, v] : ps) j[k] = v;
    return j;
}

std::string summary(const TaskConfig& c) {
    std::string s = c.verb + " p=" + std::to_string(c.p);
    for (const auto& [k, v] : c.params)
        if (!v.empty()) s += " " + k + "=" + v;
    return s;
}

Report run_suite(const TaskConfig& c) {
    const std::vector<TaskConfig> suite = acceptance_suite();
    std::vector<Report> reports(suite.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < suite.size(); k = next++) reports[k] = run_task(suite[k]);
    };
    const int jobs = std::max(1, std::min<int>(c.jobs, static_cast<int>(suite.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Report r;
    json list = json::array();
    std::size_t passed = 0;
    for (std::size_t k = 0; k < suite.size(); ++k) {
        list.push_back(to_json(reports[k]));
        if (reports[k].status == Status::pass)
            ++passed;
        else
            r.failures.push_back(summary(suite[k]) + ": " + status_name(reports[k].status));
    }
    r.results["reports"] = std::move(list);
    r.results["passed"] = passed;
    r.results["total"] = suite.size();
    return r;
}

}  // namespace

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v = {"cartier", "homotopy",    "koszul-kernel", "naturality",
                                               "lie-cohom", "bar-ext",   "e1",            "c1",
                                               "e1-chainmap", "schur",   "bases",         "report-suite"};
    return v;
}

const std::vector<ParamSpec>& verb_params(const std::string& verb) {
    auto it = table().find(verb);
    if (it == table().end()) throw UsageError("unknown verb '" + verb + "'");
    return it->second;
}

const std::vector<std::string>& global_keys() {
    static const std::vector<std::string> g = {"task", "p", "output", "dump", "budget", "jobs"};
    return g;
}

Params parse_key_values(std::istream& in) {
    Params out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("config line " + std::to_string(number) + ": expected key=value");
        out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return out;
}

TaskConfig make_config(const std::vector<Params>& layers) {
    Params all;
    for (const auto& l : layers)
        for (const auto& [k, v] : l) all[k] = v;
    TaskConfig c;
    if (!all.count("task") || all["task"].empty()) throw UsageError("no task given");
    c.verb = all["task"];
    const auto& specs = verb_params(c.verb);

    if (all.count("p")) {
        const long p = to_count("p", all["p"]);
        if (p < 3 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p))) bad("p", all["p"], "expected an odd prime below 65536");
        c.p = static_cast<std::uint32_t>(p);
    }
    if (all.count("budget")) {
        c.budget = static_cast<std::size_t>(to_count("budget", all["budget"]));
        if (c.budget == 0) bad("budget", all["budget"], "must be positive");
    }
    if (all.count("jobs")) {
        c.jobs = static_cast<int>(to_count("jobs", all["jobs"]));
        if (c.jobs < 1) bad("jobs", all["jobs"], "must be positive");
    }
    if (all.count("output")) c.output = all["output"];
    if (all.count("dump")) c.dump = all["dump"];

    for (const auto& [k, v] : all) {
        if (std::find(global_keys().begin(), global_keys().end(), k) != global_keys().end()) continue;
        auto it = std::find_if(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.key == k; });
        if (it == specs.end()) throw UsageError("verb " + c.verb + " does not take '" + k + "'");
    }
    for (const auto& s : specs) {
        auto it = all.find(s.key);
        const std::string v = it != all.end() ? it->second : s.fallback;
        if (!v.empty()) check_value(s, v);
        c.params[s.key] = v;
    }
    return c;
}

std::pair<std::size_t, std::size_t> param_dims(const Params& ps, const std::string& key) {
    const auto parts = split(ps.at(key), ',');
    if (parts.size() != 2) bad(key, ps.at(key), "expected m,n");
    return {static_cast<std::size_t>(to_count(key, parts[0])), static_cast<std::size_t>(to_count(key, parts[1]))};
}

long param_count(const Params& ps, const std::string& key) { return to_count(key, ps.at(key)); }

bool param_flag(const Params& ps, const std::string& key) { return ps.at(key) == "true"; }

std::vector<long> param_counts(const Params& ps, const std::string& key) {
    std::vector<long> out;
    if (ps.at(key).empty()) return out;
    for (const auto& x : split(ps.at(key), ',')) out.push_back(to_count(key, x));
    return out;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::error: return "error";
    }
    return "error";
}

Status status_from_name(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "error") return Status::error;
    throw std::invalid_argument("unknown status '" + s + "'");
}

json to_json(const Report& r) {
    json j;
    j["task"] = {{"verb", r.verb}, {"p", r.p}, {"params", params_json(r.params)}};
    j["status"] = status_name(r.status);
    j["results"] = r.results;
    j["failures"] = r.failures;
    if (r.error) {
        j["error"] = {{"kind", r.error->kind}, {"message", r.error->message}};
        if (r.error->kind == "budget")
            j["error"].update({{"object", r.error->object}, {"dimension", r.error->dimension}, {"cap", r.error->cap}});
    } else {
        j["error"] = nullptr;
    }
    j["timing"] = {{"seconds", r.seconds}};
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.verb = j.at("task").at("verb").get<std::string>();
    r.p = j.at("task").at("p").get<std::uint32_t>();
    for (const auto& [k, v] : j.at("task").at("params").items()) r.params[k] = v.get<std::string>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.results = j.at("results");
    r.failures = j.at("failures").get<std::vector<std::string>>();
    if (!j.at("error").is_null()) {
        const json& e = j.at("error");
        ErrorInfo info;
        info.kind = e.at("kind").get<std::string>();
        info.message = e.at("message").get<std::string>();
        if (info.kind == "budget") {
            info.object = e.at("object").get<std::string>();
            info.dimension = e.at("dimension").get<std::uint64_t>();
            info.cap = e.at("cap").get<std::uint64_t>();
        }
        r.error = info;
    }
    r.seconds = j.at("timing").at("seconds").get<double>();
    return r;
}

std::string emit(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

json without_timing(json j) {
    if (j.is_object()) {
        j.erase("timing");
        for (auto& [k, v] : j.items()) v = without_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = without_timing(v);
    }
    return j;
}

Report run_task(const TaskConfig& c, Dumps* dumps) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.verb = c.verb;
    r.p = c.p;
    r.params = c.params;
    try {
        if (c.budget > 0) set_budget(c.budget);
        if (c.verb == "report-suite") {
            Report s = run_suite(c);
            r.results = std::move(s.results);
            r.failures = std::move(s.failures);
        } else {
            VerbResult v = run_verb(c, dumps);
            r.results = std::move(v.results);
            r.failures = std::move(v.failures);
        }
        r.status = r.failures.empty() ? Status::pass : Status::fail;
    } catch (const BudgetError& e) {
        r.error = ErrorInfo{"budget", e.what(), e.object, e.dimension, e.cap};
    } catch (const UsageError& e) {
        r.error = ErrorInfo{"usage", e.what(), "", 0, 0};
    } catch (const InvalidInput& e) {
        r.error = ErrorInfo{"usage", e.what(), "", 0, 0};
    } catch (const std::bad_alloc&) {
        throw;
    } catch (const std::exception& e) {
        r.error = ErrorInfo{"internal", e.what(), "", 0, 0};
    }
    if (r.error) r.status = Status::error;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int exit_code(const Report& r) {
    switch (r.status) {
        case Status::pass: return 0;
        case Status::fail: return 1;
        case Status::error: break;
    }
    if (r.error && r.error->kind == "usage") return 2;
    if (r.error && r.error->kind == "budget") return 3;
    return 1;
}

std::vector<TaskConfig> acceptance_suite() {
    std::vector<TaskConfig> out;
    auto add = [&](const std::string& verb, std::uint32_t p, Params ps) {
        ps["task"] = verb;
        ps["p"] = std::to_string(p);
        out.push_back(make_config({ps}));
    };
    for (const char* d : {"1,0", "0,1", "1,1", "2,1"}) add("cartier", 3, {{"dims", d}, {"n", "1"}});
    for (const char* d : {"1,0", "0,1"}) add("cartier", 3, {{"dims", d}, {"n", "2"}});
    for (const char* d : {"1,0", "2,0", "0,1", "1,1", "2,1"})
        for (int n = 1; n <= 6; ++n) add("homotopy", 3, {{"dims", d}, {"n", std::to_string(n)}});
    add("koszul-kernel", 3, {{"dims", "1,1"}, {"n", "3"}, {"expect", "1,0,1,0"}});
    for (const char* d : {"1,1", "2,0", "2,2"}) add("e1", 3, {{"dims", d}});
    add("e1", 5, {{"dims", "1,1"}});
    for (const char* d : {"1,1", "2,1", "2,2"})
        for (const char* t : {"false", "true"}) add("c1", 3, {{"dims", d}, {"transpose", t}});
    for (const char* d : {"1,1", "2,1"}) add("e1-chainmap", 3, {{"dims", d}});
    add("lie-cohom", 3,
        {{"preset", "two-dim"}, {"max-degree", "6"}, {"expect", "1,1,1,1,1,1,1"}, {"gamma-free", "true"}});
    add("lie-cohom", 3, {{"preset", "odd-abelian:1"}, {"max-degree", "6"}, {"expect", "1,1,1,1,1,1,1"}});
    add("lie-cohom", 3, {{"preset", "odd-abelian:2"}, {"max-degree", "6"}, {"expect", "1,2,3,4,5,6,7"}});
    for (const char* g : {"two-dim", "odd-abelian:1", "odd-abelian:2", "odd-abelian:3", "even-abelian:1"})
        add("bar-ext", 3, {{"preset", g}, {"max-degree", "4"}});
    for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; n <= 2; ++n)
            for (int d = 1; d <= 3; ++d)
                if (m + n > 0)
                    add("schur", 3, {{"dims", std::to_string(m) + "," + std::to_string(n)}, {"d", std::to_string(d)}});
    return out;
}

}  // namespace shom::cli
