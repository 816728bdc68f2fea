#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "superhomology/errors.hpp"
#include "task.hpp"

using namespace shom::cli;
using nlohmann::json;

namespace {

Report run(Params ps) { return run_task(make_config({ps})); }

std::string random_text(std::mt19937& rng) {
    static const std::vector<std::string> alphabet = {"a", "z", "0", "9", " ", "_", "-", ",", ";", "\"", "\\",
                                                      "/", "{", "]", "\n", "\t", "γ", "Γ", "Λ", "⊗"};
    std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, alphabet.size() - 1);
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
    return s;
}

json random_value(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 2 ? 3 : 5);
    switch (kind(rng)) {
        case 0: return std::uniform_int_distribution<std::uint64_t>(0, 1u << 30)(rng);
        case 1: return std::bernoulli_distribution(0.5)(rng);
        case 2: return random_text(rng);
        case 3: return nullptr;
        case 4: {
            json a = json::array();
            for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) a.push_back(random_value(rng, depth + 1));
            return a;
        }
        default: {
            json o = json::object();
            for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) o[random_text(rng)] = random_value(rng, depth + 1);
            return o;
        }
    }
}

Report random_report(std::mt19937& rng) {
    Report r;
    r.verb = verbs()[std::uniform_int_distribution<std::size_t>(0, verbs().size() - 1)(rng)];
    r.p = std::uniform_int_distribution<std::uint32_t>(3, 65521)(rng);
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) r.params[random_text(rng)] = random_text(rng);
    r.status = static_cast<Status>(std::uniform_int_distribution<int>(0, 2)(rng));
    r.results = json::object();
    for (int k = std::uniform_int_distribution<int>(0, 5)(rng); k > 0; --k) r.results[random_text(rng)] = random_value(rng, 0);
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) r.failures.push_back(random_text(rng));
    if (std::bernoulli_distribution(0.5)(rng)) {
        ErrorInfo e;
        e.kind = std::bernoulli_distribution(0.5)(rng) ? "budget" : "usage";
        e.message = random_text(rng);
        if (e.kind == "budget") {
            e.object = random_text(rng);
            e.dimension = rng();
            e.cap = rng();
        }
        r.error = e;
    }
    r.seconds = std::uniform_real_distribution<double>(0, 100)(rng);
    return r;
}

}  // namespace

TEST_CASE("reports round-trip through JSON") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Report r = random_report(rng);
        const Report back = parse_report(emit(r));
        CHECK(back == r);
        CHECK(emit(back) == emit(r));
    }
}

TEST_CASE("real reports round-trip and are deterministic modulo timing") {
    const std::vector<Params> configs = {
        {{"task", "cartier"}, {"dims", "2,1"}},
        {{"task", "homotopy"}, {"dims", "1,1"}, {"n", "4"}},
        {{"task", "koszul-kernel"}},
        {{"task", "naturality"}, {"dims", "1,1"}, {"target", "2,1"}, {"seed", "5"}, {"count", "4"}},
        {{"task", "lie-cohom"}, {"preset", "odd-abelian:2"}, {"max-degree", "3"}},
        {{"task", "bar-ext"}, {"algebra", "truncated:3"}, {"max-degree", "3"}},
        {{"task", "e1"}, {"dims", "2,1"}},
        {{"task", "c1"}, {"dims", "1,2"}},
        {{"task", "e1-chainmap"}},
        {{"task", "schur"}, {"dims", "1,1"}, {"d", "2"}, {"modules", "true"}},
        {{"task", "bases"}, {"algebra", "Gamma"}},
        {{"task", "cartier"}, {"p", "4"}},
    };
    for (const auto& ps : configs) {
        CAPTURE(ps.at("task"));
        Report a, b;
        try {
            a = run(ps);
            b = run(ps);
        } catch (const UsageError&) {
            CHECK(ps.count("p"));  // only the bad prime should be rejected up front
            continue;
        }
        CHECK(a.status == Status::pass);
        CHECK(parse_report(emit(a)) == a);
        CHECK(without_timing(to_json(a)) == without_timing(to_json(b)));
        CHECK(without_timing(to_json(a)).dump() == without_timing(to_json(b)).dump());
    }
}

TEST_CASE("listed CLI examples") {
    Report c = run({{"task", "cartier"}, {"p", "3"}, {"dims", "1,1"}, {"n", "1"}});
    CHECK(c.status == Status::pass);
    CHECK(c.results["h_dims"] == json({1, 1, 1, 1}));

    Report l = run({{"task", "lie-cohom"}, {"preset", "two-dim"}, {"p", "3"}, {"max-degree", "6"}});
    CHECK(l.status == Status::pass);
    CHECK(l.results["dims"] == json({1, 1, 1, 1, 1, 1, 1}));

    Report h = run({{"task", "homotopy"}, {"p", "3"}, {"dims", "1,1"}, {"n", "3"}});
    CHECK(h.status == Status::pass);
    CHECK(h.results["scalar"] == 0);
    CHECK(exit_code(h) == 0);
}

TEST_CASE("config layers: later layers override earlier ones") {
    std::istringstream file("# comment\ntask = cartier\np=5\n\ndims=1,0\nn=2\n");
    const Params fromfile = parse_key_values(file);
    CHECK(fromfile.at("task") == "cartier");
    CHECK(fromfile.at("dims") == "1,0");
    const TaskConfig c = make_config({fromfile, {{"dims", "0,1"}, {"budget", "999"}}});
    CHECK(c.p == 5);
    CHECK(c.params.at("dims") == "0,1");
    CHECK(c.params.at("n") == "2");
    CHECK(c.budget == 999);
    CHECK(c.params.at("expect").empty());

    std::istringstream broken("task=cartier\nno equals sign\n");
    CHECK_THROWS_AS(parse_key_values(broken), UsageError);
}

TEST_CASE("invalid configurations are usage errors") {
    CHECK_THROWS_AS(make_config({{}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "frobnicate"}}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "cartier"}, {"p", "9"}}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "cartier"}, {"p", "2"}}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "cartier"}, {"dims", "1"}}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "cartier"}, {"n", "-1"}}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "cartier"}, {"d", "2"}}}), UsageError);
    CHECK_THROWS_AS(make_config({{{"task", "c1"}, {"transpose", "maybe"}}}), UsageError);

    // Values that pass the type check but not the library become usage errors at run time.
    Report r = run({{"task", "lie-cohom"}, {"preset", "nonsense"}});
    CHECK(r.status == Status::error);
    REQUIRE(r.error.has_value());
    CHECK(r.error->kind == "usage");
    CHECK(exit_code(r) == 2);
    Report e = run({{"task", "naturality"}, {"entries", "5,0,3"}});
    CHECK(exit_code(e) == 2);
}

TEST_CASE("budget exhaustion is a structured error with exit code 3") {
    const std::size_t saved = shom::budget();
    Report r = run({{"task", "schur"}, {"dims", "2,2"}, {"d", "4"}});
    CHECK(r.status == Status::error);
    REQUIRE(r.error.has_value());
    CHECK(r.error->kind == "budget");
    CHECK(r.error->dimension == 65536);
    CHECK(r.error->cap == saved);
    CHECK(exit_code(r) == 3);
    CHECK(parse_report(emit(r)) == r);

    Report s = run({{"task", "cartier"}, {"dims", "2,1"}, {"budget", "10"}});
    CHECK(exit_code(s) == 3);
    CHECK(s.error->cap == 10);
    shom::set_budget(saved);
}

TEST_CASE("failures give exit code 1") {
    Report r = run({{"task", "koszul-kernel"}, {"expect", "1,1,1,1"}});
    CHECK(r.status == Status::fail);
    CHECK(exit_code(r) == 1);
    CHECK(r.failures.size() == 1);
}

TEST_CASE("dumps are produced on request") {
    Dumps d;
    run_task(make_config({{{"task", "e1"}, {"dims", "1,1"}}}), &d);
    REQUIRE(d.size() == 3);
    CHECK(d[0].first == "p_power");
    const std::string text = shom::dump_string(shom::Field(3), d[0].second);
    CHECK(text.rfind("gmatrix p=3", 0) == 0);
}

TEST_CASE("report-suite passes and does not depend on the job count") {
    Report one = run({{"task", "report-suite"}, {"jobs", "1"}});
    Report many = run({{"task", "report-suite"}, {"jobs", "4"}});
    CHECK(one.status == Status::pass);
    CHECK(one.failures.empty());
    CHECK(one.results["passed"] == one.results["total"]);
    CHECK(one.results["total"] == acceptance_suite().size());
    json a = without_timing(to_json(one)), b = without_timing(to_json(many));
    a["task"].erase("params");
    b["task"].erase("params");
    CHECK(a == b);
}
