#include "verbs.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "superhomology/bar.hpp"
#include "superhomology/complexes.hpp"
#include "superhomology/errors.hpp"
#include "superhomology/extwitness.hpp"
#include "superhomology/liecohom.hpp"
#include "superhomology/schur.hpp"

namespace shom::cli {

namespace {

using nlohmann::json;

std::string list_text(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

void expect_dims(VerbResult& out, const TaskConfig& c, const std::vector<std::size_t>& got, const std::string& what) {
    const auto want = param_counts(c.params, "expect");
    if (want.empty()) return;
    const std::vector<std::size_t> w(want.begin(), want.end());
    if (w != got) out.failures.push_back(what + " " + list_text(got) + " differ from the expected " + list_text(w));
}

SuperSpace standard_space(const TaskConfig& c, const std::string& key = "dims") {
    const auto [m, n] = param_dims(c.params, key);
    check_budget("k^{m|n}", m + n);
    return SuperSpace::standard(m, n);
}

json entries_json(const SparseMatrix& M) {
    json j = json::array();
    for (std::size_t col = 0; col < M.cols(); ++col)
        for (const auto& e : M.col(col)) j.push_back({e.idx, col, e.val});
    return j;
}

VerbResult cartier(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const SuperSpace V = standard_space(c);
    const int n = static_cast<int>(param_count(c.params, "n"));
    const CartierReport r = verify_cartier(F, V, n);
    out.results = {{"h_dims", r.h_dims},
                   {"source_dim", r.source_dim},
                   {"kernel_h_dims", r.kernel_h_dims},
                   {"kernel_source_dim", r.kernel_source_dim},
                   {"cocycles", r.cocycles},
                   {"bijective", r.bijective},
                   {"kernel_iso", r.kernel_iso}};
    out.failures = r.failures;
    expect_dims(out, c, r.h_dims, "H^t(Ω) dims");
    if (dumps) dumps->emplace_back("cartier_map", cartier_map(F, V, n));
    return out;
}

VerbResult homotopy(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const SuperSpace V = standard_space(c);
    const int n = static_cast<int>(param_count(c.params, "n"));
    const DeRhamComplexes C = build_de_rham(F, V, n);
    const HomotopyReport h = verify_homotopy(F, C);
    const auto koszul = cohomology_dims(F, C.koszul);
    out.results = {{"scalar", n % static_cast<int>(F.p())},
                   {"homotopy_ok", h.ok},
                   {"koszul_h_dims", koszul},
                   {"de_rham_h_dims", cohomology_dims(F, C.de_rham)}};
    if (!h.ok) {
        out.failures.push_back(h.message);
        out.results["witness"] = {{"degree", h.bad_i}, {"row", h.row}, {"col", h.col},
                                  {"got", h.got},      {"expected", h.expected}};
    }
    if (n >= 1)
        for (std::size_t i = 0; i < koszul.size(); ++i)
            if (koszul[i] != 0)
                out.failures.push_back("Koszul complex has H of dimension " + std::to_string(koszul[i]) +
                                       " at position " + std::to_string(i));
    if (dumps) {
        for (int i = 0; i < n; ++i) dumps->emplace_back("d" + std::to_string(i), C.d(i));
        for (int i = 1; i <= n; ++i) dumps->emplace_back("kappa" + std::to_string(i), C.kappa(i));
    }
    return out;
}

VerbResult koszul_kernel(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const SuperSpace V = standard_space(c);
    const int p = static_cast<int>(F.p());
    const int n = c.params.at("n").empty() ? p : static_cast<int>(param_count(c.params, "n"));
    const DeRhamComplexes C = build_de_rham(F, V, n);
    const KoszulKernel K = koszul_kernel_complex(F, C);
    std::vector<std::size_t> dims;
    for (const auto& b : K.basis) dims.push_back(b.size());
    const KernelInjectionReport inj = kernel_injection(F, C, K);
    out.results = {{"kernel_dims", dims},
                   {"h_dims", inj.kernel_h_dims},
                   {"image_ranks", inj.image_ranks},
                   {"injective", inj.injective()}};
    if (!inj.injective()) out.failures.push_back("H(K) -> H(Ω) is not injective: ranks " + list_text(inj.image_ranks));
    if (n % p == 0) {
        const CartierReport r = verify_cartier(F, V, n / p);
        out.results["cartier_kernel_iso"] = r.kernel_iso;
        out.results["cartier_kernel_source_dim"] = r.kernel_source_dim;
        if (!r.kernel_iso) out.failures.push_back("K_{n/p}(V^{(1)}) -> H(K_n(V)) is not an isomorphism");
    }
    expect_dims(out, c, inj.kernel_h_dims, "H^i(K) dims");
    if (dumps)
        for (int i = 0; i < n; ++i) dumps->emplace_back("dK" + std::to_string(i), K.complex.d(i));
    return out;
}

// Exponent vector of a random divided-power morphism of total degree `degree`.
Exponents random_exponents(std::mt19937& rng, const SuperSpace& V, const SuperSpace& W, int degree) {
    const std::size_t cells = V.dim() * W.dim();
    Exponents e(cells, 0);
    std::uniform_int_distribution<std::size_t> pick(0, cells - 1);
    std::size_t even = 0;
    for (std::size_t k = 0; k < cells; ++k) even += (W.parity(k / V.dim()) ^ V.parity(k % V.dim())) == 0;
    int left = degree;
    if (even == 0) left = std::min<int>(left, static_cast<int>(cells));
    while (left > 0) {
        const std::size_t k = pick(rng);
        const bool odd = (W.parity(k / V.dim()) ^ V.parity(k % V.dim())) != 0;
        if (odd && e[k] == 1) continue;
        ++e[k];
        --left;
    }
    return e;
}

Exponents parse_entries(const std::string& text, const SuperSpace& V, const SuperSpace& W) {
    Exponents e(V.dim() * W.dim(), 0);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        std::istringstream f(item);
        long i = -1, j = -1, x = -1;
        char c1 = 0, c2 = 0;
        if (!(f >> i >> c1 >> j >> c2 >> x) || c1 != ',' || c2 != ',' || i < 0 || j < 0 || x < 0 ||
            static_cast<std::size_t>(i) >= W.dim() || static_cast<std::size_t>(j) >= V.dim())
            throw UsageError("invalid entry '" + item + "' (expected row,col,exponent inside the matrix)");
        e[i * V.dim() + j] += static_cast<int>(x);
    }
    return e;
}

VerbResult naturality(const TaskConfig& c, const Field& F, Dumps*) {
    VerbResult out;
    const SuperSpace V = standard_space(c);
    const SuperSpace W = c.params.at("target").empty() ? V : standard_space(c, "target");
    if (V.dim() == 0 || W.dim() == 0) throw UsageError("naturality needs nonzero spaces");
    const int p = static_cast<int>(F.p());
    std::vector<Exponents> morphisms;
    if (!c.params.at("seed").empty()) {
        std::mt19937 rng(static_cast<std::uint32_t>(param_count(c.params, "seed")));
        const int degree = c.params.at("degree").empty() ? p : static_cast<int>(param_count(c.params, "degree"));
        for (long k = 0; k < param_count(c.params, "count"); ++k) morphisms.push_back(random_exponents(rng, V, W, degree));
    } else {
        const std::string text = c.params.at("entries").empty() ? "0,0," + std::to_string(p) : c.params.at("entries");
        morphisms.push_back(parse_entries(text, V, W));
    }
    json list = json::array();
    std::size_t checked = 0;
    for (const Exponents& e : morphisms) {
        const NaturalityReport r = cartier_naturality(F, DividedPowerMorphism(V, W, e));
        list.push_back({{"exponents", e}, {"ok", r.ok}, {"checked", r.checked}});
        checked += r.checked;
        for (const auto& f : r.failures) out.failures.push_back("exponents " + json(e).dump() + ": " + f);
        if (!r.ok && r.failures.empty()) out.failures.push_back("exponents " + json(e).dump() + ": not natural");
    }
    out.results = {{"morphisms", list}, {"checked", checked}};
    return out;
}

RestrictedLieSuperalgebra load_lie(const TaskConfig& c, const Field& F) {
    const std::string& path = c.params.at("lie");
    if (path.empty()) return lie_preset(F, c.params.at("preset"));
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read Lie superalgebra file '" + path + "'");
    std::stringstream text;
    text << in.rdbuf();
    return parse_lie(F, text.str());
}

VerbResult lie_cohom(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const RestrictedLieSuperalgebra g = load_lie(c, F);
    const LieReport valid = validate_lie(F, g);
    out.results["valid"] = valid.ok();
    if (!valid.ok()) {
        out.failures = valid.violations;
        return out;
    }
    const int top = static_cast<int>(param_count(c.params, "max-degree"));
    const LieCohomology H = lie_cohomology(F, g, top);
    const XChecks xc = check_X(F, H.X);
    const auto gamma = gamma_coboundary_dims(F, H);
    out.results["dims"] = H.dims;
    out.results["gamma_coboundary_dims"] = gamma;
    out.results["enveloping_dim"] = H.X.V->dim();
    out.results["x_checks"] = xc.ok();
    out.failures = xc.failures;
    expect_dims(out, c, H.dims, "H^i(V(g), k) dims");
    if (param_flag(c.params, "gamma-free"))
        for (std::size_t i = 0; i < gamma.size(); ++i)
            if (gamma[i] != 0)
                out.failures.push_back("degree " + std::to_string(i) + ": " + std::to_string(gamma[i]) +
                                       " S(g_0*(2)) directions are coboundaries");
    if (dumps)
        for (int i = 0; i <= top; ++i) dumps->emplace_back("model_d" + std::to_string(i), H.model.d(i));
    return out;
}

VerbResult bar_ext_verb(const TaskConfig& c, const Field& F, Dumps*) {
    VerbResult out;
    const int top = static_cast<int>(param_count(c.params, "max-degree"));
    const std::string& alg = c.params.at("algebra");
    AugmentedAlgebra A;
    std::optional<RestrictedLieSuperalgebra> g;
    if (!alg.empty()) {
        const std::string prefix = "truncated:";
        if (alg.rfind(prefix, 0) != 0) throw UsageError("algebra must be truncated:<n>");
        TaskConfig tmp;
        tmp.params["n"] = alg.substr(prefix.size());
        const long n = param_count(tmp.params, "n");
        if (n < 1) throw UsageError("truncated:<n> needs n >= 1");
        A = truncated_polynomial(static_cast<std::size_t>(n));
    } else {
        g = load_lie(c, F);
        const EnvelopingAlgebra V(F, *g);
        A = enveloping_structure(V);
    }
    out.failures = check_augmented(F, A);
    const auto dims = bar_ext(F, A, top);
    out.results = {{"algebra_dim", A.dim()}, {"dims", dims}};
    if (g) {
        try {
            const auto lie = lie_cohomology(F, *g, top).dims;
            out.results["lie_cohom_dims"] = lie;
            out.results["agree"] = lie == dims;
            if (lie != dims)
                out.failures.push_back("bar complex gives " + list_text(dims) + " but the X(g) model gives " +
                                       list_text(lie));
        } catch (const InvalidInput& e) {
            out.results["lie_cohom_dims"] = std::string("unavailable: ") + e.what();
        }
    }
    expect_dims(out, c, dims, "bar Ext dims");
    return out;
}

VerbResult e1(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const E1Report r = verify_e1(F, standard_space(c));
    out.results = {{"dims", r.dims}, {"ranks", r.ranks}};
    out.failures = r.failures;
    if (dumps) {
        dumps->emplace_back("p_power", r.p_power);
        dumps->emplace_back("alpha", r.alpha);
        dumps->emplace_back("frobenius", r.frobenius);
    }
    return out;
}

VerbResult c1(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const auto [m, n] = param_dims(c.params, "dims");
    const C1Report r = c1_witness(F, m, n, param_flag(c.params, "transpose"));
    out.results = {{"kernel_dims", r.kernel_dims},
                   {"squares_checked", r.squares_checked},
                   {"squares_commute", r.squares_commute},
                   {"class_nonzero", r.phi_top_nonzero},
                   {"hom_differential_zero", r.hom_differential_zero},
                   {"phi_top", entries_json(r.phi_top)}};
    out.failures = r.failures;
    if (param_flag(c.params, "lift")) {
        const C1LiftReport l = c1_lift_check(F, r);
        out.results["lift"] = {{"lifted", l.lifted}, {"nonzero", l.nonzero}, {"matches", l.matches}};
        for (const auto& f : l.failures) out.failures.push_back("lift: " + f);
    }
    if (dumps) dumps->emplace_back("phi_top", GradedMatrix(r.P.augmentation.codomain(), r.K.spaces.back(), 1, r.phi_top));
    return out;
}

VerbResult e1_chainmap(const TaskConfig& c, const Field& F, Dumps*) {
    VerbResult out;
    const auto [m, n] = param_dims(c.params, "dims");
    const E1ChainReport r = verify_e1_chain_map(F, m, n);
    std::vector<std::size_t> gens;
    for (const auto& s : r.P.generators) gens.push_back(s.dim());
    out.results = {{"squares_checked", r.squares_checked}, {"generators", gens}};
    out.failures = r.failures;
    return out;
}

VerbResult schur(const TaskConfig& c, const Field& F, Dumps* dumps) {
    VerbResult out;
    const auto [m, n] = param_dims(c.params, "dims");
    const int d = static_cast<int>(param_count(c.params, "d"));
    if (m + n == 0 || d < 1) throw UsageError("schur needs m + n >= 1 and d >= 1");
    const SchurAlgebra S = schur_algebra(F, m, n, d);
    const SchurChecks sc = check_schur(F, S, static_cast<std::size_t>(param_count(c.params, "max-triples")));
    const std::uint64_t formula = schur_dimension_formula(m, n, d);
    const GammaHomReport gh = gamma_hom_iso_check(F, S.base, S.base, d);
    out.results = {{"dim", S.dim()},
                   {"gamma_count", formula},
                   {"equivariant", sc.equivariant},
                   {"unit", sc.unit},
                   {"associative", sc.associative},
                   {"triples_checked", sc.triples_checked},
                   {"gamma_hom", {{"gamma_dim", gh.gamma_dim}, {"equivariant_dim", gh.equivariant_dim}, {"rank", gh.rank}}}};
    if (S.dim() != formula)
        out.failures.push_back("centralizer dimension " + std::to_string(S.dim()) + " differs from the Γ^d count " +
                               std::to_string(formula));
    out.failures.insert(out.failures.end(), sc.failures.begin(), sc.failures.end());
    for (const auto& f : gh.failures) out.failures.push_back("Γ^d Hom: " + f);
    if (param_flag(c.params, "modules")) {
        json mods = json::object();
        for (Algebra alg : {Algebra::S, Algebra::Lambda, Algebra::Gamma, Algebra::A}) {
            const SchurModule M = module_action(F, alg, S);
            const auto bad = check_module(F, S, M);
            mods[algebra_name(alg)] = {{"dim", M.space.dim()}, {"ok", bad.empty()}};
            for (const auto& b : bad) out.failures.push_back(algebra_name(alg) + ": " + b);
        }
        out.results["modules"] = mods;
    }
    if (dumps)
        for (std::size_t k = 0; k < S.dim(); ++k) dumps->emplace_back("b" + std::to_string(k), S.basis(k));
    return out;
}

VerbResult bases(const TaskConfig& c, const Field&, Dumps*) {
    VerbResult out;
    const Algebra alg = parse_algebra(c.params.at("algebra"));
    const int d = static_cast<int>(param_count(c.params, "d"));
    auto B = functor_basis(alg, standard_space(c), d);
    json list = json::array();
    for (std::size_t k = 0; k < B->size(); ++k)
        list.push_back({{"label", B->label(k)}, {"parity", B->parity(k)}, {"exponents", B->monomial(k)}});
    out.results = {{"algebra", algebra_name(alg)}, {"size", B->size()}, {"basis", list}};
    return out;
}

}  // namespace

VerbResult run_verb(const TaskConfig& c, Dumps* dumps) {
    const Field F(c.p);
    if (c.verb == "cartier") return cartier(c, F, dumps);
    if (c.verb == "homotopy") return homotopy(c, F, dumps);
    if (c.verb == "koszul-kernel") return koszul_kernel(c, F, dumps);
    if (c.verb == "naturality") return naturality(c, F, dumps);
    if (c.verb == "lie-cohom") return lie_cohom(c, F, dumps);
    if (c.verb == "bar-ext") return bar_ext_verb(c, F, dumps);
    if (c.verb == "e1") return e1(c, F, dumps);
    if (c.verb == "c1") return c1(c, F, dumps);
    if (c.verb == "e1-chainmap") return e1_chainmap(c, F, dumps);
    if (c.verb == "schur") return schur(c, F, dumps);
    if (c.verb == "bases") return bases(c, F, dumps);
    throw UsageError("unknown verb '" + c.verb + "'");
}

}  // namespace shom::cli
