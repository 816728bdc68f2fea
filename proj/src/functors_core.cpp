#include <algorithm>
#include <map>
#include <mutex>

#include "superhomology/errors.hpp"
#include "superhomology/functors.hpp"

namespace shom {

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::S: return "S";
        case Algebra::Lambda: return "Lambda";
        case Algebra::Gamma: return "Gamma";
        case Algebra::A: return "A";
    }
    return "?";
}

Algebra parse_algebra(const std::string& s) {
    if (s == "S") return Algebra::S;
    if (s == "Lambda" || s == "L" || s == "Λ") return Algebra::Lambda;
    if (s == "Gamma" || s == "G" || s == "Γ") return Algebra::Gamma;
    if (s == "A") return Algebra::A;
    throw InvalidInput("unknown algebra '" + s + "' (expected S, Lambda, Gamma or A)");
}

bool bounds_odd(Algebra a) { return a == Algebra::S || a == Algebra::Gamma; }
bool exterior_type(Algebra a) { return a == Algebra::Lambda || a == Algebra::A; }
bool is_sub_type(Algebra a) { return a == Algebra::Gamma || a == Algebra::A; }

int MonomialIndex::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

namespace {

std::string exps_key(const Exponents& e) {
    return std::string(reinterpret_cast<const char*>(e.data()), e.size() * sizeof(int));
}

bool bounded_letter(Algebra alg, int parity) { return bounds_odd(alg) ? parity == 1 : parity == 0; }

void enumerate(Algebra alg, const SuperSpace& V, std::size_t i, int left, Exponents& cur,
               std::vector<Exponents>& out) {
    if (i == V.dim()) {
        if (left == 0) {
            out.push_back(cur);
            check_budget(algebra_name(alg) + " basis", out.size());
        }
        return;
    }
    int top = bounded_letter(alg, V.parity(i)) ? std::min(left, 1) : left;
    for (int e = top; e >= 0; --e) {
        cur[i] = e;
        enumerate(alg, V, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

int monomial_parity(const SuperSpace& V, const Exponents& e) {
    int par = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (V.parity(i)) par ^= e[i] & 1;
    return par;
}

std::string monomial_label(Algebra alg, const SuperSpace& V, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "·";
        bool divided = (alg == Algebra::Gamma) || (alg == Algebra::A && V.parity(i) == 1);
        if (divided) s += "γ" + std::to_string(e[i]) + "(" + V.label(i) + ")";
        else s += e[i] == 1 ? V.label(i) : V.label(i) + "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

FunctorBasis::FunctorBasis(Algebra alg, const SuperSpace& V, int n) : alg_(alg), V_(V), n_(n) {
    if (n < 0) throw InvalidInput("functor degree must be non-negative");
    Exponents cur(V.dim(), 0);
    enumerate(alg, V, 0, n, cur, monos_);
    std::vector<std::string> labels;
    std::vector<int> pars;
    for (std::size_t i = 0; i < monos_.size(); ++i) {
        lookup_.emplace(exps_key(monos_[i]), i);
        labels.push_back(monomial_label(alg, V, monos_[i]));
        pars.push_back(monomial_parity(V, monos_[i]));
    }
    space_ = SuperSpace(std::move(labels), std::move(pars));
}

long FunctorBasis::index_of(const Exponents& e) const {
    auto it = lookup_.find(exps_key(e));
    return it == lookup_.end() ? -1 : static_cast<long>(it->second);
}

int FunctorBasis::parity(std::size_t i) const { return space_.parity(i); }
std::string FunctorBasis::label(std::size_t i) const { return space_.label(i); }

std::vector<std::uint32_t> FunctorBasis::word(std::size_t i) const {
    std::vector<std::uint32_t> w;
    for (std::size_t j = 0; j < monos_[i].size(); ++j)
        for (int k = 0; k < monos_[i][j]; ++k) w.push_back(static_cast<std::uint32_t>(j));
    return w;
}

BasisPtr functor_basis(Algebra alg, const SuperSpace& V, int n) {
    static std::mutex mu;
    static std::map<std::string, BasisPtr> cache;
    std::string key = algebra_name(alg) + "|" + std::to_string(n);
    for (std::size_t i = 0; i < V.dim(); ++i) key += "|" + V.label(i) + ":" + std::to_string(V.parity(i));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto b = std::make_shared<const FunctorBasis>(alg, V, n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, b).first->second;
}

FunctorElement monomial_element(BasisPtr b, const Exponents& e, Elt c) {
    long i = b->index_of(e);
    if (i < 0) throw InvalidInput("not a basis monomial of " + algebra_name(b->algebra()));
    FunctorElement x{std::move(b), {}};
    if (c) x.coeffs.push_back({static_cast<std::uint32_t>(i), c});
    return x;
}

namespace {

// Parity of the sign from moving the letters of b (right factor) left past the larger
// letters of a: pairs (u in a, w in b, w < u).
bool crossing_odd(Algebra alg, const SuperSpace& V, const Exponents& a, const Exponents& b) {
    const bool ext = exterior_type(alg);
    long long count = 0;
    long long below_all = 0, below_odd = 0;
    for (std::size_t u = 0; u < a.size(); ++u) {
        if (a[u]) count += static_cast<long long>(a[u]) * ((V.parity(u) ? below_odd : 0) + (ext ? below_all : 0));
        below_all += b[u];
        if (V.parity(u)) below_odd += b[u];
    }
    return count & 1;
}

}  // namespace

MonoProduct monomial_product(const Field& F, Algebra alg, const SuperSpace& V, const Exponents& a,
                             const Exponents& b) {
    MonoProduct r{0, Exponents(a.size())};
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.exponents[i] = a[i] + b[i];
        if (bounded_letter(alg, V.parity(i)) && r.exponents[i] > 1) return r;
    }
    Elt c = F.sign(crossing_odd(alg, V, a, b));
    if (is_sub_type(alg))
        for (std::size_t i = 0; i < a.size(); ++i) c = F.mul(c, F.binomial(r.exponents[i], a[i]));
    r.coeff = c;
    return r;
}

Elt coproduct_coefficient(const Field& F, Algebra alg, const SuperSpace& V, const Exponents& a,
                          const Exponents& b) {
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i] || b[i] < 0) return 0;
        c[i] = a[i] - b[i];
    }
    Elt coeff = F.sign(crossing_odd(alg, V, b, c));
    // Quotient algebras carry binomials on their unbounded letters.
    if (!is_sub_type(alg))
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!bounded_letter(alg, V.parity(i))) coeff = F.mul(coeff, F.binomial(a[i], b[i]));
    return coeff;
}

static void require_same(const FunctorElement& a, const FunctorElement& b) {
    if (a.basis->algebra() != b.basis->algebra()) throw InvalidInput("product of different algebras");
    if (!(a.basis->base() == b.basis->base())) throw InvalidInput("product over different spaces");
}

FunctorElement multiply(const Field& F, const FunctorElement& a, const FunctorElement& b) {
    require_same(a, b);
    const Algebra alg = a.basis->algebra();
    const SuperSpace& V = a.basis->base();
    FunctorElement out{functor_basis(alg, V, a.basis->degree() + b.basis->degree()), {}};
    SparseAccumulator acc(F);
    for (const auto& ea : a.coeffs)
        for (const auto& eb : b.coeffs) {
            auto pr = monomial_product(F, alg, V, a.basis->monomial(ea.idx), b.basis->monomial(eb.idx));
            if (!pr.coeff) continue;
            acc.add(static_cast<std::uint32_t>(out.basis->index_of(pr.exponents)),
                    F.mul(pr.coeff, F.mul(ea.val, eb.val)));
        }
    out.coeffs = acc.take();
    return out;
}

namespace {

// All b <= a with |b| = k.
void sub_exponents(const Exponents& a, std::size_t i, int k, Exponents& cur, std::vector<Exponents>& out) {
    if (i == a.size()) {
        if (k == 0) out.push_back(cur);
        return;
    }
    for (int e = std::min(a[i], k); e >= 0; --e) {
        cur[i] = e;
        sub_exponents(a, i + 1, k - e, cur, out);
    }
    cur[i] = 0;
}

Exponents minus(const Exponents& a, const Exponents& b) {
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

}  // namespace

std::vector<TensorElement> coproduct(const Field& F, const FunctorElement& x) {
    const Algebra alg = x.basis->algebra();
    const SuperSpace& V = x.basis->base();
    const int n = x.basis->degree();
    std::vector<TensorElement> out;
    for (int i = 0; i <= n; ++i) {
        TensorElement t{functor_basis(alg, V, i), functor_basis(alg, V, n - i), {}};
        SparseAccumulator acc(F);
        for (const auto& e : x.coeffs) {
            const Exponents& a = x.basis->monomial(e.idx);
            std::vector<Exponents> subs;
            Exponents cur(a.size(), 0);
            sub_exponents(a, 0, i, cur, subs);
            for (const auto& b : subs) {
                Elt c = coproduct_coefficient(F, alg, V, a, b);
                if (!c) continue;
                std::size_t l = t.left->index_of(b), r = t.right->index_of(minus(a, b));
                acc.add(static_cast<std::uint32_t>(l * t.right->size() + r), F.mul(c, e.val));
            }
        }
        t.coeffs = acc.take();
        out.push_back(std::move(t));
    }
    return out;
}

GradedMatrix product_matrix(const Field& F, Algebra alg, const SuperSpace& V, int i, int j) {
    auto Bi = functor_basis(alg, V, i), Bj = functor_basis(alg, V, j), Bn = functor_basis(alg, V, i + j);
    SuperSpace dom = tensor(Bi->space(), Bj->space());
    SparseMatrix m(Bn->size(), dom.dim());
    for (std::size_t a = 0; a < Bi->size(); ++a)
        for (std::size_t b = 0; b < Bj->size(); ++b) {
            auto pr = monomial_product(F, alg, V, Bi->monomial(a), Bj->monomial(b));
            if (!pr.coeff) continue;
            m.set_col(a * Bj->size() + b, {{static_cast<std::uint32_t>(Bn->index_of(pr.exponents)), pr.coeff}});
        }
    return GradedMatrix(dom, Bn->space(), 0, std::move(m));
}

GradedMatrix coproduct_matrix(const Field& F, Algebra alg, const SuperSpace& V, int i, int j) {
    auto Bi = functor_basis(alg, V, i), Bj = functor_basis(alg, V, j), Bn = functor_basis(alg, V, i + j);
    SuperSpace cod = tensor(Bi->space(), Bj->space());
    SparseMatrix m(cod.dim(), Bn->size());
    for (std::size_t k = 0; k < Bn->size(); ++k) {
        const Exponents& a = Bn->monomial(k);
        std::vector<Exponents> subs;
        Exponents cur(a.size(), 0);
        sub_exponents(a, 0, i, cur, subs);
        SparseVec col;
        for (const auto& b : subs) {
            Elt c = coproduct_coefficient(F, alg, V, a, b);
            if (c)
                col.push_back({static_cast<std::uint32_t>(Bi->index_of(b) * Bj->size() + Bj->index_of(minus(a, b))), c});
        }
        std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.idx < y.idx; });
        m.set_col(k, std::move(col));
    }
    return GradedMatrix(Bn->space(), cod, 0, std::move(m));
}

Elt duality_pairing(const Field& F, const SuperSpace& V, const Exponents& s, const Exponents& g) {
    int ds = 0, dg = 0;
    for (int e : s) ds += e;
    for (int e : g) dg += e;
    if (ds != dg) throw InvalidInput("pairing of monomials of different degrees");
    if (ds <= 4) return duality_pairing_tensor(F, V, s, g);
    if (s != g) return 0;
    // Multiplicativity in the odd letters: k odd letters contribute (-1)^{k(k+1)/2}.
    long long k = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (V.parity(i)) k += s[i];
    return F.sign((k * (k + 1) / 2) & 1);
}

FunctorElement symmetrize(const Field& F, const FunctorElement& x) {
    Algebra from = x.basis->algebra();
    if (is_sub_type(from)) throw InvalidInput("symmetrize expects an element of S or Lambda");
    Algebra to = from == Algebra::S ? Algebra::Gamma : Algebra::A;
    const SuperSpace& V = x.basis->base();
    FunctorElement out{functor_basis(to, V, x.basis->degree()), {}};
    SparseAccumulator acc(F);
    for (const auto& e : x.coeffs) {
        // Multiply the images γ_1 of the letters of the sorted word from left to right.
        Exponents cur(V.dim(), 0);
        Elt c = e.val;
        for (std::uint32_t letter : x.basis->word(e.idx)) {
            Exponents unit(V.dim(), 0);
            unit[letter] = 1;
            auto pr = monomial_product(F, to, V, cur, unit);
            c = F.mul(c, pr.coeff);
            cur = pr.exponents;
            if (!c) break;
        }
        if (c) acc.add(static_cast<std::uint32_t>(out.basis->index_of(cur)), c);
    }
    out.coeffs = acc.take();
    return out;
}

GradedMatrix symmetrize_matrix(const Field& F, Algebra from, const SuperSpace& V, int n) {
    auto B = functor_basis(from, V, n);
    Algebra to = from == Algebra::S ? Algebra::Gamma : Algebra::A;
    auto T = functor_basis(to, V, n);
    SparseMatrix m(T->size(), B->size());
    for (std::size_t i = 0; i < B->size(); ++i)
        m.set_col(i, symmetrize(F, FunctorElement{B, {{static_cast<std::uint32_t>(i), 1}}}).coeffs);
    return GradedMatrix(B->space(), T->space(), 0, std::move(m));
}

namespace {

// Image of γ_a(x) for one even letter under the dual Frobenius, as (coefficient, exponent in
// the twisted letter). γ_a = Π_e γ_{p^e}^{c_e} / c_e! over the base-p digits c_e of a.
std::pair<Elt, int> frobenius_letter(const Field& F, const SuperSpace& Vr, std::size_t letter, int a, int r,
                                     long long q) {
    const long long p = F.p();
    Elt coeff = 1;
    Exponents cur(Vr.dim(), 0);
    long long pe = 1;
    for (int e = 0; a > 0; ++e, pe *= p) {
        int c = static_cast<int>(a % p);
        a /= static_cast<int>(p);
        if (!c) continue;
        if (e < r) return {0, 0};
        coeff = F.mul(coeff, F.inv_factorial(c));
        Exponents g(Vr.dim(), 0);
        g[letter] = static_cast<int>(pe / q);
        for (int t = 0; t < c; ++t) {
            auto pr = monomial_product(F, Algebra::Gamma, Vr, cur, g);
            coeff = F.mul(coeff, pr.coeff);
            cur = pr.exponents;
        }
    }
    return {coeff, cur[letter]};
}

}  // namespace

FunctorElement dual_frobenius(const Field& F, const FunctorElement& x, int r) {
    if (x.basis->algebra() != Algebra::Gamma) throw InvalidInput("dual Frobenius acts on Gamma");
    if (r < 1) throw InvalidInput("dual Frobenius needs r >= 1");
    const SuperSpace& V = x.basis->base();
    SuperSpace Vr = twist(V, r);
    long long q = 1;
    for (int t = 0; t < r; ++t) q *= F.p();
    const int n = x.basis->degree();
    FunctorElement out{functor_basis(Algebra::Gamma, Vr, n % q == 0 ? static_cast<int>(n / q) : 0), {}};
    if (n % q != 0) return out;
    SparseAccumulator acc(F);
    for (const auto& e : x.coeffs) {
        const Exponents& a = x.basis->monomial(e.idx);
        Elt c = e.val;
        Exponents img(V.dim(), 0);
        for (std::size_t i = 0; i < a.size() && c; ++i) {
            if (!a[i]) continue;
            if (V.parity(i)) {
                c = 0;
                break;
            }
            auto [fc, fe] = frobenius_letter(F, Vr, i, a[i], r, q);
            c = F.mul(c, fc);
            img[i] = fe;
        }
        // Distinct even letters commute without signs, so the letter images just multiply.
        if (c) acc.add(static_cast<std::uint32_t>(out.basis->index_of(img)), c);
    }
    out.coeffs = acc.take();
    return out;
}

GradedMatrix dual_frobenius_matrix(const Field& F, const SuperSpace& V, int n, int r) {
    auto B = functor_basis(Algebra::Gamma, V, n);
    FunctorElement probe{B, {}};
    BasisPtr T = dual_frobenius(F, probe, r).basis;
    SparseMatrix m(T->size(), B->size());
    for (std::size_t i = 0; i < B->size(); ++i)
        m.set_col(i, dual_frobenius(F, FunctorElement{B, {{static_cast<std::uint32_t>(i), 1}}}, r).coeffs);
    return GradedMatrix(B->space(), T->space(), 0, std::move(m));
}

GradedMatrix p_power_matrix(const Field& F, const SuperSpace& V, int r) {
    long long q = 1;
    for (int t = 0; t < r; ++t) q *= F.p();
    auto B = functor_basis(Algebra::S, V, static_cast<int>(q));
    SuperSpace Vr = twist(V, r);
    SparseMatrix m(B->size(), V.dim());
    for (std::size_t i = 0; i < V.dim(); ++i) {
        if (V.parity(i)) continue;
        Exponents e(V.dim(), 0);
        e[i] = static_cast<int>(q);
        m.set_col(i, {{static_cast<std::uint32_t>(B->index_of(e)), 1}});
    }
    return GradedMatrix(Vr, B->space(), 0, std::move(m));
}

FunctorElement p_power(const Field& F, const SuperSpace& V, const SparseVec& v, int r) {
    // Raise the degree-one element to the p^r-th power by repeated multiplication in S(V).
    long long q = 1;
    for (int t = 0; t < r; ++t) q *= F.p();
    FunctorElement x{functor_basis(Algebra::S, V, 1), {}};
    for (const auto& e : v) {
        Exponents u(V.dim(), 0);
        u[e.idx] = 1;
        x.coeffs.push_back({static_cast<std::uint32_t>(x.basis->index_of(u)), e.val});
    }
    std::sort(x.coeffs.begin(), x.coeffs.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
    FunctorElement acc{functor_basis(Algebra::S, V, 0), {{0, 1}}};
    for (long long t = 0; t < q; ++t) acc = multiply(F, acc, x);
    return acc;
}

}  // namespace shom
