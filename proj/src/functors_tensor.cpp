#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "superhomology/errors.hpp"
#include "superhomology/functors.hpp"

namespace shom {

namespace {

// Minimal permutation taking the block word `orig` to the arrangement `arr`: position i of the
// arrangement receives the next unused position of orig holding the same label.
Perm arrangement_perm(const std::vector<std::uint32_t>& orig, const std::vector<std::uint32_t>& arr) {
    std::unordered_map<std::uint32_t, std::vector<int>> slots;
    for (int i = static_cast<int>(orig.size()) - 1; i >= 0; --i) slots[orig[i]].push_back(i);
    Perm s(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto& v = slots[arr[i]];
        s[i] = v.back();
        v.pop_back();
    }
    return s;
}

std::vector<int> word_parities(const SuperSpace& V, const Word& w) {
    std::vector<int> p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) p[i] = V.parity(w[i]);
    return p;
}

std::uint64_t word_index(const Word& w, std::size_t base) {
    std::uint64_t idx = 0;
    for (auto l : w) idx = idx * base + l;
    return idx;
}

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

// Exponent vector of a sorted word.
Exponents word_exponents(const Word& w, std::size_t dim) {
    Exponents e(dim, 0);
    for (auto l : w) ++e[l];
    return e;
}

// Signed orbit sum of a sorted word (Γ: Koszul signs; A: times the permutation sign).
std::vector<std::pair<Word, Elt>> orbit(const Field& F, const SuperSpace& V, const Word& sorted, bool with_perm_sign) {
    std::vector<std::pair<Word, Elt>> out;
    Word arr = sorted;
    auto par = word_parities(V, sorted);
    std::size_t count = 0;
    do {
        Perm s = arrangement_perm(sorted, arr);
        bool neg = koszul_sign_odd(par, s);
        if (with_perm_sign && perm_sign(s) < 0) neg = !neg;
        out.push_back({arr, F.sign(neg)});
        check_budget("orbit of a tensor monomial", ++count);
    } while (std::next_permutation(arr.begin(), arr.end()));
    return out;
}

}  // namespace

std::vector<std::pair<Word, Elt>> embed_monomial(const Field& F, const FunctorBasis& b, std::size_t i) {
    Word w = b.word(i);
    if (!is_sub_type(b.algebra())) return {{w, 1}};
    return orbit(F, b.base(), w, b.algebra() == Algebra::A);
}

std::pair<long, Elt> project_word(const Field& F, const FunctorBasis& b, const Word& w) {
    const SuperSpace& V = b.base();
    const bool ext = exterior_type(b.algebra());
    bool neg = false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) neg ^= ((V.parity(w[i]) & V.parity(w[j])) != 0) ^ ext;
    long idx = b.index_of(word_exponents(w, V.dim()));
    if (idx < 0) return {-1, 0};
    return {idx, F.sign(neg)};
}

namespace {

// Coefficient a word contributes to a basis monomial: sub types read only sorted words
// of an invariant tensor, quotient types project.
std::pair<long, Elt> read_word(const Field& F, const FunctorBasis& b, const Word& w) {
    if (!is_sub_type(b.algebra())) return project_word(F, b, w);
    if (!is_sorted_word(w)) return {-1, 0};
    return {b.index_of(word_exponents(w, b.base().dim())), 1};
}

// Reads an invariant tensor (sub type) or projects a tensor (quotient type) into the basis.
class Reader {
public:
    Reader(const Field& F, BasisPtr b) : F_(F), b_(std::move(b)), acc_(F) {}
    void add(const Word& w, Elt c) {
        if (!c) return;
        auto [idx, s] = read_word(F_, *b_, w);
        if (idx >= 0) acc_.add(static_cast<std::uint32_t>(idx), F_.mul(s, c));
    }
    SparseVec take() { return acc_.take(); }

private:
    const Field& F_;
    BasisPtr b_;
    SparseAccumulator acc_;
};

FunctorElement multiply_tensor_impl(const Field& F, const FunctorElement& a, const FunctorElement& b, bool twisted) {
    const Algebra alg = a.basis->algebra();
    const SuperSpace& V = a.basis->base();
    const int i = a.basis->degree(), j = b.basis->degree();
    FunctorElement out{functor_basis(alg, V, i + j), {}};
    Reader rd(F, out.basis);
    // Shuffles: arrangements of the block labels 0^i 1^j.
    Word blocks(i, 0);
    blocks.insert(blocks.end(), j, 1);
    std::vector<Perm> shuffles;
    if (is_sub_type(alg)) {
        Word arr = blocks;
        Perm h = perm_identity(i + j);
        if (twisted) std::reverse(h.begin(), h.begin() + i);
        do shuffles.push_back(perm_compose(h, arrangement_perm(blocks, arr)));
        while (std::next_permutation(arr.begin(), arr.end()));
    } else {
        shuffles.push_back(perm_identity(i + j));
    }
    for (const auto& ea : a.coeffs)
        for (const auto& eb : b.coeffs) {
            Elt c0 = F.mul(ea.val, eb.val);
            for (const auto& [wa, ca] : embed_monomial(F, *a.basis, ea.idx))
                for (const auto& [wb, cb] : embed_monomial(F, *b.basis, eb.idx)) {
                    Word u = wa;
                    u.insert(u.end(), wb.begin(), wb.end());
                    auto par = word_parities(V, u);
                    Elt c = F.mul(c0, F.mul(ca, cb));
                    for (const auto& s : shuffles) {
                        Word v(u.size());
                        for (std::size_t k = 0; k < u.size(); ++k) v[k] = u[s[k]];
                        bool neg = koszul_sign_odd(par, s);
                        if (alg == Algebra::A && perm_sign(s) < 0) neg = !neg;
                        rd.add(v, neg ? F.neg(c) : c);
                    }
                }
        }
    out.coeffs = rd.take();
    return out;
}

}  // namespace

FunctorElement multiply_tensor(const Field& F, const FunctorElement& a, const FunctorElement& b) {
    return multiply_tensor_impl(F, a, b, false);
}

FunctorElement multiply_tensor_twisted(const Field& F, const FunctorElement& a, const FunctorElement& b) {
    return multiply_tensor_impl(F, a, b, true);
}

Elt duality_pairing_tensor(const Field& F, const SuperSpace& V, const Exponents& s, const Exponents& g) {
    auto Bs = functor_basis(Algebra::S, V, std::accumulate(s.begin(), s.end(), 0));
    SuperSpace Vd = dual(V);
    auto Bg = functor_basis(Algebra::Gamma, Vd, std::accumulate(g.begin(), g.end(), 0));
    long is = Bs->index_of(s), ig = Bg->index_of(g);
    if (is < 0 || ig < 0) throw InvalidInput("pairing arguments are not basis monomials");
    if (Bg->degree() > 6) throw InvalidInput("tensor pairing limited to degree 6");
    Word v = Bs->word(is);
    int pv = monomial_parity(V, s), pg = monomial_parity(Vd, g);
    Elt total = 0;
    for (const auto& [f, c] : embed_monomial(F, *Bg, ig)) {
        if (f != v) continue;  // dual basis: f_i(v_i) vanishes unless the letters match
        // (f_1⊗..⊗f_n)(v_1⊗..⊗v_n) = Π_{i<j} (-1)^{|f_j||v_i|} Π f_i(v_i), and ⟨v, f⟩ = (-1)^{|v||f|} f(v).
        bool neg = (pv & pg) != 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (Vd.parity(f[j]) && V.parity(v[i])) neg = !neg;
        total = F.add(total, neg ? F.neg(c) : c);
    }
    return total;
}

// --- divided-power morphisms ---------------------------------------------------------------

DividedPowerMorphism::DividedPowerMorphism(SuperSpace V, SuperSpace W, std::vector<int> exponents)
    : V_(std::move(V)), W_(std::move(W)), exps_(std::move(exponents)) {
    if (exps_.size() != V_.dim() * W_.dim()) throw InvalidInput("exponent table has the wrong size");
    for (std::size_t i = 0; i < W_.dim(); ++i)
        for (std::size_t j = 0; j < V_.dim(); ++j) {
            int a = exps_[i * V_.dim() + j];
            if (a < 0) throw InvalidInput("negative exponent in a divided-power morphism");
            if ((W_.parity(i) ^ V_.parity(j)) && a > 1)
                throw InvalidInput("odd matrix unit e_" + std::to_string(i) + std::to_string(j) +
                                   " has exponent above 1");
            d_ += a;
        }
}

std::vector<DividedPowerMorphism> DividedPowerMorphism::identity_terms(const SuperSpace& V, int d) {
    auto B = functor_basis(Algebra::S, SuperSpace(std::vector<std::string>(V.labels()),
                                                  std::vector<int>(V.dim(), 0)),
                           d);
    std::vector<DividedPowerMorphism> out;
    for (const auto& e : B->monomials()) {
        std::vector<int> ex(V.dim() * V.dim(), 0);
        for (std::size_t i = 0; i < V.dim(); ++i) ex[i * V.dim() + i] = e[i];
        out.emplace_back(V, V, std::move(ex));
    }
    return out;
}

int DividedPowerMorphism::parity() const {
    int par = 0;
    for (std::size_t i = 0; i < W_.dim(); ++i)
        for (std::size_t j = 0; j < V_.dim(); ++j)
            if (W_.parity(i) ^ V_.parity(j)) par ^= exps_[i * V_.dim() + j] & 1;
    return par;
}

namespace {

struct UnitTable {
    std::vector<std::uint32_t> src, tgt;
    std::vector<int> par, count;
    Word blocks;  // unit labels in block order
};

UnitTable unit_table(const DividedPowerMorphism& phi) {
    UnitTable t;
    const auto& V = phi.source();
    const auto& W = phi.target();
    for (std::size_t i = 0; i < W.dim(); ++i)
        for (std::size_t j = 0; j < V.dim(); ++j) {
            int a = phi.exponent(i, j);
            if (!a) continue;
            std::uint32_t k = static_cast<std::uint32_t>(t.src.size());
            t.src.push_back(static_cast<std::uint32_t>(j));
            t.tgt.push_back(static_cast<std::uint32_t>(i));
            t.par.push_back(W.parity(i) ^ V.parity(j));
            t.count.push_back(a);
            t.blocks.insert(t.blocks.end(), a, k);
        }
    return t;
}

void assign(const Field& F, const UnitTable& t, const SuperSpace& V, const Word& w, std::size_t pos, Word& arr,
            std::vector<int>& left, std::vector<std::pair<Word, Elt>>& out) {
    if (pos == w.size()) {
        Perm s = arrangement_perm(t.blocks, arr);
        std::vector<int> bpar(t.blocks.size());
        for (std::size_t k = 0; k < t.blocks.size(); ++k) bpar[k] = t.par[t.blocks[k]];
        bool neg = koszul_sign_odd(bpar, s);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (V.parity(w[i]))
                for (std::size_t j = i + 1; j < w.size(); ++j)
                    if (t.par[arr[j]]) neg = !neg;
        Word img(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) img[k] = t.tgt[arr[k]];
        out.push_back({std::move(img), F.sign(neg)});
        return;
    }
    for (std::uint32_t k = 0; k < t.src.size(); ++k) {
        if (!left[k] || t.src[k] != w[pos]) continue;
        --left[k];
        arr[pos] = k;
        assign(F, t, V, w, pos + 1, arr, left, out);
        ++left[k];
    }
}

}  // namespace

std::vector<std::pair<Word, Elt>> apply_to_word(const Field& F, const DividedPowerMorphism& phi, const Word& w) {
    if (static_cast<int>(w.size()) != phi.degree()) throw InvalidInput("word length differs from morphism degree");
    UnitTable t = unit_table(phi);
    std::vector<std::pair<Word, Elt>> out;
    Word arr(w.size());
    std::vector<int> left = t.count;
    assign(F, t, phi.source(), w, 0, arr, left, out);
    return out;
}

GradedMatrix morphism_matrix(const Field& F, const DividedPowerMorphism& phi) {
    const int d = phi.degree();
    const auto& V = phi.source();
    const auto& W = phi.target();
    SuperSpace TV = tensor_power(V, d), TW = tensor_power(W, d);
    check_budget("tensor power", std::max(TV.dim(), TW.dim()));
    SparseMatrix m(TW.dim(), TV.dim());
    for (std::size_t c = 0; c < TV.dim(); ++c) {
        auto dig = tensor_digits(c, V.dim(), d);
        Word w(dig.begin(), dig.end());
        SparseAccumulator acc(F);
        for (const auto& [img, s] : apply_to_word(F, phi, w))
            acc.add(static_cast<std::uint32_t>(word_index(img, W.dim())), s);
        m.set_col(c, acc.take());
    }
    return GradedMatrix(TV, TW, phi.parity(), std::move(m));
}

GradedMatrix morphism_matrix_conjugation(const Field& F, const DividedPowerMorphism& phi, bool twisted) {
    const int d = phi.degree();
    const auto& V = phi.source();
    const auto& W = phi.target();
    UnitTable t = unit_table(phi);
    SuperSpace TV = tensor_power(V, d), TW = tensor_power(W, d);
    // T = e_{k1} ⊗ e_{k2} ⊗ ... in block order, as a map V^{⊗d} -> W^{⊗d}.
    GradedMatrix T;
    for (std::size_t k = 0; k < t.blocks.size(); ++k) {
        std::uint32_t u = t.blocks[k];
        auto e = GradedMatrix::from_triples(F, V, W, t.par[u], {{t.tgt[u], t.src[u], 1}});
        T = k == 0 ? e : tensor_of_maps(F, T, e);
    }
    // h reverses the first block of size > 1, an element of the Young subgroup.
    Perm h = perm_identity(d);
    if (twisted) {
        std::size_t start = 0;
        for (std::uint32_t u = 0; u < t.count.size(); ++u) {
            if (t.count[u] > 1) {
                std::reverse(h.begin() + start, h.begin() + start + t.count[u]);
                break;
            }
            start += t.count[u];
        }
    }
    GradedMatrix sum = GradedMatrix::zero(TV, TW, phi.parity());
    Word arr = t.blocks;
    do {
        Perm s = perm_compose(h, arrangement_perm(t.blocks, arr));
        auto term = compose(F, sym_action_on(F, W, TW, d, s),
                            compose(F, T, sym_action_on(F, V, TV, d, perm_inverse(s))));
        sum = add(F, sum, term);
    } while (std::next_permutation(arr.begin(), arr.end()));
    return sum;
}

namespace {

void check_pair(const SuperSpace& V, const SuperSpace& W, const DividedPowerMorphism& phi) {
    if (!phi.source().same_shape(V) || !phi.target().same_shape(W))
        throw InvalidInput("morphism does not match the given spaces");
}

}  // namespace

GradedMatrix induced_combination(const Field& F, Algebra alg, const SuperSpace& V, const SuperSpace& W, int n,
                                 const std::vector<std::pair<DividedPowerMorphism, Elt>>& terms) {
    auto BV = functor_basis(alg, V, n), BW = functor_basis(alg, W, n);
    int parity = -1;
    for (const auto& [phi, c] : terms) {
        check_pair(V, W, phi);
        if (phi.degree() != n) throw InvalidInput("morphism degree differs from functor degree");
        if (c && parity >= 0 && parity != phi.parity()) throw ParityError("mixed parities in a morphism combination");
        if (c) parity = phi.parity();
    }
    SparseMatrix m(BW->size(), BV->size());
    for (std::size_t i = 0; i < BV->size(); ++i) {
        Reader rd(F, BW);
        auto src = embed_monomial(F, *BV, i);
        for (const auto& [phi, c] : terms) {
            if (!c) continue;
            for (const auto& [w, cw] : src)
                for (const auto& [img, s] : apply_to_word(F, phi, w)) rd.add(img, F.mul(c, F.mul(cw, s)));
        }
        m.set_col(i, rd.take());
    }
    return GradedMatrix(BV->space(), BW->space(), parity < 0 ? 0 : parity, std::move(m));
}

GradedMatrix induced_functor_map(const Field& F, Algebra alg, const DividedPowerMorphism& phi) {
    return induced_combination(F, alg, phi.source(), phi.target(), phi.degree(), {{phi, 1}});
}

GradedMatrix induced_from_tensor_map(const Field& F, Algebra alg, const SuperSpace& V, const SuperSpace& W, int n,
                                     const GradedMatrix& M) {
    auto BV = functor_basis(alg, V, n), BW = functor_basis(alg, W, n);
    SparseMatrix m(BW->size(), BV->size());
    for (std::size_t i = 0; i < BV->size(); ++i) {
        Reader rd(F, BW);
        for (const auto& [w, cw] : embed_monomial(F, *BV, i)) {
            for (const auto& e : M.matrix().col(word_index(w, V.dim()))) {
                auto dig = tensor_digits(e.idx, W.dim(), n);
                rd.add(Word(dig.begin(), dig.end()), F.mul(cw, e.val));
            }
        }
        m.set_col(i, rd.take());
    }
    return GradedMatrix(BV->space(), BW->space(), M.parity(), std::move(m));
}

GradedMatrix induced_pair_combination(const Field& F, Algebra first, Algebra second, const SuperSpace& V,
                                      const SuperSpace& W, int a, int b,
                                      const std::vector<std::pair<DividedPowerMorphism, Elt>>& terms) {
    auto V1 = functor_basis(first, V, a), V2 = functor_basis(second, V, b);
    auto W1 = functor_basis(first, W, a), W2 = functor_basis(second, W, b);
    int parity = -1;
    for (const auto& [phi, c] : terms) {
        check_pair(V, W, phi);
        if (phi.degree() != a + b) throw InvalidInput("morphism degree differs from functor degree");
        if (c && parity >= 0 && parity != phi.parity()) throw ParityError("mixed parities in a morphism combination");
        if (c) parity = phi.parity();
    }
    const std::size_t cols = V1->size() * V2->size();
    SparseMatrix m(W1->size() * W2->size(), cols);
    for (std::size_t i1 = 0; i1 < V1->size(); ++i1) {
        auto e1 = embed_monomial(F, *V1, i1);
        for (std::size_t i2 = 0; i2 < V2->size(); ++i2) {
            auto e2 = embed_monomial(F, *V2, i2);
            SparseAccumulator acc(F);
            for (const auto& [phi, c] : terms) {
                if (!c) continue;
                for (const auto& [w1, c1] : e1)
                    for (const auto& [w2, c2] : e2) {
                        Word w = w1;
                        w.insert(w.end(), w2.begin(), w2.end());
                        const Elt cw = F.mul(c, F.mul(c1, c2));
                        for (const auto& [img, s] : apply_to_word(F, phi, w)) {
                            auto [j1, s1] = read_word(F, *W1, Word(img.begin(), img.begin() + a));
                            if (j1 < 0) continue;
                            auto [j2, s2] = read_word(F, *W2, Word(img.begin() + a, img.end()));
                            if (j2 < 0) continue;
                            acc.add(static_cast<std::uint32_t>(j1 * W2->size() + j2),
                                    F.mul(cw, F.mul(s, F.mul(s1, s2))));
                        }
                    }
            }
            m.set_col(i1 * V2->size() + i2, acc.take());
        }
    }
    return GradedMatrix(tensor(V1->space(), V2->space()), tensor(W1->space(), W2->space()),
                        parity < 0 ? 0 : parity, std::move(m));
}

}  // namespace shom
