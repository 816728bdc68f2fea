#include "superhomology/graded_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "superhomology/errors.hpp"

namespace shom {

GradedMatrix::GradedMatrix(SuperSpace domain, SuperSpace codomain, int parity, SparseMatrix m)
    : dom_(std::move(domain)), cod_(std::move(codomain)), parity_(parity & 1), m_(std::move(m)) {
    if (m_.cols() != dom_.dim() || m_.rows() != cod_.dim())
        throw InvalidInput("matrix shape " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                           " does not match spaces of dims " + std::to_string(cod_.dim()) + " and " +
                           std::to_string(dom_.dim()));
    for (std::size_t j = 0; j < m_.cols(); ++j)
        for (const auto& e : m_.col(j))
            if ((cod_.parity(e.idx) ^ dom_.parity(j)) != parity_)
                throw ParityError("entry (" + std::to_string(e.idx) + "," + std::to_string(j) +
                                  ") breaks parity " + std::to_string(parity_) + " (" + cod_.label(e.idx) +
                                  " <- " + dom_.label(j) + ")");
}

GradedMatrix GradedMatrix::zero(const SuperSpace& domain, const SuperSpace& codomain, int parity) {
    return GradedMatrix(domain, codomain, parity, SparseMatrix(codomain.dim(), domain.dim()));
}

GradedMatrix GradedMatrix::identity(const SuperSpace& V) {
    return GradedMatrix(V, V, 0, SparseMatrix::identity(V.dim()));
}

GradedMatrix GradedMatrix::from_triples(const Field& F, const SuperSpace& domain, const SuperSpace& codomain,
                                        int parity,
                                        const std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>>& t) {
    return GradedMatrix(domain, codomain, parity, SparseMatrix::from_triples(F, codomain.dim(), domain.dim(), t));
}

GradedMatrix compose(const Field& F, const GradedMatrix& a, const GradedMatrix& b) {
    if (!a.domain().same_shape(b.codomain())) throw InvalidInput("composition of incompatible maps");
    return GradedMatrix(b.domain(), a.codomain(), a.parity() ^ b.parity(), mat_mul(F, a.matrix(), b.matrix()));
}

GradedMatrix add(const Field& F, const GradedMatrix& a, const GradedMatrix& b, Elt b_scale) {
    if (a.parity() != b.parity() && !a.is_zero() && !b.is_zero())
        throw ParityError("sum of maps with different parities");
    int par = a.is_zero() ? b.parity() : a.parity();
    return GradedMatrix(a.domain(), a.codomain(), par, mat_add(F, a.matrix(), b.matrix(), b_scale));
}

GradedMatrix scale(const Field& F, const GradedMatrix& a, Elt s) {
    return GradedMatrix(a.domain(), a.codomain(), a.parity(), mat_scale(F, a.matrix(), s));
}

SparseVec apply(const Field& F, const GradedMatrix& a, const SparseVec& v) {
    return mat_apply(F, a.matrix(), v);
}

GradedMatrix tensor_of_maps(const Field& F, const GradedMatrix& f, const GradedMatrix& g) {
    const std::size_t gr = g.rows(), gc = g.cols();
    SparseMatrix m(f.rows() * gr, f.cols() * gc);
    for (std::size_t v = 0; v < f.cols(); ++v) {
        bool neg = g.parity() && f.domain().parity(v);
        for (std::size_t w = 0; w < gc; ++w) {
            SparseVec col;
            for (const auto& a : f.matrix().col(v))
                for (const auto& b : g.matrix().col(w)) {
                    Elt x = F.mul(a.val, b.val);
                    col.push_back({static_cast<std::uint32_t>(a.idx * gr + b.idx), neg ? F.neg(x) : x});
                }
            m.set_col(v * gc + w, std::move(col));
        }
    }
    return GradedMatrix(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()),
                        f.parity() ^ g.parity(), std::move(m));
}

GradedMatrix braiding(const Field& F, const SuperSpace& V, const SuperSpace& W) {
    SparseMatrix m(W.dim() * V.dim(), V.dim() * W.dim());
    for (std::size_t v = 0; v < V.dim(); ++v)
        for (std::size_t w = 0; w < W.dim(); ++w) {
            Elt s = F.sign(V.parity(v) && W.parity(w));
            m.set_col(v * W.dim() + w, {{static_cast<std::uint32_t>(w * V.dim() + v), s}});
        }
    return GradedMatrix(tensor(V, W), tensor(W, V), 0, std::move(m));
}

GradedMatrix sym_action_on(const Field& F, const SuperSpace& base, const SuperSpace& power, std::size_t n,
                           const Perm& sigma) {
    if (sigma.size() != n || !perm_is_valid(sigma)) throw InvalidInput("not a permutation of the factors");
    const std::size_t b = base.dim();
    if (power.dim() != [&] { std::size_t d = 1; for (std::size_t i = 0; i < n; ++i) d *= b; return d; }())
        throw InvalidInput("tensor power dimension mismatch");
    SparseMatrix m(power.dim(), power.dim());
    std::vector<int> par(n);
    std::vector<std::size_t> out(n);
    for (std::size_t idx = 0; idx < power.dim(); ++idx) {
        auto dig = tensor_digits(idx, b, n);
        for (std::size_t i = 0; i < n; ++i) par[i] = base.parity(dig[i]);
        for (std::size_t i = 0; i < n; ++i) out[i] = dig[sigma[i]];
        bool neg = koszul_sign_odd(par, sigma);
        m.set_col(idx, {{static_cast<std::uint32_t>(tensor_index(out, b)), F.sign(neg)}});
    }
    return GradedMatrix(power, power, 0, std::move(m));
}

GradedMatrix sym_action(const Field& F, const SuperSpace& V, std::size_t n, const Perm& sigma) {
    return sym_action_on(F, V, tensor_power(V, n), n, sigma);
}

void dump(std::ostream& os, const Field& F, const GradedMatrix& g) {
    os << "gmatrix p=" << F.p() << " rows=" << g.rows() << " cols=" << g.cols() << " parity=" << g.parity()
       << "\n";
    std::vector<std::tuple<std::size_t, std::size_t, Elt>> t;
    for (std::size_t j = 0; j < g.cols(); ++j)
        for (const auto& e : g.matrix().col(j)) t.emplace_back(e.idx, j, e.val);
    std::sort(t.begin(), t.end());
    for (const auto& [r, c, v] : t) os << r << " " << c << " " << v << "\n";
}

std::string dump_string(const Field& F, const GradedMatrix& g) {
    std::ostringstream os;
    dump(os, F, g);
    return os.str();
}

}  // namespace shom
