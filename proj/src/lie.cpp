#include "superhomology/lie.hpp"

#include <sstream>

#include "superhomology/errors.hpp"

namespace shom {

std::vector<std::size_t> RestrictedLieSuperalgebra::even_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (space.parity(i) == 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> RestrictedLieSuperalgebra::odd_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (space.parity(i) == 1) out.push_back(i);
    return out;
}

bool RestrictedLieSuperalgebra::even_part_abelian() const {
    for (auto i : even_indices())
        for (auto j : even_indices())
            if (!br(i, j).empty()) return false;
    return true;
}

namespace {

RestrictedLieSuperalgebra empty_algebra(std::string name, SuperSpace space) {
    RestrictedLieSuperalgebra g;
    g.name = std::move(name);
    g.space = std::move(space);
    g.bracket.assign(g.dim() * g.dim(), {});
    g.pmap.assign(g.dim(), {});
    return g;
}

}  // namespace

RestrictedLieSuperalgebra lie_two_dim(const Field& F) {
    RestrictedLieSuperalgebra g = empty_algebra("two-dim", SuperSpace({"x", "y"}, {0, 1}));
    g.bracket[1 * 2 + 1] = {{0, F.from_int(2)}};
    g.pmap[0] = {{0, 1}};
    return g;
}

RestrictedLieSuperalgebra lie_odd_abelian(std::size_t n) {
    return empty_algebra("odd-abelian:" + std::to_string(n), SuperSpace::standard(0, n));
}

RestrictedLieSuperalgebra lie_even_abelian(std::size_t m) {
    return empty_algebra("even-abelian:" + std::to_string(m), SuperSpace::standard(m, 0));
}

RestrictedLieSuperalgebra lie_gl(const Field& F, std::size_t m, std::size_t n) {
    const std::size_t N = m + n;
    auto par = [m](std::size_t i) { return i < m ? 0 : 1; };
    std::vector<std::string> labels;
    std::vector<int> parities;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            labels.push_back("e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            parities.push_back(par(i) ^ par(j));
        }
    RestrictedLieSuperalgebra g =
        empty_algebra("gl:" + std::to_string(m) + ":" + std::to_string(n), SuperSpace(labels, parities));
    auto idx = [N](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i * N + j); };
    // [e_ij, e_kl] = δ_jk e_il - (-1)^{|e_ij||e_kl|} δ_li e_kj.
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k)
                for (std::size_t l = 0; l < N; ++l) {
                    SparseAccumulator acc(F);
                    if (j == k) acc.add(idx(i, l), 1);
                    if (l == i) acc.add(idx(k, j), F.sign(((par(i) ^ par(j)) & (par(k) ^ par(l))) == 0));
                    g.bracket[idx(i, j) * g.dim() + idx(k, l)] = acc.take();
                }
    for (std::size_t i = 0; i < N; ++i) g.pmap[idx(i, i)] = {{idx(i, i), 1}};
    return g;
}

RestrictedLieSuperalgebra lie_preset(const Field& F, const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    auto num = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const long v = std::stol(s, &pos);
            if (pos != s.size() || v < 0) throw InvalidInput("");
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw InvalidInput("bad number '" + s + "' in preset '" + spec + "'");
        }
    };
    if (parts.size() == 1 && parts[0] == "two-dim") return lie_two_dim(F);
    if (parts.size() == 2 && parts[0] == "odd-abelian") return lie_odd_abelian(num(parts[1]));
    if (parts.size() == 2 && parts[0] == "even-abelian") return lie_even_abelian(num(parts[1]));
    if (parts.size() == 3 && parts[0] == "gl") return lie_gl(F, num(parts[1]), num(parts[2]));
    throw InvalidInput("unknown Lie superalgebra preset '" + spec + "'");
}

RestrictedLieSuperalgebra parse_lie(const Field& F, const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    std::vector<std::string> labels;
    std::vector<int> parities;
    std::vector<std::tuple<long, long, long, long long>> br;
    std::vector<std::tuple<long, long, long long>> pm;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "basis" || first == "bracket" || first == "pmap") {
            section = first;
            continue;
        }
        auto fail = [&] { return InvalidInput("line " + std::to_string(lineno) + ": cannot parse '" + line + "'"); };
        if (section == "basis") {
            std::string p;
            if (!(ls >> p)) throw fail();
            if (p == "0" || p == "even") parities.push_back(0);
            else if (p == "1" || p == "odd") parities.push_back(1);
            else throw fail();
            labels.push_back(first);
        } else if (section == "bracket") {
            long j, k;
            long long c;
            if (!(ls >> j >> k >> c)) throw fail();
            br.emplace_back(std::stol(first), j, k, c);
        } else if (section == "pmap") {
            long k;
            long long c;
            if (!(ls >> k >> c)) throw fail();
            pm.emplace_back(std::stol(first), k, c);
        } else {
            throw fail();
        }
    }
    if (labels.empty()) throw InvalidInput("Lie superalgebra has no basis section");
    RestrictedLieSuperalgebra g = empty_algebra("custom", SuperSpace(labels, parities));
    const long d = static_cast<long>(g.dim());
    auto in_range = [d](long v) { return v >= 0 && v < d; };
    for (auto [i, j, k, c] : br) {
        if (!in_range(i) || !in_range(j) || !in_range(k)) throw InvalidInput("bracket index out of range");
        auto& slot = g.bracket[i * d + j];
        slot = sv_axpy(F, slot, F.from_int(c), {{static_cast<std::uint32_t>(k), 1}});
    }
    for (auto [i, k, c] : pm) {
        if (!in_range(i) || !in_range(k)) throw InvalidInput("pmap index out of range");
        g.pmap[i] = sv_axpy(F, g.pmap[i], F.from_int(c), {{static_cast<std::uint32_t>(k), 1}});
    }
    return g;
}

namespace {

SparseVec bracket_vec(const Field& F, const RestrictedLieSuperalgebra& g, const SparseVec& u, const SparseVec& v) {
    SparseAccumulator acc(F);
    for (const auto& a : u)
        for (const auto& b : v) acc.add_vec(g.br(a.idx, b.idx), F.mul(a.val, b.val));
    return acc.take();
}

SparseMatrix ad_matrix(const Field& F, const RestrictedLieSuperalgebra& g, const SparseVec& x) {
    SparseMatrix m(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j)
        m.set_col(j, bracket_vec(F, g, x, {{static_cast<std::uint32_t>(j), 1}}));
    return m;
}

}  // namespace

LieReport validate_lie(const Field& F, const RestrictedLieSuperalgebra& g) {
    LieReport r;
    const std::size_t d = g.dim();
    auto L = [&](std::size_t i) { return g.space.label(i); };
    auto e = [](std::size_t i) { return SparseVec{{static_cast<std::uint32_t>(i), 1}}; };
    if (g.bracket.size() != d * d || g.pmap.size() != d) {
        r.violations.push_back("structure tables have the wrong size");
        return r;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const int pij = g.space.parity(i) ^ g.space.parity(j);
            for (const auto& t : g.br(i, j))
                if (g.space.parity(t.idx) != pij) {
                    r.violations.push_back("parity: [" + L(i) + "," + L(j) + "] has a component along " + L(t.idx));
                    break;
                }
            const bool sym = (g.space.parity(i) & g.space.parity(j)) != 0;
            if (!sv_axpy(F, g.br(i, j), F.sign(sym), g.br(j, i)).empty())
                r.violations.push_back("antisymmetry fails for (" + L(i) + "," + L(j) + ")");
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                SparseVec lhs = bracket_vec(F, g, e(i), g.br(j, k));
                SparseVec a = bracket_vec(F, g, g.br(i, j), e(k));
                SparseVec b = bracket_vec(F, g, e(j), g.br(i, k));
                const bool neg = (g.space.parity(i) & g.space.parity(j)) != 0;
                SparseVec rhs = sv_axpy(F, a, F.sign(neg), b);
                if (lhs != rhs)
                    r.violations.push_back("Jacobi fails for (" + L(i) + "," + L(j) + "," + L(k) + ")");
            }
    for (std::size_t i = 0; i < d; ++i) {
        if (g.space.parity(i) == 1) {
            if (!g.pmap[i].empty()) r.violations.push_back("p-map given on odd vector " + L(i));
            continue;
        }
        for (const auto& t : g.pmap[i])
            if (g.space.parity(t.idx) != 0) {
                r.violations.push_back("p-map of " + L(i) + " is not even");
                break;
            }
        SparseMatrix ad = ad_matrix(F, g, e(i)), pw = SparseMatrix::identity(d);
        for (std::uint32_t k = 0; k < F.p(); ++k) pw = mat_mul(F, ad, pw);
        if (!(pw == ad_matrix(F, g, g.pmap[i])))
            r.violations.push_back("restrictedness: ad(" + L(i) + "^[p]) differs from ad(" + L(i) + ")^p");
    }
    return r;
}

}  // namespace shom
