#ifndef ENNIL_INVARIANTS_HPP
#define ENNIL_INVARIANTS_HPP

#include "extpoly.hpp"
#include "linalg.hpp"

#include <map>

namespace ennil {

// Basis of the S_n-invariant part of the bidegree-(q, 2m) slice of R_n,
// computed as the joint kernel of the maps (s_j - id) on the slice.
template <class C>
std::vector<ExtPoly<C>> invariant_slice_basis(int n, long q, int m) {
    auto keys = slice_basis<C>(n, q, m);
    int dim = static_cast<int>(keys.size());
    if (dim == 0) return {};
    std::map<typename ExtPoly<C>::Key, int> index;
    for (int i = 0; i < dim; ++i) index[keys[i]] = i;

    Matrix<C> M((n - 1) * dim, dim);
    for (int col = 0; col < dim; ++col) {
        ExtPoly<C> f = ExtPoly<C>::monomial(n, keys[col].first, keys[col].second, C(1));
        for (int j = 1; j < n; ++j) {
            ExtPoly<C> g = apply_transposition(j, f) - f;
            for (auto &[k, c] : g.terms)
                M.at((j - 1) * dim + index.at(k), col) += c;
        }
    }
    std::vector<ExtPoly<C>> out;
    for (auto &v : kernel(M)) {
        ExtPoly<C> g(n);
        for (int i = 0; i < dim; ++i)
            if (!is_zero(v[i])) g.add_term(keys[i], v[i]);
        out.push_back(std::move(g));
    }
    return out;
}

// Write f as sum over staircase monomials x^b (0 <= b_i <= n-i) with
// S_n-invariant coefficients; exactness is certified by re-expansion.
template <class C>
std::map<std::vector<int>, ExtPoly<C>>
decompose_over_invariants(const ExtPoly<C> &f) {
    int n = f.n;
    std::map<std::vector<int>, ExtPoly<C>> result;
    if (f.is_zero()) return result;

    // Split f into bidegree-homogeneous components.
    std::map<std::pair<long, long>, ExtPoly<C>> comps;
    for (auto &[k, c] : f.terms) {
        auto d = term_bidegree(f, k);
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, ExtPoly<C>(n)).first;
        it->second.add_term(k, c);
    }

    auto staircase = staircase_exponents(n);
    for (auto &[deg, comp] : comps) {
        long q = deg.first;
        int m = static_cast<int>(deg.second / 2);
        auto keys = slice_basis<C>(n, q, m);
        std::map<typename ExtPoly<C>::Key, int> index;
        for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);

        // Columns: x^b * (invariant basis element), per staircase b.
        std::vector<std::pair<std::vector<int>, ExtPoly<C>>> cols;
        for (auto &b : staircase) {
            long bdeg = 0;
            for (int bi : b) bdeg += 2L * bi;
            for (auto &inv : invariant_slice_basis<C>(n, q - bdeg, m)) {
                ExtPoly<C> xb = ExtPoly<C>::monomial(n, 0u, b, C(1));
                cols.push_back({b, xb * inv});
            }
        }
        Matrix<C> A(static_cast<int>(keys.size()), static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (auto &[k, c] : cols[j].second.terms)
                A.at(index.at(k), static_cast<int>(j)) += c;
        std::vector<C> rhs(keys.size(), C(0));
        for (auto &[k, c] : comp.terms) rhs[index.at(k)] = c;
        auto sol = solve(A, rhs);
        if (!sol) throw std::logic_error("decompose_over_invariants: solve failed");
        for (size_t j = 0; j < cols.size(); ++j) {
            if (is_zero((*sol)[j])) continue;
            // Strip the staircase factor back off the stored column.
            auto &b = cols[j].first;
            auto it = result.find(b);
            if (it == result.end()) it = result.emplace(b, ExtPoly<C>(n)).first;
            // col = x^b * inv; recover inv by dividing exponents.
            ExtPoly<C> inv(n);
            for (auto &[k, c] : cols[j].second.terms) {
                auto e = k.second;
                for (int i = 0; i < n; ++i) e[i] -= b[i];
                inv.add_term({k.first, e}, c);
            }
            it->second += inv.scaled((*sol)[j]);
        }
    }

    // Certify the reconstruction.
    ExtPoly<C> rebuilt(n);
    for (auto &[b, inv] : result)
        rebuilt += ExtPoly<C>::monomial(n, 0u, b, C(1)) * inv;
    if (rebuilt != f) throw std::logic_error("decompose_over_invariants: reconstruction failed");
    return result;
}

} // namespace ennil

#endif
