#ifndef ENNIL_DERIV_CHECKS_HPP
#define ENNIL_DERIV_CHECKS_HPP

#include "derivations.hpp"
#include "report.hpp"

namespace ennil {

inline ExtPoly<Fp> bind_p(const ExtPoly<Fp> &f, long p) {
    ExtPoly<Fp> r(f.n);
    for (auto &[k, c] : f.terms) r.add_term(k, Fp(c.v, p));
    return r;
}

// d_n(f) = sum_r x_r^2 (d/dx_r)(f) on all monomials of q-degree <= D.
inline Report dn_as_partials_check(int n, long D) {
    Report rep;
    rep.command = "dn_as_partials";
    auto dn = dn_derivation<Int>(n);
    std::vector<Derivation<Int>> parts;
    for (int r = 1; r <= n; ++r) parts.push_back(partial_derivation<Int>(n, r));
    bool ok = true;
    std::string bad;
    for (auto &k : monomials_up_to<Int>(n, D)) {
        auto f = ExtPoly<Int>::monomial(n, k.first, k.second, Int(1));
        ExtPoly<Int> rhs(n);
        for (int r = 1; r <= n; ++r) {
            auto x2 = ExtPoly<Int>::x(n, r) * ExtPoly<Int>::x(n, r);
            rhs += x2 * parts[r - 1].apply(f);
        }
        if (dn.apply(f) != rhs) {
            ok = false;
            bad = poly_str(f);
            break;
        }
    }
    rep.add("dn_equals_sum_x2_partials", ok, "d_n", "sum x_r^2 d/dx_r",
            ok ? "" : "first failing monomial: " + bad);
    return rep;
}

// d^k w_{i+1} = -k(k-1) x_i x_{i+1} T_i(d^{k-2} w_i)
//              + k (x_i + x_{i+1}) T_i(d^{k-1} w_i) - T_i(d^k w_i).
inline Report dk_power_formula_check(int n, int kmax) {
    Report rep;
    rep.command = "dk_power_formula";
    auto dn = dn_derivation<Int>(n);
    for (int i = 1; i <= n - 1; ++i) {
        auto wi = ExtPoly<Int>::w(n, i);
        auto wi1 = ExtPoly<Int>::w(n, i + 1);
        auto xi = ExtPoly<Int>::x(n, i), xi1 = ExtPoly<Int>::x(n, i + 1);
        for (int k = 0; k <= kmax; ++k) {
            ExtPoly<Int> lhs = dn.apply_pow(wi1, k);
            ExtPoly<Int> rhs(n);
            if (k >= 2)
                rhs -= (xi * xi1 * demazure(i, dn.apply_pow(wi, k - 2)))
                           .scaled(Int(k) * Int(k - 1));
            if (k >= 1)
                rhs += ((xi + xi1) * demazure(i, dn.apply_pow(wi, k - 1)))
                           .scaled(Int(k));
            rhs -= demazure(i, dn.apply_pow(wi, k));
            rep.add("i=" + std::to_string(i) + ",k=" + std::to_string(k),
                    lhs == rhs, poly_str(lhs), poly_str(rhs));
        }
    }
    return rep;
}

// Over F_p: d_n^p kills every generator, and the multinomial collapse
// d_n^p = sum_r (x_r^2 d/dx_r)^p holds on generators.
inline Report nilpotency_check(long p, int n) {
    Report rep;
    rep.command = "nilpotency";
    if (n >= p) throw std::invalid_argument("nilpotency_check: need n < p");
    auto dn = dn_derivation<Fp>(n);
    std::vector<Derivation<Fp>> parts;
    for (int r = 1; r <= n; ++r) parts.push_back(partial_derivation<Fp>(n, r));
    auto x2partial_pow = [&](const ExtPoly<Fp> &f, int r, long k) {
        ExtPoly<Fp> g = f;
        auto x2 = bind_p(ExtPoly<Fp>::x(n, r) * ExtPoly<Fp>::x(n, r), p);
        for (long t = 0; t < k; ++t) g = x2 * parts[r - 1].apply(g);
        return g;
    };
    std::vector<std::pair<std::string, ExtPoly<Fp>>> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back({"x" + std::to_string(i), bind_p(ExtPoly<Fp>::x(n, i), p)});
        gens.push_back({"w" + std::to_string(i), bind_p(ExtPoly<Fp>::w(n, i), p)});
    }
    for (auto &[name, g] : gens) {
        auto dp = dn.apply_pow(g, static_cast<int>(p));
        rep.add("d^p(" + name + ")=0", dp.is_zero(), poly_str(dp), "0");
        ExtPoly<Fp> collapsed(n);
        for (int r = 1; r <= n; ++r) collapsed += x2partial_pow(g, r, p);
        rep.add("collapse(" + name + ")", dp == collapsed, poly_str(dp),
                poly_str(collapsed));
    }
    return rep;
}

// (x^2 d/dx)^n = sum_i a_{i,n} x^{n+i} d^i/dx^i, checked symbolically in
// one variable against the recursion table.
inline Report shift_coeffs_check(int nmax) {
    Report rep;
    rep.command = "shift_coeffs";
    auto a = shift_coeffs(nmax);
    // factorial boundary
    Int fact = 1;
    for (int n = 1; n <= nmax; ++n) {
        fact *= n;
        rep.add("a_{1," + std::to_string(n) + "}=n!", a[{1, n}] == fact,
                a[{1, n}].str(), fact.str());
        rep.add("a_{n,n}=1 (n=" + std::to_string(n) + ")", a[{n, n}] == 1,
                a[{n, n}].str(), "1");
    }
    // operator identity on x^m, m = 0..nmax+3, in R_1
    auto A = [&](const ExtPoly<Int> &f) {
        auto d = partial_derivation<Int>(1, 1);
        return ExtPoly<Int>::x(1, 1) * ExtPoly<Int>::x(1, 1) * d.apply(f);
    };
    auto d1 = partial_derivation<Int>(1, 1);
    for (int n = 1; n <= nmax; ++n) {
        bool ok = true;
        for (int m = 0; m <= nmax + 3 && ok; ++m) {
            ExtPoly<Int> xm = ExtPoly<Int>::monomial(1, 0u, {m}, Int(1));
            ExtPoly<Int> lhs = xm;
            for (int t = 0; t < n; ++t) lhs = A(lhs);
            ExtPoly<Int> rhs(1);
            for (int i = 1; i <= n; ++i) {
                ExtPoly<Int> di = xm;
                for (int t = 0; t < i; ++t) di = d1.apply(di);
                ExtPoly<Int> xpow = ExtPoly<Int>::monomial(1, 0u, {n + i}, a[{i, n}]);
                rhs += xpow * di;
            }
            ok = lhs == rhs;
        }
        rep.add("operator_identity n=" + std::to_string(n), ok);
    }
    return rep;
}

// alpha homogeneity and measured degree; degree is reported, not asserted.
inline Report alpha_report(int n) {
    Report rep;
    rep.command = "alpha";
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto a = alpha_poly<Int>(i, j, n);
            auto deg = a.is_zero() ? std::optional<std::pair<long, long>>{{0, 0}}
                                   : bidegree(a);
            std::string nm = "alpha_{" + std::to_string(i) + "," +
                             std::to_string(j) + "}";
            rep.add(nm + " homogeneous", deg.has_value(), poly_str(a), "",
                    deg ? "measured q-degree " + std::to_string(deg->first)
                        : "inhomogeneous");
        }
    // the d_n expansions of the w's
    auto dn = dn_derivation<Int>(n);
    for (int i = 1; i <= n; ++i) {
        auto img = dn.apply(ExtPoly<Int>::w(n, i));
        rep.add("d_" + std::to_string(n) + "(w" + std::to_string(i) + ")", true,
                poly_str(img), "", "expansion");
    }
    rep.info_only = true;
    return rep;
}

} // namespace ennil

#endif
