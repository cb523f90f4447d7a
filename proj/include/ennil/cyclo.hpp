#ifndef ENNIL_CYCLO_HPP
#define ENNIL_CYCLO_HPP

#include "common.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace ennil {

// Element of Q[q]/(1 + q^2 + ... + q^{2(p-1)}), canonical representative of
// degree <= 2p-3. In the quotient q^{2p} = 1, so negative exponents reduce
// via q^{-1} = q^{2p-1}. Coefficients are rational so that q - q^{-1} is
// invertible (the relator splits over Q into factors where q^2 != 1).
struct Cyclo {
    long p = 0;
    std::vector<Rat> c; // exponents 0 .. 2p-3

    Cyclo() = default;
    explicit Cyclo(long prime) : p(prime), c(2 * prime - 2, Rat(0)) {}

    static Cyclo from_int(long prime, const Rat &v) {
        Cyclo r(prime);
        r.c[0] = v;
        return r;
    }

    static Cyclo q_power(long prime, long e, const Rat &v = Rat(1)) {
        Cyclo r(prime);
        r.add_power(e, v);
        return r;
    }

    void check(const Cyclo &o) const {
        if (p != o.p) throw std::invalid_argument("Cyclo: mixed primes");
    }

    // Add v*q^e, reducing to the canonical range.
    void add_power(long e, const Rat &v) {
        long m = 2 * p;
        e %= m;
        if (e < 0) e += m;
        if (e <= 2 * p - 3) {
            c[e] += v;
        } else if (e == 2 * p - 2) {
            // q^{2p-2} = -(1 + q^2 + ... + q^{2p-4})
            for (long i = 0; i <= 2 * p - 4; i += 2) c[i] -= v;
        } else { // e == 2p-1
            // q^{2p-1} = -(q + q^3 + ... + q^{2p-3})
            for (long i = 1; i <= 2 * p - 3; i += 2) c[i] -= v;
        }
    }

    bool is_zero() const {
        for (auto &v : c)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const Cyclo &o) const { return p == o.p && c == o.c; }
    bool operator!=(const Cyclo &o) const { return !(*this == o); }
};

inline Cyclo operator+(const Cyclo &a, const Cyclo &b) {
    a.check(b);
    Cyclo r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}
inline Cyclo operator-(const Cyclo &a, const Cyclo &b) {
    a.check(b);
    Cyclo r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}
inline Cyclo operator-(const Cyclo &a) {
    Cyclo r = a;
    for (auto &v : r.c) v = -v;
    return r;
}
inline Cyclo operator*(const Cyclo &a, const Cyclo &b) {
    a.check(b);
    Cyclo r(a.p);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.add_power(static_cast<long>(i + j), a.c[i] * b.c[j]);
        }
    }
    return r;
}
inline Cyclo operator*(const Cyclo &a, const Rat &s) {
    Cyclo r = a;
    for (auto &v : r.c) v *= s;
    return r;
}

// Reduce an integer (or rational) polynomial in q, allowing negative
// exponents, to the canonical form.
inline Cyclo cyclo_reduce(long p, const std::map<long, Rat> &poly) {
    Cyclo r(p);
    for (auto &[e, v] : poly) r.add_power(e, v);
    return r;
}

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline Cyclo quantum_int(long p, long n) {
    Cyclo r(p);
    for (long j = 0; j < n; ++j) r.add_power(n - 1 - 2 * j, Rat(1));
    return r;
}

namespace detail {
// Dense univariate polynomials over Q for the extended gcd.
using QP = std::vector<Rat>;
inline void qp_trim(QP &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline QP qp_sub(QP a, const QP &b) {
    if (b.size() > a.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}
inline QP qp_mul(const QP &a, const QP &b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}
// a = q*b + r
inline std::pair<QP, QP> qp_divmod(QP a, const QP &b) {
    QP q;
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    return {q, a};
}
} // namespace detail

struct NotInvertible : std::domain_error {
    NotInvertible() : std::domain_error("Cyclo: element not invertible") {}
};

// Inverse via extended gcd with the relator polynomial.
inline Cyclo cyclo_invert(const Cyclo &x) {
    using namespace detail;
    long p = x.p;
    QP a(x.c.begin(), x.c.end());
    qp_trim(a);
    if (a.empty()) throw NotInvertible();
    QP phi(2 * p - 1, Rat(0));
    for (long i = 0; i <= 2 * (p - 1); i += 2) phi[i] = Rat(1);
    // extended euclid on (a, phi): track s with s*a = r mod phi
    QP r0 = phi, r1 = a, s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = qp_divmod(r0, r1);
        QP s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw NotInvertible(); // gcd not a unit: zero divisor
    Rat lead = r0[0];
    Cyclo inv(p);
    for (size_t i = 0; i < s0.size(); ++i)
        if (s0[i] != 0) inv.add_power(static_cast<long>(i), s0[i] / lead);
    return inv;
}

inline std::string cyclo_str(const Cyclo &x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = static_cast<long>(x.c.size()) - 1; e >= 0; --e) {
        const Rat &v = x.c[e];
        if (v == 0) continue;
        Rat av = v < 0 ? Rat(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << coeff_str(av);
        } else {
            if (av != 1) os << coeff_str(av) << "*";
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

// Laurent polynomial in l (lambda) over the cyclotomic ring.
struct QLambda {
    long p = 0;
    std::map<long, Cyclo> terms; // lambda exponent -> coefficient

    QLambda() = default;
    explicit QLambda(long prime) : p(prime) {}

    static QLambda from_cyclo(const Cyclo &c, long lexp = 0) {
        QLambda r(c.p);
        r.add(lexp, c);
        return r;
    }
    static QLambda from_int(long prime, const Rat &v) {
        return from_cyclo(Cyclo::from_int(prime, v));
    }
    static QLambda q_power(long prime, long e) {
        return from_cyclo(Cyclo::q_power(prime, e));
    }
    static QLambda l_power(long prime, long e) {
        return from_cyclo(Cyclo::from_int(prime, Rat(1)), e);
    }

    void add(long lexp, const Cyclo &c) {
        if (c.is_zero()) return;
        auto it = terms.find(lexp);
        if (it == terms.end()) {
            terms.emplace(lexp, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const QLambda &o) const {
        return p == o.p && terms == o.terms;
    }
    bool operator!=(const QLambda &o) const { return !(*this == o); }
    void check(const QLambda &o) const {
        if (p != o.p) throw std::invalid_argument("QLambda: mixed primes");
    }
};

inline QLambda operator+(const QLambda &a, const QLambda &b) {
    a.check(b);
    QLambda r = a;
    for (auto &[e, c] : b.terms) r.add(e, c);
    return r;
}
inline QLambda operator-(const QLambda &a, const QLambda &b) {
    a.check(b);
    QLambda r = a;
    for (auto &[e, c] : b.terms) r.add(e, -c);
    return r;
}
inline QLambda operator-(const QLambda &a) {
    QLambda r(a.p);
    for (auto &[e, c] : a.terms) r.add(e, -c);
    return r;
}
inline QLambda operator*(const QLambda &a, const QLambda &b) {
    a.check(b);
    QLambda r(a.p);
    for (auto &[ea, ca] : a.terms)
        for (auto &[eb, cb] : b.terms) r.add(ea + eb, ca * cb);
    return r;
}

// Inverse of a single-term Laurent element l^e * c with c a unit.
inline QLambda qlambda_invert(const QLambda &a) {
    if (a.terms.size() != 1) throw NotInvertible();
    auto &[e, c] = *a.terms.begin();
    return QLambda::from_cyclo(cyclo_invert(c), -e);
}

inline std::string qlambda_str(const QLambda &x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[e, c] : x.terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = cyclo_str(c);
        if (e == 0) {
            os << cs;
            continue;
        }
        bool needs_paren = cs.find(' ') != std::string::npos;
        if (cs == "1") {
            os << "l";
        } else if (needs_paren) {
            os << "(" << cs << ")*l";
        } else {
            os << cs << "*l";
        }
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

} // namespace ennil

#endif
