#ifndef ENNIL_COMMON_HPP
#define ENNIL_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ennil {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Int &a) { return a.is_zero(); }
inline bool is_zero(const Rat &a) { return a.is_zero(); }

// Prime field element with the prime carried in the value. p == 0 marks an
// integer constant not yet bound to a prime; it binds on first combination
// with a bound element. Mixing two different bound primes is a hard error.
struct Fp {
    long p = 0;
    long long v = 0;

    Fp() = default;
    Fp(long long k) : p(0), v(k) {}
    Fp(long long k, long prime) : p(prime), v(norm(k, prime)) {}

    static long long norm(long long k, long prime) {
        long long r = k % prime;
        return r < 0 ? r + prime : r;
    }

    long prime_of(const Fp &o) const {
        if (p && o.p && p != o.p) throw std::invalid_argument("Fp: mixed primes");
        return p ? p : o.p;
    }
};

inline Fp operator+(const Fp &a, const Fp &b) {
    long P = a.prime_of(b);
    return P ? Fp(a.v + b.v, P) : Fp(a.v + b.v);
}
inline Fp operator-(const Fp &a, const Fp &b) {
    long P = a.prime_of(b);
    return P ? Fp(a.v - b.v, P) : Fp(a.v - b.v);
}
inline Fp operator*(const Fp &a, const Fp &b) {
    long P = a.prime_of(b);
    return P ? Fp(a.v * b.v, P) : Fp(a.v * b.v);
}
inline Fp operator-(const Fp &a) { return a.p ? Fp(-a.v, a.p) : Fp(-a.v); }
inline Fp &operator+=(Fp &a, const Fp &b) { return a = a + b; }
inline Fp &operator-=(Fp &a, const Fp &b) { return a = a - b; }
inline Fp &operator*=(Fp &a, const Fp &b) { return a = a * b; }
inline bool operator==(const Fp &a, const Fp &b) {
    long P = a.prime_of(b);
    if (!P) return a.v == b.v;
    return Fp::norm(a.v, P) == Fp::norm(b.v, P);
}
inline bool operator!=(const Fp &a, const Fp &b) { return !(a == b); }
inline bool is_zero(const Fp &a) { return a.p ? (a.v % a.p == 0) : a.v == 0; }

inline Fp fp_pow(Fp a, long long e) {
    if (!a.p) throw std::invalid_argument("fp_pow: unbound prime");
    Fp r(1, a.p);
    while (e > 0) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

inline Rat coeff_inv(const Rat &a) {
    if (is_zero(a)) throw std::domain_error("coeff_inv: zero");
    return Rat(1) / a;
}
inline Fp coeff_inv(const Fp &a) {
    if (!a.p) {
        if (a.v == 1 || a.v == -1) return a;
        throw std::invalid_argument("coeff_inv: unbound Fp");
    }
    if (is_zero(a)) throw std::domain_error("coeff_inv: zero");
    return fp_pow(a, a.p - 2);
}

inline std::string coeff_str(const Int &a) { return a.str(); }
inline std::string coeff_str(const Rat &a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
}
inline std::string coeff_str(const Fp &a) {
    return std::to_string(a.p ? Fp::norm(a.v, a.p) : a.v);
}

// Conversions between coefficient domains.
inline Rat to_rat(const Int &a) { return Rat(a); }
inline Fp to_fp(const Int &a, long p) {
    return Fp(static_cast<long long>(a % p), p);
}

template <class C> struct coeff_name;
template <> struct coeff_name<Int> { static constexpr const char *value = "Z"; };
template <> struct coeff_name<Rat> { static constexpr const char *value = "Q"; };
template <> struct coeff_name<Fp>  { static constexpr const char *value = "Fp"; };

} // namespace ennil

#endif
