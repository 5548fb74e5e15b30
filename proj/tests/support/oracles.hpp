#pragma once

// Brute-force reference implementations used by the tests. None of them call
// into the library's evaluation, normalization or DNF code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "termalg/ring.hpp"
#include "termalg/standard_poly.hpp"
#include "termalg/term.hpp"

namespace oracle {

using termalg::Term;

// Dense polynomial: exponent tuples of fixed length nvars.
using Dense = std::map<std::vector<unsigned>, mpq_class>;

inline mpq_class reduce(const termalg::Ring& R, const mpq_class& v) {
    if (R.kind() == termalg::Ring::Kind::modular) {
        mpz_class m(std::to_string(R.modulus()));
        mpz_class r = v.get_num() % m;
        if (r < 0) r += m;
        return mpq_class(r);
    }
    return v;
}

inline Dense clean(const termalg::Ring& R, Dense d) {
    Dense out;
    for (auto& [k, c] : d) {
        mpq_class r = reduce(R, c);
        if (r != 0) out[k] = r;
    }
    return out;
}

// Literal value straight from the spelling c{a} / c{a/b}.
inline mpq_class literal_value(const std::string& sym) {
    mpq_class v(sym.substr(2, sym.size() - 3));
    v.canonicalize();
    return v;
}

inline Dense expand(const Term& t, const termalg::Ring& R, unsigned nvars) {
    std::vector<unsigned> zero(nvars, 0);
    if (t.is_variable()) {
        auto e = zero;
        e.at(t.var_index() - 1) = 1;
        return {{e, 1}};
    }
    if (t.is_atomic()) {
        const std::string& s = t.symbol();
        mpq_class v = s == "0" ? mpq_class(0) : s == "1" ? mpq_class(1) : literal_value(s);
        return clean(R, {{zero, v}});
    }
    Dense a = expand(t.left(), R, nvars), b = expand(t.right(), R, nvars);
    Dense out;
    if (t.symbol() == "+") {
        out = a;
        for (auto& [k, c] : b) out[k] += c;
    } else {
        // naive convolution over every pair of terms
        for (auto& [ka, ca] : a)
            for (auto& [kb, cb] : b) {
                auto k = ka;
                for (unsigned i = 0; i < nvars; ++i) k[i] += kb[i];
                out[k] += ca * cb;
            }
    }
    return clean(R, out);
}

inline Dense dense_of(const termalg::StandardPolynomial& p, unsigned nvars) {
    Dense out;
    for (const auto& [k, c] : p.terms()) {
        std::vector<unsigned> e(nvars, 0);
        for (std::size_t i = 0; i < k.size(); ++i) e.at(i) = k[i];
        out[e] = c;
    }
    return out;
}

// Boolean value of t at an assignment: bit i-1 of `bits` is x_i.
inline bool truth(const Term& t, std::uint64_t bits) {
    if (t.is_variable()) return (bits >> (t.var_index() - 1)) & 1;
    const std::string& s = t.symbol();
    if (s == "0") return false;
    if (s == "1") return true;
    if (s == "¬") return !truth(t.child(1), bits);
    if (s == "∨") return truth(t.left(), bits) || truth(t.right(), bits);
    if (s == "∧") return truth(t.left(), bits) && truth(t.right(), bits);
    throw std::logic_error("not a Boolean symbol: " + s);
}

inline std::vector<bool> table(const Term& t, unsigned n) {
    std::vector<bool> out(std::size_t{1} << n);
    for (std::uint64_t a = 0; a < out.size(); ++a) out[a] = truth(t, a);
    return out;
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (1/n)·C(2n-2, n-1)·n!
inline mpz_class additive_monomial_formula(unsigned n) {
    mpz_class num = binomial(2 * n - 2, n - 1) * factorial(n);
    return num / n;
}

// Length of the word of t from the formation rules.
inline std::size_t formula_length(const Term& t) {
    if (t.is_atomic()) return 1;
    std::size_t s = 0;
    for (const Term& c : t.children()) s += formula_length(c);
    if (t.arity() == 1) return s + 3;
    if (t.arity() == 2) return s + 3;
    return s + t.arity() + 2;
}

} // namespace oracle
