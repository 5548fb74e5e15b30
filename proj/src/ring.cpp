#include "termalg/ring.hpp"

#include <cctype>

namespace termalg {

std::string scalar_to_string(const Scalar& v) { return v.get_str(); }

Scalar scalar_from_string(std::string_view s) {
    std::string str(s);
    auto ok_int = [](std::string_view d, bool sign) {
        if (sign && !d.empty() && d[0] == '-') d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = s.find('/');
    bool good = slash == std::string_view::npos ? ok_int(s, true)
                                                : ok_int(s.substr(0, slash), true) && ok_int(s.substr(slash + 1), false);
    if (!good)
        throw PreconditionViolated("not a rational number: '" + str + "'");
    Scalar v;
    v.set_str(str, 10);
    if (v.get_den() == 0)
        throw PreconditionViolated("zero denominator in '" + str + "'");
    v.canonicalize();
    return v;
}

namespace {

Scalar reduce(const Scalar& v, std::uint64_t m) {
    mpz_class r = v.get_num() % mpz_class(static_cast<unsigned long>(m));
    if (r < 0) r += static_cast<unsigned long>(m);
    return Scalar(r);
}

} // namespace

Ring Ring::integers() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::integers;
    auto& s = impl->spec;
    s.name = "Z";
    s.add = [](const Scalar& a, const Scalar& b) { return Scalar(a + b); };
    s.mul = [](const Scalar& a, const Scalar& b) { return Scalar(a * b); };
    s.neg = [](const Scalar& a) { return Scalar(-a); };
    s.zero = 0;
    s.one = 1;
    s.eq = [](const Scalar& a, const Scalar& b) { return a == b; };
    s.sample = [](std::mt19937_64& g) {
        return Scalar(static_cast<long>(std::uniform_int_distribution<long>(-1000000, 1000000)(g)));
    };
    s.show = scalar_to_string;
    return Ring(std::move(impl));
}

Ring Ring::modular(std::uint64_t m) {
    if (m < 2)
        throw PreconditionViolated("modulus must be at least 2");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::modular;
    impl->modulus = m;
    auto& s = impl->spec;
    s.name = "Z" + std::to_string(m);
    s.add = [m](const Scalar& a, const Scalar& b) { return reduce(a + b, m); };
    s.mul = [m](const Scalar& a, const Scalar& b) { return reduce(a * b, m); };
    s.neg = [m](const Scalar& a) { return reduce(-a, m); };
    s.zero = 0;
    s.one = 1;
    s.eq = [](const Scalar& a, const Scalar& b) { return a == b; };
    s.sample = [m](std::mt19937_64& g) {
        return Scalar(static_cast<unsigned long>(std::uniform_int_distribution<std::uint64_t>(0, m - 1)(g)));
    };
    s.show = scalar_to_string;
    return Ring(std::move(impl));
}

Ring Ring::rationals() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::rationals;
    auto& s = impl->spec;
    s.name = "Q";
    s.add = [](const Scalar& a, const Scalar& b) { return Scalar(a + b); };
    s.mul = [](const Scalar& a, const Scalar& b) { return Scalar(a * b); };
    s.neg = [](const Scalar& a) { return Scalar(-a); };
    s.zero = 0;
    s.one = 1;
    s.eq = [](const Scalar& a, const Scalar& b) { return a == b; };
    s.sample = [](std::mt19937_64& g) {
        long n = std::uniform_int_distribution<long>(-1000, 1000)(g);
        long d = std::uniform_int_distribution<long>(1, 1000)(g);
        Scalar v(n, d);
        v.canonicalize();
        return v;
    };
    s.show = scalar_to_string;
    return Ring(std::move(impl));
}

Ring Ring::from_name(std::string_view name) {
    if (name == "Z") return integers();
    if (name == "Q") return rationals();
    std::string_view digits;
    if (name.starts_with("Zm:"))
        digits = name.substr(3);
    else if (name.starts_with("Z"))
        digits = name.substr(1);
    bool ok = !digits.empty() && digits.size() < 19;
    for (char c : digits)
        ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (!ok)
        throw PreconditionViolated("unknown ring '" + std::string(name) + "' (expected Z, Zm:<m> or Q)");
    return modular(std::stoull(std::string(digits)));
}

bool Ring::contains(const Scalar& v) const {
    switch (kind()) {
    case Kind::integers: return v.get_den() == 1;
    case Kind::modular: return v.get_den() == 1 && v >= 0 && v < static_cast<unsigned long>(modulus());
    case Kind::rationals: return true;
    }
    return false;
}

Scalar Ring::canonical(const Scalar& v) const {
    Scalar c = v;
    c.canonicalize();
    if (kind() != Kind::rationals && c.get_den() != 1)
        throw RingMismatch("non-integer " + c.get_str() + " in " + name());
    if (kind() == Kind::modular)
        return reduce(c, modulus());
    return c;
}

std::string Ring::literal(const Scalar& v) const { return "c{" + v.get_str() + "}"; }

Scalar Ring::literal_value(std::string_view symbol) {
    if (symbol.size() < 4 || !symbol.starts_with("c{") || !symbol.ends_with("}"))
        throw PreconditionViolated("not a ring literal: '" + std::string(symbol) + "'");
    return scalar_from_string(symbol.substr(2, symbol.size() - 3));
}

bool Ring::is_canonical_literal(std::string_view symbol) const {
    try {
        Scalar v = literal_value(symbol);
        return contains(v) && literal(v) == symbol;
    } catch (const Error&) {
        return false;
    }
}

std::string Ring::show(const Scalar& v) const { return v.get_str(); }

} // namespace termalg
