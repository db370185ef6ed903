#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace superpoisson {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator by the backend.
using Scalar = boost::multiprecision::cpp_rational;

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "identity fails" catch this type.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Two objects live on incompatible graded spaces.
class SpaceMismatch : public Error {
  public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionFailed : public Error {
  public:
    using Error::Error;
};

/// Element of Z/2.
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Parity& operator+=(Parity& a, Parity b) noexcept { return a = a + b; }

constexpr int to_int(Parity p) noexcept { return static_cast<int>(p); }

constexpr Parity parity_from_int(long long v) noexcept {
    return (v & 1) ? Parity::odd : Parity::even;
}

/// (-1)^{pq}
constexpr int koszul_sign(Parity p, Parity q) noexcept {
    return (p == Parity::odd && q == Parity::odd) ? -1 : 1;
}

/// (-1)^{p}
constexpr int parity_sign(Parity p) noexcept { return p == Parity::odd ? -1 : 1; }

inline std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline bool is_zero(const Scalar& s) { return s == 0; }

/// Parses "p", "-p" or "p/q" with decimal integers. Anything else (floats,
/// exponents, empty strings, zero denominators) is rejected.
inline Scalar parse_scalar(std::string_view text) {
    auto fail = [&](const char* why) -> Scalar {
        throw Error("invalid rational '" + std::string(text) + "': " + why);
    };
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto to_integer = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return Integer(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(text))
            return fail("expected an integer or p/q");
        return Scalar(to_integer(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        return fail("expected an integer or p/q");
    Integer d = to_integer(den);
    if (d == 0)
        return fail("zero denominator");
    Integer n = to_integer(num);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(n, d);
}

/// Canonical text: "p" for integers, "p/q" otherwise (lowest terms, q > 0).
inline std::string format_scalar(const Scalar& s) {
    const Integer& den = boost::multiprecision::denominator(s);
    std::string out = boost::multiprecision::numerator(s).str();
    if (den != 1)
        out += "/" + den.str();
    return out;
}

} // namespace superpoisson
