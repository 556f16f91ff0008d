#include "conic/rational.hpp"

#include <cctype>

namespace conic {

std::optional<Rational> parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) return std::nullopt;
    // validate shape: [-+]?digits(/[-+]?digits)?
    auto digits_ok = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(s)) return std::nullopt;
    } else {
        if (!digits_ok(s.substr(0, slash)) || !digits_ok(s.substr(slash + 1))) return std::nullopt;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_double(double x) {
    mpq_class q(x);
    q.canonicalize();
    return q;
}

} // namespace conic
