#include "uberhom/field.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <utility>

namespace uberhom {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw SolveFailure("division by zero in " + name());
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
    if (sgn(a) == 0) throw SolveFailure("division by zero in Q");
    return 1 / a;
}

Coefficients parse_coefficients(const std::string& text) {
    std::string s = text;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "z2") return PrimeField{2};
    if (s == "q") return RationalField{};
    if (s == "z") return IntegerRing{};
    if (s.rfind("p:", 0) == 0) {
        const std::string digits = s.substr(2);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 9)
            throw InputError("bad prime in coefficient spec '" + text + "'");
        return PrimeField{static_cast<std::uint32_t>(std::stoul(digits))};
    }
    throw InputError("unknown coefficients '" + text + "' (expected z2, q, z or p:<prime>)");
}

std::string coefficient_name(const Coefficients& c) {
    return std::visit([](const auto& r) { return r.name(); }, c);
}

}  // namespace uberhom
