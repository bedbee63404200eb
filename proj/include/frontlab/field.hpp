#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frontlab {

// Coefficient field for all exact arithmetic: the rationals or a prime field F_p.
struct Field {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;  // prime when kind == Prime

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field prime(std::uint32_t p);

    bool is_prime_field() const { return kind == Kind::Prime; }
    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string name() const {
        return is_prime_field() ? "F" + std::to_string(p) : std::string("Q");
    }
    // Parses "Q", "F2", "F3", ... (also accepts plain "2", "3").
    static Field parse(const std::string& s);
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    return Field{Kind::Prime, p};
}

inline Field Field::parse(const std::string& s) {
    if (s == "Q" || s == "q" || s == "QQ") return rationals();
    std::string t = (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) ? s.substr(1) : s;
    try {
        unsigned long v = std::stoul(t);
        return prime(static_cast<std::uint32_t>(v));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse field spec '" + s + "'");
    }
}

}  // namespace frontlab
