#ifndef ADELE_PLACES_HPP
#define ADELE_PLACES_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace adele {

// A label for a completion: finite places are (rational prime, slot index in
// the degree-sorted list of places over p); archimedean places are typed.
struct Place {
    enum class Kind : std::uint8_t { finite, real, complex };

    Kind kind = Kind::finite;
    std::uint64_t p = 0;     // finite only
    std::uint32_t index = 0; // slot over p, or archimedean index

    static Place finite(std::uint64_t p, std::uint32_t slot) { return {Kind::finite, p, slot}; }
    static Place real(std::uint32_t i) { return {Kind::real, 0, i}; }
    static Place complex(std::uint32_t i) { return {Kind::complex, 0, i}; }

    bool is_finite() const { return kind == Kind::finite; }
    bool is_real() const { return kind == Kind::real; }

    friend auto operator<=>(const Place&, const Place&) = default;

    std::string str() const;
};

} // namespace adele

#endif
