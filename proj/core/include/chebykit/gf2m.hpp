#pragma once

#include <cstdint>
#include <optional>

namespace chebykit {

// GF(2^m), 1 <= m <= 16, in the polynomial basis modulo a fixed irreducible
// polynomial (see gf2m_modulus). Bit i of `bits` is the coefficient of x^i.
struct GF2mElement {
    unsigned m = 1;
    std::uint32_t bits = 0;

    friend bool operator==(const GF2mElement& a, const GF2mElement& b) { return a.m == b.m && a.bits == b.bits; }
};

// Modulus polynomial including its x^m term, e.g. m = 4 -> x^4 + x + 1 = 0x13.
std::uint32_t gf2m_modulus(unsigned m);
bool gf2_poly_irreducible(std::uint64_t poly);

GF2mElement gf2_element(unsigned m, std::uint32_t bits);
GF2mElement gf2_zero(unsigned m);
GF2mElement gf2_one(unsigned m);
GF2mElement gf2_add(const GF2mElement& a, const GF2mElement& b);
GF2mElement gf2_mul(const GF2mElement& a, const GF2mElement& b);
GF2mElement gf2_square(const GF2mElement& a);
GF2mElement gf2_pow(GF2mElement a, std::uint64_t e);
GF2mElement gf2_inv(const GF2mElement& a);
GF2mElement gf2_sqrt(const GF2mElement& a);
unsigned gf2_trace(const GF2mElement& a);  // absolute trace, 0 or 1

// Image of the generator of GF(2^m) inside GF(2^{2m}) (2m <= 16), found by
// exhaustive root search of the modulus polynomial.
GF2mElement gf2_embedding_generator(unsigned m);
GF2mElement gf2_embed(const GF2mElement& a);

inline GF2mElement operator+(const GF2mElement& a, const GF2mElement& b) { return gf2_add(a, b); }
inline GF2mElement operator-(const GF2mElement& a, const GF2mElement& b) { return gf2_add(a, b); }
inline GF2mElement operator*(const GF2mElement& a, const GF2mElement& b) { return gf2_mul(a, b); }

}  // namespace chebykit
