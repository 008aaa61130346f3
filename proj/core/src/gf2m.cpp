#include "chebykit/gf2m.hpp"

#include <array>
#include <mutex>

#include "chebykit/errors.hpp"

namespace chebykit {

namespace {

// Low-weight irreducible polynomials, degrees 1..16.
constexpr std::uint32_t kModuli[17] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11B,    // x^8 + x^4 + x^3 + x + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

void check_m(unsigned m) {
    if (m < 1 || m > 16) throw DomainError("GF(2^m) supports 1 <= m <= 16");
}

int degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        p >>= 1;
        ++d;
    }
    return d;
}

std::uint64_t polymod(std::uint64_t a, std::uint64_t m) {
    int dm = degree(m);
    for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
    return a;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

void same_field(const GF2mElement& a, const GF2mElement& b) {
    if (a.m != b.m) throw DomainError("GF(2^m) elements from different fields");
}

}  // namespace

std::uint32_t gf2m_modulus(unsigned m) {
    check_m(m);
    return kModuli[m];
}

bool gf2_poly_irreducible(std::uint64_t poly) {
    int d = degree(poly);
    if (d < 1) return false;
    for (std::uint64_t q = 2; degree(q) <= d / 2; ++q)
        if (polymod(poly, q) == 0) return false;
    return true;
}

GF2mElement gf2_element(unsigned m, std::uint32_t bits) {
    check_m(m);
    if (bits >> m) throw DomainError("GF(2^m) element has bits beyond degree m-1");
    return {m, bits};
}

GF2mElement gf2_zero(unsigned m) { return gf2_element(m, 0); }
GF2mElement gf2_one(unsigned m) { return gf2_element(m, 1); }

GF2mElement gf2_add(const GF2mElement& a, const GF2mElement& b) {
    same_field(a, b);
    return {a.m, a.bits ^ b.bits};
}

GF2mElement gf2_mul(const GF2mElement& a, const GF2mElement& b) {
    same_field(a, b);
    return {a.m, static_cast<std::uint32_t>(polymod(clmul(a.bits, b.bits), gf2m_modulus(a.m)))};
}

GF2mElement gf2_square(const GF2mElement& a) { return gf2_mul(a, a); }

GF2mElement gf2_pow(GF2mElement a, std::uint64_t e) {
    GF2mElement r = gf2_one(a.m);
    while (e) {
        if (e & 1u) r = gf2_mul(r, a);
        a = gf2_square(a);
        e >>= 1;
    }
    return r;
}

GF2mElement gf2_inv(const GF2mElement& a) {
    if (a.bits == 0) throw DomainError("inverse of zero in GF(2^m)");
    return gf2_pow(a, (std::uint64_t{1} << a.m) - 2);
}

GF2mElement gf2_sqrt(const GF2mElement& a) {
    // Frobenius has order m, so its inverse is the (m-1)-fold square
    GF2mElement r = a;
    for (unsigned i = 1; i < a.m; ++i) r = gf2_square(r);
    return r;
}

unsigned gf2_trace(const GF2mElement& a) {
    GF2mElement s = a, t = a;
    for (unsigned i = 1; i < a.m; ++i) {
        t = gf2_square(t);
        s = gf2_add(s, t);
    }
    return s.bits;
}

namespace {

GF2mElement search_generator(unsigned m) {
    const unsigned big = 2 * m;
    const std::uint32_t mod = gf2m_modulus(m);
    for (std::uint32_t v = 1; v < (1u << big); ++v) {
        GF2mElement x = gf2_element(big, v);
        // evaluate the modulus polynomial at x
        GF2mElement acc = gf2_zero(big), pw = gf2_one(big);
        for (unsigned i = 0; i <= m; ++i) {
            if ((mod >> i) & 1u) acc = gf2_add(acc, pw);
            pw = gf2_mul(pw, x);
        }
        if (acc.bits == 0) return x;
    }
    throw DomainError("no embedding found");
}

}  // namespace

GF2mElement gf2_embedding_generator(unsigned m) {
    check_m(m);
    check_m(2 * m);
    static std::array<std::once_flag, 9> once;
    static std::array<GF2mElement, 9> cache;
    std::call_once(once[m], [m] { cache[m] = search_generator(m); });
    return cache[m];
}

GF2mElement gf2_embed(const GF2mElement& a) {
    GF2mElement g = gf2_embedding_generator(a.m);
    GF2mElement acc = gf2_zero(2 * a.m), pw = gf2_one(2 * a.m);
    for (unsigned i = 0; i < a.m; ++i) {
        if ((a.bits >> i) & 1u) acc = gf2_add(acc, pw);
        pw = gf2_mul(pw, g);
    }
    return acc;
}

}  // namespace chebykit
