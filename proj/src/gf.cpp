#include "matroid/gf.hpp"

#include <stdexcept>

namespace matroidlab {

FieldId field_from_name(const std::string& name) {
    if (name == "GF2") return FieldId::GF2;
    if (name == "GF3") return FieldId::GF3;
    if (name == "GF4") return FieldId::GF4;
    if (name == "GF5") return FieldId::GF5;
    if (name == "GF8") return FieldId::GF8;
    throw std::invalid_argument("unknown field: " + name);
}

const char* field_name(FieldId id) {
    switch (id) {
        case FieldId::GF2: return "GF2";
        case FieldId::GF3: return "GF3";
        case FieldId::GF4: return "GF4";
        case FieldId::GF5: return "GF5";
        case FieldId::GF8: return "GF8";
    }
    return "?";
}

namespace {

int order_of(FieldId id) {
    switch (id) {
        case FieldId::GF2: return 2;
        case FieldId::GF3: return 3;
        case FieldId::GF4: return 4;
        case FieldId::GF5: return 5;
        case FieldId::GF8: return 8;
    }
    return 0;
}

// Carry-less product reduced modulo the fixed minimal polynomial (the
// modulus argument carries the low coefficients; the leading term is
// implicit and must be cleared together with them).
std::uint8_t poly_mul(std::uint8_t a, std::uint8_t b, int degree, std::uint8_t modulus) {
    unsigned acc = 0;
    for (int i = 0; i < degree; ++i)
        if (b & (1u << i)) acc ^= unsigned(a) << i;
    const unsigned full = unsigned(modulus) | (1u << degree);
    for (int i = 2 * degree - 2; i >= degree; --i)
        if (acc & (1u << i)) acc ^= full << (i - degree);
    return std::uint8_t(acc);
}

}  // namespace

SmallField::SmallField(FieldId id) : id_(id), q_(order_of(id)) {
    if (prime()) {
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                add_[a][b] = std::uint8_t((a + b) % q_);
                mul_[a][b] = std::uint8_t((a * b) % q_);
            }
            neg_[a] = std::uint8_t((q_ - a) % q_);
        }
    } else {
        // x^2+x+1 -> bits 111, x^3+x+1 -> bits 1011 (leading bit implicit).
        const int degree = q_ == 4 ? 2 : 3;
        const std::uint8_t modulus = q_ == 4 ? 0b11 : 0b011;
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                add_[a][b] = std::uint8_t(a ^ b);
                mul_[a][b] = poly_mul(std::uint8_t(a), std::uint8_t(b), degree, modulus);
            }
            neg_[a] = std::uint8_t(a);
        }
    }
    inv_[0] = 0;
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a][b] == 1) inv_[a] = std::uint8_t(b);
}

const SmallField& SmallField::get(FieldId id) {
    static const SmallField gf2(FieldId::GF2);
    static const SmallField gf3(FieldId::GF3);
    static const SmallField gf4(FieldId::GF4);
    static const SmallField gf5(FieldId::GF5);
    static const SmallField gf8(FieldId::GF8);
    switch (id) {
        case FieldId::GF2: return gf2;
        case FieldId::GF3: return gf3;
        case FieldId::GF4: return gf4;
        case FieldId::GF5: return gf5;
        case FieldId::GF8: return gf8;
    }
    throw std::logic_error("bad field id");
}

std::uint8_t SmallField::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return inv_[a];
}

std::string SmallField::format(std::uint8_t a) const {
    if (prime()) return std::to_string(int(a));
    if (id_ == FieldId::GF4) {
        static const char* tok[4] = {"0", "1", "w", "w2"};
        return tok[a];
    }
    static const char* tok[8] = {"0", "1", "a", "a+1", "a2", "a2+1", "a2+a", "a2+a+1"};
    return tok[a];
}

std::uint8_t SmallField::parse(const std::string& token) const {
    for (int a = 0; a < q_; ++a)
        if (format(std::uint8_t(a)) == token) return std::uint8_t(a);
    if (prime() && !token.empty() && token[0] == '-') {
        int v = std::stoi(token);
        int m = ((v % q_) + q_) % q_;
        return std::uint8_t(m);
    }
    throw std::invalid_argument(std::string("bad ") + field_name(id_) + " element: " + token);
}

namespace {
const SmallField& same_field(FieldElement a, FieldElement b) {
    if (a.field != b.field) throw std::invalid_argument("field mismatch");
    return SmallField::get(a.field);
}
}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
    return {a.field, same_field(a, b).add(a.value, b.value)};
}

FieldElement mul(FieldElement a, FieldElement b) {
    return {a.field, same_field(a, b).mul(a.value, b.value)};
}

FieldElement neg(FieldElement a) { return {a.field, SmallField::get(a.field).neg(a.value)}; }

FieldElement inv(FieldElement a) { return {a.field, SmallField::get(a.field).inv(a.value)}; }

}  // namespace matroidlab
