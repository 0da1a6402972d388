#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace matroidlab {

// The five fields used by the catalog matrices. Non-prime fields are
// polynomial quotients with fixed minimal polynomials:
//   GF(4) = GF(2)[w]/(w^2+w+1),  GF(8) = GF(2)[a]/(a^3+a+1).
// Element values are indices 0..q-1; 0 is zero, 1 is one, and for the
// extension fields the index is the coefficient bit pattern, so the
// canonical generator is index 2 (w resp. a).
enum class FieldId : std::uint8_t { GF2, GF3, GF4, GF5, GF8 };

FieldId field_from_name(const std::string& name);
const char* field_name(FieldId id);

class SmallField {
public:
    static const SmallField& get(FieldId id);

    FieldId id() const { return id_; }
    int order() const { return q_; }
    bool prime() const { return q_ == 2 || q_ == 3 || q_ == 5; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a][neg_[b]]; }
    std::uint8_t inv(std::uint8_t a) const;

    // Generator of the multiplicative group presentation used by the
    // catalog matrices; only meaningful for GF(4) and GF(8).
    std::uint8_t generator() const { return 2; }

    std::string format(std::uint8_t a) const;
    // Accepts the canonical tokens produced by format(), plus negative
    // decimals such as "-1" in the prime fields.
    std::uint8_t parse(const std::string& token) const;

private:
    explicit SmallField(FieldId id);

    FieldId id_;
    int q_;
    std::array<std::array<std::uint8_t, 8>, 8> add_{};
    std::array<std::array<std::uint8_t, 8>, 8> mul_{};
    std::array<std::uint8_t, 8> neg_{};
    std::array<std::uint8_t, 8> inv_{};
};

struct FieldElement {
    FieldId field;
    std::uint8_t value;

    bool operator==(const FieldElement&) const = default;
};

FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);

}  // namespace matroidlab
