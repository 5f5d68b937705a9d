#ifndef LCMLAT_FIELD_HPP
#define LCMLAT_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace lcmlat {

/// Coefficient field for homology: the rationals or a prime field F_p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::int64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::int64_t prime() const;

    /// "q" for the rationals, "fp:p" for prime fields.
    std::string to_string() const;
    static FieldSpec parse(std::string_view text);

    bool operator==(const FieldSpec& other) const { return p_ == other.p_; }
    bool operator!=(const FieldSpec& other) const { return p_ != other.p_; }

private:
    explicit FieldSpec(std::int64_t p) : p_(p) {}
    std::int64_t p_;  // 0 encodes the rationals
};

bool is_prime(std::int64_t n);

}  // namespace lcmlat

#endif
