#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "symdet/error.hpp"

namespace symdet {

/// Identifies the coefficient field: the rationals, or a prime field F_p with p an
/// odd prime. Characteristic 2 is refused at construction because the pencil
/// constructions need the scalar 1/2.
class FieldDescriptor {
  public:
    enum class Kind { Rationals, PrimeField };

    static FieldDescriptor rationals() { return FieldDescriptor(Kind::Rationals, 0); }
    static FieldDescriptor prime_field(std::uint64_t modulus);

    /// Parses "q" or "fp:<prime>".
    static FieldDescriptor from_spec(const std::string& spec);

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    std::uint64_t modulus() const;

    std::string spec() const;

    bool operator==(const FieldDescriptor& other) const noexcept {
        return kind_ == other.kind_ && modulus_ == other.modulus_;
    }
    bool operator!=(const FieldDescriptor& other) const noexcept { return !(*this == other); }

  private:
    FieldDescriptor(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

bool is_prime_u64(std::uint64_t n);

/// An exact scalar: a reduced fraction over Q, or a residue in [0, p) over F_p.
class FieldElement {
  public:
    /// Default-constructs 0 over Q (needed by containers; avoid relying on it).
    FieldElement() : desc_(FieldDescriptor::rationals()), rat_(0), res_(0) {}

    static FieldElement zero(const FieldDescriptor& desc);
    static FieldElement one(const FieldDescriptor& desc);
    static FieldElement of_integer(const FieldDescriptor& desc, long long value);
    static FieldElement of_mpz(const FieldDescriptor& desc, const mpz_class& value);
    static FieldElement of_fraction(const FieldDescriptor& desc, const mpz_class& num,
                                    const mpz_class& den);
    /// Parses the canonical string form: "num/den" or "num" over Q, a residue over F_p.
    static FieldElement of_string(const FieldDescriptor& desc, const std::string& text);

    const FieldDescriptor& descriptor() const noexcept { return desc_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& other);
    FieldElement& operator-=(const FieldElement& other);
    FieldElement& operator*=(const FieldElement& other);

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;

    /// inverse(2); exists for every admissible field.
    static FieldElement half(const FieldDescriptor& desc);

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    std::string str() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;

  private:
    FieldElement(const FieldDescriptor& desc, mpq_class rat, std::uint64_t res)
        : desc_(desc), rat_(std::move(rat)), res_(res) {}

    void require_same_field(const FieldElement& other) const;

    FieldDescriptor desc_;
    mpq_class rat_;     // used iff Rationals
    std::uint64_t res_; // used iff PrimeField
};

} // namespace symdet
