#include "symdet/field.hpp"

#include <stdexcept>

namespace symdet {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CoefficientError: return "CoefficientError";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SelfSubstitution: return "SelfSubstitution";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SingularTrailingBlock: return "SingularTrailingBlock";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ShiftExhausted: return "ShiftExhausted";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128(a) * u128(b)) % p);
}

std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128(a) + u128(b)) % p);
}

std::uint64_t submod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : p - (b - a);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid; p prime, 0 < a < p.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // composite witness found
}

} // namespace

// Deterministic Miller-Rabin for all n < 2^64 with the standard 12-witness set.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t modulus) {
    if (modulus == 2) {
        throw Error(ErrorCode::CharacteristicTwo,
                    "characteristic 2 refused: symmetric determinantal representations can fail "
                    "over fields of characteristic 2 (the polynomial x*y + z has none over F_2), "
                    "and the construction needs the scalar 1/2");
    }
    if (!is_prime_u64(modulus)) {
        throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(modulus) + " is not prime");
    }
    return FieldDescriptor(Kind::PrimeField, modulus);
}

FieldDescriptor FieldDescriptor::from_spec(const std::string& spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.rfind("fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, "bad field spec '" + spec + "'");
        }
        try {
            return prime_field(std::stoull(digits));
        } catch (const std::out_of_range&) {
            throw Error(ErrorCode::InvalidArgument, "modulus out of range in '" + spec + "'");
        }
    }
    throw Error(ErrorCode::InvalidArgument, "bad field spec '" + spec + "' (expected \"q\" or \"fp:<prime>\")");
}

std::uint64_t FieldDescriptor::modulus() const {
    if (kind_ != Kind::PrimeField) {
        throw Error(ErrorCode::InvalidArgument, "modulus() called on the rationals");
    }
    return modulus_;
}

std::string FieldDescriptor::spec() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(modulus_);
}

FieldElement FieldElement::zero(const FieldDescriptor& desc) {
    return FieldElement(desc, mpq_class(0), 0);
}

FieldElement FieldElement::one(const FieldDescriptor& desc) {
    return FieldElement(desc, mpq_class(1), desc.is_prime_field() ? 1 % desc.modulus() : 1);
}

FieldElement FieldElement::of_integer(const FieldDescriptor& desc, long long value) {
    return of_mpz(desc, mpz_class(static_cast<long>(value)));
}

FieldElement FieldElement::of_mpz(const FieldDescriptor& desc, const mpz_class& value) {
    if (desc.is_rationals()) {
        return FieldElement(desc, mpq_class(value), 0);
    }
    mpz_class p(static_cast<unsigned long>(desc.modulus()));
    mpz_class r = value % p;
    if (r < 0) r += p;
    return FieldElement(desc, mpq_class(0), r.get_ui());
}

FieldElement FieldElement::of_fraction(const FieldDescriptor& desc, const mpz_class& num,
                                       const mpz_class& den) {
    if (den == 0) {
        throw Error(ErrorCode::CoefficientError, "coefficient with zero denominator");
    }
    if (desc.is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return FieldElement(desc, q, 0);
    }
    FieldElement d = of_mpz(desc, den);
    if (d.is_zero()) {
        throw Error(ErrorCode::CoefficientError,
                    "coefficient denominator is divisible by the field characteristic");
    }
    return of_mpz(desc, num) * d.inverse();
}

FieldElement FieldElement::of_string(const FieldDescriptor& desc, const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return of_mpz(desc, mpz_class(text));
        }
        return of_fraction(desc, mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::CoefficientError, "bad scalar literal '" + text + "'");
    }
}

bool FieldElement::is_zero() const {
    return desc_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
    return desc_.is_rationals() ? rat_ == 1 : res_ == 1 % desc_.modulus();
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (desc_ != other.desc_) {
        throw Error(ErrorCode::FieldMismatch,
                    "operands over " + desc_.spec() + " and " + other.desc_.spec());
    }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(other);
    if (desc_.is_rationals()) return FieldElement(desc_, rat_ + other.rat_, 0);
    return FieldElement(desc_, mpq_class(0), addmod_u64(res_, other.res_, desc_.modulus()));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_field(other);
    if (desc_.is_rationals()) return FieldElement(desc_, rat_ - other.rat_, 0);
    return FieldElement(desc_, mpq_class(0), submod_u64(res_, other.res_, desc_.modulus()));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(other);
    if (desc_.is_rationals()) return FieldElement(desc_, rat_ * other.rat_, 0);
    return FieldElement(desc_, mpq_class(0), mulmod_u64(res_, other.res_, desc_.modulus()));
}

FieldElement FieldElement::operator-() const {
    if (desc_.is_rationals()) return FieldElement(desc_, -rat_, 0);
    return FieldElement(desc_, mpq_class(0), res_ == 0 ? 0 : desc_.modulus() - res_);
}

FieldElement& FieldElement::operator+=(const FieldElement& other) { return *this = *this + other; }
FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this = *this - other; }
FieldElement& FieldElement::operator*=(const FieldElement& other) { return *this = *this * other; }

FieldElement FieldElement::inverse() const {
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    if (desc_.is_rationals()) return FieldElement(desc_, 1 / rat_, 0);
    return FieldElement(desc_, mpq_class(0), invmod_u64(res_, desc_.modulus()));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    if (desc_.is_prime_field()) {
        return FieldElement(desc_, mpq_class(0), powmod_u64(res_, exponent, desc_.modulus()));
    }
    FieldElement acc = one(desc_);
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

FieldElement FieldElement::half(const FieldDescriptor& desc) {
    return of_integer(desc, 2).inverse();
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (desc_ != other.desc_) return false;
    return desc_.is_rationals() ? rat_ == other.rat_ : res_ == other.res_;
}

std::string FieldElement::str() const {
    return desc_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& FieldElement::rational() const {
    if (!desc_.is_rationals()) {
        throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field element");
    }
    return rat_;
}

std::uint64_t FieldElement::residue() const {
    if (!desc_.is_prime_field()) {
        throw Error(ErrorCode::FieldMismatch, "residue() on a rational element");
    }
    return res_;
}

} // namespace symdet
