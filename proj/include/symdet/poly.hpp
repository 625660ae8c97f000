#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdet/field.hpp"

namespace symdet {

/// Ordered list of distinct variable names. Original variables come first; fresh
/// variables (reserved prefix "__w") are appended in creation order.
class VariableRegistry {
  public:
    static constexpr const char* kFreshPrefix = "__w";

    VariableRegistry() = default;
    explicit VariableRegistry(std::vector<std::string> names);

    std::size_t add(const std::string& name); // no-op if present; returns index
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const; // throws UnknownVariable
    bool contains(const std::string& name) const { return find(name).has_value(); }

    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }

    VariableRegistry without(const std::string& name) const;

    /// First k with "__w<k>" not yet taken by any name in the registry.
    std::size_t next_fresh_index() const;

    bool operator==(const VariableRegistry& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
};

/// Sparse exponent vector keyed by variable index; exponents are >= 1, the empty
/// monomial is the constant 1.
class Monomial {
  public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>; // (variable index, exponent)

    Monomial() = default;

    static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);

    std::uint64_t total_degree() const;
    std::uint32_t exponent_of(std::uint32_t index) const;
    bool is_constant() const { return factors_.empty(); }

    Monomial times(const Monomial& other) const;
    Monomial with_exponent(std::uint32_t index, std::uint32_t exponent) const; // 0 erases

    /// Applies an index translation (e.g. after a registry change).
    Monomial remapped(const std::vector<std::uint32_t>& index_map) const;

    const std::vector<Factor>& factors() const { return factors_; }

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  private:
    std::vector<Factor> factors_; // sorted by variable index
};

/// Graded-lexicographic order, largest first: higher total degree wins, ties broken
/// by the earlier registry variable with the larger exponent.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<std::string, FieldElement>;

/// Sparse multivariate polynomial in canonical form: no zero coefficients, terms
/// ordered graded-lexicographically.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, FieldElement, GrlexGreater>;

    explicit Polynomial(const FieldDescriptor& desc, VariableRegistry registry = {});

    static Polynomial constant(const FieldElement& value, VariableRegistry registry = {});
    static Polynomial variable(const FieldDescriptor& desc, const std::string& name);

    const FieldDescriptor& descriptor() const { return desc_; }
    const VariableRegistry& registry() const { return registry_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Max over terms of exponent sums; 0 for constants and for the zero polynomial.
    std::uint64_t total_degree() const;
    bool is_affine_linear() const;

    FieldElement coefficient(const Monomial& m) const;
    FieldElement constant_term() const;

    void add_term(const Monomial& m, const FieldElement& coeff);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial pow(std::uint64_t exponent) const;

    FieldElement evaluate(const Assignment& point) const;

    /// Replaces every occurrence of w by the product u*v (u = v allowed); w leaves
    /// the registry of the result.
    Polynomial substitute_product(const std::string& w, const std::string& u,
                                  const std::string& v) const;

    /// Rebuilds this polynomial over the given registry (a superset by name).
    Polynomial over_registry(const VariableRegistry& target) const;

    std::string render() const;

    /// Equality as polynomials: same field, same terms matched by variable name.
    /// Registry padding and ordering do not participate.
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

  private:
    FieldDescriptor desc_;
    VariableRegistry registry_;
    TermMap terms_;
};

/// Parses the polynomial grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := number | ident | '(' expr ')'
///   number := uint ('/' uint)?
/// Identifiers match [A-Za-z_][A-Za-z0-9_]*; implicit multiplication is a syntax
/// error. Fraction literals use the field inverse (rejected when the denominator
/// vanishes in the field).
Polynomial parse_polynomial(const std::string& text, const FieldDescriptor& desc);

} // namespace symdet
