#include "symdet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symdet {

VariableRegistry::VariableRegistry(std::vector<std::string> names) {
    for (auto& n : names) add(n);
}

std::size_t VariableRegistry::add(const std::string& name) {
    if (auto idx = find(name)) return *idx;
    names_.push_back(name);
    return names_.size() - 1;
}

std::optional<std::size_t> VariableRegistry::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t VariableRegistry::index_of(const std::string& name) const {
    if (auto idx = find(name)) return *idx;
    throw Error(ErrorCode::UnknownVariable, "variable '" + name + "' not in registry");
}

VariableRegistry VariableRegistry::without(const std::string& name) const {
    VariableRegistry out;
    for (const auto& n : names_) {
        if (n != name) out.add(n);
    }
    return out;
}

std::size_t VariableRegistry::next_fresh_index() const {
    std::size_t next = 0;
    const std::string prefix = kFreshPrefix;
    for (const auto& n : names_) {
        if (n.rfind(prefix, 0) != 0) continue;
        const std::string tail = n.substr(prefix.size());
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) continue;
        next = std::max(next, static_cast<std::size_t>(std::stoull(tail)) + 1);
    }
    return next;
}

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.push_back({index, exponent});
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [_, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t index) const {
    for (const auto& [v, e] : factors_) {
        if (v == index) return e;
    }
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::with_exponent(std::uint32_t index, std::uint32_t exponent) const {
    Monomial out;
    bool placed = false;
    for (const auto& f : factors_) {
        if (f.first == index) {
            if (exponent > 0) out.factors_.push_back({index, exponent});
            placed = true;
        } else {
            if (!placed && f.first > index && exponent > 0) {
                out.factors_.push_back({index, exponent});
                placed = true;
            }
            out.factors_.push_back(f);
        }
    }
    if (!placed && exponent > 0) out.factors_.push_back({index, exponent});
    return out;
}

Monomial Monomial::remapped(const std::vector<std::uint32_t>& index_map) const {
    Monomial out;
    for (const auto& [v, e] : factors_) {
        out = out.times(Monomial::variable(index_map.at(v), e));
    }
    return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db;
    // Same degree: walk variable indices ascending; the monomial with the larger
    // exponent on the earliest differing variable is grlex-larger.
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false; // equal
}

Polynomial::Polynomial(const FieldDescriptor& desc, VariableRegistry registry)
    : desc_(desc), registry_(std::move(registry)) {}

Polynomial Polynomial::constant(const FieldElement& value, VariableRegistry registry) {
    Polynomial p(value.descriptor(), std::move(registry));
    p.add_term(Monomial(), value);
    return p;
}

Polynomial Polynomial::variable(const FieldDescriptor& desc, const std::string& name) {
    Polynomial p(desc);
    const auto idx = p.registry_.add(name);
    p.add_term(Monomial::variable(static_cast<std::uint32_t>(idx)), FieldElement::one(desc));
    return p;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool Polynomial::is_affine_linear() const {
    for (const auto& [m, _] : terms_) {
        if (m.total_degree() > 1) return false;
    }
    return true;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(desc_) : it->second;
}

FieldElement Polynomial::constant_term() const { return coefficient(Monomial()); }

void Polynomial::add_term(const Monomial& m, const FieldElement& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {

// Union registry plus the index maps into it.
VariableRegistry merge_registries(const VariableRegistry& a, const VariableRegistry& b,
                                  std::vector<std::uint32_t>& map_a,
                                  std::vector<std::uint32_t>& map_b) {
    VariableRegistry merged = a;
    map_a.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) map_a[i] = static_cast<std::uint32_t>(i);
    map_b.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        map_b[i] = static_cast<std::uint32_t>(merged.add(b.name(i)));
    }
    return merged;
}

} // namespace

Polynomial Polynomial::over_registry(const VariableRegistry& target) const {
    std::vector<std::uint32_t> map(registry_.size());
    for (std::size_t i = 0; i < registry_.size(); ++i) {
        map[i] = static_cast<std::uint32_t>(target.index_of(registry_.name(i)));
    }
    Polynomial out(desc_, target);
    for (const auto& [m, c] : terms_) out.add_term(m.remapped(map), c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (desc_ != other.desc_) {
        throw Error(ErrorCode::FieldMismatch, "polynomial addition across fields");
    }
    std::vector<std::uint32_t> ma, mb;
    VariableRegistry merged = merge_registries(registry_, other.registry_, ma, mb);
    Polynomial out(desc_, merged);
    for (const auto& [m, c] : terms_) out.add_term(m.remapped(ma), c);
    for (const auto& [m, c] : other.terms_) out.add_term(m.remapped(mb), c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (desc_ != other.desc_) {
        throw Error(ErrorCode::FieldMismatch, "polynomial multiplication across fields");
    }
    std::vector<std::uint32_t> ma, mb;
    VariableRegistry merged = merge_registries(registry_, other.registry_, ma, mb);
    Polynomial out(desc_, merged);
    for (const auto& [m1, c1] : terms_) {
        const Monomial r1 = m1.remapped(ma);
        for (const auto& [m2, c2] : other.terms_) {
            out.add_term(r1.times(m2.remapped(mb)), c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(desc_, registry_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial out(desc_, registry_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::pow(std::uint64_t exponent) const {
    Polynomial acc = Polynomial::constant(FieldElement::one(desc_), registry_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) acc = acc * base;
        base = base * base;
        exponent >>= 1;
    }
    return acc;
}

FieldElement Polynomial::evaluate(const Assignment& point) const {
    std::vector<FieldElement> values(registry_.size(), FieldElement::zero(desc_));
    for (std::size_t i = 0; i < registry_.size(); ++i) {
        auto it = point.find(registry_.name(i));
        if (it == point.end()) {
            throw Error(ErrorCode::MissingAssignment,
                        "no value for variable '" + registry_.name(i) + "'");
        }
        if (it->second.descriptor() != desc_) {
            throw Error(ErrorCode::FieldMismatch, "assignment for '" + registry_.name(i) +
                                                      "' lies in a different field");
        }
        values[i] = it->second;
    }
    FieldElement acc = FieldElement::zero(desc_);
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (const auto& [v, e] : m.factors()) t *= values[v].pow(e);
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute_product(const std::string& w, const std::string& u,
                                          const std::string& v) const {
    if (w == u || w == v) {
        throw Error(ErrorCode::SelfSubstitution, "substituted variable '" + w +
                                                     "' appears in the replacement product");
    }
    const auto wi = static_cast<std::uint32_t>(registry_.index_of(w));
    registry_.index_of(u);
    registry_.index_of(v);

    const VariableRegistry out_registry = registry_.without(w);
    const auto ui = static_cast<std::uint32_t>(out_registry.index_of(u));
    const auto vi = static_cast<std::uint32_t>(out_registry.index_of(v));

    std::vector<std::uint32_t> map(registry_.size(), 0);
    for (std::size_t i = 0; i < registry_.size(); ++i) {
        if (i != wi) map[i] = static_cast<std::uint32_t>(out_registry.index_of(registry_.name(i)));
    }

    Polynomial out(desc_, out_registry);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponent_of(wi);
        Monomial rest = m.with_exponent(wi, 0).remapped(map);
        if (e > 0) {
            rest = rest.times(Monomial::variable(ui, e)).times(Monomial::variable(vi, e));
        }
        out.add_term(rest, c);
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (desc_ != other.desc_) return false;
    if (registry_ == other.registry_) return terms_ == other.terms_;
    std::vector<std::uint32_t> ma, mb;
    VariableRegistry merged = merge_registries(registry_, other.registry_, ma, mb);
    return over_registry(merged).terms_ == other.over_registry(merged).terms_;
}

std::string Polynomial::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.str();
        bool negative = !coeff.empty() && coeff[0] == '-';
        std::string magnitude = negative ? coeff.substr(1) : coeff;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        if (m.is_constant()) {
            out << magnitude;
        } else {
            if (magnitude != "1") out << magnitude << "*";
            bool first_var = true;
            for (const auto& [v, e] : m.factors()) {
                if (!first_var) out << "*";
                out << registry_.name(v);
                if (e > 1) out << "^" << e;
                first_var = false;
            }
        }
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos; // 0-based offset into the input
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", start};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_ = {Token::Kind::Integer, text_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            current_ = {Token::Kind::Ident, text_.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': current_ = {Token::Kind::Plus, "+", start}; return;
        case '-': current_ = {Token::Kind::Minus, "-", start}; return;
        case '*': current_ = {Token::Kind::Star, "*", start}; return;
        case '^': current_ = {Token::Kind::Caret, "^", start}; return;
        case '/': current_ = {Token::Kind::Slash, "/", start}; return;
        case '(': current_ = {Token::Kind::LParen, "(", start}; return;
        case ')': current_ = {Token::Kind::RParen, ")", start}; return;
        default:
            throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, c) +
                                                    "' at position " + std::to_string(start + 1));
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, "", 0};
};

[[noreturn]] void fail_at(const Token& t, const std::string& expected) {
    const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorCode::SyntaxError, "expected " + expected + " but found " + found +
                                            " at position " + std::to_string(t.pos + 1));
}

class Parser {
  public:
    Parser(const std::string& text, const FieldDescriptor& desc, Polynomial& out)
        : lexer_(text), desc_(desc), out_(out) {}

    void run() {
        Polynomial p = parse_expr();
        if (lexer_.peek().kind != Token::Kind::End) fail_at(lexer_.peek(), "operator or end of input");
        out_ = p;
    }

  private:
    Polynomial parse_expr() {
        bool negate = false;
        if (lexer_.peek().kind == Token::Kind::Plus) {
            lexer_.take();
        } else if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            negate = true;
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (lexer_.peek().kind == Token::Kind::Plus || lexer_.peek().kind == Token::Kind::Minus) {
            const bool minus = lexer_.take().kind == Token::Kind::Minus;
            Polynomial t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lexer_.peek().kind == Token::Kind::Star) {
            lexer_.take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (lexer_.peek().kind == Token::Kind::Caret) {
            lexer_.take();
            const Token e = lexer_.take();
            if (e.kind != Token::Kind::Integer) fail_at(e, "a nonnegative integer exponent");
            return base.pow(std::stoull(e.text));
        }
        return base;
    }

    Polynomial parse_base() {
        const Token t = lexer_.take();
        switch (t.kind) {
        case Token::Kind::Integer: {
            if (lexer_.peek().kind == Token::Kind::Slash) {
                lexer_.take();
                const Token den = lexer_.take();
                if (den.kind != Token::Kind::Integer) fail_at(den, "an integer denominator");
                return Polynomial::constant(
                    FieldElement::of_fraction(desc_, mpz_class(t.text), mpz_class(den.text)));
            }
            return Polynomial::constant(FieldElement::of_mpz(desc_, mpz_class(t.text)));
        }
        case Token::Kind::Ident:
            return Polynomial::variable(desc_, t.text);
        case Token::Kind::LParen: {
            Polynomial inner = parse_expr();
            const Token close = lexer_.take();
            if (close.kind != Token::Kind::RParen) fail_at(close, "')'");
            return inner;
        }
        default:
            fail_at(t, "a number, variable, or '('");
        }
    }

    Lexer lexer_;
    FieldDescriptor desc_;
    Polynomial& out_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const FieldDescriptor& desc) {
    Polynomial out(desc);
    Parser(text, desc, out).run();
    return out;
}

} // namespace symdet
