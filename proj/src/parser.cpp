#include "kummerlab/parser.hpp"

#include <cctype>

namespace kummerlab {

namespace {

constexpr std::size_t kMaxInput = 64 * 1024;

class Parser {
public:
    Parser(const std::string& text, RingContextPtr ctx)
        : s_(text), ctx_(std::move(ctx)) {}

    CycloElem run() {
        CycloElem value = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return value;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    CycloElem expr() {
        CycloElem value = term();
        for (;;) {
            if (eat('+')) value += term();
            else if (eat('-')) value -= term();
            else return value;
        }
    }

    CycloElem term() {
        CycloElem value = factor();
        for (;;) {
            if (eat('*')) value *= factor();
            else if (eat('/')) value *= invert(factor());
            else return value;
        }
    }

    CycloElem factor() {
        CycloElem base = atom();
        if (eat('^')) return base.pow(parse_exponent());
        return base;
    }

    CycloElem atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            CycloElem value = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return value;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
        throw ParseError("expected an integer, symbol, '(' or '-'", pos_);
    }

    CycloElem literal() {
        const u64 pk = ctx_->modulus();
        u64 value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = (mul_mod(value, 10, pk) + static_cast<u64>(s_[pos_] - '0')) % pk;
            ++pos_;
        }
        return ctx_->from_residue(value);
    }

    u64 parse_exponent() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a nonnegative integer exponent", pos_);
        u64 value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const u64 digit = static_cast<u64>(s_[pos_] - '0');
            if (value > (~u64(0) - digit) / 10) throw ParseError("exponent too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    CycloElem symbol() {
        const std::size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            name += s_[pos_++];
        if (name == "zeta") return ctx_->zeta();
        if (name == "pi") return ctx_->pi();
        if (name == "varpi") return ctx_->varpi();
        if (name == "p") return ctx_->from_integer(static_cast<i64>(ctx_->p()));
        throw ParseError("unknown symbol '" + name + "'", start);
    }

    const std::string& s_;
    RingContextPtr ctx_;
    std::size_t pos_ = 0;
};

} // namespace

CycloElem parse_element(const std::string& text, const RingContextPtr& ctx) {
    if (text.size() > kMaxInput) throw ParseError("input exceeds 64 KiB", kMaxInput);
    return Parser(text, ctx).run();
}

std::string print_element(const CycloElem& x) {
    const auto& c = x.coeffs();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) {
            out += std::to_string(c[i]);
            out += "*";
        }
        out += "zeta";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace kummerlab
