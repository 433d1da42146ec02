#include "spectra/parse.hpp"

#include <cctype>

namespace spectra {
namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::InvalidInput,
             "syntax error at byte " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return varpower();
        error("expected a coefficient, variable or '('");
    }

    MultiPoly number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        std::string lit = num;
        std::size_t save = pos_;
        if (eat('/')) {
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart) {
                pos_ = save;  // "/" belonged to something else; not valid here anyway
                error("expected denominator digits");
            }
            lit += "/" + text_.substr(dstart, pos_ - dstart);
        }
        return MultiPoly::constant(ring_, Scalar::parse(ring_->field, lit));
    }

    MultiPoly varpower() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        std::size_t idx = 0;
        for (; idx < ring_->nvars(); ++idx)
            if (ring_->vars[idx] == name) break;
        if (idx == ring_->nvars()) {
            pos_ = start;
            error("unknown variable '" + name + "'");
        }
        std::uint32_t e = 1;
        if (eat('^')) {
            skip_ws();
            std::size_t estart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == estart) error("expected exponent digits");
            unsigned long v = std::stoul(text_.substr(estart, pos_ - estart));
            if (v == 0) error("exponent must be positive");
            e = static_cast<std::uint32_t>(v);
        }
        return MultiPoly::variable(ring_, idx, e);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const FieldSpec& field) {
    return parse_poly(text, make_ring(field, vars));
}

} // namespace spectra
