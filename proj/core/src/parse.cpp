#include "modseven/parse.hpp"

#include <cctype>

namespace modseven {

namespace {

class Parser {
public:
    Parser(std::string_view text, ContextPtr ctx) : s_(text), ctx_(std::move(ctx)) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                acc = acc * factor();
            else
                return acc;
        }
    }

    MultiPoly factor() {
        skip_ws();
        if (accept('-')) return -factor();
        MultiPoly base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected exponent");
            base = base.pow(static_cast<unsigned>(read_uint()));
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = read_uint();
            skip_ws();
            if (accept('/')) {
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator");
                long den = read_uint();
                if (den == 0) fail("zero denominator");
                return MultiPoly::constant(ctx_, Coef::rational(num, den));
            }
            return MultiPoly::constant(ctx_, Coef::rational(num, 1));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            auto idx = ctx_->index_of(name);
            if (!idx) throw ParseError("unknown identifier '" + std::string(name) + "'", start + 1);
            return MultiPoly::generator(ctx_, *idx);
        }
        fail("syntax error");
    }

    long read_uint() {
        long v = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v < 0) throw ParseError("integer literal too large", start + 1);
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_ + 1); }

    std::string_view s_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expr(std::string_view text, const ContextPtr& ctx, bool reduce) {
    MultiPoly p = Parser(text, ctx).run();
    return reduce ? nf_sigma2(p) : p;
}

}  // namespace modseven
