#include "teamsem/parse.hpp"

#include <cctype>

#include "teamsem/error.hpp"

namespace teamsem {

namespace {

bool is_var_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_var_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

class Parser {
public:
    Parser(const std::string& text, const Signature& sig) : text_(text), sig_(sig) {}

    Formula run() {
        Formula f = parse_disjunction();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c))
            throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }

    std::string parse_var() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !is_var_start(text_[pos_]))
            throw ParseError("expected a variable name", pos_);
        while (pos_ < text_.size() && is_var_char(text_[pos_])) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (!sig_.contains(name))
            throw ParseError("unknown variable '" + name + "'", start);
        return name;
    }

    Formula parse_disjunction() {
        Formula f = parse_conjunction();
        while (try_consume('|')) f = Formula::disj(std::move(f), parse_conjunction());
        return f;
    }

    Formula parse_conjunction() {
        Formula f = parse_unit();
        while (try_consume('&')) f = Formula::conj(std::move(f), parse_unit());
        return f;
    }

    Formula parse_unit() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Formula f = parse_disjunction();
            expect(')', "to close group");
            return f;
        }
        if (c == '!') {
            ++pos_;
            return Formula::neg_var(parse_var());
        }
        if (c == '=') {
            ++pos_;
            expect('(', "after '='");
            std::vector<std::string> args;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] != ';') {
                args.push_back(parse_var());
                while (try_consume(',')) args.push_back(parse_var());
            }
            expect(';', "in dependence atom");
            std::string target = parse_var();
            expect(')', "to close dependence atom");
            return Formula::dep(std::move(args), std::move(target));
        }
        if (is_var_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_var_char(text_[pos_])) ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            if (word == "top") return Formula::top();
            if (word == "bot") return Formula::bot();
            if (!sig_.contains(word))
                throw ParseError("unknown variable '" + word + "'", start);
            return Formula::var(std::move(word));
        }
        throw ParseError("unexpected character", pos_);
    }

    const std::string& text_;
    const Signature& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text, const Signature& sig) {
    return Parser(text, sig).run();
}

}  // namespace teamsem
