#include "terminfer/reader.hpp"

#include "terminfer/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace terminfer {

OperatorTable OperatorTable::standard() {
    OperatorTable t;
    t.add_infix(":-", 1200, OpType::XFX);
    t.add_infix("-->", 1200, OpType::XFX);
    t.add_prefix(":-", 1200, OpType::FX);
    t.add_prefix("?-", 1200, OpType::FX);
    t.add_infix(";", 1100, OpType::XFY);
    t.add_infix("|", 1100, OpType::XFY);
    t.add_infix("->", 1050, OpType::XFY);
    t.add_infix("*->", 1050, OpType::XFY);
    t.add_infix(",", 1000, OpType::XFY);
    t.add_prefix("\\+", 900, OpType::FY);
    for (const char *op : {"=", "\\=", "==", "\\==", "@<", "@>", "@=<", "@>=", "=..", "is", "=:=", "=\\=", "<",
                           ">", "=<", ">="})
        t.add_infix(op, 700, OpType::XFX);
    t.add_infix(":", 200, OpType::XFY);
    for (const char *op : {"+", "-", "/\\", "\\/", "xor"})
        t.add_infix(op, 500, OpType::YFX);
    for (const char *op : {"*", "/", "//", "rem", "mod", "div", "<<", ">>"})
        t.add_infix(op, 400, OpType::YFX);
    t.add_infix("**", 200, OpType::XFX);
    t.add_infix("^", 200, OpType::XFY);
    t.add_prefix("-", 200, OpType::FY);
    t.add_prefix("+", 200, OpType::FY);
    t.add_prefix("\\", 200, OpType::FY);
    return t;
}

const OpDef *OperatorTable::infix(const std::string &name) const {
    auto it = infix_.find(name);
    return it == infix_.end() ? nullptr : &it->second;
}

const OpDef *OperatorTable::prefix(const std::string &name) const {
    auto it = prefix_.find(name);
    return it == prefix_.end() ? nullptr : &it->second;
}

namespace {

enum class Tok { Atom, Var, Int, Str, Punct, End, Eof };

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int column = 1;
    /// Atom immediately followed by '(' (functional notation).
    bool functional = false;
    bool layout_before = false;
};

bool symbol_char(char c) { return std::string_view("#$&*+-./:<=>?@^~\\").find(c) != std::string_view::npos; }
bool alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(const std::string &text) : s_(text) {}

    Token next() {
        bool layout = skip_layout();
        Token t;
        t.line = line_;
        t.column = col_;
        t.layout_before = layout;
        if (pos_ >= s_.size()) {
            t.kind = Tok::Eof;
            return t;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            t.value = number(t);
        } else if (c == '_' || std::isupper(static_cast<unsigned char>(c))) {
            t.kind = Tok::Var;
            while (pos_ < s_.size() && alnum(s_[pos_]))
                t.text += advance();
        } else if (std::islower(static_cast<unsigned char>(c))) {
            t.kind = Tok::Atom;
            while (pos_ < s_.size() && alnum(s_[pos_]))
                t.text += advance();
        } else if (c == '\'') {
            t.kind = Tok::Atom;
            t.text = quoted('\'', t);
        } else if (c == '"') {
            t.kind = Tok::Str;
            t.text = quoted('"', t);
        } else if (c == '.' && (pos_ + 1 >= s_.size() || std::isspace(static_cast<unsigned char>(s_[pos_ + 1])) ||
                                s_[pos_ + 1] == '%')) {
            advance();
            t.kind = Tok::End;
            t.text = ".";
            return t;
        } else if (symbol_char(c)) {
            t.kind = Tok::Atom;
            while (pos_ < s_.size() && symbol_char(s_[pos_]))
                t.text += advance();
        } else if (c == '!' || c == ';') {
            t.kind = Tok::Atom;
            t.text = std::string(1, advance());
        } else if (std::string_view("()[]{},|").find(c) != std::string_view::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, advance());
            return t;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        if (t.kind == Tok::Atom && pos_ < s_.size() && s_[pos_] == '(')
            t.functional = true;
        return t;
    }

private:
    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool skip_layout() {
        bool any = false;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < s_.size() && s_[pos_] != '\n')
                    advance();
            } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*') {
                int l = line_, k = col_;
                advance();
                advance();
                while (pos_ + 1 < s_.size() && !(s_[pos_] == '*' && s_[pos_ + 1] == '/'))
                    advance();
                if (pos_ + 1 >= s_.size())
                    throw SyntaxError("unterminated block comment", l, k);
                advance();
                advance();
            } else {
                break;
            }
            any = true;
        }
        return any;
    }

    std::int64_t number(const Token &t) {
        if (s_[pos_] == '0' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '\'') {
            advance();
            advance();
            if (pos_ >= s_.size())
                throw SyntaxError("incomplete character code", t.line, t.column);
            char c = advance();
            if (c == '\\')
                return escape(t);
            if (c == '\'' && pos_ < s_.size() && s_[pos_] == '\'')
                advance();
            return static_cast<unsigned char>(c);
        }
        int base = 10;
        if (s_[pos_] == '0' && pos_ + 2 < s_.size() && (s_[pos_ + 1] == 'x' || s_[pos_ + 1] == 'o' || s_[pos_ + 1] == 'b') &&
            std::isxdigit(static_cast<unsigned char>(s_[pos_ + 2]))) {
            base = s_[pos_ + 1] == 'x' ? 16 : s_[pos_ + 1] == 'o' ? 8 : 2;
            advance();
            advance();
        }
        std::string digits;
        while (pos_ < s_.size() && (base == 16 ? std::isxdigit(static_cast<unsigned char>(s_[pos_]))
                                               : std::isdigit(static_cast<unsigned char>(s_[pos_]))))
            digits += advance();
        if (base == 10 && pos_ + 1 < s_.size() && s_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
            throw SyntaxError("floating-point numbers are not supported", t.line, t.column);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
        if (ec != std::errc() || p != digits.data() + digits.size())
            throw SyntaxError("integer out of range", t.line, t.column);
        return v;
    }

    char escape(const Token &t) {
        if (pos_ >= s_.size())
            throw SyntaxError("incomplete escape sequence", t.line, t.column);
        char c = advance();
        switch (c) {
        case 'n':
            return '\n';
        case 't':
            return '\t';
        case '\\':
        case '\'':
        case '"':
        case '`':
            return c;
        default:
            throw SyntaxError(std::string("unsupported escape sequence \\") + c, t.line, t.column);
        }
    }

    std::string quoted(char q, const Token &t) {
        advance();
        std::string out;
        for (;;) {
            if (pos_ >= s_.size())
                throw SyntaxError("unterminated quoted text", t.line, t.column);
            char c = advance();
            if (c == q) {
                if (pos_ < s_.size() && s_[pos_] == q) {
                    out += advance();
                    continue;
                }
                return out;
            }
            if (c == '\\') {
                if (pos_ < s_.size() && s_[pos_] == '\n') {
                    advance();
                    continue;
                }
                out += escape(t);
                continue;
            }
            out += c;
        }
    }

    const std::string &s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string &text, const OperatorTable &ops) : lex_(text), ops_(ops) { tok_ = lex_.next(); }

    bool at_eof() const { return tok_.kind == Tok::Eof; }
    const Token &peek() const { return tok_; }

    ReadTerm clause(bool require_end) {
        anon_ = 0;
        ReadTerm rt;
        rt.line = tok_.line;
        rt.column = tok_.column;
        rt.term = parse(1200);
        if (tok_.kind == Tok::End)
            shift();
        else if (require_end || tok_.kind != Tok::Eof)
            fail("operator expected");
        name_anonymous(rt.term);
        return rt;
    }

private:
    Token shift() {
        Token t = tok_;
        tok_ = lex_.next();
        return t;
    }

    [[noreturn]] void fail(const std::string &msg) const {
        std::string near = tok_.kind == Tok::Eof ? "end of file" : tok_.kind == Tok::End ? "'.'" : "'" + tok_.text + "'";
        throw SyntaxError(msg + " near " + near, tok_.line, tok_.column);
    }

    void expect(const char *punct) {
        if (tok_.kind != Tok::Punct || tok_.text != punct)
            fail(std::string("expected '") + punct + "'");
        shift();
    }

    bool is_punct(const char *p) const { return tok_.kind == Tok::Punct && tok_.text == p; }

    bool term_ends_here() const {
        if (tok_.kind == Tok::End || tok_.kind == Tok::Eof)
            return true;
        if (tok_.kind == Tok::Punct)
            return tok_.text == ")" || tok_.text == "]" || tok_.text == "}" || tok_.text == "," || tok_.text == "|";
        return false;
    }

    // Infix operator name at the current token, if any.
    std::optional<std::string> infix_name() const {
        if (tok_.kind == Tok::Atom)
            return tok_.text;
        if (tok_.kind == Tok::Punct && (tok_.text == "," || tok_.text == "|"))
            return tok_.text;
        return std::nullopt;
    }

    Term parse(int max) {
        auto [left, prec] = primary(max);
        return infix(std::move(left), prec, max);
    }

    Term infix(Term left, int left_prec, int max) {
        for (;;) {
            auto name = infix_name();
            if (!name)
                break;
            const OpDef *op = ops_.infix(*name);
            if (!op || op->priority > max)
                break;
            int left_max = op->type == OpType::YFX ? op->priority : op->priority - 1;
            int right_max = op->type == OpType::XFY ? op->priority : op->priority - 1;
            if (left_prec > left_max)
                break;
            shift();
            Term right = parse(right_max);
            std::string functor = *name == "|" ? ";" : *name;
            left = Term::compound(functor, {std::move(left), std::move(right)});
            left_prec = op->priority;
        }
        return left;
    }

    std::vector<Term> arguments() {
        std::vector<Term> args;
        expect("(");
        args.push_back(parse(999));
        while (is_punct(",")) {
            shift();
            args.push_back(parse(999));
        }
        expect(")");
        return args;
    }

    std::pair<Term, int> primary(int max) {
        Token t = tok_;
        switch (t.kind) {
        case Tok::Int:
            shift();
            return {Term::integer(t.value), 0};
        case Tok::Var:
            shift();
            if (t.text == "_")
                return {Term::variable("\x01" + std::to_string(anon_++)), 0};
            return {Term::variable(t.text), 0};
        case Tok::Str: {
            shift();
            std::vector<Term> codes;
            for (unsigned char c : t.text)
                codes.push_back(Term::integer(c));
            return {Term::list(std::move(codes)), 0};
        }
        case Tok::End:
        case Tok::Eof:
            fail("unexpected end of clause");
        case Tok::Punct:
            return punct(max);
        case Tok::Atom:
            break;
        }
        shift();
        if (t.functional)
            return {Term::compound(t.text, arguments()), 0};
        if (t.text == "-" && tok_.kind == Tok::Int && !tok_.layout_before) {
            Token n = shift();
            return {Term::integer(-n.value), 0};
        }
        if (const OpDef *op = ops_.prefix(t.text); op && !term_ends_here()) {
            // An infix operator right after a prefix operator means the
            // prefix operator is an operand: `- = x`.
            auto next = infix_name();
            bool operand = next && ops_.infix(*next) && !ops_.prefix(*next) && !tok_.functional &&
                           tok_.kind == Tok::Atom;
            if (!operand) {
                int p = op->priority;
                if (p > max)
                    p = 999;
                int arg_max = op->type == OpType::FY ? p : p - 1;
                Term arg = parse(arg_max);
                return {Term::compound(t.text, {std::move(arg)}), p};
            }
        }
        return {Term::constant(t.text), 0};
    }

    std::pair<Term, int> punct(int) {
        Token t = shift();
        if (t.text == "(") {
            Term inner = parse(1200);
            expect(")");
            return {inner, 0};
        }
        if (t.text == "[") {
            if (is_punct("]")) {
                shift();
                return {Term::constant("[]"), 0};
            }
            std::vector<Term> items{parse(999)};
            while (is_punct(",")) {
                shift();
                items.push_back(parse(999));
            }
            Term tail = Term::constant("[]");
            if (is_punct("|")) {
                shift();
                tail = parse(999);
            }
            expect("]");
            return {Term::list(std::move(items), std::move(tail)), 0};
        }
        if (t.text == "{") {
            if (is_punct("}")) {
                shift();
                return {Term::constant("{}"), 0};
            }
            Term inner = parse(1200);
            expect("}");
            return {Term::compound("{}", {std::move(inner)}), 0};
        }
        tok_ = t;
        fail("unexpected '" + t.text + "'");
    }

    // Replaces placeholder names of `_` with fresh `_G<n>` names unused in
    // the clause.
    void name_anonymous(Term &t) {
        if (anon_ == 0)
            return;
        std::set<std::string> used;
        for (const auto &v : t.variables())
            used.insert(v);
        std::map<std::string, std::string> fresh;
        int k = 0;
        for (int i = 0; i < anon_; ++i) {
            std::string n;
            do
                n = "_G" + std::to_string(k++);
            while (used.count(n));
            fresh["\x01" + std::to_string(i)] = n;
        }
        rename(t, fresh);
    }

    static void rename(Term &t, const std::map<std::string, std::string> &m) {
        if (t.is_variable()) {
            auto it = m.find(t.name);
            if (it != m.end())
                t.name = it->second;
            return;
        }
        for (auto &a : t.args)
            rename(a, m);
    }

    Lexer lex_;
    const OperatorTable &ops_;
    Token tok_;
    int anon_ = 0;
};

} // namespace

std::vector<ReadTerm> read_terms(const std::string &text, const OperatorTable &ops) {
    Parser p(text, ops);
    std::vector<ReadTerm> out;
    while (!p.at_eof())
        out.push_back(p.clause(true));
    return out;
}

Term read_term(const std::string &text, const OperatorTable &ops) {
    Parser p(text, ops);
    Term t = p.clause(false).term;
    if (!p.at_eof())
        throw SyntaxError("trailing text after term", p.peek().line, p.peek().column);
    return t;
}

} // namespace terminfer
