#include <mucheck/io.hh>

#include <cctype>

using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        enum class TokenKind
        {
            Ident,
            Forall,
            Exists,
            Dot,
            And,
            Or,
            Not,
            Eq,
            Neq,
            LParen,
            RParen,
            Comma,
            End
        };

        struct Token
        {
            TokenKind kind;
            string text;
            int line, column;
        };

        auto tokenize(const string & text) -> vector<Token>
        {
            vector<Token> out;
            int line = 1, column = 1;
            size_t i = 0;
            auto advance = [&](size_t n) {
                for (size_t j = 0; j < n; ++j, ++i) {
                    if (text[i] == '\n') {
                        ++line;
                        column = 1;
                    }
                    else
                        ++column;
                }
            };
            while (i < text.size()) {
                char c = text[i];
                if (std::isspace(static_cast<unsigned char>(c))) {
                    advance(1);
                    continue;
                }
                if (c == '#') {
                    while (i < text.size() && text[i] != '\n')
                        advance(1);
                    continue;
                }
                int l = line, col = column;
                if (std::isalpha(static_cast<unsigned char>(c))) {
                    size_t j = i;
                    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                        ++j;
                    auto word = text.substr(i, j - i);
                    auto kind = word == "forall" ? TokenKind::Forall : word == "exists" ? TokenKind::Exists : TokenKind::Ident;
                    out.push_back({kind, word, l, col});
                    advance(j - i);
                    continue;
                }
                if (c == '!' && i + 1 < text.size() && text[i + 1] == '=') {
                    out.push_back({TokenKind::Neq, "!=", l, col});
                    advance(2);
                    continue;
                }
                TokenKind kind;
                switch (c) {
                case '.': kind = TokenKind::Dot; break;
                case '&': kind = TokenKind::And; break;
                case '|': kind = TokenKind::Or; break;
                case '~': kind = TokenKind::Not; break;
                case '=': kind = TokenKind::Eq; break;
                case '(': kind = TokenKind::LParen; break;
                case ')': kind = TokenKind::RParen; break;
                case ',': kind = TokenKind::Comma; break;
                default: throw ParseError(string("unexpected character '") + c + "'", l, col);
                }
                out.push_back({kind, string(1, c), l, col});
                advance(1);
            }
            out.push_back({TokenKind::End, "end of input", line, column});
            return out;
        }

        class Parser
        {
        public:
            explicit Parser(vector<Token> tokens) : _tokens(std::move(tokens)) {}

            auto parse() -> Formula
            {
                auto f = formula();
                if (peek().kind != TokenKind::End)
                    fail("expected end of input");
                return f;
            }

        private:
            vector<Token> _tokens;
            size_t _pos = 0;

            auto peek() const -> const Token & { return _tokens[_pos]; }
            auto take() -> const Token & { return _tokens[_pos++]; }

            [[noreturn]] auto fail(const string & what) const -> void
            {
                auto & t = peek();
                throw ParseError(what + ", found '" + t.text + "'", t.line, t.column);
            }

            auto expect(TokenKind kind, const string & what) -> const Token &
            {
                if (peek().kind != kind)
                    fail("expected " + what);
                return take();
            }

            auto formula() -> Formula
            {
                if (peek().kind == TokenKind::Forall || peek().kind == TokenKind::Exists)
                    return quantified();
                return disjunction();
            }

            auto quantified() -> Formula
            {
                bool is_forall = take().kind == TokenKind::Forall;
                auto var = expect(TokenKind::Ident, "a variable").text;
                expect(TokenKind::Dot, "'.'");
                auto body = formula();
                return is_forall ? Formula::forall(var, body) : Formula::exists(var, body);
            }

            auto disjunction() -> Formula
            {
                vector<Formula> parts{conjunction()};
                while (peek().kind == TokenKind::Or) {
                    take();
                    parts.push_back(conjunction());
                }
                return disjoin(std::move(parts));
            }

            auto conjunction() -> Formula
            {
                vector<Formula> parts{unary()};
                while (peek().kind == TokenKind::And) {
                    take();
                    parts.push_back(unary());
                }
                return conjoin(std::move(parts));
            }

            auto unary() -> Formula
            {
                switch (peek().kind) {
                case TokenKind::Not:
                    take();
                    return Formula::negation(unary());
                case TokenKind::Forall:
                case TokenKind::Exists:
                    return quantified();
                case TokenKind::LParen: {
                    take();
                    auto f = formula();
                    expect(TokenKind::RParen, "')'");
                    return f;
                }
                case TokenKind::Ident: {
                    auto name = take().text;
                    if (peek().kind == TokenKind::LParen) {
                        take();
                        vector<string> args{expect(TokenKind::Ident, "a variable").text};
                        while (peek().kind == TokenKind::Comma) {
                            take();
                            args.push_back(expect(TokenKind::Ident, "a variable").text);
                        }
                        expect(TokenKind::RParen, "')'");
                        return Formula::atom(name, std::move(args));
                    }
                    if (peek().kind == TokenKind::Eq) {
                        take();
                        return Formula::eq(name, expect(TokenKind::Ident, "a variable").text);
                    }
                    if (peek().kind == TokenKind::Neq) {
                        take();
                        return Formula::neq(name, expect(TokenKind::Ident, "a variable").text);
                    }
                    fail("expected '(', '=' or '!=' after identifier");
                }
                default:
                    fail("expected a formula");
                }
            }
        };
    }

    ParseError::ParseError(const string & message, int line, int column) :
        std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        _line(line),
        _column(column)
    {
    }

    auto parse_formula(const string & text, const Signature * sig) -> Formula
    {
        auto f = Parser(tokenize(text)).parse();
        if (sig)
            check_signature(f, *sig);
        return f;
    }
}
