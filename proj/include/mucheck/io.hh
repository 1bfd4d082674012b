#ifndef MUCHECK_IO_HH
#define MUCHECK_IO_HH

#include <mucheck/formula.hh>
#include <mucheck/mvf.hh>
#include <mucheck/structure.hh>

#include <optional>
#include <stdexcept>
#include <string>

namespace mucheck
{
    /// Malformed input text; carries the 1-based line and column of the problem.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, int line, int column);

        [[nodiscard]] auto line() const -> int { return _line; }
        [[nodiscard]] auto column() const -> int { return _column; }

    private:
        int _line, _column;
    };

    /// Formula grammar (ASCII, `#` starts a comment running to end of line):
    ///
    ///     formula := quantified | disjunction
    ///     quantified := ("forall" | "exists") ident "." formula
    ///     disjunction := conjunction ("|" conjunction)*
    ///     conjunction := unary ("&" unary)*
    ///     unary := "~" unary | quantified | "(" formula ")" | ident "(" ident ("," ident)* ")"
    ///            | ident "=" ident | ident "!=" ident
    ///     ident := [A-Za-z][A-Za-z0-9_]*
    ///
    /// A quantifier scopes as far to the right as possible. When a signature is given the atoms are
    /// type-checked against it (FormulaError on unknown symbols or arity mismatches).
    [[nodiscard]] auto parse_formula(const std::string & text, const Signature * sig = nullptr) -> Formula;

    /// Structure text format:
    ///
    ///     universe <k>                  # elements 1..k
    ///     universe <label> <label> ...  # or labels, mapped to 1..k in order
    ///     rel <name> <arity>
    ///     <e1> ... <e_arity>            # one tuple per line
    ///     end
    ///
    /// Whitespace-insensitive, `#` comments. Malformed text raises ParseError; a well-formed file that
    /// breaks the strict conventions raises StructureError when `strict` is set.
    [[nodiscard]] auto parse_structure(const std::string & text, bool strict = true) -> Structure;
    [[nodiscard]] auto format_structure(const Structure & s) -> std::string;

    /// Multi-valued function text format: one line `i : j1 j2 ...` per source element 1..k.
    [[nodiscard]] auto parse_mvf(const std::string & text, int target_size) -> MultiValuedFunction;

    [[nodiscard]] auto read_file(const std::string & path) -> std::string;
}

#endif
