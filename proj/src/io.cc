#include <mucheck/io.hh>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        struct Line
        {
            int number;
            vector<string> words;
            vector<int> columns;
        };

        // Splits text into nonblank lines of whitespace-separated words, dropping `#` comments.
        auto split_lines(const string & text) -> vector<Line>
        {
            vector<Line> out;
            int number = 0;
            std::istringstream in(text);
            string raw;
            while (std::getline(in, raw)) {
                ++number;
                if (auto hash = raw.find('#'); hash != string::npos)
                    raw.erase(hash);
                Line line{number, {}, {}};
                size_t i = 0;
                while (i < raw.size()) {
                    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                        ++i;
                    size_t j = i;
                    while (j < raw.size() && ! std::isspace(static_cast<unsigned char>(raw[j])))
                        ++j;
                    if (j > i) {
                        line.words.push_back(raw.substr(i, j - i));
                        line.columns.push_back(static_cast<int>(i) + 1);
                    }
                    i = j;
                }
                if (! line.words.empty())
                    out.push_back(std::move(line));
            }
            return out;
        }

        auto to_int(const string & word) -> optional<int>
        {
            int v = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                return std::nullopt;
            return v;
        }

        auto is_identifier(const string & word) -> bool
        {
            if (word.empty() || ! std::isalpha(static_cast<unsigned char>(word[0])))
                return false;
            for (char c : word)
                if (! std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    return false;
            return true;
        }
    }

    auto parse_structure(const string & text, bool strict) -> Structure
    {
        auto lines = split_lines(text);
        if (lines.empty())
            throw ParseError("expected 'universe'", 1, 1);

        auto & head = lines.front();
        if (head.words[0] != "universe" || head.words.size() < 2)
            throw ParseError("expected 'universe <k>' or 'universe <labels...>'", head.number, head.columns[0]);

        map<string, Element> labels;
        int k = 0;
        if (auto n = to_int(head.words[1]); n && head.words.size() == 2) {
            if (*n < 1)
                throw ParseError("universe size must be positive", head.number, head.columns[1]);
            k = *n;
            for (Element e = 1; e <= k; ++e)
                labels.emplace(std::to_string(e), e);
        }
        else {
            for (size_t i = 1; i < head.words.size(); ++i)
                if (! labels.emplace(head.words[i], static_cast<Element>(i)).second)
                    throw ParseError("duplicate universe label '" + head.words[i] + "'", head.number, head.columns[i]);
            k = static_cast<int>(labels.size());
        }

        vector<Symbol> symbols;
        vector<vector<Tuple>> relations;
        size_t pos = 1;
        while (pos < lines.size()) {
            auto & decl = lines[pos++];
            if (decl.words[0] != "rel" || decl.words.size() != 3)
                throw ParseError("expected 'rel <name> <arity>'", decl.number, decl.columns[0]);
            if (! is_identifier(decl.words[1]))
                throw ParseError("bad relation name '" + decl.words[1] + "'", decl.number, decl.columns[1]);
            auto arity = to_int(decl.words[2]);
            if (! arity || *arity < 1)
                throw ParseError("arity must be a positive integer", decl.number, decl.columns[2]);
            for (auto & s : symbols)
                if (s.name == decl.words[1])
                    throw ParseError("relation '" + s.name + "' declared twice", decl.number, decl.columns[1]);

            vector<Tuple> tuples;
            bool closed = false;
            while (pos < lines.size()) {
                auto & row = lines[pos++];
                if (row.words.size() == 1 && row.words[0] == "end") {
                    closed = true;
                    break;
                }
                if (row.words.size() != static_cast<size_t>(*arity))
                    throw ParseError("tuple of length " + std::to_string(row.words.size()) + " in relation of arity "
                            + std::to_string(*arity),
                        row.number, row.columns[0]);
                Tuple t;
                for (size_t i = 0; i < row.words.size(); ++i) {
                    auto it = labels.find(row.words[i]);
                    if (it == labels.end())
                        throw ParseError("unknown element '" + row.words[i] + "'", row.number, row.columns[i]);
                    t.push_back(it->second);
                }
                tuples.push_back(std::move(t));
            }
            if (! closed)
                throw ParseError("relation '" + decl.words[1] + "' is missing 'end'", decl.number, decl.columns[0]);
            symbols.push_back({decl.words[1], *arity});
            relations.push_back(std::move(tuples));
        }
        if (symbols.empty())
            throw ParseError("structure declares no relations", head.number, head.columns[0]);

        return Structure(Signature(std::move(symbols)), k, relations, strict);
    }

    auto format_structure(const Structure & s) -> string
    {
        string out = "universe " + std::to_string(s.universe_size()) + "\n";
        for (size_t i = 0; i < s.signature().size(); ++i) {
            auto & sym = s.signature()[i];
            out += "rel " + sym.name + " " + std::to_string(sym.arity) + "\n";
            for (auto & t : s.relation(i).tuples()) {
                for (size_t j = 0; j < t.size(); ++j)
                    out += (j ? " " : "") + std::to_string(t[j]);
                out += "\n";
            }
            out += "end\n";
        }
        return out;
    }

    auto parse_mvf(const string & text, int target_size) -> MultiValuedFunction
    {
        if (target_size < 1 || target_size > max_mvf_universe)
            throw ParseError("target universe must have between 1 and 64 elements", 1, 1);
        map<int, ElementSet> values;
        for (auto & line : split_lines(text)) {
            auto src = to_int(line.words[0]);
            if (! src || *src < 1)
                throw ParseError("expected a source element", line.number, line.columns[0]);
            if (line.words.size() < 3 || line.words[1] != ":")
                throw ParseError("expected 'i : j1 j2 ...'", line.number, line.columns[0]);
            if (values.contains(*src))
                throw ParseError("element " + line.words[0] + " listed twice", line.number, line.columns[0]);
            ElementSet set = 0;
            for (size_t i = 2; i < line.words.size(); ++i) {
                auto v = to_int(line.words[i]);
                if (! v || *v < 1 || *v > target_size)
                    throw ParseError("value '" + line.words[i] + "' outside the target universe", line.number, line.columns[i]);
                set |= singleton(*v);
            }
            values.emplace(*src, set);
        }
        vector<ElementSet> out;
        for (int a = 1; a <= static_cast<int>(values.size()); ++a) {
            auto it = values.find(a);
            if (it == values.end())
                throw ParseError("no value given for element " + std::to_string(a), 1, 1);
            out.push_back(it->second);
        }
        if (out.empty())
            throw ParseError("empty multi-valued function", 1, 1);
        return MultiValuedFunction(target_size, std::move(out));
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}
