#include "ocfl/formats.hpp"

#include <map>
#include <set>
#include <sstream>

namespace ocfl {

ParseError::ParseError(std::string file, std::size_t line, std::string token, const std::string& message)
    : Error(file + ":" + std::to_string(line) + ": at '" + token + "': " + message),
      file_(std::move(file)),
      line_(line),
      token_(std::move(token)) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        Line l{number, {}};
        for (std::string tok; in >> tok;) l.tokens.push_back(tok);
        if (!l.tokens.empty()) out.push_back(std::move(l));
        pos = end + 1;
    }
    return out;
}

class Reader {
  public:
    Reader(std::string_view text, std::string file) : lines_(tokenize(text)), file_(std::move(file)) {}

    bool done() const { return i_ >= lines_.size(); }
    const Line& peek() const { return lines_[i_]; }
    const Line& next() { return lines_[i_++]; }

    [[noreturn]] void fail(const Line& l, std::size_t k, const std::string& msg) const {
        const std::string tok = k < l.tokens.size() ? l.tokens[k] : "end of line";
        throw ParseError(file_, l.number, tok, msg);
    }
    [[noreturn]] void fail_eof(const std::string& msg) const {
        throw ParseError(file_, lines_.empty() ? 1 : lines_.back().number, "end of file", msg);
    }

    Symbol letter(const Line& l, std::size_t k) const {
        const std::string& t = l.tokens.at(k);
        if (t == "eps" || t == "|" || t == "->" || t == ";") fail(l, k, "expected a letter");
        try {
            return Symbol::parse(t);
        } catch (const Error& e) {
            fail(l, k, e.what());
        }
    }

    const std::string& file() const { return file_; }

  private:
    std::vector<Line> lines_;
    std::string file_;
    std::size_t i_ = 0;
};

// Interned names of one kind (states or stack letters).
class Names {
  public:
    explicit Names(std::string kind) : kind_(std::move(kind)) {}
    void declare(const Reader& r, const Line& l, std::size_t k) {
        const std::string& n = l.tokens[k];
        if (ids_.contains(n)) r.fail(l, k, "duplicate " + kind_);
        ids_.emplace(n, static_cast<int>(names_.size()));
        names_.push_back(n);
    }
    int id(const Reader& r, const Line& l, std::size_t k) const {
        if (k >= l.tokens.size()) r.fail(l, k, "expected a " + kind_);
        auto it = ids_.find(l.tokens[k]);
        if (it == ids_.end()) r.fail(l, k, "undeclared " + kind_);
        return it->second;
    }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }

  private:
    std::string kind_;
    std::map<std::string, int> ids_;
    std::vector<std::string> names_;
};

void check_name(const std::string& n, const std::string& kind) {
    if (n.empty() || n == "eps" || n == "->" || n == ";" || n == "|" ||
        n.find_first_of(" \t\n#") != std::string::npos)
        throw Error(kind + " name '" + n + "' cannot be written in the text format");
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
    return out;
}

std::string letters_line(const Alphabet& a) {
    std::string out;
    for (const auto& s : a) out += " " + s.str();
    return out;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// --- grammar ---------------------------------------------------------------------------------

bool is_nonterminal_token(const std::string& t) { return t.size() >= 3 && t.front() == '<' && t.back() == '>'; }

bool is_section(const Line& l) {
    return l.tokens.size() == 1 && (l.tokens[0] == "prefix" || l.tokens[0] == "period");
}

// Reads grammar lines until a section header or the end.
Grammar read_grammar(Reader& r) {
    std::optional<std::string> start;
    std::optional<Alphabet> terminals;
    std::vector<Production> prods;
    std::size_t header_line = 0;
    while (!r.done() && !is_section(r.peek())) {
        const Line& l = r.next();
        if (!header_line) header_line = l.number;
        const auto& t = l.tokens;
        if (t[0] == "%start") {
            if (t.size() != 2 || !is_nonterminal_token(t[1])) r.fail(l, 1, "expected %start <A>");
            start = t[1].substr(1, t[1].size() - 2);
            continue;
        }
        if (t[0] == "%terminals") {
            terminals = Alphabet{};
            for (std::size_t k = 1; k < t.size(); ++k) terminals->insert(r.letter(l, k));
            continue;
        }
        if (!is_nonterminal_token(t[0])) r.fail(l, 0, "expected a nonterminal <A>");
        if (t.size() < 2 || t[1] != "->") r.fail(l, 1, "expected '->'");
        const std::string lhs = t[0].substr(1, t[0].size() - 2);
        std::vector<GrammarSymbol> rhs;
        bool saw_eps = false;
        auto flush = [&](std::size_t k) {
            if (rhs.empty() && !saw_eps) r.fail(l, k, "empty alternative (write eps)");
            prods.push_back({lhs, rhs});
            rhs.clear();
            saw_eps = false;
        };
        for (std::size_t k = 2; k < t.size(); ++k) {
            if (t[k] == "|") {
                flush(k);
            } else if (t[k] == "eps") {
                if (!rhs.empty() || saw_eps) r.fail(l, k, "eps must stand alone");
                saw_eps = true;
            } else if (is_nonterminal_token(t[k])) {
                if (saw_eps) r.fail(l, k, "eps must stand alone");
                rhs.push_back(Nonterminal{t[k].substr(1, t[k].size() - 2)});
            } else {
                if (saw_eps) r.fail(l, k, "eps must stand alone");
                rhs.push_back(r.letter(l, k));
            }
        }
        flush(t.size());
    }
    if (prods.empty() && !start) r.fail_eof("grammar without productions");
    const std::string s = start ? *start : prods.front().lhs;
    if (terminals) {
        for (const auto& p : prods)
            for (const auto& sym : p.rhs)
                if (const auto* c = std::get_if<Symbol>(&sym); c && !terminals->contains(*c))
                    throw ParseError(r.file(), header_line, c->str(), "letter missing from %terminals");
    }
    return Grammar(s, std::move(prods), terminals.value_or(Alphabet{}));
}

}  // namespace

// ---------------------------------------------------------------------------------------------

FiniteAutomaton parse_automaton(std::string_view text, const std::string& file) {
    Reader r(text, file);
    if (r.done()) r.fail_eof("expected 'buchi' or 'muller'");
    const Line& head = r.next();
    if (head.tokens.size() != 1 || (head.tokens[0] != "buchi" && head.tokens[0] != "muller"))
        r.fail(head, 0, "expected 'buchi' or 'muller'");
    const bool muller = head.tokens[0] == "muller";
    Names states("state");
    Alphabet alphabet;
    std::optional<int> initial;
    std::vector<int> finals;
    std::vector<std::vector<int>> table;
    std::vector<FaTransition> trans;
    while (!r.done()) {
        const Line& l = r.next();
        const auto& t = l.tokens;
        const std::string& key = t[0];
        if (key == "states") {
            for (std::size_t k = 1; k < t.size(); ++k) states.declare(r, l, k);
        } else if (key == "alphabet") {
            for (std::size_t k = 1; k < t.size(); ++k) alphabet.insert(r.letter(l, k));
        } else if (key == "initial") {
            if (t.size() != 2) r.fail(l, t.size() > 2 ? 2 : 1, "expected one initial state");
            initial = states.id(r, l, 1);
        } else if (key == "final" && !muller) {
            for (std::size_t k = 1; k < t.size(); ++k) finals.push_back(states.id(r, l, k));
        } else if (key == "accept" && muller) {
            if (t.size() < 2) r.fail(l, 1, "empty table set");
            std::vector<int> set;
            for (std::size_t k = 1; k < t.size(); ++k) set.push_back(states.id(r, l, k));
            table.push_back(std::move(set));
        } else if (key == "trans") {
            if (t.size() != 4) r.fail(l, std::min<std::size_t>(t.size(), 4), "expected trans FROM LETTER TO");
            const Symbol s = r.letter(l, 2);
            if (!alphabet.contains(s)) r.fail(l, 2, "letter not in the alphabet");
            trans.push_back({states.id(r, l, 1), s, states.id(r, l, 3)});
        } else {
            r.fail(l, 0, "unknown keyword");
        }
    }
    if (states.empty()) r.fail_eof("no states declared");
    if (!initial) r.fail_eof("no initial state");
    try {
        if (muller) return MullerFA(states.names(), alphabet, *initial, trans, table);
        return BuchiFA(states.names(), alphabet, *initial, finals, trans);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(file, 1, head.tokens[0], e.what());
    }
}

std::string format_automaton(const BuchiFA& a) {
    std::ostringstream out;
    for (const auto& n : a.state_names()) check_name(n, "state");
    out << "buchi\n";
    out << "states " << join(a.state_names()) << "\n";
    out << "alphabet" << letters_line(a.alphabet()) << "\n";
    out << "initial " << a.state_name(a.initial()) << "\n";
    out << "final";
    for (int q = 0; q < a.state_count(); ++q)
        if (a.is_final(q)) out << " " << a.state_name(q);
    out << "\n";
    for (const auto& t : a.transitions())
        out << "trans " << a.state_name(t.from) << " " << t.symbol.str() << " " << a.state_name(t.to) << "\n";
    return out.str();
}

std::string format_automaton(const MullerFA& a) {
    std::ostringstream out;
    for (const auto& n : a.state_names()) check_name(n, "state");
    out << "muller\n";
    out << "states " << join(a.state_names()) << "\n";
    out << "alphabet" << letters_line(a.alphabet()) << "\n";
    out << "initial " << a.state_name(a.initial()) << "\n";
    for (const auto& set : a.table()) {
        out << "accept";
        for (int q : set) out << " " << a.state_name(q);
        out << "\n";
    }
    for (const auto& t : a.transitions())
        out << "trans " << a.state_name(t.from) << " " << t.symbol.str() << " " << a.state_name(t.to) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------------------------

PushdownAutomaton parse_pda(std::string_view text, const std::string& file) {
    Reader r(text, file);
    if (r.done()) r.fail_eof("expected 'pda buchi' or 'pda muller'");
    const Line& head = r.next();
    if (head.tokens.size() != 2 || head.tokens[0] != "pda" ||
        (head.tokens[1] != "buchi" && head.tokens[1] != "muller"))
        r.fail(head, head.tokens[0] == "pda" ? 1 : 0, "expected 'pda buchi' or 'pda muller'");
    const bool muller = head.tokens[1] == "muller";
    Names states("state"), stack("stack letter");
    Alphabet alphabet;
    std::optional<int> initial, bottom;
    std::vector<int> finals;
    std::vector<MullerEntry> table;
    std::vector<PdaRule> rules;
    while (!r.done()) {
        const Line& l = r.next();
        const auto& t = l.tokens;
        const std::string& key = t[0];
        if (key == "states") {
            for (std::size_t k = 1; k < t.size(); ++k) states.declare(r, l, k);
        } else if (key == "stack") {
            for (std::size_t k = 1; k < t.size(); ++k) stack.declare(r, l, k);
        } else if (key == "alphabet") {
            for (std::size_t k = 1; k < t.size(); ++k) alphabet.insert(r.letter(l, k));
        } else if (key == "initial") {
            if (t.size() != 2) r.fail(l, t.size() > 2 ? 2 : 1, "expected one initial state");
            initial = states.id(r, l, 1);
        } else if (key == "bottom") {
            if (t.size() != 2) r.fail(l, t.size() > 2 ? 2 : 1, "expected one bottom letter");
            bottom = stack.id(r, l, 1);
        } else if (key == "final" && !muller) {
            for (std::size_t k = 1; k < t.size(); ++k) finals.push_back(states.id(r, l, k));
        } else if (key == "accept" && muller) {
            MullerEntry e;
            bool optional = false;
            for (std::size_t k = 1; k < t.size(); ++k) {
                if (t[k] == ";") {
                    if (optional) r.fail(l, k, "second ';'");
                    optional = true;
                    continue;
                }
                (optional ? e.optional : e.required).push_back(states.id(r, l, k));
            }
            if (e.required.empty()) r.fail(l, 1, "an entry needs a required state");
            table.push_back(std::move(e));
        } else if (key == "rule") {
            if (t.size() < 7) r.fail(l, t.size(), "expected rule FROM IN POP -> TO PUSH...");
            if (t[4] != "->") r.fail(l, 4, "expected '->'");
            PdaRule rule{states.id(r, l, 1), std::nullopt, stack.id(r, l, 3), states.id(r, l, 5), {}};
            if (t[2] != "eps") {
                rule.input = r.letter(l, 2);
                if (!alphabet.contains(*rule.input)) r.fail(l, 2, "letter not in the alphabet");
            }
            if (t.size() == 7 && t[6] == "eps") {
            } else {
                for (std::size_t k = 6; k < t.size(); ++k) rule.push.push_back(stack.id(r, l, k));
            }
            rules.push_back(std::move(rule));
        } else {
            r.fail(l, 0, "unknown keyword");
        }
    }
    if (states.empty()) r.fail_eof("no states declared");
    if (!initial) r.fail_eof("no initial state");
    if (!bottom) r.fail_eof("no bottom letter");
    try {
        if (muller)
            return PushdownAutomaton::muller(states.names(), alphabet, stack.names(), *initial, *bottom, rules, table);
        return PushdownAutomaton::buchi(states.names(), alphabet, stack.names(), *initial, *bottom, rules, finals);
    } catch (const Error& e) {
        throw ParseError(file, head.number, head.tokens[1], e.what());
    }
}

std::string format_pda(const PushdownAutomaton& p) {
    for (const auto& n : p.states()) check_name(n, "state");
    for (const auto& n : p.stack_symbols()) check_name(n, "stack letter");
    const bool muller = p.acceptance() == Acceptance::Muller;
    std::ostringstream out;
    out << "pda " << (muller ? "muller" : "buchi") << "\n";
    out << "states " << join(p.states()) << "\n";
    out << "alphabet" << letters_line(p.inputs()) << "\n";
    out << "stack " << join(p.stack_symbols()) << "\n";
    out << "initial " << p.states()[p.initial()] << "\n";
    out << "bottom " << p.stack_symbols()[p.bottom()] << "\n";
    if (muller) {
        for (const auto& e : p.table()) {
            out << "accept";
            for (int q : e.required) out << " " << p.states()[q];
            if (!e.optional.empty()) {
                out << " ;";
                for (int q : e.optional) out << " " << p.states()[q];
            }
            out << "\n";
        }
    } else {
        out << "final";
        for (int q : p.finals()) out << " " << p.states()[q];
        out << "\n";
    }
    for (const auto& rule : p.rules()) {
        out << "rule " << p.states()[rule.from] << " " << (rule.input ? rule.input->str() : "eps") << " "
            << p.stack_symbols()[rule.pop] << " -> " << p.states()[rule.to];
        if (rule.push.empty()) out << " eps";
        for (int z : rule.push) out << " " << p.stack_symbols()[z];
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------------------------

Grammar parse_grammar(std::string_view text, const std::string& file) {
    Reader r(text, file);
    if (r.done()) r.fail_eof("empty grammar");
    if (is_section(r.peek())) r.fail(r.peek(), 0, "section header outside an okc file");
    try {
        return read_grammar(r);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(file, 1, "grammar", e.what());
    }
}

std::string format_grammar(const Grammar& g) {
    std::ostringstream out;
    for (const auto& n : g.nonterminals()) {
        check_name(n, "nonterminal");
        if (n.find('>') != std::string::npos) throw Error("nonterminal name '" + n + "' holds '>'");
    }
    out << "%start <" << g.start() << ">\n";
    out << "%terminals" << letters_line(g.terminals()) << "\n";
    // One line per left-hand side, in order of first appearance.
    for (const auto& lhs : g.nonterminals()) {
        std::vector<std::string> alts;
        for (const auto& p : g.productions()) {
            if (p.lhs != lhs) continue;
            std::string alt;
            for (const auto& s : p.rhs) {
                if (!alt.empty()) alt += " ";
                alt += std::holds_alternative<Nonterminal>(s) ? "<" + std::get<Nonterminal>(s).name + ">"
                                                              : std::get<Symbol>(s).str();
            }
            alts.push_back(alt.empty() ? "eps" : alt);
        }
        if (alts.empty()) continue;
        out << "<" << lhs << "> ->";
        for (std::size_t k = 0; k < alts.size(); ++k) out << (k ? " | " : " ") << alts[k];
        out << "\n";
    }
    return out.str();
}

OmegaKC parse_okc(std::string_view text, const std::string& file) {
    Reader r(text, file);
    if (r.done()) r.fail_eof("expected 'okc'");
    const Line& head = r.next();
    if (head.tokens.size() != 1 || head.tokens[0] != "okc") r.fail(head, 0, "expected 'okc'");
    OmegaKC okc;
    while (!r.done()) {
        const Line& p = r.next();
        if (!is_section(p) || p.tokens[0] != "prefix") r.fail(p, 0, "expected 'prefix'");
        if (r.done() || is_section(r.peek())) r.fail(p, 0, "prefix without a grammar");
        Grammar u = read_grammar(r);
        if (r.done()) r.fail_eof("component without 'period'");
        const Line& v = r.next();
        if (v.tokens[0] != "period") r.fail(v, 0, "expected 'period'");
        if (r.done() || is_section(r.peek())) r.fail(v, 0, "period without a grammar");
        okc.pairs.emplace_back(std::move(u), read_grammar(r));
    }
    if (okc.pairs.empty()) r.fail_eof("no components");
    return okc;
}

std::string format_okc(const OmegaKC& okc) {
    std::string out = "okc\n";
    for (const auto& [u, v] : okc.pairs) out += "prefix\n" + format_grammar(u) + "period\n" + format_grammar(v);
    return out;
}

// ---------------------------------------------------------------------------------------------

LassoWord parse_lasso_line(std::string_view text, const std::string& source, std::size_t line) {
    std::string spaced;
    for (char c : text) {
        if (c == '|') {
            spaced += " | ";
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    Word sides[2];
    int side = 0;
    std::string last = "end of line";
    for (std::string tok; in >> tok;) {
        last = tok;
        if (tok == "|") {
            if (side == 1) throw ParseError(source, line, tok, "second '|'");
            side = 1;
            continue;
        }
        if (tok == "eps") continue;
        try {
            sides[side].push_back(Symbol::parse(tok));
        } catch (const Error& e) {
            throw ParseError(source, line, tok, e.what());
        }
    }
    if (side == 0) throw ParseError(source, line, last, "expected 'PREFIX | PERIOD'");
    if (sides[1].empty()) throw ParseError(source, line, last, "empty period");
    return LassoWord(std::move(sides[0]), std::move(sides[1]));
}

std::vector<LassoWord> parse_word_list(std::string_view text, const std::string& file) {
    std::vector<LassoWord> out;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_lasso_line(line, file, number));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

template <class Label>
std::string dot_graph(const std::vector<std::string>& states, int initial, const std::vector<bool>& finals,
                      const std::map<std::pair<int, int>, std::vector<Label>>& edges, const std::string& caption) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    if (!caption.empty()) out << "  label=" << quote(caption) << ";\n";
    out << "  start [shape=point];\n";
    for (std::size_t q = 0; q < states.size(); ++q)
        out << "  s" << q << " [label=" << quote(states[q]) << " shape=" << (finals[q] ? "doublecircle" : "circle")
            << "];\n";
    out << "  start -> s" << initial << ";\n";
    for (const auto& [key, labels] : edges) {
        std::string l;
        for (const auto& s : labels) l += (l.empty() ? "" : "\\n") + std::string(s);
        out << "  s" << key.first << " -> s" << key.second << " [label=" << quote(l) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const BuchiFA& a) {
    std::map<std::pair<int, int>, std::vector<std::string>> edges;
    for (const auto& t : a.transitions()) edges[{t.from, t.to}].push_back(t.symbol.str());
    std::vector<bool> finals;
    for (int q = 0; q < a.state_count(); ++q) finals.push_back(a.is_final(q));
    return dot_graph(a.state_names(), a.initial(), finals, edges, "");
}

std::string to_dot(const MullerFA& a) {
    std::map<std::pair<int, int>, std::vector<std::string>> edges;
    for (const auto& t : a.transitions()) edges[{t.from, t.to}].push_back(t.symbol.str());
    std::string caption = "table:";
    for (const auto& set : a.table()) {
        caption += " {";
        for (std::size_t k = 0; k < set.size(); ++k) caption += (k ? "," : "") + a.state_name(set[k]);
        caption += "}";
    }
    return dot_graph(a.state_names(), a.initial(), std::vector<bool>(a.state_count(), false), edges, caption);
}

std::string to_dot(const PushdownAutomaton& p) {
    std::map<std::pair<int, int>, std::vector<std::string>> edges;
    for (const auto& r : p.rules()) {
        std::string l = (r.input ? r.input->str() : "eps") + ", " + p.stack_symbols()[r.pop] + " /";
        if (r.push.empty()) l += " eps";
        for (int z : r.push) l += " " + p.stack_symbols()[z];
        edges[{r.from, r.to}].push_back(l);
    }
    std::vector<bool> finals(p.state_count(), false);
    std::string caption;
    if (p.acceptance() == Acceptance::Buchi) {
        for (int q : p.finals()) finals[q] = true;
    } else {
        caption = "muller entries: " + std::to_string(p.table().size());
    }
    return dot_graph(p.states(), p.initial(), finals, edges, caption);
}

std::string to_dot(const Grammar& g) {
    std::ostringstream out;
    out << "digraph grammar {\n";
    const auto& nts = g.nonterminals();
    std::map<std::string, std::size_t> id;
    for (std::size_t k = 0; k < nts.size(); ++k) {
        id[nts[k]] = k;
        out << "  n" << k << " [label=" << quote(nts[k]) << (nts[k] == g.start() ? " shape=doublecircle" : "")
            << "];\n";
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& p : g.productions())
        for (const auto& s : p.rhs)
            if (const auto* n = std::get_if<Nonterminal>(&s)) edges.insert({id.at(p.lhs), id.at(n->name)});
    for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ocfl
