#include "actr/model_parser.hpp"

#include <charconv>
#include <cstdio>
#include <algorithm>
#include <sstream>

#include "actr/error.hpp"

namespace actr {

const Production* ModelAST::find_production(const Symbol& name) const {
    for (const auto& p : productions) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::set<Symbol> ModelAST::declared_buffers() const {
    std::set<Symbol> out{kGoalBuffer};
    for (const auto& init : buffer_inits) out.insert(init.buffer);
    return out;
}

namespace {

struct Position {
    int line = 1;
    int col = 1;
};

std::string at(const Position& pos) {
    return "line " + std::to_string(pos.line) + ", col " + std::to_string(pos.col);
}

struct SExpr {
    bool is_list = false;
    std::string atom;
    std::vector<SExpr> items;
    Position pos;
};

[[noreturn]] void fail(ErrorCode code, const Position& pos, const std::string& msg) {
    throw Error(code, at(pos) + ": " + msg);
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<SExpr> read_all() {
        std::vector<SExpr> forms;
        for (;;) {
            skip_space();
            if (eof()) break;
            if (peek() != '(') fail(ErrorCode::SyntaxError, pos_, "expected '(' at top level");
            forms.push_back(read());
        }
        return forms;
    }

private:
    bool eof() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }

    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++i_;
    }

    void skip_space() {
        while (!eof()) {
            char c = peek();
            if (c == ';') {
                while (!eof() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
                advance();
            } else {
                break;
            }
        }
    }

    SExpr read() {
        skip_space();
        if (eof()) fail(ErrorCode::SyntaxError, pos_, "unexpected end of input");
        SExpr e;
        e.pos = pos_;
        if (peek() == '(') {
            e.is_list = true;
            advance();
            for (;;) {
                skip_space();
                if (eof()) fail(ErrorCode::SyntaxError, e.pos, "unclosed '('");
                if (peek() == ')') {
                    advance();
                    break;
                }
                e.items.push_back(read());
            }
            return e;
        }
        if (peek() == ')') fail(ErrorCode::SyntaxError, pos_, "unexpected ')'");
        if (peek() == '"') {
            e.atom.push_back('"');
            advance();
            while (!eof() && peek() != '"') {
                e.atom.push_back(peek());
                advance();
            }
            if (eof()) fail(ErrorCode::SyntaxError, e.pos, "unterminated string");
            e.atom.push_back('"');
            advance();
            return e;
        }
        while (!eof()) {
            char c = peek();
            if (c == '(' || c == ')' || c == ';' || c == '"' || c == ' ' || c == '\t' || c == '\n' ||
                c == '\r' || c == '\f') {
                break;
            }
            e.atom.push_back(c);
            advance();
        }
        return e;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Position pos_;
};

const std::string& expect_atom(const SExpr& e, const char* what) {
    if (e.is_list) fail(ErrorCode::SyntaxError, e.pos, std::string("expected ") + what + ", got a list");
    return e.atom;
}

bool is_variable(const std::string& tok) { return tok.size() > 1 && tok[0] == '='; }

bool is_buffer_marker(const std::string& tok, char prefix) {
    return tok.size() > 2 && tok.front() == prefix && tok.back() == '>';
}

bool is_any_buffer_marker(const std::string& tok) {
    return tok != "==>" && (is_buffer_marker(tok, '=') || is_buffer_marker(tok, '-') ||
                            is_buffer_marker(tok, '+'));
}

// Symbols must not collide with the rule syntax.
void check_symbol(const SExpr& e, const char* what) {
    const auto& s = expect_atom(e, what);
    if (s.empty() || s == "==>" || s == "isa" || is_any_buffer_marker(s) || s.front() == '!' ||
        s.front() == '=' || s.front() == ':') {
        fail(ErrorCode::SyntaxError, e.pos, std::string("expected ") + what + ", got '" + s + "'");
    }
}

Term term_of(const SExpr& e) {
    const auto& s = expect_atom(e, "slot value");
    if (s == "==>" || is_any_buffer_marker(s) || s == "isa" || (!s.empty() && s.front() == '!')) {
        fail(ErrorCode::SyntaxError, e.pos, "expected slot value, got '" + s + "'");
    }
    if (is_variable(s)) return Term::variable(s.substr(1));
    if (!s.empty() && s.front() == '=') fail(ErrorCode::SyntaxError, e.pos, "empty variable name");
    return Term::constant(s);
}

class ModelBuilder {
public:
    ModelAST build(const std::vector<SExpr>& forms) {
        for (const auto& f : forms) form(f);
        for (const auto& [rule, pos] : annotation_positions_) {
            if (!ast_.find_production(rule)) {
                fail(ErrorCode::UnknownAnnotationTarget, pos, "spp names unknown production '" + rule + "'");
            }
        }
        return std::move(ast_);
    }

private:
    void form(const SExpr& f) {
        if (!f.is_list || f.items.empty()) fail(ErrorCode::SyntaxError, f.pos, "expected a non-empty form");
        const auto& head = expect_atom(f.items[0], "form name");
        if (head == "define-model") {
            if (f.items.size() < 2) fail(ErrorCode::SyntaxError, f.pos, "define-model needs a name");
            for (std::size_t i = 2; i < f.items.size(); ++i) form(f.items[i]);
        } else if (head == "chunk-type") {
            chunk_type(f);
        } else if (head == "add-dm") {
            add_dm(f);
        } else if (head == "goal-focus") {
            goal_focus(f);
        } else if (head == "p") {
            production(f);
        } else if (head == "spp") {
            spp(f);
        } else {
            fail(ErrorCode::SyntaxError, f.items[0].pos, "unknown form '" + head + "'");
        }
    }

    void chunk_type(const SExpr& f) {
        if (f.items.size() < 2) fail(ErrorCode::SyntaxError, f.pos, "chunk-type needs a name");
        ChunkTypeDecl decl;
        check_symbol(f.items[1], "chunk type name");
        decl.name = f.items[1].atom;
        for (std::size_t i = 2; i < f.items.size(); ++i) {
            check_symbol(f.items[i], "slot name");
            decl.slots.push_back(f.items[i].atom);
        }
        ast_.chunk_types.push_back(std::move(decl));
    }

    void add_dm(const SExpr& f) {
        for (std::size_t i = 1; i < f.items.size(); ++i) {
            const auto& c = f.items[i];
            if (!c.is_list) fail(ErrorCode::SyntaxError, c.pos, "add-dm entries are lists");
            if (c.items.size() < 3 || c.items[1].is_list || c.items[1].atom != "isa") {
                fail(ErrorCode::SyntaxError, c.pos, "expected (NAME isa TYPE SLOT VALUE ...)");
            }
            if (c.items.size() % 2 == 0) fail(ErrorCode::SyntaxError, c.pos, "slot without a value");
            ChunkDecl decl;
            check_symbol(c.items[0], "chunk name");
            check_symbol(c.items[2], "chunk type");
            decl.name = c.items[0].atom;
            decl.type = c.items[2].atom;
            std::set<Symbol> seen;
            for (std::size_t k = 3; k + 1 < c.items.size(); k += 2) {
                check_symbol(c.items[k], "slot name");
                check_symbol(c.items[k + 1], "constant slot value");
                if (!seen.insert(c.items[k].atom).second) {
                    fail(ErrorCode::DuplicateSlot, c.items[k].pos, "slot '" + c.items[k].atom + "' repeated");
                }
                decl.values.emplace_back(c.items[k].atom, c.items[k + 1].atom);
            }
            ast_.initial_chunks.push_back(std::move(decl));
        }
    }

    void goal_focus(const SExpr& f) {
        if (f.items.size() == 2) {
            check_symbol(f.items[1], "chunk name");
            ast_.buffer_inits.push_back({kGoalBuffer, f.items[1].atom});
        } else if (f.items.size() == 3) {
            check_symbol(f.items[1], "buffer name");
            check_symbol(f.items[2], "chunk name");
            ast_.buffer_inits.push_back({f.items[1].atom, f.items[2].atom});
        } else {
            fail(ErrorCode::SyntaxError, f.pos, "expected (goal-focus [BUFFER] CHUNK)");
        }
    }

    void production(const SExpr& f) {
        if (f.items.size() < 2) fail(ErrorCode::SyntaxError, f.pos, "production needs a name");
        check_symbol(f.items[1], "production name");
        Production p;
        p.name = f.items[1].atom;
        if (ast_.find_production(p.name)) {
            fail(ErrorCode::DuplicateRuleName, f.items[1].pos, "production '" + p.name + "' defined twice");
        }
        p.source_index = ast_.productions.size();

        const auto& items = f.items;
        std::size_t i = 2;
        std::set<Symbol> lhs_vars;
        std::set<Symbol> tested_buffers;

        // Left-hand side.
        bool saw_arrow = false;
        while (i < items.size()) {
            const auto& tok = expect_atom(items[i], "buffer test or '==>'");
            if (tok == "==>") {
                saw_arrow = true;
                ++i;
                break;
            }
            if (!is_buffer_marker(tok, '=')) {
                fail(ErrorCode::SyntaxError, items[i].pos, "expected '=buffer>' or '==>', got '" + tok + "'");
            }
            BufferTest test;
            test.buffer = tok.substr(1, tok.size() - 2);
            if (!tested_buffers.insert(test.buffer).second) {
                fail(ErrorCode::DuplicateBufferTest, items[i].pos,
                     "buffer '" + test.buffer + "' tested twice in '" + p.name + "'");
            }
            const Position test_pos = items[i].pos;
            ++i;
            if (i + 1 >= items.size() || items[i].is_list || items[i].atom != "isa") {
                fail(ErrorCode::SyntaxError, test_pos, "buffer test must start with 'isa TYPE'");
            }
            check_symbol(items[i + 1], "chunk type");
            test.type = items[i + 1].atom;
            i += 2;
            std::set<Symbol> slots;
            while (i < items.size() && !items[i].is_list && items[i].atom != "==>" &&
                   !is_any_buffer_marker(items[i].atom)) {
                check_symbol(items[i], "slot name");
                if (i + 1 >= items.size()) fail(ErrorCode::SyntaxError, items[i].pos, "slot without a value");
                if (!slots.insert(items[i].atom).second) {
                    fail(ErrorCode::DuplicateSlot, items[i].pos, "slot '" + items[i].atom + "' tested twice");
                }
                Term v = term_of(items[i + 1]);
                if (v.is_variable()) lhs_vars.insert(v.text);
                test.slot_tests.push_back({items[i].atom, std::move(v)});
                i += 2;
            }
            p.tests.push_back(std::move(test));
        }
        if (!saw_arrow) fail(ErrorCode::SyntaxError, f.pos, "production '" + p.name + "' has no '==>'");

        // Right-hand side.
        std::set<Symbol> bound = lhs_vars;
        std::vector<std::pair<Symbol, Position>> used;
        while (i < items.size()) {
            const auto& e = items[i];
            if (e.is_list) fail(ErrorCode::SyntaxError, e.pos, "unexpected list in action");
            const auto& tok = e.atom;
            if (tok == "!output!") {
                if (i + 1 >= items.size()) fail(ErrorCode::SyntaxError, e.pos, "!output! needs an argument");
                i += 2;
                continue;
            }
            if (tok == "!bind!") {
                if (p.actions.empty()) fail(ErrorCode::SyntaxError, e.pos, "!bind! must follow an action");
                if (i + 2 >= items.size()) fail(ErrorCode::SyntaxError, e.pos, "expected !bind! =VAR PROVIDER");
                const auto& var = expect_atom(items[i + 1], "variable");
                if (!is_variable(var)) fail(ErrorCode::SyntaxError, items[i + 1].pos, "!bind! target must be =VAR");
                check_symbol(items[i + 2], "provider name");
                p.actions.back().binds.push_back({var.substr(1), items[i + 2].atom});
                bound.insert(var.substr(1));
                i += 3;
                continue;
            }
            if (is_buffer_marker(tok, '+')) {
                fail(ErrorCode::Unsupported, e.pos, "module requests ('" + tok + "') are unsupported");
            }
            Action action;
            if (is_buffer_marker(tok, '=')) {
                action.kind = ActionKind::Modify;
            } else if (is_buffer_marker(tok, '-')) {
                action.kind = ActionKind::Clear;
            } else {
                fail(ErrorCode::SyntaxError, e.pos, "expected an action, got '" + tok + "'");
            }
            action.buffer = tok.substr(1, tok.size() - 2);
            ++i;
            std::set<Symbol> slots;
            while (i < items.size() && !items[i].is_list && !is_any_buffer_marker(items[i].atom) &&
                   items[i].atom != "!bind!" && items[i].atom != "!output!") {
                if (action.kind == ActionKind::Clear) {
                    fail(ErrorCode::SyntaxError, items[i].pos, "buffer clearing takes no slots");
                }
                if (items[i].atom == "isa") {
                    if (i + 1 >= items.size() || action.type || !action.slot_updates.empty()) {
                        fail(ErrorCode::SyntaxError, items[i].pos, "misplaced 'isa'");
                    }
                    check_symbol(items[i + 1], "chunk type");
                    action.type = items[i + 1].atom;
                    i += 2;
                    continue;
                }
                check_symbol(items[i], "slot name");
                if (i + 1 >= items.size()) fail(ErrorCode::SyntaxError, items[i].pos, "slot without a value");
                if (!slots.insert(items[i].atom).second) {
                    fail(ErrorCode::DuplicateSlot, items[i].pos, "slot '" + items[i].atom + "' set twice");
                }
                Term v = term_of(items[i + 1]);
                if (v.is_variable()) used.emplace_back(v.text, items[i + 1].pos);
                action.slot_updates.push_back({items[i].atom, std::move(v)});
                i += 2;
            }
            p.actions.push_back(std::move(action));
        }
        for (const auto& [var, pos] : used) {
            if (!bound.contains(var)) {
                fail(ErrorCode::UnboundRhsVariable, pos,
                     "variable =" + var + " in '" + p.name + "' is not bound on the left-hand side");
            }
        }
        ast_.productions.push_back(std::move(p));
    }

    void spp(const SExpr& f) {
        if (f.items.size() < 2) fail(ErrorCode::SyntaxError, f.pos, "spp needs a production name");
        check_symbol(f.items[1], "production name");
        const Symbol rule = f.items[1].atom;
        if (f.items.size() % 2 != 0) fail(ErrorCode::SyntaxError, f.pos, "spp parameter without a value");
        auto& ann = ast_.annotations[rule];
        annotation_positions_.emplace(rule, f.items[1].pos);
        for (std::size_t i = 2; i + 1 < f.items.size(); i += 2) {
            const auto& key = expect_atom(f.items[i], "parameter");
            const auto& val = expect_atom(f.items[i + 1], "parameter value");
            if (key == ":reward") {
                double r = 0.0;
                auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), r);
                if (ec != std::errc() || ptr != val.data() + val.size()) {
                    fail(ErrorCode::SyntaxError, f.items[i + 1].pos, "reward must be a number, got '" + val + "'");
                }
                ann.reward = r;
            } else if (key == ":success" || key == ":failure") {
                if (val != "t" && val != "nil") {
                    fail(ErrorCode::SyntaxError, f.items[i + 1].pos, "expected t or nil, got '" + val + "'");
                }
                (key == ":success" ? ann.success : ann.failure) = (val == "t");
            } else {
                fail(ErrorCode::SyntaxError, f.items[i].pos, "unknown spp parameter '" + key + "'");
            }
        }
    }

    ModelAST ast_;
    std::map<Symbol, Position> annotation_positions_;
};

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

ModelAST parse_model(std::string_view text) {
    Reader reader(text);
    return ModelBuilder().build(reader.read_all());
}

std::vector<std::string> validate_model(const ModelAST& ast) {
    std::vector<std::string> out;
    std::map<Symbol, const ChunkTypeDecl*> types;
    for (const auto& t : ast.chunk_types) {
        if (!types.emplace(t.name, &t).second) out.push_back("chunk type '" + t.name + "' defined twice");
        std::set<Symbol> slots;
        for (const auto& s : t.slots) {
            if (!slots.insert(s).second) out.push_back("slot '" + s + "' repeated in type '" + t.name + "'");
        }
    }
    auto slot_ok = [&](const Symbol& type, const Symbol& slot) {
        auto it = types.find(type);
        if (it == types.end()) return true;  // reported separately
        const auto& slots = it->second->slots;
        return std::find(slots.begin(), slots.end(), slot) != slots.end();
    };

    std::set<Symbol> chunk_names;
    for (const auto& c : ast.initial_chunks) {
        if (!chunk_names.insert(c.name).second) out.push_back("chunk '" + c.name + "' defined twice");
        if (!types.contains(c.type)) out.push_back("chunk '" + c.name + "' has unknown type '" + c.type + "'");
        for (const auto& [slot, _] : c.values) {
            if (!slot_ok(c.type, slot)) {
                out.push_back("chunk '" + c.name + "': type '" + c.type + "' has no slot '" + slot + "'");
            }
        }
    }

    const auto buffers = ast.declared_buffers();
    std::set<Symbol> initialised;
    for (const auto& init : ast.buffer_inits) {
        if (!chunk_names.contains(init.chunk)) {
            out.push_back("goal-focus references unknown chunk '" + init.chunk + "'");
        }
        if (!initialised.insert(init.buffer).second) {
            out.push_back("buffer '" + init.buffer + "' initialised twice");
        }
    }

    std::set<Symbol> rule_names;
    for (std::size_t idx = 0; idx < ast.productions.size(); ++idx) {
        const auto& p = ast.productions[idx];
        const std::string where = "production '" + p.name + "'";
        if (!rule_names.insert(p.name).second) out.push_back(where + " defined twice");
        if (p.source_index != idx) out.push_back(where + " has source index out of order");
        std::map<Symbol, Symbol> tested_type;
        for (const auto& t : p.tests) {
            if (!buffers.contains(t.buffer)) out.push_back(where + " tests undeclared buffer '" + t.buffer + "'");
            if (!tested_type.emplace(t.buffer, t.type).second) {
                out.push_back(where + " tests buffer '" + t.buffer + "' twice");
            }
            if (!types.contains(t.type)) {
                out.push_back(where + " tests unknown type '" + t.type + "'");
                continue;
            }
            for (const auto& st : t.slot_tests) {
                if (!slot_ok(t.type, st.slot)) {
                    out.push_back(where + " tests slot '" + st.slot + "' not in type '" + t.type + "'");
                }
            }
        }
        for (const auto& a : p.actions) {
            if (!buffers.contains(a.buffer)) out.push_back(where + " acts on undeclared buffer '" + a.buffer + "'");
            if (a.type && !types.contains(*a.type)) out.push_back(where + " names unknown type '" + *a.type + "'");
            auto it = tested_type.find(a.buffer);
            std::optional<Symbol> type = a.type;
            if (!type && it != tested_type.end()) type = it->second;
            if (it != tested_type.end() && a.type && *a.type != it->second) {
                out.push_back(where + " would change the type of the chunk in '" + a.buffer + "'");
            }
            if (type && types.contains(*type)) {
                for (const auto& su : a.slot_updates) {
                    if (!slot_ok(*type, su.slot)) {
                        out.push_back(where + " sets slot '" + su.slot + "' not in type '" + *type + "'");
                    }
                }
            }
        }
    }

    for (const auto& [rule, _] : ast.annotations) {
        if (!rule_names.contains(rule)) out.push_back("spp references unknown production '" + rule + "'");
    }
    return out;
}

std::string to_source(const ModelAST& ast) {
    std::ostringstream os;
    for (const auto& t : ast.chunk_types) {
        os << "(chunk-type " << t.name;
        for (const auto& s : t.slots) os << ' ' << s;
        os << ")\n";
    }
    if (!ast.initial_chunks.empty()) {
        os << "(add-dm";
        for (const auto& c : ast.initial_chunks) {
            os << "\n  (" << c.name << " isa " << c.type;
            for (const auto& [slot, v] : c.values) os << ' ' << slot << ' ' << v;
            os << ')';
        }
        os << ")\n";
    }
    for (const auto& init : ast.buffer_inits) {
        os << "(goal-focus " << init.buffer << ' ' << init.chunk << ")\n";
    }
    for (const auto& p : ast.productions) {
        os << "(p " << p.name << '\n';
        for (const auto& t : p.tests) {
            os << "   =" << t.buffer << "> isa " << t.type;
            for (const auto& st : t.slot_tests) os << ' ' << st.slot << ' ' << st.value.to_source();
            os << '\n';
        }
        os << " ==>\n";
        for (const auto& a : p.actions) {
            os << "   " << (a.kind == ActionKind::Modify ? '=' : '-') << a.buffer << '>';
            if (a.type) os << " isa " << *a.type;
            for (const auto& su : a.slot_updates) os << ' ' << su.slot << ' ' << su.value.to_source();
            for (const auto& b : a.binds) os << " !bind! =" << b.variable << ' ' << b.provider;
            os << '\n';
        }
        os << ")\n";
    }
    for (const auto& [rule, ann] : ast.annotations) {
        os << "(spp " << rule;
        if (ann.reward) os << " :reward " << format_number(*ann.reward);
        if (ann.success) os << " :success t";
        if (ann.failure) os << " :failure t";
        os << ")\n";
    }
    return os.str();
}

}  // namespace actr
