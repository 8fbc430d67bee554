#include "aosrm/parse.hpp"

#include "aosrm/error.hpp"

#include <algorithm>
#include <sstream>

namespace aosrm {

namespace {

bool is_modifier_word(const Token& t) {
    if (t.kind == TokenKind::Keyword) {
        return t.text == "public" || t.text == "protected" || t.text == "private" ||
               t.text == "abstract" || t.text == "static" || t.text == "final" ||
               t.text == "synchronized" || t.text == "native" || t.text == "transient" ||
               t.text == "volatile" || t.text == "strictfp" || t.text == "default";
    }
    return t.kind == TokenKind::Identifier && t.text == "privileged";
}

bool is_primitive_type(const Token& t) {
    if (t.kind != TokenKind::Keyword) return false;
    return t.text == "void" || t.text == "boolean" || t.text == "byte" ||
           t.text == "char" || t.text == "short" || t.text == "int" ||
           t.text == "long" || t.text == "float" || t.text == "double";
}

bool is_per_clause_word(const Token& t) {
    return t.kind == TokenKind::Identifier &&
           (t.text == "percflow" || t.text == "percflowbelow" || t.text == "pertarget" ||
            t.text == "perthis" || t.text == "pertypewithin" || t.text == "issingleton");
}

struct Modifiers {
    bool is_abstract = false;
    bool is_static = false;
};

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const SourceFile& file,
           std::vector<std::string>& warnings)
        : tokens_(tokens), file_(file), warnings_(warnings) {}

    SourceUnit run() {
        SourceUnit unit;
        unit.file = file_;
        parse_header(unit);
        while (!at_end()) {
            if (cur().is_punct(";")) {
                advance();
                continue;
            }
            Modifiers mods = collect_modifiers();
            if (!parse_type_decl(unit.types, unit.package_name, mods)) {
                warn("unrecognized top-level construct skipped", cur().line);
                skip_to_type_end();
            }
        }
        return unit;
    }

private:
    const std::vector<Token>& tokens_;
    const SourceFile& file_;
    std::vector<std::string>& warnings_;
    size_t pos_ = 0;

    // ----- token cursor -------------------------------------------------

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek(size_t ahead = 1) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at_end() const { return cur().kind == TokenKind::End; }
    const Token& advance() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    bool accept_punct(std::string_view s) {
        if (cur().is_punct(s)) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view s) {
        if (cur().is_word(s)) {
            advance();
            return true;
        }
        return false;
    }

    void warn(const std::string& message, int line) {
        warnings_.push_back(file_.absolute_path.string() + ":" +
                            std::to_string(line) + ": " + message);
    }

    [[noreturn]] void fail_unbalanced() {
        throw Error(ErrorKind::ParseFailure,
                    file_.absolute_path.string() +
                        ": unbalanced braces at end of file");
    }

    // ----- generic skipping ---------------------------------------------

    /// cur() must be `open`; leaves the cursor after the matching closer.
    void skip_balanced(std::string_view open, std::string_view close) {
        advance();
        int depth = 1;
        while (depth > 0) {
            if (at_end()) fail_unbalanced();
            if (cur().is_punct(open)) ++depth;
            else if (cur().is_punct(close)) --depth;
            advance();
        }
    }

    /// Balanced generic argument list starting at '<'. The tokenizer never
    /// merges '>>', so nested closers count one by one.
    void skip_generics() {
        advance();
        int depth = 1;
        while (depth > 0) {
            if (at_end()) fail_unbalanced();
            if (cur().is_punct("<")) ++depth;
            else if (cur().is_punct(">")) --depth;
            advance();
        }
    }

    /// Next ';' at bracket depth zero, consumed.
    void skip_to_semicolon() {
        int depth = 0;
        while (!at_end()) {
            if (cur().is_punct("(") || cur().is_punct("{") || cur().is_punct("[")) ++depth;
            else if (cur().is_punct(")") || cur().is_punct("}") || cur().is_punct("]")) --depth;
            else if (cur().is_punct(";") && depth == 0) {
                advance();
                return;
            }
            advance();
        }
    }

    /// Consumes annotation uses: `@` Name(.Name)* [(...)]. An `@interface`
    /// declaration is not an annotation use and is left untouched.
    void skip_annotations() {
        while (cur().is_punct("@") && !peek().is_word("interface")) {
            advance();
            while (cur().kind == TokenKind::Identifier) {
                advance();
                if (!accept_punct(".")) break;
            }
            if (cur().is_punct("(")) skip_balanced("(", ")");
        }
    }

    Modifiers collect_modifiers() {
        Modifiers mods;
        while (true) {
            skip_annotations();
            if (!is_modifier_word(cur())) break;
            if (cur().text == "abstract") mods.is_abstract = true;
            if (cur().text == "static") mods.is_static = true;
            advance();
        }
        return mods;
    }

    // ----- names and type references ------------------------------------

    /// Dotted name; generics are consumed and erased, array dims appended.
    /// Empty result means cur() does not start a type reference.
    std::string parse_type_ref() {
        std::string ref;
        if (is_primitive_type(cur())) {
            ref = advance().text;
        } else if (cur().kind == TokenKind::Identifier) {
            ref = advance().text;
            if (cur().is_punct("<")) skip_generics();
            while (cur().is_punct(".") && peek().kind == TokenKind::Identifier) {
                advance();
                ref.push_back('.');
                ref += advance().text;
                if (cur().is_punct("<")) skip_generics();
            }
        } else {
            return "";
        }
        while (cur().is_punct("[") && peek().is_punct("]")) {
            advance();
            advance();
            ref += "[]";
        }
        return ref;
    }

    /// Formal parameter list; cur() must be '('. Returns erased types.
    std::vector<std::string> parse_params() {
        std::vector<std::string> types;
        advance(); // '('
        if (accept_punct(")")) return types;
        while (true) {
            skip_annotations();
            accept_word("final");
            std::string type = parse_type_ref();
            if (type.empty()) {
                warn("unrecognized parameter syntax", cur().line);
                int depth = 1;
                while (depth > 0 && !at_end()) {
                    if (cur().is_punct("(")) ++depth;
                    else if (cur().is_punct(")")) --depth;
                    advance();
                }
                return types;
            }
            if (accept_punct("...")) type += "[]";
            if (cur().kind == TokenKind::Identifier) advance(); // parameter name
            while (cur().is_punct("[") && peek().is_punct("]")) {
                advance();
                advance();
                type += "[]";
            }
            types.push_back(std::move(type));
            if (accept_punct(",")) continue;
            if (accept_punct(")")) break;
            warn("malformed parameter list", cur().line);
            skip_to_semicolon();
            break;
        }
        return types;
    }

    /// Text after ':' up to a terminator at paren depth zero; tokens joined
    /// by single spaces so reformatting the source never changes the capture.
    std::string capture_expression(std::string_view terminator,
                                   std::vector<Token>* captured = nullptr) {
        std::string text;
        int depth = 0;
        while (!at_end()) {
            if (depth == 0 && cur().is_punct(terminator)) break;
            if (cur().is_punct("(")) ++depth;
            else if (cur().is_punct(")")) --depth;
            if (captured) captured->push_back(cur());
            if (!text.empty()) text.push_back(' ');
            text += advance().text;
        }
        return text;
    }

    /// AspectJ reserves these designators; a reference to one is a join-point
    /// predicate, not a named pointcut.
    static bool is_primitive_designator(const std::string& word) {
        static const std::set<std::string> kDesignators = {
            "call", "execution", "initialization", "preinitialization",
            "staticinitialization", "get", "set", "handler", "adviceexecution",
            "within", "withincode", "cflow", "cflowbelow", "if", "target", "args",
            "annotation",
        };
        return kDesignators.count(word) != 0;
    }

    /// The expression binds a named pointcut when it is exactly one
    /// (possibly qualified) call `Name.p(...)` and nothing else.
    static std::string bound_pointcut_of(const std::vector<Token>& expr) {
        size_t i = 0;
        if (i >= expr.size() || expr[i].kind != TokenKind::Identifier) return "";
        if (expr.size() >= 2 && expr[1].is_punct("(") &&
            is_primitive_designator(expr[0].text)) {
            return "";
        }
        std::string last = expr[i++].text;
        while (i + 1 < expr.size() && expr[i].is_punct(".") &&
               expr[i + 1].kind == TokenKind::Identifier) {
            last = expr[i + 1].text;
            i += 2;
        }
        if (i >= expr.size() || !expr[i].is_punct("(")) return "";
        int depth = 0;
        for (; i < expr.size(); ++i) {
            if (expr[i].is_punct("(")) ++depth;
            else if (expr[i].is_punct(")")) --depth;
            if (depth == 0) return i + 1 == expr.size() ? last : std::string();
        }
        return "";
    }

    /// Tokens of a balanced `{...}` body, outer braces excluded; cur() must
    /// be '{'.
    std::vector<Token> collect_body() {
        std::vector<Token> body;
        advance();
        int depth = 1;
        while (true) {
            if (at_end()) fail_unbalanced();
            if (cur().is_punct("{")) ++depth;
            else if (cur().is_punct("}")) {
                --depth;
                if (depth == 0) {
                    advance();
                    return body;
                }
            }
            body.push_back(cur());
            advance();
        }
    }

    // ----- declarations ---------------------------------------------------

    void parse_header(SourceUnit& unit) {
        skip_annotations();
        if (accept_word("package")) {
            std::string name;
            while (cur().kind == TokenKind::Identifier) {
                name += advance().text;
                if (!accept_punct(".")) break;
                name.push_back('.');
            }
            accept_punct(";");
            unit.package_name = name;
        }
        while (cur().is_word("import")) {
            advance();
            bool is_static = accept_word("static");
            std::string name;
            while (cur().kind == TokenKind::Identifier || cur().is_punct("*")) {
                name += advance().text;
                if (!accept_punct(".")) break;
                name.push_back('.');
            }
            accept_punct(";");
            // Static imports bring in members, not types; the resolver never
            // needs them.
            if (!is_static && !name.empty()) unit.imports.push_back(name);
        }
    }

    bool looks_like_aspect_decl() const {
        if (cur().kind != TokenKind::Identifier || cur().text != "aspect") return false;
        if (peek().kind != TokenKind::Identifier) return false;
        const Token& after = peek(2);
        return after.is_punct("{") || after.is_word("extends") ||
               after.is_word("implements") || is_per_clause_word(after);
    }

    bool starts_type_decl() const {
        return cur().is_word("class") || cur().is_word("interface") ||
               cur().is_word("enum") || (cur().is_punct("@") && peek().is_word("interface")) ||
               looks_like_aspect_decl();
    }

    /// Parses one class/interface/aspect declaration and appends it (plus any
    /// nested types) to `out`. Returns false without consuming anything when
    /// cur() does not start a supported type declaration; enums and
    /// @interface declarations are consumed and dropped with a warning.
    bool parse_type_decl(std::vector<TypeDecl>& out, const std::string& prefix,
                         const Modifiers& mods) {
        int line = cur().line;
        if (cur().is_word("enum") || (cur().is_punct("@") && peek().is_word("interface"))) {
            warn("unsupported type declaration skipped", line);
            skip_to_type_end();
            return true;
        }
        TypeKind kind;
        if (accept_word("class")) kind = TypeKind::Class;
        else if (accept_word("interface")) kind = TypeKind::Interface;
        else if (looks_like_aspect_decl()) {
            advance();
            kind = TypeKind::Aspect;
        } else {
            return false;
        }

        TypeDecl decl;
        decl.kind = kind;
        decl.is_abstract = mods.is_abstract;
        decl.source_path = file_.absolute_path.string();
        decl.source_line = line;
        if (cur().kind != TokenKind::Identifier) {
            warn("type declaration without a name skipped", cur().line);
            skip_to_type_end();
            return true;
        }
        decl.simple_name = advance().text;
        decl.qualified_name =
            prefix.empty() ? decl.simple_name : prefix + "." + decl.simple_name;
        if (cur().is_punct("<")) skip_generics();

        while (!cur().is_punct("{") && !at_end()) {
            if (accept_word("extends")) {
                do {
                    std::string ref = parse_type_ref();
                    if (ref.empty()) break;
                    decl.extends_refs.push_back(std::move(ref));
                } while (kind == TypeKind::Interface && accept_punct(","));
            } else if (accept_word("implements")) {
                do {
                    std::string ref = parse_type_ref();
                    if (ref.empty()) break;
                    decl.implements_refs.push_back(std::move(ref));
                } while (accept_punct(","));
            } else if (is_per_clause_word(cur())) {
                advance();
                if (cur().is_punct("(")) skip_balanced("(", ")");
            } else {
                warn("unexpected token '" + cur().text + "' in type header", cur().line);
                advance();
            }
        }
        if (!cur().is_punct("{")) fail_unbalanced();
        advance();
        while (true) {
            if (at_end()) fail_unbalanced();
            if (accept_punct("}")) break;
            if (accept_punct(";")) continue;
            parse_member(decl, out);
        }
        out.push_back(std::move(decl));
        return true;
    }

    /// Remainder of an unsupported declaration: up to and including its
    /// balanced body or a bare ';'.
    void skip_to_type_end() {
        while (!at_end()) {
            if (cur().is_punct("{")) {
                skip_balanced("{", "}");
                return;
            }
            if (cur().is_punct(";")) {
                advance();
                return;
            }
            advance();
        }
    }

    void parse_member(TypeDecl& decl, std::vector<TypeDecl>& out) {
        int line = cur().line;
        Modifiers mods = collect_modifiers();

        // Initializer blocks (static or instance) are not declarations.
        if (cur().is_punct("{")) {
            warn("initializer block skipped", line);
            skip_balanced("{", "}");
            return;
        }

        if (starts_type_decl()) {
            parse_type_decl(out, decl.qualified_name, mods);
            return;
        }

        if (decl.kind == TypeKind::Aspect) {
            if (cur().kind == TokenKind::Identifier && cur().text == "declare") {
                warn("inter-type 'declare' statement skipped", line);
                skip_to_semicolon();
                return;
            }
            if (cur().kind == TokenKind::Identifier && cur().text == "pointcut" &&
                peek().kind == TokenKind::Identifier) {
                parse_pointcut(decl);
                return;
            }
            if (cur().kind == TokenKind::Identifier &&
                (cur().text == "before" || cur().text == "after") && peek().is_punct("(")) {
                AdviceKind kind =
                    advance().text == "before" ? AdviceKind::Before : AdviceKind::After;
                parse_advice(decl, kind, line);
                return;
            }
        }

        // Method type parameters: <T> T m(...)
        if (cur().is_punct("<")) skip_generics();

        // Constructor: the type's simple name directly followed by '('.
        if (cur().kind == TokenKind::Identifier && cur().text == decl.simple_name &&
            peek().is_punct("(")) {
            advance();
            MethodSig ctor;
            ctor.name = "<init>";
            ctor.param_types = parse_params();
            finish_method_tail(ctor, decl, line);
            return;
        }

        std::string type = parse_type_ref();
        if (type.empty()) {
            warn("unrecognized member skipped", line);
            skip_member_tail();
            return;
        }

        // Around advice: ReturnType around(params) [throws ...] : expr { }
        if (decl.kind == TypeKind::Aspect && cur().kind == TokenKind::Identifier &&
            cur().text == "around" && peek().is_punct("(")) {
            advance();
            parse_advice(decl, AdviceKind::Around, line);
            return;
        }

        if (cur().kind != TokenKind::Identifier) {
            warn("unrecognized member skipped", line);
            skip_member_tail();
            return;
        }
        std::string name = advance().text;

        // Inter-type member (Type.name introduced onto another type).
        if (cur().is_punct(".")) {
            warn("inter-type member declaration skipped", line);
            skip_member_tail();
            return;
        }

        if (cur().is_punct("(")) {
            MethodSig method;
            method.name = std::move(name);
            method.return_type = std::move(type);
            method.is_static = mods.is_static;
            method.is_abstract = mods.is_abstract;
            method.param_types = parse_params();
            finish_method_tail(method, decl, line);
            return;
        }

        parse_field_declarators(decl, std::move(type), std::move(name), mods, line);
    }

    void parse_pointcut(TypeDecl& decl) {
        advance(); // 'pointcut'
        PointcutDecl pc;
        pc.name = advance().text;
        if (cur().is_punct("(")) pc.param_types = parse_params();
        if (accept_punct(":")) {
            pc.expression_text = capture_expression(";");
        }
        accept_punct(";");
        // `abstract pointcut p();` and a bodyless pointcut are the same thing.
        pc.is_abstract = pc.expression_text.empty();
        decl.pointcuts.push_back(std::move(pc));
    }

    void parse_advice(TypeDecl& decl, AdviceKind kind, int line) {
        AdviceDecl advice;
        advice.kind = kind;
        if (cur().is_punct("(")) parse_params();
        // after() returning/throwing [(Formal)] — both flavors stay `after`.
        if (kind == AdviceKind::After && cur().kind == TokenKind::Identifier &&
            (cur().text == "returning" || cur().text == "throwing")) {
            advance();
            if (cur().is_punct("(")) skip_balanced("(", ")");
        }
        if (accept_word("throws")) {
            while (!cur().is_punct(":") && !at_end()) advance();
        }
        if (!accept_punct(":")) {
            warn("advice without pointcut expression skipped", line);
            skip_member_tail();
            return;
        }
        std::vector<Token> expr;
        capture_expression("{", &expr);
        advice.bound_pointcut_name = bound_pointcut_of(expr);
        if (!cur().is_punct("{")) {
            warn("advice without body skipped", line);
            skip_member_tail();
            return;
        }
        std::vector<Token> body = collect_body();
        advice.called_method_names = extract_advice_calls(body);
        advice.ordinal = static_cast<int>(decl.advices.size()) + 1;
        decl.advices.push_back(std::move(advice));
    }

    void finish_method_tail(MethodSig& method, TypeDecl& decl, int line) {
        if (accept_word("throws")) {
            while (!cur().is_punct("{") && !cur().is_punct(";") && !at_end()) advance();
        }
        if (cur().is_punct("{")) {
            skip_balanced("{", "}");
        } else if (accept_punct(";")) {
            // Bare interface declarations are implicitly abstract.
            if (decl.kind == TypeKind::Interface && !method.is_static) {
                method.is_abstract = true;
            }
        } else {
            warn("malformed method declaration", line);
            skip_member_tail();
            return;
        }
        decl.methods.push_back(std::move(method));
    }

    void parse_field_declarators(TypeDecl& decl, std::string base_type,
                                 std::string first_name, const Modifiers& mods, int line) {
        std::string name = std::move(first_name);
        while (true) {
            FieldSig field;
            field.name = name;
            field.declared_type = base_type;
            field.is_static = mods.is_static;
            while (cur().is_punct("[") && peek().is_punct("]")) {
                advance();
                advance();
                field.declared_type += "[]";
            }
            if (accept_punct("=")) skip_initializer();
            decl.fields.push_back(std::move(field));
            if (accept_punct(",")) {
                if (cur().kind != TokenKind::Identifier) {
                    warn("malformed field declarator list", line);
                    skip_to_semicolon();
                    return;
                }
                name = advance().text;
                continue;
            }
            if (!accept_punct(";")) {
                warn("field declaration missing ';'", line);
                skip_to_semicolon();
            }
            return;
        }
    }

    /// Initializer expression up to ',' or ';' at bracket depth zero; array
    /// and anonymous-class initializers keep their commas nested.
    void skip_initializer() {
        int depth = 0;
        while (!at_end()) {
            if (cur().is_punct("(") || cur().is_punct("{") || cur().is_punct("[")) ++depth;
            else if (cur().is_punct(")") || cur().is_punct("}") || cur().is_punct("]")) --depth;
            else if (depth == 0 && (cur().is_punct(",") || cur().is_punct(";"))) return;
            advance();
        }
    }

    /// Abandons a member: consumes through the next ';' or balanced '{...}',
    /// never crossing the enclosing type's closing brace.
    void skip_member_tail() {
        while (!at_end()) {
            if (cur().is_punct(";")) {
                advance();
                return;
            }
            if (cur().is_punct("{")) {
                skip_balanced("{", "}");
                return;
            }
            if (cur().is_punct("}")) return; // enclosing type closes here
            if (cur().is_punct("(")) {
                skip_balanced("(", ")");
                continue;
            }
            advance();
        }
    }
};

} // namespace

SourceUnit parse_unit(const std::vector<Token>& tokens, const SourceFile& file,
                      std::vector<std::string>& warnings) {
    if (tokens.empty()) {
        SourceUnit unit;
        unit.file = file;
        return unit;
    }
    Parser parser(tokens, file, warnings);
    return parser.run();
}

std::set<std::string> extract_advice_calls(std::span<const Token> body_tokens) {
    std::set<std::string> names;
    for (size_t i = 0; i < body_tokens.size(); ++i) {
        const Token& t = body_tokens[i];
        if (t.kind != TokenKind::Identifier) continue;
        if (i + 1 >= body_tokens.size() || !body_tokens[i + 1].is_punct("(")) continue;
        if (i > 0) {
            const Token& prev = body_tokens[i - 1];
            if (prev.is_punct(".")) {
                // Only `this.m(...)` binds to the aspect's own hierarchy.
                bool this_receiver = i >= 2 && body_tokens[i - 2].is_word("this");
                if (!this_receiver) continue;
            } else if (prev.is_word("new")) {
                continue; // constructor call
            }
        }
        names.insert(t.text);
    }
    return names;
}

std::string dump_unit(const SourceUnit& unit) {
    std::ostringstream out;
    out << "package " << unit.package_name << "\n";
    for (const std::string& imp : unit.imports) out << "import " << imp << "\n";
    for (const TypeDecl& type : unit.types) {
        out << type_kind_name(type.kind) << " " << type.qualified_name;
        if (type.is_abstract) out << " abstract";
        if (!type.extends_refs.empty()) {
            out << " extends";
            for (const auto& r : type.extends_refs) out << " " << r;
        }
        if (!type.implements_refs.empty()) {
            out << " implements";
            for (const auto& r : type.implements_refs) out << " " << r;
        }
        out << "\n";
        for (const FieldSig& f : type.fields) {
            out << "  field " << f.name << ":" << f.declared_type
                << (f.is_static ? " static" : "") << "\n";
        }
        for (const MethodSig& m : type.methods) {
            out << "  method " << m.key() << ":" << m.return_type
                << (m.is_abstract ? " abstract" : "") << (m.is_static ? " static" : "")
                << "\n";
        }
        for (const PointcutDecl& p : type.pointcuts) {
            out << "  pointcut " << p.name << "(";
            for (size_t i = 0; i < p.param_types.size(); ++i) {
                if (i) out << ",";
                out << p.param_types[i];
            }
            out << ")";
            if (p.is_abstract) out << " abstract";
            else out << " : " << p.expression_text;
            out << "\n";
        }
        for (const AdviceDecl& a : type.advices) {
            out << "  advice #" << a.ordinal << " " << advice_kind_name(a.kind) << "("
                << (a.bound_pointcut_name.empty() ? "inline" : a.bound_pointcut_name)
                << ")";
            for (const std::string& call : a.called_method_names) out << " " << call;
            out << "\n";
        }
    }
    return out.str();
}

} // namespace aosrm
