#include "aosrm/signatures.hpp"

#include <algorithm>
#include <tuple>

namespace aosrm {

namespace {

enum SignatureKind {
    kClass,
    kClassExt,
    kAspect,
    kAspectConcrete,
    kMethod,
    kMethodRd,
    kField,
    kFieldRd,
    kPointcut,
    kPointcutRd,
    kAdvice,
    kAdviceRd,
};

const char* signature_kind_name(SignatureKind kind) {
    switch (kind) {
    case kClass: return "CLASS";
    case kClassExt: return "CLASS_EXT";
    case kAspect: return "ASPECT";
    case kAspectConcrete: return "ASPECT_CONCRETE";
    case kMethod: return "METHOD";
    case kMethodRd: return "METHOD_RD";
    case kField: return "FIELD";
    case kFieldRd: return "FIELD_RD";
    case kPointcut: return "POINTCUT";
    case kPointcutRd: return "POINTCUT_RD";
    case kAdvice: return "ADVICE";
    case kAdviceRd: return "ADVICE_RD";
    }
    return "?";
}

std::string method_text(const MethodSig& m) {
    return m.key() + ":" + m.return_type;
}

std::string pointcut_text(const PointcutDecl& p) {
    std::string text = p.name + "(";
    for (size_t i = 0; i < p.param_types.size(); ++i) {
        if (i) text.push_back(',');
        text += p.param_types[i];
    }
    text.push_back(')');
    if (p.is_abstract) text += " [abstract]";
    return text;
}

std::string advice_text(const AdviceDecl& a) {
    return "#" + std::to_string(a.ordinal) + " " + advice_kind_name(a.kind) + "(" +
           (a.bound_pointcut_name.empty() ? "inline" : a.bound_pointcut_name) + ")";
}

} // namespace

std::vector<std::string> signature_lines(const std::vector<SourceUnit>& units,
                                         const RedefinitionMarks& marks) {
    struct Entry {
        std::string owner;
        SignatureKind kind;
        std::string text;
    };
    std::vector<Entry> entries;

    for (const SourceUnit& unit : units) {
        for (const TypeDecl& type : unit.types) {
            const std::string& owner = type.qualified_name;
            if (type.kind == TypeKind::Interface) continue;
            if (type.kind == TypeKind::Class) {
                entries.push_back({owner, kClass, "class " + type.simple_name});
                if (marks.extended_classes.count(owner)) {
                    entries.push_back({owner, kClassExt, "class " + type.simple_name});
                }
            } else {
                entries.push_back({owner, kAspect, "aspect " + type.simple_name});
                if (marks.concrete_aspects.count(owner)) {
                    entries.push_back(
                        {owner, kAspectConcrete, "aspect " + type.simple_name});
                }
            }
            for (const MethodSig& m : type.methods) {
                entries.push_back({owner, kMethod, method_text(m)});
                if (marks.redefined_methods.count({owner, m.key()})) {
                    entries.push_back({owner, kMethodRd, method_text(m)});
                }
            }
            for (const FieldSig& f : type.fields) {
                entries.push_back({owner, kField, f.name + ":" + f.declared_type});
                if (marks.redefined_fields.count({owner, f.name})) {
                    entries.push_back({owner, kFieldRd, f.name + ":" + f.declared_type});
                }
            }
            for (const PointcutDecl& p : type.pointcuts) {
                entries.push_back({owner, kPointcut, pointcut_text(p)});
                if (marks.redefined_pointcuts.count({owner, p.name})) {
                    entries.push_back({owner, kPointcutRd, pointcut_text(p)});
                }
            }
            for (const AdviceDecl& a : type.advices) {
                entries.push_back({owner, kAdvice, advice_text(a)});
                if (marks.redefined_advices.count({owner, a.ordinal})) {
                    entries.push_back({owner, kAdviceRd, advice_text(a)});
                }
            }
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.owner, a.kind, a.text) < std::tie(b.owner, b.kind, b.text);
    });

    std::vector<std::string> lines;
    lines.reserve(entries.size());
    for (const Entry& e : entries) {
        lines.push_back(std::string(signature_kind_name(e.kind)) + "|" + e.owner + "|" +
                        e.text);
    }
    return lines;
}

void append_signature_section(RunLog& log, const std::vector<SourceUnit>& units,
                              const RedefinitionMarks& marks) {
    log.write_line("[SIGNATURES]");
    for (const std::string& line : signature_lines(units, marks)) {
        log.write_line(line);
    }
    log.flush();
}

} // namespace aosrm
