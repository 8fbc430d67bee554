#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace aosrm {

enum class Language { Java, AspectJ };

struct SourceFile {
    std::filesystem::path absolute_path;
    Language language_hint = Language::Java;
    std::uintmax_t byte_length = 0;
};

enum class TypeKind { Class, Interface, Aspect };

enum class AdviceKind { Before, After, Around };

struct MethodSig {
    std::string name; // "<init>" for constructors
    std::vector<std::string> param_types;
    std::string return_type;
    bool is_abstract = false;
    bool is_static = false;

    /// Override identity: name plus normalized parameter list; the return
    /// type never participates.
    std::string key() const;
};

struct FieldSig {
    std::string name;
    std::string declared_type;
    bool is_static = false;
};

struct PointcutDecl {
    std::string name;
    std::vector<std::string> param_types;
    bool is_abstract = false;
    std::string expression_text; // empty iff abstract
};

struct AdviceDecl {
    int ordinal = 0; // 1-based per-aspect declaration index
    AdviceKind kind = AdviceKind::Before;
    std::string bound_pointcut_name; // empty for inline anonymous expressions
    std::set<std::string> called_method_names;
};

struct TypeDecl {
    std::string qualified_name;
    std::string simple_name;
    TypeKind kind = TypeKind::Class;
    bool is_abstract = false; // declared with the abstract modifier
    std::vector<std::string> extends_refs;
    std::vector<std::string> implements_refs;
    std::vector<MethodSig> methods;
    std::vector<FieldSig> fields;
    std::vector<PointcutDecl> pointcuts;
    std::vector<AdviceDecl> advices;
    std::string source_path;
    int source_line = 0;
};

struct SourceUnit {
    SourceFile file;
    std::string package_name;
    std::vector<std::string> imports;
    std::vector<TypeDecl> types;
};

const char* type_kind_name(TypeKind kind);
const char* advice_kind_name(AdviceKind kind);

} // namespace aosrm
