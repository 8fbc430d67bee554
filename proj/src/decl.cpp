#include "aosrm/decl.hpp"

namespace aosrm {

std::string MethodSig::key() const {
    std::string key = name;
    key.push_back('(');
    for (size_t i = 0; i < param_types.size(); ++i) {
        if (i) key.push_back(',');
        key += param_types[i];
    }
    key.push_back(')');
    return key;
}

const char* type_kind_name(TypeKind kind) {
    switch (kind) {
    case TypeKind::Class: return "class";
    case TypeKind::Interface: return "interface";
    case TypeKind::Aspect: return "aspect";
    }
    return "?";
}

const char* advice_kind_name(AdviceKind kind) {
    switch (kind) {
    case AdviceKind::Before: return "before";
    case AdviceKind::After: return "after";
    case AdviceKind::Around: return "around";
    }
    return "?";
}

} // namespace aosrm
