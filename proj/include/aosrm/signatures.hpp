#pragma once

#include "aosrm/decl.hpp"
#include "aosrm/detect.hpp"
#include "aosrm/run_log.hpp"

#include <string>
#include <vector>

namespace aosrm {

/// Appends the [SIGNATURES] section: one `KIND|owner|signature-text` line per
/// extracted signature, sorted by owner, then kind, then text. Kinds:
///
///   CLASS / CLASS_EXT            class <simple-name>
///   ASPECT / ASPECT_CONCRETE     aspect <simple-name>
///   METHOD / METHOD_RD           name(T1,T2):R
///   FIELD / FIELD_RD             name:T
///   POINTCUT / POINTCUT_RD       name(T1,T2) [abstract]
///   ADVICE / ADVICE_RD           #<ordinal> <kind>(<pointcut-name-or-inline>)
///
/// The _EXT/_CONCRETE/_RD variants repeat the signature of members picked out
/// by the detector. Interfaces fall outside the counted categories and emit
/// nothing.
void append_signature_section(RunLog& log, const std::vector<SourceUnit>& units,
                              const RedefinitionMarks& redefinitions);

/// The section body without the header, exposed for tests.
std::vector<std::string> signature_lines(const std::vector<SourceUnit>& units,
                                         const RedefinitionMarks& redefinitions);

} // namespace aosrm
