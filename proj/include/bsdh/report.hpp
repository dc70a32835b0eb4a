#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsdh/fano.hpp"
#include "bsdh/rigidity.hpp"

namespace bsdh {

// JSON object with fields {type, word, reduced, formal, matrix, profiles,
// verdicts, degrees, class_conditions, class_degrees, agreement, rigidity};
// word-independent fields are null in formal (raw-matrix) mode.
std::string report_to_json(const ClassificationReport& r);

// Human-readable rendering; the last line is "class: <prose class>".
std::string report_to_text(const ClassificationReport& r);

std::string audit_to_json(const AuditReport& r);
std::string audit_to_text(const AuditReport& r);

// One classified reduced word, flattened for tabular output.
struct EnumerationRow {
  Word word;
  int length = 0;
  FanoClass cls = FanoClass::NotWeakFano;
  bool condition_i = false;
  bool condition_ii = false;
  std::optional<int> min_degree;  // absent for the empty word
  RigidityFlags rigidity;
};

// Classifies every reduced word of length <= max_len, ordered by length
// and then lexicographically.
std::vector<EnumerationRow> enumerate_classified(
    const SimpleType& t, int max_len,
    std::size_t max_words = kDefaultWordCapacity);

// Fixed header:
// word,length,class,condition_I,condition_II,min_degree,coxeter_type,toric,cohomology_vanishing,locally_rigid
std::string enumeration_to_csv(const std::vector<EnumerationRow>& rows);
std::string enumeration_to_json(const std::vector<EnumerationRow>& rows);
std::string enumeration_to_text(const std::vector<EnumerationRow>& rows);

}  // namespace bsdh
