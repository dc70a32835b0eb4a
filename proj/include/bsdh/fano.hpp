#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsdh/beta_matrix.hpp"
#include "bsdh/rigidity.hpp"
#include "bsdh/weyl.hpp"

namespace bsdh {

// Ordered coarsest-to-finest: Fano implies the weak Fano property.
enum class FanoClass { NotWeakFano, WeakFanoOnly, Fano };

// Machine token: "not_weak_fano" / "weak_fano_only" / "fano".
std::string to_string(FanoClass c);

// Prose: "not weak Fano" / "weak Fano (not Fano)" / "Fano".
std::string describe(FanoClass c);

enum class Condition { I, II };

struct MatrixEntryRef {
  int row = 0;
  int col = 0;
  int value = 0;

  friend bool operator==(const MatrixEntryRef& a, const MatrixEntryRef& b) {
    return a.row == b.row && a.col == b.col && a.value == b.value;
  }
};

// Outcome of one row-condition check, with enough structure to be checked
// against the source by hand: which case applied, a prose reason, and the
// entries that break the clause when it fails.
struct ConditionCheck {
  bool holds = false;
  int case_id = 0;  // 1: no positive entry right of the diagonal; 2: window case
  std::string detail;
  std::vector<MatrixEntryRef> offending;
};

struct ConditionVerdict {
  int row = 0;
  ConditionCheck ni;
  ConditionCheck nii;
};

// Row-wise conditions. The strong one bounds the scoped negative entries
// by a single -1; the weak one allows a single -1/-2 or a pair of -1s.
// Scope is the whole tail of the row when it has no positive entry, and
// the window before the first positive entry otherwise.
ConditionCheck condition_ni(const BetaMatrix& m, int row);
ConditionCheck condition_nii(const BetaMatrix& m, int row);

std::vector<ConditionVerdict> condition_verdicts(const BetaMatrix& m);

// Conjunction of the row condition over all rows.
bool satisfies_condition(const BetaMatrix& m, Condition which);

// p[i][j] = 0 below the diagonal, 2 on it, b[i][j] above it (1-based
// semantics; returned as a dense row-major square).
std::vector<std::vector<int>> curve_divisor_pairing(const BetaMatrix& m);

// d[i] = 2 + sum of row i over the window before the first positive entry
// when one exists, else 2 + sum of the whole tail of row i.
std::vector<int> anticanonical_degrees(const BetaMatrix& m);

// Numeric path: Fano iff min degree >= 1, weak Fano iff min degree >= 0.
FanoClass classify_by_degrees(const BetaMatrix& m);

// Combinatorial path: Fano iff every row passes the strong condition,
// weak Fano iff every row passes the weak one.
FanoClass classify_by_conditions(const BetaMatrix& m);

// Everything the reporting layer needs about one word or raw matrix.
// In raw-matrix ("formal") mode there is no word, no type, no reducedness
// and no rigidity; the arithmetic is reported as-is.
struct ClassificationReport {
  std::optional<SimpleType> type;
  std::optional<Word> word;
  std::optional<bool> reduced;
  bool formal = false;
  BetaMatrix matrix;
  std::vector<EtaProfile> profiles;
  std::vector<ConditionVerdict> verdicts;
  std::vector<int> degrees;
  FanoClass by_conditions = FanoClass::NotWeakFano;
  FanoClass by_degrees = FanoClass::NotWeakFano;
  bool agreement = false;
  std::optional<RigidityFlags> rigidity;
};

// Full pipeline for a word: reducedness gate, pairing matrix, both
// classifiers, rigidity flags. Throws NotReducedError for words that are
// not reduced expressions.
ClassificationReport classify(const Word& w);

// Formal-mode pipeline for a raw matrix.
ClassificationReport classify_matrix(const BetaMatrix& m);

struct Divergence {
  Word word;
  FanoClass by_conditions = FanoClass::NotWeakFano;
  FanoClass by_degrees = FanoClass::NotWeakFano;
  std::vector<ConditionVerdict> verdicts;
  std::vector<int> degrees;
};

struct AuditReport {
  SimpleType type;
  int max_len = 0;
  std::uint64_t words_checked = 0;
  std::vector<Divergence> divergences;
};

// Checks classify_by_conditions == classify_by_degrees on every reduced
// word of length <= max_len. jobs > 1 partitions the search by first
// letter across threads; the divergence list is sorted by (length,
// lexicographic word) so output never depends on scheduling.
AuditReport audit(const SimpleType& t, int max_len, int jobs = 1,
                  std::size_t max_words = kDefaultWordCapacity);

}  // namespace bsdh
