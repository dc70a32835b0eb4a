#include "bsdh/fano.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>

#include "bsdh/errors.hpp"

namespace bsdh {

std::string to_string(FanoClass c) {
  switch (c) {
    case FanoClass::Fano: return "fano";
    case FanoClass::WeakFanoOnly: return "weak_fano_only";
    case FanoClass::NotWeakFano: return "not_weak_fano";
  }
  throw InvalidInput("bad FanoClass value");
}

std::string describe(FanoClass c) {
  switch (c) {
    case FanoClass::Fano: return "Fano";
    case FanoClass::WeakFanoOnly: return "weak Fano (not Fano)";
    case FanoClass::NotWeakFano: return "not weak Fano";
  }
  throw InvalidInput("bad FanoClass value");
}

namespace {

std::string entry_list(const std::vector<MatrixEntryRef>& entries) {
  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k > 0) out += ", ";
    out += "(" + std::to_string(entries[k].row) + "," +
           std::to_string(entries[k].col) + ")=" +
           std::to_string(entries[k].value);
  }
  return out;
}

// Shared skeleton of the two row conditions: bound the number of scoped
// negative entries, then bound how negative they may be. `strong` is the
// ample-side condition (one -1 at most); otherwise the nef-side one
// (a -1/-2, or two -1s).
ConditionCheck check_row_condition(const BetaMatrix& m, int row, bool strong) {
  EtaProfile p = eta_profile(m, row);
  ConditionCheck out;
  out.case_id = p.s ? 2 : 1;
  const std::vector<int>& scope_cols = p.s ? p.window_minus : p.eta_minus;

  std::vector<MatrixEntryRef> scoped;
  scoped.reserve(scope_cols.size());
  for (int j : scope_cols) scoped.push_back({row, j, m.at(row, j)});

  std::string noun = scoped.size() == 1 ? "negative entry" : "negative entries";
  std::string where = p.s ? " before the first positive column " + std::to_string(*p.s)
                          : " right of the diagonal";
  std::string head = "Case " + std::to_string(out.case_id) + ": row " +
                     std::to_string(row) + " has " +
                     std::to_string(scoped.size()) + " " + noun + where;

  std::size_t limit = strong ? 1 : 2;
  if (scoped.size() > limit) {
    out.holds = false;
    out.offending = scoped;
    out.detail = head + "; at most " + std::to_string(limit) +
                 (limit == 1 ? " is" : " are") + " allowed: " + entry_list(scoped);
    return out;
  }
  if (strong) {
    if (scoped.size() == 1 && scoped[0].value != -1) {
      out.holds = false;
      out.offending = scoped;
      out.detail = head + "; the single entry must be -1: " + entry_list(scoped);
      return out;
    }
  } else {
    if (scoped.size() == 1 && scoped[0].value < -2) {
      out.holds = false;
      out.offending = scoped;
      out.detail = head + "; the single entry must be -1 or -2: " + entry_list(scoped);
      return out;
    }
    if (scoped.size() == 2) {
      std::vector<MatrixEntryRef> bad;
      for (const MatrixEntryRef& e : scoped) {
        if (e.value != -1) bad.push_back(e);
      }
      if (!bad.empty()) {
        out.holds = false;
        out.offending = bad;
        out.detail = head + "; a pair must be -1 and -1: " + entry_list(bad);
        return out;
      }
    }
  }
  out.holds = true;
  out.detail = head + (scoped.empty() ? "" : ": " + entry_list(scoped));
  return out;
}

}  // namespace

ConditionCheck condition_ni(const BetaMatrix& m, int row) {
  return check_row_condition(m, row, true);
}

ConditionCheck condition_nii(const BetaMatrix& m, int row) {
  return check_row_condition(m, row, false);
}

std::vector<ConditionVerdict> condition_verdicts(const BetaMatrix& m) {
  std::vector<ConditionVerdict> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i) {
    out.push_back({i, condition_ni(m, i), condition_nii(m, i)});
  }
  return out;
}

bool satisfies_condition(const BetaMatrix& m, Condition which) {
  for (int i = 1; i <= m.size(); ++i) {
    ConditionCheck check =
        which == Condition::I ? condition_ni(m, i) : condition_nii(m, i);
    if (!check.holds) return false;
  }
  return true;
}

std::vector<std::vector<int>> curve_divisor_pairing(const BetaMatrix& m) {
  int r = m.size();
  std::vector<std::vector<int>> p(static_cast<std::size_t>(r),
                                  std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 1; i <= r; ++i) {
    p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = 2;
    for (int j = i + 1; j <= r; ++j) {
      p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = m.at(i, j);
    }
  }
  return p;
}

std::vector<int> anticanonical_degrees(const BetaMatrix& m) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i) {
    EtaProfile p = eta_profile(m, i);
    int stop = p.s ? *p.s : m.size() + 1;
    int sum = 2;
    for (int j = i + 1; j < stop; ++j) sum += m.at(i, j);
    d.push_back(sum);
  }
  return d;
}

namespace {

FanoClass class_of_degrees(const std::vector<int>& d) {
  // An empty matrix is the one-point case: trivially Fano.
  int least = d.empty() ? std::numeric_limits<int>::max()
                        : *std::min_element(d.begin(), d.end());
  if (d.empty() || least >= 1) return FanoClass::Fano;
  if (least == 0) return FanoClass::WeakFanoOnly;
  return FanoClass::NotWeakFano;
}

}  // namespace

FanoClass classify_by_degrees(const BetaMatrix& m) {
  return class_of_degrees(anticanonical_degrees(m));
}

FanoClass classify_by_conditions(const BetaMatrix& m) {
  if (satisfies_condition(m, Condition::I)) return FanoClass::Fano;
  if (satisfies_condition(m, Condition::II)) return FanoClass::WeakFanoOnly;
  return FanoClass::NotWeakFano;
}

namespace {

ClassificationReport build_report(BetaMatrix m, std::optional<Word> word,
                                  bool formal) {
  std::vector<EtaProfile> profiles;
  profiles.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i) profiles.push_back(eta_profile(m, i));

  std::vector<ConditionVerdict> verdicts = condition_verdicts(m);
  std::vector<int> degrees = anticanonical_degrees(m);
  FanoClass by_conditions = classify_by_conditions(m);
  FanoClass by_degrees = classify_by_degrees(m);

  std::optional<RigidityFlags> rigidity;
  std::optional<SimpleType> type;
  std::optional<bool> reduced;
  if (word) {
    bool condition_i = by_conditions == FanoClass::Fano;
    rigidity = rigidity_report(*word, condition_i);
    type = word->type;
    reduced = true;  // classify() refuses non-reduced words before this point
  }

  return ClassificationReport{type,
                              std::move(word),
                              reduced,
                              formal,
                              std::move(m),
                              std::move(profiles),
                              std::move(verdicts),
                              std::move(degrees),
                              by_conditions,
                              by_degrees,
                              by_conditions == by_degrees,
                              rigidity};
}

}  // namespace

ClassificationReport classify(const Word& w) {
  int element_length = length(element_of(w));
  if (element_length != w.size()) {
    throw NotReducedError(element_length, w.size());
  }
  return build_report(beta_matrix(w), w, false);
}

ClassificationReport classify_matrix(const BetaMatrix& m) {
  return build_report(m, std::nullopt, true);
}

namespace {

struct AuditSlice {
  std::uint64_t checked = 0;
  std::vector<Divergence> divergences;
};

void audit_word(const SimpleType& t, const CartanMatrix& c,
                const std::vector<int>& letters, AuditSlice& slice) {
  ++slice.checked;
  Word w(t, letters);
  BetaMatrix m = beta_matrix(w, c);
  FanoClass by_conditions = classify_by_conditions(m);
  FanoClass by_degrees = classify_by_degrees(m);
  if (by_conditions != by_degrees) {
    slice.divergences.push_back({std::move(w), by_conditions, by_degrees,
                                 condition_verdicts(m),
                                 anticanonical_degrees(m)});
  }
}

// Depth-first over reduced extensions, mirroring for_each_reduced_word but
// rooted at an arbitrary prefix so slices can run on separate threads.
void audit_dfs(const SimpleType& t, const CartanMatrix& c, const WeylElement& w,
               std::vector<int>& letters, int max_len,
               std::atomic<std::uint64_t>& used, std::uint64_t max_words,
               AuditSlice& slice) {
  if (used.fetch_add(1, std::memory_order_relaxed) >= max_words) {
    throw CapacityError("more than " + std::to_string(max_words) +
                        " reduced words; raise the cap to audit this range");
  }
  audit_word(t, c, letters, slice);
  if (static_cast<int>(letters.size()) >= max_len) return;
  for (int i = 1; i <= t.rank; ++i) {
    if (w.image_of_simple(i).is_negative()) continue;
    letters.push_back(i);
    audit_dfs(t, c, w.times_simple(i, c), letters, max_len, used, max_words, slice);
    letters.pop_back();
  }
}

}  // namespace

AuditReport audit(const SimpleType& t, int max_len, int jobs,
                  std::size_t max_words) {
  if (max_len < 0) {
    throw InvalidInput("maximum length must be non-negative, got " +
                       std::to_string(max_len));
  }
  if (t.rank > kMaxEnumerationRank) {
    throw CapacityError("rank " + std::to_string(t.rank) +
                        " exceeds enumeration cap " +
                        std::to_string(kMaxEnumerationRank));
  }
  CartanMatrix c = cartan_matrix(t);
  std::atomic<std::uint64_t> used{0};

  AuditReport report{t, max_len, 0, {}};
  AuditSlice root;
  std::vector<int> empty_letters;

  if (jobs <= 1 || max_len == 0) {
    audit_dfs(t, c, WeylElement::identity(t), empty_letters, max_len, used,
              max_words, root);
    report.words_checked = root.checked;
    report.divergences = std::move(root.divergences);
  } else {
    audit_word(t, c, empty_letters, root);
    used.fetch_add(1, std::memory_order_relaxed);

    std::vector<std::future<AuditSlice>> slices;
    slices.reserve(static_cast<std::size_t>(t.rank));
    for (int first = 1; first <= t.rank; ++first) {
      slices.push_back(std::async(std::launch::async, [&, first] {
        AuditSlice slice;
        std::vector<int> letters{first};
        audit_dfs(t, c, WeylElement::identity(t).times_simple(first, c),
                  letters, max_len, used, max_words, slice);
        return slice;
      }));
    }
    report.words_checked = root.checked;
    report.divergences = std::move(root.divergences);
    for (std::future<AuditSlice>& f : slices) {
      AuditSlice slice = f.get();
      report.words_checked += slice.checked;
      for (Divergence& d : slice.divergences) {
        report.divergences.push_back(std::move(d));
      }
    }
  }

  std::sort(report.divergences.begin(), report.divergences.end(),
            [](const Divergence& a, const Divergence& b) {
              if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
              return a.word.letters < b.word.letters;
            });
  return report;
}

}  // namespace bsdh
