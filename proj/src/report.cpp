#include "bsdh/report.hpp"

#include <algorithm>

#include "json.hpp"

#include "bsdh/beta_matrix.hpp"
#include "bsdh/errors.hpp"

namespace bsdh {

namespace {

using Json = nlohmann::ordered_json;

Json word_json(const Word& w) { return Json(w.letters); }

Json matrix_json(const BetaMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json profile_json(const EtaProfile& p) {
  Json out;
  out["row"] = p.row;
  out["eta_plus"] = p.eta_plus;
  out["eta_minus"] = p.eta_minus;
  out["s"] = p.s ? Json(*p.s) : Json(nullptr);
  out["window_minus"] = p.window_minus;
  return out;
}

Json check_json(const ConditionCheck& c) {
  Json out;
  out["holds"] = c.holds;
  out["case"] = c.case_id;
  out["detail"] = c.detail;
  Json offending = Json::array();
  for (const MatrixEntryRef& e : c.offending) {
    offending.push_back(Json{{"row", e.row}, {"col", e.col}, {"value", e.value}});
  }
  out["offending"] = std::move(offending);
  return out;
}

Json verdict_json(const ConditionVerdict& v) {
  Json out;
  out["row"] = v.row;
  out["ni"] = check_json(v.ni);
  out["nii"] = check_json(v.nii);
  return out;
}

Json rigidity_json(const RigidityFlags& f) {
  Json out;
  out["coxeter_type"] = f.coxeter_type;
  out["toric"] = f.toric;
  out["cohomology_vanishing"] = f.cohomology_vanishing;
  out["locally_rigid"] = f.locally_rigid;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string column_set(const std::vector<int>& cols) {
  std::string out = "{";
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(cols[k]);
  }
  return out + "}";
}

// "condition I: holds" or "condition I: fails (rows 1,3)".
std::string condition_line(const char* label,
                           const std::vector<ConditionVerdict>& verdicts,
                           bool strong) {
  std::vector<int> failing;
  for (const ConditionVerdict& v : verdicts) {
    if (!(strong ? v.ni : v.nii).holds) failing.push_back(v.row);
  }
  std::string line = std::string("condition ") + label + ": ";
  if (failing.empty()) return line + "holds";
  line += "fails (rows ";
  for (std::size_t k = 0; k < failing.size(); ++k) {
    if (k > 0) line += ",";
    line += std::to_string(failing[k]);
  }
  return line + ")";
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  Json out;
  out["type"] = r.type ? Json(to_string(*r.type)) : Json(nullptr);
  out["word"] = r.word ? word_json(*r.word) : Json(nullptr);
  out["reduced"] = r.reduced ? Json(*r.reduced) : Json(nullptr);
  out["formal"] = r.formal;
  out["matrix"] = matrix_json(r.matrix);
  Json profiles = Json::array();
  for (const EtaProfile& p : r.profiles) profiles.push_back(profile_json(p));
  out["profiles"] = std::move(profiles);
  Json verdicts = Json::array();
  for (const ConditionVerdict& v : r.verdicts) verdicts.push_back(verdict_json(v));
  out["verdicts"] = std::move(verdicts);
  out["degrees"] = r.degrees;
  out["class_conditions"] = to_string(r.by_conditions);
  out["class_degrees"] = to_string(r.by_degrees);
  out["agreement"] = r.agreement;
  out["rigidity"] = r.rigidity ? rigidity_json(*r.rigidity) : Json(nullptr);
  return out.dump(2);
}

std::string report_to_text(const ClassificationReport& r) {
  std::string out;
  if (r.type) out += "type: " + to_string(*r.type) + "\n";
  if (r.word) {
    out += "word: " + (r.word->empty() ? std::string("(empty)") : format_word(*r.word)) + "\n";
    if (r.reduced) out += "reduced: " + yes_no(*r.reduced) + "\n";
    if (r.word->empty()) {
      out += "note: empty word denotes the one-point case; trivially Fano\n";
    }
  }
  if (r.formal) {
    out += "mode: formal (raw matrix) — degree thresholds read as "
           "nef/ample of -K assuming bigness\n";
  }
  out += "matrix:\n";
  if (r.matrix.size() == 0) {
    out += "(empty)\n";
  } else {
    out += render_matrix_pretty(r.matrix) + "\n";
  }
  for (const EtaProfile& p : r.profiles) {
    out += "row " + std::to_string(p.row) + ": eta+ = " + column_set(p.eta_plus) +
           ", eta- = " + column_set(p.eta_minus) +
           ", s = " + (p.s ? std::to_string(*p.s) : std::string("none")) +
           ", window- = " + column_set(p.window_minus) + "\n";
  }
  for (const ConditionVerdict& v : r.verdicts) {
    out += "row " + std::to_string(v.row) + " N^I : " +
           (v.ni.holds ? "holds" : "fails") + " — " + v.ni.detail + "\n";
    out += "row " + std::to_string(v.row) + " N^II: " +
           (v.nii.holds ? "holds" : "fails") + " — " + v.nii.detail + "\n";
  }
  out += condition_line("I", r.verdicts, true) + "\n";
  out += condition_line("II", r.verdicts, false) + "\n";
  out += "degrees:";
  for (int d : r.degrees) out += " " + std::to_string(d);
  if (r.degrees.empty()) out += " (none)";
  out += "\n";
  out += "class by conditions: " + describe(r.by_conditions) + "\n";
  out += "class by degrees: " + describe(r.by_degrees) + "\n";
  out += "agreement: " + yes_no(r.agreement) + "\n";
  if (r.rigidity) {
    out += "coxeter type: " + yes_no(r.rigidity->coxeter_type) +
           "; toric: " + yes_no(r.rigidity->toric) +
           "; cohomology vanishing: " + yes_no(r.rigidity->cohomology_vanishing) +
           (r.rigidity->cohomology_vanishing ? " (entailed)" : "") +
           "; locally rigid: " + yes_no(r.rigidity->locally_rigid) +
           (r.rigidity->locally_rigid ? " (entailed)" : "") + "\n";
  }
  out += "class: " + describe(r.by_conditions);
  return out;
}

std::string audit_to_json(const AuditReport& r) {
  Json out;
  out["type"] = to_string(r.type);
  out["max_len"] = r.max_len;
  out["words_checked"] = r.words_checked;
  Json divergences = Json::array();
  for (const Divergence& d : r.divergences) {
    Json row;
    row["word"] = word_json(d.word);
    row["class_conditions"] = to_string(d.by_conditions);
    row["class_degrees"] = to_string(d.by_degrees);
    Json verdicts = Json::array();
    for (const ConditionVerdict& v : d.verdicts) verdicts.push_back(verdict_json(v));
    row["verdicts"] = std::move(verdicts);
    row["degrees"] = d.degrees;
    divergences.push_back(std::move(row));
  }
  out["divergences"] = std::move(divergences);
  return out.dump(2);
}

std::string audit_to_text(const AuditReport& r) {
  std::string out;
  out += "audit: type " + to_string(r.type) + ", max length " +
         std::to_string(r.max_len) + "\n";
  out += "words checked: " + std::to_string(r.words_checked) + "\n";
  if (r.divergences.empty()) {
    out += "no divergence";
    return out;
  }
  out += "divergences: " + std::to_string(r.divergences.size()) + "\n";
  for (const Divergence& d : r.divergences) {
    out += "word " + (d.word.empty() ? std::string("(empty)") : format_word(d.word)) +
           ": conditions say " + describe(d.by_conditions) +
           ", degrees say " + describe(d.by_degrees) + "; degrees =";
    for (int deg : d.degrees) out += " " + std::to_string(deg);
    out += "\n";
    for (const ConditionVerdict& v : d.verdicts) {
      if (!v.ni.holds) out += "  row " + std::to_string(v.row) + " N^I fails — " + v.ni.detail + "\n";
      if (!v.nii.holds) out += "  row " + std::to_string(v.row) + " N^II fails — " + v.nii.detail + "\n";
    }
  }
  out.pop_back();
  return out;
}

std::vector<EnumerationRow> enumerate_classified(const SimpleType& t, int max_len,
                                                 std::size_t max_words) {
  CartanMatrix c = cartan_matrix(t);
  std::vector<EnumerationRow> rows;
  for_each_reduced_word(
      t, max_len,
      [&](const Word& w) {
        BetaMatrix m = beta_matrix(w, c);
        std::vector<int> degrees = anticanonical_degrees(m);
        bool condition_i = satisfies_condition(m, Condition::I);
        bool condition_ii = condition_i || satisfies_condition(m, Condition::II);
        std::optional<int> min_degree;
        if (!degrees.empty()) {
          min_degree = *std::min_element(degrees.begin(), degrees.end());
        }
        rows.push_back(EnumerationRow{w, w.size(), classify_by_conditions(m),
                                      condition_i, condition_ii, min_degree,
                                      rigidity_report(w, condition_i)});
      },
      max_words);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const EnumerationRow& a, const EnumerationRow& b) {
                     if (a.length != b.length) return a.length < b.length;
                     return a.word.letters < b.word.letters;
                   });
  return rows;
}

std::string enumeration_to_csv(const std::vector<EnumerationRow>& rows) {
  std::string out =
      "word,length,class,condition_I,condition_II,min_degree,"
      "coxeter_type,toric,cohomology_vanishing,locally_rigid\n";
  for (const EnumerationRow& r : rows) {
    out += format_word(r.word);
    out += ',' + std::to_string(r.length);
    out += ',' + to_string(r.cls);
    out += r.condition_i ? ",true" : ",false";
    out += r.condition_ii ? ",true" : ",false";
    out += ',' + (r.min_degree ? std::to_string(*r.min_degree) : std::string());
    out += r.rigidity.coxeter_type ? ",true" : ",false";
    out += r.rigidity.toric ? ",true" : ",false";
    out += r.rigidity.cohomology_vanishing ? ",true" : ",false";
    out += r.rigidity.locally_rigid ? ",true" : ",false";
    out += '\n';
  }
  return out;
}

std::string enumeration_to_json(const std::vector<EnumerationRow>& rows) {
  Json out = Json::array();
  for (const EnumerationRow& r : rows) {
    Json row;
    row["word"] = word_json(r.word);
    row["length"] = r.length;
    row["class"] = to_string(r.cls);
    row["condition_I"] = r.condition_i;
    row["condition_II"] = r.condition_ii;
    row["min_degree"] = r.min_degree ? Json(*r.min_degree) : Json(nullptr);
    row["rigidity"] = rigidity_json(r.rigidity);
    out.push_back(std::move(row));
  }
  return out.dump(2);
}

std::string enumeration_to_text(const std::vector<EnumerationRow>& rows) {
  std::string out;
  for (const EnumerationRow& r : rows) {
    out += (r.word.empty() ? std::string("(empty)") : format_word(r.word));
    out += " | len " + std::to_string(r.length);
    out += " | " + describe(r.cls);
    out += " | I: " + yes_no(r.condition_i);
    out += " | II: " + yes_no(r.condition_ii);
    out += " | min degree: " + (r.min_degree ? std::to_string(*r.min_degree) : std::string("-"));
    out += " | coxeter: " + yes_no(r.rigidity.coxeter_type);
    out += " | rigid: " + yes_no(r.rigidity.locally_rigid);
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace bsdh
