#include "descents/json_io.hpp"

#include "descents/errors.hpp"

namespace descents {

namespace {

Json window_json(const std::vector<int>& w) { return Json(w); }

const char* group_name(GroupKind kind) { return kind == GroupKind::A ? "A" : "B"; }

GroupKind group_from_name(const std::string& name) {
  if (name == "A") return GroupKind::A;
  if (name == "B") return GroupKind::B;
  throw ParseError("unknown group tag '" + name + "'");
}

} // namespace

Json qpolynomial_to_json(const QPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = rational_to_string(c);
  return out;
}

Json element_to_json(const RationalElement& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms()) {
    Json term;
    term["perm"] = window_json(unpack_window(key, a.rank()));
    term["coeff"] = rational_to_string(c);
    terms.push_back(std::move(term));
  }
  Json out;
  out["group"] = group_name(a.kind());
  out["n"] = a.rank();
  out["coeff_ring"] = "rational";
  out["terms"] = std::move(terms);
  return out;
}

Json element_to_json(const QElement& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms()) {
    Json term;
    term["perm"] = window_json(unpack_window(key, a.rank()));
    term["coeff_q"] = qpolynomial_to_json(c);
    terms.push_back(std::move(term));
  }
  Json out;
  out["group"] = group_name(a.kind());
  out["n"] = a.rank();
  out["coeff_ring"] = "qpoly";
  out["terms"] = std::move(terms);
  return out;
}

RationalElement rational_element_from_json(const Json& j) {
  if (j.at("coeff_ring").get<std::string>() != "rational")
    throw ParseError("expected a rational-coefficient element");
  RationalElement out(group_from_name(j.at("group").get<std::string>()), j.at("n").get<int>());
  for (const auto& term : j.at("terms"))
    out.add_term(term.at("perm").get<std::vector<int>>(),
                 rational_from_string(term.at("coeff").get<std::string>()));
  return out;
}

QElement q_element_from_json(const Json& j) {
  if (j.at("coeff_ring").get<std::string>() != "qpoly")
    throw ParseError("expected a qpoly-coefficient element");
  QElement out(group_from_name(j.at("group").get<std::string>()), j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    QPolynomial c;
    for (const auto& [exp, value] : term.at("coeff_q").items())
      c.add_term(std::stol(exp), rational_from_string(value.get<std::string>()));
    out.add_term(term.at("perm").get<std::vector<int>>(), c);
  }
  return out;
}

Json record_to_json(const DescentRecord& rec, int n) {
  Json out;
  out["n"] = n;
  out["des_set"] = rec.des_set;
  out["des"] = rec.des;
  out["cdes_set"] = rec.cdes_set;
  out["cdes"] = rec.cdes;
  out["comaj"] = rec.comaj;
  out["maj"] = rec.maj;
  return out;
}

Json record_to_json(const SignedDescentRecord& rec, int n) {
  Json out;
  out["n"] = n;
  out["des_set"] = rec.des_set;
  out["des"] = rec.des;
  out["ades_set"] = rec.ades_set;
  out["ades"] = rec.ades;
  out["comaj"] = rec.comaj;
  out["acomaj"] = rec.acomaj;
  return out;
}

Json family_to_json(const IdempotentFamily& family) {
  Json out;
  out["kind"] = kind_name(family.kind);
  out["n"] = family.n;
  Json indices = Json::array();
  Json members = Json::array();
  for (int i = family.indices().first; i <= family.indices().last; ++i) {
    indices.push_back(i);
    members.push_back(element_to_json(family.member(i)));
  }
  out["indices"] = std::move(indices);
  out["members"] = std::move(members);
  return out;
}

Json report_to_json(const VerificationReport& report) {
  Json out;
  out["identity"] = report.identity;
  out["n"] = report.n;
  out["grid"] = report.grid;
  out["pass"] = report.pass;
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    Json c;
    c["point"] = ce.point;
    c["perm"] = ce.perm;
    c["lhs"] = ce.lhs;
    c["rhs"] = ce.rhs;
    if (!ce.note.empty()) c["note"] = ce.note;
    out["counterexample"] = std::move(c);
  } else {
    out["counterexample"] = nullptr;
  }
  out["millis"] = report.millis;
  return out;
}

Json distribution_to_json(const ShuffleDistribution& d, int decimal_digits) {
  Json terms = Json::array();
  for (const auto& [key, p] : d.probabilities.terms()) {
    Json term;
    term["perm"] = window_json(unpack_window(key, d.n));
    term["prob"] = rational_to_string(p);
    if (decimal_digits >= 0) term["prob_decimal"] = rational_to_decimal(p, decimal_digits);
    terms.push_back(std::move(term));
  }
  Json out;
  out["n"] = d.n;
  out["a"] = d.packets;
  out["terms"] = std::move(terms);
  return out;
}

std::string distribution_to_csv(const ShuffleDistribution& d, int decimal_digits) {
  std::string out = decimal_digits >= 0 ? "window,probability,probability_decimal\n"
                                        : "window,probability\n";
  for (const auto& [key, p] : d.probabilities.terms()) {
    out += "\"" + format_window(unpack_window(key, d.n)) + "\"," + rational_to_string(p);
    if (decimal_digits >= 0) out += "," + rational_to_decimal(p, decimal_digits);
    out += "\n";
  }
  return out;
}

Json histogram_to_json(const EulerianHistogram& hist, StructureKind kind, int n) {
  Json counts = Json::array();
  for (const auto& c : hist.counts) counts.push_back(c.get_str());
  Json out;
  out["kind"] = kind_name(kind);
  out["n"] = n;
  out["first_exponent"] = hist.first_exponent;
  out["coefficients"] = std::move(counts);
  return out;
}

} // namespace descents
