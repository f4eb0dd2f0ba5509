#include "gentor/report.hpp"

namespace gentor {

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const GenTorsionCertificate& c) {
  Json conj = Json::array();
  for (const auto& w : c.conjugators) conj.push_back(c.group.format(w));
  Json deriv = Json::array();
  for (const auto& s : c.derivation) {
    deriv.push_back({{"relator", s.relator}, {"conjugator", c.group.format(s.conjugator)}, {"sign", s.sign}});
  }
  return {{"group", c.group.str()},
          {"element", c.group.format(c.element)},
          {"conjugators", std::move(conj)},
          {"derivation", std::move(deriv)}};
}

Json to_json(const Verdict& v, const GroupPresentation& g) {
  Json out{{"pass", v.pass}, {"reason", v.reason}};
  if (!v.pass) out["residual"] = g.format(v.residual);
  return out;
}

Json to_json(const GenTorsionReport& r) {
  auto opt = [](const std::optional<BigInt>& x) { return x ? to_json(*x) : Json(nullptr); };
  return {{"element_nontrivial", r.element_nontrivial},
          {"nontrivial_reason", r.nontrivial_reason},
          {"order_upper", opt(r.order_upper)},
          {"upper_witness", r.upper_witness},
          {"order_lower", r.order_lower_infinite ? Json("infinite") : opt(r.order_lower)},
          {"lower_witness", r.lower_witness},
          {"order_exact", opt(r.order_exact)},
          {"threshold_used", r.threshold_used ? Json(r.threshold_used->str()) : Json(nullptr)},
          {"notes", r.notes}};
}

Json to_json(const CriteriaReport& r) {
  Json conclusions = Json::array();
  for (const auto& c : r.conclusions) {
    conclusions.push_back(
        {{"statement", c.statement}, {"citation", c.citation}, {"hypotheses", c.hypotheses}, {"holds", c.holds}});
  }
  return {{"hypothesis_checks", r.hypothesis_checks}, {"conclusions", std::move(conclusions)}};
}

Json to_json(const ObstructionReport& r) {
  return {{"delta", to_json(r.delta)},
          {"delta_text", r.delta.str()},
          {"degree", r.degree},
          {"determinant", to_json(knot_determinant(r.delta))},
          {"positive_real_roots", r.positive_real_roots},
          {"flags",
           {{"no_positive_roots_not_biorderable", r.no_positive_roots_not_biorderable},
            {"all_roots_positive_candidate", r.all_roots_positive_candidate}}},
          {"unchecked_hypotheses", r.unchecked_hypotheses},
          {"notes", r.notes}};
}

GenTorsionCertificate certificate_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw DomainError("certificate must be a JSON object");
    GenTorsionCertificate c;
    c.group = GroupPresentation::parse(j.at("group").get<std::string>());
    c.element = c.group.parse_word(j.at("element").get<std::string>());
    for (const auto& w : j.at("conjugators")) c.conjugators.push_back(c.group.parse_word(w.get<std::string>()));
    for (const auto& s : j.at("derivation")) {
      const long relator = s.at("relator").get<long>();
      if (relator < 0) throw DomainError("negative relator index");
      c.derivation.push_back({static_cast<std::size_t>(relator),
                              c.group.parse_word(s.at("conjugator").get<std::string>()),
                              s.at("sign").get<int>()});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("certificate schema: ") + e.what());
  }
}

}  // namespace gentor
