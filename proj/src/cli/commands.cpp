#include "gentor/commands.hpp"

#include "gentor/grid.hpp"

namespace gentor {

namespace {

const char* kCiteFamily = "K_n = M(5/3, ..., 5/3, 17/6), n - 1 copies of 5/3";
const char* kCiteDisk = "K_n bounds a coherent clasp disk with 2(n-1)+6 = 2n+4 positive punctures [assumed]";
const char* kCiteHyperbolic = "K_n(p/q) is hyperbolic for the slopes considered [assumed]";
const char* kCiteThreshold = "generalized torsion of order p whenever p/q >= 2n+4 (stated as 2n-4)";
const char* kCiteBiorder =
    "rationally homologically fibered knot: no positive real roots of Delta implies not bi-orderable";

Json skeleton(const std::string& command, Json inputs) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", Json::object()},
          {"paper_citations", Json::array()},
          {"version", kVersion}};
}

CommandResult fail(Json report, int code, const std::string& message) {
  report["results"]["error"] = message;
  return {code, std::move(report)};
}

Json thresholds(long n) {
  return {{"statement", 2 * n - 4}, {"proof", 2 * n + 4}, {"used", 2 * n + 4}, {"note", threshold_note(n)}};
}

Json diagram_summary(const PlanarDiagram& d) {
  return {{"crossings", d.crossing_count()}, {"writhe", writhe(d)}, {"pd", d.pd_code()}};
}

}  // namespace

BigInt montesinos_determinant(const MontesinosDescriptor& d) {
  BigInt total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    BigInt term = d.fractions()[i].num();
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j != i) term *= d.fractions()[j].den();
    }
    total += term;
  }
  return abs(total);
}

CommandResult cmd_family(long n) {
  Json report = skeleton("family", {{"n", n}});
  if (n < 2) return fail(std::move(report), kInputError, "K_n needs n >= 2, got n = " + std::to_string(n));
  const MontesinosDescriptor d = kn_descriptor(n);
  Json& r = report["results"];
  Json fractions = Json::array();
  for (const auto& f : d.fractions()) fractions.push_back(f.str());
  r["descriptor"] = d.str();
  r["fractions"] = std::move(fractions);
  r["gcd_alpha"] = to_json(gcd_alpha(d));
  r["criteria"] = to_json(lm_criteria(d, std::nullopt));
  r["punctures"] = kn_punctures(n);
  r["thresholds"] = thresholds(n);
  r["determinant"] = to_json(montesinos_determinant(d));
  r["tangle_words"] = {{"copies", TangleWord(kKnTangleWord).str()}, {"last", TangleWord(kKnLastTangleWord).str()}};
  if (n == 2) {
    const TangleWord w(kK2ConwayWord);
    const Fraction f = cf_eval(w);
    const PlanarDiagram diagram = two_bridge_diagram(w);
    r["two_bridge"] = {{"word", w.str()},
                       {"fraction", f.str()},
                       {"crossings", diagram.crossing_count()},
                       {"determinant", to_json(abs(f.num()))},
                       {"torus_t2", is_two_bridge_torus(f)},
                       {"note", "determinant " + BigInt(abs(f.num())).get_str() + " of the two-bridge word differs from " +
                                    montesinos_determinant(d).get_str() + " of the descriptor"}};
  }
  report["paper_citations"] = {kCiteFamily, kCiteDisk, kCiteThreshold};
  return {kVerified, std::move(report)};
}

CommandResult cmd_verify(long n, long p, long q) {
  Json report = skeleton("verify", {{"n", n}, {"p", p}, {"q", q}});
  report["paper_citations"] = {kCiteFamily, kCiteDisk, kCiteHyperbolic, kCiteThreshold};
  if (n < 2) return fail(std::move(report), kInputError, "K_n needs n >= 2, got n = " + std::to_string(n));
  report["results"]["thresholds"] = thresholds(n);
  const Slope slope{p, q};
  if (q < 1) return fail(std::move(report), kInputError, "q must be >= 1, got " + std::to_string(q));
  if (!slope.reduced()) return fail(std::move(report), kInputError, "slope " + slope.str() + " is not reduced");
  try {
    const KnReport k = kn_report(n, slope);
    Json& r = report["results"];
    r["punctures"] = k.disk.positive_punctures;
    r["disk"] = k.disk.provenance;
    r["certificate"] = to_json(k.certificate);
    r["verdict"] = to_json(k.verdict, k.certificate.group);
    r["report"] = to_json(k.report);
    r["criteria"] = to_json(k.criteria);
    const bool certified = k.verdict.pass && k.report.order_exact && *k.report.order_exact == p;
    r["order"] = k.report.order_exact ? to_json(*k.report.order_exact) : Json(nullptr);
    r["verified"] = certified;
    return {certified ? kVerified : kCheckFailed, std::move(report)};
  } catch (const ThresholdError& e) {
    return fail(std::move(report), kHypothesisUnmet, e.what());
  } catch (const DomainError& e) {
    return fail(std::move(report), kInputError, e.what());
  }
}

CommandResult cmd_alexander(const std::string& input, bool is_descriptor) {
  Json report = skeleton("alexander", {{is_descriptor ? "descriptor" : "tangle", input}});
  report["paper_citations"] = {kCiteBiorder};
  try {
    PlanarDiagram d;
    BigInt expected;
    Json& r = report["results"];
    if (is_descriptor) {
      const MontesinosDescriptor m = MontesinosDescriptor::parse(input);
      d = montesinos_diagram(m);
      expected = montesinos_determinant(m);
      r["cross_check_source"] = "descriptor determinant";
    } else {
      const TangleWord w = TangleWord::parse(input);
      d = two_bridge_diagram(w);
      const Fraction f = cf_eval(w);
      expected = BigInt(abs(f.num()));
      r["fraction"] = f.str();
      r["cross_check_source"] = "continued fraction numerator";
    }
    const IntPolynomial delta = alexander_polynomial(wirtinger(d));
    const ObstructionReport o = biorder_flags(delta);
    r["diagram"] = diagram_summary(d);
    r["obstruction"] = to_json(o);
    const BigInt det = knot_determinant(o.delta);
    r["determinant"] = to_json(det);
    r["cross_check"] = {{"expected", to_json(expected)}, {"agrees", det == expected}};
    return {det == expected ? kVerified : kCheckFailed, std::move(report)};
  } catch (const DomainError& e) {
    return fail(std::move(report), kInputError, e.what());
  } catch (const EvaluationError& e) {
    return fail(std::move(report), kInputError, e.what());
  }
}

CommandResult cmd_check(const std::string& text) {
  Json report = skeleton("check", Json::object());
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) return fail(std::move(report), kInputError, "malformed JSON");
  // A verify report embeds the certificate under results.certificate.
  if (doc.is_object() && doc.contains("results") && doc["results"].is_object() &&
      doc["results"].contains("certificate")) {
    doc = doc["results"]["certificate"];
  }
  try {
    const GenTorsionCertificate c = certificate_from_json(doc);
    const Verdict v = check_certificate(c);
    report["inputs"]["group"] = c.group.str();
    report["inputs"]["element"] = c.group.format(c.element);
    report["inputs"]["conjugators"] = c.conjugators.size();
    report["results"]["verdict"] = to_json(v, c.group);
    return {v.pass ? kVerified : kCheckFailed, std::move(report)};
  } catch (const DomainError& e) {
    return fail(std::move(report), kInputError, e.what());
  }
}

CommandResult cmd_verify_grid(long nmin, long nmax, long pmax, long qmax) {
  Json report = skeleton("verify-grid", {{"nmin", nmin}, {"nmax", nmax}, {"pmax", pmax}, {"qmax", qmax}});
  report["paper_citations"] = {kCiteFamily, kCiteDisk, kCiteHyperbolic, kCiteThreshold};
  if (nmin < 2 || nmax < nmin || qmax < 1) {
    return fail(std::move(report), kInputError, "grid needs 2 <= nmin <= nmax and qmax >= 1");
  }
  const std::vector<KnCell> cells = kn_grid(nmin, nmax, pmax, qmax);
  Json out = Json::array();
  std::size_t verified = 0;
  for (const auto& c : cells) {
    Json cell{{"n", c.n}, {"p", c.p}, {"q", c.q}, {"verified", c.verified}, {"order", to_json(c.order)}};
    if (!c.verified) cell["failure"] = c.failure;
    out.push_back(std::move(cell));
    verified += c.verified;
  }
  Json& r = report["results"];
  r["cells"] = std::move(out);
  r["verified"] = verified;
  r["total"] = cells.size();
  Json notes = Json::array();
  for (long n = nmin; n <= nmax; ++n) notes.push_back(threshold_note(n));
  r["threshold_notes"] = std::move(notes);
  return {verified == cells.size() ? kVerified : kCheckFailed, std::move(report)};
}

}  // namespace gentor
