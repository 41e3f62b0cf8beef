#include "moduli/cli/report_json.hpp"

#include "moduli/error.hpp"

#include <algorithm>
#include <initializer_list>

namespace moduli::cli {

namespace {

template <class E>
E enum_from(const Json& j, std::initializer_list<E> values, const char* what) {
  const std::string s = j.get<std::string>();
  for (E v : values)
    if (s == to_string(v)) return v;
  throw ModuliError(Errc::bad_input, std::string("unknown ") + what + " '" + s + "'");
}

Json optional_integer(const std::optional<Integer>& v) {
  return v ? integer_to_json(*v) : Json(nullptr);
}

std::optional<Integer> optional_integer_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return integer_from_json(j.at(key));
}

std::string mukai_text(const MukaiVector& v) {
  return "(" + v.r.str() + "," + v.m.str() + "H," + v.s.str() + ")";
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

Cell opt_cell(const std::optional<Integer>& v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace

Json to_json(const SurfaceDescriptor& d) {
  Json j;
  j["family"] = d.family;
  if (d.label) j["label"] = *d.label;
  Json params = Json::object();
  for (const auto& [k, v] : d.params) params[k] = integer_to_json(v);
  j["params"] = std::move(params);
  return j;
}

SurfaceDescriptor descriptor_from_json(const Json& j) {
  SurfaceDescriptor d;
  d.family = j.at("family").get<std::string>();
  if (j.contains("label")) d.label = j.at("label").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) d.params[k] = integer_from_json(v);
  return d;
}

Json to_json(const AdmissibilityReport& rep) {
  Json j;
  j["outcome"] = to_string(rep.outcome);
  j["a1"] = to_string(rep.a1);
  j["a2"] = to_string(rep.a2);
  j["a3"] = to_string(rep.a3.branch);
  j[kDaggerColumn] = rep.a3.needs_non_hyperelliptic;
  j["hyperelliptic"] = to_string(rep.hyperelliptic);
  j["d"] = integer_to_json(rep.d);
  j["genus"] = integer_to_json(rep.genus);
  j["assumed_hypotheses"] = rep.assumed_hypotheses;
  j["notes"] = rep.notes;
  return j;
}

AdmissibilityReport admissibility_from_json(const Json& j) {
  AdmissibilityReport rep;
  rep.outcome = enum_from(j.at("outcome"),
                          {Outcome::admissible, Outcome::conditional, Outcome::not_admissible},
                          "outcome");
  const auto verdicts = {Verdict::pass, Verdict::conditional, Verdict::fail};
  rep.a1 = enum_from(j.at("a1"), verdicts, "verdict");
  rep.a2 = enum_from(j.at("a2"), verdicts, "verdict");
  rep.a3.branch =
      enum_from(j.at("a3"), {A3Branch::a3_1, A3Branch::a3_2, A3Branch::fails}, "A3 branch");
  rep.a3.needs_non_hyperelliptic = j.at(kDaggerColumn).get<bool>();
  rep.hyperelliptic = enum_from(j.at("hyperelliptic"),
                                {HyperellipticRequirement::none, HyperellipticRequirement::satisfied,
                                 HyperellipticRequirement::conditional,
                                 HyperellipticRequirement::impossible},
                                "hyperelliptic requirement");
  rep.d = integer_from_json(j.at("d"));
  rep.genus = integer_from_json(j.at("genus"));
  rep.assumed_hypotheses = j.at("assumed_hypotheses").get<std::vector<std::string>>();
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

Json to_json(const DimensionReport& rep) {
  Json j;
  j["r"] = integer_to_json(rep.r);
  j["m"] = integer_to_json(rep.m);
  j["d"] = integer_to_json(rep.d);
  j["genus"] = integer_to_json(rep.genus);
  j["L_squared"] = integer_to_json(rep.lsq);
  j["c2"] = integer_to_json(rep.c2);
  j["discriminant"] = integer_to_json(rep.discriminant);
  j["h0_L"] = optional_integer(rep.h0_L);
  j["dim_grassmannian"] = optional_integer(rep.dim_grassmannian);
  j["dim_curve_grassmannian"] = optional_integer(rep.dim_curve_grassmannian);
  j["expected_dim_moduli"] = optional_integer(rep.expected_dim_moduli);
  if (rep.mukai) {
    Json v;
    v["r"] = integer_to_json(rep.mukai->r);
    v["m"] = integer_to_json(rep.mukai->m);
    v["s"] = integer_to_json(rep.mukai->s);
    v["primitive"] = rep.mukai->primitive;
    v["coprime_rm"] = rep.mukai->coprime_rm;
    j["mukai_vector"] = std::move(v);
  } else {
    j["mukai_vector"] = nullptr;
  }
  j["lagrangian"] = rep.lagrangian ? Json(*rep.lagrangian) : Json(nullptr);
  j["assumed_hypotheses"] = rep.assumed_hypotheses;
  j["warnings"] = rep.warnings;
  return j;
}

DimensionReport dimensions_from_json(const Json& j) {
  DimensionReport rep;
  rep.r = integer_from_json(j.at("r"));
  rep.m = integer_from_json(j.at("m"));
  rep.d = integer_from_json(j.at("d"));
  rep.genus = integer_from_json(j.at("genus"));
  rep.lsq = integer_from_json(j.at("L_squared"));
  rep.c2 = integer_from_json(j.at("c2"));
  rep.discriminant = integer_from_json(j.at("discriminant"));
  rep.h0_L = optional_integer_from(j, "h0_L");
  rep.dim_grassmannian = optional_integer_from(j, "dim_grassmannian");
  rep.dim_curve_grassmannian = optional_integer_from(j, "dim_curve_grassmannian");
  rep.expected_dim_moduli = optional_integer_from(j, "expected_dim_moduli");
  if (!j.at("mukai_vector").is_null()) {
    const Json& v = j.at("mukai_vector");
    rep.mukai = MukaiVector{integer_from_json(v.at("r")), integer_from_json(v.at("m")),
                            integer_from_json(v.at("s")), v.at("primitive").get<bool>(),
                            v.at("coprime_rm").get<bool>()};
  }
  if (!j.at("lagrangian").is_null()) rep.lagrangian = j.at("lagrangian").get<bool>();
  rep.assumed_hypotheses = j.at("assumed_hypotheses").get<std::vector<std::string>>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  return rep;
}

Json to_json(const CollectionDocument& doc) {
  Json j;
  j["format"] = kFormatVersion;
  j["command"] = doc.command;
  j["surface"] = to_json(doc.surface);
  j["r"] = integer_to_json(doc.r);
  j["m"] = integer_to_json(doc.m);
  j["admissibility"] = to_json(doc.admissibility);
  j["dimensions"] = doc.dimensions ? to_json(*doc.dimensions) : Json(nullptr);
  return j;
}

CollectionDocument document_from_json(const Json& j) {
  if (!j.contains("format") || j.at("format") != kFormatVersion)
    throw ModuliError(Errc::bad_input, std::string("report format must be ") + kFormatVersion);
  CollectionDocument doc;
  doc.command = j.at("command").get<std::string>();
  doc.surface = descriptor_from_json(j.at("surface"));
  doc.r = integer_from_json(j.at("r"));
  doc.m = integer_from_json(j.at("m"));
  doc.admissibility = admissibility_from_json(j.at("admissibility"));
  if (!j.at("dimensions").is_null()) doc.dimensions = dimensions_from_json(j.at("dimensions"));
  return doc;
}

OutputTable document_table(const CollectionDocument& doc) {
  OutputTable t;
  t.title = doc.command;
  t.columns = {"field", "value"};
  const auto row = [&](const std::string& k, Cell v) { t.add_row({k, std::move(v)}); };
  std::string surface = doc.surface.family;
  for (const auto& [k, v] : doc.surface.params) surface += " " + k + "=" + v.str();
  row("surface", surface);
  if (doc.surface.label) row("label", *doc.surface.label);
  row("r", doc.r);
  row("m", doc.m);
  const AdmissibilityReport& a = doc.admissibility;
  row("outcome", std::string(to_string(a.outcome)));
  row("A1", std::string(to_string(a.a1)));
  row("A2", std::string(to_string(a.a2)));
  row("A3", std::string(to_string(a.a3.branch)));
  row(kDaggerColumn, a.a3.needs_non_hyperelliptic);
  row("hyperelliptic", std::string(to_string(a.hyperelliptic)));
  row("d", a.d);
  row("genus", a.genus);
  if (doc.dimensions) {
    const DimensionReport& dr = *doc.dimensions;
    row("L_squared", dr.lsq);
    row("c2", dr.c2);
    row("discriminant", dr.discriminant);
    row("h0_L", opt_cell(dr.h0_L));
    row("dim_grassmannian", opt_cell(dr.dim_grassmannian));
    row("dim_curve_grassmannian", opt_cell(dr.dim_curve_grassmannian));
    row("expected_dim_moduli", opt_cell(dr.expected_dim_moduli));
    if (dr.mukai) {
      row("mukai_vector", mukai_text(*dr.mukai));
      row("mukai_primitive", dr.mukai->primitive);
      row("mukai_coprime_rm", dr.mukai->coprime_rm);
    }
    if (dr.lagrangian) row("lagrangian", *dr.lagrangian);
    if (!dr.warnings.empty()) row("warnings", join(dr.warnings));
  }
  std::vector<std::string> hyp = a.assumed_hypotheses;
  if (doc.dimensions)
    for (const auto& h : doc.dimensions->assumed_hypotheses)
      if (std::find(hyp.begin(), hyp.end(), h) == hyp.end()) hyp.push_back(h);
  row("assumed_hypotheses", join(hyp));
  row("notes", join(a.notes));
  return t;
}

}  // namespace moduli::cli
