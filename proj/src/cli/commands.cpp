#include "moduli/cli/commands.hpp"

#include "moduli/admissibility.hpp"
#include "moduli/cli/descriptor.hpp"
#include "moduli/cli/output.hpp"
#include "moduli/cli/report_json.hpp"
#include "moduli/error.hpp"
#include "moduli/moduli.hpp"
#include "moduli/pairs.hpp"
#include "moduli/selfcheck.hpp"

#include <CLI11.hpp>

#include <map>
#include <variant>

namespace moduli::cli {

namespace {

const Integer kMaxBound = 100000;

[[noreturn]] void bad(const std::string& why) { throw ModuliError(Errc::bad_input, why); }

// Integer-valued flags are read as text and parsed exactly.
struct Flags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    options[name] = app->add_option("--" + name, values[name], help);
  }
  bool given(const std::string& name) const {
    auto it = options.find(name);
    return it != options.end() && it->second->count() > 0;
  }
  Integer integer(const std::string& name) const {
    return parse_integer(values.at(name), "--" + name);
  }
  Integer integer_or(const std::string& name, const Integer& fallback) const {
    return given(name) ? integer(name) : fallback;
  }
};

const std::vector<std::pair<std::string, std::string>> kSurfaceParams = {
    {"ksq", "K_S^2"},
    {"chi", "chi(O_S)"},
    {"hsq", "H^2 (K_S == 0 families)"},
    {"k3", "1 for a K3 surface (kod0 default 1)"},
    {"trivial-canonical", "1 when K_S is trivial, not just numerically"},
    {"e", "del Pezzo degree K_S^2"},
    {"g", "genus of the fibre F"},
    {"group-order", "|G| for a surface isogenous to a product"},
};

void add_surface_options(CLI::App* app, Flags& f) {
  f.add(app, "family", "gt-canonical, gt-bicanonical, kod0, k3, delpezzo, elliptic-product, isogenous");
  f.add(app, "label", "free-form label echoed in reports");
  f.add(app, "surface-file", "read the surface from a moduli-lab/1 descriptor file");
  for (const auto& [name, help] : kSurfaceParams) f.add(app, name, help);
}

SurfaceDescriptor surface_from(const Flags& f) {
  if (f.given("surface-file")) {
    if (f.given("family")) bad("give either --surface-file or --family, not both");
    for (const auto& [name, help] : kSurfaceParams)
      if (f.given(name)) bad("--" + name + " cannot be combined with --surface-file");
    SurfaceDescriptor d = read_descriptor_file(f.values.at("surface-file"));
    if (f.given("label")) d.label = f.values.at("label");
    return d;
  }
  if (!f.given("family")) bad("missing --family or --surface-file");
  SurfaceDescriptor d;
  d.family = f.values.at("family");
  if (f.given("label")) d.label = f.values.at("label");
  for (const auto& [name, help] : kSurfaceParams) {
    if (!f.given(name)) continue;
    std::string key = name;
    std::replace(key.begin(), key.end(), '-', '_');
    d.params[key] = f.integer(name);
  }
  return normalize(std::move(d));
}

Integer bounded(const Flags& f, const std::string& name, const Integer& fallback) {
  const Integer v = f.integer_or(name, fallback);
  if (v < 0) bad("--" + name + " must be nonnegative");
  if (v > kMaxBound) bad("--" + name + " exceeds " + kMaxBound.str() + "; unbounded requests are refused");
  return v;
}

void emit(std::ostream& out, const OutputTable& t, Format fmt) { out << render(t, fmt); }

int outcome_exit(Outcome o) {
  switch (o) {
    case Outcome::admissible: return kExitOk;
    case Outcome::conditional: return kExitConditional;
    case Outcome::not_admissible: return kExitNotAdmissible;
  }
  return kExitInputError;
}

// ---- check / dims ----------------------------------------------------------

int cmd_collection(const std::string& command, const Flags& f, std::ostream& out,
                   std::ostream& err, Format fmt) {
  if (!f.given("r") || !f.given("m")) bad(command + " needs --r and --m");
  CollectionDocument doc;
  doc.command = command;
  doc.surface = surface_from(f);
  doc.r = f.integer("r");
  doc.m = f.integer("m");
  const SurfaceModel model = to_model(doc.surface);
  if (command == "dims" && !model.chi)
    bad("dims needs chi(O_S) for this family; pass --chi (no default is assumed)");
  doc.admissibility = check_collection(Collection(model, doc.m, doc.r));
  doc.dimensions = compute_dimensions(model, doc.m, doc.r);

  if (command == "dims" && doc.admissibility.outcome == Outcome::not_admissible) {
    doc.dimensions->warnings.insert(doc.dimensions->warnings.begin(),
                                    "collection is not admissible; numbers are formal");
    err << "warning: collection is not admissible\n";
  }
  if (fmt == Format::json) {
    out << to_json(doc).dump(2) << "\n";
  } else {
    emit(out, document_table(doc), fmt);
  }
  return outcome_exit(doc.admissibility.outcome);
}

// ---- enumerate -------------------------------------------------------------

const char* branch_name(const Pair& p) {
  if (p.has(PairFlag::a3_1)) return "A3(1)";
  if (p.has(PairFlag::a3_2)) return "A3(2)";
  return "";
}

std::string kind_name(const Pair& p) {
  if (p.has(PairFlag::sporadic)) return "sporadic";
  if (p.has(PairFlag::standard)) return "standard";
  return "";
}

bool a_parametrized(const SurfaceModel& model) {
  return std::holds_alternative<GeneralTypeBicanonical>(model.family) ||
         std::holds_alternative<DelPezzo>(model.family) ||
         std::holds_alternative<EllipticProduct>(model.family) ||
         std::holds_alternative<IsogenousProduct>(model.family);
}

PairSet closed_with_amax(const SurfaceModel& model, int a_max) {
  return std::visit(
      [&](const auto& fam) -> PairSet {
        using F = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<F, GeneralTypeBicanonical>)
          return enum_gt_bicanonical_a31(fam.ksq, a_max);
        else if constexpr (std::is_same_v<F, DelPezzo>)
          return enum_delpezzo(fam.degree, a_max);
        else if constexpr (std::is_same_v<F, EllipticProduct>)
          return enum_elliptic_product(fam.fiber_genus, a_max);
        else if constexpr (std::is_same_v<F, IsogenousProduct>)
          return enum_isogenous(fam.fiber_genus, fam.group_order, a_max);
        else
          throw std::logic_error("family is not parametrized by a");
      },
      model.family);
}

int cmd_enumerate(const Flags& f, const std::string& strategy, std::ostream& out, std::ostream& err,
                  Format fmt) {
  const SurfaceDescriptor desc = surface_from(f);
  const SurfaceModel model = to_model(desc);
  const SearchBox box{bounded(f, "rmax", 64), bounded(f, "mmax", 64)};

  OutputTable t;
  t.title = "enumerate " + desc.family;
  t.columns = {"r", "m", "branch", "kind", kDaggerColumn};
  t.notes.push_back("box: r <= " + box.r_max.str() + ", m <= " + box.m_max.str());
  std::string params;
  for (const auto& [k, v] : desc.params) params += (params.empty() ? "" : ", ") + k + " = " + v.str();
  t.notes.push_back("surface: " + params);

  PairSet closed, raw;
  const bool want_closed = strategy != "raw";
  const bool want_raw = strategy != "closed";
  if (want_closed) {
    if (f.given("amax")) {
      if (!a_parametrized(model)) bad("--amax applies only to families parametrized by a");
      const Integer a_max = bounded(f, "amax", kDefaultAMax);
      if (strategy == "both") {
        t.notes.push_back("--amax ignored with strategy both; the closed side covers the box");
        closed = enumerate_closed(model, box);
      } else {
        closed = closed_with_amax(model, a_max.convert_to<int>());
        closed.clip(box);
        t.notes.push_back("a <= " + a_max.str());
      }
    } else {
      closed = enumerate_closed(model, box);
    }
  }
  if (want_raw) raw = enumerate_raw(model, box);

  int code = kExitOk;
  if (strategy == "both") {
    t.columns.push_back("cross_check");
    const CrossCheckReport rep = cross_check(closed, raw);
    std::map<std::pair<Integer, Integer>, const PairDiff*> diffs;
    for (const auto& d : rep.differences) diffs[{d.pair.r, d.pair.m}] = &d;
    PairSet all = closed;
    for (const auto& p : raw.pairs())
      if (!all.contains(p.r, p.m)) all.insert(p);
    for (const auto& p : all.pairs()) {
      auto it = diffs.find({p.r, p.m});
      std::string status = "agree";
      if (it != diffs.end()) {
        switch (it->second->side) {
          case PairDiff::Side::closed_only: status = "closed-only"; break;
          case PairDiff::Side::raw_only: status = "raw-only"; break;
          case PairDiff::Side::flags_differ: status = "flags-differ"; break;
        }
      }
      t.add_row({p.r, p.m, std::string(branch_name(p)), kind_name(p), p.has(PairFlag::dagger), status});
    }
    for (const auto& d : rep.differences)
      t.notes.push_back("mismatch " + d.diagnosis);
    t.notes.push_back(rep.agrees() ? "cross-check: closed form and window scan agree"
                                   : "cross-check: " + std::to_string(rep.differences.size()) +
                                         " difference(s)");
    if (!rep.agrees()) {
      err << "cross-check failed with " << rep.differences.size() << " difference(s)\n";
      code = kExitNotAdmissible;
    }
  } else {
    const PairSet& s = want_closed ? closed : raw;
    for (const auto& p : s.pairs())
      t.add_row({p.r, p.m, std::string(branch_name(p)), kind_name(p), p.has(PairFlag::dagger)});
  }
  for (const auto* s : {&closed, &raw})
    for (const auto& d : s->diagnostics()) t.notes.push_back(d);
  t.notes.push_back(std::to_string(t.rows.size()) + " pair(s)");

  if (fmt == Format::csv)
    for (const auto& n : t.notes) err << n << "\n";
  emit(out, t, fmt);
  return code;
}

// ---- table -----------------------------------------------------------------

std::string describe_s(const Integer& k, const Integer& r_bar) {
  return "S_" + r_bar.str() + ": r >= " + r_bar.str() + ", m = ceil(1 + (r+2)/" + k.str() +
         "), and also m + 1 when " + k.str() + " divides r + 2";
}

std::string describe_t(const Integer& h, const Integer& m_bar) {
  return "T_" + m_bar.str() + ": m >= " + m_bar.str() + ", " + h.str() + "(2m-2) - 2 <= r <= " +
         h.str() + "(2m-1) - 2";
}

int cmd_table(const std::string& id, const Flags& f, std::ostream& out, std::ostream& err,
              Format fmt) {
  OutputTable t;
  t.columns = {"kind", "r", "m", kDaggerColumn, "description"};
  LiteralRow row;
  std::string standard;
  if (id == "sgt-a32") {
    if (!f.given("ksq")) bad("table sgt-a32 needs --ksq");
    const Integer k = f.integer("ksq");
    if (k < 1) bad("--ksq must be >= 1");
    row = gt_a32_literal_row(k);
    standard = describe_s(k, row.standard_from);
    t.title = "sgt-a32 K^2 = " + k.str();
    t.citation = "stored table: A3(2) sporadic and standard pairs, surfaces of general type, H = K_S";
    for (const auto& e : gt_a32_errata(k)) {
      std::string note = "stored row disagrees with the degree window: ";
      note += e.printed ? format_pair(*e.printed) : std::string("(missing)");
      note += " -> ";
      note += e.corrected ? format_pair(*e.corrected) : std::string("(drop)");
      t.notes.push_back(note + " (" + e.reason + ")");
    }
  } else if (id == "kod0-a32") {
    if (!f.given("h")) bad("table kod0-a32 needs --h (h = H^2/2)");
    const Integer h = f.integer("h");
    if (h < 2) bad("--h must be >= 2");
    row = kod0_a32_literal_row(h);
    standard = describe_t(h, row.standard_from);
    t.title = "kod0-a32 h = " + h.str();
    t.citation = "stored table: A3(2) sporadic and standard pairs, K_S numerically trivial, h = H^2/2";
    if (h >= 5) t.notes.push_back("dagger on (2h,2) applies only when K_S is not trivial");
  } else {
    bad("unknown table '" + id + "' (known: sgt-a32, kod0-a32)");
  }
  for (const auto& s : row.sporadic) t.add_row({std::string("sporadic"), s.r, s.m, s.dagger, std::string()});
  t.add_row({std::string("standard"), std::monostate{}, std::monostate{}, false, standard});
  t.notes.insert(t.notes.begin(), "row: " + row.text);
  if (fmt == Format::csv)
    for (const auto& n : t.notes) err << n << "\n";
  emit(out, t, fmt);
  return kExitOk;
}

// ---- selfcheck -------------------------------------------------------------

int cmd_selfcheck(std::ostream& out, Format fmt) {
  OutputTable t;
  t.title = "selfcheck";
  t.columns = {"check", "passed", "detail"};
  bool all = true;
  for (const auto& r : run_selfcheck()) {
    t.add_row({r.name, r.passed, r.detail});
    all = all && r.passed;
  }
  emit(out, t, fmt);
  return all ? kExitOk : kExitNotAdmissible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissibility, pair enumeration and moduli dimensions for kernel bundles on surfaces",
               "moduli-lab"};
  app.require_subcommand(1);

  Flags check_f, dims_f, enum_f, table_f;
  std::string strategy = "closed";
  std::string table_id;

  auto* check = app.add_subcommand("check", "decide admissibility of (S, L = mH, H, r)");
  add_surface_options(check, check_f);
  check_f.add(check, "r", "rank parameter r >= 2");
  check_f.add(check, "m", "multiple m >= 1 with L = m * generator");

  auto* dims = app.add_subcommand("dims", "dimension report for (S, L, H, r)");
  add_surface_options(dims, dims_f);
  dims_f.add(dims, "r", "rank parameter r >= 2");
  dims_f.add(dims, "m", "multiple m >= 1");

  auto* enumerate = app.add_subcommand("enumerate", "list admissible (r, m) pairs in a box");
  add_surface_options(enumerate, enum_f);
  enum_f.add(enumerate, "rmax", "largest r (default 64)");
  enum_f.add(enumerate, "mmax", "largest m (default 64)");
  enum_f.add(enumerate, "amax", "largest parameter a for a-parametrized families");
  enumerate->add_option("--strategy", strategy, "closed, raw or both")
      ->check(CLI::IsMember({"closed", "raw", "both"}));

  auto* table = app.add_subcommand("table", "print a stored sporadic/standard table");
  // --h is taken by the table, so -h cannot mean help here.
  table->set_help_flag("--help", "Print this help message and exit");
  table->add_option("id", table_id, "sgt-a32 or kod0-a32")->required();
  table_f.add(table, "ksq", "K_S^2 for sgt-a32");
  table_f.add(table, "h", "h = H^2/2 for kod0-a32");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const Format fmt = format_from_env();
    if (check->parsed()) return cmd_collection("check", check_f, out, err, fmt);
    if (dims->parsed()) return cmd_collection("dims", dims_f, out, err, fmt);
    if (enumerate->parsed()) return cmd_enumerate(enum_f, strategy, out, err, fmt);
    if (table->parsed()) return cmd_table(table_id, table_f, out, err, fmt);
    if (selfcheck->parsed()) return cmd_selfcheck(out, fmt);
  } catch (const ModuliError& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace moduli::cli
