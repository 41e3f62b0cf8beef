#include "moduli/cli/descriptor.hpp"

#include "moduli/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace moduli::cli {

namespace {

struct FamilyKeys {
  const char* family;
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::vector<FamilyKeys>& family_keys() {
  static const std::vector<FamilyKeys> keys = {
      {"gt-canonical", {"ksq"}, {"chi"}},
      {"gt-bicanonical", {"ksq"}, {"chi"}},
      {"kod0", {"hsq"}, {"chi", "k3", "trivial_canonical"}},
      {"delpezzo", {"e"}, {}},
      {"elliptic-product", {"g"}, {}},
      {"isogenous", {"g", "group_order"}, {}},
  };
  return keys;
}

[[noreturn]] void bad(const std::string& why) { throw ModuliError(Errc::bad_input, why); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool as_flag(const SurfaceDescriptor& d, const std::string& key, bool fallback) {
  auto it = d.params.find(key);
  if (it == d.params.end()) return fallback;
  if (it->second != 0 && it->second != 1) bad(key + " must be 0 or 1");
  return it->second == 1;
}

}  // namespace

Integer parse_integer(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size() || !std::all_of(t.begin() + static_cast<long>(i), t.end(),
                                    [](unsigned char c) { return std::isdigit(c); }))
    bad(what + ": expected an integer, got '" + text + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

SurfaceDescriptor parse_descriptor(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  SurfaceDescriptor d;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!header) {
      if (line != kFormatVersion)
        bad("descriptor must start with the header line '" + std::string(kFormatVersion) + "'");
      header = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      bad("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) bad("line " + std::to_string(lineno) + ": duplicate key " + key);
    if (key == "family") {
      d.family = value;
    } else if (key == "label") {
      d.label = value;
    } else {
      d.params[key] = parse_integer(value, "line " + std::to_string(lineno) + " (" + key + ")");
    }
  }
  if (!header) bad("empty descriptor");
  return normalize(std::move(d));
}

SurfaceDescriptor read_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read surface file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_descriptor(os.str());
}

std::string write_descriptor(const SurfaceDescriptor& d) {
  std::ostringstream os;
  os << kFormatVersion << "\n";
  os << "family = " << d.family << "\n";
  if (d.label) os << "label = " << *d.label << "\n";
  for (const auto& [k, v] : d.params) os << k << " = " << v << "\n";
  return os.str();
}

SurfaceDescriptor normalize(SurfaceDescriptor d) {
  if (d.family.empty()) bad("missing family");
  if (d.family == "k3") {
    d.family = "kod0";
    if (d.params.count("k3") && d.params["k3"] != 1) bad("family k3 with k3 = 0");
    d.params["k3"] = 1;
  }
  auto it = std::find_if(family_keys().begin(), family_keys().end(),
                         [&](const FamilyKeys& f) { return d.family == f.family; });
  if (it == family_keys().end()) {
    std::string known;
    for (const auto& f : family_keys()) known += std::string(known.empty() ? "" : ", ") + f.family;
    bad("unknown family '" + d.family + "' (known: " + known + ", k3)");
  }
  for (const auto& key : it->required)
    if (!d.params.count(key)) bad("family " + d.family + " needs key " + key);
  for (const auto& [key, value] : d.params) {
    const bool ok =
        std::count(it->required.begin(), it->required.end(), key) ||
        std::count(it->optional.begin(), it->optional.end(), key);
    if (!ok) bad("key " + key + " does not apply to family " + d.family);
  }
  return d;
}

SurfaceModel to_model(const SurfaceDescriptor& raw) {
  const SurfaceDescriptor d = normalize(raw);
  const auto get = [&](const char* k) { return d.params.at(k); };
  const auto opt = [&](const char* k) -> std::optional<Integer> {
    auto it = d.params.find(k);
    if (it == d.params.end()) return std::nullopt;
    return it->second;
  };
  SurfaceFamily family;
  if (d.family == "gt-canonical") {
    family = GeneralTypeCanonical{get("ksq"), opt("chi")};
  } else if (d.family == "gt-bicanonical") {
    family = GeneralTypeBicanonical{get("ksq"), opt("chi")};
  } else if (d.family == "kod0") {
    KodairaZero k;
    k.hsq = get("hsq");
    k.k3 = as_flag(d, "k3", true);
    k.trivial_canonical = as_flag(d, "trivial_canonical", k.k3);
    k.chi = opt("chi").value_or(k.k3 ? Integer(2) : Integer(-1));
    if (!k.k3 && !opt("chi")) bad("kod0 with k3 = 0 needs chi");
    family = k;
  } else if (d.family == "delpezzo") {
    family = DelPezzo{get("e")};
  } else if (d.family == "elliptic-product") {
    family = EllipticProduct{get("g")};
  } else {
    family = IsogenousProduct{get("g"), get("group_order")};
  }
  return build_model(family);
}

}  // namespace moduli::cli
