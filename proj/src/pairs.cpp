#include "moduli/pairs.hpp"

#include "moduli/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

namespace moduli {

namespace {

constexpr std::uint8_t bit(PairFlag f) { return static_cast<std::uint8_t>(f); }

bool pair_less(const Pair& a, const Pair& b) {
  if (a.r != b.r) return a.r < b.r;
  return a.m < b.m;
}

// Raw scans walk every cell, so refuse boxes that would take minutes.
const Integer kMaxRawCells = 20'000'000;

void check_box(const SearchBox& box) {
  if (box.r_max < 0 || box.m_max < 0)
    throw ModuliError(Errc::out_of_range, "search box bounds must be nonnegative");
}

[[noreturn]] void unsound(const char* family, const Integer& r, const Integer& m) {
  std::ostringstream os;
  os << family << ": closed form produced (" << r << "," << m << ") which fails d = rg + 1";
  throw std::logic_error(os.str());
}

Pair a31_pair(const Integer& r, const Integer& m) {
  return Pair{r, m, static_cast<std::uint8_t>(bit(PairFlag::a3_1) | bit(PairFlag::standard))};
}

// Sets the dagger when d = 2r; returns false when the pair has to be dropped
// because every curve of that genus is hyperelliptic.
bool apply_hyperelliptic(Pair& p, const Integer& d, HyperellipticRule rule) {
  if (d != 2 * p.r) return true;
  if (rule == HyperellipticRule::always) return false;
  if (rule == HyperellipticRule::unknown) p.set(PairFlag::dagger);
  return true;
}

HyperellipticRule rule_for(const Integer& g, bool trivial_canonical) {
  if (g == 2) return HyperellipticRule::always;
  return trivial_canonical ? HyperellipticRule::never : HyperellipticRule::unknown;
}

// Walks a = a_min, a_min + 1, ... while `r_of(a)` stays within r_max (or up
// to a_max when given). r is increasing in a for every parametrized family.
template <class Emit>
void walk_a(const Integer& a_min, const std::optional<Integer>& a_max,
            const std::optional<Integer>& r_max, Emit&& emit) {
  for (Integer a = a_min;; ++a) {
    if (a_max && a > *a_max) break;
    if (!emit(a, r_max)) break;
  }
}

std::string join_row(const std::vector<LiteralSporadic>& sp, const std::string& standard) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (i) os << ",";
    os << "(" << sp[i].r << "," << sp[i].m << ")" << (sp[i].dagger ? "†" : "");
  }
  if (!sp.empty()) os << " ";
  os << "| " << standard;
  return os.str();
}

}  // namespace

std::string flags_string(const Pair& p) {
  std::vector<std::string> parts;
  if (p.has(PairFlag::a3_1)) parts.emplace_back("A3(1)");
  if (p.has(PairFlag::a3_2)) parts.emplace_back("A3(2)");
  if (p.has(PairFlag::sporadic)) parts.emplace_back("sporadic");
  if (p.has(PairFlag::standard)) parts.emplace_back("standard");
  if (p.has(PairFlag::dagger)) parts.emplace_back("dagger");
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

std::string format_pair(const Pair& p, bool glyph) {
  std::ostringstream os;
  os << "(" << p.r << "," << p.m << ")";
  if (glyph && p.has(PairFlag::dagger)) os << "†";
  return os.str();
}

void PairSet::insert(Pair p) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p, pair_less);
  if (it != pairs_.end() && it->r == p.r && it->m == p.m) {
    it->flags |= p.flags;
    return;
  }
  pairs_.insert(it, std::move(p));
}

void PairSet::insert_all(std::vector<Pair> ps) {
  ps.insert(ps.end(), pairs_.begin(), pairs_.end());
  std::stable_sort(ps.begin(), ps.end(), pair_less);
  std::vector<Pair> out;
  out.reserve(ps.size());
  for (auto& p : ps) {
    if (!out.empty() && out.back().r == p.r && out.back().m == p.m)
      out.back().flags |= p.flags;
    else
      out.push_back(std::move(p));
  }
  pairs_ = std::move(out);
}

void PairSet::merge(const PairSet& other) {
  insert_all(other.pairs_);
  for (const auto& d : other.diagnostics_) diagnostics_.push_back(d);
}

void PairSet::clip(const SearchBox& box) {
  std::erase_if(pairs_, [&](const Pair& p) { return !box.contains(p.r, p.m); });
  box_ = box;
}

const Pair* PairSet::find(const Integer& r, const Integer& m) const {
  Pair key{r, m, 0};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key, pair_less);
  if (it != pairs_.end() && it->r == r && it->m == m) return &*it;
  return nullptr;
}

bool PairSet::contains(const Integer& r, const Integer& m) const { return find(r, m) != nullptr; }

// ---- A3(1) closed forms ----------------------------------------------------

PairSet enum_gt_a31(const Integer& ksq, const SearchBox& box) {
  check_box(box);
  if (ksq < 1) throw ModuliError(Errc::invalid_family, "K_S^2 >= 1");
  PairSet out(box);
  // m K^2 = r (K^2 + 1) + 1 forces r = -1 mod K^2. K^2 = 1 gives m = 2r + 1,
  // K^2 = 2 gives r = 2a - 1, m = 3a - 1 with a >= 2.
  for (Integer a = 1;; ++a) {
    const Integer r = a * ksq - 1;
    if (r > box.r_max) break;
    if (r < 2) continue;
    const Integer m = a * (ksq + 1) - 1;
    if (m * ksq != r * (ksq + 1) + 1) unsound("gt-canonical", r, m);
    if (m <= box.m_max) out.insert(a31_pair(r, m));
  }
  return out;
}

namespace {

PairSet bicanonical_impl(const Integer& ksq, const std::optional<Integer>& a_max,
                         const std::optional<SearchBox>& box) {
  if (ksq < 6 || ksq % 2 != 0)
    throw ModuliError(Errc::invalid_family, "bicanonical polarization needs K_S^2 even, >= 6");
  PairSet out;
  if (box) out.set_box(*box);
  const Integer g = 1 + 3 * ksq;
  walk_a(1, a_max, box ? std::optional<Integer>(box->r_max) : std::nullopt,
         [&](const Integer& a, const std::optional<Integer>& r_max) {
           const Integer r = a * ksq - 1;
           if (r_max && r > *r_max) return false;
           const Integer num = a * (3 * ksq + 1) - 3;
           if (num % 2 != 0) return true;
           const Integer m = num / 2;
           if (2 * m * ksq != r * g + 1) unsound("gt-bicanonical", r, m);
           if (!box || m <= box->m_max) out.insert(a31_pair(r, m));
           return true;
         });
  return out;
}

PairSet delpezzo_impl(const Integer& e, const std::optional<Integer>& a_max,
                      const std::optional<SearchBox>& box) {
  if (e < 1 || e > 9) throw ModuliError(Errc::invalid_family, "del Pezzo degree in [1, 9]");
  PairSet out;
  if (box) out.set_box(*box);
  walk_a(1, a_max, box ? std::optional<Integer>(box->r_max) : std::nullopt,
         [&](const Integer& a, const std::optional<Integer>& r_max) {
           const Integer r = 3 * a * e - 1;
           if (r_max && r > *r_max) return false;
           const Integer m = a * (3 * e + 1) - 1;
           if (3 * m * e != r * (1 + 3 * e) + 1) unsound("delpezzo", r, m);
           if (!box || m <= box->m_max) out.insert(a31_pair(r, m));
           return true;
         });
  return out;
}

PairSet elliptic_impl(const Integer& g, const std::optional<Integer>& a_max,
                      const std::optional<SearchBox>& box) {
  if (g < 2) throw ModuliError(Errc::invalid_family, "g(F) >= 2");
  PairSet out;
  if (box) out.set_box(*box);
  walk_a(elliptic_a_min(g), a_max, box ? std::optional<Integer>(box->r_max) : std::nullopt,
         [&](const Integer& a, const std::optional<Integer>& r_max) {
           const Integer r = 4 * g * g - 10 * g + 5 + 8 * (g - 1) * a;
           if (r_max && r > *r_max) return false;
           const Integer m = 3 * g * g - 7 * g + 3 + a * (6 * g - 5);
           if (m * 8 * (g - 1) != r * (6 * g - 5) + 1) unsound("elliptic-product", r, m);
           if (!box || m <= box->m_max) out.insert(a31_pair(r, m));
           return true;
         });
  return out;
}

PairSet isogenous_impl(const Integer& g, const Integer& group, const std::optional<Integer>& a_max,
                       const std::optional<SearchBox>& box) {
  if (g < 2 || group < 2 || !divides(group, 2 * g - 2))
    throw ModuliError(Errc::invalid_family, "isogenous product needs g >= 2 and |G| | 2g - 2");
  PairSet out;
  if (box) out.set_box(*box);
  walk_a(0, a_max, box ? std::optional<Integer>(box->r_max) : std::nullopt,
         [&](const Integer& a, const std::optional<Integer>& r_max) {
           const Integer rnum = 2 * (2 * a + 1) * group - 1;
           // r_num / g is increasing, so stop once its floor leaves the box.
           if (r_max && floor_div(rnum, g) > *r_max) return false;
           const Integer mnum = (2 * a + 1) * (2 * group + g) - 1;
           if (rnum % g != 0 || mnum % (2 * g) != 0) return true;
           const Integer r = rnum / g;
           const Integer m = mnum / (2 * g);
           if (r < 2 || m < 2) return true;
           if (4 * m * group != r * (2 * group + g) + 1) unsound("isogenous", r, m);
           if (!box || m <= box->m_max) out.insert(a31_pair(r, m));
           return true;
         });
  return out;
}

}  // namespace

PairSet enum_gt_bicanonical_a31(const Integer& ksq, int a_max) {
  return bicanonical_impl(ksq, Integer(a_max), std::nullopt);
}
PairSet enum_gt_bicanonical_a31(const Integer& ksq, const SearchBox& box) {
  check_box(box);
  return bicanonical_impl(ksq, std::nullopt, box);
}

PairSet enum_delpezzo(const Integer& e, int a_max) {
  return delpezzo_impl(e, Integer(a_max), std::nullopt);
}
PairSet enum_delpezzo(const Integer& e, const SearchBox& box) {
  check_box(box);
  return delpezzo_impl(e, std::nullopt, box);
}

Integer elliptic_a_min(const Integer& g) {
  const Integer for_m = ceil_div(7 * g - 3 * g * g, 6 * g - 5);
  const Integer for_r = ceil_div(-4 * g * g + 10 * g - 3, 8 * (g - 1));
  return std::max(for_m, for_r);
}

PairSet enum_elliptic_product(const Integer& g, int a_max) {
  return elliptic_impl(g, Integer(a_max), std::nullopt);
}
PairSet enum_elliptic_product(const Integer& g, const SearchBox& box) {
  check_box(box);
  return elliptic_impl(g, std::nullopt, box);
}

PairSet enum_isogenous(const Integer& g, const Integer& group_order, int a_max) {
  return isogenous_impl(g, group_order, Integer(a_max), std::nullopt);
}
PairSet enum_isogenous(const Integer& g, const Integer& group_order, const SearchBox& box) {
  check_box(box);
  return isogenous_impl(g, group_order, std::nullopt, box);
}

PairSet enum_kod0_a31(const Integer& hsq, const SearchBox& box) {
  check_box(box);
  PairSet out(box);
  if (hsq < 4 || hsq % 4 != 0) {
    std::ostringstream os;
    os << "H^2 = " << hsq
       << " is not divisible by 4, and m H^2 = r (1 + H^2/2) + 1 has no solution";
    out.add_diagnostic(os.str());
    return out;
  }
  const Integer h = hsq / 4;
  const Integer g = 1 + hsq / 2;
  for (Integer a = 1;; ++a) {
    const Integer r = h == 1 ? Integer(4 * a + 1) : Integer(4 * h * a - 2 * h - 1);
    if (r > box.r_max) break;
    const Integer m = h == 1 ? Integer(3 * a + 1) : Integer((1 + 2 * h) * a - h - 1);
    if (m * hsq != r * g + 1) unsound("kod0", r, m);
    if (m <= box.m_max) out.insert(a31_pair(r, m));
  }
  return out;
}

// ---- A3(2) tables ----------------------------------------------------------

PairSet s_set(const Integer& ksq, const Integer& r_bar, const SearchBox& box) {
  check_box(box);
  PairSet out(box);
  std::vector<Pair> ps;
  const auto std_flags = static_cast<std::uint8_t>(bit(PairFlag::a3_2) | bit(PairFlag::standard));
  for (Integer r = std::max(r_bar, Integer(2)); r <= box.r_max; ++r) {
    const Integer num = r + 2;
    if (num % ksq == 0) {
      const Integer m = 1 + num / ksq;
      if (m <= box.m_max) ps.push_back({r, m, std_flags});
      if (m + 1 <= box.m_max) ps.push_back({r, m + 1, std_flags});
    } else {
      const Integer m = 1 + ceil_div(num, ksq);
      if (m <= box.m_max) ps.push_back({r, m, std_flags});
    }
  }
  out.insert_all(std::move(ps));
  return out;
}

Interval t_interval(const Integer& h, const Integer& m) {
  const Integer a = h * (2 * m - 2) - 2;
  return {a, a + h};
}

PairSet t_set(const Integer& h, const Integer& m_bar, const SearchBox& box) {
  check_box(box);
  PairSet out(box);
  std::vector<Pair> ps;
  const auto std_flags = static_cast<std::uint8_t>(bit(PairFlag::a3_2) | bit(PairFlag::standard));
  for (Integer m = m_bar; m <= box.m_max; ++m) {
    const Interval iv = t_interval(h, m);
    if (iv.lo > box.r_max) break;
    for (Integer r = std::max(iv.lo, Integer(2)); r <= std::min(iv.hi, box.r_max); ++r)
      ps.push_back({r, m, std_flags});
  }
  out.insert_all(std::move(ps));
  return out;
}

LiteralRow gt_a32_literal_row(const Integer& k) {
  if (k < 1) throw ModuliError(Errc::invalid_family, "K_S^2 >= 1");
  LiteralRow row;
  if (k == 1) {
    row.sporadic = {{4, 7, false}};
    row.standard_from = 5;
  } else if (k == 2) {
    row.sporadic = {{4, 4, true}, {5, 5, true}, {6, 6, true}, {6, 5, false}};
    row.standard_from = 7;
  } else if (k == 3) {
    row.sporadic = {{6, 4, true}, {7, 4, false}};
    row.standard_from = 8;
  } else if (k == 4) {
    row.sporadic = {{6, 3, true}, {8, 4, true}, {10, 5, true}, {9, 4, false}, {10, 4, false}};
    row.standard_from = 11;
  } else {
    // Generic rows, instantiated at K^2 = k exactly as printed.
    Integer first;
    if (k % 2 == 1) {
      row.sporadic = {{4, 2 * k, true}};
      first = ceil_div(3 * k, 2) + 1;
    } else {
      row.sporadic = {{3, 3 * k / 2, true}, {4, 2 * k, true}};
      first = 3 * k / 2 + 1;
    }
    for (Integer r = first; r <= 2 * k - 2; ++r) row.sporadic.push_back({r, 3, false});
    row.standard_from = 2 * k + 1;
  }
  row.text = join_row(row.sporadic, "S_" + row.standard_from.str());
  return row;
}

LiteralRow kod0_a32_literal_row(const Integer& h) {
  if (h < 2) throw ModuliError(Errc::invalid_family, "h = H^2/2 >= 2");
  LiteralRow row;
  if (h == 2) {
    row.sporadic = {{4, 2, false}, {6, 3, false}, {7, 3, false}, {8, 3, false}};
    row.standard_from = 4;
  } else if (h == 3) {
    row.sporadic = {{6, 2, false}, {7, 2, false}};
    row.standard_from = 3;
  } else if (h == 4) {
    row.sporadic = {{8, 2, false}, {9, 2, false}, {10, 2, false}};
    row.standard_from = 3;
  } else {
    row.sporadic = {{2 * h, 2, true}, {2 * h + 1, 2, false}};
    const Integer b2 = t_interval(h, 2).hi;
    for (Integer r = 2 * h + 2; r <= b2; ++r) row.sporadic.push_back({r, 2, false});
    row.standard_from = 3;
  }
  row.text = join_row(row.sporadic, "T_" + row.standard_from.str());
  return row;
}

std::vector<Erratum> gt_a32_errata(const Integer& k) {
  std::vector<Erratum> out;
  if (k < 5) return out;
  const auto sp = static_cast<std::uint8_t>(bit(PairFlag::a3_2) | bit(PairFlag::sporadic));
  const auto spd = static_cast<std::uint8_t>(sp | bit(PairFlag::dagger));
  out.push_back({Pair{4, 2 * k, spd}, Pair{2 * k, 4, spd},
                 "printed with r and m swapped: the dagger needs d = 2r, which holds at (2K^2, 4)"});
  if (k % 2 == 0) {
    out.push_back({Pair{3, 3 * k / 2, spd}, Pair{3 * k / 2, 3, spd},
                   "printed with r and m swapped: d = 2r holds at (3K^2/2, 3)"});
  } else {
    out.push_back({std::nullopt, Pair{ceil_div(3 * k, 2), 3, sp},
                   "lower end of the (r, 3) run is inclusive: r = ceil(3K^2/2) meets "
                   "r + K^2 + 2 <= 3K^2"});
  }
  return out;
}

namespace {

PairSet gt_a32_from_row(const Integer& k, const std::vector<LiteralSporadic>& sporadic,
                        const Integer& r_bar, const SearchBox& box) {
  check_box(box);
  PairSet out = s_set(k, r_bar, box);
  const Integer g = k + 1;
  const HyperellipticRule rule = rule_for(g, false);
  std::vector<Pair> standard = out.pairs();
  out = PairSet(box);
  std::vector<Pair> ps;
  for (auto& p : standard) {
    if (apply_hyperelliptic(p, p.m * k, rule)) ps.push_back(std::move(p));
  }
  for (const auto& s : sporadic) {
    if (!box.contains(s.r, s.m)) continue;
    Pair p{s.r, s.m, static_cast<std::uint8_t>(bit(PairFlag::a3_2) | bit(PairFlag::sporadic))};
    if (s.dagger) p.set(PairFlag::dagger);
    ps.push_back(std::move(p));
  }
  out.insert_all(std::move(ps));
  return out;
}

}  // namespace

PairSet enum_gt_a32_literal(const Integer& ksq, const SearchBox& box) {
  const LiteralRow row = gt_a32_literal_row(ksq);
  return gt_a32_from_row(ksq, row.sporadic, row.standard_from, box);
}

PairSet enum_gt_a32_closed(const Integer& ksq, const SearchBox& box) {
  LiteralRow row = gt_a32_literal_row(ksq);
  std::vector<LiteralSporadic> sp = row.sporadic;
  std::vector<std::string> notes;
  for (const auto& e : gt_a32_errata(ksq)) {
    if (e.printed)
      std::erase_if(sp, [&](const LiteralSporadic& s) {
        return s.r == e.printed->r && s.m == e.printed->m;
      });
    if (e.corrected)
      sp.push_back({e.corrected->r, e.corrected->m, e.corrected->has(PairFlag::dagger)});
    std::ostringstream os;
    os << "erratum applied: " << (e.printed ? format_pair(*e.printed) : std::string("(none)"))
       << " -> " << (e.corrected ? format_pair(*e.corrected) : std::string("(none)")) << "; "
       << e.reason;
    notes.push_back(os.str());
  }
  PairSet out = gt_a32_from_row(ksq, sp, row.standard_from, box);
  for (auto& n : notes) out.add_diagnostic(std::move(n));
  return out;
}

PairSet enum_kod0_a32_closed(const Integer& hsq, const SearchBox& box, bool trivial_canonical) {
  check_box(box);
  if (hsq < 4 || hsq % 2 != 0) throw ModuliError(Errc::invalid_family, "H^2 even and >= 4");
  const Integer h = hsq / 2;
  const LiteralRow row = kod0_a32_literal_row(h);
  const HyperellipticRule rule = rule_for(1 + h, trivial_canonical);
  std::vector<Pair> ps;
  const PairSet standard = t_set(h, row.standard_from, box);
  for (auto p : standard.pairs()) {
    if (apply_hyperelliptic(p, p.m * hsq, rule)) ps.push_back(std::move(p));
  }
  for (const auto& s : row.sporadic) {
    if (!box.contains(s.r, s.m)) continue;
    Pair p{s.r, s.m, static_cast<std::uint8_t>(bit(PairFlag::a3_2) | bit(PairFlag::sporadic))};
    if (s.dagger && !trivial_canonical) p.set(PairFlag::dagger);
    ps.push_back(std::move(p));
  }
  PairSet out(box);
  out.insert_all(std::move(ps));
  return out;
}

// ---- raw window scans ------------------------------------------------------

namespace {

template <class Cell>
PairSet raw_scan(const SearchBox& box, const Integer& m_min, Execution exec, Cell&& cell) {
  check_box(box);
  PairSet out(box);
  const Integer m_lo = std::max(m_min, Integer(1));
  if (box.m_max < m_lo || box.r_max < 2) return out;
  const Integer rows = box.m_max - m_lo + 1;
  if (rows * (box.r_max - 1) > kMaxRawCells)
    throw ModuliError(Errc::out_of_range, "search box too large for a raw scan");

  const long n_rows = rows.convert_to<long>();
  unsigned n_threads = 1;
  if (exec == Execution::parallel)
    n_threads = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 8u);
  n_threads = static_cast<unsigned>(std::min<long>(n_threads, n_rows));

  // Each worker owns a contiguous band of m values; bands are concatenated in
  // order, so the merged result does not depend on the thread count.
  std::vector<std::vector<Pair>> bands(n_threads);
  auto work = [&](unsigned t) {
    const long lo = n_rows * t / n_threads;
    const long hi = n_rows * (t + 1) / n_threads;
    for (long i = lo; i < hi; ++i) {
      const Integer m = m_lo + i;
      for (Integer r = 2; r <= box.r_max; ++r) {
        Pair p{r, m, 0};
        if (cell(p)) bands[t].push_back(std::move(p));
      }
    }
  };
  if (n_threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Pair> all;
  for (auto& b : bands) std::move(b.begin(), b.end(), std::back_inserter(all));
  out.insert_all(std::move(all));
  return out;
}

}  // namespace

PairSet enum_a32_raw(const Integer& g, const Integer& dsq, const SearchBox& box,
                     HyperellipticRule rule, const Integer& m_min, Execution exec) {
  if (g < 2) throw ModuliError(Errc::out_of_range, "raw enumeration needs g >= 2");
  return raw_scan(box, m_min, exec, [&](Pair& p) {
    const Integer d = p.m * dsq;
    const A3Result a3 = check_a3(d, g, p.r);
    if (a3.branch != A3Branch::a3_2) return false;
    p.set(PairFlag::a3_2);
    return apply_hyperelliptic(p, d, rule);
  });
}

PairSet enum_a31_raw(const Integer& g, const Integer& dsq, const SearchBox& box,
                     const Integer& m_min, Execution exec) {
  if (g < 2) throw ModuliError(Errc::out_of_range, "raw enumeration needs g >= 2");
  return raw_scan(box, m_min, exec, [&](Pair& p) {
    if (check_a3(p.m * dsq, g, p.r).branch != A3Branch::a3_1) return false;
    p.set(PairFlag::a3_1);
    return true;
  });
}

// ---- cross-check -----------------------------------------------------------

CrossCheckReport cross_check(const PairSet& closed, const PairSet& raw) {
  // sporadic/standard only exist on the closed side, so compare the rest.
  constexpr auto comparable = static_cast<std::uint8_t>(bit(PairFlag::dagger) |
                                                        bit(PairFlag::a3_1) | bit(PairFlag::a3_2));
  CrossCheckReport rep;
  for (const auto& p : closed.pairs()) {
    const Pair* q = raw.find(p.r, p.m);
    if (!q) {
      rep.differences.push_back({p, PairDiff::Side::closed_only,
                                 format_pair(p, false) +
                                     ": listed by the closed form but outside the degree window"});
    } else if ((p.flags & comparable) != (q->flags & comparable)) {
      std::ostringstream os;
      os << format_pair(p, false) << ": flags differ: closed {" << flags_string(p) << "} vs raw {" << flags_string(*q) << "}";
      rep.differences.push_back({p, PairDiff::Side::flags_differ, os.str()});
    }
  }
  for (const auto& q : raw.pairs()) {
    if (!closed.contains(q.r, q.m))
      rep.differences.push_back({q, PairDiff::Side::raw_only,
                                 format_pair(q, false) +
                                     ": satisfies the degree window but missing from the closed form"});
  }
  std::stable_sort(rep.differences.begin(), rep.differences.end(),
                   [](const PairDiff& a, const PairDiff& b) { return pair_less(a.pair, b.pair); });
  return rep;
}

// ---- dispatch --------------------------------------------------------------

Branch closed_branches(const SurfaceModel& model) {
  if (std::holds_alternative<GeneralTypeCanonical>(model.family) ||
      std::holds_alternative<KodairaZero>(model.family))
    return Branch::both;
  return Branch::a3_1;
}

PairSet enumerate_closed(const SurfaceModel& model, const SearchBox& box) {
  PairSet out = std::visit(
      [&](const auto& f) -> PairSet {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, GeneralTypeCanonical>) {
          PairSet s = enum_gt_a31(f.ksq, box);
          s.merge(enum_gt_a32_closed(f.ksq, box));
          return s;
        } else if constexpr (std::is_same_v<F, GeneralTypeBicanonical>) {
          return enum_gt_bicanonical_a31(f.ksq, box);
        } else if constexpr (std::is_same_v<F, KodairaZero>) {
          PairSet s = enum_kod0_a31(f.hsq, box);
          s.merge(enum_kod0_a32_closed(f.hsq, box, f.trivial_canonical));
          return s;
        } else if constexpr (std::is_same_v<F, DelPezzo>) {
          return enum_delpezzo(f.degree, box);
        } else if constexpr (std::is_same_v<F, EllipticProduct>) {
          return enum_elliptic_product(f.fiber_genus, box);
        } else {
          return enum_isogenous(f.fiber_genus, f.group_order, box);
        }
      },
      model.family);
  out.clip(box);
  return out;
}

PairSet enumerate_raw(const SurfaceModel& model, const SearchBox& box, Execution exec) {
  const Integer g = curve_genus(model);
  const Integer dsq = restricted_degree(model, 1);
  const Integer m_min = a2_threshold(model);
  PairSet out = enum_a31_raw(g, dsq, box, m_min, exec);
  if (closed_branches(model) == Branch::both)
    out.merge(enum_a32_raw(g, dsq, box, hyperelliptic_rule(model, g), m_min, exec));
  return out;
}

}  // namespace moduli
