#pragma once

#include "moduli/admissibility.hpp"
#include "moduli/integer.hpp"
#include "moduli/surface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace moduli {

enum class PairFlag : std::uint8_t {
  dagger = 1 << 0,
  sporadic = 1 << 1,
  standard = 1 << 2,
  a3_1 = 1 << 3,
  a3_2 = 1 << 4,
};

struct Pair {
  Integer r;
  Integer m;
  std::uint8_t flags = 0;

  bool has(PairFlag f) const { return (flags & static_cast<std::uint8_t>(f)) != 0; }
  void set(PairFlag f) { flags |= static_cast<std::uint8_t>(f); }

  friend bool operator==(const Pair&, const Pair&) = default;
};

std::string flags_string(const Pair& p);

/// "(r,m)" with a trailing dagger glyph when flagged.
std::string format_pair(const Pair& p, bool glyph = true);

struct SearchBox {
  Integer r_max = 64;
  Integer m_max = 64;

  bool contains(const Integer& r, const Integer& m) const { return r <= r_max && m <= m_max; }
  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

inline constexpr int kDefaultAMax = 16;

/// Sorted by (r, m), no duplicates. Inserting an existing pair merges flags.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(SearchBox box) : box_(box) {}

  void insert(Pair p);
  void insert_all(std::vector<Pair> ps);
  void merge(const PairSet& other);
  /// Drops pairs outside the box and records it as the set's bounds.
  void clip(const SearchBox& box);
  bool contains(const Integer& r, const Integer& m) const;
  const Pair* find(const Integer& r, const Integer& m) const;

  const std::vector<Pair>& pairs() const& { return pairs_; }
  // Lets `for (auto& p : make_set().pairs())` outlive the temporary set.
  std::vector<Pair> pairs() && { return std::move(pairs_); }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const std::optional<SearchBox>& box() const { return box_; }
  void set_box(const SearchBox& box) { box_ = box; }

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  void add_diagnostic(std::string d) { diagnostics_.push_back(std::move(d)); }

  friend bool operator==(const PairSet& a, const PairSet& b) { return a.pairs_ == b.pairs_; }

 private:
  std::vector<Pair> pairs_;
  std::optional<SearchBox> box_;
  std::vector<std::string> diagnostics_;
};

enum class Execution { sequential, parallel };

// Closed-form A3(1) enumerators. Each emitted pair is checked against the
// family's identity d = r g + 1 before it is returned.

PairSet enum_gt_a31(const Integer& ksq, const SearchBox& box);
/// H = 2K_S. Scans a = 1..a_max and keeps the a for which m is integral.
PairSet enum_gt_bicanonical_a31(const Integer& ksq, int a_max);
PairSet enum_gt_bicanonical_a31(const Integer& ksq, const SearchBox& box);
/// Empty with a diagnostic unless 4 | H^2.
PairSet enum_kod0_a31(const Integer& hsq, const SearchBox& box);
PairSet enum_delpezzo(const Integer& e, int a_max);
PairSet enum_delpezzo(const Integer& e, const SearchBox& box);
PairSet enum_elliptic_product(const Integer& g, int a_max);
PairSet enum_elliptic_product(const Integer& g, const SearchBox& box);
PairSet enum_isogenous(const Integer& g, const Integer& group_order, int a_max);
PairSet enum_isogenous(const Integer& g, const Integer& group_order, const SearchBox& box);

/// Smallest a admitted by the elliptic-product parametrization (m >= 3, r >= 2).
Integer elliptic_a_min(const Integer& g);

// A3(2) tables.

/// m(r) = 1 + (r+2)/K^2: one pair (r, ceil m(r)) per r >= r_bar, or both
/// m(r) and m(r)+1 when m(r) is an integer.
PairSet s_set(const Integer& ksq, const Integer& r_bar, const SearchBox& box);

struct Interval {
  Integer lo;
  Integer hi;
};

/// [a_m, b_m] with a_m = h(2m-2) - 2, b_m = a_m + h, h = H^2/2.
Interval t_interval(const Integer& h, const Integer& m);
PairSet t_set(const Integer& h, const Integer& m_bar, const SearchBox& box);

struct LiteralSporadic {
  Integer r;
  Integer m;
  bool dagger;
};

/// One stored row of a sporadic/standard table, exactly as printed.
struct LiteralRow {
  std::vector<LiteralSporadic> sporadic;
  /// Start of the standard set: r_bar for S, m_bar for T.
  Integer standard_from;
  std::string text;
};

LiteralRow gt_a32_literal_row(const Integer& ksq);
/// Rows for h = H^2/2. The dagger on (2h, 2) only applies when K_S is not
/// trivial.
LiteralRow kod0_a32_literal_row(const Integer& h);

/// Known misprints in the stored general-type row for K^2 >= 5. `printed` is
/// absent when the row omits a pair, `corrected` when a printed pair has to go.
struct Erratum {
  std::optional<Pair> printed;
  std::optional<Pair> corrected;
  std::string reason;
};
std::vector<Erratum> gt_a32_errata(const Integer& ksq);

/// Printed row plus standard set.
PairSet enum_gt_a32_literal(const Integer& ksq, const SearchBox& box);
/// Printed row with the errata applied, plus standard set.
PairSet enum_gt_a32_closed(const Integer& ksq, const SearchBox& box);
PairSet enum_kod0_a32_closed(const Integer& hsq, const SearchBox& box, bool trivial_canonical);

// Raw enumerators straight from the degree window. d(m) = m * dsq.

PairSet enum_a32_raw(const Integer& g, const Integer& dsq, const SearchBox& box,
                     HyperellipticRule rule, const Integer& m_min = 1,
                     Execution exec = Execution::sequential);
PairSet enum_a31_raw(const Integer& g, const Integer& dsq, const SearchBox& box,
                     const Integer& m_min = 1, Execution exec = Execution::sequential);

struct PairDiff {
  Pair pair;
  enum class Side { closed_only, raw_only, flags_differ } side;
  std::string diagnosis;
};

struct CrossCheckReport {
  std::vector<PairDiff> differences;
  bool agrees() const { return differences.empty(); }
};

CrossCheckReport cross_check(const PairSet& closed, const PairSet& raw);

// Family dispatch.

enum class Branch { a3_1, a3_2, both };

/// Which A3 branches the closed-form tables cover for this family.
Branch closed_branches(const SurfaceModel& model);

PairSet enumerate_closed(const SurfaceModel& model, const SearchBox& box);
/// Raw window scan restricted to the branches enumerate_closed covers.
PairSet enumerate_raw(const SurfaceModel& model, const SearchBox& box,
                      Execution exec = Execution::parallel);

}  // namespace moduli
