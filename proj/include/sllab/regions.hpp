#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sllab/fraction.hpp"

namespace sllab {

// Predicted-decay tables for the deformation error on the transition annulus
// Q and the inner region P.  The (c1,c2) quadrant {0 < c2 < c1} splits into
// 13 regions (for the L^{6/5} and L^1 rates) and a refinement into 26 regions
// (for the L^6 rate of the differential).  All exponents are affine in
// (c1, c2) with rational coefficients, so region-boundary agreement can be
// checked in exact arithmetic.

enum class BoundKind { EqualityOrder, UpperBound };

struct Summand {
  AffineExp exp;
  Frac logPower{0};  // value carries an extra |log t|^logPower factor
};

struct BoundRow {
  std::vector<Summand> summands;
  BoundKind kind = BoundKind::UpperBound;
};

struct DominantExponent {
  Frac exponent{0};
  Frac logPower{0};
  BoundKind kind = BoundKind::UpperBound;
};

// Dominant behaviour as t -> 0+: the smallest exponent decays slowest.  On a
// tie the larger log power wins (it is the larger term).
inline DominantExponent dominantExponent(const BoundRow& row, const Frac& c1, const Frac& c2) {
  if (row.summands.empty()) throw std::invalid_argument("dominantExponent: empty row");
  DominantExponent out;
  out.kind = row.kind;
  bool first = true;
  for (const Summand& s : row.summands) {
    Frac e = s.exp.at(c1, c2);
    if (first || e < out.exponent || (e == out.exponent && out.logPower < s.logPower)) {
      out.exponent = e;
      out.logPower = s.logPower;
      first = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splitting exponents and region classifiers
// ---------------------------------------------------------------------------

inline Frac fracQ(int m) { return Frac(m - 1, m); }  // 1 - 1/m

// E1 = c1, E2 = c2, E3 = 2 c2 m/(m-1), E4 = 1 - 1/m - c2, E5 = 1.
inline AffineExp exponentE(int i, int m) {
  switch (i) {
    case 1: return {Frac(0), Frac(1), Frac(0)};
    case 2: return {Frac(0), Frac(0), Frac(1)};
    case 3: return {Frac(0), Frac(0), Frac(2 * m, m - 1)};
    case 4: return {fracQ(m), Frac(0), Frac(-1)};
    case 5: return {Frac(1), Frac(0), Frac(0)};
    default: throw std::invalid_argument("exponentE: index out of range");
  }
}

// E3' = 3 c2 m/(2m-1), used only by the 26-region refinement.
inline AffineExp exponentE3prime(int m) { return {Frac(0), Frac(0), Frac(3 * m, 2 * m - 1)}; }

struct RegionSpec {
  int id = 0;                      // major index (1..13)
  int sub = 0;                     // refinement index (0 = coarse table)
  std::vector<AffineExp> nonneg;   // region = { all constraints >= 0 }
};

inline std::string regionName(const RegionSpec& r) {
  std::string s = "(" + std::to_string(r.id) + ")";
  if (r.sub > 0) s += "_" + std::to_string(r.sub);
  return s;
}

namespace detail {

// Constraint helpers: each returns "lhs >= 0" as an affine form in (c1, c2).
inline AffineExp c2AtLeast(const Frac& v) { return {-v, Frac(0), Frac(1)}; }
inline AffineExp c2AtMost(const Frac& v) { return {v, Frac(0), Frac(-1)}; }
inline AffineExp c1AtLeast(const Frac& v) { return {-v, Frac(1), Frac(0)}; }
inline AffineExp c1AtMost(const Frac& v) { return {v, Frac(-1), Frac(0)}; }
inline AffineExp c2AtLeastSlope(const Frac& s) { return {Frac(0), -s, Frac(1)}; }   // c2 >= s*c1
inline AffineExp c2AtMostSlope(const Frac& s) { return {Frac(0), s, Frac(-1)}; }    // c2 <= s*c1
inline AffineExp c2AtLeastQminusC1(int m) { return {-fracQ(m), Frac(1), Frac(1)}; } // c2 >= q-c1
inline AffineExp c2AtMostQminusC1(int m) { return {fracQ(m), Frac(-1), Frac(-1)}; } // c2 <= q-c1

}  // namespace detail

// The 13 regions of the coarse decomposition, in table order.  All specs are
// read inside {0 < c2 < c1}; first match wins.
inline std::vector<RegionSpec> regions13(int m) {
  using namespace detail;
  Frac q = fracQ(m), hq = q / Frac(2);
  Frac A((m - 1) * (m - 1), m * (3 * m - 1));  // where E3 meets E4
  std::vector<RegionSpec> out;
  out.push_back({1, 0, {c2AtLeast(Frac(1)), c2AtLeastSlope(hq)}});
  out.push_back({2, 0, {c2AtLeast(Frac(1)), c2AtMostSlope(hq)}});
  out.push_back({3, 0, {c2AtLeast(hq), c2AtMost(Frac(1)), c2AtMostSlope(hq)}});
  out.push_back({4, 0, {c1AtLeast(Frac(1)), c2AtLeast(A), c2AtMost(hq)}});
  out.push_back({5, 0, {c1AtLeast(Frac(1)), c2AtMost(A)}});
  out.push_back({6, 0, {c1AtLeast(Frac(1)), c2AtLeastSlope(hq), c2AtMost(Frac(1))}});
  out.push_back({7, 0, {c1AtMost(Frac(1)), c2AtLeast(hq)}});
  out.push_back({8, 0, {c2AtLeastQminusC1(m), c2AtMost(hq), c2AtLeastSlope(hq)}});
  out.push_back({9, 0, {c1AtMost(Frac(1)), c2AtLeast(A), c2AtMostSlope(hq)}});
  out.push_back({10, 0, {c1AtMost(Frac(1)), c2AtMost(A), c2AtLeastQminusC1(m)}});
  out.push_back({11, 0, {c2AtLeast(A), c2AtMostQminusC1(m)}});
  out.push_back({12, 0, {c2AtLeastSlope(hq), c2AtMost(A)}});
  out.push_back({13, 0, {c2AtMostSlope(hq), c2AtMostQminusC1(m)}});
  return out;
}

// The refinement into 26 regions used by the L^6 table, in table order.
inline std::vector<RegionSpec> regions26(int m) {
  using namespace detail;
  Frac q = fracQ(m), hq = q / Frac(2);
  Frac A((m - 1) * (m - 1), m * (3 * m - 1));            // E3 = E4
  Frac T1(2 * m - 1, 3 * m);                             // E3' = E5 level; 2/3(1-1/(2m))
  Frac T2((m - 1) * (2 * m - 1), m * (5 * m - 1));       // E3' = E4
  std::vector<RegionSpec> out;
  out.push_back({1, 1, {c2AtLeast(Frac(1)), c2AtLeastSlope(T1)}});
  out.push_back({1, 2, {c2AtLeast(Frac(1)), c2AtMostSlope(T1), c2AtLeastSlope(hq)}});
  out.push_back({2, 0, {c2AtLeast(Frac(1)), c2AtMostSlope(hq)}});
  out.push_back({3, 1, {c2AtLeast(T1), c2AtMost(Frac(1)), c2AtMostSlope(hq)}});
  out.push_back({3, 2, {c2AtLeast(hq), c2AtMost(T1), c2AtMostSlope(hq)}});
  out.push_back({4, 1, {c1AtLeast(Frac(1)), c2AtLeast(T2), c2AtMost(hq)}});
  out.push_back({4, 2, {c1AtLeast(Frac(1)), c2AtLeast(A), c2AtMost(T2)}});
  out.push_back({5, 0, {c1AtLeast(Frac(1)), c2AtMost(A)}});
  out.push_back({6, 1, {c1AtLeast(Frac(1)), c2AtLeastSlope(T1), c2AtMost(Frac(1))}});
  out.push_back({6, 2, {c2AtLeast(T1), c2AtMostSlope(T1), c2AtLeastSlope(hq), c2AtMost(Frac(1))}});
  out.push_back({6, 3, {c1AtLeast(Frac(1)), c2AtLeastSlope(hq), c2AtMost(T1)}});
  out.push_back({7, 1, {c1AtMost(Frac(1)), c2AtLeast(T1)}});
  out.push_back({7, 2, {c2AtLeastSlope(T1), c2AtMost(T1), c2AtLeast(hq)}});
  out.push_back({7, 3, {c1AtMost(Frac(1)), c2AtLeast(hq), c2AtMostSlope(T1)}});
  out.push_back({8, 1, {c2AtLeastQminusC1(m), c2AtMost(hq), c2AtLeastSlope(T1)}});
  out.push_back({8, 2, {c2AtLeast(T2), c2AtMostSlope(T1), c2AtLeastSlope(hq), c2AtMost(hq)}});
  out.push_back({8, 3, {c2AtLeastQminusC1(m), c2AtMost(T2), c2AtLeastSlope(hq)}});
  out.push_back({9, 1, {c1AtMost(Frac(1)), c2AtLeast(T2), c2AtMostSlope(hq)}});
  out.push_back({9, 2, {c1AtMost(Frac(1)), c2AtLeast(A), c2AtMostSlope(hq), c2AtMost(T2)}});
  out.push_back({10, 0, {c1AtMost(Frac(1)), c2AtMost(A), c2AtLeastQminusC1(m)}});
  out.push_back({11, 1, {c2AtLeast(T2), c2AtMostQminusC1(m)}});
  out.push_back({11, 2, {c2AtLeast(A), c2AtLeastSlope(T1), c2AtMost(T2)}});
  out.push_back({11, 3, {c2AtLeast(A), c2AtMost(T1), c2AtMostQminusC1(m)}});
  out.push_back({12, 1, {c2AtLeastSlope(T1), c2AtMost(A)}});
  out.push_back({12, 2, {c2AtLeastSlope(hq), c2AtMostSlope(T1), c2AtMost(A)}});
  out.push_back({13, 0, {c2AtMostSlope(hq), c2AtMostQminusC1(m)}});
  return out;
}

// First-match classification against a region list; exact rational tests.
inline int classifyIndex(const std::vector<RegionSpec>& regions, const Frac& c1, const Frac& c2) {
  if (!(Frac(0) < c2 && c2 < c1)) throw std::invalid_argument("classify: need 0 < c2 < c1");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    bool ok = true;
    for (const AffineExp& con : regions[i].nonneg)
      if (con.at(c1, c2) < Frac(0)) {
        ok = false;
        break;
      }
    if (ok) return int(i);
  }
  throw std::runtime_error("classify: no region matched (table transcription bug)");
}

inline RegionSpec classifyRegion13(const Frac& c1, const Frac& c2, int m) {
  auto regs = regions13(m);
  return regs[std::size_t(classifyIndex(regs, c1, c2))];
}

inline RegionSpec classifyRegion26(const Frac& c1, const Frac& c2, int m) {
  auto regs = regions26(m);
  return regs[std::size_t(classifyIndex(regs, c1, c2))];
}

// ---------------------------------------------------------------------------
// Q-region bound tables
// ---------------------------------------------------------------------------

namespace detail {

inline Summand s(const Frac& a0, const Frac& a1, const Frac& a2, const Frac& lg = Frac(0)) {
  return {AffineExp{a0, a1, a2}, lg};
}

}  // namespace detail

// ||eps||_{L^{6/5}} on Q: 13 rows; regions (4), (5), (9), (10) branch on m
// with a |log t|^{5/6} factor at the threshold m.
inline BoundRow rowEpsL65Q(int region, int m) {
  using detail::s;
  Frac q = fracQ(m);
  const Summand base = s(Frac(8, 3) * q, Frac(0), Frac(-11, 3));           // t^{8/3 q - 11/3 c2}
  const Summand first2 = s(Frac(8, 3) * q, -Frac(11, 6) * q + Frac(5, 6), Frac(-5, 6));
  const Summand tail = s(q, Frac(0), Frac(-1, 3));                          // t^{q - c2/3}
  BoundRow row;
  switch (region) {
    case 1: row.summands = {base}; break;
    case 2: row.summands = {first2, base}; break;
    case 3:
      row.summands = {first2, s(Frac(7, 2) - Frac(8, 3 * m), Frac(0), Frac(-9, 2)), base};
      break;
    case 4: {
      row.summands = {first2};
      if (m <= 5)
        row.summands.push_back(
            s(Frac(11, 6) * q, Frac(0), Frac(5, 6) - Frac(2 * m) + Frac(5, 3 * (m - 1))));
      else if (m == 6)
        row.summands.push_back(s(Frac(11, 6) * q, Frac(0), -Frac(11, 6) * Frac(5, 6), Frac(5, 6)));
      else
        row.summands.push_back(s(Frac(5, 6) * (Frac(2) - Frac(1, m)), Frac(0), Frac(-5, 6)));
      row.summands.push_back(base);
      row.summands.push_back(tail);
      break;
    }
    case 5: {
      row.summands = {s(Frac(8, 3) * q, Frac(11, 6 * m) - Frac(1), Frac(-5, 6)),
                      s(Frac(5, 3) - Frac(5, 6 * m), Frac(0), Frac(-5, 6))};
      if (m <= 10)
        row.summands.push_back(s(Frac(11, 6) * q, Frac(0), Frac(11 - m, 3 * (m - 1))));
      else if (m == 11)
        row.summands.push_back(s(Frac(5, 3), Frac(0), Frac(0), Frac(5, 6)));
      else
        row.summands.push_back(s(Frac(1, 6) * q * (Frac(10) + Frac(11, m)), Frac(0),
                                 Frac(1, 6) * (Frac(1) - Frac(11, m))));
      row.summands.push_back(tail);
      break;
    }
    case 6:
      row.summands = {s(Frac(7, 2) - Frac(8, 3 * m), Frac(0), Frac(-9, 2)), base};
      break;
    case 7: row.summands = {base}; break;
    case 8: row.summands = {base, tail}; break;
    case 9: {
      if (m <= 5)
        row.summands = {s(Frac(11, 6) * q, Frac(0), Frac(-17, 6) + Frac(5 * m, 3 * (m - 1)))};
      else if (m == 6)
        row.summands = {s(Frac(11, 6) * q, Frac(0), Frac(-5, 6), Frac(5, 6))};
      else
        row.summands = {s(Frac(11, 6) * q, Frac(1, 6) - Frac(1, m), Frac(-5, 6))};
      row.summands.push_back(base);
      row.summands.push_back(tail);
      break;
    }
    case 10: {
      if (m <= 5)
        row.summands = {s(Frac(8, 3) * q - q * q, Frac(0), -(Frac(2, 3) + Frac(1, m)))};
      else if (m == 6)
        row.summands = {s(Frac(55, 36), Frac(0), Frac(-5, 6), Frac(5, 6))};
      else
        row.summands = {s(Frac(11, 6) * q, Frac(1, m) - Frac(1, 6), Frac(-5, 6))};
      row.summands.push_back(
          s(q, Frac(0), (Frac(1, m) + Frac(2, 3)) * Frac(2 * m, m - 1)));
      row.summands.push_back(tail);
      break;
    }
    case 11:
    case 12: row.summands = {tail}; break;
    case 13:
      row.summands = {s(q, Frac(0), Frac(4, 3) + Frac(10, 3 * (m - 1))), tail};
      break;
    default: throw std::invalid_argument("rowEpsL65Q: region out of range");
  }
  return row;
}

// ||eps||_{L^1} on Q: 13 rows; the leading summand of regions (2)-(5)
// degenerates to a |log t| factor at m = 2.
inline BoundRow rowEpsL1Q(int region, int m) {
  using detail::s;
  Frac q = fracQ(m);
  const Summand base = s(Frac(3) * q, Frac(0), Frac(-4));     // t^{3q - 4 c2}
  const Summand tail = s(q, Frac(0), Frac(0));                // t^{q}
  const Summand first = (m == 2) ? s(Frac(3, 2), Frac(0), Frac(-1), Frac(1))
                                 : s(Frac(3) * q, Frac(2, m) - Frac(1), Frac(-1));
  BoundRow row;
  switch (region) {
    case 1: row.summands = {base}; break;
    case 2: row.summands = {first, base}; break;
    case 3:
      row.summands = {first, s(Frac(4) - Frac(3, m), Frac(0), Frac(-5)), base};
      break;
    case 4:
      row.summands = {first, s(Frac(2) * q, Frac(0), Frac(-1) + Frac(2, m - 1)), base, tail};
      break;
    case 5: {
      row.summands = {first};
      if (m >= 3) row.summands.push_back(s(Frac(2) - Frac(1, m), Frac(0), Frac(-1)));
      row.summands.push_back(s(Frac(2) * q, Frac(0), Frac(4, m - 1)));
      row.summands.push_back(tail);
      break;
    }
    case 6:
      row.summands = {s(Frac(4) - Frac(3, m), Frac(0), Frac(-5)), base};
      break;
    case 7: row.summands = {base}; break;
    case 8: row.summands = {base, tail}; break;
    case 9:
      row.summands = {s(Frac(2) * q, Frac(0), Frac(-1) - Frac(2, m - 1)), base, tail};
      break;
    case 10:
      row.summands = {s(Frac(2) - (Frac(1) + Frac(1, m)) / Frac(m), Frac(0),
                        -(Frac(1) + Frac(1, m))),
                      s(q, Frac(0), Frac(2 * (m + 1), m - 1)), tail};
      break;
    case 11:
    case 12: row.summands = {tail}; break;
    case 13: row.summands = {s(q, Frac(0), Frac(2 * (m + 1), m - 1)), tail}; break;
    default: throw std::invalid_argument("rowEpsL1Q: region out of range");
  }
  return row;
}

// ||d eps||_{L^6} on Q over the 26 refined regions, addressed by the flat
// index into regions26(m).  Two printed entries are not affine in (c1,c2)
// as typeset ((3)_1's second summand lacks its c2 factor, and (10)'s third
// has c2 in the denominator of the constant); `judgedCorrections` swaps in
// the unique affine reading consistent with the neighbouring rows, and the
// region-boundary continuity test exercises both settings.
inline BoundRow rowDepsL6Q(const RegionSpec& r, int m, bool judgedCorrections = true) {
  using detail::s;
  Frac q = fracQ(m);
  const Summand A = s(Frac(4, 3) * q, Frac(0), Frac(-10, 3));
  const Summand B = s(Frac(4, 3) * q, Frac(1, m) - Frac(11, 6), Frac(-1, 2));
  const Summand C1 = s(Frac(4, 3) * q, Frac(7, 6 * m) - Frac(2), Frac(-1, 6));
  const Summand C2 = s(Frac(4, 3) * q, Frac(1, m) - Frac(11, 6), Frac(-1, 6));
  const Summand D = s(Frac(4, 3) * q, Frac(0), -(Frac(25, 6) + Frac(5, 3 * (m - 1))));
  const Summand Dverbatim = s(-(Frac(25, 6) + Frac(5, 3 * (m - 1))), Frac(0), Frac(0));
  const Summand E = s(Frac(3, 2) - Frac(4, 3 * m), Frac(0), Frac(-7, 2));
  const Summand F = s(Frac(-1, 2) - Frac(1, 3 * m), Frac(0), Frac(-1, 2));
  const Summand G = s(Frac(-2, 3) - Frac(1, 6 * m), Frac(0), Frac(-1, 6));
  const Summand H = s(Frac(7, 6) * q, Frac(0), -(Frac(23, 6) + Frac(5, 3 * (m - 1))));
  const Summand I = s(q, Frac(0), Frac(-8, 3));
  const Summand Jminus = s(q * (Frac(1, m) - Frac(2, 3)), Frac(0), Frac(5, 3) - Frac(1, m));
  const Summand Jplus = s(q * (Frac(1, m) - Frac(2, 3)), Frac(0), Frac(1, m) - Frac(5, 3));
  const Summand K =
      s(q * (Frac(7, 6 * m) - Frac(2, 3)), Frac(0), Frac(11, 6) - Frac(7, 6 * m));
  const Summand L = s(q - Frac(2 * (5 * m - 3), 3 * (m - 1)), Frac(0), Frac(0));
  const Summand Lc2 = s(q, Frac(0), Frac(-2 * (5 * m - 3), 3 * (m - 1)));
  const Summand M = s(Frac(7, 6) * q, Frac(0), Frac(9 - 35 * m, 6 * (2 * m - 1)));
  const Summand N = s(Frac(4, 3) * q, Frac(0), Frac(-7, 2));
  const Summand O = s(Frac(4, 3) * q, Frac(0), Frac(-23, 6));
  const Summand P = s(Frac(7, 6) * q, Frac(1, m) - Frac(11, 6), Frac(-1, 6));
  const Summand Qs = s(q, Frac(1, m) - Frac(5, 3), Frac(0));

  BoundRow row;
  auto key = r.id * 10 + r.sub;
  switch (key) {
    case 11: row.summands = {A}; break;                               // (1)_1
    case 12: row.summands = {B, A}; break;                            // (1)_2
    case 20: row.summands = {C1, D, A}; break;                        // (2)
    case 31: row.summands = {C1, judgedCorrections ? D : Dverbatim, E, A}; break;  // (3)_1
    case 32: row.summands = {C2, D, F, O}; break;                     // (3)_2
    case 41: row.summands = {C1, G, H, A, I}; break;                  // (4)_1
    case 42: row.summands = {C1, G, H, Jminus, I}; break;             // (4)_2
    case 50: row.summands = {C1, G, K, L, I}; break;                  // (5)
    case 61: row.summands = {E, A}; break;                            // (6)_1
    case 62: row.summands = {B, E, A}; break;                         // (6)_2
    case 63: row.summands = {B, F, A}; break;                         // (6)_3
    case 71: row.summands = {A}; break;                               // (7)_1
    case 72: row.summands = {A}; break;                               // (7)_2
    case 73: row.summands = {B, A}; break;                            // (7)_3
    case 81: row.summands = {N, I}; break;                            // (8)_1
    case 82: row.summands = {M, A, I}; break;                         // (8)_2
    case 83: row.summands = {M, Jplus, I}; break;                     // (8)_3
    case 91: row.summands = {P, H, A, I}; break;                      // (9)_1
    case 92: row.summands = {P, H, Jplus, I}; break;                  // (9)_2
    case 100: row.summands = {P, Jplus, judgedCorrections ? Lc2 : L, I}; break;  // (10)
    case 111: row.summands = {I}; break;                              // (11)_1
    case 112: row.summands = {I}; break;                              // (11)_2
    case 113: row.summands = {Qs, I}; break;                          // (11)_3
    case 121: row.summands = {I}; break;                              // (12)_1
    case 122: row.summands = {Qs, I}; break;                          // (12)_2
    case 130: row.summands = {Qs, L, I}; break;                       // (13)
    default: throw std::invalid_argument("rowDepsL6Q: unknown region");
  }
  return row;
}

// ---------------------------------------------------------------------------
// P-region rates (equality order) and sup bounds
// ---------------------------------------------------------------------------

// The P-region integrals evaluate to a single power of t whose exponent
// switches branch at c1 = 1 (both branches agree there).
inline BoundRow rowEpsL65P(int m, const Frac& c1) {
  Frac e = (c1 <= Frac(1)) ? Frac(8, 3) * c1 : Frac(8, 3) * (Frac(1) + (c1 - Frac(1)) / Frac(m));
  return {{{AffineExp{e, Frac(0), Frac(0)}, Frac(0)}}, BoundKind::EqualityOrder};
}

inline BoundRow rowEpsL1P(int m, const Frac& c1) {
  Frac e = (c1 <= Frac(1)) ? Frac(3) * c1 : Frac(3) * (Frac(1) + (c1 - Frac(1)) / Frac(m));
  return {{{AffineExp{e, Frac(0), Frac(0)}, Frac(0)}}, BoundKind::EqualityOrder};
}

inline BoundRow rowDepsL6P(int m, const Frac& c1) {
  Frac e = (c1 <= Frac(1)) ? c1 * (Frac(4, 3) - Frac(1, m)) + Frac(1, m) - Frac(1)
                           : Frac(1, 3) * (Frac(1) + (c1 - Frac(1)) / Frac(m));
  return {{{AffineExp{e, Frac(0), Frac(0)}, Frac(0)}}, BoundKind::EqualityOrder};
}

// Pointwise sup bounds (upper bounds): two competing powers on P, two on Q.
inline BoundRow rowEpsC0P(int m) {
  using detail::s;
  return {{s(Frac(0), Frac(1), Frac(0)),                                    // t^{c1}
           s(fracQ(m), Frac(1, m), Frac(0))},                               // t^{q + c1/m}
          BoundKind::UpperBound};
}

inline BoundRow rowEpsC0Q(int m) {
  using detail::s;
  Frac q = fracQ(m);
  return {{s(q, Frac(0), Frac(-2)),                                         // t^{q - 2 c2}
           s(q, -q, Frac(0))},                                              // t^{q(1 - c1)}
          BoundKind::UpperBound};
}

inline BoundRow rowDepsC0P(int m) {
  using detail::s;
  Frac q = fracQ(m);
  return {{s(Frac(0), Frac(0), Frac(0)),                                    // O(1)
           s(-q, q, Frac(0))},                                              // t^{q(c1 - 1)}
          BoundKind::UpperBound};
}

inline BoundRow rowDepsC0Q(int m) {
  using detail::s;
  Frac q = fracQ(m);
  return {{s(q, Frac(0), Frac(-3)),                                         // t^{q - 3 c2}
           s(q, -q, Frac(-1)),                                              // t^{q(1-c1) - c2}
           s(q, Frac(1, m) - Frac(2), Frac(0))},                            // t^{q - (2 - 1/m) c1}
          BoundKind::UpperBound};
}

// ---------------------------------------------------------------------------
// Quantity dispatch
// ---------------------------------------------------------------------------

inline DominantExponent predictedExponent(const std::string& quantity, int m, const Frac& c1,
                                          const Frac& c2, bool judgedCorrections = true) {
  BoundRow row;
  if (quantity == "epsL65_P") row = rowEpsL65P(m, c1);
  else if (quantity == "epsL1_P") row = rowEpsL1P(m, c1);
  else if (quantity == "depsL6_P") row = rowDepsL6P(m, c1);
  else if (quantity == "epsC0_P") row = rowEpsC0P(m);
  else if (quantity == "epsC0_Q") row = rowEpsC0Q(m);
  else if (quantity == "depsC0_P") row = rowDepsC0P(m);
  else if (quantity == "depsC0_Q") row = rowDepsC0Q(m);
  else if (quantity == "epsL65_Q") row = rowEpsL65Q(classifyRegion13(c1, c2, m).id, m);
  else if (quantity == "epsL1_Q") row = rowEpsL1Q(classifyRegion13(c1, c2, m).id, m);
  else if (quantity == "depsL6_Q")
    row = rowDepsL6Q(classifyRegion26(c1, c2, m), m, judgedCorrections);
  else throw std::invalid_argument("predictedExponent: unknown quantity " + quantity);
  return dominantExponent(row, c1, c2);
}

// True when this m falls into an exceptional branch of one of the tables
// (reported as a caveat, not resolved here).
inline bool exceptionalM(int m) { return m == 2 || m == 6 || m == 11; }

}  // namespace sllab
