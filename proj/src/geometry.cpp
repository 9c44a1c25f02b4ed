#include "noncross/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace noncross {

Pt operator+(const Pt& a, const Pt& b) { return Pt{a.x + b.x, a.y + b.y}; }
Pt operator-(const Pt& a, const Pt& b) { return Pt{a.x - b.x, a.y - b.y}; }
Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

double dist(const Pt& a, const Pt& b) {
  double dx = to_double(a.x - b.x);
  double dy = to_double(a.y - b.y);
  return std::sqrt(dx * dx + dy * dy);
}

int Eps2::sign() const {
  int s = sgn(c0);
  if (s) return s;
  s = sgn(c1);
  if (s) return s;
  return sgn(c2);
}

Eps2 orient_val(const VPt& a, const VPt& b, const VPt& c) {
  Rat ux = b.p.x - a.p.x, uy = b.p.y - a.p.y;
  Rat vx = c.p.x - a.p.x, vy = c.p.y - a.p.y;
  Rat utx = Rat(b.tx - a.tx), uty = Rat(b.ty - a.ty);
  Rat vtx = Rat(c.tx - a.tx), vty = Rat(c.ty - a.ty);
  Eps2 r;
  r.c0 = ux * vy - uy * vx;
  r.c1 = ux * vty + utx * vy - uy * vtx - uty * vx;
  r.c2 = utx * vty - uty * vtx;
  return r;
}

int orient(const VPt& a, const VPt& b, const VPt& c) { return orient_val(a, b, c).sign(); }

int orient_base(const Pt& a, const Pt& b, const Pt& c) {
  return sgn(cross(b - a, c - a));
}

bool on_segment_base(const Pt& a, const Pt& b, const Pt& q) {
  if (orient_base(a, b, q) != 0) return false;
  return dot(q - a, q - b) <= 0;
}

Tour tour_from_points(std::vector<Pt> pts, int color) {
  Tour t;
  t.color = color;
  t.vert.reserve(pts.size());
  for (auto& p : pts) t.vert.push_back(VPt{std::move(p), 0, 0});
  return t;
}

Tour lens_tour(const std::vector<Pt>& polyline, int color, int side) {
  Tour t;
  t.color = color;
  if (polyline.size() == 1) {
    // a point "cycle of length 0": two tier-distinct copies keep edges nonzero
    t.vert.push_back(VPt{polyline[0], 0, 0});
    t.vert.push_back(VPt{polyline[0], 0, static_cast<std::int64_t>(side)});
    return t;
  }
  for (const auto& p : polyline) t.vert.push_back(VPt{p, 0, 0});
  // return strand: interior points displaced perpendicular to their segment
  for (size_t i = polyline.size() - 1; i >= 1; --i) {
    const Pt& a = polyline[i - 1];
    const Pt& b = polyline[i];
    Pt mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    // integer perpendicular of the segment direction
    Rat dx = b.x - a.x, dy = b.y - a.y;
    std::int64_t px = (sgn(dy) != 0) ? -sgn(dy) : 0;
    std::int64_t py = sgn(dx);
    if (px == 0 && py == 0) py = 1;
    t.vert.push_back(VPt{mid, side * px, side * py});
    if (i >= 2) t.vert.push_back(VPt{polyline[i - 1], side * px, side * py});
  }
  // drop the duplicated closing vertex (first polyline point appears once)
  return t;
}

double curve_length(const Tour& t) {
  double len = 0;
  size_t n = t.vert.size();
  if (n < 2) return 0;
  for (size_t i = 0; i < n; ++i) len += dist(t.vert[i].p, t.at(i + 1).p);
  return len;
}

bool tour_visits(const Tour& t, const Pt& p) {
  size_t n = t.vert.size();
  if (n == 0) return false;
  if (n == 1) return t.vert[0].p == p;
  for (size_t i = 0; i < n; ++i) {
    if (on_segment_base(t.vert[i].p, t.at(i + 1).p, p)) return true;
  }
  return false;
}

namespace {

struct LineFrame {
  VPt a, b;  // anchor points, tier 0
  Pt d;      // b - a
  Rat dd;    // |d|^2

  explicit LineFrame(const Segment& s) : a{VPt{s.a, 0, 0}}, b{VPt{s.b, 0, 0}} {
    d = s.b - s.a;
    dd = dot(d, d);
    if (sgn(dd) == 0) throw std::invalid_argument("degenerate query segment");
  }

  LinePos param(const VPt& v) const {
    LinePos lp;
    lp.q = dot(v.p - a.p, d);
    lp.t = Rat(v.tx) * d.x + Rat(v.ty) * d.y;
    return lp;
  }

  Pt point_at(const Rat& q) const {
    Rat s = q / dd;
    return Pt{a.p.x + s * d.x, a.p.y + s * d.y};
  }

  int side(const VPt& v) const { return orient(a, b, v); }
};

LinePos mid_pos(const LinePos& u, const LinePos& v) {
  return LinePos{(u.q + v.q) / 2, (u.t + v.t) / 2};
}

// Collects all side-changing passages of t across the line of fr.
LineEvents passages_impl(const Tour& t, const LineFrame& fr) {
  LineEvents ev;
  size_t n = t.vert.size();
  if (n == 0) return ev;
  std::vector<int> side(n);
  bool all_zero = true;
  for (size_t i = 0; i < n; ++i) {
    side[i] = fr.side(t.vert[i]);
    if (side[i] != 0) all_zero = false;
  }
  if (all_zero) {
    ev.whole_tour_on_line = true;
    return ev;
  }
  // proper interior crossings of edges with both ends strictly off the line
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    if (side[i] * side[j] >= 0) continue;
    Eps2 o0 = orient_val(fr.a, fr.b, t.vert[i]);
    Eps2 o1 = orient_val(fr.a, fr.b, t.vert[j]);
    // orient along the edge is A(s) + B(s) eps, both linear in s, A not both 0
    Rat A0 = o0.c0, A1 = o1.c0, B0 = o0.c1, B1 = o1.c1;
    LinePos p0 = fr.param(t.vert[i]);
    LinePos p1 = fr.param(t.vert[j]);
    Rat s0, tcorr;
    if (A0 == A1) {
      // base orientation constant; sign change driven purely by eps terms
      if (A0 != 0) continue;  // no base crossing at all (impossible here)
      s0 = B0 / (B0 - B1);
      tcorr = 0;
    } else {
      s0 = A0 / (A0 - A1);
      Rat Bs = B0 + s0 * (B1 - B0);
      Rat Aslope = A1 - A0;
      tcorr = -(p1.q - p0.q) * Bs / Aslope;
    }
    Passage ps;
    ps.pos.q = p0.q + s0 * (p1.q - p0.q);
    ps.pos.t = p0.t + s0 * (p1.t - p0.t) + tcorr;
    ps.edge_before = static_cast<int>(i);
    ps.edge_after = static_cast<int>(i);
    ps.side_before = side[i];
    ps.side_after = side[j];
    ps.at_vertex = false;
    ps.lo = ps.hi = ps.pos;
    ev.crossings.push_back(ps);
  }
  // contact chains: maximal cyclic runs of on-line vertices
  for (size_t i = 0; i < n; ++i) {
    if (side[i] != 0) continue;
    size_t prev = (i + n - 1) % n;
    if (side[prev] == 0) continue;  // not the chain start
    size_t j = i;
    LinePos lo = fr.param(t.vert[i]);
    LinePos hi = lo;
    size_t last = i;
    while (side[(j + 1) % n] == 0) {
      j = (j + 1) % n;
      LinePos pj = fr.param(t.vert[j]);
      if (pj < lo) lo = pj;
      if (hi < pj) hi = pj;
      last = j;
    }
    int before = side[prev];
    int after = side[(last + 1) % n];
    if (before == after) continue;  // touch without side change
    Passage ps;
    ps.lo = lo;
    ps.hi = hi;
    ps.pos = mid_pos(lo, hi);
    ps.edge_before = static_cast<int>(prev);
    ps.edge_after = static_cast<int>(last);
    ps.side_before = before;
    ps.side_after = after;
    ps.at_vertex = true;
    ps.cut_vertex = i;
    ev.crossings.push_back(ps);
  }
  std::sort(ev.crossings.begin(), ev.crossings.end(),
            [](const Passage& x, const Passage& y) { return x.pos < y.pos; });
  return ev;
}

CrossingSet collapse_to_points(const LineFrame& fr, const std::vector<Passage>& ps, int color) {
  CrossingSet out;
  for (const auto& p : ps) {
    if (!out.empty() && out.back().pos.q == p.pos.q) {
      out.back().passes += 1;
      continue;
    }
    Crossing c;
    c.point = fr.point_at(p.pos.q);
    c.pos = p.pos;
    c.color = color;
    c.transversal = true;
    out.push_back(c);
  }
  return out;
}

}  // namespace

LineEvents line_passages(const Tour& t, const Segment& s) {
  LineFrame fr(s);
  return passages_impl(t, fr);
}

CrossingSet crossings(const Tour& t, const Segment& s) {
  LineFrame fr(s);
  LineEvents ev = passages_impl(t, fr);
  std::vector<Passage> kept;
  LinePos lo{Rat(0), Rat(0)};
  LinePos hi{fr.dd, Rat(0)};
  for (auto p : ev.crossings) {
    // clip contact extents to the segment; point passages need containment
    LinePos clo = std::max(p.lo, lo, [](const LinePos& x, const LinePos& y) { return x < y; });
    LinePos chi = std::min(p.hi, hi, [](const LinePos& x, const LinePos& y) { return x < y; });
    if (chi < clo) continue;
    if (p.lo < clo || chi < p.hi) p.pos = mid_pos(clo, chi);
    kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Passage& x, const Passage& y) { return x.pos < y.pos; });
  return collapse_to_points(fr, kept, t.color);
}

CrossingSet crossings_clipped(const Tour& t, const Segment& host_line, const LinePos& lo,
                              const LinePos& hi, bool lo_open, bool hi_open) {
  LineFrame fr(host_line);
  LineEvents ev = passages_impl(t, fr);
  std::vector<Passage> kept;
  for (auto p : ev.crossings) {
    bool above_lo = lo_open ? (lo < p.pos) : !(p.pos < lo);
    bool below_hi = hi_open ? (p.pos < hi) : !(hi < p.pos);
    if (above_lo && below_hi) kept.push_back(p);
  }
  return collapse_to_points(fr, kept, t.color);
}

// ---------------------------------------------------------------------------
// pairwise crossing detection
// ---------------------------------------------------------------------------

namespace {

struct EpsVec {
  Rat x, y;    // base components
  Rat tx, ty;  // eps components

  bool is_zero() const { return x == 0 && y == 0 && tx == 0 && ty == 0; }
};

EpsVec stub_vec(const VPt& from, const VPt& to) {
  EpsVec v;
  v.x = to.p.x - from.p.x;
  v.y = to.p.y - from.p.y;
  v.tx = Rat(to.tx - from.tx);
  v.ty = Rat(to.ty - from.ty);
  return v;
}

int eps_sign(const Rat& base, const Rat& tier) {
  int s = sgn(base);
  if (s) return s;
  return sgn(tier);
}

// 0 for upper half plane (y>0, or y==0 && x>0), 1 for lower
int half_of(const EpsVec& v) {
  int sy = eps_sign(v.y, v.ty);
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  int sx = eps_sign(v.x, v.tx);
  return sx > 0 ? 0 : 1;
}

// sign of cross(u, v) in Q[eps] (degree 2)
int eps_cross_sign(const EpsVec& u, const EpsVec& v) {
  Rat c0 = u.x * v.y - u.y * v.x;
  int s = sgn(c0);
  if (s) return s;
  Rat c1 = u.x * v.ty + u.tx * v.y - u.y * v.tx - u.ty * v.x;
  s = sgn(c1);
  if (s) return s;
  Rat c2 = u.tx * v.ty - u.ty * v.tx;
  return sgn(c2);
}

// strict angular order; 0 when directions coincide exactly
int angle_cmp(const EpsVec& u, const EpsVec& v) {
  int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  int c = eps_cross_sign(u, v);
  return -c;  // cross(u,v) > 0 means u comes earlier (CCW order)
}

struct VPtKey {
  std::string k;
  bool operator<(const VPtKey& o) const { return k < o.k; }
};

VPtKey key_of(const VPt& v) {
  VPtKey k;
  k.k = numerator(v.p.x).str() + "/" + denominator(v.p.x).str() + "," +
        numerator(v.p.y).str() + "/" + denominator(v.p.y).str() + "," + std::to_string(v.tx) +
        "," + std::to_string(v.ty);
  return k;
}

struct PassStub {
  EpsVec in, out;
  int tour;  // 0 or 1
};

bool point_inside_open_edge(const VPt& a, const VPt& b, const VPt& q) {
  if (orient(a, b, q) != 0) return false;
  // strict interior by parameter along the edge in Q[eps]
  EpsVec d = stub_vec(a, b);
  EpsVec w = stub_vec(a, q);
  // dot(w, d) in (0, dot(d,d)) with eps-lex comparison
  Rat p0 = w.x * d.x + w.y * d.y;
  Rat p1 = w.x * d.tx + w.tx * d.x + w.y * d.ty + w.ty * d.y;
  Rat p2 = w.tx * d.tx + w.ty * d.ty;
  Rat q0 = d.x * d.x + d.y * d.y;
  Rat q1 = 2 * (d.x * d.tx + d.y * d.ty);
  Rat q2 = d.tx * d.tx + d.ty * d.ty;
  auto sign3 = [](Rat a0, Rat a1, Rat a2) {
    int s = sgn(a0);
    if (s) return s;
    s = sgn(a1);
    if (s) return s;
    return sgn(a2);
  };
  if (sign3(p0, p1, p2) <= 0) return false;
  if (sign3(q0 - p0, q1 - p1, q2 - p2) <= 0) return false;
  return true;
}

// contact chain of one tour on one (virtual) supporting line
struct Chain {
  LinePos lo, hi;
  int side_in = 0, side_out = 0;
  bool whole = false;
  int tour = 0;
};

struct PairChecker {
  const Tour& t1;
  const Tour& t2;
  CrossWitness w;

  PairChecker(const Tour& a, const Tour& b) : t1(a), t2(b) {}

  const Tour& tour(int i) const { return i == 0 ? t1 : t2; }

  void fail(const std::string& reason, const Pt& where) {
    if (w.crossing) return;
    w.crossing = true;
    w.reason = reason;
    w.where = where;
  }

  void run() {
    size_t n1 = t1.vert.size(), n2 = t2.vert.size();
    if (n1 < 2 || n2 < 2) return;
    // 1. proper interior crossings
    for (size_t i = 0; i < n1 && !w.crossing; ++i) {
      const VPt &a = t1.vert[i], &b = t1.at(i + 1);
      for (size_t j = 0; j < n2; ++j) {
        const VPt &c = t2.vert[j], &d = t2.at(j + 1);
        int o1 = orient(a, b, c), o2 = orient(a, b, d);
        if (o1 * o2 >= 0) continue;
        int o3 = orient(c, d, a), o4 = orient(c, d, b);
        if (o3 * o4 >= 0) continue;
        fail("transversal edge crossing", approx_cross_point(a, b, c, d));
        break;
      }
    }
    if (w.crossing) return;
    // 2. point events at shared virtual points
    point_events();
    if (w.crossing) return;
    // 3. contact overlaps on shared virtual lines
    contact_overlaps();
  }

  static Pt approx_cross_point(const VPt& a, const VPt& b, const VPt& c, const VPt& d) {
    Rat A0 = cross(b.p - a.p, c.p - a.p);
    Rat A1 = cross(b.p - a.p, d.p - a.p);
    if (A0 == A1) return c.p;
    Rat s = A0 / (A0 - A1);
    return Pt{c.p.x + s * (d.p.x - c.p.x), c.p.y + s * (d.p.y - c.p.y)};
  }

  void collect_passes_at(const Tour& t, int tid, const VPt& pt, std::vector<PassStub>& out) {
    size_t n = t.vert.size();
    for (size_t i = 0; i < n; ++i) {
      if (t.vert[i] == pt) {
        PassStub ps;
        ps.in = stub_vec(pt, t.at(i + n - 1));
        ps.out = stub_vec(pt, t.at(i + 1));
        ps.tour = tid;
        out.push_back(ps);
      }
    }
    for (size_t i = 0; i < n; ++i) {
      const VPt &a = t.vert[i], &b = t.at(i + 1);
      if (a == pt || b == pt) continue;
      if (point_inside_open_edge(a, b, pt)) {
        PassStub ps;
        ps.in = stub_vec(pt, a);
        ps.out = stub_vec(pt, b);
        ps.tour = tid;
        out.push_back(ps);
      }
    }
  }

  void point_events() {
    std::map<VPtKey, VPt> pts;
    auto add_candidates = [&](const Tour& ta, const Tour& tb) {
      for (const auto& v : ta.vert) {
        bool hit = false;
        for (size_t j = 0; j < tb.vert.size() && !hit; ++j) {
          if (tb.vert[j] == v) hit = true;
          else if (point_inside_open_edge(tb.vert[j], tb.at(j + 1), v)) hit = true;
        }
        if (hit) pts.emplace(key_of(v), v);
      }
    };
    add_candidates(t1, t2);
    add_candidates(t2, t1);
    for (auto& [k, pt] : pts) {
      std::vector<PassStub> stubs;
      collect_passes_at(t1, 0, pt, stubs);
      collect_passes_at(t2, 1, pt, stubs);
      if (check_point(pt, stubs)) return;
    }
  }

  // returns true if a crossing was recorded
  bool check_point(const VPt& pt, std::vector<PassStub>& passes) {
    // angular slots: equal directions collapse into one slot
    struct Slot {
      EpsVec dir;
    };
    std::vector<Slot> slots;
    auto slot_of = [&](const EpsVec& v) -> int {
      for (size_t s = 0; s < slots.size(); ++s)
        if (angle_cmp(slots[s].dir, v) == 0) return static_cast<int>(s);
      slots.push_back(Slot{v});
      return static_cast<int>(slots.size()) - 1;
    };
    std::vector<std::array<int, 2>> chord;
    std::vector<int> owner;
    for (auto& ps : passes) {
      if (ps.in.is_zero() || ps.out.is_zero()) continue;
      chord.push_back({slot_of(ps.in), slot_of(ps.out)});
      owner.push_back(ps.tour);
    }
    // order slots cyclically
    std::vector<int> order(slots.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return angle_cmp(slots[a].dir, slots[b].dir) < 0;
    });
    std::vector<int> rank(slots.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    int m = static_cast<int>(slots.size());
    // cross-tour chords sharing a slot = overlapping edges; contact rules own those
    for (size_t i = 0; i < chord.size(); ++i) {
      for (size_t j = i + 1; j < chord.size(); ++j) {
        if (owner[i] == owner[j]) continue;
        int a1 = rank[chord[i][0]], b1 = rank[chord[i][1]];
        int a2 = rank[chord[j][0]], b2 = rank[chord[j][1]];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
        if (a1 == b1 || a2 == b2) continue;  // degenerate (fold) handled elsewhere
        auto inside = [&](int x, int lo, int hi) {
          // strictly inside cyclic open interval (lo, hi)
          if (lo < hi) return lo < x && x < hi;
          return x > lo || x < hi;
        };
        bool i2 = inside(a2, a1, b1);
        bool j2 = inside(b2, a1, b1);
        (void)m;
        if (i2 != j2) {
          fail("alternating passes at shared point", pt.p);
          return true;
        }
      }
    }
    return false;
  }

  // chains of t on the virtual supporting line of (la, lb)
  std::vector<Chain> chains_on_line(const Tour& t, int tid, const VPt& la, const VPt& lb) {
    std::vector<Chain> out;
    size_t n = t.vert.size();
    std::vector<int> side(n);
    bool all_zero = true;
    for (size_t i = 0; i < n; ++i) {
      side[i] = orient(la, lb, t.vert[i]);
      if (side[i]) all_zero = false;
    }
    Segment base{la.p, lb.p};
    LineFrame fr(base);
    if (all_zero) {
      Chain c;
      c.whole = true;
      c.tour = tid;
      bool first = true;
      for (size_t i = 0; i < n; ++i) {
        LinePos p = fr.param(t.vert[i]);
        if (first || p < c.lo) c.lo = p;
        if (first || c.hi < p) c.hi = p;
        first = false;
      }
      out.push_back(c);
      return out;
    }
    for (size_t i = 0; i < n; ++i) {
      if (side[i] != 0) continue;
      size_t prev = (i + n - 1) % n;
      if (side[prev] == 0) continue;
      size_t j = i, last = i;
      Chain c;
      c.tour = tid;
      c.lo = c.hi = fr.param(t.vert[i]);
      while (side[(j + 1) % n] == 0) {
        j = (j + 1) % n;
        LinePos p = fr.param(t.vert[j]);
        if (p < c.lo) c.lo = p;
        if (c.hi < p) c.hi = p;
        last = j;
      }
      c.side_in = side[prev];
      c.side_out = side[(last + 1) % n];
      out.push_back(c);
    }
    return out;
  }

  void contact_overlaps() {
    // candidate lines: any edge of t1 virtually collinear-overlapping an edge of t2
    struct LineCand {
      VPt a, b;
    };
    std::vector<LineCand> lines;
    auto same_line_recorded = [&](const VPt& a, const VPt& b) {
      for (auto& lc : lines)
        if (orient(lc.a, lc.b, a) == 0 && orient(lc.a, lc.b, b) == 0) return true;
      return false;
    };
    size_t n1 = t1.vert.size(), n2 = t2.vert.size();
    for (size_t i = 0; i < n1; ++i) {
      const VPt &a = t1.vert[i], &b = t1.at(i + 1);
      if (stub_vec(a, b).is_zero()) continue;
      for (size_t j = 0; j < n2; ++j) {
        const VPt &c = t2.vert[j], &d = t2.at(j + 1);
        if (orient(a, b, c) != 0 || orient(a, b, d) != 0) continue;
        if (!same_line_recorded(a, b)) lines.push_back(LineCand{a, b});
        break;
      }
    }
    for (auto& lc : lines) {
      auto c1 = chains_on_line(t1, 0, lc.a, lc.b);
      auto c2 = chains_on_line(t2, 1, lc.a, lc.b);
      for (auto& x : c1)
        for (auto& y : c2)
          if (chain_pair_crosses(x, y)) {
            fail("overlapping contact chains cross", lc.a.p);
            return;
          }
    }
  }

  static bool chain_pair_crosses(const Chain& x, const Chain& y) {
    // only positive-length base overlap matters; point touches are point events
    Rat lo = std::max(x.lo.q, y.lo.q);
    Rat hi = std::min(x.hi.q, y.hi.q);
    if (!(lo < hi)) return false;
    auto changes = [](const Chain& c) { return !c.whole && c.side_in != c.side_out; };
    bool cx = changes(x), cy = changes(y);
    if (x.whole || y.whole) {
      const Chain& whole = x.whole ? x : y;
      const Chain& other = x.whole ? y : x;
      if (x.whole && y.whole) return false;  // two flat loops stack
      if (!changes(other)) return false;
      return whole.lo.q < other.lo.q && other.hi.q < whole.hi.q;
    }
    if (!cx && !cy) return false;
    if (cx && cy) {
      bool opposite = x.side_in != y.side_in;
      if (opposite) return true;  // overlapping opposite braids must cross
      bool x_in_y = y.lo.q < x.lo.q && x.hi.q < y.hi.q;
      bool y_in_x = x.lo.q < y.lo.q && y.hi.q < x.hi.q;
      return x_in_y || y_in_x;
    }
    const Chain& ch = cx ? x : y;
    const Chain& nc = cx ? y : x;
    int strand_side = nc.side_in;
    const LinePos& e = (ch.side_in == strand_side) ? ch.lo : ch.hi;
    return nc.lo.q < e.q && e.q < nc.hi.q;
  }
};

}  // namespace

CrossWitness pair_crossing_witness(const Tour& t1, const Tour& t2) {
  PairChecker pc(t1, t2);
  pc.run();
  return pc.w;
}

bool pair_noncrossing(const Tour& t1, const Tour& t2) {
  return !pair_crossing_witness(t1, t2).crossing;
}

bool tour_simple(const Tour& t) {
  size_t n = t.vert.size();
  if (n < 2) return n == 1;
  for (size_t i = 0; i < n; ++i) {
    if (t.vert[i] == t.at(i + 1)) return false;  // virtual-zero edge
  }
  // fold-back at a vertex: in/out stubs identical
  for (size_t i = 0; i < n; ++i) {
    EpsVec in = stub_vec(t.vert[i], t.at(i + n - 1));
    EpsVec out = stub_vec(t.vert[i], t.at(i + 1));
    if (angle_cmp(in, out) == 0) return false;
  }
  // non-adjacent proper crossings
  for (size_t i = 0; i < n; ++i) {
    const VPt &a = t.vert[i], &b = t.at(i + 1);
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      const VPt &c = t.vert[j], &d = t.at(j + 1);
      int o1 = orient(a, b, c), o2 = orient(a, b, d);
      if (o1 * o2 >= 0) continue;
      int o3 = orient(c, d, a), o4 = orient(c, d, b);
      if (o3 * o4 >= 0) continue;
      return false;
    }
  }
  // repeated virtual points: passes must not interleave, and no vertex may sit
  // inside another edge of the same tour unless stubs nest
  PairChecker pc(t, t);
  pc.point_events();
  if (pc.w.crossing) return false;
  // coincident collinear material within the tour (other than adjacent edges)
  for (size_t i = 0; i < n; ++i) {
    const VPt &a = t.vert[i], &b = t.at(i + 1);
    EpsVec d1 = stub_vec(a, b);
    if (d1.is_zero()) return false;
    for (size_t j = i + 1; j < n; ++j) {
      if ((i + 1) % n == j || (j + 1) % n == i) continue;
      const VPt &c = t.vert[j], &e = t.at(j + 1);
      if (orient(a, b, c) != 0 || orient(a, b, e) != 0) continue;
      // same virtual line: overlap iff parameter intervals intersect openly
      Segment base{a.p, b.p};
      if (base.a == base.b) continue;
      LineFrame fr(base);
      LinePos i0 = fr.param(a), i1 = fr.param(b);
      LinePos j0 = fr.param(c), j1 = fr.param(e);
      if (i1 < i0) std::swap(i0, i1);
      if (j1 < j0) std::swap(j0, j1);
      LinePos lo = std::max(i0, j0, [](const LinePos& x, const LinePos& y) { return x < y; });
      LinePos hi = std::min(i1, j1, [](const LinePos& x, const LinePos& y) { return x < y; });
      if (lo < hi) return false;  // coincident strands
    }
  }
  return true;
}

}  // namespace noncross
