#pragma once

#include "noncross/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace noncross {

// Exact planar point.
struct Pt {
  Rat x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
};

Pt operator+(const Pt& a, const Pt& b);
Pt operator-(const Pt& a, const Pt& b);
Rat dot(const Pt& a, const Pt& b);
Rat cross(const Pt& a, const Pt& b);
double dist(const Pt& a, const Pt& b);

// Virtual point: base point displaced by an infinitesimal integer vector,
// (x + tx*eps, y + ty*eps). The eps terms encode corridor layers, portal
// pull-ins and patch slot ordering; they never contribute to lengths.
struct VPt {
  Pt p;
  std::int64_t tx = 0, ty = 0;
  bool operator==(const VPt& o) const { return p == o.p && tx == o.tx && ty == o.ty; }
  bool operator!=(const VPt& o) const { return !(*this == o); }
};

inline VPt vpt(Rat x, Rat y, std::int64_t tx = 0, std::int64_t ty = 0) {
  return VPt{Pt{std::move(x), std::move(y)}, tx, ty};
}

// A value a0 + a1*eps + a2*eps^2; sign is lexicographic on coefficients.
struct Eps2 {
  Rat c0, c1, c2;
  int sign() const;
};

// Exact orientation of virtual points: sign of cross(b-a, c-a) in Q[eps].
Eps2 orient_val(const VPt& a, const VPt& b, const VPt& c);
int orient(const VPt& a, const VPt& b, const VPt& c);

// Base-coordinate orientation (tiers ignored).
int orient_base(const Pt& a, const Pt& b, const Pt& c);

// True iff base point q lies on the closed base segment [a,b].
bool on_segment_base(const Pt& a, const Pt& b, const Pt& q);

struct Segment {
  Pt a, b;
};

// Colored terminal.
struct Terminal {
  Pt pos;
  int color = 1;  // 1/2 for tours; reductions use their own tags
  int id = 0;
};

// Closed polygonal curve over virtual points. Edge i runs vert[i] ->
// vert[(i+1)%n]. Lengths are measured on base coordinates only ("length in
// the limit"); tiers resolve touching-vs-crossing combinatorially.
struct Tour {
  std::vector<VPt> vert;
  int color = 1;

  size_t size() const { return vert.size(); }
  const VPt& at(size_t i) const { return vert[i % vert.size()]; }
};

Tour tour_from_points(std::vector<Pt> pts, int color = 1);

// Back-and-forth "lens" tour over a simple polyline: visits every polyline
// point exactly, base length = twice the polyline length, realized as an
// infinitesimally thin loop (return strand carries a perpendicular tier).
Tour lens_tour(const std::vector<Pt>& polyline, int color = 1, int side = 1);

double curve_length(const Tour& t);
bool tour_visits(const Tour& t, const Pt& p);

// Position along a directed line a->b: q = dot(base - a, d), eps term t.
// Ordering is lexicographic; q is in units of |d|^2.
struct LinePos {
  Rat q;
  Rat t;
  bool operator<(const LinePos& o) const { return q < o.q || (q == o.q && t < o.t); }
  bool operator==(const LinePos& o) const { return q == o.q && t == o.t; }
  bool operator<=(const LinePos& o) const { return *this < o || *this == o; }
};

// One transversal crossing of a query segment, as a limit point.
struct Crossing {
  Pt point;        // limit position on the segment
  LinePos pos;     // exact ordering key along the segment
  int color = 0;
  bool transversal = true;
  int passes = 1;  // number of passes collapsing to this limit point
};

using CrossingSet = std::vector<Crossing>;

// Detailed passage of a tour through the line of S (patching needs these).
struct Passage {
  LinePos pos;          // where the passage meets the line
  int edge_before = 0;  // tour edge index arriving at the passage
  int edge_after = 0;   // tour edge index leaving it
  int side_before = 0;  // -1 below, +1 above (orientation sign w.r.t. a->b)
  int side_after = 0;
  size_t cut_vertex = 0;     // vertex index if the passage is at a vertex
  bool at_vertex = false;    // else it is interior to edge_before==edge_after
  LinePos lo, hi;            // contact extent (equal to pos for point passes)
};

struct LineEvents {
  std::vector<Passage> crossings;  // side-changing passages, sorted along the line
  bool whole_tour_on_line = false;
};

// All side-changing passages of t across the full line through s.
LineEvents line_passages(const Tour& t, const Segment& s);

// Transversal crossings of t with the closed segment s (limit-point set
// semantics: passages through one limit point collapse to one entry).
CrossingSet crossings(const Tour& t, const Segment& s);

// Variant for dissection boundaries: positions restricted to [lo,hi] along
// the host line, with one end possibly open.
CrossingSet crossings_clipped(const Tour& t, const Segment& host_line, const LinePos& lo,
                              const LinePos& hi, bool lo_open, bool hi_open);

// Witness for a crossing between two tours (diagnostics).
struct CrossWitness {
  bool crossing = false;
  std::string reason;
  Pt where;
};

CrossWitness pair_crossing_witness(const Tour& t1, const Tour& t2);
bool pair_noncrossing(const Tour& t1, const Tour& t2);

// Simplicity of a single closed curve under its tier resolution.
bool tour_simple(const Tour& t);

}  // namespace noncross
