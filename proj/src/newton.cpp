#include "gradmult/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gradmult/linalg.hpp"

namespace gradmult {

namespace {

// ---------------------------------------------------------------------------
// Exact phase-1 simplex: feasibility of {lambda >= 0, sum lambda = n,
// sum lambda_g g <= a}. One artificial variable for the equality row; Bland's
// rule guarantees termination.
// ---------------------------------------------------------------------------

bool simplex_feasible(const std::vector<Exponent>& gens, long n, const Exponent& a) {
  const int k = (int)gens.size();
  const int d = (int)a.size();
  const int cols = k + d + 2;  // lambda | slack | artificial | rhs
  const int art = k + d;
  const int rhs = k + d + 1;

  std::vector<std::vector<Rat>> T(d + 1, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int l = 0; l < k; ++l) T[i][l] = gens[l][i];
    T[i][k + i] = 1;
    T[i][rhs] = a[i];
  }
  for (int l = 0; l < k; ++l) T[d][l] = 1;
  T[d][art] = 1;
  T[d][rhs] = n;

  std::vector<int> basis(d + 1);
  for (int i = 0; i < d; ++i) basis[i] = k + i;
  basis[d] = art;

  for (;;) {
    if (T[d][rhs] == 0) return true;
    // Entering: smallest column that decreases the artificial (Bland).
    int enter = -1;
    for (int j = 0; j < k + d; ++j)
      if (T[d][j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) return false;
    int leave = -1;
    Rat best;
    for (int i = 0; i <= d; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][rhs] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == d) return true;  // the artificial leaves: value 0 reachable
    Rat piv = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
    for (int i = 0; i <= d; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
}

// ---------------------------------------------------------------------------
// Rational inequalities a . x >= b and polytope helpers (d <= 3).
// ---------------------------------------------------------------------------

struct Ineq {
  std::vector<Rat> a;
  Rat b;
};

bool satisfies(const Ineq& q, const std::vector<Rat>& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += q.a[i] * x[i];
  return s >= q.b;
}

bool tight(const Ineq& q, const std::vector<Rat>& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += q.a[i] * x[i];
  return s == q.b;
}

std::vector<std::vector<Rat>> polytope_vertices(const std::vector<Ineq>& sys, int d) {
  std::vector<std::vector<Rat>> verts;
  const int n = (int)sys.size();
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == d) {
      std::vector<std::vector<Rat>> A(d, std::vector<Rat>(d));
      std::vector<Rat> b(d);
      for (int i = 0; i < d; ++i) {
        A[i] = sys[idx[i]].a;
        b[i] = sys[idx[i]].b;
      }
      try {
        std::vector<Rat> x = solve_linear_system(A, b);
        for (const auto& q : sys)
          if (!satisfies(q, x)) return;
        verts.push_back(std::move(x));
      } catch (const std::domain_error&) {
      }
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

// Exact CCW angular order around the centroid.
void sort_polygon(std::vector<std::vector<Rat>>& pts) {
  if (pts.size() < 3) return;
  Rat cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p[0];
    cy += p[1];
  }
  cx /= (long)pts.size();
  cy /= (long)pts.size();
  auto half = [&](const std::vector<Rat>& p) {
    Rat dx = p[0] - cx, dy = p[1] - cy;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    Rat px = p[0] - cx, py = p[1] - cy, qx = q[0] - cx, qy = q[1] - cy;
    Rat cross = px * qy - py * qx;
    if (cross != 0) return cross > 0;
    return px * px + py * py < qx * qx + qy * qy;
  });
}

Rat polygon_area(std::vector<std::vector<Rat>> pts) {
  if (pts.size() < 3) return Rat(0);
  sort_polygon(pts);
  Rat twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

Rat area_from_system(const std::vector<Ineq>& sys) {
  return polygon_area(polytope_vertices(sys, 2));
}

// Volume by slab decomposition along x0: between consecutive vertex
// x0-coordinates the cross-section area is a quadratic in x0, so Simpson's
// rule integrates it exactly.
Rat volume_3d(const std::vector<Ineq>& sys) {
  auto verts = polytope_vertices(sys, 3);
  if (verts.size() < 4) return Rat(0);
  std::vector<Rat> cuts;
  for (const auto& v : verts) cuts.push_back(v[0]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto slice_area = [&](const Rat& t) {
    std::vector<Ineq> flat;
    flat.reserve(sys.size());
    for (const auto& q : sys)
      flat.push_back(Ineq{{q.a[1], q.a[2]}, q.b - q.a[0] * t});
    return area_from_system(flat);
  };

  Rat vol = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat &u = cuts[i], &v = cuts[i + 1];
    Rat mid = (u + v) / 2;
    vol += (v - u) / 6 * (slice_area(u) + 4 * slice_area(mid) + slice_area(v));
  }
  return vol;
}

std::vector<Ineq> to_ineqs(const std::vector<HalfSpace>& hs) {
  std::vector<Ineq> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    Ineq q;
    q.a.reserve(h.normal.size());
    for (const auto& c : h.normal) q.a.push_back(Rat(c));
    q.b = Rat(h.offset);
    out.push_back(std::move(q));
  }
  return out;
}

void append_box(std::vector<Ineq>& sys, const Exponent& box) {
  const int d = (int)box.size();
  for (int i = 0; i < d; ++i) {
    Ineq lo, hi;
    lo.a.assign(d, Rat(0));
    hi.a.assign(d, Rat(0));
    lo.a[i] = 1;
    lo.b = 0;
    hi.a[i] = -1;
    hi.b = Rat(-(long)box[i]);
    sys.push_back(std::move(lo));
    sys.push_back(std::move(hi));
  }
}

HalfSpace canonical(std::vector<Int> normal, Int offset) {
  Int g = 0;
  for (const auto& c : normal) g = boost::multiprecision::gcd(g, c);
  g = boost::multiprecision::gcd(g, offset);
  if (g > 1) {
    for (auto& c : normal) c /= g;
    offset /= g;
  }
  return HalfSpace{std::move(normal), std::move(offset)};
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
  const Ring& R = I.ring();
  const int d = R.dim;
  if (d > 3) throw std::invalid_argument("newton_polyhedron: dimension > 3 unsupported");
  if (I.is_zero()) throw std::invalid_argument("newton_polyhedron of zero ideal");

  NewtonPolyhedron np{R, I.gens(), {}};
  const auto& pts = np.generators;
  const int k = (int)pts.size();
  std::vector<HalfSpace> rows;

  auto try_normal = [&](std::vector<Int> normal, const Exponent& anchor) {
    for (int sign = 0; sign < 2; ++sign) {
      bool nonneg = true;
      for (const auto& c : normal)
        if (c < 0) {
          nonneg = false;
          break;
        }
      if (nonneg) {
        bool zero = true;
        for (const auto& c : normal)
          if (c != 0) zero = false;
        if (!zero) {
          Int b = 0;
          for (int i = 0; i < d; ++i) b += normal[i] * anchor[i];
          bool valid = true;
          for (const auto& p : pts) {
            Int s = 0;
            for (int i = 0; i < d; ++i) s += normal[i] * p[i];
            if (s < b) {
              valid = false;
              break;
            }
          }
          if (valid) rows.push_back(canonical(normal, b));
        }
      }
      for (auto& c : normal) c = -c;
    }
  };

  if (d == 1) {
    Coord mn = pts[0][0];
    for (const auto& p : pts) mn = std::min(mn, p[0]);
    rows.push_back(HalfSpace{{Int(1)}, Int(mn)});
  } else {
    // Every facet is spanned by j >= 1 generator points and d - j orthant
    // rays; enumerate all such subsets and keep the valid orientations.
    std::vector<int> ray(d);
    std::iota(ray.begin(), ray.end(), 0);
    auto direction = [&](const Exponent& p, const Exponent& q) {
      std::vector<Int> v(d);
      for (int i = 0; i < d; ++i) v[i] = Int(q[i]) - Int(p[i]);
      return v;
    };
    if (d == 2) {
      for (int p0 = 0; p0 < k; ++p0) {
        for (int p1 = p0 + 1; p1 < k; ++p1) {
          auto v = direction(pts[p0], pts[p1]);
          try_normal({v[1], -v[0]}, pts[p0]);
        }
        for (int r = 0; r < 2; ++r) {
          std::vector<Int> v(2, 0);
          v[r] = 1;
          try_normal({v[1], -v[0]}, pts[p0]);
        }
      }
    } else {  // d == 3
      auto cross = [](const std::vector<Int>& u, const std::vector<Int>& v) {
        return std::vector<Int>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                u[0] * v[1] - u[1] * v[0]};
      };
      std::vector<std::vector<Int>> rays(3, std::vector<Int>(3, 0));
      for (int i = 0; i < 3; ++i) rays[i][i] = 1;
      for (int p0 = 0; p0 < k; ++p0) {
        // one point + two rays
        for (int r1 = 0; r1 < 3; ++r1)
          for (int r2 = r1 + 1; r2 < 3; ++r2)
            try_normal(cross(rays[r1], rays[r2]), pts[p0]);
        // two points + one ray
        for (int p1 = p0 + 1; p1 < k; ++p1) {
          auto v = direction(pts[p0], pts[p1]);
          for (int r = 0; r < 3; ++r) try_normal(cross(v, rays[r]), pts[p0]);
          // three points
          for (int p2 = p1 + 1; p2 < k; ++p2)
            try_normal(cross(v, direction(pts[p0], pts[p2])), pts[p0]);
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  // Same normal: only the largest offset is supporting.
  std::vector<HalfSpace> pruned;
  for (auto& r : rows) {
    if (!pruned.empty() && pruned.back().normal == r.normal)
      pruned.back().offset = std::max(pruned.back().offset, r.offset);
    else
      pruned.push_back(std::move(r));
  }
  np.half_spaces = std::move(pruned);
  return np;
}

bool np_membership(const MonomialIdeal& I, long n, const Exponent& a) {
  if (I.is_zero()) throw std::invalid_argument("np_membership of zero ideal");
  if (n < 1) throw std::invalid_argument("np_membership requires n >= 1");
  if ((int)a.size() != I.ring().dim)
    throw std::invalid_argument("np_membership: dimension mismatch");
  return simplex_feasible(I.gens(), n, a);
}

bool np_membership_hrep(const NewtonPolyhedron& np, long n, const Exponent& a) {
  for (const auto& h : np.half_spaces) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += h.normal[i] * a[i];
    if (s < Int(n) * h.offset) return false;
  }
  return true;
}

MonomialIdeal integral_closure_power(const MonomialIdeal& I, long n) {
  if (I.is_zero()) throw std::invalid_argument("integral closure of zero ideal");
  if (n == 0) return MonomialIdeal::unit(I.ring());
  const int d = I.ring().dim;
  if (I.is_unit()) return I;

  Coord maxc = 0;
  for (const auto& g : I.gens())
    for (Coord c : g) maxc = std::max(maxc, c);
  const long cap = (long)n * maxc;  // minimal points all live in [0, cap]^d

  std::vector<Exponent> found;
  Exponent a(d, 0);
  auto member = [&](Coord t) {
    a[d - 1] = t;
    return simplex_feasible(I.gens(), n, a);
  };
  for (;;) {
    // Monotone threshold along the last axis: binary search.
    if (member((Coord)cap)) {
      Coord hi = (Coord)cap;
      if (member(0)) {
        hi = 0;
      } else {
        Coord lo = 0;
        while (lo < hi - 1) {
          Coord mid = (lo + hi) / 2;
          if (member(mid))
            hi = mid;
          else
            lo = mid;
        }
      }
      a[d - 1] = hi;
      found.push_back(a);
    }
    int j = d - 2;
    while (j >= 0) {
      if (++a[j] <= (Coord)cap) break;
      a[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return MonomialIdeal(I.ring(), std::move(found));
}

Rat covolume(const MonomialIdeal& I) {
  const int d = I.ring().dim;
  if (d > 3) throw std::invalid_argument("unsupported dimension for exact covolume");
  if (!is_m_primary(I)) throw std::domain_error("covolume requires an m-primary ideal");
  if (I.is_unit()) return Rat(0);

  Exponent box = pure_power_bounds(I);
  NewtonPolyhedron np = newton_polyhedron(I);
  if (d == 1) return Rat(np.half_spaces[0].offset);  // complement is [0, min gen)

  std::vector<Ineq> sys = to_ineqs(np.half_spaces);
  append_box(sys, box);
  Rat box_vol = 1;
  for (Coord b : box) box_vol *= (long)b;
  Rat inside = d == 2 ? area_from_system(sys) : volume_3d(sys);
  return box_vol - inside;
}

MultiplicityTable mixed_covolume_table(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("mixed_covolume_table: no ideals");
  const Ring& R = ideals[0].ring();
  const int d = R.dim;
  if (d > 3) throw std::invalid_argument("unsupported dimension for exact covolume");
  for (const auto& I : ideals)
    if (!is_m_primary(I))
      throw std::domain_error("mixed_covolume_table requires m-primary ideals");

  const int s = (int)ideals.size();
  std::vector<PowerCache> pows;
  pows.reserve(s);
  for (const auto& I : ideals) pows.emplace_back(I);

  // Sample points (k_1..k_{s-1}, 1), |k| <= d: unisolvent for homogeneous
  // degree-d polynomials in s variables.
  std::vector<std::vector<long>> grid;
  for (int total = 0; total <= d; ++total)
    for (const auto& t : type_vectors(std::max(s - 1, 1), total)) {
      std::vector<long> m(t.begin(), t.end());
      if (s == 1)
        m.clear();
      m.push_back(1);
      if ((int)m.size() == s) grid.push_back(std::move(m));
    }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto types = type_vectors(s, d);
  if (grid.size() != types.size())
    throw std::logic_error("covolume grid size mismatch (bug)");

  std::vector<std::vector<Rat>> A(grid.size(), std::vector<Rat>(types.size()));
  std::vector<Rat> rhs(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    MonomialIdeal prod = MonomialIdeal::unit(R);
    for (int j = 0; j < s; ++j) prod = product(prod, pows[j].at(grid[r][j]));
    rhs[r] = covolume(prod);
    for (std::size_t c = 0; c < types.size(); ++c) {
      Rat v = 1;
      for (int j = 0; j < s; ++j)
        for (int rep = 0; rep < types[c][j]; ++rep) v *= grid[r][j];
      A[r][c] = v;
    }
  }
  std::vector<Rat> coeffs = solve_linear_system(A, rhs);

  MultiplicityTable table;
  table.arity = s;
  table.degree = d;
  for (std::size_t c = 0; c < types.size(); ++c) {
    Int norm = 1;
    for (int v : types[c]) norm *= factorial(v);
    Rat e = coeffs[c] * Rat(norm);
    if (e < 0 || denominator(e) != 1)
      throw std::logic_error("covolume table produced a non-integer entry (bug)");
    table.e[types[c]] = e;
  }
  return table;
}

std::vector<std::vector<Rat>> staircase_body_vertices(const MonomialIdeal& I) {
  const int d = I.ring().dim;
  if (d > 3) throw std::invalid_argument("unsupported dimension for staircase body");
  if (!is_m_primary(I)) throw std::domain_error("staircase body requires an m-primary ideal");
  if (I.is_unit()) return {};

  Exponent box = pure_power_bounds(I);
  if (d == 1) return {{Rat(0)}, {Rat((long)box[0])}};

  NewtonPolyhedron np = newton_polyhedron(I);
  std::vector<Ineq> np_rows = to_ineqs(np.half_spaces);
  std::vector<Ineq> sys = np_rows;
  append_box(sys, box);
  auto verts = polytope_vertices(sys, d);

  // The complement closure is the union over positive-offset rows of
  // {x >= 0 : a.x <= b}; a vertex of NP cap box lies in it iff it is tight
  // on such a row.
  std::vector<std::vector<Rat>> body;
  body.push_back(std::vector<Rat>(d, Rat(0)));  // origin
  for (const auto& v : verts) {
    bool on_boundary = false;
    for (const auto& q : np_rows)
      if (q.b > 0 && tight(q, v)) {
        on_boundary = true;
        break;
      }
    if (on_boundary) body.push_back(v);
  }
  if (d == 2) {
    std::sort(body.begin() + 1, body.end(), [](const auto& p, const auto& q) {
      if (p[0] != q[0]) return p[0] > q[0];
      return p[1] < q[1];
    });
  } else {
    std::sort(body.begin() + 1, body.end());
  }
  body.erase(std::unique(body.begin(), body.end()), body.end());
  return body;
}

}  // namespace gradmult
