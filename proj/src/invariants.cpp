#include "tanglekit/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

namespace tanglekit::oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// Positions of the port slots in the crossing's local frame.
constexpr int kX[4] = {-1, 1, -1, 1};
constexpr int kY[4] = {1, 1, -1, -1};

// Counterclockwise next slot around the crossing: NW -> SW -> SE -> NE.
constexpr int kCcwNext[4] = {kSlotSW, kSlotNW, kSlotSE, kSlotNE};

struct Faces {
  std::vector<int> face_of_dart;  // dart = tail port
  int n_faces = 0;
  // Local region -> face: N between NW,NE; W between NW,SW; S between SW,SE;
  // E between SE,NE.
  int north(const Diagram&, int c) const;
  int south(const Diagram&, int c) const;
  int east(const Diagram&, int c) const;
  int west(const Diagram&, int c) const;
};

int Faces::north(const Diagram&, int c) const { return face_of_dart[4 * c + kSlotNW]; }
int Faces::west(const Diagram&, int c) const { return face_of_dart[4 * c + kSlotSW]; }
int Faces::south(const Diagram&, int c) const { return face_of_dart[4 * c + kSlotSE]; }
int Faces::east(const Diagram&, int c) const { return face_of_dart[4 * c + kSlotNE]; }

Faces trace_faces(const Diagram& d) {
  Faces f;
  f.face_of_dart.assign(d.ports(), -1);
  for (int start = 0; start < d.ports(); ++start) {
    if (f.face_of_dart[start] >= 0) continue;
    int dart = start;
    do {
      f.face_of_dart[dart] = f.n_faces;
      int arrive = d.match[dart];
      int c = arrive / 4;
      dart = 4 * c + kCcwNext[arrive % 4];
    } while (dart != start);
    ++f.n_faces;
  }
  // Euler check for a connected 4-valent planar map.
  if (d.crossings() > 0 && f.n_faces != d.crossings() + 2)
    throw std::logic_error("diagram is not a connected planar map");
  return f;
}

// Face two-coloring; the two sides of the arc out of port p are the faces of
// darts p and match[p].
std::vector<int> checkerboard(const Diagram& d, const Faces& f) {
  std::vector<int> color(f.n_faces, -1);
  std::vector<int> stack;
  color[0] = 0;
  stack.push_back(0);
  std::vector<std::vector<std::pair<int, int>>> adj(f.n_faces);
  for (int p = 0; p < d.ports(); ++p) {
    int a = f.face_of_dart[p];
    int b = f.face_of_dart[d.match[p]];
    adj[a].push_back({b, p});
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, p] : adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        throw std::logic_error("diagram faces are not checkerboard colorable");
      }
    }
  }
  return color;
}

// Exact signature of a symmetric integer matrix: repeated Schur complements
// over the rationals, one signature contribution per pivot.
int symmetric_signature(const std::vector<std::vector<std::int64_t>>& g0) {
  const std::size_t n = g0.size();
  std::vector<std::vector<cpp_rational>> g(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = g0[i][j];
  std::vector<bool> done(n, false);
  int sig = 0;
  while (true) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && g[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // no nonzero diagonal: manufacture one from an off-diagonal entry
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        if (!done[i])
          for (std::size_t j = i + 1; j < n; ++j)
            if (!done[j] && g[i][j] != 0) {
              a = i;
              b = j;
              break;
            }
      if (a == n) break;  // remaining block is zero
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) g[a][j] += g[b][j];
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) g[j][a] += g[j][b];
      piv = a;
    }
    cpp_rational p = g[piv][piv];
    sig += p > 0 ? 1 : -1;
    done[piv] = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || g[k][piv] == 0) continue;
      cpp_rational f = g[k][piv] / p;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) g[k][j] -= f * g[piv][j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      g[piv][j] = 0;
      g[j][piv] = 0;
    }
  }
  return sig;
}

cpp_int int_determinant(const std::vector<std::vector<std::int64_t>>& m0) {
  const std::size_t n = m0.size();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = m0[i][j];
  // Bareiss fraction-free elimination
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct GoeritzData {
  std::vector<std::vector<std::int64_t>> matrix;  // one white region deleted
  std::vector<int> eta;                           // per crossing
  std::vector<bool> white_is_ns;                  // per crossing
};

GoeritzData goeritz(const Diagram& d) {
  Faces f = trace_faces(d);
  std::vector<int> color = checkerboard(d, f);
  const int white = color[f.face_of_dart[0]];

  std::vector<int> white_index(f.n_faces, -1);
  int n_white = 0;
  for (int i = 0; i < f.n_faces; ++i)
    if (color[i] == white) white_index[i] = n_white++;

  GoeritzData out;
  out.eta.resize(d.crossings());
  out.white_is_ns.resize(d.crossings());
  std::vector<std::vector<std::int64_t>> g(
      n_white, std::vector<std::int64_t>(n_white, 0));
  for (int c = 0; c < d.crossings(); ++c) {
    int fn = f.north(d, c), fs = f.south(d, c);
    int fe = f.east(d, c), fw = f.west(d, c);
    if (color[fn] != color[fs] || color[fe] != color[fw] ||
        color[fn] == color[fe])
      throw std::logic_error("inconsistent checkerboard at crossing");
    bool ns = color[fn] == white;
    out.white_is_ns[c] = ns;
    int eta = (ns ? 1 : -1) * (d.sign[c] > 0 ? 1 : -1);
    out.eta[c] = eta;
    int a = white_index[ns ? fn : fw];
    int b = white_index[ns ? fs : fe];
    if (a == b) continue;
    g[a][a] += eta;
    g[b][b] += eta;
    g[a][b] -= eta;
    g[b][a] -= eta;
  }
  // delete the last white region
  if (n_white > 0) {
    g.pop_back();
    for (auto& row : g) row.pop_back();
  }
  out.matrix = std::move(g);
  return out;
}

}  // namespace

Analysis analyze(const Diagram& d) {
  Analysis a;
  a.pass_comp[0].assign(d.crossings(), -1);
  a.pass_comp[1].assign(d.crossings(), -1);
  a.fwd_exit[0].assign(d.crossings(), -1);
  a.fwd_exit[1].assign(d.crossings(), -1);
  std::vector<bool> visited(d.ports(), false);
  for (int start = 0; start < d.ports(); ++start) {
    if (visited[start]) continue;
    int comp = a.traced++;
    int p = start;
    visited[p] = true;
    while (true) {
      int q = d.match[p];
      visited[q] = true;
      int c = q / 4, slot = q % 4;
      int diag = diagonal_of_slot(slot);
      a.pass_comp[diag][c] = comp;
      a.fwd_exit[diag][c] = static_cast<std::int8_t>(3 - slot);
      int exit = 4 * c + (3 - slot);
      if (exit == start) break;
      visited[exit] = true;
      p = exit;
    }
  }
  a.n_comp = a.traced + d.free_loops;
  return a;
}

int crossing_sign(const Diagram& d, const Analysis& a, const Orientation& o,
                  int crossing) {
  int dir[2][2];
  for (int diag = 0; diag < 2; ++diag) {
    int exit = a.fwd_exit[diag][crossing];
    int enter = 3 - exit;
    if (o[a.pass_comp[diag][crossing]]) std::swap(exit, enter);
    dir[diag][0] = kX[exit] - kX[enter];
    dir[diag][1] = kY[exit] - kY[enter];
  }
  int over = d.sign[crossing] > 0 ? 1 : 0;
  int under = 1 - over;
  int cross_z = dir[over][0] * dir[under][1] - dir[over][1] * dir[under][0];
  return cross_z < 0 ? 1 : -1;
}

int writhe(const Diagram& d, const Analysis& a, const Orientation& o) {
  int w = 0;
  for (int c = 0; c < d.crossings(); ++c) w += crossing_sign(d, a, o, c);
  return w;
}

int linking_number(const Diagram& d, const Analysis& a, const Orientation& o) {
  if (a.n_comp != 2)
    throw std::domain_error("linking number needs exactly two components");
  int sum = 0;
  for (int c = 0; c < d.crossings(); ++c)
    if (a.pass_comp[0][c] != a.pass_comp[1][c]) sum += crossing_sign(d, a, o, c);
  if (sum % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
  return sum / 2;
}

int signature(const Diagram& d, const Analysis& a, const Orientation& o) {
  if (d.crossings() == 0) return 0;
  GoeritzData gz = goeritz(d);
  int sig = symmetric_signature(gz.matrix);
  int mu = 0;
  for (int c = 0; c < d.crossings(); ++c) {
    // project both pass directions on the axis separating the white regions
    int proj[2];
    for (int diag = 0; diag < 2; ++diag) {
      int exit = a.fwd_exit[diag][c];
      int enter = 3 - exit;
      if (o[a.pass_comp[diag][c]]) std::swap(exit, enter);
      proj[diag] = gz.white_is_ns[c] ? kX[exit] - kX[enter] : kY[exit] - kY[enter];
    }
    if (proj[0] == proj[1]) mu += gz.eta[c];  // type II
  }
  return sig - mu;
}

std::int64_t link_determinant(const Diagram& d) {
  if (d.free_loops > 0)
    return d.crossings() > 0 || d.free_loops > 1 ? 0 : 1;
  cpp_int det = int_determinant(goeritz(d).matrix);
  if (det < 0) det = -det;
  return det.convert_to<std::int64_t>();
}

}  // namespace tanglekit::oracle
