#include "temper/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace temper {

char series_char(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
  }
  throw std::logic_error("unreachable");
}

Series series_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    default:
      throw std::invalid_argument(std::string("unknown series letter: ") + c);
  }
}

std::string RootSystem::name() const {
  return series_char(series) + std::to_string(rank);
}

long RootSystem::dim() const {
  return rank + 2 * static_cast<long>(positive_roots.size());
}

Rat coroot_pairing(const RatVec& x, const RatVec& root) {
  Rat rr = dot(root, root);
  if (rr == 0) throw std::invalid_argument("coroot_pairing: zero root");
  return 2 * dot(x, root) / rr;
}

namespace {

RatVec unit(int dim, int i, long v = 1) {
  RatVec e(dim, Rat(0));
  e[i] = v;
  return e;
}

std::vector<RatVec> simple_roots_for(Series s, int rank, int& ambient) {
  std::vector<RatVec> simple;
  switch (s) {
    case Series::A: {
      if (rank < 1) throw std::invalid_argument("A series needs rank >= 1");
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i) {
        RatVec a(ambient, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple.push_back(a);
      }
      break;
    }
    case Series::B: {
      if (rank < 2) throw std::invalid_argument("B series needs rank >= 2");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(ambient, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple.push_back(a);
      }
      simple.push_back(unit(ambient, rank - 1));
      break;
    }
    case Series::C: {
      if (rank < 1) throw std::invalid_argument("C series needs rank >= 1");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(ambient, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple.push_back(a);
      }
      simple.push_back(unit(ambient, rank - 1, 2));
      break;
    }
    case Series::D: {
      if (rank < 3) throw std::invalid_argument("D series needs rank >= 3");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(ambient, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simple.push_back(a);
      }
      RatVec a(ambient, Rat(0));
      a[rank - 2] = 1;
      a[rank - 1] = 1;
      simple.push_back(a);
      break;
    }
    case Series::E: {
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("E series needs rank in {6,7,8}");
      ambient = 8;
      RatVec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      std::vector<RatVec> e8 = {a1};
      RatVec a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      e8.push_back(a2);
      for (int i = 0; i < 6; ++i) {
        RatVec a(8, Rat(0));
        a[i] = -1;
        a[i + 1] = 1;
        e8.push_back(a);
      }
      simple.assign(e8.begin(), e8.begin() + rank);
      break;
    }
    case Series::F: {
      if (rank != 4) throw std::invalid_argument("F series needs rank 4");
      ambient = 4;
      simple = {rat_vec({0, 1, -1, 0}), rat_vec({0, 0, 1, -1}),
                rat_vec({0, 0, 0, 1}),
                {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};
      break;
    }
    case Series::G: {
      if (rank != 2) throw std::invalid_argument("G series needs rank 2");
      ambient = 3;
      simple = {rat_vec({1, -1, 0}), rat_vec({-2, 1, 1})};
      break;
    }
  }
  return simple;
}

RatVec reflect(const RatVec& x, const RatVec& root) {
  return vdiff(x, vscale(coroot_pairing(x, root), root));
}

}  // namespace

RootSystem build_root_system(Series s, int rank) {
  RootSystem rs;
  rs.series = s;
  rs.rank = rank;
  rs.simple_roots = simple_roots_for(s, rank, rs.ambient_dim);

  rs.cartan.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      Rat p = coroot_pairing(rs.simple_roots[i], rs.simple_roots[j]);
      if (p.get_den() != 1)
        throw std::logic_error("non-integral Cartan pairing");
      rs.cartan[i][j] = p.get_num().get_si();
    }
  }

  // All roots form a single union of Weyl orbits of the simple roots.
  std::set<RatVec, VecLess> roots(rs.simple_roots.begin(),
                                  rs.simple_roots.end());
  std::vector<RatVec> queue(rs.simple_roots);
  while (!queue.empty()) {
    RatVec r = queue.back();
    queue.pop_back();
    for (const RatVec& a : rs.simple_roots) {
      RatVec img = reflect(r, a);
      if (roots.insert(img).second) queue.push_back(img);
    }
  }
  for (const RatVec& r : roots) {
    std::optional<RatVec> coords = simple_root_coords(rs, r);
    if (!coords) throw std::logic_error("root outside simple-root span");
    bool nonneg = true;
    for (const Rat& c : *coords) nonneg = nonneg && c >= 0;
    if (nonneg) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), VecLess{});

  std::vector<RatVec> cartan_rows(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_rows[i][j] = rs.cartan[i][j];
  std::vector<RatVec> cartan_inv = invert_matrix(cartan_rows);
  for (int i = 0; i < rank; ++i) {
    RatVec w(rs.ambient_dim, Rat(0));
    for (int k = 0; k < rank; ++k)
      w = vsum(w, vscale(cartan_inv[i][k], rs.simple_roots[k]));
    rs.fundamental_weights.push_back(w);
  }

  rs.span_normals = null_space(rs.simple_roots);
  return rs;
}

RootSystem build_root_system(const std::string& name) {
  if (name.size() < 2)
    throw std::invalid_argument("bad algebra name: " + name);
  Series s = series_from_char(name[0]);
  size_t pos = 1;
  if (name[1] == '_') pos = 2;
  int rank = 0;
  try {
    size_t used = 0;
    rank = std::stoi(name.substr(pos), &used);
    if (pos + used != name.size()) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad algebra name: " + name);
  }
  return build_root_system(s, rank);
}

bool is_dominant(const RootSystem& rs, const RatVec& x) {
  for (const RatVec& a : rs.simple_roots)
    if (dot(x, a) < 0) return false;
  return true;
}

RatVec dominant_representative(const RootSystem& rs, RatVec x) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const RatVec& a : rs.simple_roots) {
      if (dot(x, a) < 0) {
        x = reflect(x, a);
        moved = true;
      }
    }
  }
  return x;
}

std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& x) {
  std::set<RatVec, VecLess> seen = {x};
  std::vector<RatVec> queue = {x};
  while (!queue.empty()) {
    RatVec v = queue.back();
    queue.pop_back();
    for (const RatVec& a : rs.simple_roots) {
      RatVec img = reflect(v, a);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

unsigned long weyl_order(Series s, int rank) {
  auto fact = [](int n) {
    unsigned long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (s) {
    case Series::A: return fact(rank + 1);
    case Series::B:
    case Series::C: return (1ul << rank) * fact(rank);
    case Series::D: return (1ul << (rank - 1)) * fact(rank);
    case Series::E:
      if (rank == 6) return 51840ul;
      if (rank == 7) return 2903040ul;
      return 696729600ul;
    case Series::F: return 1152ul;
    case Series::G: return 12ul;
  }
  throw std::logic_error("unreachable");
}

RatVec dual_highest_weight(const RootSystem& rs, const RatVec& dominant) {
  return dominant_representative(rs, vneg(dominant));
}

std::optional<RatVec> simple_root_coords(const RootSystem& rs,
                                         const RatVec& x) {
  std::vector<RatVec> rows(rs.ambient_dim, RatVec(rs.rank));
  for (int d = 0; d < rs.ambient_dim; ++d)
    for (int k = 0; k < rs.rank; ++k) rows[d][k] = rs.simple_roots[k][d];
  return solve_linear(std::move(rows), x);
}

RatVec fundamental_coords(const RootSystem& rs, const RatVec& x) {
  RatVec c;
  c.reserve(rs.rank);
  for (const RatVec& a : rs.simple_roots)
    c.push_back(coroot_pairing(x, a));
  return c;
}

RatVec highest_root(const RootSystem& rs) {
  const RatVec* best = nullptr;
  Rat best_height(-1);
  for (const RatVec& r : rs.positive_roots) {
    RatVec coords = *simple_root_coords(rs, r);
    Rat h = 0;
    for (const Rat& c : coords) h += c;
    if (h > best_height) {
      best_height = h;
      best = &r;
    }
  }
  if (!best) throw std::logic_error("empty root system");
  return *best;
}

}  // namespace temper
