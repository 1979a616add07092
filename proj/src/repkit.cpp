#include "temper/repkit.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace temper {

namespace {

void check_dominant(const RootSystem& rs, const HighestWeight& hw) {
  if (static_cast<int>(hw.size()) != rs.rank)
    throw std::invalid_argument("highest weight has wrong rank");
  for (long c : hw)
    if (c < 0)
      throw std::invalid_argument("highest weight must be dominant");
}

RatVec rho_weight(const RootSystem& rs) {
  RatVec r(rs.ambient_dim, Rat(0));
  for (const RatVec& w : rs.fundamental_weights) r = vsum(r, w);
  return r;
}

}  // namespace

RatVec weight_vector(const RootSystem& rs, const HighestWeight& hw) {
  check_dominant(rs, hw);
  RatVec v(rs.ambient_dim, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    if (hw[i] != 0) v = vsum(v, vscale(Rat(hw[i]), rs.fundamental_weights[i]));
  return v;
}

mpz_class weyl_dimension_big(const RootSystem& rs, const HighestWeight& hw) {
  check_dominant(rs, hw);
  RatVec lam = weight_vector(rs, hw);
  RatVec rho = rho_weight(rs);
  RatVec lam_rho = vsum(lam, rho);
  Rat prod = 1;
  for (const RatVec& a : rs.positive_roots)
    prod *= dot(lam_rho, a) / dot(rho, a);
  if (prod.get_den() != 1)
    throw std::logic_error("Weyl dimension is not an integer");
  return prod.get_num();
}

long weyl_dimension(const RootSystem& rs, const HighestWeight& hw) {
  mpz_class d = weyl_dimension_big(rs, hw);
  if (!d.fits_slong_p())
    throw std::invalid_argument("representation dimension overflows long");
  return d.get_si();
}

HighestWeight dual_weight(const RootSystem& rs, const HighestWeight& hw) {
  RatVec neg = dual_highest_weight(rs, weight_vector(rs, hw));
  RatVec coords = fundamental_coords(rs, neg);
  HighestWeight out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (coords[i].get_den() != 1)
      throw std::logic_error("dual weight is not integral");
    out[i] = coords[i].get_num().get_si();
  }
  return out;
}

namespace {

struct MemoKey {
  char series;
  int rank;
  HighestWeight hw;
  bool operator<(const MemoKey& o) const {
    return std::tie(series, rank, hw) < std::tie(o.series, o.rank, o.hw);
  }
};

// Dominant weights mu <= lambda, i.e. lambda - mu a nonnegative integer
// combination of simple roots, together with that combination's height.
std::vector<std::pair<HighestWeight, long>> dominant_candidates(
    const RootSystem& rs, const HighestWeight& lam) {
  int n = rs.rank;
  // T[i][j] = coefficient of omega_i in alpha_j.
  std::vector<RatVec> t_rows(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t_rows[i][j] = rs.cartan[j][i];
  std::vector<RatVec> t_inv = invert_matrix(t_rows);

  RatVec lam_rat(n);
  for (int i = 0; i < n; ++i) lam_rat[i] = lam[i];
  std::vector<long> cmax(n);
  for (int j = 0; j < n; ++j) {
    Rat bound = dot(t_inv[j], lam_rat);
    mpz_class fl = bound.get_num() / bound.get_den();
    cmax[j] = std::max(0L, fl.get_si());
  }

  std::vector<std::pair<HighestWeight, long>> out;
  std::vector<long> c(n, 0);
  while (true) {
    HighestWeight mu(n);
    bool ok = true;
    long height = 0;
    for (int i = 0; i < n && ok; ++i) {
      long v = lam[i];
      for (int j = 0; j < n; ++j) v -= c[j] * rs.cartan[j][i];
      mu[i] = v;
      ok = v >= 0;
    }
    if (ok) {
      for (long cj : c) height += cj;
      out.emplace_back(std::move(mu), height);
    }
    int k = 0;
    while (k < n && ++c[k] > cmax[k]) c[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

WeightSystem compute_weight_system(const RootSystem& rs,
                                   const HighestWeight& lam) {
  RatVec rho = rho_weight(rs);
  RatVec lam_vec = weight_vector(rs, lam);
  RatVec lam_rho = vsum(lam_vec, rho);
  Rat lam_norm = dot(lam_rho, lam_rho);

  auto candidates = dominant_candidates(rs, lam);
  std::map<RatVec, long, VecLess> mult;
  for (const auto& [mu, height] : candidates) {
    RatVec mu_vec = weight_vector(rs, mu);
    if (height == 0) {
      mult[mu_vec] = 1;
      continue;
    }
    Rat numer = 0;
    for (const RatVec& a : rs.positive_roots) {
      RatVec nu = mu_vec;
      while (true) {
        nu = vsum(nu, a);
        auto it = mult.find(dominant_representative(rs, nu));
        if (it == mult.end()) break;  // weight strings are contiguous
        numer += Rat(2 * it->second) * dot(nu, a);
      }
    }
    RatVec mu_rho = vsum(mu_vec, rho);
    Rat m = numer / (lam_norm - dot(mu_rho, mu_rho));
    if (m.get_den() != 1 || m < 0)
      throw std::logic_error("Freudenthal recursion produced a non-integer");
    if (m > 0) mult[mu_vec] = m.get_num().get_si();
  }

  WeightSystem ws;
  for (const auto& [mu_vec, m] : mult) {
    for (const RatVec& w : weyl_orbit(rs, mu_vec)) {
      ws.weights.emplace_back(w, m);
      ws.dim += m;
    }
  }
  std::sort(ws.weights.begin(), ws.weights.end(),
            [](const auto& a, const auto& b) {
              return vcompare(a.first, b.first) < 0;
            });
  if (ws.dim != weyl_dimension(rs, lam))
    throw std::logic_error("weight system dimension mismatch");
  return ws;
}

}  // namespace

const WeightSystem& weight_system(const RootSystem& rs,
                                  const HighestWeight& hw) {
  check_dominant(rs, hw);
  static std::map<MemoKey, WeightSystem> memo;
  static std::mutex memo_mutex;
  MemoKey key{series_char(rs.series), rs.rank, hw};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  WeightSystem ws = compute_weight_system(rs, hw);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(ws)).first->second;
}

HighestWeight named_rep(const RootSystem& rs, const std::string& name) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("rep \"" + name + "\" on " + rs.name() +
                                ": " + why);
  };
  std::string base = name;
  long arg = -1;
  size_t open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') fail("missing closing parenthesis");
    base = name.substr(0, open);
    std::string inside = name.substr(open + 1, name.size() - open - 2);
    try {
      size_t used = 0;
      arg = std::stol(inside, &used);
      if (used != inside.size()) fail("bad argument");
    } catch (const std::exception&) {
      fail("bad argument");
    }
  }
  HighestWeight hw(rs.rank, 0);
  auto fundamental = [&](long i) {
    if (i < 1 || i > rs.rank) fail("index out of range");
    hw[i - 1] = 1;
  };

  if (base == "std") {
    if (arg != -1) fail("std takes no argument");
    if (rs.series == Series::E || rs.series == Series::F ||
        rs.series == Series::G)
      fail("std is only defined for classical series");
    fundamental(1);
  } else if (base == "adjoint") {
    if (arg != -1) fail("adjoint takes no argument");
    RatVec coords = fundamental_coords(rs, highest_root(rs));
    for (int i = 0; i < rs.rank; ++i) hw[i] = coords[i].get_num().get_si();
  } else if (base == "fund") {
    fundamental(arg);
  } else if (base == "sym") {
    if (rs.series != Series::A) fail("sym(k) is only defined for A");
    if (arg < 1) fail("sym(k) needs k >= 1");
    hw[0] = arg;
  } else if (base == "ext") {
    if (rs.series != Series::A) fail("ext(k) is only defined for A");
    fundamental(arg);
  } else if (base == "ext0") {
    if (rs.series != Series::C) fail("ext0(k) is only defined for C");
    fundamental(arg);
  } else if (base == "sym0") {
    if (rs.series != Series::B && rs.series != Series::D)
      fail("sym0(2) is only defined for B and D");
    if (arg != 2) fail("only sym0(2) is supported");
    hw[0] = 2;
  } else if (base == "spin") {
    if (arg != -1) fail("spin takes no argument");
    if (rs.series != Series::B) fail("spin is only defined for B");
    fundamental(rs.rank);
  } else if (base == "halfspin_plus") {
    if (rs.series != Series::D) fail("halfspin is only defined for D");
    fundamental(rs.rank);
  } else if (base == "halfspin_minus") {
    if (rs.series != Series::D) fail("halfspin is only defined for D");
    fundamental(rs.rank - 1);
  } else {
    fail("unknown representation name");
  }
  return hw;
}

std::string hw_str(const HighestWeight& hw) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < hw.size(); ++i) {
    if (i) os << ",";
    os << hw[i];
  }
  os << "]";
  return os.str();
}

}  // namespace temper
